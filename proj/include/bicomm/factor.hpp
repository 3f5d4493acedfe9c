#pragma once

#include <cstddef>
#include <vector>

#include "bicomm/poly.hpp"

namespace bicomm {

/// Highest degree poly_factor accepts over Q.
inline constexpr std::size_t kMaxRationalFactorDegree = 24;

struct FactorPower {
  Poly prime;  // monic irreducible
  std::size_t multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
  FieldElement unit;
  std::vector<FactorPower> factors;  // sorted by poly_less

  /// unit * prod prime^multiplicity.
  Poly expand() const;
};

/// Monic, pairwise coprime squarefree parts with multiplicities, sorted by
/// poly_less on the parts. Throws ZeroInput.
std::vector<FactorPower> poly_squarefree(const Poly& f);

/// Throws ZeroInput, and DegreeTooLarge over Q above kMaxRationalFactorDegree.
Factorization poly_factor(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace bicomm
