#pragma once

// F[t]-module structure of (V, a): V is a module via t.v = a v.

#include <cstddef>
#include <vector>

#include "bicomm/matrix.hpp"
#include "bicomm/poly.hpp"

namespace bicomm {

class PolyMat {
 public:
  PolyMat(FieldSpec spec, std::size_t rows, std::size_t cols);

  static PolyMat identity(FieldSpec spec, std::size_t n);
  /// t I - a.
  static PolyMat characteristic(const Mat& a);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b);

  bool is_diagonal() const;

 private:
  FieldSpec spec_;
  std::size_t rows_, cols_;
  std::vector<Poly> e_;
};

/// Determinant by fraction-free (Bareiss) elimination over F[t].
Poly poly_det(const PolyMat& m);

struct SmithForm {
  PolyMat u;  // unimodular
  PolyMat d;  // diagonal, monic or zero entries, d(i,i) | d(i+1,i+1)
  PolyMat w;  // unimodular; u * m * w == d
};

/// Throws NotSquare.
SmithForm smith_normal_form(const PolyMat& m);

/// Monic generator of the annihilator of v under a.
Poly krylov_annihilator(const Mat& a, const Mat& v);

/// lcm of Krylov annihilators of the standard basis. Throws NotSquare.
Poly minimal_polynomial(const Mat& a);
/// det(t I - a). Throws NotSquare.
Poly characteristic_polynomial(const Mat& a);
/// Nonconstant diagonal entries of the Smith form of t I - a. Throws NotSquare.
std::vector<Poly> invariant_factors(const Mat& a);

struct PrimaryComponent {
  Poly prime;
  std::size_t multiplicity;  // exponent of prime in the minimal polynomial
  Mat projection;            // onto ker prime(a)^multiplicity along the other components
  Subspace component_basis;  // ker prime(a)^multiplicity
};

struct ModuleStructure {
  Mat a;
  Poly min_poly;
  Poly char_poly;
  std::vector<Poly> invariant_factors;
  std::vector<PrimaryComponent> primary_components;  // sorted by prime
};

/// Throws NotSquare, or DegreeTooLarge when the minimal polynomial cannot be factored.
ModuleStructure primary_decomposition(const Mat& a);

/// Sum over invariant factors f of deg(prime^v(f)), v the prime-adic valuation:
/// the dimension of the prime-primary component.
std::size_t primary_dimension(const std::vector<Poly>& invariant_factors, const Poly& prime);

}  // namespace bicomm
