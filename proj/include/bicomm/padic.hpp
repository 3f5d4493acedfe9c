#pragma once

// Truncations of the completion of F[t] at a prime p: elements
// f_0 + f_1 p + ... + f_{N-1} p^{N-1} mod p^N with deg f_j < deg p.

#include <cstddef>
#include <vector>

#include "bicomm/matrix.hpp"
#include "bicomm/poly.hpp"

namespace bicomm {

class TruncatedPAdic {
 public:
  /// Throws NotIrreducible if p is not a monic prime, SizeMismatch if there
  /// are no digits or a digit has degree >= deg p.
  TruncatedPAdic(Poly p, std::vector<Poly> digits);

  /// Digit expansion of g mod p^level.
  static TruncatedPAdic from_poly(const Poly& g, const Poly& p, std::size_t level);

  const Poly& prime() const noexcept { return p_; }
  std::size_t level() const noexcept { return digits_.size(); }
  const std::vector<Poly>& digits() const noexcept { return digits_; }

  /// F_n = sum_{j<n} f_j p^j, for n <= level(). Throws LevelTooHigh.
  Poly truncating_polynomial(std::size_t n) const;
  Poly to_poly() const { return truncating_polynomial(level()); }

  friend bool operator==(const TruncatedPAdic&, const TruncatedPAdic&) = default;

 private:
  struct Unchecked {};
  TruncatedPAdic(Unchecked, Poly p, std::vector<Poly> digits) : p_(std::move(p)), digits_(std::move(digits)) {}
  static TruncatedPAdic expand(const Poly& g, const Poly& p, std::size_t level);

  Poly p_;
  std::vector<Poly> digits_;
};

enum class PAdicOp { Add, Mul };

/// Result at level min(N_x, N_y). Throws PrimeMismatch.
TruncatedPAdic padic_arith(const TruncatedPAdic& x, const TruncatedPAdic& y, PAdicOp op);
inline TruncatedPAdic operator+(const TruncatedPAdic& x, const TruncatedPAdic& y) {
  return padic_arith(x, y, PAdicOp::Add);
}
inline TruncatedPAdic operator*(const TruncatedPAdic& x, const TruncatedPAdic& y) {
  return padic_arith(x, y, PAdicOp::Mul);
}

/// u/v in R/(p^level). Throws NotInRp when p divides v.
TruncatedPAdic embed_rational(const Poly& u, const Poly& v, const Poly& p, std::size_t level);

/// First n digits. Throws LevelTooHigh.
TruncatedPAdic project(const TruncatedPAdic& x, std::size_t n);

/// Exponent m with minimal_polynomial(a) = p^m. Throws NotPrimary.
std::size_t primary_order(const Mat& a, const Poly& p);

/// F_m(a) xi where minpoly(a) = p^m. Throws NotPrimary, TruncationTooShort.
Mat act_on_module(const TruncatedPAdic& f, const Mat& a, const Mat& xi);

}  // namespace bicomm
