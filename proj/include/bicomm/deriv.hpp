#pragma once

// Inner derivations d_a(x) = a x - x a and the derivative maps of a -> f(a).

#include <optional>

#include "bicomm/matrix.hpp"
#include "bicomm/padic.hpp"
#include "bicomm/poly.hpp"

namespace bicomm {

struct DerivationOp {
  Mat a;
  Mat matrix;  // n^2 x n^2, acting on vec(x)

  Mat apply(const Mat& x) const;
};

/// a x - x a.
Mat derive(const Mat& a, const Mat& x);

/// Throws NotSquare.
DerivationOp derivation_matrix(const Mat& a);

/// num/den in lowest terms with den monic.
class RationalFn {
 public:
  /// Throws DivisionByZero for a zero denominator.
  RationalFn(const Poly& num, const Poly& den);
  explicit RationalFn(const Poly& p) : RationalFn(p, Poly::one(p.spec())) {}

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  /// den(a)^{-1} num(a). Throws DenominatorSingular.
  Mat eval(const Mat& a) const;

  friend RationalFn operator*(const RationalFn& r, const RationalFn& s) {
    return RationalFn(r.num_ * s.num_, r.den_ * s.den_);
  }
  friend bool operator==(const RationalFn&, const RationalFn&) = default;

 private:
  Poly num_;
  Poly den_;
};

/// sum_j alpha_j sum_{i<j} a^{j-i-1} x a^i. Throws NotSquare, SizeMismatch.
Mat p_dot(const Poly& p, const Mat& a, const Mat& x);

/// q(a)^{-1} p_dot(p) - q(a)^{-1} q_dot r(a) for r = p/q. Throws DenominatorSingular.
Mat r_dot(const RationalFn& r, const Mat& a, const Mat& x);

/// (F_n)_dot(a, x) for a p-primary, with n = m + k where p^m is the minimal
/// polynomial of a and k is least with p(a)^k p_dot(p, a, x) = 0.
/// Throws NotPrimary, TruncationTooShort.
Mat f_dot_series(const TruncatedPAdic& f, const Mat& a, const Mat& x);

/// sum_j alpha_j sum_{i<j} c^{j-i-1} y e^i for c m x m, e k x k, y m x k.
/// Throws NotSquare, SizeMismatch.
Mat f_dot_mixed(const Poly& f, const Mat& c, const Mat& e, const Mat& y);

class NotCoprimeError : public Error {
 public:
  explicit NotCoprimeError(Poly gcd)
      : Error(Errc::NotCoprime, "minimal polynomials share the factor " + gcd.to_string()), gcd_(std::move(gcd)) {}
  const Poly& gcd() const noexcept { return gcd_; }

 private:
  Poly gcd_;
};

struct SylvesterSolution {
  Mat x;
  Poly v;            // annihilating polynomial used, v(e) = 0 or v(c) = 0 when transposed
  bool transposed;   // solved through e^T x^T - x^T c^T = -y^T
  bool unique;       // Sylvester operator has trivial nullspace
};

/// Solves c x - x e = y. Throws NotSquare, SizeMismatch, NotCoprimeError.
SylvesterSolution sylvester_solve_detailed(const Mat& c, const Mat& e, const Mat& y);
Mat sylvester_solve(const Mat& c, const Mat& e, const Mat& y);
/// Always uses v = minpoly(e), x = v(c)^{-1} v_dot_{c,e}(y).
Mat sylvester_solve_direct(const Mat& c, const Mat& e, const Mat& y);

struct RangeKernelReport {
  bool b_in_bicommutant;
  bool kernel_included;           // ker d_a within ker d_b
  bool range_included;            // d_b(L(V)) within d_a(L(V))
  bool transpose_range_included;  // d_{b^T}(L(V)) within d_{a^T}(L(V))
  std::optional<Poly> witness;    // f with b = f(a) when b_in_bicommutant

  bool all_agree() const {
    return b_in_bicommutant == kernel_included && kernel_included == range_included &&
           range_included == transpose_range_included;
  }
};

/// Throws NotSquare, SizeMismatch.
RangeKernelReport range_kernel_report(const Mat& a, const Mat& b);

/// x = f_dot_a(z) where b = f(a); d_a(x) = d_b(z). Throws NotInBicommutant.
Mat preimage_witness(const Mat& a, const Mat& b, const Mat& z);

}  // namespace bicomm
