#include "bicomm/deriv.hpp"

#include "bicomm/commalg.hpp"
#include "bicomm/modstruct.hpp"

namespace bicomm {

Mat DerivationOp::apply(const Mat& x) const { return unvec(matrix * vec(x), a.rows(), a.cols()); }

Mat derive(const Mat& a, const Mat& x) { return a * x - x * a; }

DerivationOp derivation_matrix(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "derivation of a non-square matrix");
  return {a, sylvester_operator_matrix(a, a)};
}

RationalFn::RationalFn(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  Poly g = poly_gcd(num, den);
  if (num.is_zero()) g = den;
  num_ = num / g;
  den_ = den / g;
  FieldElement lc = den_.leading().inverse();
  num_ *= lc;
  den_ *= lc;
}

Mat RationalFn::eval(const Mat& a) const {
  Mat q = poly_eval_matrix(den_, a);
  if (!is_invertible(q)) throw Error(Errc::DenominatorSingular, "den(a) is singular");
  return mat_inverse(q) * poly_eval_matrix(num_, a);
}

Mat f_dot_mixed(const Poly& f, const Mat& c, const Mat& e, const Mat& y) {
  if (!c.is_square() || !e.is_square()) throw Error(Errc::NotSquare, "c and e must be square");
  if (y.rows() != c.rows() || y.cols() != e.rows()) throw Error(Errc::SizeMismatch, "y must be rows(c) x rows(e)");
  // S_1 = y, S_{j+1} = c S_j + y e^j; result = sum_j alpha_j S_j.
  Mat result(c.spec(), y.rows(), y.cols());
  Mat s = y;
  Mat e_pow = e;
  const auto& coeffs = f.coeffs();
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) result += coeffs[j] * s;
    if (j + 1 < coeffs.size()) {
      s = c * s + y * e_pow;
      e_pow = e_pow * e;
    }
  }
  return result;
}

Mat p_dot(const Poly& p, const Mat& a, const Mat& x) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "p_dot needs a square operator");
  return f_dot_mixed(p, a, a, x);
}

Mat r_dot(const RationalFn& r, const Mat& a, const Mat& x) {
  Mat q = poly_eval_matrix(r.den(), a);
  if (!is_invertible(q)) throw Error(Errc::DenominatorSingular, "den(a) is singular");
  Mat q_inv = mat_inverse(q);
  Mat r_a = q_inv * poly_eval_matrix(r.num(), a);
  return q_inv * (p_dot(r.num(), a, x) - p_dot(r.den(), a, x) * r_a);
}

Mat f_dot_series(const TruncatedPAdic& f, const Mat& a, const Mat& x) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "f_dot_series needs a square operator");
  if (x.rows() != a.rows() || x.cols() != a.cols()) throw Error(Errc::SizeMismatch, "x must match a");
  const Poly& p = f.prime();
  const std::size_t m = primary_order(a, p);
  const Mat p_a = poly_eval_matrix(p, a);
  Mat probe = p_dot(p, a, x);
  std::size_t k = 0;
  while (!probe.is_zero()) {
    probe = p_a * probe;
    ++k;
  }
  if (f.level() < m + k) {
    throw Error(Errc::TruncationTooShort,
                "need " + std::to_string(m + k) + " digits, have " + std::to_string(f.level()));
  }
  return p_dot(f.truncating_polynomial(m + k), a, x);
}

Mat sylvester_solve_direct(const Mat& c, const Mat& e, const Mat& y) {
  if (!c.is_square() || !e.is_square()) throw Error(Errc::NotSquare, "c and e must be square");
  if (y.rows() != c.rows() || y.cols() != e.rows()) throw Error(Errc::SizeMismatch, "y must be rows(c) x rows(e)");
  Poly v = minimal_polynomial(e);
  Mat v_c = poly_eval_matrix(v, c);
  if (!is_invertible(v_c)) throw NotCoprimeError(poly_gcd(v, minimal_polynomial(c)));
  return mat_inverse(v_c) * f_dot_mixed(v, c, e, y);
}

SylvesterSolution sylvester_solve_detailed(const Mat& c, const Mat& e, const Mat& y) {
  if (!c.is_square() || !e.is_square()) throw Error(Errc::NotSquare, "c and e must be square");
  if (y.rows() != c.rows() || y.cols() != e.rows()) throw Error(Errc::SizeMismatch, "y must be rows(c) x rows(e)");
  Poly min_c = minimal_polynomial(c);
  Poly min_e = minimal_polynomial(e);
  Poly g = poly_gcd(min_c, min_e);
  if (!g.is_constant()) throw NotCoprimeError(g);

  SylvesterSolution out{Mat(), Poly(c.spec()), false, false};
  if (min_c.degree() < min_e.degree()) {
    out.x = sylvester_solve_direct(e.transpose(), c.transpose(), -y.transpose()).transpose();
    out.v = min_c;
    out.transposed = true;
  } else {
    out.x = sylvester_solve_direct(c, e, y);
    out.v = min_e;
  }
  out.unique = mat_nullspace(sylvester_operator_matrix(c, e)).dim() == 0;
  return out;
}

Mat sylvester_solve(const Mat& c, const Mat& e, const Mat& y) { return sylvester_solve_detailed(c, e, y).x; }

RangeKernelReport range_kernel_report(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square()) throw Error(Errc::NotSquare, "a and b must be square");
  if (a.rows() != b.rows()) throw Error(Errc::SizeMismatch, "a and b differ in size");
  if (!(a.spec() == b.spec())) throw Error(Errc::FieldMismatch, "a and b differ in field");
  RangeKernelReport r{};
  try {
    r.witness = express_as_polynomial(b, a);
    r.b_in_bicommutant = true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotInPolynomialAlgebra) throw;
    r.b_in_bicommutant = false;
  }
  const Mat da = derivation_matrix(a).matrix;
  const Mat db = derivation_matrix(b).matrix;
  r.kernel_included = subspace_contains(mat_nullspace(db), mat_nullspace(da));
  r.range_included = subspace_contains(column_space(da), column_space(db));
  r.transpose_range_included = subspace_contains(column_space(derivation_matrix(a.transpose()).matrix),
                                                 column_space(derivation_matrix(b.transpose()).matrix));
  return r;
}

Mat preimage_witness(const Mat& a, const Mat& b, const Mat& z) {
  if (z.rows() != a.rows() || z.cols() != a.cols()) throw Error(Errc::SizeMismatch, "z must match a");
  Poly f(a.spec());
  try {
    f = express_as_polynomial(b, a);
  } catch (const Error& e) {
    if (e.code() != Errc::NotInPolynomialAlgebra) throw;
    throw Error(Errc::NotInBicommutant, "b is not in the bicommutant of a");
  }
  return p_dot(f, a, z);
}

}  // namespace bicomm
