#include "bicomm/commalg.hpp"

#include "bicomm/factor.hpp"
#include "bicomm/modstruct.hpp"

namespace bicomm {

AlgebraBasis AlgebraBasis::span(FieldSpec spec, std::size_t n, const std::vector<Mat>& mats) {
  AlgebraBasis b(spec, n);
  if (mats.empty()) return b;
  std::vector<Mat> cols;
  cols.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw Error(Errc::SizeMismatch, "algebra element has the wrong size");
    cols.push_back(vec(m));
  }
  b.space_ = Subspace::span(hconcat(cols));
  return b;
}

AlgebraBasis AlgebraBasis::from_subspace(std::size_t n, const Subspace& space) {
  if (space.ambient_dim() != n * n) throw Error(Errc::AmbientMismatch, "subspace is not an operator space");
  AlgebraBasis b(space.basis().spec(), n);
  b.space_ = space;
  return b;
}

std::vector<Mat> AlgebraBasis::matrices() const {
  std::vector<Mat> out;
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(unvec(space_.basis().col(j), n_, n_));
  return out;
}

bool AlgebraBasis::contains(const Mat& x) const { return space_.contains_vector(vec(x)); }

AlgebraBasis commutant_basis(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "commutant of a non-square matrix");
  return AlgebraBasis::from_subspace(a.rows(), mat_nullspace(sylvester_operator_matrix(a, a)));
}

AlgebraBasis bicommutant_basis(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "bicommutant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Mat> equations;
  for (const auto& c : commutant_basis(a).matrices()) equations.push_back(sylvester_operator_matrix(c, c));
  if (equations.empty()) return AlgebraBasis::from_subspace(n, Subspace::full(a.spec(), n * n));
  return AlgebraBasis::from_subspace(n, mat_nullspace(vconcat(equations)));
}

AlgebraBasis polynomial_algebra_basis(const Mat& a) {
  const std::size_t d = *minimal_polynomial(a).degree();
  std::vector<Mat> powers;
  Mat p = Mat::identity(a.spec(), a.rows());
  for (std::size_t k = 0; k < d; ++k) {
    powers.push_back(p);
    p = p * a;
  }
  return AlgebraBasis::span(a.spec(), a.rows(), powers);
}

AlgebraBasis algebra_center(const AlgebraBasis& basis) {
  const std::size_t n = basis.n();
  const FieldSpec spec = basis.subspace().basis().spec();
  auto mats = basis.matrices();
  if (mats.empty()) return basis;
  std::vector<Mat> blocks;
  for (const auto& bj : mats) {
    std::vector<Mat> cols;
    for (const auto& bi : mats) cols.push_back(vec(bi * bj - bj * bi));
    blocks.push_back(hconcat(cols));
  }
  Subspace coeffs = mat_nullspace(vconcat(blocks));
  Mat z = basis.subspace().basis() * coeffs.basis();
  if (z.cols() == 0) return AlgebraBasis(spec, n);
  return AlgebraBasis::from_subspace(n, Subspace::span(z));
}

Poly express_as_polynomial(const Mat& b, const Mat& a) {
  if (!a.is_square() || !b.is_square()) throw Error(Errc::NotSquare, "express_as_polynomial needs square matrices");
  if (a.rows() != b.rows()) throw Error(Errc::SizeMismatch, "a and b differ in size");
  const std::size_t d = *minimal_polynomial(a).degree();
  std::vector<Mat> cols;
  Mat p = Mat::identity(a.spec(), a.rows());
  for (std::size_t k = 0; k < d; ++k) {
    cols.push_back(vec(p));
    p = p * a;
  }
  if (cols.empty()) return Poly(a.spec());
  try {
    Mat coeffs = mat_solve(hconcat(cols), vec(b));
    std::vector<FieldElement> c;
    for (std::size_t k = 0; k < d; ++k) c.push_back(coeffs(k, 0));
    return Poly(a.spec(), std::move(c));
  } catch (const Error& e) {
    if (e.code() != Errc::Inconsistent) throw;
    throw Error(Errc::NotInPolynomialAlgebra, "b is not a polynomial in a");
  }
}

bool transpose_bicommutant_check(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "transpose check of a non-square matrix");
  std::vector<Mat> transposed;
  for (const auto& x : bicommutant_basis(a).matrices()) transposed.push_back(x.transpose());
  return AlgebraBasis::span(a.spec(), a.rows(), transposed) == bicommutant_basis(a.transpose());
}

Subspace primary_layer(const Mat& a, const Poly& p, std::size_t n) {
  return mat_nullspace(poly_eval_matrix(p.pow(n), a));
}

Mat restrict_to(const Mat& a, const Subspace& invariant) {
  const Mat& k = invariant.basis();
  if (k.cols() == 0) return Mat(a.spec(), 0, 0);
  return mat_solve(k, a * k);
}

Mat extend_endomorphism(const Mat& a, const Poly& p, std::size_t n, const Mat& b_n) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "extend_endomorphism needs a square operator");
  if (!p.is_monic() || !is_irreducible(p)) throw Error(Errc::NotIrreducible, p.to_string() + " is not a monic prime");
  const Subspace lower = primary_layer(a, p, n);
  const Subspace upper = primary_layer(a, p, n + 1);
  const std::size_t dn = lower.dim();
  const std::size_t m = upper.dim();
  if (b_n.rows() != dn || b_n.cols() != dn || !(b_n.spec() == a.spec())) {
    throw Error(Errc::NotEndomorphism, "b_n must be " + std::to_string(dn) + " x " + std::to_string(dn));
  }
  const Mat a_lower = restrict_to(a, lower);
  if (!(a_lower * b_n == b_n * a_lower)) throw Error(Errc::NotEndomorphism, "b_n does not commute with a on U_n");
  const Mat a_upper = restrict_to(a, upper);
  if (m == 0) return Mat(a.spec(), 0, 0);

  // Coordinates of the U_n basis inside U_{n+1}.
  const Mat inclusion = dn == 0 ? Mat(a.spec(), m, 0) : mat_solve(upper.basis(), lower.basis());
  // vec(A B - B A) = 0 and vec(B J) = (J^T (x) I) vec(B) = vec(J b_n).
  Mat system = vconcat({sylvester_operator_matrix(a_upper, a_upper),
                        kron(inclusion.transpose(), Mat::identity(a.spec(), m))});
  Mat rhs = vconcat({Mat(a.spec(), m * m, 1), vec(inclusion * b_n)});
  try {
    return unvec(mat_solve(system, rhs), m, m);
  } catch (const Error& e) {
    if (e.code() != Errc::Inconsistent) throw;
    throw Error(Errc::Infeasible, "no endomorphism of U_" + std::to_string(n + 1) + " restricts to b_n");
  }
}

}  // namespace bicomm
