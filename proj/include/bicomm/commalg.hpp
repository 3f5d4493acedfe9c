#pragma once

// Commutants, bicommutants and centers of matrix algebras.

#include <cstddef>
#include <vector>

#include "bicomm/matrix.hpp"
#include "bicomm/poly.hpp"

namespace bicomm {

/// A linearly independent family of n x n matrices, canonical as a subspace of
/// the n^2-dimensional operator space (see vec()).
class AlgebraBasis {
 public:
  AlgebraBasis(FieldSpec spec, std::size_t n) : n_(n), space_(spec, n * n) {}
  /// Canonical basis of span(mats); all mats are n x n.
  static AlgebraBasis span(FieldSpec spec, std::size_t n, const std::vector<Mat>& mats);
  static AlgebraBasis from_subspace(std::size_t n, const Subspace& space);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const Subspace& subspace() const noexcept { return space_; }
  std::vector<Mat> matrices() const;
  bool contains(const Mat& x) const;

  friend bool operator==(const AlgebraBasis& a, const AlgebraBasis& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }

 private:
  std::size_t n_;
  Subspace space_;
};

/// {x : a x = x a}. Throws NotSquare.
AlgebraBasis commutant_basis(const Mat& a);

/// Commutant of the commutant, from its defining equations. Throws NotSquare.
AlgebraBasis bicommutant_basis(const Mat& a);

/// span{I, a, ..., a^(d-1)} with d = deg minimal_polynomial(a).
AlgebraBasis polynomial_algebra_basis(const Mat& a);

/// {z in span(basis) : z b = b z for every b in basis}.
AlgebraBasis algebra_center(const AlgebraBasis& basis);

/// f with deg f < deg minpoly(a) and f(a) = b. Throws NotSquare, SizeMismatch,
/// NotInPolynomialAlgebra.
Poly express_as_polynomial(const Mat& b, const Mat& a);

/// Whether {x^T : x in (a)''} equals (a^T)''.
bool transpose_bicommutant_check(const Mat& a);

/// Canonical basis of U_n = ker p(a)^n, as columns.
Subspace primary_layer(const Mat& a, const Poly& p, std::size_t n);

/// Extends b_n, an endomorphism of U_n = ker p(a)^n commuting with a (given
/// in the coordinates of primary_layer(a, p, n)), to an endomorphism of
/// U_{n+1} commuting with a whose restriction to U_n is b_n. The result is in
/// the coordinates of primary_layer(a, p, n + 1); free variables are zero.
///
/// Throws NotSquare, NotEndomorphism when b_n has the wrong shape or does not
/// commute with a on U_n, and Infeasible when no extension exists.
Mat extend_endomorphism(const Mat& a, const Poly& p, std::size_t n, const Mat& b_n);

/// The matrix of a restricted to an a-invariant subspace, in the subspace's basis.
Mat restrict_to(const Mat& a, const Subspace& invariant);

}  // namespace bicomm
