#pragma once

// Dense exact matrices and canonical subspaces.
//
// Operator spaces are vectorized by stacking columns: an n x n matrix x maps
// to the n^2 column vec(x) with vec(x)[i + j*n] = x(i, j). Under this
// convention vec(a x b) = (b^T (x) a) vec(x).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bicomm/field.hpp"
#include "bicomm/poly.hpp"

namespace bicomm {

class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec spec, std::size_t rows, std::size_t cols);
  Mat(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Mat zero(FieldSpec spec, std::size_t rows, std::size_t cols) { return Mat(spec, rows, cols); }
  static Mat identity(FieldSpec spec, std::size_t n);
  static Mat diagonal(const std::vector<FieldElement>& d);
  /// Row-major integer entries.
  static Mat from_ints(FieldSpec spec, std::size_t rows, std::size_t cols,
                       const std::vector<long long>& entries);
  /// Companion matrix of a monic polynomial (ones on the subdiagonal).
  static Mat companion(const Poly& monic);
  /// Upper-triangular nilpotent Jordan block with the given eigenvalue.
  static Mat jordan_block(const FieldElement& eigenvalue, std::size_t size);
  static Mat block_diagonal(const std::vector<Mat>& blocks);
  /// Column vector.
  static Mat column(const std::vector<FieldElement>& v);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;
  std::span<const FieldElement> entries() const noexcept { return a_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const;
  Mat col(std::size_t j) const;
  Mat block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const Mat& m);
  Mat pow(std::size_t e) const;

  Mat operator-() const;
  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const FieldElement& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(Mat a, const FieldElement& s) { return a *= s; }
  friend Mat operator*(const FieldElement& s, Mat a) { return a *= s; }
  friend bool operator==(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> a_;
};

/// Horizontal concatenation; equal row counts.
Mat hconcat(const std::vector<Mat>& parts);
/// Vertical concatenation; equal column counts.
Mat vconcat(const std::vector<Mat>& parts);

/// Column-stacking vectorization of an arbitrary matrix.
Mat vec(const Mat& x);
/// Inverse of vec for a rows x cols target.
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);
/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// Matrix of x -> c x - x e on m x k matrices (c is m x m, e is k x k):
/// I_k (x) c - e^T (x) I_m.
Mat sylvester_operator_matrix(const Mat& c, const Mat& e);

struct Rref {
  Mat rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

Rref mat_rref(const Mat& m);
std::size_t mat_rank(const Mat& m);

/// A subspace of F^ambient_dim. Basis columns are in column-reduced echelon
/// form, so equal subspaces have identical bases.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(FieldSpec spec, std::size_t ambient_dim);
  /// Span of the columns of `generators`.
  static Subspace span(const Mat& generators);
  static Subspace full(FieldSpec spec, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Mat& basis() const noexcept { return basis_; }
  bool contains_vector(const Mat& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
};

Subspace mat_nullspace(const Mat& m);
Subspace column_space(const Mat& m);

/// One solution of m x = rhs with free variables zero. Throws Inconsistent.
Mat mat_solve(const Mat& m, const Mat& rhs);
/// Throws NotSquare, or DivisionByZero for a singular matrix.
Mat mat_inverse(const Mat& m);
bool is_invertible(const Mat& m);

/// Throws AmbientMismatch.
bool subspace_contains(const Subspace& outer, const Subspace& inner);

/// Horner evaluation f(a). Throws NotSquare or FieldMismatch.
Mat poly_eval_matrix(const Poly& f, const Mat& a);

}  // namespace bicomm
