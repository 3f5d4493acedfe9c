#include "bicomm/matrix.hpp"

#include <sstream>

namespace bicomm {

Mat::Mat(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(spec)) {}

Mat::Mat(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : spec_(spec), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw Error(Errc::SizeMismatch, "entry count does not match shape");
  for (const auto& e : a_) {
    if (!(e.spec() == spec_)) throw Error(Errc::FieldMismatch, "matrix entry field differs");
  }
}

Mat Mat::identity(FieldSpec spec, std::size_t n) {
  Mat m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(spec);
  return m;
}

Mat Mat::diagonal(const std::vector<FieldElement>& d) {
  FieldSpec spec = d.empty() ? FieldSpec::rationals() : d.front().spec();
  Mat m(spec, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_ints(FieldSpec spec, std::size_t rows, std::size_t cols,
                   const std::vector<long long>& entries) {
  std::vector<FieldElement> e;
  e.reserve(entries.size());
  for (long long v : entries) e.push_back(FieldElement::from_int(v, spec));
  return Mat(spec, rows, cols, std::move(e));
}

Mat Mat::companion(const Poly& monic) {
  if (!monic.is_monic()) throw Error(Errc::ZeroInput, "companion matrix needs a monic polynomial");
  const std::size_t n = *monic.degree();
  Mat m(monic.spec(), n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = FieldElement::one(monic.spec());
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -monic.coeff(i);
  return m;
}

Mat Mat::jordan_block(const FieldElement& eigenvalue, std::size_t size) {
  Mat m(eigenvalue.spec(), size, size);
  for (std::size_t i = 0; i < size; ++i) {
    m(i, i) = eigenvalue;
    if (i + 1 < size) m(i, i + 1) = FieldElement::one(eigenvalue.spec());
  }
  return m;
}

Mat Mat::block_diagonal(const std::vector<Mat>& blocks) {
  FieldSpec spec = blocks.empty() ? FieldSpec::rationals() : blocks.front().spec();
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(spec, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Mat Mat::column(const std::vector<FieldElement>& v) {
  FieldSpec spec = v.empty() ? FieldSpec::rationals() : v.front().spec();
  return Mat(spec, v.size(), 1, v);
}

bool Mat::is_zero() const noexcept {
  for (const auto& e : a_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(Errc::SizeMismatch, "block out of range");
  Mat b(spec_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  }
  return b;
}

void Mat::set_block(std::size_t row0, std::size_t col0, const Mat& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) throw Error(Errc::SizeMismatch, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row0 + i, col0 + j) = m(i, j);
  }
}

Mat Mat::pow(std::size_t e) const {
  if (!is_square()) throw Error(Errc::NotSquare, "power of a non-square matrix");
  Mat result = identity(spec_, rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.a_) e = -e;
  return r;
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::SizeMismatch, "matrix sum shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::SizeMismatch, "matrix difference shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Mat& Mat::operator*=(const FieldElement& s) {
  for (auto& e : a_) e *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::SizeMismatch, "matrix product shapes differ");
  if (!(a.spec_ == b.spec_)) throw Error(Errc::FieldMismatch, "matrix product fields differ");
  Mat r(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat hconcat(const std::vector<Mat>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) throw Error(Errc::SizeMismatch, "hconcat row counts differ");
    cols += p.cols();
  }
  Mat m(parts.front().spec(), parts.front().rows(), cols);
  cols = 0;
  for (const auto& p : parts) {
    m.set_block(0, cols, p);
    cols += p.cols();
  }
  return m;
}

Mat vconcat(const std::vector<Mat>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts.front().cols()) throw Error(Errc::SizeMismatch, "vconcat column counts differ");
    rows += p.rows();
  }
  Mat m(parts.front().spec(), rows, parts.front().cols());
  rows = 0;
  for (const auto& p : parts) {
    m.set_block(rows, 0, p);
    rows += p.rows();
  }
  return m;
}

Mat vec(const Mat& x) {
  Mat v(x.spec(), x.rows() * x.cols(), 1);
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) v(i + j * x.rows(), 0) = x(i, j);
  }
  return v;
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) throw Error(Errc::SizeMismatch, "unvec shape");
  Mat x(v.spec(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) x(i, j) = v(i + j * rows, 0);
  }
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.spec(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const FieldElement& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = x * b(r, c);
      }
    }
  }
  return k;
}

Mat sylvester_operator_matrix(const Mat& c, const Mat& e) {
  if (!c.is_square() || !e.is_square()) throw Error(Errc::NotSquare, "Sylvester operator needs square c and e");
  return kron(Mat::identity(c.spec(), e.rows()), c) - kron(e.transpose(), Mat::identity(c.spec(), c.rows()));
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& v : row) {
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Gauss-Jordan over Z on primitive integer rows; only the final pivot
// normalization produces fractions.
Rref rref_rational(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntRow> a(rows, IntRow(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).rational();
      if (q.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).rational();
      if (sgn(q) == 0) continue;
      a[i][j] = q.get_num() * (den / q.get_den());
    }
    make_primitive(a[i]);
  }
  Rref out{Mat(m.spec(), rows, cols), 0, {}};
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      if (piv == rows || abs(a[i][col]) < abs(a[piv][col])) piv = i;
    }
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const mpz_class pv = a[row][col];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpz_class g, x = pv, y = a[i][col];
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      x /= g;
      y /= g;
      for (std::size_t j = 0; j < cols; ++j) {
        if (a[row][j] == 0) {
          if (a[i][j] != 0) a[i][j] *= x;
          continue;
        }
        a[i][j] = a[i][j] * x - a[row][j] * y;
      }
      make_primitive(a[i]);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  for (std::size_t k = 0; k < row; ++k) {
    const mpz_class& pv = a[k][out.pivot_cols[k]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[k][j] != 0) out.rref(k, j) = FieldElement::canonicalize(a[k][j], pv, m.spec());
    }
  }
  return out;
}

}  // namespace

Rref mat_rref(const Mat& m) {
  if (m.spec().is_rationals()) return rref_rational(m);
  Rref out{m, 0, {}};
  Mat& r = out.rref;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && r(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(r(piv, j), r(row, j));
    }
    FieldElement inv = r(row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      FieldElement f = r(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t mat_rank(const Mat& m) { return mat_rref(m).rank; }

Subspace::Subspace(FieldSpec spec, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(spec, ambient_dim, 0) {}

Subspace Subspace::span(const Mat& generators) {
  Subspace s(generators.spec(), generators.rows());
  Rref r = mat_rref(generators.transpose());
  s.basis_ = r.rref.block(0, 0, r.rank, generators.rows()).transpose();
  return s;
}

Subspace Subspace::full(FieldSpec spec, std::size_t ambient_dim) {
  return span(Mat::identity(spec, ambient_dim));
}

bool Subspace::contains_vector(const Mat& v) const {
  if (v.rows() != ambient_) throw Error(Errc::AmbientMismatch, "vector length differs from ambient dimension");
  return mat_rank(hconcat({basis_, v})) == dim();
}

Subspace mat_nullspace(const Mat& m) {
  Rref r = mat_rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Mat> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Mat v(m.spec(), n, 1);
    v(f, 0) = FieldElement::one(m.spec());
    for (std::size_t k = 0; k < r.rank; ++k) v(r.pivot_cols[k], 0) = -r.rref(k, f);
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return Subspace(m.spec(), n);
  return Subspace::span(hconcat(gens));
}

Subspace column_space(const Mat& m) { return Subspace::span(m); }

Mat mat_solve(const Mat& m, const Mat& rhs) {
  if (rhs.rows() != m.rows()) throw Error(Errc::SizeMismatch, "rhs rows differ from matrix rows");
  Rref r = mat_rref(hconcat({m, rhs}));
  const std::size_t n = m.cols();
  for (auto c : r.pivot_cols) {
    if (c >= n) throw Error(Errc::Inconsistent, "right-hand side is not in the column space");
  }
  Mat x(m.spec(), n, rhs.cols());
  for (std::size_t k = 0; k < r.rank; ++k) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(r.pivot_cols[k], j) = r.rref(k, n + j);
  }
  return x;
}

Mat mat_inverse(const Mat& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Rref r = mat_rref(hconcat({m, Mat::identity(m.spec(), n)}));
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) {
    throw Error(Errc::DivisionByZero, "matrix is singular");
  }
  return r.rref.block(0, n, n, n);
}

bool is_invertible(const Mat& m) { return m.is_square() && mat_rank(m) == m.rows(); }

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
  }
  if (inner.dim() == 0) return true;
  return mat_rank(hconcat({outer.basis(), inner.basis()})) == outer.dim();
}

Mat poly_eval_matrix(const Poly& f, const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "polynomial evaluation needs a square matrix");
  if (!(f.spec() == a.spec())) throw Error(Errc::FieldMismatch, "polynomial and matrix fields differ");
  const std::size_t n = a.rows();
  Mat acc(a.spec(), n, n);
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

}  // namespace bicomm
