#include "bicomm/modstruct.hpp"

#include <algorithm>

#include "bicomm/factor.hpp"

namespace bicomm {

PolyMat::PolyMat(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), e_(rows * cols, Poly(spec)) {}

PolyMat PolyMat::identity(FieldSpec spec, std::size_t n) {
  PolyMat m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(spec);
  return m;
}

PolyMat PolyMat::characteristic(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "characteristic matrix of a non-square matrix");
  PolyMat m(a.spec(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(i, j) = Poly::constant(-a(i, j));
      if (i == j) m(i, j) += Poly::t(a.spec());
    }
  }
  return m;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::SizeMismatch, "polynomial matrix product shapes differ");
  PolyMat r(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
  return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool PolyMat::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Poly poly_det(const PolyMat& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMat a = m;
  Poly prev = Poly::one(m.spec());
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return Poly(m.spec());
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Poly(m.spec());
    }
    prev = a(k, k);
  }
  Poly det = n == 0 ? Poly::one(m.spec()) : a(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

void swap_rows(PolyMat& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(PolyMat& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_target -= q * row_source
void row_axpy(PolyMat& m, std::size_t target, std::size_t source, const Poly& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!m(source, c).is_zero()) m(target, c) -= q * m(source, c);
  }
}

void col_axpy(PolyMat& m, std::size_t target, std::size_t source, const Poly& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m(r, source).is_zero()) m(r, target) -= q * m(r, source);
  }
}

void scale_row(PolyMat& m, std::size_t i, const FieldElement& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) *= s;
}

}  // namespace

SmithForm smith_normal_form(const PolyMat& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "Smith form of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldSpec spec = m.spec();
  SmithForm s{PolyMat::identity(spec, n), m, PolyMat::identity(spec, n)};
  PolyMat& d = s.d;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Pivot: nonzero entry of minimal degree in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (d(i, j).is_zero()) continue;
          if (pi == n || d(i, j).degree() < d(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) return s;
      if (pi != k) {
        swap_rows(d, pi, k);
        swap_rows(s.u, pi, k);
      }
      if (pj != k) {
        swap_cols(d, pj, k);
        swap_cols(s.w, pj, k);
      }
      FieldElement inv = d(k, k).leading().inverse();
      scale_row(d, k, inv);
      scale_row(s.u, k, inv);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (d(i, k).is_zero()) continue;
        Poly q = d(i, k) / d(k, k);
        row_axpy(d, i, k, q);
        row_axpy(s.u, i, k, q);
        if (!d(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d(k, j).is_zero()) continue;
        Poly q = d(k, j) / d(k, k);
        col_axpy(d, j, k, q);
        col_axpy(s.w, j, k, q);
        if (!d(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!(d(i, j) % d(k, k)).is_zero()) {
            row_axpy(d, k, i, -Poly::one(spec));
            row_axpy(s.u, k, i, -Poly::one(spec));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  return s;
}

Poly krylov_annihilator(const Mat& a, const Mat& v) {
  const std::size_t n = a.rows();
  const FieldSpec spec = a.spec();
  if (v.is_zero()) return Poly::one(spec);
  std::vector<Mat> cols{v};
  for (std::size_t k = 0; k < n; ++k) cols.push_back(a * cols.back());
  Rref r = mat_rref(hconcat(cols));
  std::size_t k = 0;
  while (k < r.rank && r.pivot_cols[k] == k) ++k;
  std::vector<FieldElement> c(k + 1, FieldElement::zero(spec));
  c[k] = FieldElement::one(spec);
  for (std::size_t i = 0; i < k; ++i) c[i] = -r.rref(i, k);
  return Poly(spec, std::move(c));
}

Poly minimal_polynomial(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "minimal polynomial of a non-square matrix");
  const FieldSpec spec = a.spec();
  Poly m = Poly::one(spec);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Mat e(spec, a.rows(), 1);
    e(i, 0) = FieldElement::one(spec);
    // Skip vectors already killed by the running lcm.
    if (poly_eval_matrix(m, a).col(i).is_zero()) continue;
    m = poly_lcm(m, krylov_annihilator(a, e));
  }
  return m;
}

Poly characteristic_polynomial(const Mat& a) { return poly_det(PolyMat::characteristic(a)); }

std::vector<Poly> invariant_factors(const Mat& a) {
  SmithForm s = smith_normal_form(PolyMat::characteristic(a));
  std::vector<Poly> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!s.d(i, i).is_constant()) out.push_back(s.d(i, i));
  }
  return out;
}

std::size_t primary_dimension(const std::vector<Poly>& factors, const Poly& prime) {
  std::size_t dim = 0;
  for (const auto& f : factors) dim += poly_valuation(f, prime) * *prime.degree();
  return dim;
}

ModuleStructure primary_decomposition(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "primary decomposition of a non-square matrix");
  ModuleStructure ms{a, minimal_polynomial(a), characteristic_polynomial(a), invariant_factors(a), {}};
  Factorization fac = poly_factor(ms.min_poly);
  for (const auto& [prime, k] : fac.factors) {
    Poly power = prime.pow(k);
    Poly cofactor = ms.min_poly / power;
    ExtGcd eg = poly_ext_gcd(cofactor, power);
    Poly idempotent = (eg.s * cofactor) % ms.min_poly;
    ms.primary_components.push_back(
        {prime, k, poly_eval_matrix(idempotent, a), mat_nullspace(poly_eval_matrix(power, a))});
  }
  return ms;
}

}  // namespace bicomm
