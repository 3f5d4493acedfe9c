#include "bicomm/padic.hpp"

#include <algorithm>

#include "bicomm/factor.hpp"
#include "bicomm/modstruct.hpp"

namespace bicomm {

namespace {

void require_prime(const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) throw Error(Errc::NotIrreducible, p.to_string() + " is not a monic prime");
}

}  // namespace

TruncatedPAdic::TruncatedPAdic(Poly p, std::vector<Poly> digits)
    : p_(std::move(p)), digits_(std::move(digits)) {
  require_prime(p_);
  if (digits_.empty()) throw Error(Errc::SizeMismatch, "truncation level must be at least 1");
  for (const auto& d : digits_) {
    if (!(d.spec() == p_.spec())) throw Error(Errc::FieldMismatch, "digit field differs from prime");
    if (d.degree() >= p_.degree()) throw Error(Errc::SizeMismatch, "digit degree must be below deg p");
  }
}

TruncatedPAdic TruncatedPAdic::expand(const Poly& g, const Poly& p, std::size_t level) {
  std::vector<Poly> digits;
  Poly rest = g;
  for (std::size_t j = 0; j < level; ++j) {
    auto [q, r] = divmod(rest, p);
    digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return TruncatedPAdic(Unchecked{}, p, std::move(digits));
}

TruncatedPAdic TruncatedPAdic::from_poly(const Poly& g, const Poly& p, std::size_t level) {
  require_prime(p);
  if (level == 0) throw Error(Errc::SizeMismatch, "truncation level must be at least 1");
  if (!(g.spec() == p.spec())) throw Error(Errc::FieldMismatch, "polynomial field differs from prime");
  return expand(g, p, level);
}

Poly TruncatedPAdic::truncating_polynomial(std::size_t n) const {
  if (n > level()) throw Error(Errc::LevelTooHigh, "level " + std::to_string(n) + " above truncation");
  Poly acc(p_.spec());
  for (std::size_t j = n; j-- > 0;) acc = acc * p_ + digits_[j];
  return acc;
}

TruncatedPAdic padic_arith(const TruncatedPAdic& x, const TruncatedPAdic& y, PAdicOp op) {
  if (!(x.prime() == y.prime())) throw Error(Errc::PrimeMismatch, "operands use different primes");
  const std::size_t level = std::min(x.level(), y.level());
  Poly fx = x.truncating_polynomial(level);
  Poly fy = y.truncating_polynomial(level);
  Poly r = op == PAdicOp::Add ? fx + fy : (fx * fy) % x.prime().pow(level);
  return TruncatedPAdic::from_poly(r, x.prime(), level);
}

TruncatedPAdic embed_rational(const Poly& u, const Poly& v, const Poly& p, std::size_t level) {
  if (v.is_zero() || (v % p).is_zero()) throw Error(Errc::NotInRp, "p divides the denominator");
  Poly modulus = p.pow(level);
  ExtGcd eg = poly_ext_gcd(v, modulus);  // s v + t p^N = 1
  return TruncatedPAdic::from_poly((u * eg.s) % modulus, p, level);
}

TruncatedPAdic project(const TruncatedPAdic& x, std::size_t n) {
  if (n > x.level()) throw Error(Errc::LevelTooHigh, "projection above truncation level");
  if (n == 0) throw Error(Errc::SizeMismatch, "projection level must be at least 1");
  std::vector<Poly> digits(x.digits().begin(), x.digits().begin() + static_cast<std::ptrdiff_t>(n));
  return TruncatedPAdic(x.prime(), std::move(digits));
}

std::size_t primary_order(const Mat& a, const Poly& p) {
  Poly m = minimal_polynomial(a);
  std::size_t order = poly_valuation(m, p);
  if (!(p.pow(order) == m)) {
    throw Error(Errc::NotPrimary, "minimal polynomial " + m.to_string() + " is not a power of " + p.to_string());
  }
  return order;
}

Mat act_on_module(const TruncatedPAdic& f, const Mat& a, const Mat& xi) {
  if (xi.rows() != a.rows() || xi.cols() != 1) throw Error(Errc::SizeMismatch, "xi must be a column vector");
  const std::size_t m = primary_order(a, f.prime());
  if (f.level() < m) {
    throw Error(Errc::TruncationTooShort, "need " + std::to_string(m) + " digits, have " + std::to_string(f.level()));
  }
  return poly_eval_matrix(f.truncating_polynomial(m), a) * xi;
}

}  // namespace bicomm
