#include "bicomm/field.hpp"

#include <cctype>

namespace bicomm {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime_u64(p)) {
    throw Error(Errc::InvalidPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  FieldSpec spec;
  spec.kind_ = Kind::PrimeField;
  spec.p_ = static_cast<std::uint32_t>(p);
  return spec;
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

FieldElement FieldElement::zero(FieldSpec spec) { return from_int(0, spec); }

FieldElement FieldElement::one(FieldSpec spec) { return from_int(1, spec); }

FieldElement FieldElement::from_int(long long value, FieldSpec spec) {
  if (spec.is_rationals()) return {spec, mpq_class(mpz_class(std::to_string(value)))};
  long long p = spec.prime();
  long long r = value % p;
  if (r < 0) r += p;
  return {spec, static_cast<std::uint64_t>(r)};
}

FieldElement FieldElement::from_mpz(const mpz_class& value, FieldSpec spec) {
  if (spec.is_rationals()) return {spec, mpq_class(value)};
  return {spec, reduce(value, spec.prime())};
}

FieldElement FieldElement::from_mpq(const mpq_class& value, FieldSpec spec) {
  return canonicalize(value.get_num(), value.get_den(), spec);
}

FieldElement FieldElement::canonicalize(const mpz_class& num, const mpz_class& den,
                                        FieldSpec spec) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "denominator is zero");
  if (spec.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return {spec, std::move(q)};
  }
  std::uint64_t p = spec.prime();
  std::uint64_t d = reduce(den, spec.prime());
  if (d == 0) {
    throw Error(Errc::NonInvertibleModP,
                "denominator " + den.get_str() + " vanishes mod " + std::to_string(p));
  }
  std::uint64_t n = reduce(num, spec.prime());
  return {spec, n * mod_pow(d, p - 2, p) % p};
}

FieldElement FieldElement::parse(std::string_view text, FieldSpec spec) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    bool ok = !str.empty();
    for (std::size_t i = 0; i < str.size(); ++i) {
      char c = str[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && str.size() > 1))) ok = false;
    }
    if (!ok) throw Error(Errc::Parse, "bad scalar '" + std::string(text) + "'");
    return mpz_class(str);
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return canonicalize(parse_int(text), 1, spec);
  return canonicalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)), spec);
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldElement::is_negative() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

const mpq_class& FieldElement::rational() const {
  if (!spec_.is_rationals()) throw Error(Errc::FieldMismatch, "not a rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
  if (spec_.is_rationals()) throw Error(Errc::FieldMismatch, "not a residue");
  return std::get<std::uint64_t>(value_);
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!(spec_ == rhs.spec_)) {
    throw Error(Errc::FieldMismatch, spec_.to_string() + " vs " + rhs.spec_.to_string());
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (spec_.is_rationals()) return {spec_, mpq_class(1) / std::get<mpq_class>(value_)};
  std::uint64_t p = spec_.prime();
  return {spec_, mod_pow(std::get<std::uint64_t>(value_), p - 2, p)};
}

FieldElement FieldElement::operator-() const {
  if (spec_.is_rationals()) return {spec_, mpq_class(-std::get<mpq_class>(value_))};
  std::uint64_t r = std::get<std::uint64_t>(value_);
  return {spec_, r == 0 ? 0 : spec_.prime() - r};
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % spec_.prime();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + spec_.prime() - std::get<std::uint64_t>(rhs.value_)) % spec_.prime();
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(rhs.value_) % spec_.prime();
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (spec_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace bicomm
