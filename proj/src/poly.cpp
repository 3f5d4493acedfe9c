#include "bicomm/poly.hpp"

#include <algorithm>
#include <cctype>

namespace bicomm {

Poly::Poly(FieldSpec spec, std::vector<FieldElement> coeffs) : spec_(spec), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.spec() == spec_)) throw Error(Errc::FieldMismatch, "coefficient field differs");
  }
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c}); }

Poly Poly::monomial(const FieldElement& c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, FieldElement::zero(c.spec()));
  coeffs[degree] = c;
  return Poly(c.spec(), std::move(coeffs));
}

Poly Poly::from_ints(FieldSpec spec, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(FieldElement::from_int(v, spec));
  return Poly(spec, std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& rhs) const {
  if (!(spec_ == rhs.spec_)) {
    throw Error(Errc::FieldMismatch, spec_.to_string() + " vs " + rhs.spec_.to_string());
  }
}

FieldElement Poly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : FieldElement::zero(spec_);
}

const FieldElement& Poly::leading() const {
  if (c_.empty()) throw Error(Errc::ZeroInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d.push_back(c_[k] * FieldElement::from_int(static_cast<long long>(k), spec_));
  }
  return Poly(spec_, std::move(d));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(spec_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  check_same(inner);
  Poly acc(spec_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::pow(std::size_t e) const {
  Poly result = one(spec_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), FieldElement::zero(spec_));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), FieldElement::zero(spec_));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const FieldElement& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.spec_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.spec_, std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool operator==(const Poly& a, const Poly& b) { return a.spec_ == b.spec_ && a.c_ == b.c_; }

DivMod divmod(const Poly& a, const Poly& b) {
  if (!(a.spec() == b.spec())) throw Error(Errc::FieldMismatch, "divmod operands differ in field");
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const FieldSpec spec = a.spec();
  std::vector<FieldElement> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return {Poly(spec), a};
  FieldElement lead_inv = d.back().inverse();
  std::vector<FieldElement> quot(rem.size() - d.size() + 1, FieldElement::zero(spec));
  for (std::size_t k = quot.size(); k-- > 0;) {
    FieldElement q = rem[k + d.size() - 1] * lead_inv;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  rem.resize(d.size() - 1);
  return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

ExtGcd poly_ext_gcd(const Poly& f, const Poly& g) {
  if (!(f.spec() == g.spec())) throw Error(Errc::FieldMismatch, "ext_gcd operands differ in field");
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  const FieldSpec spec = f.spec();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::one(spec), s1(spec);
  Poly t0(spec), t1 = Poly::one(spec);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return f;
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.spec());
  return (f / poly_gcd(f, g) * g).monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus) {
  Poly result = Poly::one(base.spec()) % modulus;
  Poly b = base % modulus;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * b % modulus;
  }
  return result;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    std::string sa = ca[i].to_string(), sb = cb[i].to_string();
    if (sa != sb) return sa < sb;
  }
  return false;
}

std::size_t poly_valuation(Poly f, const Poly& prime) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "valuation of zero");
  std::size_t v = 0;
  while (true) {
    auto [q, r] = divmod(f, prime);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const FieldElement& c = c_[k];
    if (c.is_zero()) continue;
    bool negative = c.is_negative();
    FieldElement mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += var;
    } else {
      out += mag.to_string() + "*" + var;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, FieldSpec spec) : text_(text), spec_(spec) {}

  Poly parse() {
    Poly acc(spec_);
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      Poly term = parse_term();
      acc += negative ? -term : term;
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " in polynomial '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly parse_term() {
    FieldElement coeff = FieldElement::one(spec_);
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den.empty()) fail("missing denominator");
      }
      coeff = FieldElement::canonicalize(mpz_class(num), mpz_class(den), spec_);
      has_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    std::size_t degree = 0;
    if (peek() == 't') {
      ++pos_;
      degree = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        degree = std::stoul(e);
      }
    } else if (!has_coeff) {
      fail("expected coefficient or 't'");
    }
    return Poly::monomial(coeff, degree);
  }

  std::string_view text_;
  FieldSpec spec_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, FieldSpec spec) { return PolyParser(text, spec).parse(); }

}  // namespace bicomm
