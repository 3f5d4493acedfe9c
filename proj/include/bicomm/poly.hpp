#pragma once

// Dense univariate polynomials over a FieldSpec, lowest degree first.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicomm/field.hpp"

namespace bicomm {

class Poly {
 public:
  explicit Poly(FieldSpec spec = FieldSpec::rationals()) : spec_(spec) {}
  /// Trailing zeros are stripped.
  Poly(FieldSpec spec, std::vector<FieldElement> coeffs);

  static Poly zero(FieldSpec spec) { return Poly(spec); }
  static Poly one(FieldSpec spec) { return constant(FieldElement::one(spec)); }
  static Poly constant(const FieldElement& c);
  static Poly monomial(const FieldElement& c, std::size_t degree);
  /// The indeterminate t.
  static Poly t(FieldSpec spec) { return monomial(FieldElement::one(spec), 1); }
  /// Integer coefficients, lowest degree first.
  static Poly from_ints(FieldSpec spec, const std::vector<long long>& coeffs);
  /// Parses "c0 + c1*t + c2*t^2" in any term order; "t^2 - 3*t + 1/2" etc.
  static Poly parse(std::string_view text, FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

  /// std::nullopt for the zero polynomial; compares below every real degree.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  /// Coefficient of t^k (zero past the degree).
  FieldElement coeff(std::size_t k) const;
  /// Throws ZeroInput on the zero polynomial.
  const FieldElement& leading() const;

  Poly monic() const;
  Poly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  Poly compose(const Poly& inner) const;
  Poly pow(std::size_t e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const FieldElement& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& s) { return a *= s; }
  friend Poly operator*(const FieldElement& s, Poly a) { return a *= s; }
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Descending-degree display form, e.g. "t^2 - 3*t + 1/2" or "t + 4".
  std::string to_string() const;

 private:
  void trim();
  void check_same(const Poly& rhs) const;

  FieldSpec spec_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division. Throws DivisionByZero.
DivMod divmod(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;
};

/// s*f + t*g = gcd. Throws BothZero or FieldMismatch.
ExtGcd poly_ext_gcd(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
/// Monic lcm; zero if either argument is zero.
Poly poly_lcm(const Poly& f, const Poly& g);
/// (base^e) mod modulus by repeated squaring.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus);

/// Deterministic order: degree, then coefficient strings lowest degree first.
bool poly_less(const Poly& a, const Poly& b);

/// Multiplicity of `prime` in f (f nonzero).
std::size_t poly_valuation(Poly f, const Poly& prime);

}  // namespace bicomm
