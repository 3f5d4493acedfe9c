#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a word-sized
// prime. Every FieldElement carries its FieldSpec; mixing specs throws
// Errc::FieldMismatch.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "bicomm/error.hpp"

namespace bicomm {

class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws Errc::InvalidPrime unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// Zero over Q.
  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_<p>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n) noexcept;

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : value_(mpq_class(0)) {}

  static FieldElement zero(FieldSpec spec);
  static FieldElement one(FieldSpec spec);
  static FieldElement from_int(long long value, FieldSpec spec);
  static FieldElement from_mpz(const mpz_class& value, FieldSpec spec);
  static FieldElement from_mpq(const mpq_class& value, FieldSpec spec);

  /// num/den reduced to canonical form. Throws ZeroDenominator or NonInvertibleModP.
  static FieldElement canonicalize(const mpz_class& num, const mpz_class& den, FieldSpec spec);

  /// Accepts "n", "-n", "n/d" (and the same over F_p, reduced mod p).
  static FieldElement parse(std::string_view text, FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Over Q only.
  const mpq_class& rational() const;
  /// Over F_p only.
  std::uint64_t residue() const;

  FieldElement inverse() const;
  FieldElement operator-() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// True for a negative rational; always false over F_p.
  bool is_negative() const noexcept;

  /// "n/d" or "n" over Q, decimal residue over F_p.
  std::string to_string() const;

 private:
  FieldElement(FieldSpec spec, std::variant<mpq_class, std::uint64_t> value)
      : spec_(spec), value_(std::move(value)) {}

  void check_same(const FieldElement& rhs) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace bicomm
