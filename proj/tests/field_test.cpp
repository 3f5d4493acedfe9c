#include <gtest/gtest.h>

#include "bicomm/error.hpp"
#include "bicomm/field.hpp"
#include "gtest_support.hpp"
#include "test_support.hpp"

using namespace bicomm;
using namespace bicomm::testing;

TEST(FieldSpec, RejectsComposites) {
  EXPECT_EQ(code_of([] { FieldSpec::prime_field(1); }), Errc::InvalidPrime);
  EXPECT_EQ(code_of([] { FieldSpec::prime_field(9); }), Errc::InvalidPrime);
  EXPECT_EQ(code_of([] { FieldSpec::prime_field(std::uint64_t{1} << 31); }), Errc::InvalidPrime);
  EXPECT_EQ(FieldSpec::prime_field(2147483647).prime(), 2147483647U);
  EXPECT_EQ(F(7).to_string(), "F_7");
  EXPECT_EQ(Q().to_string(), "Q");
}

TEST(FieldSpec, TrialDivisionAgreesWithSieve) {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < composite.size(); j += i) composite[j] = true;
  }
  for (std::uint64_t n = 0; n < composite.size(); ++n) {
    EXPECT_EQ(is_prime_u64(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(FieldElement::canonicalize(2, 4, Q()).to_string(), "1/2");
  EXPECT_EQ(FieldElement::canonicalize(-3, -6, Q()).to_string(), "1/2");
  EXPECT_EQ(FieldElement::canonicalize(3, -6, Q()).to_string(), "-1/2");
  EXPECT_EQ(FieldElement::canonicalize(3, 2, F(5)).to_string(), "4");
  EXPECT_EQ(FieldElement::canonicalize(-1, 1, F(5)).to_string(), "4");
}

TEST(Canonicalize, Errors) {
  EXPECT_EQ(code_of([] { FieldElement::canonicalize(1, 0, Q()); }), Errc::ZeroDenominator);
  EXPECT_EQ(code_of([] { FieldElement::canonicalize(1, 10, F(5)); }), Errc::NonInvertibleModP);
  EXPECT_EQ(code_of([] { FieldElement::canonicalize(1, 0, F(5)); }), Errc::ZeroDenominator);
}

TEST(Canonicalize, Idempotent) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    FieldSpec spec = (i % 2 == 0) ? Q() : F(13);
    FieldElement x = FieldElement::canonicalize(static_cast<long>(g.range(-50, 50)), static_cast<long>(g.range(1, 12)), spec);
    FieldElement y = spec.is_rationals()
                         ? FieldElement::canonicalize(x.rational().get_num(), x.rational().get_den(), spec)
                         : FieldElement::canonicalize(x.residue(), 1, spec);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.to_string(), y.to_string());
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(FieldElement::parse("1/2", Q()).inverse(), fe(2));
  EXPECT_EQ(fe(2, F(7)).inverse(), fe(4, F(7)));
  EXPECT_EQ(fe(1).inverse(), fe(1));
  EXPECT_EQ(fe(1, F(3)).inverse(), fe(1, F(3)));
  EXPECT_EQ(code_of([] { fe(0).inverse(); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { fe(7, F(7)).inverse(); }), Errc::DivisionByZero);
}

TEST(Arithmetic, MixedFieldsRejected) {
  EXPECT_EQ(code_of([] { (void)(fe(1) + fe(1, F(5))); }), Errc::FieldMismatch);
  EXPECT_EQ(code_of([] { (void)(fe(1, F(3)) * fe(1, F(5))); }), Errc::FieldMismatch);
}

TEST(Arithmetic, Parse) {
  EXPECT_EQ(FieldElement::parse("-6/4", Q()).to_string(), "-3/2");
  EXPECT_EQ(FieldElement::parse("12", F(5)).to_string(), "2");
  EXPECT_EQ(FieldElement::parse("1/3", F(5)).to_string(), "2");
  EXPECT_EQ(code_of([] { FieldElement::parse("abc", Q()); }), Errc::Parse);
  EXPECT_EQ(code_of([] { FieldElement::parse("1/0", Q()); }), Errc::ZeroDenominator);
}

TEST(Arithmetic, FieldAxiomsRandomized) {
  for (FieldSpec spec : {Q(), F(2), F(5), F(2147483647)}) {
    Gen g(42 + spec.prime());
    for (int i = 0; i < 300; ++i) {
      FieldElement a = g.fraction(spec), b = g.fraction(spec), c = g.fraction(spec);
      if (!spec.is_rationals() && spec.prime() > 100) {
        a = FieldElement::from_int(static_cast<long long>(g.next() % spec.prime()), spec);
        b = FieldElement::from_int(static_cast<long long>(g.next() % spec.prime()), spec);
      }
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, FieldElement::zero(spec));
      EXPECT_EQ(a + (-a), FieldElement::zero(spec));
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), FieldElement::one(spec));
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Arithmetic, LargePrimeProductsDoNotOverflow) {
  FieldSpec spec = F(2147483647);
  FieldElement x = fe(2147483646, spec);  // -1
  EXPECT_EQ(x * x, FieldElement::one(spec));
  EXPECT_EQ(x + x, fe(-2, spec));
}

TEST(Arithmetic, NegativeSign) {
  EXPECT_TRUE(fe(-3).is_negative());
  EXPECT_FALSE(fe(3).is_negative());
  EXPECT_FALSE(fe(0).is_negative());
}
