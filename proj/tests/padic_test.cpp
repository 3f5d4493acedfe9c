#include <gtest/gtest.h>

#include "bicomm/commalg.hpp"
#include "bicomm/padic.hpp"
#include "gtest_support.hpp"
#include "test_support.hpp"

using namespace bicomm;
using namespace bicomm::testing;

namespace {

TruncatedPAdic digits(const Poly& p, const std::vector<std::string>& ds) {
  std::vector<Poly> out;
  for (const auto& d : ds) out.push_back(Poly::parse(d, p.spec()));
  return TruncatedPAdic(p, out);
}

// All elements of R/(p^N) over F_2 with p = t: every digit string of length N.
std::vector<TruncatedPAdic> all_f2(std::size_t level) {
  FieldSpec f2 = F(2);
  Poly t = P("t", f2);
  std::vector<TruncatedPAdic> out;
  for (std::size_t code = 0; code < (std::size_t{1} << level); ++code) {
    std::vector<Poly> ds;
    for (std::size_t k = 0; k < level; ++k) ds.push_back(Poly::from_ints(f2, {static_cast<long long>((code >> k) & 1)}));
    out.emplace_back(t, ds);
  }
  return out;
}

}  // namespace

TEST(TruncatedPAdic, Validation) {
  Poly t = P("t");
  EXPECT_EQ(code_of([&] { TruncatedPAdic(t, {}); }), Errc::SizeMismatch);
  EXPECT_EQ(code_of([&] { TruncatedPAdic(t, {P("t")}); }), Errc::SizeMismatch);
  EXPECT_EQ(code_of([&] { TruncatedPAdic(P("t^2"), {P("1")}); }), Errc::NotIrreducible);
  EXPECT_EQ(code_of([&] { TruncatedPAdic(P("2*t"), {P("1")}); }), Errc::NotIrreducible);
  TruncatedPAdic x = TruncatedPAdic::from_poly(P("t^5 + 3*t + 2"), P("t^2 + 1"), 4);
  for (const Poly& d : x.digits()) EXPECT_TRUE(d.is_zero() || *d.degree() < 2U);
  EXPECT_EQ(x.to_poly(), P("t^5 + 3*t + 2"));
  EXPECT_EQ(code_of([&] { x.truncating_polynomial(5); }), Errc::LevelTooHigh);
}

TEST(PAdicArith, Examples) {
  Poly t = P("t");
  TruncatedPAdic one = digits(t, {"1", "0"}), p = digits(t, {"0", "1"});
  EXPECT_EQ(one + p, digits(t, {"1", "1"}));

  FieldSpec f2 = F(2);
  Poly t2 = P("t", f2);
  TruncatedPAdic u = digits(t2, {"1", "1", "0"});
  EXPECT_EQ(u * u, digits(t2, {"1", "0", "1"}));

  TruncatedPAdic zero = digits(t, {"0", "0", "0"});
  TruncatedPAdic x = digits(t, {"3", "-1", "2"});
  EXPECT_EQ(x * zero, zero);
}

TEST(PAdicArith, TruncatesToShorterAndRejectsMixedPrimes) {
  Poly p = P("t^2 + 1");
  TruncatedPAdic a = TruncatedPAdic::from_poly(P("t^3 + 2"), p, 4);
  TruncatedPAdic b = TruncatedPAdic::from_poly(P("t + 5"), p, 2);
  EXPECT_EQ((a * b).level(), 2U);
  EXPECT_EQ((a * b).to_poly(), (P("t^3 + 2") * P("t + 5")) % p.pow(2));
  EXPECT_EQ(code_of([&] { (void)(a + TruncatedPAdic::from_poly(P("1"), P("t"), 2)); }), Errc::PrimeMismatch);
}

TEST(PAdicArith, RingLawsModuloPower) {
  Gen g(60);
  for (FieldSpec spec : {Q(), F(3)}) {
    Poly p = spec.is_rationals() ? P("t^2 - 2", spec) : P("t^2 + 1", spec);
    for (int i = 0; i < 40; ++i) {
      std::size_t level = static_cast<std::size_t>(g.range(1, 4));
      Poly f = g.poly(spec, 7), h = g.poly(spec, 7);
      TruncatedPAdic x = TruncatedPAdic::from_poly(f, p, level), y = TruncatedPAdic::from_poly(h, p, level);
      Poly mod = p.pow(level);
      EXPECT_EQ((x + y).to_poly(), (f + h) % mod);
      EXPECT_EQ((x * y).to_poly(), (f * h) % mod);
      EXPECT_EQ(x * y, y * x);
    }
  }
}

TEST(Embed, Examples) {
  FieldSpec f2 = F(2);
  Poly t = P("t", f2);
  EXPECT_EQ(embed_rational(P("1", f2), P("1 + t", f2), t, 3), digits(t, {"1", "1", "1"}));
  EXPECT_EQ(P("1 + t", f2) * P("1 + t + t^2", f2), P("1 + t^3", f2));
  Poly v = P("t^2 + 3");
  EXPECT_EQ(embed_rational(v, v, P("t - 1"), 4), TruncatedPAdic::from_poly(P("1"), P("t - 1"), 4));
  EXPECT_EQ(code_of([] { embed_rational(P("1"), P("t"), P("t"), 3); }), Errc::NotInRp);
  EXPECT_EQ(code_of([] { embed_rational(P("1"), P("t^2 - t"), P("t - 1"), 3); }), Errc::NotInRp);
}

TEST(Embed, InverseAndMultiplicative) {
  Gen g(61);
  for (FieldSpec spec : {Q(), F(2), F(5)}) {
    Poly p = spec.prime() == 2 ? P("t^2 + t + 1", spec) : P("t - 1", spec);
    int done = 0;
    while (done < 30) {
      std::size_t level = static_cast<std::size_t>(g.range(1, 5));
      Poly u1 = g.poly(spec, 4), v1 = g.nonzero_poly(spec, 4), u2 = g.poly(spec, 4), v2 = g.nonzero_poly(spec, 4);
      if (!poly_gcd(v1, p).is_one() || !poly_gcd(v2, p).is_one()) continue;
      ++done;
      TruncatedPAdic r1 = embed_rational(u1, v1, p, level), r2 = embed_rational(u2, v2, p, level + 1);
      EXPECT_EQ((v1 * r1.to_poly() - u1) % p.pow(level), Poly::zero(spec));
      EXPECT_EQ(r1 * r2, embed_rational(u1 * u2, v1 * v2, p, level));
      EXPECT_EQ(project(r2, level) * r1, project(embed_rational(u1 * u2, v1 * v2, p, level + 1), level));
    }
  }
}

TEST(Project, Examples) {
  Poly t = P("t");
  TruncatedPAdic x = digits(t, {"1", "1", "1"});
  EXPECT_EQ(project(x, 3), x);
  EXPECT_EQ(project(x, 1), digits(t, {"1"}));
  EXPECT_EQ(code_of([&] { project(x, 4); }), Errc::LevelTooHigh);
  EXPECT_EQ(code_of([&] { project(x, 0); }), Errc::SizeMismatch);
}

TEST(Project, HomomorphismExhaustiveOverF2) {
  auto all = all_f2(3);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(project(x * y, n), project(x, n) * project(y, n));
        EXPECT_EQ(project(x + y, n), project(x, n) + project(y, n));
      }
    }
  }
}

TEST(PrimaryOrder, ComputesExponentOrRejects) {
  EXPECT_EQ(primary_order(Mat::jordan_block(fe(0), 3), P("t")), 3U);
  EXPECT_EQ(primary_order(Mat::companion(P("t^2 + 1").pow(2)), P("t^2 + 1")), 2U);
  EXPECT_EQ(code_of([] { primary_order(Mat::diagonal({fe(0), fe(1)}), P("t")); }), Errc::NotPrimary);
}

TEST(ActOnModule, Examples) {
  Gen g(62);
  Mat a = Mat::jordan_block(fe(0), 3);
  Mat xi = g.matrix(Q(), 3, 1);
  EXPECT_EQ(act_on_module(TruncatedPAdic::from_poly(P("1"), P("t"), 3), a, xi), xi);

  FieldSpec f2 = F(2);
  Poly t = P("t", f2);
  Mat j2 = Mat::jordan_block(fe(0, f2), 2);
  TruncatedPAdic f = embed_rational(P("1", f2), P("1 + t", f2), t, 2);
  // Upper-triangular blocks: a e2 = e1, so (1 + a) e2 = e1 + e2.
  Mat e2 = M(2, 1, {0, 1}, f2);
  Mat got = act_on_module(f, j2, e2);
  EXPECT_EQ(got, M(2, 1, {1, 1}, f2));
  EXPECT_EQ(got, mat_solve(Mat::identity(f2, 2) + j2, e2));
  Mat e1 = M(2, 1, {1, 0}, f2);
  EXPECT_EQ(act_on_module(f, j2, e1), e1);
}

TEST(ActOnModule, Errors) {
  Mat a = Mat::jordan_block(fe(0), 3);
  Mat xi = M(3, 1, {0, 0, 1});
  EXPECT_EQ(code_of([&] { act_on_module(TruncatedPAdic::from_poly(P("1"), P("t"), 2), a, xi); }),
            Errc::TruncationTooShort);
  EXPECT_EQ(code_of([&] { act_on_module(TruncatedPAdic::from_poly(P("1"), P("t - 1"), 4), a, xi); }),
            Errc::NotPrimary);
  EXPECT_EQ(code_of([&] { act_on_module(TruncatedPAdic::from_poly(P("1"), P("t"), 4), a, M(2, 1, {0, 1})); }),
            Errc::SizeMismatch);
}

TEST(ActOnModule, InvariantUnderHighDigitsAndCommutesWithCommutant) {
  Gen g(63);
  for (FieldSpec spec : {Q(), F(3)}) {
    Poly p = P("t^2 + 1", spec);
    for (int i = 0; i < 15; ++i) {
      std::size_t m = static_cast<std::size_t>(g.range(1, 3));
      std::vector<Mat> blocks{Mat::companion(p.pow(m))};
      if (m > 1 && g.coin()) blocks.push_back(Mat::companion(p.pow(m - 1)));
      Mat a = g.conjugate(Mat::block_diagonal(blocks));
      std::size_t n = a.rows();
      std::vector<Poly> ds;
      for (std::size_t k = 0; k < m + 3; ++k) ds.push_back(g.poly(spec, 1));
      TruncatedPAdic f(p, ds);
      std::vector<Poly> perturbed = ds;
      for (std::size_t k = m; k < perturbed.size(); ++k) perturbed[k] = g.poly(spec, 1);
      TruncatedPAdic f2(p, perturbed);
      Mat xi = g.matrix(spec, n, 1);
      EXPECT_EQ(act_on_module(f, a, xi), act_on_module(f2, a, xi));
      // The operator f(a), assembled column by column, commutes with the commutant.
      std::vector<Mat> cols;
      for (std::size_t j = 0; j < n; ++j) cols.push_back(act_on_module(f, a, Mat::identity(spec, n).col(j)));
      Mat fa = hconcat(cols);
      for (const Mat& c : commutant_basis(a).matrices()) EXPECT_EQ(fa * c, c * fa);
    }
  }
}

TEST(ActOnModule, GeometricSeriesMatchesInverse) {
  Gen g(64);
  for (FieldSpec spec : {Q(), F(5)}) {
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 5));
      Mat a = g.conjugate(Mat::jordan_block(FieldElement::zero(spec), n));
      Poly t = Poly::t(spec);
      FieldElement c = spec.is_rationals() ? fe(g.range(1, 3), spec) : fe(g.range(1, 4), spec);
      // iota(1/(c - t)) acts as (c - a)^{-1}.
      TruncatedPAdic f = embed_rational(Poly::one(spec), Poly::constant(c) - t, t, n + static_cast<std::size_t>(g.range(0, 2)));
      Mat xi = g.matrix(spec, n, 1);
      EXPECT_EQ(act_on_module(f, a, xi), mat_solve(Mat::identity(spec, n) * c - a, xi));
    }
  }
}
