#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bicomm/commalg.hpp"
#include "bicomm/deriv.hpp"
#include "bicomm/modstruct.hpp"
#include "gtest_support.hpp"
#include "test_support.hpp"

using namespace bicomm;
using namespace bicomm::testing;

namespace {

Mat d(const Mat& a, const Mat& x) { return a * x - x * a; }

}  // namespace

TEST(DerivationMatrix, Examples) {
  EXPECT_TRUE(derivation_matrix(Mat::zero(Q(), 3, 3)).matrix.is_zero());
  EXPECT_TRUE(derivation_matrix(Mat::identity(Q(), 3)).matrix.is_zero());
  DerivationOp j = derivation_matrix(Mat::jordan_block(fe(0), 2));
  EXPECT_EQ(j.matrix.rows(), 4U);
  EXPECT_EQ(mat_rank(j.matrix), 2U);
  EXPECT_EQ(code_of([] { derivation_matrix(M(1, 2, {0, 0})); }), Errc::NotSquare);
}

TEST(DerivationMatrix, ImageCountOverF3) {
  // |d_a(L(V))| = 3^rank, counted by applying x -> ax - xa to all 81 matrices.
  SmallMat a = small_from({0, 1, 0, 0}, 2, 3);
  std::set<SmallMat> image;
  for (const SmallMat& x : all_small_matrices(2, 3)) image.insert((a * x).minus(x * a));
  EXPECT_EQ(log_p(image.size(), 3), static_cast<int>(mat_rank(derivation_matrix(to_mat(a)).matrix)));
}

TEST(DerivationMatrix, ActsAsCommutatorAndRankNullity) {
  Gen g(40);
  for (FieldSpec spec : {Q(), F(5)}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 4));
      Mat a = g.sparse_matrix(spec, n);
      DerivationOp op = derivation_matrix(a);
      Mat x = g.matrix(spec, n, n);
      EXPECT_EQ(op.apply(x), d(a, x));
      EXPECT_EQ(derive(a, x), d(a, x));
      EXPECT_EQ(mat_rank(op.matrix) + commutant_basis(a).dim(), n * n);
    }
  }
}

TEST(PDot, Examples) {
  Gen g(41);
  Mat a = g.matrix(Q(), 3, 3), x = g.matrix(Q(), 3, 3);
  EXPECT_EQ(p_dot(P("t"), a, x), x);
  EXPECT_EQ(p_dot(P("t^2"), a, x), a * x + x * a);
  EXPECT_TRUE(p_dot(P("7"), a, x).is_zero());
  EXPECT_TRUE(p_dot(Poly::zero(Q()), a, x).is_zero());
  EXPECT_EQ(code_of([&] { p_dot(P("t"), a, Mat::zero(Q(), 2, 2)); }), Errc::SizeMismatch);
}

TEST(PDot, IntertwiningAndLeibniz) {
  Gen g(42);
  for (FieldSpec spec : {Q(), F(7)}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 5));
      Mat a = g.matrix(spec, n, n), x = g.matrix(spec, n, n);
      Poly p = g.poly(spec, 6), q = g.poly(spec, 6);
      Mat pa = poly_eval_matrix(p, a), qa = poly_eval_matrix(q, a);
      EXPECT_EQ(d(a, p_dot(p, a, x)), d(pa, x));
      EXPECT_EQ(p_dot(p * q, a, x), p_dot(p, a, x) * qa + pa * p_dot(q, a, x));
      EXPECT_EQ(p_dot(p + q, a, x), p_dot(p, a, x) + p_dot(q, a, x));
    }
  }
}

TEST(RationalFn, NormalizesToLowestTerms) {
  RationalFn r(P("2*t^2 - 2"), P("2*t - 2"));
  EXPECT_EQ(r.num(), P("t + 1"));
  EXPECT_EQ(r.den(), P("1"));
  RationalFn s(P("1"), P("-2*t"));
  EXPECT_EQ(s.num(), P("-1/2"));
  EXPECT_EQ(s.den(), P("t"));
  EXPECT_EQ(code_of([] { RationalFn(P("1"), Poly::zero(Q())); }), Errc::DivisionByZero);
}

TEST(RDot, Examples) {
  Gen g(43);
  Mat a = Mat::diagonal({fe(1), fe(2)}) + unit_matrix(Q(), 2, 0, 1);
  Mat x = g.matrix(Q(), 2, 2);
  EXPECT_EQ(r_dot(RationalFn(P("t^3 - t")), a, x), p_dot(P("t^3 - t"), a, x));
  Mat ai = mat_inverse(a);
  EXPECT_EQ(r_dot(RationalFn(P("1"), P("t")), a, x), -(ai * x * ai));
  EXPECT_EQ(code_of([&] { r_dot(RationalFn(P("1"), P("t - 1")), a, x); }), Errc::DenominatorSingular);
}

TEST(RDot, DefiningIdentitiesOnDiagonalExample) {
  Mat a = Mat::diagonal({fe(1), fe(2)});
  Gen g(44);
  Mat x = g.matrix(Q(), 2, 2);
  Poly p = P("t"), q = P("t - 3");
  RationalFn r(p, q);
  Mat rd = r_dot(r, a, x), ra = r.eval(a), qa = poly_eval_matrix(q, a);
  EXPECT_EQ(qa * rd + p_dot(q, a, x) * ra, p_dot(p, a, x));
  EXPECT_EQ(rd * qa + ra * p_dot(q, a, x), p_dot(p, a, x));
}

TEST(RDot, RandomizedIdentitiesAndLeibniz) {
  Gen g(45);
  for (FieldSpec spec : {Q(), F(11)}) {
    int done = 0;
    while (done < 30) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 4));
      Mat a = g.matrix(spec, n, n), x = g.matrix(spec, n, n);
      RationalFn r(g.poly(spec, 4), g.nonzero_poly(spec, 3));
      RationalFn s(g.poly(spec, 4), g.nonzero_poly(spec, 3));
      if (!is_invertible(poly_eval_matrix(r.den(), a)) || !is_invertible(poly_eval_matrix(s.den(), a))) continue;
      ++done;
      Mat rd = r_dot(r, a, x), ra = r.eval(a), qa = poly_eval_matrix(r.den(), a);
      Mat pd = p_dot(r.num(), a, x), qd = p_dot(r.den(), a, x);
      EXPECT_EQ(qa * rd + qd * ra, pd);
      EXPECT_EQ(rd * qa + ra * qd, pd);
      EXPECT_EQ(r_dot(r * s, a, x), rd * s.eval(a) + ra * r_dot(s, a, x));
      EXPECT_EQ(d(a, rd), d(ra, x));
    }
  }
}

TEST(FDotMixed, Examples) {
  Gen g(46);
  Mat c = g.matrix(Q(), 3, 3), e = g.matrix(Q(), 2, 2), y = g.matrix(Q(), 3, 2);
  EXPECT_EQ(f_dot_mixed(P("t"), c, e, y), y);
  EXPECT_EQ(f_dot_mixed(P("t - 1"), c, e, y), y);
  Mat a = g.matrix(Q(), 3, 3), z = g.matrix(Q(), 3, 3);
  EXPECT_EQ(f_dot_mixed(P("t^2"), a, a, z), p_dot(P("t^2"), a, z));
  EXPECT_EQ(code_of([&] { f_dot_mixed(P("t"), c, e, z); }), Errc::SizeMismatch);
}

TEST(FDotMixed, IdentityAndBimoduleLinearity) {
  Gen g(47);
  for (FieldSpec spec : {Q(), F(3)}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t m = static_cast<std::size_t>(g.range(1, 4)), k = static_cast<std::size_t>(g.range(1, 4));
      Mat c = g.matrix(spec, m, m), e = g.matrix(spec, k, k), x = g.matrix(spec, m, k);
      Mat y1 = g.matrix(spec, m, k), y2 = g.matrix(spec, m, k);
      Poly f = g.poly(spec, 6), h = g.poly(spec, 6);
      FieldElement s = g.scalar(spec);
      EXPECT_EQ(f_dot_mixed(f, c, e, c * x - x * e), poly_eval_matrix(f, c) * x - x * poly_eval_matrix(f, e));
      EXPECT_EQ(f_dot_mixed(f, c, e, y1 + y2 * s), f_dot_mixed(f, c, e, y1) + f_dot_mixed(f, c, e, y2) * s);
      EXPECT_EQ(f_dot_mixed(f + h, c, e, y1), f_dot_mixed(f, c, e, y1) + f_dot_mixed(h, c, e, y1));
    }
  }
}

TEST(FDotSeries, Examples) {
  Gen g(48);
  Mat a = Mat::jordan_block(fe(0), 3);
  Mat x = g.matrix(Q(), 3, 3);
  Poly t = P("t");
  EXPECT_TRUE(f_dot_series(TruncatedPAdic::from_poly(P("1"), t, 8), a, x).is_zero());
  EXPECT_EQ(f_dot_series(TruncatedPAdic::from_poly(t, t, 8), a, x), x);
  EXPECT_EQ(f_dot_series(TruncatedPAdic::from_poly(P("1 + t"), t, 8), a, x), p_dot(P("1 + t"), a, x));
  EXPECT_EQ(f_dot_series(TruncatedPAdic::from_poly(P("1 + t"), t, 8), a, x), x);
}

TEST(FDotSeries, Errors) {
  Mat a = Mat::jordan_block(fe(0), 3);
  Mat x = unit_matrix(Q(), 3, 2, 0);
  Poly t = P("t");
  EXPECT_EQ(code_of([&] { f_dot_series(TruncatedPAdic::from_poly(t, t, 2), a, x); }), Errc::TruncationTooShort);
  EXPECT_EQ(code_of([&] { f_dot_series(TruncatedPAdic::from_poly(t, t, 8), Mat::diagonal({fe(0), fe(1)}),
                                      Mat::zero(Q(), 2, 2)); }),
            Errc::NotPrimary);
}

TEST(FDotSeries, GeometricSeriesMatchesRationalDerivative) {
  // f = iota(1/(1 - t)) at p = t, a nilpotent: the series derivative agrees with r_dot of 1/(1 - t).
  Gen g(49);
  for (FieldSpec spec : {Q(), F(5)}) {
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 5));
      Mat a = g.conjugate(Mat::jordan_block(FieldElement::zero(spec), n));
      Mat x = g.matrix(spec, n, n);
      Poly t = Poly::t(spec);
      TruncatedPAdic f = embed_rational(Poly::one(spec), Poly::one(spec) - t, t, 2 * n + 2);
      EXPECT_EQ(f_dot_series(f, a, x), r_dot(RationalFn(Poly::one(spec), Poly::one(spec) - t), a, x));
      // Truncations beyond the prescribed level give the same answer.
      TruncatedPAdic longer = embed_rational(Poly::one(spec), Poly::one(spec) - t, t, 2 * n + 6);
      EXPECT_EQ(f_dot_series(longer, a, x), f_dot_series(f, a, x));
    }
  }
}

TEST(Sylvester, Examples) {
  Mat c = M(2, 2, {0, 1, 0, 0}), e = M(1, 1, {1}), y = M(2, 1, {1, 0});
  SylvesterSolution s = sylvester_solve_detailed(c, e, y);
  EXPECT_EQ(s.x, M(2, 1, {-1, 0}));
  EXPECT_TRUE(s.unique);
  EXPECT_EQ(c * s.x - s.x * e, y);
  EXPECT_EQ(sylvester_solve_direct(c, e, y), s.x);
  EXPECT_EQ(poly_eval_matrix(P("t - 1"), c), c - Mat::identity(Q(), 2));

  EXPECT_EQ(sylvester_solve(M(1, 1, {2}), M(1, 1, {3}), M(1, 1, {5})), M(1, 1, {-5}));

  Mat j = Mat::jordan_block(fe(0), 2);
  try {
    sylvester_solve(j, j, Mat::identity(Q(), 2));
    ADD_FAILURE() << "expected NotCoprime";
  } catch (const NotCoprimeError& err) {
    EXPECT_EQ(err.code(), Errc::NotCoprime);
    EXPECT_EQ(err.gcd(), P("t^2"));
  }
}

TEST(Sylvester, CramerOracle) {
  // c 2x2, e 1x1 scalar lambda: (c - lambda I) x = y, solved by Cramer's rule.
  Gen g(50);
  for (int i = 0; i < 60; ++i) {
    Mat c = g.matrix(Q(), 2, 2), e = g.matrix(Q(), 1, 1), y = g.matrix(Q(), 2, 1);
    FieldElement l = e(0, 0);
    FieldElement p = c(0, 0) - l, q = c(0, 1), r = c(1, 0), s = c(1, 1) - l;
    FieldElement det = p * s - q * r;
    if (det.is_zero()) {
      EXPECT_EQ(code_of([&] { sylvester_solve(c, e, y); }), Errc::NotCoprime);
      continue;
    }
    Mat want(Q(), 2, 1);
    want(0, 0) = (y(0, 0) * s - q * y(1, 0)) / det;
    want(1, 0) = (p * y(1, 0) - r * y(0, 0)) / det;
    EXPECT_EQ(sylvester_solve(c, e, y), want);
  }
}

TEST(Sylvester, RoutesAgreeWithDenseSolve) {
  Gen g(51);
  int transposed = 0;
  for (FieldSpec spec : {Q(), F(7)}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t m = static_cast<std::size_t>(g.range(1, 5)), k = static_cast<std::size_t>(g.range(1, 4));
      Mat c = g.matrix(spec, m, m), e = g.matrix(spec, k, k), y = g.matrix(spec, m, k);
      Mat op = sylvester_operator_matrix(c, e);
      bool coprime = poly_gcd(minimal_polynomial(c), minimal_polynomial(e)).is_one();
      EXPECT_EQ(coprime, mat_nullspace(op).dim() == 0);
      if (!coprime) {
        EXPECT_EQ(code_of([&] { sylvester_solve(c, e, y); }), Errc::NotCoprime);
        continue;
      }
      SylvesterSolution s = sylvester_solve_detailed(c, e, y);
      transposed += s.transposed ? 1 : 0;
      EXPECT_EQ(c * s.x - s.x * e, y);
      EXPECT_TRUE(s.unique);
      EXPECT_EQ(s.x, unvec(mat_solve(op, vec(y)), m, k));
      EXPECT_EQ(s.x, sylvester_solve_direct(c, e, y));
    }
  }
  EXPECT_GT(transposed, 0);
}

TEST(RangeKernel, Examples) {
  Gen g(52);
  Mat a = g.matrix(Q(), 3, 3);
  RangeKernelReport sq = range_kernel_report(a, a * a);
  EXPECT_TRUE(sq.b_in_bicommutant && sq.all_agree());
  ASSERT_TRUE(sq.witness.has_value());
  EXPECT_EQ(poly_eval_matrix(*sq.witness, a), a * a);
  RangeKernelReport self = range_kernel_report(a, a);
  EXPECT_TRUE(self.b_in_bicommutant && self.all_agree());

  RangeKernelReport e12 = range_kernel_report(Mat::diagonal({fe(1), fe(2)}), unit_matrix(Q(), 2, 0, 1));
  EXPECT_FALSE(e12.b_in_bicommutant);
  EXPECT_FALSE(e12.kernel_included);
  EXPECT_FALSE(e12.range_included);
  EXPECT_FALSE(e12.transpose_range_included);
  EXPECT_FALSE(e12.witness.has_value());
  EXPECT_EQ(code_of([&] { range_kernel_report(a, Mat::identity(Q(), 2)); }), Errc::SizeMismatch);
}

TEST(RangeKernel, SetInclusionOverF5) {
  SmallMat a = small_from({1, 0, 0, 2}, 2, 5), b = small_from({0, 1, 0, 0}, 2, 5);
  auto all = all_small_matrices(2, 5);
  std::set<SmallMat> ka, kb, ra, rb;
  for (const SmallMat& x : all) {
    SmallMat da = (a * x).minus(x * a), db = (b * x).minus(x * b);
    if (da == SmallMat{2, 5, std::vector<int>(4, 0)}) ka.insert(x);
    if (db == SmallMat{2, 5, std::vector<int>(4, 0)}) kb.insert(x);
    ra.insert(da);
    rb.insert(db);
  }
  bool kernel = std::includes(kb.begin(), kb.end(), ka.begin(), ka.end());
  bool range = std::includes(ra.begin(), ra.end(), rb.begin(), rb.end());
  RangeKernelReport r = range_kernel_report(to_mat(a), to_mat(b));
  EXPECT_EQ(r.kernel_included, kernel);
  EXPECT_EQ(r.range_included, range);
  EXPECT_FALSE(kernel);
}

TEST(RangeKernel, BlockDiagonalMechanism) {
  // a = a1 + a2, b = I + 0. The (1,2) block of d_b(z) is z12, and d_a reaches it only through
  // a1 x12 - x12 a2, which is onto exactly when a1 and a2 have coprime minimal polynomials.
  Gen g(53);
  for (int i = 0; i < 30; ++i) {
    FieldSpec spec = F(3);
    std::size_t n1 = static_cast<std::size_t>(g.range(1, 3)), n2 = static_cast<std::size_t>(g.range(1, 3));
    Mat a1 = g.sparse_matrix(spec, n1), a2 = g.sparse_matrix(spec, n2);
    Mat a = Mat::block_diagonal({a1, a2});
    Mat b = Mat::block_diagonal({Mat::identity(spec, n1), Mat::zero(spec, n2, n2)});
    bool onto = mat_rank(sylvester_operator_matrix(a1, a2)) == n1 * n2;
    RangeKernelReport r = range_kernel_report(a, b);
    EXPECT_TRUE(r.all_agree());
    EXPECT_EQ(r.range_included, onto);
  }
}

TEST(RangeKernel, FourWayAgreementRandomized) {
  Gen g(54);
  for (FieldSpec spec : {Q(), F(2), F(5)}) {
    for (int i = 0; i < 30; ++i) {
      std::size_t n = static_cast<std::size_t>(g.range(1, 4));
      Mat a = g.sparse_matrix(spec, n);
      Mat b = g.coin() ? poly_eval_matrix(g.poly(spec, 4), a) : g.sparse_matrix(spec, n);
      RangeKernelReport r = range_kernel_report(a, b);
      EXPECT_TRUE(r.all_agree());
      EXPECT_EQ(r.b_in_bicommutant, bicommutant_basis(a).contains(b));
    }
  }
}

TEST(PreimageWitness, Examples) {
  Gen g(55);
  Mat a = g.matrix(Q(), 3, 3), z = g.matrix(Q(), 3, 3);
  EXPECT_EQ(preimage_witness(a, a, z), z);
  Mat x = preimage_witness(a, a * a, z);
  EXPECT_EQ(x, a * z + z * a);
  EXPECT_EQ(d(a, x), d(a * a, z));

  Mat c = Mat::companion(P("t^3 - 2"));
  for (int i = 0; i < 10; ++i) {
    Mat b = poly_eval_matrix(g.poly(Q(), 5), c);
    Mat w = g.matrix(Q(), 3, 3);
    EXPECT_EQ(d(c, preimage_witness(c, b, w)), d(b, w));
  }
  EXPECT_EQ(code_of([] {
              preimage_witness(Mat::diagonal({fe(1), fe(2)}), unit_matrix(Q(), 2, 0, 1), Mat::zero(Q(), 2, 2));
            }),
            Errc::NotInBicommutant);
}
