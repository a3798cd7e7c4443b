#include <gtest/gtest.h>

#include "flagvec/flagvec.hpp"
#include "oracles.hpp"

using namespace flagvec;

namespace {

FVector fv(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return FVector(std::move(v));
}

Integer alternating(const FVector& f) {
  Integer s = 0;
  for (int i = 0; i < f.dim(); ++i) s += (i % 2 == 0) ? f[i] : Integer(-f[i]);
  return s;
}

}  // namespace

TEST(Properties, CyclicFiveEight) {
  PropertyReport p = properties(fv({8, 28, 52, 50, 20}));
  EXPECT_FALSE(p.convex.holds);
  EXPECT_EQ(p.convex.witness, 1);
  EXPECT_TRUE(p.log_convex.holds);
  EXPECT_TRUE(p.unimodal.holds);
  EXPECT_TRUE(p.barany.holds);
}

TEST(Properties, CandidateZeroIsLiterallyUnimodal) {
  // 22 <= 111 >= 110 >= 35 >= 21 >= 7: (U) as defined holds; the candidate
  // only breaks the stronger requirement f_1 <= f_2.
  PropertyReport p = properties(fv({22, 111, 110, 35, 21, 7}));
  EXPECT_TRUE(p.unimodal.holds);
  EXPECT_FALSE(p.log_convex.holds);
}

TEST(Properties, SimplexSeven) {
  PropertyReport p = properties(build_simplex(7).f_vector());
  EXPECT_FALSE(p.convex.holds);
  EXPECT_TRUE(p.log_convex.holds);
}

TEST(Properties, Plateaus) {
  PropertyReport p = properties(fv({5, 5, 5, 5}));
  EXPECT_TRUE(p.convex.holds);
  EXPECT_TRUE(p.unimodal.holds);
  PropertyReport q = properties(fv({4, 9, 9, 6, 6, 4}));
  EXPECT_TRUE(q.unimodal.holds);
}

TEST(Properties, DipWitness) {
  PropertyReport p = properties(fv({10, 20, 8, 30, 10}));
  EXPECT_FALSE(p.unimodal.holds);
  EXPECT_EQ(p.unimodal.witness, 2);
  EXPECT_FALSE(p.barany.holds);
  EXPECT_EQ(p.barany.witness, 2);
}

TEST(Properties, RejectsNonPositive) { EXPECT_THROW(properties(fv({4, 0, 4})), invalid_params); }

TEST(Properties, ImplicationChainOnGeneratedVectors) {
  std::vector<FVector> vectors;
  for (const CorpusEntry& e : build_corpus()) vectors.push_back(e.lattice.f_vector());
  for (long n = 6; n <= 40; ++n) vectors.push_back(cyclic_f5(n));
  for (long n = 8; n <= 40; ++n) vectors.push_back(p7n(n));
  for (long ell = 0; ell <= 10; ++ell) vectors.push_back(complete_from_sparse(candidate_6d(ell), 6).f_vector());
  vectors.push_back(complete_from_sparse(candidate_7d(), 7).f_vector());
  for (const FVector& f : vectors) {
    PropertyReport p = properties(f);
    if (p.convex.holds) EXPECT_TRUE(p.log_convex.holds) << f.str();
    if (p.log_convex.holds) EXPECT_TRUE(p.unimodal.holds) << f.str();
    if (p.unimodal.holds) EXPECT_TRUE(p.barany.holds) << f.str();
  }
}

TEST(Cyclic, ClosedForms) {
  EXPECT_EQ(cyclic_f5(8).str(), "8,28,52,50,20");
  EXPECT_EQ(cyclic_f7(8).str(), "8,28,56,70,56,28,8");
  for (long n = 6; n <= 12; ++n) EXPECT_EQ(cyclic_f5(n), build_cyclic(5, static_cast<int>(n)).f_vector()) << n;
  for (long n = 8; n <= 12; ++n) EXPECT_EQ(cyclic_f7(n), build_cyclic(7, static_cast<int>(n)).f_vector()) << n;
  EXPECT_THROW(cyclic_f5(5), invalid_params);
  EXPECT_THROW(cyclic_f7(7), invalid_params);
}

TEST(Cyclic, NonConvexFromEight) {
  for (long n = 6; n <= 300; ++n) {
    PropertyReport p = properties(cyclic_f5(n));
    if (n < 8) {
      EXPECT_TRUE(p.convex.holds) << n;
    } else {
      EXPECT_FALSE(p.convex.holds) << n;
      EXPECT_EQ(p.convex.witness, 1);
    }
  }
}

TEST(Neighborly, Gap) {
  EXPECT_EQ(neighborly_gap(7), 0);
  EXPECT_EQ(neighborly_gap(8), 8);
  EXPECT_EQ(neighborly_gap(10), 40);
  for (long f0 = 1; f0 <= 100; ++f0)
    EXPECT_EQ(neighborly_gap(f0), Rational(f0 + oracle::choose(f0, 3) - 2 * oracle::choose(f0, 2)));
  EXPECT_THROW(neighborly_gap(0), invalid_params);
}

TEST(Neighborly, ConvexityFailsForTwoNeighborly) {
  // 2-neighbourly: f_1 = C(f_0, 2). For d = 4 the f-vector stays convex.
  EXPECT_TRUE(properties(build_cyclic(4, 8).f_vector()).convex.holds);
  for (int d = 5; d <= 7; ++d)
    for (int n = std::max(d + 2, 8); n <= 12; ++n) {
      FVector f = build_cyclic(d, n).f_vector();
      ASSERT_EQ(f[1], oracle::choose(n, 2));
      EXPECT_FALSE(properties(f).convex.holds) << d << " " << n;
    }
  for (int d = 7; d <= 8; ++d) EXPECT_FALSE(properties(build_simplex(d).f_vector()).convex.holds);
}

TEST(ConnectedSum, Tetrahedra) {
  FVector t = build_simplex(3).f_vector();
  FVector s = connected_sum_f(t, t);
  EXPECT_EQ(s.str(), "7,12,7");
  EXPECT_EQ(alternating(s), 2);
}

TEST(ConnectedSum, Errors) {
  EXPECT_THROW(connected_sum_f(fv({4, 6, 4}), fv({5, 10, 10, 5})), dimension_mismatch);
  EXPECT_THROW(connected_sum_f(fv({3, 3}), fv({3, 3})), invalid_params);
}

TEST(P7n, Values) {
  EXPECT_EQ(p7n(8).str(), "15,56,112,140,112,56,15");
  EXPECT_EQ(p7n(9)[0], 28);
  EXPECT_THROW(p7n(7), invalid_params);
}

TEST(P7n, ConnectedSumPath) {
  for (long n = 8; n <= 50; ++n) {
    FVector c = cyclic_f7(n);
    EXPECT_EQ(connected_sum_f(c, c.reversed()), p7n(n)) << n;
    EXPECT_TRUE(p7n(n).is_palindromic());
  }
}

TEST(P7n, EulerAcrossRange) {
  for (long n = 8; n <= 200; ++n) EXPECT_EQ(alternating(p7n(n)), 2) << n;
}

TEST(LogConvexity, RatiosAtEight) {
  RatioTriple t = log_ratios(p7n(8), 8);
  EXPECT_EQ(t.r1, Rational(28, 15));
  EXPECT_EQ(t.r3, Rational(25, 16));
}

TEST(LogConvexity, ScanAboveOneAndDecreasing) {
  std::vector<RatioTriple> rows = logconv_scan(8, 200);
  ASSERT_EQ(rows.size(), 193u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].r1, 1);
    EXPECT_GT(rows[i].r2, 1);
    EXPECT_GT(rows[i].r3, 1);
    if (i > 0) EXPECT_LT(rows[i].r3, rows[i - 1].r3);
    RatioTriple c = logconv_closed_form(rows[i].n);
    EXPECT_EQ(c.r1, rows[i].r1);
    EXPECT_EQ(c.r2, rows[i].r2);
    EXPECT_EQ(c.r3, rows[i].r3);
  }
}

TEST(LogConvexity, LimitWitness) {
  Rational excess = logconv_closed_form(10000).r3 - 1;
  EXPECT_GT(excess, 0);
  EXPECT_LT(excess, Rational(1, 100));
}

TEST(LogConvexity, Errors) {
  EXPECT_THROW(logconv_scan(5, 7), invalid_params);
  EXPECT_THROW(logconv_scan(10, 9), invalid_params);
  EXPECT_THROW(logconv_closed_form(7), invalid_params);
}

TEST(ConvexityScan, TurnsNegativeAtEight) {
  for (const ConvexityRow& r : convexity5_scan(6, 12)) EXPECT_EQ(r.gap < 0, r.n >= 8) << r.n;
  EXPECT_EQ(convexity5_scan(8, 8).front().gap, -2);
}

TEST(Candidates, ListedValues) {
  EXPECT_EQ(candidate_6d(0).at(RankSet{0, 2, 4}), 6480);
  EXPECT_EQ(candidate_6d(2).at(RankSet{4}), 33);
  EXPECT_EQ(candidate_7d().at(RankSet{1, 3, 5}), 127260);
  EXPECT_EQ(candidate_6d(0).size(), 12u);
  EXPECT_EQ(candidate_7d().size(), 20u);
  EXPECT_THROW(candidate_6d(-1), invalid_params);
}
