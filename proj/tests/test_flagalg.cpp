#include <gtest/gtest.h>

#include "flagvec/flagvec.hpp"
#include "oracles.hpp"

using namespace flagvec;

namespace {

Rational apply_combination(const LinearCombination& m, const FlagVector& v) {
  Rational total = 0;
  for (const auto& [s, c] : m) total += c * v.at(s);
  return total;
}

}  // namespace

TEST(RankSet, KeysAndOrder) {
  EXPECT_EQ((RankSet{0, 2, 4}).key(), "024");
  EXPECT_EQ(RankSet::from_key("13"), (RankSet{1, 3}));
  EXPECT_EQ(RankSet{}.key(), "");
  EXPECT_EQ((RankSet{1, 3}).reversed(5), (RankSet{1, 3}));
  EXPECT_EQ((RankSet{0}).reversed(5), (RankSet{4}));
  EXPECT_TRUE(DisplayOrder{}(RankSet{4}, RankSet{0, 1}));
  EXPECT_TRUE(DisplayOrder{}(RankSet{0, 2}, RankSet{0, 3}));
  EXPECT_TRUE(DisplayOrder{}(RankSet{0, 3}, RankSet{1, 3}));
  EXPECT_THROW(RankSet::from_key("0a"), parse_error);
}

TEST(SparseBasis, Fibonacci) {
  const std::size_t fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(sparse_basis(d).size(), fib[d]) << d;
}

TEST(SparseBasis, MatchesCandidateListings) {
  std::vector<RankSet> listed6;
  for (const auto& [s, v] : candidate_6d(0)) listed6.push_back(s);
  std::vector<RankSet> basis6 = sparse_basis(6);
  basis6.erase(basis6.begin());
  std::sort(listed6.begin(), listed6.end(), DisplayOrder{});
  EXPECT_EQ(listed6, basis6);

  std::vector<RankSet> listed7;
  for (const auto& [s, v] : candidate_7d()) listed7.push_back(s);
  std::vector<RankSet> basis7 = sparse_basis(7);
  basis7.erase(basis7.begin());
  std::sort(listed7.begin(), listed7.end(), DisplayOrder{});
  EXPECT_EQ(listed7, basis7);
}

TEST(Gds, ResidualsVanishOnLattices) {
  for (const CorpusEntry& e : build_corpus()) {
    FlagVector v = flag_vector(e.lattice);
    for (const GdsResidual& r : gds_residuals(v)) ASSERT_EQ(r.value, 0) << e.name << " S=" << r.relation.base.key();
    EXPECT_EQ(gds_residuals(v).size(), oracle::gds_residuals_direct(v).size());
  }
}

TEST(Gds, RelationForIndexOneGapToFive) {
  // f_12 - f_13 + f_14 - 2 f_1 = 0 in dimension 5.
  bool found = false;
  for (const GdsRelation& r : gds_relations(5)) {
    if (r.base != RankSet{1} || r.lo != 1 || r.hi != 5) continue;
    found = true;
    LinearCombination expected{{RankSet{1, 2}, 1}, {RankSet{1, 3}, -1}, {RankSet{1, 4}, 1}, {RankSet{1}, -2}};
    EXPECT_EQ(r.combination(), expected);
  }
  EXPECT_TRUE(found);
}

TEST(Gds, EmptySetGivesEuler) {
  for (int d = 1; d <= 7; ++d) {
    GdsRelation r{RankSet{}, -1, d};
    LinearCombination expected;
    for (int j = 0; j < d; ++j) add_term(expected, RankSet{j}, (j % 2 == 0) ? 1 : -1);
    add_term(expected, RankSet{}, (d % 2 == 0) ? 0 : -2);
    EXPECT_EQ(r.combination(), expected);
  }
}

TEST(Gds, DetectsBrokenVector) {
  FlagVector v = flag_vector(build_simplex(3));
  v.set(RankSet{1}, 7);
  EXPECT_FALSE(satisfies_gds(v));
}

TEST(Gds, MissingEntry) {
  FlagVector v(3);
  v.set(RankSet{0}, 4);
  EXPECT_THROW(gds_residuals(v), missing_entry);
}

TEST(Reduce, SparseIsIdentity) {
  for (int d = 1; d <= 7; ++d)
    for (RankSet s : sparse_basis(d)) EXPECT_EQ(reduce_index(s, d), (LinearCombination{{s, 1}}));
}

TEST(Reduce, OnlySparseIndicesRemain) {
  for (int d = 1; d <= 8; ++d)
    for (RankSet s : RankSet::all(d))
      for (const auto& [t, c] : reduce_index(s, d)) EXPECT_TRUE(t.is_sparse(d)) << s.key() << " -> " << t.key();
}

TEST(Reduce, IdempotentOnReducedCombinations) {
  for (int d = 2; d <= 7; ++d)
    for (RankSet s : RankSet::all(d)) {
      LinearCombination once = reduce_index(s, d);
      EXPECT_EQ(reduce_combination(once, d), once);
    }
}

TEST(Reduce, IndexFourteenFromRelation) {
  // f_14 = 2 f_1 - f_12 + f_13, both sides reduced.
  LinearCombination rhs;
  add_term(rhs, RankSet{1}, 2);
  add_term(rhs, RankSet{1, 2}, -1);
  add_term(rhs, RankSet{1, 3}, 1);
  EXPECT_EQ(reduce_index(RankSet{1, 4}, 5), reduce_combination(rhs, 5));
}

TEST(Reduce, OneTwoFourEqualsOneTwoThree) {
  EXPECT_EQ(reduce_index(RankSet{1, 2, 4}, 5), reduce_index(RankSet{1, 2, 3}, 5));
  for (FaceLattice l : {build_simplex(5), build_cyclic(5, 8)}) {
    FlagVector v = flag_vector(l);
    EXPECT_EQ(apply_combination(reduce_index(RankSet{1, 2, 4}, 5), v), Rational(v.at(RankSet{1, 2, 3})));
  }
}

TEST(Reduce, ReproducesLatticeValues) {
  for (const CorpusEntry& e : build_corpus()) {
    const int d = e.lattice.dim();
    FlagVector v = flag_vector(e.lattice);
    for (RankSet s : RankSet::all(d)) ASSERT_EQ(apply_combination(reduce_index(s, d), v), Rational(v.at(s))) << e.name << " " << s.key();
  }
}

TEST(Complete, CandidateFacetCounts) {
  EXPECT_EQ(complete_from_sparse(candidate_6d(0), 6).at(RankSet{5}), 7);
  EXPECT_EQ(complete_from_sparse(candidate_7d(), 7).at(RankSet{6}), 134);
}

TEST(Complete, SimplexFromSparse) {
  FlagVector full = flag_vector(build_simplex(7));
  EXPECT_EQ(complete_from_sparse(restrict_to_sparse(full), 7), full);
}

TEST(Complete, RoundTripOnCorpus) {
  for (const CorpusEntry& e : build_corpus()) {
    FlagVector v = flag_vector(e.lattice);
    EXPECT_EQ(complete_from_sparse(restrict_to_sparse(v), v.dim()), v) << e.name;
  }
}

TEST(Complete, ResultSatisfiesGds) {
  for (long ell : {0L, 3L, 10L}) EXPECT_TRUE(satisfies_gds(complete_from_sparse(candidate_6d(ell), 6)));
  EXPECT_TRUE(satisfies_gds(complete_from_sparse(candidate_7d(), 7)));
}

TEST(Complete, Errors) {
  SparseFlagData data = candidate_6d(0);
  data.erase(RankSet{0, 2, 4});
  EXPECT_THROW(complete_from_sparse(data, 6), incomplete_basis);
  SparseFlagData bad = candidate_6d(0);
  bad[RankSet{1, 2}] = 5;
  EXPECT_THROW(complete_from_sparse(bad, 6), invalid_params);
  SparseFlagData bad_empty = candidate_6d(0);
  bad_empty[RankSet{}] = 2;
  EXPECT_THROW(complete_from_sparse(bad_empty, 6), invalid_params);
}

TEST(Euler, Check) {
  EXPECT_TRUE(euler_check(FVector({8, 28, 52, 50, 20})));
  EXPECT_TRUE(euler_check(FVector({22, 111, 110, 35, 21, 7})));
  EXPECT_TRUE(euler_check(FVector({4, 6, 4})));
  EXPECT_FALSE(euler_check(FVector({4, 7, 4})));
}

TEST(FlagVectorType, Validation) {
  FlagVector v(3);
  EXPECT_EQ(v.at(RankSet{}), 1);
  EXPECT_THROW(v.set(RankSet{3}, 1), invalid_params);
  EXPECT_THROW(v.set(RankSet{}, 2), invalid_params);
  EXPECT_THROW(v.at(RankSet{0}), missing_entry);
  EXPECT_FALSE(v.is_complete());
}
