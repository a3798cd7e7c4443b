#include <gtest/gtest.h>

#include <cstdlib>

#include "flagvec/flagvec.hpp"
#include "oracles.hpp"

using namespace flagvec;

namespace {

std::vector<long> to_longs(const FVector& f) {
  std::vector<long> out;
  for (const Integer& x : f.components()) out.push_back(x.get_si());
  return out;
}

using V = std::vector<long>;

bool euler_holds(const FVector& f) {
  Integer s = 0;
  for (int i = 0; i < f.dim(); ++i) s += (i % 2 == 0) ? f[i] : Integer(-f[i]);
  return s == 1 - ((f.dim() % 2 == 0) ? 1 : -1);
}

}  // namespace

TEST(Simplex, Point) {
  FaceLattice l = build_simplex(0);
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.rank(l.bottom()), -1);
  EXPECT_EQ(l.rank(l.top()), 0);
}

TEST(Simplex, FVectors) {
  EXPECT_EQ(to_longs(build_simplex(3).f_vector()), (V{4, 6, 4}));
  EXPECT_EQ(to_longs(build_simplex(6).f_vector()), (V{7, 21, 35, 35, 21, 7}));
}

TEST(Cyclic, GaleEvenness) {
  EXPECT_EQ(to_longs(build_cyclic(5, 8).f_vector()), (V{8, 28, 52, 50, 20}));
  EXPECT_EQ(to_longs(build_cyclic(7, 8).f_vector()), (V{8, 28, 56, 70, 56, 28, 8}));
  FVector f = build_cyclic(6, 10).f_vector();
  EXPECT_EQ(f[1], 45);
  EXPECT_EQ(f[2], 120);
}

TEST(Cyclic, FacetsSatisfyEvenness) {
  for (const VertexSet& facet : gale_facets(4, 8)) {
    ASSERT_EQ(facet.size(), 4u);
    for (Vertex i = 0; i < 8; ++i)
      for (Vertex j = i + 1; j < 8; ++j) {
        auto in = [&](Vertex x) { return std::find(facet.begin(), facet.end(), x) != facet.end(); };
        if (in(i) || in(j)) continue;
        int between = 0;
        for (Vertex k = i + 1; k < j; ++k) between += in(k);
        EXPECT_EQ(between % 2, 0);
      }
  }
}

TEST(Cyclic, SimplexCaseMatchesSimplex) {
  for (int d = 2; d <= 7; ++d) EXPECT_EQ(flag_vector(build_cyclic(d, d + 1)), flag_vector(build_simplex(d)));
}

TEST(Cyclic, RejectsTooFewVertices) {
  EXPECT_THROW(build_cyclic(5, 5), invalid_params);
  EXPECT_THROW(build_cyclic(1, 4), invalid_params);
}

TEST(Families, CubeCrossPolygon) {
  EXPECT_EQ(to_longs(build_cube(3).f_vector()), (V{8, 12, 6}));
  EXPECT_EQ(to_longs(build_crosspolytope(4).f_vector()), (V{8, 24, 32, 16}));
  EXPECT_EQ(to_longs(build_polygon(5).f_vector()), (V{5, 5}));
  EXPECT_THROW(build_polygon(2), invalid_params);
  EXPECT_THROW(build_cube(0), invalid_params);
  EXPECT_THROW(build_crosspolytope(0), invalid_params);
}

TEST(Families, EulerRelation) {
  for (const CorpusEntry& e : build_corpus()) EXPECT_TRUE(euler_holds(e.lattice.f_vector())) << e.name;
}

TEST(Dual, FVectors) {
  EXPECT_EQ(to_longs(dual(build_cube(3)).f_vector()), (V{6, 12, 8}));
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(dual(build_simplex(d)).f_vector(), build_simplex(d).f_vector());
  EXPECT_EQ(flag_vector(dual(build_cyclic(5, 8))).at(RankSet{0}), 20);
}

TEST(Dual, IsInvolution) {
  FaceLattice l = build_cyclic(4, 7);
  EXPECT_EQ(flag_vector(dual(dual(l))), flag_vector(l));
}

TEST(Dual, ReversesFlagIndices) {
  for (FaceLattice l : {build_cube(4), build_cyclic(5, 9), build_crosspolytope(3)}) {
    const int d = l.dim();
    FlagVector a = flag_vector(l), b = flag_vector(dual(l));
    for (RankSet s : RankSet::all(d)) EXPECT_EQ(b.at(s.reversed(d)), a.at(s));
  }
}

TEST(Quotient, EmptyFaceIsIdentity) {
  FaceLattice l = build_cube(3);
  EXPECT_EQ(flag_vector(quotient(l, l.bottom())), flag_vector(l));
}

TEST(Quotient, VertexFigureOfTetrahedron) {
  FaceLattice q = quotient(build_simplex(3), VertexSet{0});
  EXPECT_EQ(q.dim(), 2);
  EXPECT_EQ(to_longs(q.f_vector()), (V{3, 3}));
}

TEST(Quotient, CubeEdge) {
  FaceLattice cube = build_cube(3);
  FaceId edge = cube.faces_of_rank(1).front();
  FaceLattice q = quotient(cube, edge);
  EXPECT_EQ(q.dim(), 1);
  EXPECT_EQ(to_longs(q.f_vector()), (V{2}));
}

TEST(Quotient, RankArithmetic) {
  FaceLattice l = build_cyclic(5, 8);
  for (FaceId f = 0; f < l.top(); ++f) EXPECT_EQ(quotient(l, f).dim(), l.dim() - 1 - l.rank(f));
}

TEST(Quotient, Errors) {
  FaceLattice l = build_simplex(3);
  EXPECT_THROW(quotient(l, static_cast<FaceId>(l.size())), face_not_in_lattice);
  EXPECT_THROW(quotient(l, VertexSet{7}), face_not_in_lattice);
  EXPECT_THROW(quotient(l, l.top()), invalid_params);
}

TEST(LowerInterval, FacetOfCube) {
  FaceLattice cube = build_cube(3);
  FaceLattice square = lower_interval(cube, cube.faces_of_rank(2).front());
  EXPECT_EQ(to_longs(square.f_vector()), (V{4, 4}));
}

TEST(FlagVector, Examples) {
  EXPECT_EQ(flag_vector(build_simplex(5)).at(RankSet{0, 2}), 60);
  EXPECT_EQ(flag_vector(build_simplex(3)).at(RankSet{0, 1, 2}), 24);
  EXPECT_EQ(flag_number(build_cyclic(5, 8), RankSet{0}), 8);
  EXPECT_EQ(flag_vector(build_cube(2)).at(RankSet{}), 1);
}

TEST(FlagVector, MatchesDepthFirstChainCount) {
  for (FaceLattice l : {build_simplex(4), build_cube(3), build_cube(4), build_crosspolytope(3), build_cyclic(4, 7),
                        build_polygon(6), dual(build_cyclic(4, 6))}) {
    FlagVector v = flag_vector(l);
    for (RankSet s : RankSet::all(l.dim())) EXPECT_EQ(v.at(s), oracle::chains_dfs(l, s)) << s.key();
  }
}

TEST(FlagVector, SimplicialFormula) {
  for (const CorpusEntry& e : build_corpus()) {
    if (!e.simplicial) continue;
    FlagVector v = flag_vector(e.lattice);
    FVector f = e.lattice.f_vector();
    for (RankSet s : RankSet::all(e.lattice.dim())) ASSERT_EQ(v.at(s), oracle::simplicial_flags(f, s)) << e.name;
  }
}

TEST(Eulerian, Examples) {
  EXPECT_TRUE(is_eulerian(build_simplex(4)));
  EXPECT_TRUE(is_eulerian(build_cyclic(7, 10)));
  EXPECT_TRUE(is_eulerian(build_cube(4)));
}

TEST(Eulerian, DeletedFacetIsNotEulerian) {
  FaceLattice tetra = build_simplex(3);
  std::vector<Face> faces = tetra.faces();
  faces.erase(std::find_if(faces.begin(), faces.end(), [](const Face& f) { return f.rank == 2; }));
  FaceLattice broken(3, faces);
  EXPECT_FALSE(is_eulerian(broken));
}

TEST(Validation, RejectsMalformedLattices) {
  // Two empty faces.
  EXPECT_THROW(FaceLattice(1, {{-1, {}}, {-1, {}}, {0, {0}}, {0, {1}}, {1, {0, 1}}}), invalid_params);
  // Vertex that is not a singleton.
  EXPECT_THROW(FaceLattice(1, {{-1, {}}, {0, {0, 1}}, {1, {0, 1}}}), invalid_params);
  // Missing top.
  EXPECT_THROW(FaceLattice(2, {{-1, {}}, {0, {0}}, {0, {1}}, {1, {0, 1}}}), invalid_params);
  // Not graded: a vertex directly below the top of a 2-dimensional lattice.
  EXPECT_THROW(FaceLattice(2, {{-1, {}}, {0, {0}}, {0, {1}}, {0, {2}}, {1, {0, 1}}, {2, {0, 1, 2}}}), invalid_params);
}

TEST(Limits, FaceBoundFromEnvironment) {
  ::setenv("FLAGVEC_MAX_FACES", "50", 1);
  EXPECT_EQ(max_faces(), 50u);
  EXPECT_THROW(build_cube(4), limit_exceeded);
  EXPECT_NO_THROW(build_simplex(3));
  ::unsetenv("FLAGVEC_MAX_FACES");
  EXPECT_EQ(max_faces(), kDefaultMaxFaces);
  EXPECT_THROW(build_simplex(9), limit_exceeded);
}
