#pragma once

// The standard collection of face lattices used for oracle checks.

#include <string>
#include <vector>

#include "flagvec/exact.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/lattice.hpp"

namespace flagvec {

struct CorpusEntry {
  std::string name;
  FaceLattice lattice;
  /// Every proper face is a simplex.
  bool simplicial = false;
};

struct CorpusLimits {
  int max_dim = 7;
  int max_cyclic_vertices = 12;
  std::size_t max_faces = 100'000;
};

/// Simplices, cubes, cross-polytopes, polygons, cyclic polytopes and their
/// duals, up to the given limits.
inline std::vector<CorpusEntry> build_corpus(const CorpusLimits& limits = {}) {
  std::vector<CorpusEntry> out;
  auto keep = [&](std::string name, FaceLattice lattice, bool simplicial) {
    if (lattice.size() <= limits.max_faces) out.push_back({std::move(name), std::move(lattice), simplicial});
  };
  for (int d = 0; d <= limits.max_dim; ++d) keep("simplex-" + std::to_string(d), build_simplex(d), true);
  for (int d = 1; d <= limits.max_dim; ++d) {
    keep("cube-" + std::to_string(d), build_cube(d), d <= 2);
    keep("crosspolytope-" + std::to_string(d), build_crosspolytope(d), true);
  }
  for (int n = 3; n <= 8; ++n) keep("polygon-" + std::to_string(n), build_polygon(n), true);
  for (int d = 2; d <= limits.max_dim; ++d) {
    for (int n = d + 2; n <= limits.max_cyclic_vertices; ++n) {
      FaceLattice c = build_cyclic(d, n);
      std::string tag = std::to_string(d) + "-" + std::to_string(n);
      if (d >= 3) keep("cyclic-dual-" + tag, dual(c), false);
      keep("cyclic-" + tag, std::move(c), true);
    }
  }
  return out;
}

/// f_S = f_{s_k} * prod_{j<k} C(s_{j+1}+1, s_j+1) for a simplicial polytope.
inline Integer simplicial_flag_number(const FVector& f, RankSet s) {
  if (s.empty()) return 1;
  std::vector<int> e = s.elements();
  Integer out = f[e.back()];
  for (std::size_t j = 0; j + 1 < e.size(); ++j) out *= binomial(e[j + 1] + 1, e[j] + 1);
  return out;
}

}  // namespace flagvec
