#pragma once

// Combinatorial face lattices of polytopes, built by brute force.
//
// A face is stored as its sorted vertex set together with its rank
// (dimension); containment is set inclusion. These lattices are the ground
// truth that every closed form elsewhere in the library is checked against.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;
using FaceId = std::uint32_t;

struct Face {
  int rank = -1;
  VertexSet vertices;

  friend bool operator==(const Face&, const Face&) = default;
};

inline constexpr std::size_t kDefaultMaxFaces = 1'000'000;

/// Face bound; the FLAGVEC_MAX_FACES environment variable overrides the default.
inline std::size_t max_faces() {
  if (const char* env = std::getenv("FLAGVEC_MAX_FACES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxFaces;
}

/// Ranked face poset of a d-polytope, including the empty face (rank -1)
/// and the polytope itself (rank d). Immutable after construction.
class FaceLattice {
 public:
  /// Validates the input: a unique empty face and a unique top of rank d,
  /// singleton vertices, ranks compatible with inclusion, and gradedness.
  FaceLattice(int d, std::vector<Face> faces) : d_(d) {
    if (d < 0) throw invalid_params("lattice dimension must be nonnegative");
    if (d > kMaxDimension)
      throw limit_exceeded("lattice dimension " + std::to_string(d) + " exceeds the desk-scale bound " +
                           std::to_string(kMaxDimension));
    if (faces.size() > max_faces())
      throw limit_exceeded("lattice has " + std::to_string(faces.size()) + " faces, above the bound " +
                           std::to_string(max_faces()) + " (set FLAGVEC_MAX_FACES to raise it)");
    for (auto& f : faces) {
      std::sort(f.vertices.begin(), f.vertices.end());
      if (std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end())
        throw invalid_params("face with repeated vertex");
      if (f.rank < -1 || f.rank > d) throw invalid_params("face rank out of range");
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      return std::tie(a.rank, a.vertices) < std::tie(b.rank, b.vertices);
    });
    faces_ = std::move(faces);
    index_faces();
    compute_order();
  }

  int dim() const { return d_; }
  std::size_t size() const { return faces_.size(); }
  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId id) const { return faces_.at(id); }
  int rank(FaceId id) const { return faces_.at(id).rank; }

  FaceId bottom() const { return 0; }
  FaceId top() const { return static_cast<FaceId>(faces_.size() - 1); }

  /// Faces of the given rank, -1 <= r <= d.
  const std::vector<FaceId>& faces_of_rank(int r) const { return by_rank_.at(static_cast<std::size_t>(r + 1)); }

  /// All faces strictly containing `id`, sorted by id (hence by rank).
  const std::vector<FaceId>& above(FaceId id) const { return up_.at(id); }
  const std::vector<FaceId>& covers(FaceId id) const { return covers_up_.at(id); }

  bool leq(FaceId a, FaceId b) const {
    return a == b || std::binary_search(up_[a].begin(), up_[a].end(), b);
  }

  std::optional<FaceId> find(const VertexSet& vertices) const {
    VertexSet v = vertices;
    std::sort(v.begin(), v.end());
    auto it = lookup_.find(v);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  FaceId require(const VertexSet& vertices) const {
    auto id = find(vertices);
    if (!id) throw face_not_in_lattice("vertex set is not a face of the lattice");
    return *id;
  }

  FVector f_vector() const {
    std::vector<Integer> f;
    for (int i = 0; i < d_; ++i) f.emplace_back(static_cast<unsigned long>(faces_of_rank(i).size()));
    return FVector(std::move(f));
  }

  friend bool operator==(const FaceLattice& a, const FaceLattice& b) {
    return a.d_ == b.d_ && a.faces_ == b.faces_;
  }

 private:
  void index_faces() {
    if (faces_.empty() || faces_.front().rank != -1 || !faces_.front().vertices.empty())
      throw invalid_params("lattice needs the empty face at rank -1");
    if (faces_.size() > 1 && faces_[1].rank == -1) throw invalid_params("more than one face of rank -1");
    if (faces_.back().rank != d_) throw invalid_params("lattice needs a top face of rank d");
    if (faces_.size() > 1 && faces_[faces_.size() - 2].rank == d_)
      throw invalid_params("more than one face of rank d");

    by_rank_.assign(static_cast<std::size_t>(d_ + 2), {});
    std::set<Vertex> vertex_labels;
    for (FaceId id = 0; id < faces_.size(); ++id) {
      const Face& f = faces_[id];
      by_rank_[static_cast<std::size_t>(f.rank + 1)].push_back(id);
      if (f.rank == 0) {
        if (f.vertices.size() != 1) throw invalid_params("vertex faces must be singletons");
        vertex_labels.insert(f.vertices.front());
      }
      if (!lookup_.emplace(f.vertices, id).second) throw invalid_params("two faces share a vertex set");
    }
    num_vertices_ = vertex_labels.size();
    for (const Face& f : faces_)
      for (Vertex v : f.vertices)
        if (!vertex_labels.count(v)) throw invalid_params("face uses a vertex with no rank-0 face");
    if (faces_.back().vertices.size() != num_vertices_) throw invalid_params("top face must contain every vertex");
  }

  void compute_order() {
    const std::size_t n = faces_.size();
    std::map<Vertex, std::vector<FaceId>> containing;
    for (FaceId id = 0; id < n; ++id)
      for (Vertex v : faces_[id].vertices) containing[v].push_back(id);

    up_.assign(n, {});
    for (FaceId id = 1; id < n; ++id) up_[0].push_back(id);
    for (FaceId id = 1; id < n; ++id) {
      const Face& f = faces_[id];
      for (FaceId g : containing[f.vertices.front()]) {
        if (g == id) continue;
        const Face& other = faces_[g];
        if (other.vertices.size() <= f.vertices.size()) continue;
        if (!std::includes(other.vertices.begin(), other.vertices.end(), f.vertices.begin(), f.vertices.end()))
          continue;
        if (other.rank <= f.rank) throw invalid_params("face ranks are not compatible with inclusion");
        up_[id].push_back(g);
      }
      std::sort(up_[id].begin(), up_[id].end());
    }

    covers_up_.assign(n, {});
    for (FaceId id = 0; id < n; ++id)
      for (FaceId g : up_[id])
        if (faces_[g].rank == faces_[id].rank + 1) covers_up_[id].push_back(g);

    // Graded: every strict inclusion spanning two or more ranks factors through a cover.
    for (FaceId id = 0; id < n; ++id) {
      for (FaceId g : up_[id]) {
        if (faces_[g].rank == faces_[id].rank + 1) continue;
        bool factors = std::any_of(covers_up_[id].begin(), covers_up_[id].end(),
                                   [&](FaceId h) { return leq(h, g); });
        if (!factors) throw invalid_params("face lattice is not graded");
      }
    }
  }

  int d_;
  std::size_t num_vertices_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceId>> by_rank_;
  std::vector<std::vector<FaceId>> up_;
  std::vector<std::vector<FaceId>> covers_up_;
  std::map<VertexSet, FaceId> lookup_;
};

namespace detail {

inline void check_dimension(int d) {
  if (d > kMaxDimension)
    throw limit_exceeded("dimension " + std::to_string(d) + " exceeds the desk-scale bound " +
                         std::to_string(kMaxDimension));
}

/// Lattice of a simplicial polytope given by its facets (each of size d).
inline FaceLattice simplicial_from_facets(int d, std::size_t n, const std::vector<VertexSet>& facets) {
  std::set<VertexSet> proper;
  for (const VertexSet& facet : facets) {
    const std::size_t k = facet.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      VertexSet sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) sub.push_back(facet[i]);
      proper.insert(std::move(sub));
      if (proper.size() > max_faces()) throw limit_exceeded("face count exceeds the desk-scale bound");
    }
  }
  std::vector<Face> faces;
  faces.push_back({-1, {}});
  for (const VertexSet& s : proper) faces.push_back({static_cast<int>(s.size()) - 1, s});
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  faces.push_back({d, all});
  return FaceLattice(d, std::move(faces));
}

}  // namespace detail

inline FaceLattice build_simplex(int d) {
  if (d < 0) throw invalid_params("simplex dimension must be nonnegative");
  detail::check_dimension(d);
  std::vector<Face> faces;
  const std::uint32_t n = static_cast<std::uint32_t>(d + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Face f;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask >> v & 1u) f.vertices.push_back(v);
    f.rank = static_cast<int>(f.vertices.size()) - 1;
    faces.push_back(std::move(f));
  }
  return FaceLattice(d, std::move(faces));
}

/// Facets of the cyclic polytope C_d(n) on vertices 0..n-1 by Gale's evenness
/// condition: between any two non-members, an even number of members.
inline std::vector<VertexSet> gale_facets(int d, int n) {
  std::vector<VertexSet> facets;
  VertexSet current;
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<int>(current.size()) == d) {
      std::vector<bool> in(static_cast<std::size_t>(n), false);
      for (Vertex v : current) in[v] = true;
      int last_out = -1;
      int between = 0;
      for (int v = 0; v < n; ++v) {
        if (in[static_cast<std::size_t>(v)]) {
          ++between;
          continue;
        }
        if (last_out >= 0 && between % 2 != 0) return;
        last_out = v;
        between = 0;
      }
      facets.push_back(current);
      return;
    }
    for (int v = next; v < n; ++v) {
      current.push_back(static_cast<Vertex>(v));
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(0);
  return facets;
}

inline FaceLattice build_cyclic(int d, int n) {
  if (d < 2) throw invalid_params("cyclic polytope needs d >= 2");
  if (n <= d) throw invalid_params("cyclic polytope C_d(n) needs n >= d + 1");
  detail::check_dimension(d);
  return detail::simplicial_from_facets(d, static_cast<std::size_t>(n), gale_facets(d, n));
}

/// The d-cube; vertices are the 0/1 vectors read as bit masks, faces are
/// sign patterns with each coordinate fixed at 0, fixed at 1, or free.
inline FaceLattice build_cube(int d) {
  if (d < 1) throw invalid_params("cube needs d >= 1");
  detail::check_dimension(d);
  std::vector<Face> faces;
  faces.push_back({-1, {}});
  std::uint32_t patterns = 1;
  for (int i = 0; i < d; ++i) patterns *= 3;
  const std::uint32_t nv = std::uint32_t{1} << d;
  for (std::uint32_t p = 0; p < patterns; ++p) {
    std::vector<int> pattern(static_cast<std::size_t>(d));
    std::uint32_t rest = p;
    int free_coords = 0;
    for (int i = 0; i < d; ++i) {
      pattern[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
      rest /= 3;
      if (pattern[static_cast<std::size_t>(i)] == 2) ++free_coords;
    }
    Face f;
    f.rank = free_coords;
    for (std::uint32_t v = 0; v < nv; ++v) {
      bool match = true;
      for (int i = 0; i < d && match; ++i) {
        int c = pattern[static_cast<std::size_t>(i)];
        if (c != 2 && static_cast<int>(v >> i & 1u) != c) match = false;
      }
      if (match) f.vertices.push_back(v);
    }
    faces.push_back(std::move(f));
  }
  return FaceLattice(d, std::move(faces));
}

/// The d-dimensional cross-polytope; vertex 2i is +e_i and 2i+1 is -e_i.
inline FaceLattice build_crosspolytope(int d) {
  if (d < 1) throw invalid_params("cross-polytope needs d >= 1");
  detail::check_dimension(d);
  std::vector<Face> faces;
  faces.push_back({-1, {}});
  std::uint32_t patterns = 1;
  for (int i = 0; i < d; ++i) patterns *= 3;
  for (std::uint32_t p = 1; p < patterns; ++p) {
    Face f;
    std::uint32_t rest = p;
    for (int i = 0; i < d; ++i) {
      std::uint32_t c = rest % 3;
      rest /= 3;
      if (c != 0) f.vertices.push_back(static_cast<Vertex>(2 * i + (c == 2 ? 1 : 0)));
    }
    f.rank = static_cast<int>(f.vertices.size()) - 1;
    if (f.rank < d) faces.push_back(std::move(f));
  }
  Face top{d, {}};
  for (int v = 0; v < 2 * d; ++v) top.vertices.push_back(static_cast<Vertex>(v));
  faces.push_back(std::move(top));
  return FaceLattice(d, std::move(faces));
}

inline FaceLattice build_polygon(int n) {
  if (n < 3) throw invalid_params("polygon needs n >= 3");
  std::vector<Face> faces;
  faces.push_back({-1, {}});
  for (int v = 0; v < n; ++v) faces.push_back({0, {static_cast<Vertex>(v)}});
  for (int v = 0; v < n; ++v) faces.push_back({1, {static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)}});
  Face top{2, {}};
  for (int v = 0; v < n; ++v) top.vertices.push_back(static_cast<Vertex>(v));
  faces.push_back(std::move(top));
  return FaceLattice(2, std::move(faces));
}

/// The order-reversed lattice. A face F of L becomes the dual face whose
/// vertices are the facets of L containing F.
inline FaceLattice dual(const FaceLattice& lattice) {
  const int d = lattice.dim();
  const auto& facets = lattice.faces_of_rank(d - 1);
  std::vector<Face> faces;
  faces.reserve(lattice.size());
  for (FaceId id = 0; id < lattice.size(); ++id) {
    Face f;
    f.rank = d - 1 - lattice.rank(id);
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (lattice.leq(id, facets[j])) f.vertices.push_back(static_cast<Vertex>(j));
    faces.push_back(std::move(f));
  }
  return FaceLattice(d, std::move(faces));
}

/// The interval [F, top] as the lattice of a (d - 1 - dim F)-polytope; its
/// vertices are the faces covering F.
inline FaceLattice quotient(const FaceLattice& lattice, FaceId face) {
  if (face >= lattice.size()) throw face_not_in_lattice("face id out of range");
  if (face == lattice.top()) throw invalid_params("quotient by the whole polytope is not a polytope");
  const auto& atoms = lattice.covers(face);
  const int shift = lattice.rank(face) + 1;
  std::vector<Face> faces;
  auto add = [&](FaceId g) {
    Face f;
    f.rank = lattice.rank(g) - shift;
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (lattice.leq(atoms[j], g)) f.vertices.push_back(static_cast<Vertex>(j));
    faces.push_back(std::move(f));
  };
  add(face);
  for (FaceId g : lattice.above(face)) add(g);
  return FaceLattice(lattice.dim() - shift, std::move(faces));
}

inline FaceLattice quotient(const FaceLattice& lattice, const VertexSet& face) {
  return quotient(lattice, lattice.require(face));
}

/// The interval [empty, F]: the face F regarded as a polytope of its own.
inline FaceLattice lower_interval(const FaceLattice& lattice, FaceId face) {
  if (face >= lattice.size()) throw face_not_in_lattice("face id out of range");
  std::vector<Face> faces;
  for (FaceId g = 0; g < lattice.size(); ++g)
    if (lattice.leq(g, face)) faces.push_back(lattice.face(g));
  return FaceLattice(lattice.rank(face), std::move(faces));
}

/// All flag numbers f_S by dynamic programming over the lattice: for each face
/// G, the number of chains below G with every rank set inside {0..rank G - 1}.
inline FlagVector flag_vector(const FaceLattice& lattice) {
  const int d = lattice.dim();
  const std::size_t n = lattice.size();
  std::vector<std::vector<Integer>> below(n);
  for (FaceId id = 1; id < n; ++id) {
    int r = lattice.rank(id);
    below[id].assign(std::size_t{1} << r, Integer(0));
    below[id][0] = 1;
  }
  for (FaceId f = 1; f < n; ++f) {
    const int r = lattice.rank(f);
    if (r == d) continue;
    const auto& chains = below[f];
    const std::uint32_t bit = std::uint32_t{1} << r;
    for (FaceId g : lattice.above(f)) {
      auto& target = below[g];
      for (std::uint32_t s = 0; s < chains.size(); ++s)
        if (chains[s] != 0) target[s | bit] += chains[s];
    }
  }
  FlagVector out(d);
  const auto& top = below[lattice.top()];
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << d); ++s) out.set(RankSet::from_bits(s), top[s]);
  return out;
}

inline Integer flag_number(const FaceLattice& lattice, RankSet s) {
  if (!s.fits(lattice.dim())) throw invalid_params("index set exceeds the lattice dimension");
  return flag_vector(lattice).at(s);
}

/// True iff every interval [x, y] with x < y has as many elements of even
/// rank as of odd rank.
inline bool is_eulerian(const FaceLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<long> sums(n, 0);
  for (FaceId x = 0; x < n; ++x) {
    std::fill(sums.begin(), sums.end(), 0);
    const auto sign = [&](FaceId z) { return (lattice.rank(z) % 2 == 0) ? 1L : -1L; };
    auto accumulate = [&](FaceId z) {
      const long s = sign(z);
      sums[z] += s;
      for (FaceId y : lattice.above(z)) sums[y] += s;
    };
    accumulate(x);
    for (FaceId z : lattice.above(x)) accumulate(z);
    for (FaceId y : lattice.above(x))
      if (sums[y] != 0) return false;
  }
  return true;
}

}  // namespace flagvec
