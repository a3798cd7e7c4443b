#pragma once

// Linear algebra of flag vectors: the generalized Dehn-Sommerville (GDS)
// relations, the sparse basis, and reduction of arbitrary flag numbers to it.

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

/// Rational combination of flag numbers, sum of c_S f_S.
using LinearCombination = std::map<RankSet, Rational, DisplayOrder>;

inline void add_term(LinearCombination& into, RankSet s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

/// Subsets of {0, ..., d-2} without two consecutive elements; there are
/// Fibonacci(d+1) of them.
inline std::vector<RankSet> sparse_basis(int d) {
  std::vector<RankSet> out;
  if (d < 0) return out;
  for (RankSet s : RankSet::all(d))
    if (s.is_sparse(d)) out.push_back(s);
  std::sort(out.begin(), out.end(), DisplayOrder{});
  return out;
}

/// One GDS relation: for the index set S and a gap (i, k) of S with
/// k - i >= 2,  sum_{j=i+1}^{k-1} (-1)^{j-i-1} f_{S+j} = (1 - (-1)^{k-i-1}) f_S.
struct GdsRelation {
  RankSet base;
  int lo = -1;
  int hi = 0;

  /// Left side minus right side as a linear combination.
  LinearCombination combination() const {
    LinearCombination out;
    for (int j = lo + 1; j < hi; ++j) add_term(out, base.with(j), ((j - lo - 1) % 2 == 0) ? 1 : -1);
    int rhs = ((hi - lo - 1) % 2 == 0) ? 0 : 2;
    add_term(out, base, -rhs);
    return out;
  }
};

/// Every (S, gap) pair for dimension d.
inline std::vector<GdsRelation> gds_relations(int d) {
  std::vector<GdsRelation> out;
  auto sets = RankSet::all(d);
  std::sort(sets.begin(), sets.end(), DisplayOrder{});
  for (RankSet s : sets) {
    std::vector<int> bounds{-1};
    for (int x : s.elements()) bounds.push_back(x);
    bounds.push_back(d);
    for (std::size_t g = 0; g + 1 < bounds.size(); ++g)
      if (bounds[g + 1] - bounds[g] >= 2) out.push_back({s, bounds[g], bounds[g + 1]});
  }
  return out;
}

struct GdsResidual {
  GdsRelation relation;
  Rational value;
};

/// Residual of every GDS relation on v; all zero iff v satisfies GDS.
inline std::vector<GdsResidual> gds_residuals(const FlagVector& v) {
  std::vector<GdsResidual> out;
  for (const GdsRelation& rel : gds_relations(v.dim())) {
    Rational value = 0;
    for (const auto& [s, c] : rel.combination()) value += c * v.at(s);
    out.push_back({rel, value});
  }
  return out;
}

inline bool satisfies_gds(const FlagVector& v) {
  for (const auto& r : gds_residuals(v))
    if (r.value != 0) return false;
  return true;
}

namespace detail {

class ReductionCache {
 public:
  static ReductionCache& instance() {
    static ReductionCache cache;
    return cache;
  }

  LinearCombination reduce(RankSet s, int d) {
    std::lock_guard lock(mutex_);
    return reduce_locked(s, d);
  }

 private:
  // Eliminates the smallest offending element x (x = d-1, or x+1 also in S)
  // through the relation on S - {x} at the gap just left of x+1, solved for
  // its last term. Every new index set has a smaller sum of (element + 1),
  // so the recursion terminates.
  LinearCombination reduce_locked(RankSet s, int d) {
    if (s.is_sparse(d)) return {{s, Rational(1)}};
    auto key = std::make_pair(d, s.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int x = -1;
    int prev = -1;
    for (int e : s.elements()) {
      if (e == d - 1 || s.contains(e + 1)) {
        x = e;
        break;
      }
      prev = e;
    }
    const RankSet rest = s.without(x);
    const int lo = prev;
    const int hi = x + 1;
    const Rational solve_sign = ((hi - lo - 2) % 2 == 0) ? 1 : -1;

    LinearCombination out;
    const Rational base_coeff = ((hi - lo - 1) % 2 == 0) ? 0 : 2;
    if (base_coeff != 0)
      for (const auto& [t, c] : reduce_locked(rest, d)) add_term(out, t, solve_sign * base_coeff * c);
    for (int j = lo + 1; j <= hi - 2; ++j) {
      const Rational term_sign = ((j - lo - 1) % 2 == 0) ? 1 : -1;
      for (const auto& [t, c] : reduce_locked(rest.with(j), d)) add_term(out, t, -solve_sign * term_sign * c);
    }
    memo_.emplace(key, out);
    return out;
  }

  std::mutex mutex_;
  std::map<std::pair<int, std::uint32_t>, LinearCombination> memo_;
};

}  // namespace detail

/// Expresses f_S as a combination of sparse-basis flag numbers, valid for
/// every flag vector satisfying GDS.
inline LinearCombination reduce_index(RankSet s, int d) {
  if (d < 0 || d > kMaxDimension) throw invalid_params("dimension out of range");
  if (!s.fits(d)) throw invalid_params("index set {" + s.key() + "} exceeds dimension " + std::to_string(d));
  return detail::ReductionCache::instance().reduce(s, d);
}

/// Reduces every term of a combination.
inline LinearCombination reduce_combination(const LinearCombination& m, int d) {
  LinearCombination out;
  for (const auto& [s, c] : m)
    for (const auto& [t, a] : reduce_index(s, d)) add_term(out, t, c * a);
  return out;
}

/// Sparse-basis data; f_{} may be omitted (it is always 1).
using SparseFlagData = std::map<RankSet, Integer, DisplayOrder>;

/// Full flag vector from its values on the sparse basis.
inline FlagVector complete_from_sparse(const SparseFlagData& values, int d) {
  for (const auto& [s, v] : values) {
    if (!s.is_sparse(d)) throw invalid_params("f_" + s.key() + " is not a sparse-basis entry for d = " + std::to_string(d));
    if (s.empty() && v != 1) throw invalid_params("f_{} must equal 1");
  }
  auto value_of = [&](RankSet s) -> Integer {
    if (s.empty()) return 1;
    auto it = values.find(s);
    if (it == values.end()) throw incomplete_basis("sparse-basis entry f_" + s.key() + " is missing");
    return it->second;
  };
  for (RankSet s : sparse_basis(d)) (void)value_of(s);

  FlagVector out(d);
  for (RankSet s : RankSet::all(d)) {
    if (s.empty()) continue;
    Rational total = 0;
    for (const auto& [t, c] : reduce_index(s, d)) total += c * value_of(t);
    // GDS reductions have integral coefficients.
    if (!is_integral(total)) throw error("internal: non-integral completion for f_" + s.key());
    out.set(s, total.get_num());
  }
  return out;
}

inline SparseFlagData restrict_to_sparse(const FlagVector& v) {
  SparseFlagData out;
  for (RankSet s : sparse_basis(v.dim())) out.emplace(s, v.at(s));
  return out;
}

/// Euler's relation  sum_i (-1)^i f_i = 1 - (-1)^d.
inline bool euler_check(const FVector& f) {
  const int d = f.dim();
  Integer sum = 0;
  for (int i = 0; i < d; ++i) sum += (i % 2 == 0) ? f[i] : Integer(-f[i]);
  return sum == ((d % 2 == 0) ? 0 : 2);
}

}  // namespace flagvec
