#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

/// Face numbers (f_0, ..., f_{d-1}) of a d-polytope.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<Integer> components) : f_(std::move(components)) {}

  int dim() const { return static_cast<int>(f_.size()); }
  const Integer& operator[](int i) const { return f_.at(static_cast<std::size_t>(i)); }
  Integer& operator[](int i) { return f_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& components() const { return f_; }

  FVector reversed() const { return FVector(std::vector<Integer>(f_.rbegin(), f_.rend())); }
  bool is_palindromic() const { return *this == reversed(); }

  /// Comma separated, e.g. "8,28,52,50,20".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (i) out += ',';
      out += to_string(f_[i]);
    }
    return out;
  }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<Integer> f_;
};

/// Flag numbers f_S of a d-polytope, S a subset of {0, ..., d-1}; f_{} = 1.
///
/// Entries may be partially present (sparse data awaiting completion);
/// `at` throws missing_entry for an absent index set.
class FlagVector {
 public:
  using Entries = std::map<RankSet, Integer, DisplayOrder>;

  FlagVector() = default;
  explicit FlagVector(int d) : d_(d) {
    if (d < 0 || d > kMaxDimension)
      throw invalid_params("flag vector dimension must lie in [0, " + std::to_string(kMaxDimension) + "]");
    entries_.emplace(RankSet{}, 1);
  }

  int dim() const { return d_; }
  const Entries& entries() const { return entries_; }

  bool contains(RankSet s) const { return entries_.count(s) != 0; }
  bool is_complete() const { return entries_.size() == (std::size_t{1} << d_); }

  const Integer& at(RankSet s) const {
    auto it = entries_.find(s);
    if (it == entries_.end()) throw missing_entry("flag number f_" + s.key() + " is not present");
    return it->second;
  }
  const Integer& operator[](RankSet s) const { return at(s); }

  void set(RankSet s, Integer value) {
    if (!s.fits(d_)) throw invalid_params("index set {" + s.key() + "} exceeds dimension " + std::to_string(d_));
    if (s.empty() && value != 1) throw invalid_params("f_{} must equal 1");
    entries_[s] = std::move(value);
  }

  FVector f_vector() const {
    std::vector<Integer> f;
    for (int i = 0; i < d_; ++i) f.push_back(at(RankSet{i}));
    return FVector(std::move(f));
  }

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  int d_ = 0;
  Entries entries_{{RankSet{}, Integer(1)}};
};

}  // namespace flagvec
