#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "flagvec/errors.hpp"

namespace flagvec {

/// Largest polytope dimension the library handles.
inline constexpr int kMaxDimension = 8;

/// A subset of face dimensions {0, ..., d-1}, the index set S of a flag number f_S.
class RankSet {
 public:
  constexpr RankSet() = default;
  constexpr RankSet(std::initializer_list<int> ranks) {
    for (int r : ranks) insert(r);
  }

  static constexpr RankSet from_bits(std::uint32_t bits) {
    RankSet s;
    s.bits_ = bits;
    return s;
  }

  /// All subsets of {0, ..., d-1}, in increasing bit order.
  static std::vector<RankSet> all(int d) {
    std::vector<RankSet> out;
    out.reserve(std::size_t{1} << d);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << d); ++b) out.push_back(from_bits(b));
    return out;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int r) const { return r >= 0 && r < 32 && ((bits_ >> r) & 1u); }
  constexpr void insert(int r) { bits_ |= (std::uint32_t{1} << r); }
  constexpr void erase(int r) { bits_ &= ~(std::uint32_t{1} << r); }

  constexpr RankSet with(int r) const {
    RankSet s = *this;
    s.insert(r);
    return s;
  }
  constexpr RankSet without(int r) const {
    RankSet s = *this;
    s.erase(r);
    return s;
  }

  constexpr bool is_subset_of(RankSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest element, or -1 for the empty set.
  constexpr int max() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  /// True iff every element is below d.
  constexpr bool fits(int d) const { return d >= 32 || (bits_ >> d) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// {x + offset : x in S}.
  constexpr RankSet shifted(int offset) const {
    return from_bits(offset >= 0 ? bits_ << offset : bits_ >> -offset);
  }

  /// {d-1-x : x in S}, the index set of the dual flag number.
  RankSet reversed(int d) const {
    RankSet out;
    for (int x : elements()) out.insert(d - 1 - x);
    return out;
  }

  /// No two consecutive elements and nothing above d-2.
  constexpr bool is_sparse(int d) const {
    if (d <= 0) return bits_ == 0;
    return (bits_ & (bits_ >> 1)) == 0 && fits(d - 1);
  }

  /// Concatenated digits in increasing order, e.g. "024"; "" for the empty set.
  std::string key() const {
    std::string out;
    for (int x : elements()) out.push_back(static_cast<char>('0' + x));
    return out;
  }

  static RankSet from_key(std::string_view key) {
    RankSet s;
    int prev = -1;
    for (char ch : key) {
      if (ch < '0' || ch > '9') throw parse_error("bad flag index key '" + std::string(key) + "'");
      int r = ch - '0';
      if (r <= prev) throw parse_error("flag index key must be strictly increasing: '" + std::string(key) + "'");
      s.insert(r);
      prev = r;
    }
    return s;
  }

  friend constexpr bool operator==(RankSet, RankSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Ordering used for display: by size, then lexicographically by elements.
struct DisplayOrder {
  bool operator()(RankSet a, RankSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t diff = a.bits() ^ b.bits();
    return diff != 0 && (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

/// Ordering used for associative containers.
struct BitOrder {
  constexpr bool operator()(RankSet a, RankSet b) const { return a.bits() < b.bits(); }
};

}  // namespace flagvec
