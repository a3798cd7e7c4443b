#pragma once

// ab-index and cd-index of Eulerian flag data, over any exact coefficient
// ring: rationals for a concrete polytope, flag forms for symbolic
// extraction of cd-coefficients as linear functionals. Also the toric
// h- and g-vectors computed by recursion over the face lattice.

#include <algorithm>
#include <cctype>
#include <concepts>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/forms.hpp"
#include "flagvec/lattice.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

/// Coefficient rings usable in ab/cd polynomials: exact addition,
/// subtraction, and scaling by rationals.
template <class R>
concept CoefficientRing = std::copyable<R> && requires(R a, const R& b, const Rational& q) {
  { a += b };
  { a -= b };
  { q * b } -> std::convertible_to<R>;
};

inline bool ring_is_zero(const Rational& q) { return q == 0; }
inline bool ring_is_zero(const FlagForm& m) { return is_zero_mod_gds(m); }

// ---------------------------------------------------------------------------
// cd-words

/// A word in the noncommuting letters c (degree 1) and d (degree 2).
class CdWord {
 public:
  CdWord() = default;
  explicit CdWord(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
      if (ch != 'c' && ch != 'd') throw parse_error("cd-words use only the letters c and d");
  }

  const std::string& letters() const { return letters_; }
  int degree() const {
    int deg = 0;
    for (char ch : letters_) deg += (ch == 'c') ? 1 : 2;
    return deg;
  }

  /// Runs compressed with exponents, e.g. "c^2dc^2"; "1" for the empty word.
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      out += letters_[i];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  /// Ab-words (as bit masks of b positions) in the expansion c = a + b,
  /// d = ab + ba. Position p of the ab-word corresponds to face dimension p.
  std::vector<std::uint32_t> expansion() const {
    std::vector<std::uint32_t> words{0};
    int pos = 0;
    for (char ch : letters_) {
      std::vector<std::uint32_t> next;
      next.reserve(words.size() * 2);
      for (std::uint32_t w : words) {
        if (ch == 'c') {
          next.push_back(w);
          next.push_back(w | (std::uint32_t{1} << pos));
        } else {
          next.push_back(w | (std::uint32_t{1} << (pos + 1)));
          next.push_back(w | (std::uint32_t{1} << pos));
        }
      }
      words = std::move(next);
      pos += (ch == 'c') ? 1 : 2;
    }
    return words;
  }

  friend bool operator==(const CdWord&, const CdWord&) = default;

 private:
  std::string letters_;
};

/// Canonical order: reverse-lexicographic with c < d (compare from the last letter).
struct CdWordOrder {
  bool operator()(const CdWord& a, const CdWord& b) const {
    return std::lexicographical_compare(a.letters().rbegin(), a.letters().rend(), b.letters().rbegin(),
                                        b.letters().rend());
  }
};

/// Parses "c^2dc^2", "c2dc2" or "ccdcc".
inline CdWord parse_cd_word(std::string_view text) {
  std::string letters;
  std::size_t i = 0;
  if (text == "1") return CdWord{};
  while (i < text.size()) {
    char ch = text[i++];
    if (ch != 'c' && ch != 'd') throw parse_error("unexpected character in cd-word '" + std::string(text) + "'");
    if (i < text.size() && text[i] == '^') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    long count = 1;
    if (i > start) count = std::stol(std::string(text.substr(start, i - start)));
    else if (start > 0 && text[start - 1] == '^') throw parse_error("missing exponent in '" + std::string(text) + "'");
    if (count < 1 || count > 2 * kMaxDimension) throw parse_error("bad exponent in '" + std::string(text) + "'");
    letters.append(static_cast<std::size_t>(count), ch);
  }
  return CdWord(letters);
}

/// All cd-words of the given degree in canonical order; Fibonacci(n+1) many.
inline std::vector<CdWord> cd_words(int degree) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    cur.push_back('c');
    self(self, remaining - 1);
    cur.pop_back();
    if (remaining >= 2) {
      cur.push_back('d');
      self(self, remaining - 2);
      cur.pop_back();
    }
  };
  if (degree >= 0) rec(rec, degree);
  std::vector<CdWord> words;
  for (auto& w : out) words.emplace_back(w);
  std::sort(words.begin(), words.end(), CdWordOrder{});
  return words;
}

// ---------------------------------------------------------------------------
// Polynomials

/// Homogeneous polynomial of degree d in noncommuting a, b. The coefficient
/// of the word whose b-positions form S is stored at index S.
template <CoefficientRing R>
struct AbPolynomial {
  int degree = 0;
  std::vector<R> coeffs;

  const R& coefficient(RankSet s) const { return coeffs.at(s.bits()); }
};

template <CoefficientRing R>
struct CdPolynomial {
  int degree = 0;
  std::map<CdWord, R, CdWordOrder> terms;

  /// Coefficient of u; zero when u does not occur.
  R coefficient(const CdWord& u, const R& zero) const {
    if (u.degree() != degree)
      throw degree_mismatch("cd-word of degree " + std::to_string(u.degree()) + " in a polynomial of degree " +
                            std::to_string(degree));
    auto it = terms.find(u);
    return it == terms.end() ? zero : it->second;
  }
};

/// k_S = sum over T in S of (-1)^{|S - T|} f_T, from a function T -> f_T.
template <CoefficientRing R, class FlagNumber>
AbPolynomial<R> ab_index_from(int d, FlagNumber&& f) {
  AbPolynomial<R> p{d, {}};
  const std::uint32_t count = std::uint32_t{1} << d;
  p.coeffs.reserve(count);
  for (std::uint32_t s = 0; s < count; ++s) {
    R k = Rational(0) * f(RankSet{});
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      const int excess = RankSet::from_bits(s).size() - RankSet::from_bits(t).size();
      if (excess % 2 == 0) k += f(RankSet::from_bits(t));
      else k -= f(RankSet::from_bits(t));
      if (t == 0) break;
    }
    p.coeffs.push_back(std::move(k));
  }
  return p;
}

inline AbPolynomial<Rational> ab_index(const FlagVector& v) {
  if (!v.is_complete()) {
    for (RankSet s : RankSet::all(v.dim()))
      if (!v.contains(s)) throw missing_entry("flag number f_" + s.key() + " is not present");
  }
  return ab_index_from<Rational>(v.dim(), [&](RankSet s) { return Rational(v.at(s)); });
}

/// The ab-index with flag-form coefficients: k_S as a functional.
inline AbPolynomial<FlagForm> ab_index_symbolic(int d) {
  return ab_index_from<FlagForm>(d, [d](RankSet s) { return FlagForm::flag(d, s); });
}

/// Rewrites p in c = a + b and d = ab + ba by exact Gauss-Jordan elimination
/// over all cd-words of the degree. Throws not_eulerian when p is not in the
/// span of the cd-words.
template <CoefficientRing R>
CdPolynomial<R> ab_to_cd(const AbPolynomial<R>& p) {
  const int d = p.degree;
  if (p.coeffs.size() != (std::size_t{1} << d)) throw invalid_params("ab-polynomial is not homogeneous of its degree");
  const std::vector<CdWord> words = cd_words(d);
  const std::size_t rows = p.coeffs.size();
  const std::size_t cols = words.size();
  const R zero = Rational(0) * p.coeffs.front();

  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::uint32_t w : words[j].expansion()) a[w][j] += 1;
  std::vector<R> rhs = p.coeffs;

  std::vector<std::size_t> pivot_row(cols);
  std::vector<bool> used(rows, false);
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t r = 0;
    while (r < rows && (used[r] || a[r][j] == 0)) ++r;
    if (r == rows) throw error("internal: cd-word expansions are linearly dependent");
    used[r] = true;
    pivot_row[j] = r;
    const Rational inv = 1 / a[r][j];
    if (inv != 1) {
      for (auto& x : a[r]) x *= inv;
      rhs[r] = inv * rhs[r];
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Rational factor = a[i][j];
      for (std::size_t k = 0; k < cols; ++k)
        if (a[r][k] != 0) a[i][k] -= factor * a[r][k];
      rhs[i] -= factor * rhs[r];
    }
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (!used[i] && !ring_is_zero(rhs[i]))
      throw not_eulerian("flag data admits no cd-index (generalized Dehn-Sommerville relations fail)");

  CdPolynomial<R> out{d, {}};
  for (std::size_t j = 0; j < cols; ++j) {
    R& x = rhs[pivot_row[j]];
    if (!ring_is_zero(x)) out.terms.emplace(words[j], x);
  }
  (void)zero;
  return out;
}

inline CdPolynomial<Rational> cd_index(const FlagVector& v) { return ab_to_cd(ab_index(v)); }

inline CdPolynomial<Rational> cd_index(const FaceLattice& lattice) {
  if (!is_eulerian(lattice)) throw not_eulerian("face lattice is not Eulerian");
  return cd_index(flag_vector(lattice));
}

/// <u | Psi>.
inline Rational cd_coefficient(const FlagVector& v, const CdWord& u) {
  if (u.degree() != v.dim())
    throw degree_mismatch("cd-word of degree " + std::to_string(u.degree()) + " for a " + std::to_string(v.dim()) +
                          "-dimensional flag vector");
  return cd_index(v).coefficient(u, Rational(0));
}

inline Rational cd_coefficient(const FaceLattice& lattice, const CdWord& u) {
  if (!is_eulerian(lattice)) throw not_eulerian("face lattice is not Eulerian");
  return cd_coefficient(flag_vector(lattice), u);
}

namespace detail {

inline const CdPolynomial<FlagForm>& symbolic_cd_index(int d) {
  static std::mutex mutex;
  static std::map<int, CdPolynomial<FlagForm>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, ab_to_cd(ab_index_symbolic(d))).first;
  return it->second;
}

}  // namespace detail

/// The flag form m with m(v) = <u | Psi(v)> for every Eulerian flag vector v.
inline FlagForm cd_word_to_flag_form(const CdWord& u, int d) {
  if (d < 0 || d > kMaxDimension) throw invalid_params("dimension out of range");
  if (u.degree() != d)
    throw degree_mismatch("cd-word " + u.str() + " has degree " + std::to_string(u.degree()) + ", not " +
                          std::to_string(d));
  return detail::symbolic_cd_index(d).coefficient(u, FlagForm(d));
}

/// Flag form of a rational combination of cd-words of degree d.
inline FlagForm cd_polynomial_to_flag_form(const CdPolynomial<Rational>& p) {
  FlagForm out(p.degree);
  for (const auto& [u, c] : p.terms) out += c * cd_word_to_flag_form(u, p.degree);
  return out;
}

/// Every cd-coefficient is nonnegative.
inline bool stanley_nonneg_check(const FaceLattice& lattice) {
  for (const auto& [u, c] : cd_index(lattice).terms)
    if (c < 0) return false;
  return true;
}

/// Canonical text, e.g. "c^3 + 2dc + 2cd"; "0" for the zero polynomial.
inline std::string to_string(const CdPolynomial<Rational>& p) {
  std::string out;
  for (const auto& [u, c] : p.terms) {
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (u.letters().empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag);
    out += u.str();
  }
  return out.empty() ? "0" : out;
}

/// Inverse of to_string for polynomials of a known or inferred degree.
inline CdPolynomial<Rational> parse_cd_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw parse_error("empty cd-polynomial");
  CdPolynomial<Rational> p{-1, {}};
  if (s == "0") {
    p.degree = 0;
    return p;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw parse_error("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff = (i > start) ? parse_rational(s.substr(start, i - start)) : Rational(1);
    std::size_t word_start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string_view word_text(s.data() + word_start, i - word_start);
    if (word_text.empty() && i == start) throw parse_error("empty term in '" + s + "'");
    CdWord u = word_text.empty() ? CdWord{} : parse_cd_word(word_text);
    if (p.degree < 0) p.degree = u.degree();
    if (u.degree() != p.degree) throw parse_error("cd-polynomial is not homogeneous");
    auto [it, inserted] = p.terms.emplace(u, sign * coeff);
    if (!inserted) it->second += sign * coeff;
    if (it->second == 0) p.terms.erase(it);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Toric h and g

/// Toric g-vector (g_0, ..., g_{floor(d/2)}) with the full toric h-vector.
struct ToricGVector {
  int d = 0;
  std::vector<Rational> g;
  std::vector<Rational> h;
};

namespace detail {

using Poly = std::vector<Rational>;

inline void add_scaled_product(Poly& into, const Poly& a, const Poly& b) {
  if (into.size() < a.size() + b.size() - 1) into.resize(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) into[i + j] += a[i] * b[j];
  }
}

/// g_0 = h_0, g_i = h_i - h_{i-1} for 1 <= i <= floor(r/2).
inline Poly truncate_g(const Poly& h, int r) {
  Poly g;
  for (int i = 0; i <= r / 2; ++i) {
    Rational hi = (static_cast<std::size_t>(i) < h.size()) ? h[static_cast<std::size_t>(i)] : Rational(0);
    Rational prev = (i > 0 && static_cast<std::size_t>(i - 1) < h.size()) ? h[static_cast<std::size_t>(i - 1)] : Rational(0);
    g.push_back(hi - prev);
  }
  return g;
}

}  // namespace detail

/// h(P,t) = sum over faces F < P (empty face included) of g(F,t) (t-1)^{d-1-dim F};
/// g(P,t) keeps the first floor(d/2)+1 differences of h. Each face's g is
/// computed once, bottom-up, since it depends only on the faces below it.
inline ToricGVector toric_g(const FaceLattice& lattice) {
  using detail::Poly;
  if (!is_eulerian(lattice)) throw not_eulerian("face lattice is not Eulerian");
  const int d = lattice.dim();
  std::vector<Poly> powers{{Rational(1)}};
  for (int k = 1; k <= d + 1; ++k) {
    Poly next(static_cast<std::size_t>(k) + 1, Rational(0));
    for (std::size_t i = 0; i < powers.back().size(); ++i) {
      next[i + 1] += powers.back()[i];
      next[i] -= powers.back()[i];
    }
    powers.push_back(std::move(next));
  }

  const std::size_t n = lattice.size();
  std::vector<Poly> h(n);
  std::vector<Poly> g(n);
  for (FaceId f = 0; f < n; ++f) {
    const int r = lattice.rank(f);
    g[f] = (f == lattice.bottom()) ? Poly{Rational(1)} : detail::truncate_g(h[f], r);
    for (FaceId above : lattice.above(f)) {
      const int exponent = lattice.rank(above) - 1 - r;
      detail::add_scaled_product(h[above], g[f], powers[static_cast<std::size_t>(exponent)]);
    }
  }
  ToricGVector out;
  out.d = d;
  out.h = h[lattice.top()];
  out.h.resize(static_cast<std::size_t>(d) + 1, Rational(0));
  out.g = g[lattice.top()];
  return out;
}

}  // namespace flagvec
