#pragma once

// Linear functionals on flag vectors ("flag forms"), Kalai's convolution,
// the toric g_0/g_1 forms, and the inequality batteries for d = 5, 6, 7.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/families.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/flagalg.hpp"
#include "flagvec/lattice.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

/// sum_S c_S f_S^d with exact rational coefficients. Constants are
/// multiples of f_{} (which is 1 on every polytope).
class FlagForm {
 public:
  FlagForm() = default;
  explicit FlagForm(int d) : d_(d) {
    if (d < 0 || d > kMaxDimension) throw invalid_params("flag form dimension out of range");
  }
  FlagForm(int d, LinearCombination coeffs) : FlagForm(d) {
    for (auto& [s, c] : coeffs) add(s, c);
  }

  /// c * f_S at dimension d.
  static FlagForm flag(int d, RankSet s, const Rational& c = 1) {
    FlagForm m(d);
    m.add(s, c);
    return m;
  }
  static FlagForm constant(int d, const Rational& c) { return flag(d, RankSet{}, c); }

  int dim() const { return d_; }
  const LinearCombination& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  Rational coefficient(RankSet s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  FlagForm& add(RankSet s, const Rational& c) {
    if (!s.fits(d_)) throw invalid_params("index set {" + s.key() + "} exceeds dimension " + std::to_string(d_));
    add_term(coeffs_, s, c);
    return *this;
  }

  FlagForm& operator+=(const FlagForm& o) {
    require_same_dim(o);
    for (const auto& [s, c] : o.coeffs_) add_term(coeffs_, s, c);
    return *this;
  }
  FlagForm& operator-=(const FlagForm& o) {
    require_same_dim(o);
    for (const auto& [s, c] : o.coeffs_) add_term(coeffs_, s, -c);
    return *this;
  }
  FlagForm& operator*=(const Rational& k) {
    if (k == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [s, c] : coeffs_) c *= k;
    return *this;
  }

  friend FlagForm operator+(FlagForm a, const FlagForm& b) { return a += b; }
  friend FlagForm operator-(FlagForm a, const FlagForm& b) { return a -= b; }
  friend FlagForm operator-(FlagForm a) { return a *= Rational(-1); }
  friend FlagForm operator*(const Rational& k, FlagForm a) { return a *= k; }
  friend FlagForm operator*(FlagForm a, const Rational& k) { return a *= k; }

  /// Same form written in the sparse basis.
  FlagForm reduced() const { return FlagForm(d_, reduce_combination(coeffs_, d_)); }

  /// Index reversal S -> {d-1-s}: the form evaluated on the dual polytope.
  FlagForm dual() const {
    FlagForm out(d_);
    for (const auto& [s, c] : coeffs_) out.add(s.reversed(d_), c);
    return out;
  }

  /// e.g. "-6f_1 + 3f_02 - f_13 + 9"; constants last.
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    auto emit = [&](RankSet s, const Rational& c) {
      Rational mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += (c < 0) ? " - " : " + ";
      }
      if (s.empty()) {
        out += to_string(mag);
        return;
      }
      if (mag != 1) out += to_string(mag);
      out += "f_" + s.key();
    };
    for (const auto& [s, c] : coeffs_)
      if (!s.empty()) emit(s, c);
    if (auto it = coeffs_.find(RankSet{}); it != coeffs_.end()) emit(it->first, it->second);
    return out;
  }

  friend bool operator==(const FlagForm&, const FlagForm&) = default;

 private:
  void require_same_dim(const FlagForm& o) const {
    if (o.d_ != d_)
      throw dimension_mismatch("flag forms of dimensions " + std::to_string(d_) + " and " + std::to_string(o.d_));
  }

  int d_ = 0;
  LinearCombination coeffs_;
};

/// Equal on every flag vector satisfying GDS.
inline bool gds_equivalent(const FlagForm& a, const FlagForm& b) { return (a - b).reduced().empty(); }

inline bool is_zero_mod_gds(const FlagForm& m) { return m.reduced().empty(); }

/// sum_S c_S f_S. Missing entries are tolerated when the form's sparse
/// reduction only needs entries that are present.
inline Rational evaluate(const FlagForm& m, const FlagVector& v) {
  if (m.dim() != v.dim())
    throw dimension_mismatch("form of dimension " + std::to_string(m.dim()) + " applied to flag vector of dimension " +
                             std::to_string(v.dim()));
  bool direct = true;
  for (const auto& [s, c] : m.coeffs())
    if (!v.contains(s)) direct = false;
  const FlagForm& use = m;
  FlagForm reduced;
  if (!direct) reduced = m.reduced();
  Rational total = 0;
  for (const auto& [s, c] : (direct ? use : reduced).coeffs()) total += c * v.at(s);
  return total;
}

/// Kalai convolution: f_S^{d1} * f_T^{d2} = f_{S + {d1} + (T + d1 + 1)}^{d1+d2+1},
/// extended bilinearly.
inline FlagForm convolve(const FlagForm& m1, const FlagForm& m2) {
  const int d1 = m1.dim();
  const int d2 = m2.dim();
  FlagForm out(d1 + d2 + 1);
  for (const auto& [s, a] : m1.coeffs())
    for (const auto& [t, b] : m2.coeffs()) {
      RankSet u = RankSet::from_bits(s.bits() | t.shifted(d1 + 1).bits()).with(d1);
      out.add(u, a * b);
    }
  return out;
}

/// A function of a polytope given by its face lattice.
using LatticeFunctional = std::function<Rational(const FaceLattice&)>;

inline LatticeFunctional as_functional(FlagForm m) {
  return [m = std::move(m)](const FaceLattice& lattice) { return evaluate(m, flag_vector(lattice)); };
}

/// sum over d1-faces F of m1(F) * m2(P/F), computed on the actual faces and
/// quotient lattices rather than through the index-shift rule.
inline Rational face_sum(int d1, const LatticeFunctional& m1, const LatticeFunctional& m2, const FaceLattice& lattice) {
  if (d1 < 0 || d1 >= lattice.dim())
    throw dimension_mismatch("face dimension " + std::to_string(d1) + " is not a proper face dimension");
  Rational total = 0;
  for (FaceId face : lattice.faces_of_rank(d1)) {
    Rational left = m1(lower_interval(lattice, face));
    if (left == 0) continue;
    total += left * m2(quotient(lattice, face));
  }
  return total;
}

inline Rational evaluate_by_face_sum(const FlagForm& m1, const FlagForm& m2, const FaceLattice& lattice) {
  if (m1.dim() + m2.dim() + 1 != lattice.dim())
    throw dimension_mismatch("convolution of dimensions " + std::to_string(m1.dim()) + " and " +
                             std::to_string(m2.dim()) + " does not match lattice dimension " +
                             std::to_string(lattice.dim()));
  return face_sum(m1.dim(), as_functional(m1), as_functional(m2), lattice);
}

/// Toric g_0 = f_{}.
inline FlagForm g0_form(int d) { return FlagForm::constant(d, 1); }

/// Toric g_1 = f_0 - (d+1).
inline FlagForm g1_form(int d) {
  if (d < 1) throw invalid_params("g_1 needs d >= 1");
  return FlagForm::flag(d, RankSet{0}) - FlagForm::constant(d, d + 1);
}

inline std::pair<FlagForm, FlagForm> g_forms(int d) { return {g0_form(d), g1_form(d)}; }

/// The three convolutions whose sum gives 3f_2 >= 2f_1 + 2f_3 on 5-polytopes.
struct KalaiDerivation {
  /// g0^1 * g1^2 * g0^0,  g0^0 * g1^2 * g0^1,  g1^2 * g1^2.
  std::vector<FlagForm> summands;
  std::vector<FlagForm> reduced_summands;
  FlagForm total;
};

inline KalaiDerivation kalai_5d_form() {
  KalaiDerivation k;
  k.summands.push_back(convolve(convolve(g0_form(1), g1_form(2)), g0_form(0)));
  k.summands.push_back(convolve(convolve(g0_form(0), g1_form(2)), g0_form(1)));
  k.summands.push_back(convolve(g1_form(2), g1_form(2)));
  k.total = FlagForm(5);
  for (const FlagForm& m : k.summands) {
    k.reduced_summands.push_back(m.reduced());
    k.total += k.reduced_summands.back();
  }
  return k;
}

/// A flag form asserted to be nonnegative on every d-polytope.
struct Inequality {
  std::string name;
  FlagForm form;
  std::string source;
};

struct InequalityBattery {
  int d = 0;
  std::vector<Inequality> members;
};

namespace detail {

inline FlagForm f_combination(int d, std::initializer_list<std::pair<RankSet, Rational>> terms) {
  FlagForm m(d);
  for (const auto& [s, c] : terms) m.add(s, c);
  return m;
}

inline void add_with_dual(InequalityBattery& b, std::string name, FlagForm form, std::string source) {
  FlagForm dual_form = form.dual();
  b.members.push_back({name, form, source});
  b.members.push_back({name + "-dual", std::move(dual_form), source + " (dual)"});
}

}  // namespace detail

inline InequalityBattery battery(int d) {
  using detail::add_with_dual;
  using detail::f_combination;
  InequalityBattery b{d, {}};
  switch (d) {
    case 5: {
      add_with_dual(b, "vertex-degree", f_combination(5, {{RankSet{1}, 2}, {RankSet{0}, -5}}),
                    "every vertex of a 5-polytope lies in at least 5 edges: 2f_1 >= 5f_0");
      KalaiDerivation k = kalai_5d_form();
      const char* names[] = {"kalai-g0g1g0", "kalai-g0g1g0-reversed", "kalai-g1g1"};
      for (std::size_t i = 0; i < 3; ++i)
        b.members.push_back({names[i], k.summands[i], "convolution of nonnegative toric g forms"});
      b.members.push_back({"kalai", k.total, "sum of the three convolutions: 9f_2 - 6f_1 - 6f_3 >= 0"});
      break;
    }
    case 6: {
      add_with_dual(b, "vertex-degree", f_combination(6, {{RankSet{1}, 1}, {RankSet{0}, -3}}),
                    "every vertex of a 6-polytope lies in at least 6 edges: f_1 >= 3f_0");
      add_with_dual(b, "cd-c2dc2", f_combination(6, {{RankSet{0}, 1}, {RankSet{1}, -1}, {RankSet{2}, 1}, {RankSet{}, -21}}),
                    "<c^2dc^2 - 19c^6 | Psi> >= 0: f_0 - f_1 + f_2 >= 21");
      add_with_dual(b, "f2-bound", f_combination(6, {{RankSet{2}, 3}, {RankSet{1}, -2}, {RankSet{}, -63}}),
                    "3 x (cd-c2dc2) + vertex-degree: f_2 >= (2/3)f_1 + 21");
      break;
    }
    case 7: {
      add_with_dual(b, "vertex-degree", f_combination(7, {{RankSet{1}, 2}, {RankSet{0}, -7}}),
                    "every vertex of a 7-polytope lies in at least 7 edges: 2f_1 >= 7f_0");
      add_with_dual(b, "cd-c2dc3", f_combination(7, {{RankSet{0}, 1}, {RankSet{1}, -1}, {RankSet{2}, 1}, {RankSet{}, -36}}),
                    "<c^2dc^3 - 34c^7 | Psi> >= 0: f_0 - f_1 + f_2 >= 36");
      add_with_dual(b, "f2-bound", f_combination(7, {{RankSet{2}, 7}, {RankSet{1}, -5}, {RankSet{}, -252}}),
                    "7 x (cd-c2dc3) + vertex-degree: f_2 >= (5/7)f_1 + 36");
      break;
    }
    default:
      throw unsupported_dimension("inequality batteries exist for d in {5, 6, 7}, not " + std::to_string(d));
  }
  return b;
}

struct InequalityValue {
  std::string name;
  Rational value;
  bool satisfied = true;
};

/// Screening of a (possibly non-polytopal) flag vector.
struct CandidateReport {
  int d = 0;
  FlagVector flags;
  FVector f;
  bool euler = false;
  bool gds = false;
  std::vector<InequalityValue> inequalities;
  bool battery_passes = true;
  PropertyReport properties;
  /// f_1 <= f_2, which together with the trivial inequalities forces
  /// unimodality in dimension 6.
  bool rise_to_f2 = false;
};

inline CandidateReport check_candidate(const FlagVector& v) {
  const int d = v.dim();
  CandidateReport r;
  r.d = d;
  r.flags = v.is_complete() ? v : complete_from_sparse(restrict_to_sparse(v), d);
  r.f = r.flags.f_vector();
  r.euler = euler_check(r.f);
  r.gds = satisfies_gds(r.flags);
  for (const Inequality& ineq : battery(d).members) {
    Rational value = evaluate(ineq.form, r.flags);
    bool ok = value >= 0;
    r.battery_passes = r.battery_passes && ok;
    r.inequalities.push_back({ineq.name, value, ok});
  }
  r.properties = properties(r.f);
  r.rise_to_f2 = d >= 3 && r.f[1] <= r.f[2];
  return r;
}

inline CandidateReport check_candidate(const SparseFlagData& sparse, int d) {
  return check_candidate(complete_from_sparse(sparse, d));
}

}  // namespace flagvec
