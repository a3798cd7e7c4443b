#pragma once

// Closed-form f-vectors of cyclic polytopes and connected sums, the four
// f-vector shape properties, and the candidate flag data of dimensions 6 and 7.

#include <optional>
#include <string>
#include <vector>

#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/flagalg.hpp"
#include "flagvec/rank_set.hpp"

namespace flagvec {

struct Verdict {
  bool holds = true;
  /// First interior index k witnessing a failure.
  std::optional<int> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Convexity (C), log-convexity (L), unimodality (U) and Barany's property (B).
struct PropertyReport {
  Verdict convex;
  Verdict log_convex;
  Verdict unimodal;
  Verdict barany;
};

inline PropertyReport properties(const FVector& f) {
  const int d = f.dim();
  for (int i = 0; i < d; ++i)
    if (f[i] <= 0) throw invalid_params("f-vector components must be positive");

  PropertyReport report;
  auto fail = [](Verdict& v, int k) {
    if (v.holds) {
      v.holds = false;
      v.witness = k;
    }
  };
  for (int k = 1; k + 1 < d; ++k) {
    if (2 * f[k] < f[k - 1] + f[k + 1]) fail(report.convex, k);
    if (f[k] * f[k] < f[k - 1] * f[k + 1]) fail(report.log_convex, k);
    if (f[k] < f[0] && f[k] < f[d - 1]) fail(report.barany, k);
  }
  // Non-strict rise then non-strict fall; plateaus are allowed anywhere.
  bool descended = false;
  for (int k = 0; k + 1 < d; ++k) {
    if (f[k] > f[k + 1]) {
      descended = true;
    } else if (f[k] < f[k + 1] && descended) {
      fail(report.unimodal, k);
      break;
    }
  }
  return report;
}

namespace detail {

inline Integer exact_quotient(const Integer& num, long den) {
  Rational q(num, den);
  q.canonicalize();
  if (!is_integral(q)) throw error("internal: closed form is not integral");
  return q.get_num();
}

}  // namespace detail

/// f(C_5(n)) = (n, n(n-1)/2, 2(n^2-6n+10), 5(n-3)(n-4)/2, (n-3)(n-4)).
inline FVector cyclic_f5(long n) {
  if (n < 6) throw invalid_params("C_5(n) needs n >= 6");
  const Integer m = n;
  return FVector({m, detail::exact_quotient(m * (m - 1), 2), 2 * (m * m - 6 * m + 10),
                  detail::exact_quotient(5 * (m - 3) * (m - 4), 2), (m - 3) * (m - 4)});
}

inline FVector cyclic_f7(long n) {
  if (n < 8) throw invalid_params("C_7(n) needs n >= 8");
  const Integer m = n;
  return FVector({m, detail::exact_quotient(m * (m - 1), 2), detail::exact_quotient(m * (m - 1) * (m - 2), 6),
                  detail::exact_quotient(5 * (m - 4) * (m * m - 8 * m + 21), 6),
                  detail::exact_quotient((m - 4) * (3 * m * m - 31 * m + 84), 2),
                  detail::exact_quotient(7 * (m - 4) * (m - 5) * (m - 6), 6),
                  detail::exact_quotient((m - 4) * (m - 5) * (m - 6), 3)});
}

/// f-vector of the connected sum of a simplicial P and a simple Q of equal
/// dimension: componentwise sum, minus one for vertices and facets.
/// Simpliciality and simplicity are the caller's responsibility.
inline FVector connected_sum_f(const FVector& p, const FVector& q) {
  if (p.dim() != q.dim()) throw dimension_mismatch("connected sum needs equal dimensions");
  const int d = p.dim();
  if (d < 3) throw invalid_params("connected sum needs d >= 3");
  std::vector<Integer> out;
  for (int i = 0; i < d; ++i) out.push_back(p[i] + q[i] - ((i == 0 || i == d - 1) ? 1 : 0));
  return FVector(std::move(out));
}

/// f(C_7(n) # C_7(n)^dual) from its closed forms and palindromic symmetry.
inline FVector p7n(long n) {
  if (n < 8) throw invalid_params("P_7^n needs n >= 8");
  const Integer m = n;
  Integer f0 = detail::exact_quotient((m - 3) * (m * m - 12 * m + 41), 3);
  Integer f1 = detail::exact_quotient(7 * m * m * m - 102 * m * m + 515 * m - 840, 6);
  Integer f2 = detail::exact_quotient(5 * m * m * m - 66 * m * m + 313 * m - 504, 3);
  Integer f3 = detail::exact_quotient(5 * (m - 4) * (m * m - 8 * m + 21), 3);
  return FVector({f0, f1, f2, f3, f2, f1, f0});
}

/// f0 + C(f0,3) - 2 C(f0,2) for a 2-neighbourly polytope, in closed form.
inline Rational neighborly_gap(const Integer& f0) {
  if (f0 < 1) throw invalid_params("neighborly_gap needs f0 >= 1");
  Rational r(f0 * (f0 - 2) * (f0 - 7), 6);
  r.canonicalize();
  return r;
}

/// r1 = f1^2/(f0 f2), r2 = f2^2/(f1 f3), r3 = f3^2/(f2 f4).
struct RatioTriple {
  long n = 0;
  Rational r1, r2, r3;
};

inline RatioTriple log_ratios(const FVector& f, long n = 0) {
  if (f.dim() < 5) throw invalid_params("log_ratios needs at least five components");
  auto ratio = [&](int k) {
    Rational r(f[k] * f[k], f[k - 1] * f[k + 1]);
    r.canonicalize();
    return r;
  };
  return {n, ratio(1), ratio(2), ratio(3)};
}

inline std::vector<RatioTriple> logconv_scan(long n_min, long n_max) {
  if (n_min < 8 || n_max < n_min) throw invalid_params("logconv scan needs 8 <= n_min <= n_max");
  std::vector<RatioTriple> out;
  for (long n = n_min; n <= n_max; ++n) out.push_back(log_ratios(p7n(n), n));
  return out;
}

/// Closed forms of the three ratios as rational functions of n.
inline RatioTriple logconv_closed_form(long n) {
  if (n < 8) throw invalid_params("closed-form ratios need n >= 8");
  const Integer m = n;
  const Integer a = 7 * m * m * m - 102 * m * m + 515 * m - 840;
  const Integer b = 5 * m * m * m - 66 * m * m + 313 * m - 504;
  const Integer c = (m - 4) * (m * m - 8 * m + 21);
  const Integer e = (m - 3) * (m * m - 12 * m + 41);
  RatioTriple t{n, Rational(a * a, 4 * e * b), Rational(2 * b * b, 5 * c * a), Rational(25 * c * c, b * b)};
  t.r1.canonicalize();
  t.r2.canonicalize();
  t.r3.canonicalize();
  return t;
}

/// One row of the convexity scan for C_5(n): f1 - (f0 + f2)/2.
struct ConvexityRow {
  long n = 0;
  FVector f;
  Rational gap;
};

inline std::vector<ConvexityRow> convexity5_scan(long n_min, long n_max) {
  if (n_min < 6 || n_max < n_min) throw invalid_params("convexity scan needs 6 <= n_min <= n_max");
  std::vector<ConvexityRow> out;
  for (long n = n_min; n <= n_max; ++n) {
    FVector f = cyclic_f5(n);
    Rational gap = Rational(f[1]) - Rational(f[0] + f[2], 2);
    gap.canonicalize();
    out.push_back({n, f, gap});
  }
  return out;
}

/// Sparse flag data f^(l) for dimension 6, listed in the order
/// f0..f4; f02 f03 f04 f13 f14 f24; f024.
inline SparseFlagData candidate_6d(long ell) {
  if (ell < 0) throw invalid_params("candidate family needs l >= 0");
  const Integer l = ell;
  return {
      {RankSet{0}, 22 + l},         {RankSet{1}, 111 + 3 * l},     {RankSet{2}, 110 + 2 * l},
      {RankSet{3}, 35 + 4 * l},     {RankSet{4}, 21 + 6 * l},      {RankSet{0, 2}, 780 + 15 * l},
      {RankSet{0, 3}, 1340 + 50 * l}, {RankSet{0, 4}, 1080 + 51 * l}, {RankSet{1, 3}, 2010 + 90 * l},
      {RankSet{1, 4}, 2160 + 132 * l}, {RankSet{2, 4}, 1260 + 114 * l}, {RankSet{0, 2, 4}, 6480 + 396 * l},
  };
}

inline SparseFlagData candidate_7d() {
  return {
      {RankSet{0}, 134},        {RankSet{1}, 469},        {RankSet{2}, 371},        {RankSet{3}, 70},
      {RankSet{4}, 371},        {RankSet{5}, 469},        {RankSet{0, 2}, 2814},    {RankSet{0, 3}, 6580},
      {RankSet{0, 4}, 10360},   {RankSet{0, 5}, 8484},    {RankSet{1, 3}, 9870},    {RankSet{1, 4}, 20720},
      {RankSet{1, 5}, 21210},   {RankSet{2, 4}, 13790},   {RankSet{2, 5}, 20720},   {RankSet{3, 5}, 9870},
      {RankSet{0, 2, 4}, 62160}, {RankSet{0, 2, 5}, 84840}, {RankSet{0, 3, 5}, 84840}, {RankSet{1, 3, 5}, 127260},
  };
}

}  // namespace flagvec
