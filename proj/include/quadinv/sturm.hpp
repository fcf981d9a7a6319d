#pragma once

/**
 * @file sturm.hpp
 * @brief Sturm-sequence real root counting and isolation over Q.
 *
 * This is the oracle the closed-form certificates are audited against, so it
 * only uses remainder sequences and exact sign evaluation. Isolating
 * intervals are half-open (lo, hi] unless lo == hi, in which case the root
 * is exactly lo.
 */

#include <optional>
#include <vector>

#include "quadinv/exactnum.hpp"

namespace quadinv {

struct RationalInterval {
  Rational lo, hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

struct RootCount {
  int distinct_real = 0;
  std::vector<RationalInterval> isolating_intervals;
  std::vector<int> multiplicities;
};

class SturmSequence {
 public:
  /// p must be nonzero; the sequence is built on its square-free part.
  explicit SturmSequence(const Poly1& p);

  const Poly1& base() const { return seq_.front(); }
  int variations(const Rational& x) const;
  /// Distinct roots in (a, b].
  int count_half_open(const Rational& a, const Rational& b) const;
  /// Distinct roots in [a, b].
  int count_closed(const Rational& a, const Rational& b) const;

 private:
  std::vector<Poly1> seq_;
};

/// Every real root of p lies strictly inside (-B, B).
Rational cauchy_bound(const Poly1& p);

struct SturmOptions {
  bool refine = true;  ///< shrink intervals below 2^-32 (display only)
};

/// Distinct real roots of p on [lo, hi]; a missing bound is infinite.
/// Throws arithmetic_error for the zero polynomial or lo > hi.
RootCount sturm_count(const Poly1& p, const std::optional<Rational>& lo = std::nullopt,
                      const std::optional<Rational>& hi = std::nullopt, SturmOptions opts = {});

/// Halves an isolating interval of a root of s.base() until it is narrower
/// than width or collapses onto an exact root.
RationalInterval refine_root(const SturmSequence& s, RationalInterval iv, const Rational& width);

/// One bisection step keeping the root of s.base() isolated by iv.
RationalInterval bisect_root(const SturmSequence& s, const RationalInterval& iv);

/// The rational with the smallest denominator in [a, b].
Rational simplest_rational_between(const Rational& a, const Rational& b);

/// Exact value of the root of p isolated by iv, if that root is rational.
std::optional<Rational> rational_root_in(const SturmSequence& s, RationalInterval iv);

/// Distinct real rational roots of p in increasing order.
std::vector<Rational> rational_roots(const Poly1& p);

/// Sign of h at the root of s.base() isolated by iv. Requires h to be
/// nonzero there; the interval is narrowed until h has no root in it.
int sign_at_root(const Poly1& h, const SturmSequence& s, RationalInterval& iv);

/// Enclosure of { p(x) : x in iv } by interval Horner evaluation.
RationalInterval eval_interval(const Poly1& p, const RationalInterval& iv);

}  // namespace quadinv
