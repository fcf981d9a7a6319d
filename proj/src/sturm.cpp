#include "quadinv/sturm.hpp"

#include <algorithm>

namespace quadinv {

SturmSequence::SturmSequence(const Poly1& p) {
  if (p.is_zero()) throw arithmetic_error("sturm sequence of the zero polynomial");
  seq_.push_back(squarefree_part(p));
  if (seq_.back().degree() == 0) return;
  seq_.push_back(derivative(seq_.back()));
  while (seq_.back().degree() > 0) {
    Poly1 r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    if (r.is_zero()) break;
    seq_.push_back(-r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0, last = 0;
  for (const Poly1& f : seq_) {
    const int s = f(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
  if (b < a) return 0;
  return count_half_open(a, b) + (base()(a).is_zero() ? 1 : 0);
}

Rational cauchy_bound(const Poly1& p) {
  if (p.is_zero()) throw arithmetic_error("root bound of the zero polynomial");
  Rational m;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, c[i].abs());
  return Rational(1) + m / p.lead().abs();
}

RationalInterval bisect_root(const SturmSequence& s, const RationalInterval& iv) {
  if (iv.is_exact()) return iv;
  const Rational mid = iv.midpoint();
  if (s.base()(mid).is_zero()) return {mid, mid};
  if (s.count_half_open(iv.lo, mid) == 1) return {iv.lo, mid};
  return {mid, iv.hi};
}

RationalInterval refine_root(const SturmSequence& s, RationalInterval iv, const Rational& width) {
  while (!iv.is_exact() && iv.width() >= width) iv = bisect_root(s, iv);
  return iv;
}

namespace {

void isolate(const SturmSequence& s, const Rational& a, const Rational& b, int n,
             std::vector<RationalInterval>& out) {
  // n = number of roots in (a, b]
  if (n == 0) return;
  if (n == 1) {
    if (s.base()(b).is_zero()) {
      out.push_back({b, b});
    } else {
      out.push_back({a, b});
    }
    return;
  }
  const Rational mid = (a + b) / Rational(2);
  const int left = s.count_half_open(a, mid);
  isolate(s, a, mid, left, out);
  isolate(s, mid, b, n - left, out);
}

}  // namespace

RootCount sturm_count(const Poly1& p, const std::optional<Rational>& lo,
                      const std::optional<Rational>& hi, SturmOptions opts) {
  if (p.is_zero()) throw arithmetic_error("root count of the zero polynomial");
  if (lo && hi && *hi < *lo) throw arithmetic_error("root count on an empty interval");

  const SturmSequence s(p);
  RootCount rc;
  if (s.base().degree() == 0) return rc;

  const Rational bound = cauchy_bound(s.base());
  const Rational a = lo ? *lo : -bound;
  const Rational b = hi ? *hi : bound;
  if (b < a) return rc;

  if (lo && s.base()(a).is_zero()) rc.isolating_intervals.push_back({a, a});
  isolate(s, a, b, s.count_half_open(a, b), rc.isolating_intervals);
  rc.distinct_real = static_cast<int>(rc.isolating_intervals.size());

  if (opts.refine) {
    const Rational width(BigInt(1), BigInt(1) << 32);
    for (auto& iv : rc.isolating_intervals) iv = refine_root(s, iv, width);
  }

  const std::vector<Poly1> parts = squarefree_decomposition(p);
  std::vector<std::optional<SturmSequence>> part_seqs(parts.size());
  for (const RationalInterval& iv : rc.isolating_intervals) {
    int mult = 0;
    for (std::size_t i = 0; i < parts.size() && mult == 0; ++i) {
      if (parts[i].degree() < 1) continue;
      if (!part_seqs[i]) part_seqs[i].emplace(parts[i]);
      const bool hit = iv.is_exact() ? parts[i](iv.lo).is_zero()
                                     : part_seqs[i]->count_half_open(iv.lo, iv.hi) > 0;
      if (hit) mult = static_cast<int>(i) + 1;
    }
    rc.multiplicities.push_back(mult);
  }
  return rc;
}

Rational simplest_rational_between(const Rational& a, const Rational& b) {
  if (b < a) return simplest_rational_between(b, a);
  const BigInt fa = floor(a);
  if (Rational(fa) == a) return a;
  const BigInt ca = fa + 1;
  if (Rational(ca) <= b) {
    // prefer the integer of least magnitude when several fit
    if (a.sign() < 0 && b.sign() > 0) return Rational(0);
    if (b.sign() <= 0) return Rational(BigInt(floor(b)));
    return Rational(ca);
  }
  // a, b share the integer part fa; recurse on the reciprocal fractional parts
  const Rational fl(fa);
  return fl + simplest_rational_between((b - fl).reciprocal(), (a - fl).reciprocal()).reciprocal();
}

namespace {

/// Absolute leading coefficient of the primitive integer multiple of p.
BigInt primitive_lead(const Poly1& p) {
  BigInt l = 1, g = 0;
  for (const Rational& c : p.coeffs()) l = lcm(l, c.den());
  for (const Rational& c : p.coeffs()) g = gcd(g, BigInt(c.num() * (l / c.den())));
  const BigInt lead = p.lead().num() * (l / p.lead().den());
  return abs(BigInt(lead / g));
}

}  // namespace

std::optional<Rational> rational_root_in(const SturmSequence& s, RationalInterval iv) {
  const Poly1& p = s.base();
  if (iv.is_exact()) return p(iv.lo).is_zero() ? std::optional<Rational>(iv.lo) : std::nullopt;
  if (p.degree() == 1) return -p.coeff(0) / p.lead();
  const BigInt l = primitive_lead(p);
  const Rational threshold(BigInt(1), BigInt(l * l));
  while (true) {
    const Rational c = simplest_rational_between(iv.lo, iv.hi);
    // lo itself lies outside the half-open interval
    if (iv.lo < c && c <= iv.hi && p(c).is_zero()) return c;
    if (iv.width() < threshold) return std::nullopt;
    iv = bisect_root(s, iv);
    if (iv.is_exact()) return iv.lo;
  }
}

std::vector<Rational> rational_roots(const Poly1& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  const SturmSequence s(p);
  const RootCount rc = sturm_count(p, std::nullopt, std::nullopt, {.refine = false});
  for (const auto& iv : rc.isolating_intervals)
    if (auto r = rational_root_in(s, iv)) out.push_back(*r);
  return out;
}

int sign_at_root(const Poly1& h, const SturmSequence& s, RationalInterval& iv) {
  if (iv.is_exact()) return h(iv.lo).sign();
  if (h.is_zero()) return 0;
  if (h.degree() == 0) return h.lead().sign();
  const SturmSequence hs(h);
  while (!iv.is_exact() && hs.count_closed(iv.lo, iv.hi) > 0) iv = bisect_root(s, iv);
  return h(iv.is_exact() ? iv.lo : iv.hi).sign();
}

RationalInterval eval_interval(const Poly1& p, const RationalInterval& iv) {
  RationalInterval acc{Rational(), Rational()};
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational prods[4] = {acc.lo * iv.lo, acc.lo * iv.hi, acc.hi * iv.lo, acc.hi * iv.hi};
    const auto [mn, mx] = std::minmax_element(std::begin(prods), std::end(prods));
    acc = {*mn + c[k], *mx + c[k]};
  }
  return acc;
}

}  // namespace quadinv
