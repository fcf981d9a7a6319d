#include "quadinv/preimage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace quadinv {

std::string_view to_string(WitnessKind k) {
  return k == WitnessKind::Collision ? "Collision" : "MissingValue";
}

namespace {

// Polynomials in p whose coefficients live in Q[q]/(m); index k multiplies p^k.
using KPoly = std::vector<Poly1>;

Poly1 reduce(const Poly1& x, const Poly1& m) { return divmod(x, m).remainder; }

void trim(KPoly& x) {
  while (!x.empty() && x.back().is_zero()) x.pop_back();
}

Poly1 inverse_mod(const Poly1& c, const Poly1& m) {
  const XGcd r = xgcd(c, m);
  if (r.g.degree() != 0) throw std::logic_error("inverse_mod of a zero divisor");
  return reduce(r.s, m);
}

KPoly monic_mod(KPoly a, const Poly1& m) {
  if (a.empty()) return a;
  const Poly1 inv = inverse_mod(a.back(), m);
  for (Poly1& c : a) c = reduce(c * inv, m);
  return a;
}

KPoly rem_mod(KPoly a, const KPoly& b, const Poly1& m) {
  const Poly1 inv = inverse_mod(b.back(), m);
  while (!a.empty() && a.size() >= b.size()) {
    const Poly1 c = reduce(a.back() * inv, m);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = reduce(a[shift + i] - c * b[i], m);
    trim(a);
  }
  return a;
}

struct Branch {
  Poly1 m;  // monic, square-free
  KPoly g;  // monic gcd over Q[q]/(m), empty if both inputs vanish
};

// Euclid over Q[q]/(m), splitting m whenever a leading coefficient turns out
// to be a zero divisor.
void split_gcd(const Poly1& m, KPoly a, KPoly b, std::vector<Branch>& out) {
  if (m.degree() < 1) return;
  for (KPoly* x : {&a, &b}) {
    for (Poly1& c : *x) c = reduce(c, m);
    trim(*x);
  }
  for (KPoly* x : {&a, &b}) {
    if (x->empty()) continue;
    const Poly1 d = gcd(x->back(), m);
    if (d.degree() > 0) {
      split_gcd(d, a, b, out);
      split_gcd(exact_div(m, d), a, b, out);
      return;
    }
  }
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) {
    out.push_back({m, monic_mod(std::move(a), m)});
    return;
  }
  KPoly r = rem_mod(a, b, m);
  split_gcd(m, std::move(b), std::move(r), out);
}

Rational sqrt_lower(const Rational& x) {
  if (x.sign() <= 0) return Rational(0);
  if (auto s = exact_sqrt(x)) return *s;
  Rational r = Rational::from_double(std::sqrt(x.to_double()) * (1 - 1e-12));
  while (r * r > x) r = r / Rational(2);
  return r;
}

Rational sqrt_upper(const Rational& x) {
  if (x.sign() <= 0) return Rational(0);
  if (auto s = exact_sqrt(x)) return *s;
  Rational r = Rational::from_double(std::sqrt(x.to_double()) * (1 + 1e-12));
  while (r * r < x) r = (r + Rational(1)) * Rational(2);
  return r;
}

PreimagePoint exact_point(const Rational& p, const Rational& q) {
  return {Point2{p, q}, {p, p}, {q, q}};
}

const Rational& display_width() {
  static const Rational w(BigInt(1), BigInt(1) << 32);
  return w;
}

class FibreSolver {
 public:
  explicit FibreSolver(std::vector<PreimagePoint>& out) : out_(out) {}

  void solve(const Branch& br) {
    if (br.g.empty()) throw degenerate_fiber("fibre contains a curve");
    const int deg = static_cast<int>(br.g.size()) - 1;
    if (deg == 0) return;
    if (deg == 1) {
      linear(br.m, -br.g[0]);
      return;
    }
    if (deg != 2) throw std::logic_error("fibre gcd of degree above two");
    quadratic(br.m, br.g[1], br.g[0]);
  }

 private:
  // p = value(q) on every real root of m
  void linear(const Poly1& m, const Poly1& value) {
    if (m.degree() == 1) {
      const Rational q0 = -m.coeff(0);
      out_.push_back(exact_point(value(q0), q0));
      return;
    }
    for (const RationalInterval& iv : sturm_count(m).isolating_intervals) {
      if (iv.is_exact()) {
        out_.push_back(exact_point(value(iv.lo), iv.lo));
      } else {
        out_.push_back({std::nullopt, eval_interval(value, iv), iv});
      }
    }
  }

  // p^2 + c1 p + c0 = 0 on every real root of m
  void quadratic(const Poly1& m, const Poly1& c1, const Poly1& c0) {
    const Poly1 disc = reduce(c1 * c1 - Rational(4) * c0, m);
    const Poly1 d = disc.is_zero() ? m : gcd(disc, m);
    if (d.degree() > 0) linear(d, reduce(Rational(-1, 2) * c1, d));
    const Poly1 rest = exact_div(m, d);
    if (rest.degree() < 1) return;

    if (rest.degree() == 1) {
      const Rational q0 = -rest.coeff(0);
      const Poly1 in_p{c0(q0), c1(q0), Rational(1)};
      const Rational delta = in_p.coeff(1) * in_p.coeff(1) - Rational(4) * in_p.coeff(0);
      if (delta.sign() < 0) return;
      if (auto s = exact_sqrt(delta)) {
        out_.push_back(exact_point((-in_p.coeff(1) - *s) / Rational(2), q0));
        out_.push_back(exact_point((-in_p.coeff(1) + *s) / Rational(2), q0));
        return;
      }
      for (const RationalInterval& iv : sturm_count(in_p).isolating_intervals)
        out_.push_back({std::nullopt, iv, {q0, q0}});
      return;
    }

    const SturmSequence seq(rest);
    for (RationalInterval iv : sturm_count(rest).isolating_intervals) {
      if (sign_at_root(disc, seq, iv) < 0) continue;
      iv = refine_root(seq, iv, display_width());
      RationalInterval dv = eval_interval(disc, iv);
      while (dv.lo.sign() <= 0 && !iv.is_exact()) {
        iv = bisect_root(seq, iv);
        dv = eval_interval(disc, iv);
      }
      const RationalInterval cv = eval_interval(c1, iv);
      const Rational s_lo = sqrt_lower(dv.lo), s_hi = sqrt_upper(dv.hi);
      const Rational half(1, 2);
      out_.push_back({std::nullopt, {half * (-cv.hi - s_hi), half * (-cv.lo - s_lo)}, iv});
      out_.push_back({std::nullopt, {half * (-cv.hi + s_lo), half * (-cv.lo + s_hi)}, iv});
    }
  }

  std::vector<PreimagePoint>& out_;
};

}  // namespace

PreimageResult preimage_count(const QuadMap& f, const Rational& tp, const Rational& tq) {
  if (f.a.is_constant() && f.b.is_constant())
    throw std::invalid_argument("preimage_count needs a non-constant map");

  QuadRow ra = f.a, rb = f.b;
  ra.c00 -= tp;
  rb.c00 -= tq;
  const BiPoly A = ra.in_p(), B = rb.in_p();

  PreimageResult res;
  if (A.degree() <= 0 && B.degree() <= 0) {
    // neither equation involves p: the fibre is empty or a union of lines
    const Poly1 x = A.coeffs.empty() ? Poly1() : A.coeffs[0];
    const Poly1 y = B.coeffs.empty() ? Poly1() : B.coeffs[0];
    if (x.is_zero() && y.is_zero()) throw degenerate_fiber("fibre is the whole plane");
    const Poly1 g = x.is_zero() ? y : (y.is_zero() ? x : gcd(x, y));
    res.resolvent = g;
    if (g.degree() >= 1) {
      res.q_roots = sturm_count(g);
      if (res.q_roots.distinct_real > 0) throw degenerate_fiber("fibre contains a line q = const");
    }
    return res;
  }

  res.resolvent = resultant_in_one_var(A, B);
  if (res.resolvent.is_zero()) throw degenerate_fiber("resultant vanishes identically");
  if (res.resolvent.degree() < 1) return res;
  res.q_roots = sturm_count(res.resolvent);

  // Peel rational roots off first so they give exact preimages.
  Poly1 m = squarefree_part(res.resolvent);
  std::vector<Poly1> pieces;
  for (const Rational& r : rational_roots(m)) {
    pieces.push_back(Poly1::linear_root(r));
    m = exact_div(m, pieces.back());
  }
  if (m.degree() >= 1) pieces.push_back(monic(m));

  std::vector<Branch> branches;
  for (const Poly1& piece : pieces) split_gcd(piece, A.coeffs, B.coeffs, branches);

  FibreSolver solver(res.points);
  for (const Branch& br : branches) solver.solve(br);

  std::sort(res.points.begin(), res.points.end(), [](const PreimagePoint& x, const PreimagePoint& y) {
    if (x.q_box.lo != y.q_box.lo) return x.q_box.lo < y.q_box.lo;
    return x.p_box.lo < y.p_box.lo;
  });
  return res;
}

std::vector<std::pair<int, int>> spiral_order(int bound) {
  std::vector<std::pair<int, int>> out;
  const int n = 2 * std::max(bound, 0);
  for (int ring = 0; ring <= n; ++ring)
    for (int i = -ring; i <= ring; ++i)
      for (int j = -ring; j <= ring; ++j)
        if (std::max(std::abs(i), std::abs(j)) == ring) out.emplace_back(i, j);
  return out;
}

namespace {

std::optional<Witness> probe(const QuadMap& f, int i, int j) {
  const Point2 target{Rational(BigInt(i), BigInt(2)), Rational(BigInt(j), BigInt(2))};
  try {
    PreimageResult r = preimage_count(f, target.first, target.second);
    if (r.count() == 1) return std::nullopt;
    Witness w;
    w.kind = r.count() == 0 ? WitnessKind::MissingValue : WitnessKind::Collision;
    w.target = target;
    w.preimages = std::move(r.points);
    return w;
  } catch (const degenerate_fiber&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Witness> falsify(const QuadMap& f, const FormClass& /*cls*/, int search_bound,
                               FalsifyOptions opts) {
  const auto order = spiral_order(search_bound);
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  // Evaluate one ring at a time; inside a ring, collect everything and then
  // pick the earliest hit so the answer does not depend on scheduling.
  std::size_t begin = 0;
  while (begin < order.size()) {
    const int ring = std::max(std::abs(order[begin].first), std::abs(order[begin].second));
    std::size_t end = begin;
    while (end < order.size() &&
           std::max(std::abs(order[end].first), std::abs(order[end].second)) == ring)
      ++end;

    std::vector<std::optional<Witness>> found(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (std::size_t k = next++; k < end; k = next++) {
        try {
          found[k - begin] = probe(f, order[k].first, order[k].second);
        } catch (...) {
          errors[k - begin] = std::current_exception();
        }
      }
    };
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(end - begin));
    if (n <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      if (found[k]) return found[k];
    }
    begin = end;
  }
  return std::nullopt;
}

}  // namespace quadinv
