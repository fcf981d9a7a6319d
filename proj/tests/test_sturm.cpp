#include <doctest.h>

#include "oracle.hpp"
#include "quadinv/sturm.hpp"

using namespace quadinv;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
const Rational O(0), I(1);
}  // namespace

TEST_CASE("counts on the whole line") {
  const RootCount two = sturm_count(Poly1{R("-2"), O, I});
  CHECK(two.distinct_real == 2);
  REQUIRE(two.isolating_intervals.size() == 2);
  CHECK(two.isolating_intervals[0].hi < two.isolating_intervals[1].lo + Rational(0) + R("1/1000000"));
  for (const RationalInterval& iv : two.isolating_intervals) {
    const double m = iv.midpoint().to_double();
    CHECK(std::abs(m * m - 2.0) < 1e-6);
  }

  const Poly1 d = pow(Poly1::linear_root(I), 2) * Poly1{I, O, I};
  const RootCount one = sturm_count(d);
  CHECK(one.distinct_real == 1);
  CHECK(one.multiplicities == std::vector<int>{2});
  CHECK(one.isolating_intervals[0].contains(I));

  CHECK(sturm_count(Poly1{Rational(4), I, Rational(4), O, I}).distinct_real == 0);
  CHECK(sturm_count(Poly1{Rational(5)}).distinct_real == 0);
}

TEST_CASE("no real roots of q^4 + 4q^2 + q + 4, by interval lower bound") {
  const Poly1 p{Rational(4), I, Rational(4), O, I};
  // On |q| <= cauchy bound the polynomial stays positive on every small box.
  const Rational B = cauchy_bound(p);
  const Rational step = R("1/64");
  for (Rational x = -B; x < B; x += step) {
    const RationalInterval v = eval_interval(p, {x, x + step});
    CHECK(v.lo > O);
  }
}

TEST_CASE("half-open and closed counts") {
  const Poly1 p{R("-1"), O, I};  // roots -1, 1
  const SturmSequence s(p);
  CHECK(s.count_half_open(R("-1"), I) == 1);
  CHECK(s.count_closed(R("-1"), I) == 2);
  CHECK(sturm_count(p, R("-1"), I).distinct_real == 2);
  CHECK(sturm_count(p, O, Rational(5)).distinct_real == 1);
  CHECK(sturm_count(p, Rational(2), Rational(5)).distinct_real == 0);
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(sturm_count(Poly1{}), arithmetic_error);
  CHECK_THROWS_AS(sturm_count(Poly1{I, I}, I, O), arithmetic_error);
}

TEST_CASE("isolating intervals are disjoint and refined") {
  // (x - 1/3)(x - 1/2)(x + 7)(x^2 - 3)
  const Poly1 p = Poly1::linear_root(R("1/3")) * Poly1::linear_root(R("1/2")) *
                  Poly1::linear_root(R("-7")) * Poly1{R("-3"), O, I};
  const RootCount rc = sturm_count(p);
  CHECK(rc.distinct_real == 5);
  const Rational w = Rational(BigInt(1), BigInt(1) << 32);
  for (std::size_t i = 0; i < rc.isolating_intervals.size(); ++i) {
    const RationalInterval& iv = rc.isolating_intervals[i];
    CHECK((iv.is_exact() || iv.width() < w));
    if (i > 0) CHECK(rc.isolating_intervals[i - 1].hi < iv.lo);
  }
}

TEST_CASE("rational roots") {
  const Poly1 p = Poly1::linear_root(R("-5/7")) * Poly1::linear_root(R("3/2")) * Poly1{R("-2"), O, I};
  CHECK(rational_roots(p) == std::vector<Rational>{R("-5/7"), R("3/2")});
  CHECK(rational_roots(Poly1{R("-2"), O, I}).empty());
  CHECK(simplest_rational_between(R("1/3"), R("1/2")) == R("1/2"));
  CHECK(simplest_rational_between(R("-7/3"), R("-2/1")) == R("-2"));
  CHECK(simplest_rational_between(R("3/10"), R("4/10")) == R("1/3"));
}

TEST_CASE("sign at an algebraic root") {
  const Poly1 p{R("-2"), O, I};  // roots +-sqrt 2
  const SturmSequence s(p);
  RationalInterval iv{I, Rational(2)};
  CHECK(sign_at_root(Poly1{R("-7/5"), I}, s, iv) == 1);   // sqrt2 - 1.4 > 0
  CHECK(sign_at_root(Poly1{R("-3/2"), I}, s, iv) == -1);  // sqrt2 - 1.5 < 0
}

TEST_CASE("count is additive on coprime products") {
  testkit::RandomRationals rnd(31);
  for (int k = 0; k < 40; ++k) {
    const Poly1 a{rnd(), rnd(), rnd.nonzero()}, b{rnd(), rnd(), rnd(), rnd.nonzero()};
    if (gcd(a, b).degree() > 0) continue;
    CHECK(sturm_count(a * b).distinct_real == sturm_count(a).distinct_real + sturm_count(b).distinct_real);
  }
}
