#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "quadinv/preimage.hpp"

using namespace quadinv;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
const Rational O(0), I(1);

bool has_exact(const PreimageResult& r, const Point2& x) {
  return std::any_of(r.points.begin(), r.points.end(),
                     [&](const PreimagePoint& p) { return p.exact && *p.exact == x; });
}
}  // namespace

TEST_CASE("fibre of p^2 + q, q^2 + p over (2, 2)") {
  const QuadMap f = shapes::indefinite_canonical();
  const PreimageResult r = preimage_count(f, Rational(2), Rational(2));
  // p~ - q~ = (p - q)(p + q - 1): the line p = q gives (1, 1) and (-2, -2),
  // the line p + q = 1 gives the pair with q^2 - q - 1 = 0.
  CHECK(r.count() == 4);
  CHECK(has_exact(r, {I, I}));
  CHECK(has_exact(r, {Rational(-2), Rational(-2)}));
  for (const PreimagePoint& p : r.points) {
    if (p.exact) {
      CHECK(eval(f, p.exact->first, p.exact->second) == Point2{Rational(2), Rational(2)});
      continue;
    }
    const double q = p.q_box.midpoint().to_double(), pp = p.p_box.midpoint().to_double();
    CHECK(std::abs(q * q - q - 1.0) < 1e-6);
    CHECK(std::abs(pp + q - 1.0) < 1e-6);
  }
}

TEST_CASE("empty fibre over (0, -2)") {
  const PreimageResult r = preimage_count(shapes::indefinite_canonical(), O, Rational(-2));
  CHECK(r.count() == 0);
  CHECK(r.q_roots.distinct_real == 0);
}

TEST_CASE("the shear has single-point fibres") {
  testkit::RandomRationals rnd(61);
  for (int k = 0; k < 20; ++k) {
    const Rational tp = rnd(), tq = rnd();
    const PreimageResult r = preimage_count(shapes::shear(), tp, tq);
    REQUIRE(r.count() == 1);
    CHECK(*r.points[0].exact == Point2{tp - tq * tq, tq});
  }
}

TEST_CASE("affine conjugates of the shear have single-point fibres") {
  testkit::RandomRationals rnd(62);
  for (int k = 0; k < 20; ++k) {
    const QuadMap f =
        compose_target(rnd.invertible_affine(), compose_source(shapes::shear(), rnd.invertible_affine()));
    const Rational tp = rnd(), tq = rnd();
    const PreimageResult r = preimage_count(f, tp, tq);
    REQUIRE(r.count() == 1);
    REQUIRE(r.points[0].exact);
    CHECK(eval(f, r.points[0].exact->first, r.points[0].exact->second) == Point2{tp, tq});
  }
}

TEST_CASE("degenerate and invalid fibres") {
  // p~ = p^2, q~ = p^2 + 1: the fibre over (1, 2) is two lines.
  const QuadMap f{{I, O, O, O, O, O}, {I, O, O, O, O, I}};
  CHECK_THROWS_AS(preimage_count(f, I, Rational(2)), degenerate_fiber);
  CHECK(preimage_count(f, I, O).count() == 0);

  const QuadMap constant{{O, O, O, O, O, I}, {O, O, O, O, O, Rational(3)}};
  CHECK_THROWS_AS(preimage_count(constant, I, I), std::invalid_argument);
}

TEST_CASE("fibres with irrational points are boxed tightly") {
  // p~ = p^2, q~ = q: over (2, 5) the points are (+-sqrt 2, 5).
  const QuadMap f{{I, O, O, O, O, O}, {O, O, O, O, R("1/2"), O}};
  const PreimageResult r = preimage_count(f, Rational(2), Rational(5));
  REQUIRE(r.count() == 2);
  for (const PreimagePoint& p : r.points) {
    CHECK_FALSE(p.exact);
    CHECK(p.q_box.contains(Rational(5)));
    const double x = p.p_box.midpoint().to_double();
    CHECK(std::abs(std::abs(x) - std::sqrt(2.0)) < 1e-6);
  }
}

TEST_CASE("spiral order") {
  const auto s = spiral_order(1);
  CHECK(s.size() == 25);
  CHECK(s.front() == std::pair{0, 0});
  CHECK(s[1] == std::pair{-1, -1});
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int a = std::max(std::abs(s[i - 1].first), std::abs(s[i - 1].second));
    const int b = std::max(std::abs(s[i].first), std::abs(s[i].second));
    CHECK(a <= b);
    if (a == b) CHECK(s[i - 1] < s[i]);
  }
}

TEST_CASE("falsify on the indefinite representative") {
  const QuadMap f = shapes::indefinite_canonical();
  const auto w = falsify(f, classify_form(form_of(f)), 4);
  REQUIRE(w);
  // Frozen regression value: (0, 0) is hit by (0, 0) and (-1, -1).
  CHECK(w->kind == WitnessKind::Collision);
  CHECK(w->target == Point2{O, O});
  REQUIRE(w->preimages.size() == 2);
  for (const PreimagePoint& p : w->preimages) {
    REQUIRE(p.exact);
    CHECK(eval(f, p.exact->first, p.exact->second) == w->target);
  }
}

TEST_CASE("falsify result does not depend on the thread count") {
  const QuadMap f = shapes::semidefinite_canonical(O);
  const FormClass cls = classify_form(form_of(f));
  const auto w1 = falsify(f, cls, 4, {1});
  const auto w8 = falsify(f, cls, 4, {8});
  REQUIRE(w1);
  REQUIRE(w8);
  CHECK(w1->target == w8->target);
  CHECK(w1->kind == w8->kind);
}

TEST_CASE("falsify finds nothing for the shear") {
  const QuadMap s = shapes::shear();
  CHECK_FALSE(falsify(s, classify_form(form_of(s)), 0));
  CHECK_FALSE(falsify(s, classify_form(form_of(s)), 3));
}
