#include <doctest.h>

#include "oracle.hpp"
#include "quadinv/quadform.hpp"
#include "quadinv/quadmap.hpp"

using namespace quadinv;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
const Rational O(0), I(1);
}  // namespace

TEST_CASE("evaluation applies the factor-two convention") {
  CHECK(eval(shapes::shear(), Rational(2), Rational(3)) == Point2{Rational(11), Rational(3)});
  CHECK(eval(shapes::indefinite_canonical(), I, I) == Point2{Rational(2), Rational(2)});
  CHECK(eval(QuadMap{}, R("5/3"), R("-2")) == Point2{O, O});

  const QuadRow r{I, Rational(3), O, R("1/2"), O, Rational(7)};  // p^2 + 6pq + p + 7
  CHECK(r(Rational(2), I) == Rational(4 + 12 + 2 + 7));
}

TEST_CASE("matrix form round-trips") {
  testkit::RandomRationals rnd(41);
  for (int k = 0; k < 20; ++k) {
    const QuadRow r = rnd.row();
    CHECK(QuadRow::from_matrix(r.matrix()) == r);
  }
}

TEST_CASE("compositions with identity and swap") {
  const QuadMap s = shapes::shear();
  CHECK(compose_source(s, AffineMap2::identity()) == s);
  CHECK(compose_target(AffineMap2::identity(), s) == s);

  const QuadMap swapped = compose_source(s, AffineMap2::swap());
  CHECK(swapped.a == QuadRow{I, O, O, O, R("1/2"), O});  // q + p^2
  CHECK(swapped.b == QuadRow{O, O, O, R("1/2"), O, O});  // p

  CHECK_THROWS_AS(compose_source(s, AffineMap2::linear(I, I, I, I)), arithmetic_error);
  CHECK_THROWS_AS(compose_target(AffineMap2::linear(O, O, O, O), s), arithmetic_error);
}

TEST_CASE("compositions agree pointwise") {
  testkit::RandomRationals rnd(42);
  for (int k = 0; k < 40; ++k) {
    const QuadMap f = rnd.map();
    const AffineMap2 t = rnd.invertible_affine();
    const QuadMap fs = compose_source(f, t), tf = compose_target(t, f);
    const Rational p = rnd(), q = rnd();
    const Point2 tp = t(p, q);
    CHECK(eval(fs, p, q) == eval(f, tp.first, tp.second));
    const Point2 fp = eval(f, p, q);
    CHECK(eval(tf, p, q) == t(fp.first, fp.second));
  }
}

TEST_CASE("affine maps") {
  testkit::RandomRationals rnd(43);
  for (int k = 0; k < 20; ++k) {
    const AffineMap2 t = rnd.invertible_affine(), u = rnd.invertible_affine();
    CHECK(then(t, t.inverse()) == AffineMap2::identity());
    const Rational p = rnd(), q = rnd();
    const Point2 up = u(p, q);
    CHECK(then(t, u)(p, q) == t(up.first, up.second));
    CHECK(eval(as_quadmap(t), p, q) == t(p, q));
  }
  CHECK_THROWS_AS(AffineMap2::linear(I, Rational(2), Rational(2), Rational(4)).inverse(), arithmetic_error);
}

TEST_CASE("shear that removes b11") {
  testkit::RandomRationals rnd(44);
  QuadMap f = rnd.map();
  f.a.c11 = rnd.nonzero();
  const AffineMap2 t = AffineMap2::linear(I, O, -f.b.c11 / f.a.c11, I);
  CHECK(compose_target(t, f).b.c11.is_zero());
}

TEST_CASE("target change that clears b20 and b02 when the minor vanishes") {
  // a20 b02 = a02 b20: the q~ quadratic part is then a multiple of the
  // p~ one in the p^2 and q^2 slots.
  QuadMap f{{Rational(2), I, Rational(4), O, O, O}, {I, Rational(5), Rational(2), O, O, O}};
  REQUIRE(f.a.c20 * f.b.c02 == f.a.c02 * f.b.c20);
  const QuadMap g = compose_target(AffineMap2::linear(I, O, -f.b.c20 / f.a.c20, I), f);
  CHECK(g.b.c20 == O);
  CHECK(g.b.c02 == O);
}

TEST_CASE("equivalence checks") {
  const QuadMap s = shapes::shear();
  CHECK(check_equivalence(s, s, AffineMap2::identity(), AffineMap2::identity()));

  const QuadMap f2 = compose_source(s, AffineMap2::swap());
  // swap o shear = (q, p + q^2) while f2 o swap = shear: different maps.
  CHECK_FALSE(check_equivalence(s, f2, AffineMap2::swap(), AffineMap2::swap()));
  CHECK(check_equivalence(s, f2, AffineMap2::identity(), AffineMap2::swap()));

  const QuadMap ind = shapes::indefinite_canonical();
  testkit::RandomRationals rnd(45);
  for (int k = 0; k < 20; ++k)
    CHECK_FALSE(check_equivalence(s, ind, rnd.invertible_linear(), rnd.invertible_linear()));

  CHECK_THROWS_AS(check_equivalence(s, s, AffineMap2::shift(I, O), AffineMap2::identity()),
                  std::invalid_argument);
}
