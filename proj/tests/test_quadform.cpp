#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "quadinv/quadform.hpp"

using namespace quadinv;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
const Rational O(0), I(1);
const Rational H = R("1/2");
}  // namespace

TEST_CASE("form triples of the representative maps") {
  CHECK(form_of(shapes::shear()) == FormTriple{O, O, O});
  CHECK(form_of(shapes::indefinite_canonical()) == FormTriple{O, H, O});
  // pq is stored as a11 = 1/2, so these carry a quarter where the raw
  // coefficients would give a half.
  const Rational Q = R("1/4");
  CHECK(form_of(shapes::definite_canonical(O, O)) == FormTriple{Q, O, Q});
  CHECK(form_of(shapes::semidefinite_canonical(O)) == FormTriple{O, O, Q});
  CHECK(form_of(shapes::semidefinite_canonical(I)) == FormTriple{O, O, Q});
}

TEST_CASE("classes") {
  CHECK(classify_form({O, O, O}).tag == FormTag::Zero);
  const FormClass ind = classify_form({O, H, O});
  CHECK(ind.tag == FormTag::Indefinite);
  CHECK(ind.det_omega1 == R("-1/4"));
  CHECK(classify_form({O, O, H}).tag == FormTag::SemiDefinite);
  CHECK(classify_form({H, O, H}).tag == FormTag::Definite);
  CHECK(classify_form({H, O, H}).det_omega1 == I);
  CHECK(classify_form({R("-1"), O, R("-1")}).tag == FormTag::Definite);
}

TEST_CASE("form triple against the minors oracle") {
  testkit::RandomRationals rnd(51);
  for (int k = 0; k < 50; ++k) {
    const QuadMap f = rnd.map();
    const mpq_class a[3] = {testkit::to_mpq(f.a.c20), testkit::to_mpq(Rational(2) * f.a.c11),
                            testkit::to_mpq(f.a.c02)};
    const mpq_class b[3] = {testkit::to_mpq(f.b.c20), testkit::to_mpq(Rational(2) * f.b.c11),
                            testkit::to_mpq(f.b.c02)};
    // The oracle works on the raw pq coefficient 2 a11, so its minors carry
    // the factor 2 where a11 enters.
    const oracle::Minors m = oracle::minors(a, b);
    const FormTriple t = form_of(f);
    CHECK(testkit::to_mpq(Rational(4) * t.alpha) == m.two_alpha);
    CHECK(testkit::to_mpq(Rational(2) * t.beta) == m.two_beta);
    CHECK(testkit::to_mpq(Rational(4) * t.gamma) == m.two_gamma);
  }
}

TEST_CASE("light vectors") {
  const LightVectors axes = light_vectors({O, H, O});
  REQUIRE(axes.directions.size() == 2);
  CHECK(*axes.directions[0].exact == Point2{I, O});
  CHECK(*axes.directions[1].exact == Point2{O, I});

  const LightVectors diag = light_vectors({H, O, -H});
  REQUIRE(diag.directions.size() == 2);
  for (const auto& d : diag.directions) {
    REQUIRE(d.exact);
    CHECK(d.exact->first == I);
    CHECK(d.exact->second.abs() == I);
  }

  const LightVectors semi = light_vectors({O, O, H});
  REQUIRE(semi.directions.size() == 1);
  CHECK(*semi.directions[0].exact == Point2{I, O});

  CHECK(light_vectors({O, O, O}).all_vectors);
  CHECK(light_vectors({H, O, H}).directions.empty());
}

TEST_CASE("irrational light vectors are certified") {
  const FormTriple t{H, O, R("-1")};  // c1^2 - 2 c2^2
  const LightVectors lv = light_vectors(t);
  REQUIRE(lv.directions.size() == 2);
  for (const auto& d : lv.directions) {
    CHECK_FALSE(d.exact);
    const auto v = d.approx();
    CHECK(std::abs(v[0] * v[0] - 2.0 * v[1] * v[1]) < 1e-6 * (v[0] * v[0] + v[1] * v[1]));
    CHECK(d.minimal_poly(d.interval.lo).sign() * d.minimal_poly(d.interval.hi).sign() <= 0);
  }
}

TEST_CASE("auxiliary forms on R^4") {
  testkit::RandomRationals rnd(52);
  const FormTriple t{rnd(), rnd(), rnd()};
  CHECK(omega2_omega3(t, {I, O, O, I}) == std::pair{t.beta, Rational(2)});
  CHECK(omega2_omega3(t, {O, O, O, O}) == std::pair{O, O});

  const Vec4 c = definite_case_vector({H, O, H});
  CHECK(c == Vec4{H, O, O, -H});
  CHECK(omega2_omega3({H, O, H}, c) == std::pair{O, -H});

  CHECK(definite_case_vector({I, H, I}) == Vec4{I, R("-3/2"), R("-1"), R("-1/4")});
  CHECK(omega2_omega3({I, H, I}, definite_case_vector({I, H, I})).second == R("-7/2"));
  CHECK(omega2_omega3({I, O, I}, definite_case_vector({I, O, I})).second == R("-2"));

  CHECK_THROWS_AS(definite_case_vector({O, H, O}), std::invalid_argument);
}

TEST_CASE("omega3 identity on random definite forms") {
  testkit::RandomRationals rnd(53);
  int tried = 0;
  while (tried < 30) {
    const FormTriple t{rnd(), rnd(), rnd()};
    if (classify_form(t).tag != FormTag::Definite) continue;
    ++tried;
    const auto [w2, w3] = omega2_omega3(t, definite_case_vector(t));
    CHECK(w2 == O);
    CHECK(w3 == Rational(-2) * (t.alpha * t.gamma + Rational(3) * t.beta * t.beta));
  }
}
