#include <doctest.h>

#include "oracle.hpp"
#include "quadinv/exactnum.hpp"

using namespace quadinv;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(R("1/2") + R("1/3") == R("5/6"));
  const Rational x = R("2/4") * Rational(2);
  CHECK(x == Rational(1));
  CHECK(x.den() == 1);
  CHECK(x.str() == "1");
  CHECK(R("-6/4").str() == "-3/2");
  CHECK(R("6/4").str() == "3/2");
  CHECK(rat_arith(R("3"), R("4"), ArithOp::sub) == R("-1"));
  CHECK_THROWS_AS(rat_arith(Rational(1), Rational(0), ArithOp::div), arithmetic_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), arithmetic_error);
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(R(""), parse_error);
  CHECK_THROWS_AS(R("1/0"), parse_error);
  CHECK_THROWS_AS(R("1.5"), parse_error);
  CHECK_THROWS_AS(R("x"), parse_error);
  CHECK_THROWS_AS(R("1/"), parse_error);
  CHECK_THROWS_AS(R("6/-4"), parse_error);  // the sign belongs to the numerator
  CHECK(R("+7").str() == "7");
  CHECK(R("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("from_double is exact") {
  CHECK(Rational::from_double(0.5) == R("1/2"));
  CHECK(Rational::from_double(-3.0) == R("-3"));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  CHECK(Rational::from_double(0.1) != R("1/10"));
}

TEST_CASE("floor, ceil, exact_sqrt") {
  CHECK(floor(R("-7/2")) == -4);
  CHECK(ceil(R("-7/2")) == -3);
  CHECK(floor(R("5")) == 5);
  CHECK(*exact_sqrt(R("9/4")) == R("3/2"));
  CHECK_FALSE(exact_sqrt(R("2")).has_value());
  CHECK_FALSE(exact_sqrt(R("-4")).has_value());
}

TEST_CASE("polynomial evaluation") {
  CHECK(Poly1::monomial(Rational(1), 4)(Rational(3)) == Rational(81));
  const Poly1 p{Rational(1), Rational(-2), Rational(2), Rational(-2), Rational(1)};
  CHECK(p(Rational(1)).is_zero());
  CHECK(Poly1{}(R("17/3")).is_zero());
  CHECK(Poly1{}.degree() == -1);
  CHECK(Poly1{Rational(0), Rational(0)}.is_zero());
}

TEST_CASE("derivative of the monic quartic") {
  const Rational a1 = R("2/3"), a2 = R("-5"), a3 = R("7/2"), a4 = R("1");
  const Poly1 p{a4, a3, a2, a1, Rational(1)};
  CHECK(derivative(p) == Poly1{a3, Rational(2) * a2, Rational(3) * a1, Rational(4)});
}

TEST_CASE("gcd and square-free part") {
  const Poly1 xm1 = Poly1::linear_root(Rational(1));
  const Poly1 x2p1{Rational(1), Rational(0), Rational(1)};
  CHECK(gcd(Poly1{Rational(-1), Rational(0), Rational(1)}, xm1) == xm1);

  const Poly1 p = xm1 * xm1 * x2p1;
  const Poly1 sf = squarefree_part(p);
  CHECK(sf == xm1 * x2p1);
  CHECK(gcd(sf, derivative(sf)).degree() == 0);
  CHECK(exact_div(p, sf) == xm1);

  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == x2p1);
  CHECK(parts[1] == xm1);

  CHECK_THROWS_AS(gcd(Poly1{}, Poly1{}), arithmetic_error);
  CHECK_THROWS_AS(exact_div(x2p1, xm1), arithmetic_error);
  CHECK_THROWS_AS(divmod(x2p1, Poly1{}), arithmetic_error);
}

TEST_CASE("xgcd certificate") {
  testkit::RandomRationals rnd(11);
  for (int k = 0; k < 50; ++k) {
    const Poly1 a{rnd(), rnd(), rnd(), Rational(1)}, b{rnd(), rnd(), rnd.nonzero()};
    const XGcd g = xgcd(a, b);
    CHECK(g.s * a + g.t * b == g.g);
    CHECK(g.g == gcd(a, b));
  }
}

TEST_CASE("resultant agrees with the Gaussian-elimination oracle") {
  testkit::RandomRationals rnd(12);
  for (int k = 0; k < 50; ++k) {
    const Poly1 a{rnd(), rnd(), rnd(), rnd.nonzero()}, b{rnd(), rnd(), rnd.nonzero()};
    std::vector<mpq_class> fa, fb;
    for (int i = a.degree(); i >= 0; --i) fa.push_back(testkit::to_mpq(a.coeff(i)));
    for (int i = b.degree(); i >= 0; --i) fb.push_back(testkit::to_mpq(b.coeff(i)));
    CHECK(testkit::to_mpq(resultant(a, b)) == oracle::resultant(fa, fb));
  }
}

TEST_CASE("compose substitutes") {
  const Poly1 p{Rational(1), Rational(0), Rational(1)};  // x^2 + 1
  const Poly1 q{Rational(1), Rational(1)};               // x + 1
  CHECK(compose(p, q) == Poly1{Rational(2), Rational(2), Rational(1)});
}
