#include "quadinv/rootcert.hpp"

namespace quadinv {

namespace {

using R = Rational;

R sq(const R& x) { return x * x; }
R cube(const R& x) { return x * x * x; }

}  // namespace

std::string_view to_string(CubicVerdict v) {
  switch (v) {
    case CubicVerdict::OneSimpleReal: return "OneSimpleReal";
    case CubicVerdict::ThreeDistinctReal: return "ThreeDistinctReal";
    case CubicVerdict::RepeatedRootCase: return "RepeatedRootCase";
  }
  return "?";
}

std::string_view to_string(QuarticBranch b) {
  switch (b) {
    case QuarticBranch::GenericSimpleRoots: return "GenericSimpleRoots";
    case QuarticBranch::DoubleRootBranch: return "DoubleRootBranch";
    case QuarticBranch::TwoDoubleRealBranch: return "TwoDoubleRealBranch";
    case QuarticBranch::DoubleRootRealPair: return "DoubleRootRealPair";
    case QuarticBranch::QuadrupleBranch: return "QuadrupleBranch";
    case QuarticBranch::PairedRepeatedRoots: return "PairedRepeatedRoots";
  }
  return "?";
}

Rational cubic_discriminant(const R& al1, const R& al2, const R& al3) {
  return R(-27) * sq(al3) + R(18) * al3 * al1 * al2 + sq(al1) * sq(al2) - R(4) * cube(al1) * al3 -
         R(4) * cube(al2);
}

CubicCert cubic_classify(const R& al1, const R& al2, const R& al3) {
  CubicCert cert{al1, al2, al3, cubic_discriminant(al1, al2, al3), {}, 0, {}};
  const int s = cert.D3.sign();
  if (s < 0) {
    cert.verdict = CubicVerdict::OneSimpleReal;
    cert.distinct_real_count = 1;
    cert.multiplicities = {CubicRoot{std::nullopt, 1}};
    return cert;
  }
  if (s > 0) {
    cert.verdict = CubicVerdict::ThreeDistinctReal;
    cert.distinct_real_count = 3;
    cert.multiplicities = {CubicRoot{std::nullopt, 1}, CubicRoot{std::nullopt, 1},
                           CubicRoot{std::nullopt, 1}};
    return cert;
  }

  // D3 = 0: a repeated root exists and is a root of gcd(P, P').
  cert.verdict = CubicVerdict::RepeatedRootCase;
  const Poly1 p{al3, al2, al1, R(1)};
  const Poly1 g = gcd(p, derivative(p));
  if (g.degree() == 2) {
    // (q - r)^3 with r = -alpha1 / 3
    cert.distinct_real_count = 1;
    cert.multiplicities = {CubicRoot{-al1 / R(3), 3}};
  } else {
    // g = q - r; roots sum to -alpha1, so the simple root is -alpha1 - 2r.
    const R r = -g.coeff(0);
    cert.distinct_real_count = 2;
    cert.multiplicities = {CubicRoot{r, 2}, CubicRoot{-al1 - R(2) * r, 1}};
  }
  return cert;
}

Rational cubic_disc_resolvent(const R& a10, const R& pt, const R& qt) {
  return R(4) * cube(qt) - R(32) * sq(a10) * sq(qt) + R(8) * a10 * (R(9) * pt + R(8) * cube(a10)) * qt -
         pt * (R(32) * cube(a10) + R(27) * pt);
}

Rational quartic_discriminant(const R& a1, const R& a2, const R& a3, const R& a4) {
  const R a1_2 = sq(a1), a1_3 = cube(a1), a1_4 = sq(a1_2);
  const R a2_2 = sq(a2), a2_3 = cube(a2), a2_4 = sq(a2_2);
  const R a3_2 = sq(a3), a3_3 = cube(a3), a3_4 = sq(a3_2);
  const R a4_2 = sq(a4), a4_3 = cube(a4);
  return R(18) * a1_3 * a3 * a2 * a4 + R(256) * a4_3 - R(6) * a1_2 * a3_2 * a4 -
         R(192) * a1 * a3 * a4_2 + R(18) * a1 * a3_3 * a2 + R(144) * a2 * a1_2 * a4_2 +
         a2_2 * a1_2 * a3_2 - R(4) * a2_3 * a1_2 * a4 + R(144) * a4 * a3_2 * a2 -
         R(4) * a1_3 * a3_3 - R(27) * a3_4 - R(128) * a2_2 * a4_2 + R(16) * a2_4 * a4 -
         R(4) * a2_3 * a3_2 - R(27) * a1_4 * a4_2 - R(80) * a1 * a3 * a2_2 * a4;
}

QuarticAux quartic_aux(const R& a1, const R& a2, const R& a3, const R& a4) {
  const R a1_2 = sq(a1), a1_3 = cube(a1), a1_4 = sq(a1_2), a1_5 = a1_4 * a1;
  const R a1_6 = a1_3 * a1_3, a1_7 = a1_6 * a1, a1_8 = a1_4 * a1_4;
  const R a2_2 = sq(a2), a2_3 = cube(a2), a2_4 = sq(a2_2), a2_5 = a2_4 * a2;
  const R a2_6 = a2_3 * a2_3, a2_7 = a2_6 * a2;
  const R a3_2 = sq(a3), a3_3 = cube(a3), a3_4 = sq(a3_2);
  const R a4_2 = sq(a4);

  QuarticAux aux;
  aux.A0 = R(8) * a2_3 + R(36) * a3_2 + R(6) * a1_3 * a3 - R(32) * a2 * a4 - R(2) * a1_2 * a2_2 +
           R(12) * a1_2 * a4 - R(28) * a1 * a2 * a3;
  aux.A1 = R(-3) * a1 * a3_2 + R(48) * a4 * a3 + R(9) * a1_3 * a4 + R(4) * a3 * a2_2 -
           a3 * a2 * a1_2 - R(32) * a1 * a4 * a2;
  aux.B2 = R(552) * a2_2 * a1_4 * a3_2 - R(30) * a1_6 * a4 * a2_2 - R(64) * a2_7 +
           R(2208) * a1 * a3_3 * a2_2 - R(616) * a2_3 * a1_2 * a3_2 - R(704) * a2_4 * a1_2 * a4 +
           R(264) * a2_3 * a1_4 * a4 + R(1536) * a4 * a3_2 * a2_2 - R(336) * a1_3 * a2_4 * a3 +
           R(480) * a1 * a2_5 * a3 + R(78) * a1_5 * a2_3 * a3 - R(900) * a2 * a1_3 * a3_3 +
           R(144) * a2 * a1_4 * a4_2 - R(126) * a2 * a1_6 * a3_2 + R(900) * a1_4 * a4 * a3_2 -
           R(1152) * a1_3 * a4_2 * a3 + R(2304) * a1 * a3_3 * a4 - R(1296) * a2 * a3_4 -
           R(1024) * a2_3 * a4_2 + R(512) * a2_5 * a4 - R(608) * a2_4 * a3_2 -
           R(12) * a1_4 * a2_5 + R(48) * a1_2 * a2_6 - R(18) * a1_6 * a4_2 +
           R(198) * a1_2 * a3_4 - R(4608) * a4_2 * a3_2 + R(90) * a1_5 * a3_3 + a1_6 * a2_4 +
           R(9) * a1_8 * a3_2 + R(2112) * a1_3 * a3 * a2_2 * a4 - R(1024) * a1 * a3 * a2_3 * a4 -
           R(4032) * a2 * a1_2 * a3_2 * a4 - R(828) * a2 * a1_5 * a4 * a3 +
           R(4608) * a4_2 * a3 * a1 * a2 + R(90) * a1_7 * a4 * a3 - R(6) * a1_7 * a2_2 * a3;
  aux.D2_special = R(3, 2) * a1_2 - R(4) * a2;
  return aux;
}

QuadraticFactor QuadraticFactor::from_double_root(const QuarticCoeffs& c, const Rational& x0) {
  QuadraticFactor f;
  f.b1 = c.a1 + R(2) * x0;
  f.b2 = c.a2 - sq(x0) + R(2) * f.b1 * x0;
  f.D2 = sq(f.b1) - R(4) * f.b2;
  return f;
}

QuarticCert quartic_exactly_one_real(const R& a1, const R& a2, const R& a3, const R& a4) {
  QuarticCert cert;
  cert.coeffs = {a1, a2, a3, a4};
  cert.D4 = quartic_discriminant(a1, a2, a3, a4);
  cert.aux = quartic_aux(a1, a2, a3, a4);

  if (!cert.D4.is_zero()) {
    cert.branch = QuarticBranch::GenericSimpleRoots;
    return cert;
  }

  if (!cert.aux.A0.is_zero()) {
    cert.x0 = -cert.aux.A1 / cert.aux.A0;
    cert.factor = QuadraticFactor::from_double_root(cert.coeffs, *cert.x0);
    const int s = cert.aux.B2.sign();
    if (s < 0) {
      cert.branch = QuarticBranch::DoubleRootBranch;
      cert.exactly_one_real = true;
    } else if (s == 0) {
      cert.branch = QuarticBranch::TwoDoubleRealBranch;
    } else {
      cert.branch = QuarticBranch::DoubleRootRealPair;
    }
    return cert;
  }

  if (cert.aux.D2_special.is_zero()) {
    cert.branch = QuarticBranch::QuadrupleBranch;
    cert.exactly_one_real = true;
    cert.x0 = -a1 / R(4);
    cert.factor = QuadraticFactor::from_double_root(cert.coeffs, *cert.x0);
  } else {
    cert.branch = QuarticBranch::PairedRepeatedRoots;
  }
  return cert;
}

EliminationLadder elimination_ladder(const R& a1, const R& a2, const R& a3, const R& a4) {
  const QuarticAux aux = quartic_aux(a1, a2, a3, a4);
  EliminationLadder l;
  l.Q3 = Poly1{R(4) * a4, R(3) * a3, R(2) * a2, a1};
  l.Q2 = Poly1{R(16) * a4 - a1 * a3, R(12) * a3 - R(2) * a1 * a2, R(8) * a2 - R(3) * sq(a1)};
  l.R2 = Poly1{R(8) * a3 * a2 - R(3) * sq(a1) * a3,
               R(4) * a1 * a3 - R(64) * a4 - R(6) * a2 * sq(a1) + R(16) * sq(a2),
               R(32) * a1 * a2 - R(48) * a3 - R(9) * cube(a1)};
  l.P1 = Poly1{aux.A1, aux.A0};
  return l;
}

Rational resolvent_disc_indefinite(const R& pt, const R& qt) {
  return R(-256) * cube(pt) + R(256) * sq(qt) * sq(pt) + R(288) * qt * pt - R(256) * cube(qt) -
         R(27);
}

Rational resolvent_disc_definite(const R& a10, const R& a01, const R& pt, const R& qt) {
  const R q2 = sq(qt), q3 = q2 * qt, q4 = sq(q2), q5 = q4 * qt, q6 = q3 * q3;
  const R p2 = sq(pt), p3 = p2 * pt, p4 = sq(p2);
  const R a01_2 = sq(a01), a01_3 = a01_2 * a01, a01_4 = sq(a01_2);
  const R a10_2 = sq(a10), a10_3 = a10_2 * a10, a10_4 = sq(a10_2);
  return R(256) * q6 - R(768) * a01 * a10 * q5 -
         (R(576) * pt * a01_2 + R(576) * a10_2 * pt + R(432) * a01_4 + R(96) * a01_2 * a10_2 +
          R(128) * p2 + R(432) * a10_4) *
             q4 -
         (R(288) * a01_3 * a10 * pt + R(320) * a01 * a10 * p2 + R(256) * a01_3 * a10_3 +
          R(288) * a01 * a10_3 * pt) *
             q3 +
         (R(16) * p4 + R(16) * p3 * a10_2 + R(16) * p2 * a01_2 * a10_2 + R(16) * p3 * a01_2) * q2;
}

}  // namespace quadinv
