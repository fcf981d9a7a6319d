#include "quadinv/quadform.hpp"

#include <stdexcept>

namespace quadinv {

std::string_view to_string(FormTag t) {
  switch (t) {
    case FormTag::Zero: return "Zero";
    case FormTag::Indefinite: return "Indefinite";
    case FormTag::SemiDefinite: return "SemiDefinite";
    case FormTag::Definite: return "Definite";
  }
  return "?";
}

FormTriple form_of(const QuadMap& f) {
  const QuadRow& a = f.a;
  const QuadRow& b = f.b;
  const Rational half(1, 2);
  return {half * (a.c20 * b.c11 - a.c11 * b.c20), half * (a.c20 * b.c02 - a.c02 * b.c20),
          half * (a.c11 * b.c02 - a.c02 * b.c11)};
}

FormClass classify_form(const FormTriple& t) {
  FormClass c;
  c.det_omega1 = Rational(4) * t.alpha * t.gamma - t.beta * t.beta;
  if (t.alpha.is_zero() && t.beta.is_zero() && t.gamma.is_zero()) {
    c.tag = FormTag::Zero;
  } else if (c.det_omega1.sign() > 0) {
    c.tag = FormTag::Definite;
  } else if (c.det_omega1.sign() < 0) {
    c.tag = FormTag::Indefinite;
  } else {
    c.tag = FormTag::SemiDefinite;
  }
  return c;
}

Mat2 omega1_matrix(const FormTriple& t) {
  return {{{Rational(2) * t.alpha, t.beta}, {t.beta, Rational(2) * t.gamma}}};
}

Rational omega1(const FormTriple& t, const Rational& c1, const Rational& c2) {
  return Rational(2) * (t.alpha * c1 * c1 + t.beta * c1 * c2 + t.gamma * c2 * c2);
}

std::array<double, 2> LightDirection::approx() const {
  if (exact) return {exact->first.to_double(), exact->second.to_double()};
  return {interval.midpoint().to_double(), 1.0};
}

namespace {

LightDirection rational_direction(Rational x, Rational y) {
  if (!x.is_zero()) {
    y = y / x;
    x = 1;
  } else {
    y = 1;
  }
  LightDirection d;
  d.exact = Point2{x, y};
  return d;
}

}  // namespace

LightVectors light_vectors(const FormTriple& t) {
  LightVectors out;
  const FormClass cls = classify_form(t);
  if (cls.tag == FormTag::Zero) {
    out.all_vectors = true;
    return out;
  }
  if (cls.tag == FormTag::Definite) return out;

  if (t.alpha.is_zero()) {
    // omega1 = 2 c2 (beta c1 + gamma c2)
    out.directions.push_back(rational_direction(Rational(1), Rational(0)));
    LightDirection second = rational_direction(t.gamma, -t.beta);
    if (*second.exact != *out.directions.front().exact) out.directions.push_back(second);
    return out;
  }

  // alpha t^2 + beta t + gamma = 0, direction (t, 1)
  const Rational disc = t.beta * t.beta - Rational(4) * t.alpha * t.gamma;
  const Rational two_a = Rational(2) * t.alpha;
  if (disc.is_zero()) {
    out.directions.push_back(rational_direction(-t.beta / two_a, Rational(1)));
    return out;
  }
  if (auto s = exact_sqrt(disc)) {
    for (const Rational& root : {(-t.beta - *s) / two_a, (-t.beta + *s) / two_a})
      out.directions.push_back(rational_direction(root, Rational(1)));
    return out;
  }
  const Poly1 minpoly = monic(Poly1{t.gamma, t.beta, t.alpha});
  const RootCount rc = sturm_count(minpoly);
  for (const RationalInterval& iv : rc.isolating_intervals) {
    LightDirection d;
    d.minimal_poly = minpoly;
    d.interval = iv;
    out.directions.push_back(d);
  }
  return out;
}

std::pair<Rational, Rational> omega2_omega3(const FormTriple& t, const Vec4& c) {
  const Rational w2 = t.alpha * c[0] * c[2] + t.beta * c[0] * c[3] + t.beta * c[1] * c[2] +
                      t.gamma * c[1] * c[3];
  const Rational w3 = Rational(2) * (c[0] * c[3] - c[1] * c[2]);
  return {w2, w3};
}

Vec4 definite_case_vector(const FormTriple& t) {
  if (t.gamma.is_zero()) throw std::invalid_argument("definite_case_vector needs gamma != 0");
  if (classify_form(t).tag != FormTag::Definite)
    throw std::invalid_argument("definite_case_vector needs a definite form");
  const Vec4 c{t.gamma, Rational(-3) * t.beta, Rational(-2) * t.beta,
               (Rational(3) * t.beta * t.beta - t.alpha * t.gamma) / t.gamma};
  const auto [w2, w3] = omega2_omega3(t, c);
  if (!w2.is_zero() || w3.sign() >= 0) throw std::logic_error("definite_case_vector postcondition");
  return c;
}

}  // namespace quadinv
