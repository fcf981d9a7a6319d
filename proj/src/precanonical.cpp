#include "quadinv/precanonical.hpp"

#include <algorithm>
#include <cmath>

namespace quadinv {

namespace {

std::array<const Rational*, 12> coeffs(const QuadMap& f) {
  return {&f.a.c20, &f.a.c11, &f.a.c02, &f.a.c10, &f.a.c01, &f.a.c00,
          &f.b.c20, &f.b.c11, &f.b.c02, &f.b.c10, &f.b.c01, &f.b.c00};
}

QuadMap shape_for(const QuadMap& f, std::string_view shape) {
  if (shape == "shear") return shapes::shear();
  if (shape == "indefinite-canonical") return shapes::indefinite_canonical();
  if (shape == "semidefinite-canonical") return shapes::semidefinite_canonical(f.a.c10);
  if (shape == "definite-canonical") return shapes::definite_canonical(f.a.c10, f.a.c01);
  throw std::invalid_argument("unknown shape " + std::string(shape));
}

bool negligible(const Rational& x) { return x.is_zero() || std::abs(x.to_double()) < 1e-12; }

Rational approx(double x) { return Rational::from_double(x); }

class Pipeline {
 public:
  Pipeline(const QuadMap& f, std::string shape) {
    tr_.initial = f;
    tr_.final_map = f;
    tr_.target_shape = std::move(shape);
  }

  const QuadMap& f() const { return tr_.final_map; }

  void target(const AffineMap2& t, std::string rule, bool numeric = false) {
    if (t == AffineMap2::identity()) return;
    tr_.final_map = compose_target(t, tr_.final_map);
    tr_.steps.push_back({StepSide::Target, t, std::move(rule), numeric});
  }

  void source(const AffineMap2& t, std::string rule, bool numeric = false) {
    if (t == AffineMap2::identity()) return;
    tr_.final_map = compose_source(tr_.final_map, t);
    tr_.steps.push_back({StepSide::Source, t, std::move(rule), numeric});
  }

  void clear_constants() {
    target(AffineMap2::shift(-f().a.c00, -f().b.c00), "shift p~ and q~ to remove constant terms");
  }

  ReductionTranscript finish(std::string note = {}) {
    if (!note.empty()) tr_.notes.push_back(std::move(note));
    tr_.numeric = std::any_of(tr_.steps.begin(), tr_.steps.end(),
                              [](const TranscriptStep& s) { return s.numeric; });
    tr_.max_deviation = shape_deviation(tr_.final_map, tr_.target_shape);
    tr_.reached = tr_.max_deviation <= kPrecanonicalTolerance;
    return tr_;
  }

 private:
  ReductionTranscript tr_;
};

ReductionTranscript indefinite(const QuadMap& f0, const FormTriple& t) {
  Pipeline pl(f0, "indefinite-canonical");
  if (f0 == shapes::indefinite_canonical()) return pl.finish();

  const LightVectors lv = light_vectors(t);
  const LightDirection& d1 = lv.directions.at(0);
  const LightDirection& d2 = lv.directions.at(1);
  if (d1.exact && d2.exact) {
    pl.source(AffineMap2::linear(d1.exact->first, d2.exact->first, d1.exact->second, d2.exact->second),
              "use the two light vectors as new coordinate axes");
  } else {
    const auto u = d1.approx(), v = d2.approx();
    pl.source(AffineMap2::linear(approx(u[0]), approx(v[0]), approx(u[1]), approx(v[1])),
              "use the two light vectors as new coordinate axes", true);
  }

  const QuadMap& f = pl.f();
  pl.target(AffineMap2::linear(f.a.c20, f.a.c02, f.b.c20, f.b.c02).inverse(),
            "invert the matrix of the p^2 and q^2 coefficients");
  pl.source(AffineMap2::shift(-pl.f().a.c10, -pl.f().b.c01),
            "shift p and q to remove the p term of p~ and the q term of q~");
  pl.clear_constants();

  const Rational a01 = pl.f().a.c01, b10 = pl.f().b.c10;
  if (negligible(a01) || negligible(b10))
    return pl.finish("a01 or b10 vanishes, so the cube-root scaling to p^2 + q, q^2 + p does not exist");

  const double A01 = a01.to_double(), B10 = b10.to_double();
  const double alpha = 2.0 * std::cbrt(A01 * A01 * B10);
  const double beta = alpha * alpha / (2.0 * A01);
  pl.source(AffineMap2::linear(approx(alpha), Rational(0), Rational(0), approx(beta)),
            "scale p = alpha p', q = beta q' with alpha = 2 cbrt(a01^2 b10), beta = alpha^2 / (2 a01)",
            true);
  pl.target(AffineMap2::linear(approx(1.0 / (alpha * alpha)), Rational(0), Rational(0),
                               approx(1.0 / (beta * beta))),
            "scale p~ by 1/alpha^2 and q~ by 1/beta^2", true);
  return pl.finish();
}

ReductionTranscript semidefinite(const QuadMap& f0, const FormTriple& t) {
  Pipeline pl(f0, "semidefinite-canonical");
  if (f0 == shapes::semidefinite_canonical(f0.a.c10)) return pl.finish();

  const Point2 l = *light_vectors(t).directions.at(0).exact;
  const Point2 e = l.first.is_zero() ? Point2{Rational(1), Rational(0)} : Point2{Rational(0), Rational(1)};
  pl.source(AffineMap2::linear(l.first, e.first, l.second, e.second),
            "put the light vector in the first column so that a20 = b20 = 0");
  if (pl.f().a.c11.is_zero()) pl.target(AffineMap2::swap(), "exchange p~ and q~ so that a11 != 0");
  pl.target(AffineMap2::linear(Rational(1), Rational(0), -pl.f().b.c11 / pl.f().a.c11, Rational(1)),
            "shear q~ -= (b11/a11) p~ to remove the pq term of q~");
  pl.target(AffineMap2::linear(Rational(1), -pl.f().a.c02 / pl.f().b.c02, Rational(0), Rational(1)),
            "shear p~ -= (a02/b02) q~ to remove the q^2 term of p~");
  pl.target(AffineMap2::linear(Rational(1) / (Rational(2) * pl.f().a.c11), Rational(0), Rational(0),
                               Rational(1) / pl.f().b.c02),
            "scale so that p~ has pq coefficient 1 and q~ has q^2 coefficient 1");

  const QuadMap& f = pl.f();
  if (f.b.c10.is_zero())
    return pl.finish("b10 vanishes, so q~ does not involve p and q^2 + p is unreachable");
  {
    const Rational b10 = f.b.c10, b01 = f.b.c01, b00 = f.b.c00;
    const Rational inv = Rational(1) / (Rational(2) * b10);
    pl.source({inv, -b01 / b10, Rational(0), Rational(1), -b00 * inv, Rational(0)},
              "substitute p = (p' - 2 b01 q - b00) / (2 b10) so that q~ = q^2 + p");
  }
  pl.target(AffineMap2::linear(Rational(1), -pl.f().a.c02, Rational(0), Rational(1)),
            "shear p~ -= a02 q~ to remove the q^2 term of p~");
  pl.target(AffineMap2::linear(Rational(1) / (Rational(2) * pl.f().a.c11), Rational(0), Rational(0),
                               Rational(1)),
            "scale p~ so that its pq coefficient is 1");
  pl.source(AffineMap2::shift(Rational(-2) * pl.f().a.c01, Rational(0)),
            "shift p by -2 a01 to remove the q term of p~");
  pl.clear_constants();
  return pl.finish();
}

ReductionTranscript definite(const QuadMap& f0, const FormTriple& t) {
  Pipeline pl(f0, "definite-canonical");
  if (f0 == shapes::definite_canonical(f0.a.c10, f0.a.c01)) return pl.finish();

  // After p = c11 p' + c12 q', q = c21 p' + c22 q' the minor a20 b02 - a02 b20
  // becomes det C * u^T Omega1 v with u, v the columns of C. Taking u = (1, 0)
  // and v = (beta, -2 alpha) makes it vanish; det C = -2 alpha != 0.
  pl.source(AffineMap2::linear(Rational(1), t.beta, Rational(0), Rational(-2) * t.alpha),
            "take the omega1-conjugate pair (1, 0), (beta, -2 alpha) as axes so that a20 b02 - a02 b20 = 0");
  if (pl.f().a.c20.is_zero()) pl.target(AffineMap2::swap(), "exchange p~ and q~ so that a20 != 0");
  pl.target(AffineMap2::linear(Rational(1), Rational(0), -pl.f().b.c20 / pl.f().a.c20, Rational(1)),
            "shear q~ -= (b20/a20) p~ so that b20 = b02 = 0");
  pl.target(AffineMap2::linear(Rational(1), -pl.f().a.c11 / pl.f().b.c11, Rational(0), Rational(1)),
            "shear p~ -= (a11/b11) q~ to remove the pq term of p~");

  const Rational ratio = -pl.f().a.c20 / pl.f().a.c02;
  if (auto s = exact_sqrt(ratio)) {
    pl.source(AffineMap2::linear(Rational(1), Rational(0), Rational(0), *s),
              "scale q by sqrt(-a20/a02)");
  } else {
    pl.source(AffineMap2::linear(Rational(1), Rational(0), Rational(0), approx(std::sqrt(ratio.to_double()))),
              "scale q by sqrt(-a20/a02)", true);
  }
  pl.target(AffineMap2::linear(Rational(1) / pl.f().a.c20, Rational(0), Rational(0),
                               Rational(1) / (Rational(2) * pl.f().b.c11)),
            "scale so that p~ has p^2 coefficient 1 and q~ has pq coefficient 1");
  pl.source(AffineMap2::shift(Rational(-2) * pl.f().b.c01, Rational(-2) * pl.f().b.c10),
            "shift p by -2 b01 and q by -2 b10 to remove the linear terms of q~");
  pl.clear_constants();
  return pl.finish();
}

}  // namespace

double shape_deviation(const QuadMap& f, std::string_view shape) {
  const QuadMap target = shape_for(f, shape);
  const auto got = coeffs(f), want = coeffs(target);
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double w = want[i]->to_double();
    const double dev = std::abs((*got[i] - *want[i]).to_double()) / std::max(1.0, std::abs(w));
    worst = std::max(worst, dev);
  }
  return worst;
}

ReductionTranscript precanonicalize(const QuadMap& f) {
  if (f.a.quadratic_is_zero() && f.b.quadratic_is_zero())
    throw std::invalid_argument("precanonicalize needs a nonzero quadratic part");
  const FormTriple t = form_of(f);
  switch (classify_form(t).tag) {
    case FormTag::Zero: return reduce_zero_class(f);
    case FormTag::Indefinite: return indefinite(f, t);
    case FormTag::SemiDefinite: return semidefinite(f, t);
    case FormTag::Definite: return definite(f, t);
  }
  throw std::logic_error("unreachable form class");
}

}  // namespace quadinv
