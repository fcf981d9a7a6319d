#include "quadinv/invertibility.hpp"

namespace quadinv {

std::string_view to_string(StepSide s) { return s == StepSide::Source ? "source" : "target"; }

std::string_view to_string(InvertibilityStatus s) {
  switch (s) {
    case InvertibilityStatus::InvertibleQuadratic: return "InvertibleQuadratic";
    case InvertibilityStatus::InvertibleAffine: return "InvertibleAffine";
    case InvertibilityStatus::NotInvertible: return "NotInvertible";
    case InvertibilityStatus::DegenerateConstant: return "DegenerateConstant";
  }
  return "?";
}

QuadMap ReductionTranscript::replay() const {
  QuadMap f = initial;
  for (const TranscriptStep& s : steps)
    f = s.side == StepSide::Target ? compose_target(s.map, f) : compose_source(f, s.map);
  return f;
}

AffineMap2 ReductionTranscript::target_composite() const {
  AffineMap2 t;
  for (const TranscriptStep& s : steps)
    if (s.side == StepSide::Target) t = then(s.map, t);
  return t;
}

AffineMap2 ReductionTranscript::source_composite() const {
  AffineMap2 t;
  for (const TranscriptStep& s : steps)
    if (s.side == StepSide::Source) t = then(t, s.map);
  return t;
}

namespace {

class ZeroClassReducer {
 public:
  explicit ZeroClassReducer(const QuadMap& f) {
    tr_.initial = f;
    tr_.final_map = f;
    tr_.target_shape = "shear";
  }

  ReductionTranscript run(std::optional<Witness>* witness) {
    QuadMap& f = tr_.final_map;
    auto quad = [](const QuadRow& r) { return std::array<Rational, 3>{r.c20, r.c11, r.c02}; };

    // Make the q~ row affine: its quadratic part is proportional to the p~ row's.
    if (f.a.quadratic_is_zero()) target(AffineMap2::swap(), "exchange p~ and q~");
    if (!f.b.quadratic_is_zero()) {
      const auto qa = quad(f.a), qb = quad(f.b);
      std::size_t k = 0;
      while (qa[k].is_zero()) ++k;
      const Rational lambda = qb[k] / qa[k];
      target(AffineMap2::linear(Rational(1), Rational(0), -lambda, Rational(1)),
             "shear q~ -= lambda p~ to cancel the proportional quadratic part");
    }

    if (f.b.is_constant()) {
      tr_.reached = false;
      tr_.target_shape = "shear-obstructed";
      tr_.notes.push_back("q~ is constant after reduction, so the image lies on a line");
      if (witness) *witness = missing_value(Rational(0), f.b.c00 + Rational(1));
      return tr_;
    }

    // Turn the affine row into q.
    if (f.b.c01.is_zero()) source(AffineMap2::swap(), "exchange p and q");
    {
      const Rational& b10 = f.b.c10;
      const Rational& b01 = f.b.c01;
      const Rational inv = Rational(1) / (Rational(2) * b01);
      source({Rational(1), Rational(0), -b10 / b01, inv, Rational(0), -f.b.c00 * inv},
             "substitute q = (q' - 2 b10 p - b00) / (2 b01) so that q~ = q");
    }

    // Obstructions: p~ must be linear in p with a nonzero coefficient.
    const QuadRow& a = f.a;
    if (!a.c20.is_zero()) {
      const Rational v = -a.c10 / a.c20;
      return obstructed(witness, {v + Rational(1), Rational(0)}, {v - Rational(1), Rational(0)},
                        "p~ is a parabola in p on each line q = const");
    }
    if (!a.c11.is_zero()) {
      const Rational qs = -a.c10 / a.c11;
      return obstructed(witness, {Rational(0), qs}, {Rational(1), qs},
                        "p~ does not depend on p along the line q = -a10/a11");
    }
    if (a.c10.is_zero()) {
      return obstructed(witness, {Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                        "p~ and q~ do not depend on p");
    }

    // p~ = a02 q^2 + 2 a10 p + 2 a01 q + a00 with a02, a10 != 0.
    const Rational a02 = a.c02;
    // the p~ row kept its nonzero quadratic part through invertible changes
    if (a02.is_zero()) throw std::logic_error("zero-class reduction lost the quadratic part");
    target(AffineMap2::linear(Rational(1) / a02, Rational(0), Rational(0), Rational(1)),
           "scale p~ by 1/a02");
    {
      const Rational a10 = f.a.c10, a01 = f.a.c01, a00 = f.a.c00;
      const Rational inv = Rational(1) / (Rational(2) * a10);
      source({inv, -a01 / a10, Rational(0), Rational(1), -a00 * inv, Rational(0)},
             "substitute p = (p' - 2 a01 q - a00) / (2 a10)");
    }
    if (!(f == shapes::shear())) throw std::logic_error("zero-class reduction missed the shear");
    return tr_;
  }

 private:
  void target(const AffineMap2& t, std::string rule) {
    if (t == AffineMap2::identity()) return;
    tr_.final_map = compose_target(t, tr_.final_map);
    tr_.steps.push_back({StepSide::Target, t, std::move(rule), false});
  }

  void source(const AffineMap2& t, std::string rule) {
    if (t == AffineMap2::identity()) return;
    tr_.final_map = compose_source(tr_.final_map, t);
    tr_.steps.push_back({StepSide::Source, t, std::move(rule), false});
  }

  ReductionTranscript obstructed(std::optional<Witness>* witness, const Point2& x1, const Point2& x2,
                                 std::string why) {
    tr_.reached = false;
    tr_.target_shape = "shear-obstructed";
    tr_.notes.push_back(std::move(why));
    if (witness) {
      const AffineMap2 s = tr_.source_composite();
      const Point2 y1 = s(x1.first, x1.second), y2 = s(x2.first, x2.second);
      const Point2 image = eval(tr_.initial, y1.first, y1.second);
      if (image != eval(tr_.initial, y2.first, y2.second) || y1 == y2)
        throw std::logic_error("zero-class collision witness failed to verify");
      Witness w;
      w.kind = WitnessKind::Collision;
      w.target = image;
      for (const Point2& y : {y1, y2})
        w.preimages.push_back({y, {y.first, y.first}, {y.second, y.second}});
      *witness = w;
    }
    return tr_;
  }

  Witness missing_value(const Rational& u, const Rational& v) const {
    const Point2 t = tr_.target_composite().inverse()(u, v);
    Witness w;
    w.kind = WitnessKind::MissingValue;
    w.target = t;
    return w;
  }

  ReductionTranscript tr_;
};

QuadMap shear_inverse() {
  QuadMap h;
  h.a.c10 = Rational(1, 2);
  h.a.c02 = -1;
  h.b.c01 = Rational(1, 2);
  return h;
}

Witness exact_collision(const QuadMap& f, const Point2& x1, const Point2& x2) {
  Witness w;
  w.kind = WitnessKind::Collision;
  w.target = eval(f, x1.first, x1.second);
  for (const Point2& x : {x1, x2}) w.preimages.push_back({x, {x.first, x.first}, {x.second, x.second}});
  return w;
}

}  // namespace

ReductionTranscript reduce_zero_class(const QuadMap& f, std::optional<Witness>* witness) {
  if (f.a.quadratic_is_zero() && f.b.quadratic_is_zero())
    throw std::invalid_argument("reduction needs a nonzero quadratic part");
  if (classify_form(form_of(f)).tag != FormTag::Zero)
    throw std::invalid_argument("exact reduction applies to the zero form only");
  return ZeroClassReducer(f).run(witness);
}

InvertibilityVerdict decide_invertibility(const QuadMap& f, int falsifier_bound) {
  InvertibilityVerdict v;
  v.triple = form_of(f);
  v.form_class = classify_form(v.triple);

  if (f.a.quadratic_is_zero() && f.b.quadratic_is_zero()) {
    const Rational two(2);
    const AffineMap2 lin{two * f.a.c10, two * f.a.c01, two * f.b.c10, two * f.b.c01, f.a.c00, f.b.c00};
    v.notes.push_back("quadratic part vanishes; decided by the linear part");
    if (!lin.det().is_zero()) {
      v.status = InvertibilityStatus::InvertibleAffine;
      v.inverse = as_quadmap(lin.inverse());
    } else if (f.a.is_constant() && f.b.is_constant()) {
      v.status = InvertibilityStatus::DegenerateConstant;
      v.witness = exact_collision(f, {Rational(0), Rational(0)}, {Rational(1), Rational(0)});
    } else {
      v.status = InvertibilityStatus::NotInvertible;
      const Point2 k = (lin.m11.is_zero() && lin.m12.is_zero()) ? Point2{lin.m22, -lin.m21}
                                                               : Point2{lin.m12, -lin.m11};
      v.witness = exact_collision(f, {Rational(0), Rational(0)}, k);
    }
    return v;
  }

  if (v.form_class.tag == FormTag::Zero) {
    std::optional<Witness> w;
    v.transcript = reduce_zero_class(f, &w);
    if (v.transcript->reached) {
      v.status = InvertibilityStatus::InvertibleQuadratic;
      // f = T^-1 o H o S^-1, so f^-1 = S o H^-1 o T.
      const AffineMap2 t = v.transcript->target_composite();
      const AffineMap2 s = v.transcript->source_composite();
      v.inverse = compose_target(s, compose_source(shear_inverse(), t));
      for (const Point2& x : {Point2{Rational(0), Rational(0)}, Point2{Rational(1), Rational(-2)}}) {
        const Point2 y = eval(*v.inverse, x.first, x.second);
        if (eval(f, y.first, y.second) != x) throw std::logic_error("inverse failed self-check");
      }
    } else {
      v.status = InvertibilityStatus::NotInvertible;
      v.witness = w;
    }
    return v;
  }

  v.status = InvertibilityStatus::NotInvertible;
  v.notes.push_back("no invertible quadratic map has an associated form of class " +
                    std::string(to_string(v.form_class.tag)));
  if (falsifier_bound >= 0) v.witness = falsify(f, v.form_class, falsifier_bound);
  return v;
}

Point2 invert(const InvertibilityVerdict& v, const Rational& tp, const Rational& tq) {
  if (!v.inverse) throw not_invertible_error("map is not invertible");
  return eval(*v.inverse, tp, tq);
}

bool integral_on_lattice(const QuadMap& f) {
  const Rational two(2);
  for (const QuadRow* r : {&f.a, &f.b}) {
    for (const Rational& c : {r->c20, r->c02, r->c00})
      if (!c.is_integer()) return false;
    for (const Rational& c : {r->c11, r->c10, r->c01})
      if (!(two * c).is_integer()) return false;
  }
  return true;
}

LatticeReport lattice_check(const QuadMap& f) {
  const InvertibilityVerdict v = decide_invertibility(f, -1);
  if (!v.inverse) return {false, "map is not invertible (" + std::string(to_string(v.status)) + ")"};
  if (!integral_on_lattice(f)) return {false, "forward map sends some integer point off the lattice"};
  if (!integral_on_lattice(*v.inverse)) return {false, "inverse sends some integer point off the lattice"};
  return {true, "map and its inverse both have integral coefficients"};
}

}  // namespace quadinv
