#include "quadinv/quadmap.hpp"

#include <stdexcept>

namespace quadinv {

namespace {

const Rational kTwo(2);

void require_invertible(const AffineMap2& t) {
  if (t.det().is_zero()) throw arithmetic_error("singular affine map");
}

}  // namespace

Rational QuadRow::operator()(const Rational& p, const Rational& q) const {
  return c20 * p * p + kTwo * c11 * p * q + c02 * q * q + kTwo * c10 * p + kTwo * c01 * q + c00;
}

bool QuadRow::is_zero() const { return is_constant() && c00.is_zero(); }

Mat3 QuadRow::matrix() const {
  return {{{c20, c11, c10}, {c11, c02, c01}, {c10, c01, c00}}};
}

QuadRow QuadRow::from_matrix(const Mat3& m) {
  return {m[0][0], m[0][1], m[1][1], m[0][2], m[1][2], m[2][2]};
}

BiPoly QuadRow::in_p() const {
  BiPoly f;
  f.coeffs = {Poly1{c00, kTwo * c01, c02}, Poly1{kTwo * c10, kTwo * c11}, Poly1{c20}};
  f.trim();
  return f;
}

QuadRow operator+(const QuadRow& x, const QuadRow& y) {
  return {x.c20 + y.c20, x.c11 + y.c11, x.c02 + y.c02,
          x.c10 + y.c10, x.c01 + y.c01, x.c00 + y.c00};
}

QuadRow operator*(const Rational& s, const QuadRow& x) {
  return {s * x.c20, s * x.c11, s * x.c02, s * x.c10, s * x.c01, s * x.c00};
}

Point2 AffineMap2::operator()(const Rational& p, const Rational& q) const {
  return {m11 * p + m12 * q + s1, m21 * p + m22 * q + s2};
}

AffineMap2 AffineMap2::inverse() const {
  const Rational d = det();
  if (d.is_zero()) throw arithmetic_error("singular affine map has no inverse");
  AffineMap2 inv{m22 / d, -m12 / d, -m21 / d, m11 / d, {}, {}};
  inv.s1 = -(inv.m11 * s1 + inv.m12 * s2);
  inv.s2 = -(inv.m21 * s1 + inv.m22 * s2);
  return inv;
}

AffineMap2 then(const AffineMap2& o, const AffineMap2& i) {
  return {o.m11 * i.m11 + o.m12 * i.m21, o.m11 * i.m12 + o.m12 * i.m22,
          o.m21 * i.m11 + o.m22 * i.m21, o.m21 * i.m12 + o.m22 * i.m22,
          o.m11 * i.s1 + o.m12 * i.s2 + o.s1, o.m21 * i.s1 + o.m22 * i.s2 + o.s2};
}

Point2 eval(const QuadMap& f, const Rational& p, const Rational& q) { return {f.a(p, q), f.b(p, q)}; }

QuadMap compose_source(const QuadMap& f, const AffineMap2& t) {
  require_invertible(t);
  // (p, q, 1) = T (p', q', 1), so each row matrix becomes T^T M T.
  const Mat3 T{{{t.m11, t.m12, t.s1}, {t.m21, t.m22, t.s2}, {Rational(0), Rational(0), Rational(1)}}};
  auto pull = [&](const QuadRow& row) {
    const Mat3 m = row.matrix();
    Mat3 mt{}, out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) mt[i][j] += m[i][k] * T[k][j];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[i][j] += T[k][i] * mt[k][j];
    return QuadRow::from_matrix(out);
  };
  return {pull(f.a), pull(f.b)};
}

QuadMap compose_target(const AffineMap2& t, const QuadMap& f) {
  require_invertible(t);
  QuadRow a = t.m11 * f.a + t.m12 * f.b;
  QuadRow b = t.m21 * f.a + t.m22 * f.b;
  a.c00 += t.s1;
  b.c00 += t.s2;
  return {a, b};
}

QuadMap as_quadmap(const AffineMap2& t) {
  const Rational half(1, 2);
  QuadMap f;
  f.a = {{}, {}, {}, half * t.m11, half * t.m12, t.s1};
  f.b = {{}, {}, {}, half * t.m21, half * t.m22, t.s2};
  return f;
}

bool check_equivalence(const QuadMap& f1, const QuadMap& f2, const AffineMap2& phi1,
                       const AffineMap2& phi2) {
  if (!phi1.is_linear() || !phi2.is_linear())
    throw std::invalid_argument("equivalence maps must be linear (zero shift)");
  if (phi1.det().is_zero() || phi2.det().is_zero())
    throw std::invalid_argument("equivalence maps must be invertible");
  return compose_target(phi1, f1) == compose_source(f2, phi2);
}

namespace shapes {

QuadMap shear() {
  QuadMap f;
  f.a.c02 = 1;
  f.a.c10 = Rational(1, 2);
  f.b.c01 = Rational(1, 2);
  return f;
}

QuadMap indefinite_canonical() {
  QuadMap f;
  f.a.c20 = 1;
  f.a.c01 = Rational(1, 2);
  f.b.c02 = 1;
  f.b.c10 = Rational(1, 2);
  return f;
}

QuadMap semidefinite_canonical(const Rational& a10) {
  QuadMap f;
  f.a.c11 = Rational(1, 2);
  f.a.c10 = a10;
  f.b.c02 = 1;
  f.b.c10 = Rational(1, 2);
  return f;
}

QuadMap definite_canonical(const Rational& a10, const Rational& a01) {
  QuadMap f;
  f.a.c20 = 1;
  f.a.c02 = -1;
  f.a.c10 = a10;
  f.a.c01 = a01;
  f.b.c11 = Rational(1, 2);
  return f;
}

}  // namespace shapes

}  // namespace quadinv
