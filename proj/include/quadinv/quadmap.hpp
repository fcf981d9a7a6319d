#pragma once

/**
 * @file quadmap.hpp
 * @brief Quadratic maps of the plane and their affine compositions.
 *
 * A row stores c20, c11, c02, c10, c01, c00 and evaluates to
 *
 *     c20 p^2 + 2 c11 p q + c02 q^2 + 2 c10 p + 2 c01 q + c00
 *
 * so the factors of two live in evaluation, not in storage. Equivalently the
 * row is v^T M v with v = (p, q, 1) and the symmetric matrix
 * M = [[c20, c11, c10], [c11, c02, c01], [c10, c01, c00]].
 */

#include <array>
#include <utility>

#include "quadinv/exactnum.hpp"

namespace quadinv {

using Point2 = std::pair<Rational, Rational>;
using Mat3 = std::array<std::array<Rational, 3>, 3>;

struct QuadRow {
  Rational c20, c11, c02, c10, c01, c00;

  Rational operator()(const Rational& p, const Rational& q) const;

  bool is_zero() const;
  bool quadratic_is_zero() const { return c20.is_zero() && c11.is_zero() && c02.is_zero(); }
  bool is_constant() const { return quadratic_is_zero() && c10.is_zero() && c01.is_zero(); }

  Mat3 matrix() const;
  static QuadRow from_matrix(const Mat3& m);

  /// Coefficients of the row as a polynomial in p over Q[q].
  BiPoly in_p() const;

  friend bool operator==(const QuadRow&, const QuadRow&) = default;
};

QuadRow operator+(const QuadRow& x, const QuadRow& y);
QuadRow operator*(const Rational& s, const QuadRow& x);

struct QuadMap {
  QuadRow a;  ///< p~ row
  QuadRow b;  ///< q~ row

  friend bool operator==(const QuadMap&, const QuadMap&) = default;
};

/// (p, q) -> (m11 p + m12 q + s1, m21 p + m22 q + s2)
struct AffineMap2 {
  Rational m11{1}, m12, m21, m22{1};
  Rational s1, s2;

  static AffineMap2 identity() { return {}; }
  static AffineMap2 swap() { return {Rational(0), Rational(1), Rational(1), Rational(0), {}, {}}; }
  static AffineMap2 linear(Rational m11, Rational m12, Rational m21, Rational m22) {
    return {std::move(m11), std::move(m12), std::move(m21), std::move(m22), {}, {}};
  }
  static AffineMap2 shift(Rational s1, Rational s2) {
    return {Rational(1), {}, {}, Rational(1), std::move(s1), std::move(s2)};
  }

  Rational det() const { return m11 * m22 - m12 * m21; }
  bool is_linear() const { return s1.is_zero() && s2.is_zero(); }
  Point2 operator()(const Rational& p, const Rational& q) const;
  /// Throws arithmetic_error when singular.
  AffineMap2 inverse() const;

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

/// outer o inner
AffineMap2 then(const AffineMap2& outer, const AffineMap2& inner);

Point2 eval(const QuadMap& f, const Rational& p, const Rational& q);

/// f o t: substitutes (p, q) := t(p, q). Throws arithmetic_error if t is singular.
QuadMap compose_source(const QuadMap& f, const AffineMap2& t);

/// t o f. Throws arithmetic_error if t is singular.
QuadMap compose_target(const AffineMap2& t, const QuadMap& f);

/// The map (p, q) -> t(p, q) written as a QuadMap with zero quadratic part.
QuadMap as_quadmap(const AffineMap2& t);

/// phi1 o f1 == f2 o phi2 coefficientwise. Both phi must be linear and
/// invertible, otherwise std::invalid_argument.
bool check_equivalence(const QuadMap& f1, const QuadMap& f2, const AffineMap2& phi1,
                       const AffineMap2& phi2);

namespace shapes {

/// p~ = p + q^2, q~ = q
QuadMap shear();
/// p~ = p^2 + q, q~ = q^2 + p
QuadMap indefinite_canonical();
/// p~ = p q + 2 a10 p, q~ = q^2 + p
QuadMap semidefinite_canonical(const Rational& a10);
/// p~ = p^2 - q^2 + 2 a10 p + 2 a01 q, q~ = p q
QuadMap definite_canonical(const Rational& a10, const Rational& a01);

}  // namespace shapes

}  // namespace quadinv
