#pragma once

/**
 * @file quadform.hpp
 * @brief The binary form built from the 2x2 minors of a map's quadratic part,
 *        its definiteness class, light vectors, and the auxiliary forms on R^4.
 *
 * With rows (a20, a11, a02) and (b20, b11, b02):
 *
 *     2 alpha = a20 b11 - a11 b20
 *     2 beta  = a20 b02 - a02 b20
 *     2 gamma = a11 b02 - a02 b11
 *
 * and omega1(c) = 2 alpha c1^2 + 2 beta c1 c2 + 2 gamma c2^2, whose matrix is
 * [[2 alpha, beta], [beta, 2 gamma]].
 */

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "quadinv/quadmap.hpp"
#include "quadinv/sturm.hpp"

namespace quadinv {

struct FormTriple {
  Rational alpha, beta, gamma;

  friend bool operator==(const FormTriple&, const FormTriple&) = default;
};

enum class FormTag { Zero, Indefinite, SemiDefinite, Definite };

std::string_view to_string(FormTag t);

struct FormClass {
  FormTag tag = FormTag::Zero;
  Rational det_omega1;  ///< 4 alpha gamma - beta^2
};

using Mat2 = std::array<std::array<Rational, 2>, 2>;

FormTriple form_of(const QuadMap& f);
FormClass classify_form(const FormTriple& t);
Mat2 omega1_matrix(const FormTriple& t);
Rational omega1(const FormTriple& t, const Rational& c1, const Rational& c2);

/// A null direction of omega1. Rational directions are normalised so the
/// first nonzero component is 1. Otherwise the direction is (t, 1) with t the
/// root of `minimal_poly` isolated by `interval`.
struct LightDirection {
  std::optional<Point2> exact;
  Poly1 minimal_poly;
  RationalInterval interval;

  /// Floating-point approximation of the direction.
  std::array<double, 2> approx() const;
};

struct LightVectors {
  bool all_vectors = false;  ///< the zero form annihilates everything
  std::vector<LightDirection> directions;
};

LightVectors light_vectors(const FormTriple& t);

using Vec4 = std::array<Rational, 4>;

/// omega2 = alpha c1 c3 + beta c1 c4 + beta c2 c3 + gamma c2 c4,
/// omega3 = 2 (c1 c4 - c2 c3).
std::pair<Rational, Rational> omega2_omega3(const FormTriple& t, const Vec4& c);

/// (gamma, -3 beta, -2 beta, (3 beta^2 - alpha gamma) / gamma), a null vector of
/// omega2 on which omega3 = -2 (alpha gamma + 3 beta^2) is nonzero. Throws
/// std::invalid_argument unless t is definite.
Vec4 definite_case_vector(const FormTriple& t);

}  // namespace quadinv
