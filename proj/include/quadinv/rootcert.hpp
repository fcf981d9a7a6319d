#pragma once

/**
 * @file rootcert.hpp
 * @brief Closed-form discriminants and the exact "one real root" decisions
 *        for monic cubics and quartics.
 *
 * Cubics are written q^3 + alpha1 q^2 + alpha2 q + alpha3 and quartics
 * x^4 + a1 x^3 + a2 x^2 + a3 x + a4. Every formula here is a term-by-term
 * polynomial in the coefficients; nothing consults a root finder, which is
 * what lets the Sturm oracle audit these results independently.
 */

#include <optional>
#include <string_view>
#include <vector>

#include "quadinv/exactnum.hpp"

namespace quadinv {

// --- cubics ----------------------------------------------------------------

enum class CubicVerdict { OneSimpleReal, ThreeDistinctReal, RepeatedRootCase };

std::string_view to_string(CubicVerdict v);

/// A real root of a cubic with its multiplicity. `exact` is filled whenever
/// the root is forced to be rational (every root when D3 = 0).
struct CubicRoot {
  std::optional<Rational> exact;
  int multiplicity = 1;
};

struct CubicCert {
  Rational alpha1, alpha2, alpha3;
  Rational D3;
  CubicVerdict verdict = CubicVerdict::RepeatedRootCase;
  int distinct_real_count = 0;
  std::vector<CubicRoot> multiplicities;
};

Rational cubic_discriminant(const Rational& alpha1, const Rational& alpha2, const Rational& alpha3);

CubicCert cubic_classify(const Rational& alpha1, const Rational& alpha2, const Rational& alpha3);

/// Discriminant of q^3 + 2 a10 q^2 - q~ q - 2 a10 q~ + p~ in expanded form.
Rational cubic_disc_resolvent(const Rational& a10, const Rational& p_t, const Rational& q_t);

// --- quartics --------------------------------------------------------------

struct QuarticCoeffs {
  Rational a1, a2, a3, a4;

  Poly1 poly() const { return Poly1{a4, a3, a2, a1, Rational(1)}; }
};

Rational quartic_discriminant(const Rational& a1, const Rational& a2, const Rational& a3,
                              const Rational& a4);

struct QuarticAux {
  Rational A0;  ///< leading coefficient of the linear remainder P1
  Rational A1;  ///< constant term of P1
  Rational B2;  ///< numerator of D2 = 4 B2 / A0^2 after substituting x0 = -A1/A0
  Rational D2_special;  ///< 3/2 a1^2 - 4 a2, the D2 of the quadruple-root case
};

QuarticAux quartic_aux(const Rational& a1, const Rational& a2, const Rational& a3,
                       const Rational& a4);

/// The cofactor x^2 + b1 x + b2 of (x - x0)^2 in a quartic with double root x0.
struct QuadraticFactor {
  Rational b1, b2;
  Rational D2;  ///< b1^2 - 4 b2

  static QuadraticFactor from_double_root(const QuarticCoeffs& c, const Rational& x0);
};

enum class QuarticBranch {
  GenericSimpleRoots,    ///< D4 != 0
  DoubleRootBranch,      ///< D4 = 0, A0 != 0, B2 < 0: one real root, multiplicity 2
  TwoDoubleRealBranch,   ///< D4 = 0, A0 != 0, B2 = 0
  DoubleRootRealPair,    ///< D4 = 0, A0 != 0, B2 > 0: double root plus two simple real roots
  QuadrupleBranch,       ///< D4 = 0, A0 = 0, D2_special = 0: (x - x0)^4
  PairedRepeatedRoots,   ///< D4 = 0, A0 = 0, D2_special != 0
};

std::string_view to_string(QuarticBranch b);

struct QuarticCert {
  QuarticCoeffs coeffs;
  Rational D4;
  QuarticAux aux;
  bool exactly_one_real = false;
  QuarticBranch branch = QuarticBranch::GenericSimpleRoots;
  std::optional<Rational> x0;
  std::optional<QuadraticFactor> factor;
};

QuarticCert quartic_exactly_one_real(const Rational& a1, const Rational& a2, const Rational& a3,
                                     const Rational& a4);

/// Remainder ladder that eliminates x^3 and x^2 between P4 and P4'.
struct EliminationLadder {
  Poly1 Q3;  ///< 4 P4 - x P4'
  Poly1 Q2;  ///< 4 Q3 - a1 P4'
  Poly1 R2;  ///< (8 a2 - 3 a1^2) P4' - 4 x Q2
  Poly1 P1;  ///< A0 x + A1
};

EliminationLadder elimination_ladder(const Rational& a1, const Rational& a2, const Rational& a3,
                                     const Rational& a4);

// --- resolvent discriminants of the pre-canonical maps --------------------

/// Discriminant of q^4 - 2 q~ q^2 + q + q~^2 - p~.
Rational resolvent_disc_indefinite(const Rational& p_t, const Rational& q_t);

/// Discriminant of q^4 + 2 a01 q^3 - p~ q^2 + 2 a10 q~ q + q~^2, expanded in q~.
Rational resolvent_disc_definite(const Rational& a10, const Rational& a01, const Rational& p_t,
                                 const Rational& q_t);

}  // namespace quadinv
