#pragma once

/**
 * @file preimage.hpp
 * @brief Exact fibres of a quadratic map and the grid search for
 *        non-invertibility witnesses.
 */

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "quadinv/quadform.hpp"
#include "quadinv/quadmap.hpp"
#include "quadinv/sturm.hpp"

namespace quadinv {

/// The fibre over a target contains a curve (the resultant vanishes identically).
class degenerate_fiber : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real solution of f(p, q) = target. `exact` is set when both coordinates
/// are rational; otherwise the point lies in the rational box p_box x q_box.
struct PreimagePoint {
  std::optional<Point2> exact;
  RationalInterval p_box, q_box;
};

struct PreimageResult {
  Poly1 resolvent;       ///< Res_p(f1 - P, f2 - Q) as a polynomial in q
  RootCount q_roots;     ///< real roots of the resolvent
  std::vector<PreimagePoint> points;

  int count() const { return static_cast<int>(points.size()); }
};

/// All real solutions of f(p, q) = (tp, tq). Throws degenerate_fiber when the
/// resolvent vanishes identically and std::invalid_argument when both rows
/// of f are constant.
PreimageResult preimage_count(const QuadMap& f, const Rational& tp, const Rational& tq);

enum class WitnessKind { Collision, MissingValue };

std::string_view to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::Collision;
  Point2 target;
  std::vector<PreimagePoint> preimages;
};

/// Grid indices (i, j), |i|, |j| <= 2 * bound, ordered by max(|i|, |j|) and
/// then lexicographically. The target for (i, j) is (i/2, j/2).
std::vector<std::pair<int, int>> spiral_order(int bound);

struct FalsifyOptions {
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// First target in spiral order whose fibre is not a single point. Degenerate
/// fibres are skipped. The form class is not needed by the search itself and
/// is accepted so callers can pass what they already computed.
std::optional<Witness> falsify(const QuadMap& f, const FormClass& cls, int search_bound,
                               FalsifyOptions opts = {});

}  // namespace quadinv
