#pragma once

/**
 * @file invertibility.hpp
 * @brief Reduction transcripts, the invertibility decision, inversion and
 *        the integer-lattice check.
 *
 * A transcript records affine steps applied to the target (f := t o f) or to
 * the source (f := f o t). Replaying the steps on `initial` gives `final_map`.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadinv/preimage.hpp"
#include "quadinv/quadform.hpp"
#include "quadinv/quadmap.hpp"

namespace quadinv {

enum class StepSide { Source, Target };

std::string_view to_string(StepSide s);

struct TranscriptStep {
  StepSide side = StepSide::Target;
  AffineMap2 map;
  std::string rule;
  bool numeric = false;  ///< entries were computed in binary64
};

struct ReductionTranscript {
  QuadMap initial;
  QuadMap final_map;
  std::vector<TranscriptStep> steps;
  std::string target_shape;  ///< shear, shear-obstructed, indefinite-canonical, ...
  bool reached = true;       ///< final_map matches target_shape (within tolerance if numeric)
  bool numeric = false;
  double max_deviation = 0.0;
  std::vector<std::string> notes;

  /// Applies the steps to `initial` in exact arithmetic.
  QuadMap replay() const;
  /// Composite of the target steps (outermost last) and of the source steps.
  AffineMap2 target_composite() const;
  AffineMap2 source_composite() const;
};

enum class InvertibilityStatus { InvertibleQuadratic, InvertibleAffine, NotInvertible, DegenerateConstant };

std::string_view to_string(InvertibilityStatus s);

struct InvertibilityVerdict {
  InvertibilityStatus status = InvertibilityStatus::NotInvertible;
  FormTriple triple;
  FormClass form_class;
  std::optional<ReductionTranscript> transcript;
  std::optional<QuadMap> inverse;  ///< closed-form inverse as a quadratic map
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

/// Exact reduction of a map with zero associated form toward the shear
/// p~ = p + q^2, q~ = q. Stops at the first obstruction, in which case
/// `reached` is false and `witness` (if given) receives an exact collision
/// or missing value in the original coordinates. Throws std::invalid_argument
/// when the form is not zero or the quadratic part vanishes.
ReductionTranscript reduce_zero_class(const QuadMap& f, std::optional<Witness>* witness = nullptr);

/// A negative falsifier_bound skips the witness search for non-zero classes.
InvertibilityVerdict decide_invertibility(const QuadMap& f, int falsifier_bound = 4);

class not_invertible_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Point2 invert(const InvertibilityVerdict& v, const Rational& tp, const Rational& tq);

struct LatticeReport {
  bool bijective_on_lattice = false;
  std::string reason;
};

/// True when every coefficient of the row maps Z^2 into Z.
bool integral_on_lattice(const QuadMap& f);

LatticeReport lattice_check(const QuadMap& f);

}  // namespace quadinv
