#pragma once

/**
 * @file precanonical.hpp
 * @brief Reduction of a quadratic map to the representative shape of its class.
 *
 * Zero forms use the exact reduction from invertibility.hpp. The other
 * classes may need square and cube roots; such steps are computed in binary64,
 * stored as the exact dyadic rationals they round to, and flagged numeric.
 * The replay is therefore exact, and the final map is compared with the
 * target shape at relative tolerance 1e-9.
 */

#include "quadinv/invertibility.hpp"

namespace quadinv {

inline constexpr double kPrecanonicalTolerance = 1e-9;

/// Throws std::invalid_argument when the quadratic part vanishes.
ReductionTranscript precanonicalize(const QuadMap& f);

/// Largest |c - target| / max(1, |target|) over the fixed coefficients of a
/// shape; coefficients the shape leaves free are skipped.
double shape_deviation(const QuadMap& f, std::string_view shape);

}  // namespace quadinv
