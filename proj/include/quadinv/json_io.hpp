#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding of every certificate record.
 *
 * Rationals are always strings ("3", "-7/2"). A polynomial is the list of its
 * coefficients from the constant term up. A map is
 * {"a": {"20": r, "11": r, "02": r, "10": r, "01": r, "00": r}, "b": {...}}
 * holding the stored coefficients (the 2 in 2 a11 p q is not included).
 * Malformed input raises parse_error.
 */

#include <json.hpp>

#include "quadinv/invertibility.hpp"
#include "quadinv/rootcert.hpp"
#include "quadinv/sturm.hpp"

namespace quadinv {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Poly1& p);
void from_json(const json& j, Poly1& p);

void to_json(json& j, const QuadMap& f);
void from_json(const json& j, QuadMap& f);

void to_json(json& j, const AffineMap2& t);
void from_json(const json& j, AffineMap2& t);

void to_json(json& j, const RationalInterval& iv);
void from_json(const json& j, RationalInterval& iv);

void to_json(json& j, const RootCount& rc);
void from_json(const json& j, RootCount& rc);

void to_json(json& j, const CubicCert& c);
void from_json(const json& j, CubicCert& c);

void to_json(json& j, const QuarticCert& c);
void from_json(const json& j, QuarticCert& c);

void to_json(json& j, const EliminationLadder& l);

void to_json(json& j, const FormTriple& t);
void from_json(const json& j, FormTriple& t);

void to_json(json& j, const FormClass& c);
void from_json(const json& j, FormClass& c);

void to_json(json& j, const LightVectors& lv);

void to_json(json& j, const PreimagePoint& p);
void from_json(const json& j, PreimagePoint& p);

void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);

void to_json(json& j, const TranscriptStep& s);
void from_json(const json& j, TranscriptStep& s);

void to_json(json& j, const ReductionTranscript& t);
void from_json(const json& j, ReductionTranscript& t);

void to_json(json& j, const InvertibilityVerdict& v);
void from_json(const json& j, InvertibilityVerdict& v);

void to_json(json& j, const PreimageResult& r);

}  // namespace quadinv
