#include "quadinv/json_io.hpp"

#include <array>
#include <string>

namespace quadinv {

namespace {

template <class E, std::size_t N>
E enum_from(const json& j, const std::array<E, N>& values, std::string_view what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
  const std::string s = j.get<std::string>();
  for (E v : values)
    if (to_string(v) == s) return v;
  throw parse_error("unknown " + std::string(what) + " '" + s + "'");
}

constexpr std::array kCubicVerdicts{CubicVerdict::OneSimpleReal, CubicVerdict::ThreeDistinctReal,
                                    CubicVerdict::RepeatedRootCase};
constexpr std::array kQuarticBranches{
    QuarticBranch::GenericSimpleRoots, QuarticBranch::DoubleRootBranch,
    QuarticBranch::TwoDoubleRealBranch, QuarticBranch::DoubleRootRealPair,
    QuarticBranch::QuadrupleBranch,    QuarticBranch::PairedRepeatedRoots};
constexpr std::array kFormTags{FormTag::Zero, FormTag::Indefinite, FormTag::SemiDefinite,
                               FormTag::Definite};
constexpr std::array kWitnessKinds{WitnessKind::Collision, WitnessKind::MissingValue};
constexpr std::array kSides{StepSide::Source, StepSide::Target};
constexpr std::array kStatuses{InvertibilityStatus::InvertibleQuadratic,
                               InvertibilityStatus::InvertibleAffine,
                               InvertibilityStatus::NotInvertible,
                               InvertibilityStatus::DegenerateConstant};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

constexpr std::array<const char*, 6> kRowKeys{"20", "11", "02", "10", "01", "00"};

json row_json(const QuadRow& r) {
  const std::array<const Rational*, 6> c{&r.c20, &r.c11, &r.c02, &r.c10, &r.c01, &r.c00};
  json j = json::object();
  for (std::size_t i = 0; i < 6; ++i) j[kRowKeys[i]] = *c[i];
  return j;
}

QuadRow row_from(const json& j) {
  if (!j.is_object()) throw parse_error("map row must be an object");
  QuadRow r;
  const std::array<Rational*, 6> c{&r.c20, &r.c11, &r.c02, &r.c10, &r.c01, &r.c00};
  for (const auto& [key, value] : j.items()) {
    std::size_t i = 0;
    while (i < 6 && key != kRowKeys[i]) ++i;
    if (i == 6) throw parse_error("unknown coefficient key '" + key + "'");
    *c[i] = value.get<Rational>();
  }
  return r;
}

json point_json(const Point2& p) { return json::array({p.first, p.second}); }

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw parse_error("point must be a pair");
  return {j[0].get<Rational>(), j[1].get<Rational>()};
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = j.is_number_unsigned() ? Rational(BigInt(std::to_string(j.get<unsigned long long>())))
                               : Rational(j.get<long long>());
  } else {
    throw parse_error("rational must be a string or an integer, got " + j.dump());
  }
}

void to_json(json& j, const Poly1& p) {
  j = json::array();
  for (const Rational& c : p.coeffs()) j.push_back(c);
}

void from_json(const json& j, Poly1& p) {
  if (!j.is_array()) throw parse_error("polynomial must be a coefficient list");
  std::vector<Rational> c;
  for (const json& x : j) c.push_back(x.get<Rational>());
  p = Poly1(std::move(c));
}

void to_json(json& j, const QuadMap& f) { j = json{{"a", row_json(f.a)}, {"b", row_json(f.b)}}; }

void from_json(const json& j, QuadMap& f) {
  if (!j.is_object()) throw parse_error("map must be an object with rows 'a' and 'b'");
  f = QuadMap{};
  for (const auto& [key, value] : j.items()) {
    if (key == "a") {
      f.a = row_from(value);
    } else if (key == "b") {
      f.b = row_from(value);
    } else {
      throw parse_error("unknown map key '" + key + "'");
    }
  }
}

void to_json(json& j, const AffineMap2& t) {
  j = json{{"m11", t.m11}, {"m12", t.m12}, {"m21", t.m21}, {"m22", t.m22}, {"s1", t.s1}, {"s2", t.s2}};
}

void from_json(const json& j, AffineMap2& t) {
  t.m11 = field(j, "m11").get<Rational>();
  t.m12 = field(j, "m12").get<Rational>();
  t.m21 = field(j, "m21").get<Rational>();
  t.m22 = field(j, "m22").get<Rational>();
  t.s1 = field(j, "s1").get<Rational>();
  t.s2 = field(j, "s2").get<Rational>();
}

void to_json(json& j, const RationalInterval& iv) { j = json::array({iv.lo, iv.hi}); }

void from_json(const json& j, RationalInterval& iv) {
  const Point2 p = point_from(j);
  iv = {p.first, p.second};
}

void to_json(json& j, const RootCount& rc) {
  j = json{{"distinct_real", rc.distinct_real},
           {"isolating_intervals", rc.isolating_intervals},
           {"multiplicities", rc.multiplicities}};
}

void from_json(const json& j, RootCount& rc) {
  rc.distinct_real = field(j, "distinct_real").get<int>();
  rc.isolating_intervals = field(j, "isolating_intervals").get<std::vector<RationalInterval>>();
  rc.multiplicities = field(j, "multiplicities").get<std::vector<int>>();
}

void to_json(json& j, const CubicCert& c) {
  json roots = json::array();
  for (const CubicRoot& r : c.multiplicities)
    roots.push_back({{"root", optional_json(r.exact)}, {"multiplicity", r.multiplicity}});
  j = json{{"alpha1", c.alpha1},
           {"alpha2", c.alpha2},
           {"alpha3", c.alpha3},
           {"D3", c.D3},
           {"verdict", to_string(c.verdict)},
           {"distinct_real_count", c.distinct_real_count},
           {"multiplicities", roots}};
}

void from_json(const json& j, CubicCert& c) {
  c.alpha1 = field(j, "alpha1").get<Rational>();
  c.alpha2 = field(j, "alpha2").get<Rational>();
  c.alpha3 = field(j, "alpha3").get<Rational>();
  c.D3 = field(j, "D3").get<Rational>();
  c.verdict = enum_from(field(j, "verdict"), kCubicVerdicts, "cubic verdict");
  c.distinct_real_count = field(j, "distinct_real_count").get<int>();
  c.multiplicities.clear();
  for (const json& r : field(j, "multiplicities"))
    c.multiplicities.push_back({optional_from<Rational>(r, "root"), field(r, "multiplicity").get<int>()});
}

void to_json(json& j, const QuarticCert& c) {
  json factor = nullptr;
  if (c.factor) factor = json{{"b1", c.factor->b1}, {"b2", c.factor->b2}, {"D2", c.factor->D2}};
  j = json{{"a1", c.coeffs.a1},
           {"a2", c.coeffs.a2},
           {"a3", c.coeffs.a3},
           {"a4", c.coeffs.a4},
           {"D4", c.D4},
           {"A0", c.aux.A0},
           {"A1", c.aux.A1},
           {"B2", c.aux.B2},
           {"D2_special", c.aux.D2_special},
           {"exactly_one_real", c.exactly_one_real},
           {"branch", to_string(c.branch)},
           {"x0", optional_json(c.x0)},
           {"factor", factor}};
}

void from_json(const json& j, QuarticCert& c) {
  c.coeffs = {field(j, "a1").get<Rational>(), field(j, "a2").get<Rational>(),
              field(j, "a3").get<Rational>(), field(j, "a4").get<Rational>()};
  c.D4 = field(j, "D4").get<Rational>();
  c.aux = {field(j, "A0").get<Rational>(), field(j, "A1").get<Rational>(),
           field(j, "B2").get<Rational>(), field(j, "D2_special").get<Rational>()};
  c.exactly_one_real = field(j, "exactly_one_real").get<bool>();
  c.branch = enum_from(field(j, "branch"), kQuarticBranches, "quartic branch");
  c.x0 = optional_from<Rational>(j, "x0");
  c.factor.reset();
  if (j.contains("factor") && !j.at("factor").is_null()) {
    const json& fj = j.at("factor");
    c.factor = QuadraticFactor{field(fj, "b1").get<Rational>(), field(fj, "b2").get<Rational>(),
                               field(fj, "D2").get<Rational>()};
  }
}

void to_json(json& j, const EliminationLadder& l) {
  j = json{{"Q3", l.Q3}, {"Q2", l.Q2}, {"R2", l.R2}, {"P1", l.P1}};
}

void to_json(json& j, const FormTriple& t) {
  j = json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

void from_json(const json& j, FormTriple& t) {
  t = {field(j, "alpha").get<Rational>(), field(j, "beta").get<Rational>(),
       field(j, "gamma").get<Rational>()};
}

void to_json(json& j, const FormClass& c) {
  j = json{{"tag", to_string(c.tag)}, {"det_omega1", c.det_omega1}};
}

void from_json(const json& j, FormClass& c) {
  c.tag = enum_from(field(j, "tag"), kFormTags, "form class");
  c.det_omega1 = field(j, "det_omega1").get<Rational>();
}

void to_json(json& j, const LightVectors& lv) {
  if (lv.all_vectors) {
    j = "all vectors";
    return;
  }
  j = json::array();
  for (const LightDirection& d : lv.directions) {
    if (d.exact) {
      j.push_back({{"direction", point_json(*d.exact)}});
    } else {
      j.push_back({{"direction", json::array({"t", "1"})},
                   {"t_minimal_polynomial", d.minimal_poly},
                   {"t_interval", d.interval},
                   {"approx", d.approx()}});
    }
  }
}

void to_json(json& j, const PreimagePoint& p) {
  if (p.exact) {
    j = point_json(*p.exact);
  } else {
    j = json{{"p_box", p.p_box}, {"q_box", p.q_box}};
  }
}

void from_json(const json& j, PreimagePoint& p) {
  if (j.is_array()) {
    const Point2 x = point_from(j);
    p = {x, {x.first, x.first}, {x.second, x.second}};
  } else {
    p = {std::nullopt, field(j, "p_box").get<RationalInterval>(), field(j, "q_box").get<RationalInterval>()};
  }
}

void to_json(json& j, const Witness& w) {
  j = json{{"kind", to_string(w.kind)}, {"target", point_json(w.target)}, {"preimages", w.preimages}};
}

void from_json(const json& j, Witness& w) {
  w.kind = enum_from(field(j, "kind"), kWitnessKinds, "witness kind");
  w.target = point_from(field(j, "target"));
  w.preimages = field(j, "preimages").get<std::vector<PreimagePoint>>();
}

void to_json(json& j, const TranscriptStep& s) {
  j = json{{"side", to_string(s.side)}, {"map", s.map}, {"rule", s.rule}, {"numeric", s.numeric}};
  if (s.numeric) {
    j["decimal"] = {{"m11", s.map.m11.to_double()}, {"m12", s.map.m12.to_double()},
                    {"m21", s.map.m21.to_double()}, {"m22", s.map.m22.to_double()},
                    {"s1", s.map.s1.to_double()},   {"s2", s.map.s2.to_double()}};
  }
}

void from_json(const json& j, TranscriptStep& s) {
  s.side = enum_from(field(j, "side"), kSides, "step side");
  s.map = field(j, "map").get<AffineMap2>();
  s.rule = field(j, "rule").get<std::string>();
  s.numeric = field(j, "numeric").get<bool>();
}

void to_json(json& j, const ReductionTranscript& t) {
  j = json{{"initial", t.initial},         {"final", t.final_map},
           {"steps", t.steps},             {"target_shape", t.target_shape},
           {"reached", t.reached},         {"numeric", t.numeric},
           {"max_deviation", t.max_deviation}, {"notes", t.notes}};
}

void from_json(const json& j, ReductionTranscript& t) {
  t.initial = field(j, "initial").get<QuadMap>();
  t.final_map = field(j, "final").get<QuadMap>();
  t.steps = field(j, "steps").get<std::vector<TranscriptStep>>();
  t.target_shape = field(j, "target_shape").get<std::string>();
  t.reached = field(j, "reached").get<bool>();
  t.numeric = field(j, "numeric").get<bool>();
  t.max_deviation = field(j, "max_deviation").get<double>();
  t.notes = field(j, "notes").get<std::vector<std::string>>();
}

void to_json(json& j, const InvertibilityVerdict& v) {
  j = json{{"status", to_string(v.status)},
           {"form", v.triple},
           {"class", v.form_class},
           {"transcript", optional_json(v.transcript)},
           {"inverse", optional_json(v.inverse)},
           {"witness", optional_json(v.witness)},
           {"notes", v.notes}};
}

void from_json(const json& j, InvertibilityVerdict& v) {
  v.status = enum_from(field(j, "status"), kStatuses, "status");
  v.triple = field(j, "form").get<FormTriple>();
  v.form_class = field(j, "class").get<FormClass>();
  v.transcript = optional_from<ReductionTranscript>(j, "transcript");
  v.inverse = optional_from<QuadMap>(j, "inverse");
  v.witness = optional_from<Witness>(j, "witness");
  v.notes = field(j, "notes").get<std::vector<std::string>>();
}

void to_json(json& j, const PreimageResult& r) {
  j = json{{"resolvent", r.resolvent},
           {"q_roots", r.q_roots},
           {"count", r.count()},
           {"preimages", r.points}};
}

}  // namespace quadinv
