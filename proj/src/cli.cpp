#include "quadinv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "quadinv/cuboid.hpp"
#include "quadinv/json_io.hpp"
#include "quadinv/precanonical.hpp"

namespace quadinv {

namespace {

/// Bad input or an unsatisfiable request; exit code 1.
class input_error : public std::runtime_error {
 public:
  input_error(std::string kind, const std::string& msg) : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

QuadMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("io", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("malformed_json", e.what());
  }
  return j.get<QuadMap>();
}

Rational arg_rational(const std::string& s) { return Rational::parse(s); }

BigInt arg_integer(const std::string& s) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer()) throw parse_error("expected an integer, got '" + s + "'");
  return r.num();
}

std::vector<Rational> arg_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(arg_rational(s));
  return out;
}

std::string monomial_text(const Rational& c, const std::string& mono, bool first) {
  if (c.is_zero()) return {};
  std::string s;
  const Rational mag = c.abs();
  if (first) {
    s = c.sign() < 0 ? "-" : "";
  } else {
    s = c.sign() < 0 ? " - " : " + ";
  }
  if (mono.empty()) return s + mag.str();
  if (mag != Rational(1)) s += mag.str() + "*";
  return s + mono;
}

/// The row written out with the factors of two applied.
std::string row_text(const QuadRow& r, const std::string& x, const std::string& y) {
  const Rational two(2);
  const std::pair<Rational, std::string> terms[] = {
      {two * r.c10, x}, {two * r.c01, y},        {r.c20, x + "^2"},
      {two * r.c11, x + "*" + y}, {r.c02, y + "^2"}, {r.c00, ""}};
  std::string s;
  for (const auto& [c, mono] : terms) s += monomial_text(c, mono, s.empty());
  return s.empty() ? "0" : s;
}

json point_json(const Point2& p) { return json::array({p.first, p.second}); }

bool cubic_agrees(const CubicCert& cert, const Poly1& poly, const RootCount& oracle) {
  switch (cert.verdict) {
    case CubicVerdict::OneSimpleReal:
      return oracle.distinct_real == 1 && oracle.multiplicities == std::vector<int>{1};
    case CubicVerdict::ThreeDistinctReal:
      return oracle.distinct_real == 3;
    case CubicVerdict::RepeatedRootCase: {
      if (oracle.distinct_real != cert.distinct_real_count) return false;
      std::vector<int> want;
      for (const CubicRoot& r : cert.multiplicities) {
        if (!r.exact || !poly(*r.exact).is_zero()) return false;
        want.push_back(r.multiplicity);
      }
      std::vector<int> got = oracle.multiplicities;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      return want == got;
    }
  }
  return false;
}

struct Outcome {
  json input;
  json result;
  std::optional<json> crosscheck;
  int code = 0;
};

Outcome cmd_classify(const std::string& file, int bound) {
  const QuadMap f = load_map(file);
  const InvertibilityVerdict v = decide_invertibility(f, bound);
  Outcome o;
  o.input = {{"file", file}, {"map", f}, {"bound", bound}};
  o.result = v;
  if (v.inverse)
    o.result["inverse_description"] = "p = " + row_text(v.inverse->a, "p~", "q~") +
                                      ", q = " + row_text(v.inverse->b, "p~", "q~");
  return o;
}

Outcome cmd_reduce(const std::string& file, bool numeric) {
  const QuadMap f = load_map(file);
  if (f.a.quadratic_is_zero() && f.b.quadratic_is_zero())
    throw input_error("affine_map", "the quadratic part vanishes; there is nothing to reduce");
  const FormClass cls = classify_form(form_of(f));
  if (cls.tag != FormTag::Zero && !numeric)
    throw input_error("needs_numeric", "reducing a " + std::string(to_string(cls.tag)) +
                                           " map takes irrational scalings; pass --numeric");
  const ReductionTranscript t = precanonicalize(f);
  Outcome o;
  o.input = {{"file", file}, {"map", f}, {"numeric", numeric}};
  o.result = {{"class", cls}, {"transcript", t}, {"replay_matches", t.replay() == t.final_map}};
  if (!(t.replay() == t.final_map)) o.code = 2;
  return o;
}

Outcome cmd_invert(const std::string& file, const std::vector<std::string>& target) {
  const QuadMap f = load_map(file);
  const Rational tp = arg_rational(target.at(0)), tq = arg_rational(target.at(1));
  const InvertibilityVerdict v = decide_invertibility(f, -1);
  if (!v.inverse)
    throw input_error("not_invertible", "map is " + std::string(to_string(v.status)) +
                                            " (class " + std::string(to_string(v.form_class.tag)) + ")");
  const Point2 x = invert(v, tp, tq);
  Outcome o;
  o.input = {{"file", file}, {"map", f}, {"target", json::array({tp, tq})}};
  const bool ok = eval(f, x.first, x.second) == Point2{tp, tq};
  o.result = {{"status", to_string(v.status)}, {"preimage", point_json(x)}, {"verified", ok}};
  if (!ok) o.code = 2;
  return o;
}

Outcome cmd_witness(const std::string& file, int bound) {
  const QuadMap f = load_map(file);
  const FormClass cls = classify_form(form_of(f));
  const auto w = falsify(f, cls, bound);
  Outcome o;
  o.input = {{"file", file}, {"map", f}, {"bound", bound}};
  o.result = {{"class", cls}, {"found", w.has_value()}, {"witness", w ? json(*w) : json(nullptr)}};
  return o;
}

Outcome cmd_roots_cubic(const std::vector<std::string>& args) {
  const auto a = arg_rationals(args);
  const CubicCert cert = cubic_classify(a[0], a[1], a[2]);
  Outcome o;
  o.input = {{"alpha", a}};
  o.result = cert;
  o.result["root_structure"] = sturm_count(Poly1{a[2], a[1], a[0], Rational(1)});
  return o;
}

Outcome cmd_roots_quartic(const std::vector<std::string>& args) {
  const auto a = arg_rationals(args);
  const QuarticCert cert = quartic_exactly_one_real(a[0], a[1], a[2], a[3]);
  Outcome o;
  o.input = {{"a", a}};
  o.result = cert;
  o.result["elimination_ladder"] = elimination_ladder(a[0], a[1], a[2], a[3]);
  o.result["root_structure"] = sturm_count(cert.coeffs.poly());
  return o;
}

Outcome verify_quartic(const std::vector<std::string>& args) {
  const auto a = arg_rationals(args);
  const QuarticCert cert = quartic_exactly_one_real(a[0], a[1], a[2], a[3]);
  const Poly1 p = cert.coeffs.poly();
  const RootCount oracle = sturm_count(p);
  bool agreed = (oracle.distinct_real == 1) == cert.exactly_one_real;
  if (cert.exactly_one_real && cert.x0) agreed = agreed && p(*cert.x0).is_zero();
  Outcome o;
  o.input = {{"quartic", a}};
  o.result = {{"certificate", cert}, {"oracle", oracle}};
  o.crosscheck = json{{"agreed", agreed}, {"oracle_distinct_real", oracle.distinct_real}};
  o.code = agreed ? 0 : 2;
  return o;
}

Outcome verify_cubic(const std::vector<std::string>& args) {
  const auto a = arg_rationals(args);
  const CubicCert cert = cubic_classify(a[0], a[1], a[2]);
  const Poly1 p{a[2], a[1], a[0], Rational(1)};
  const RootCount oracle = sturm_count(p);
  const bool agreed = cubic_agrees(cert, p, oracle);
  Outcome o;
  o.input = {{"cubic", a}};
  o.result = {{"certificate", cert}, {"oracle", oracle}};
  o.crosscheck = json{{"agreed", agreed}, {"oracle_distinct_real", oracle.distinct_real}};
  o.code = agreed ? 0 : 2;
  return o;
}

Outcome verify_map(const std::string& file, std::uint64_t seed) {
  const QuadMap f = load_map(file);
  const InvertibilityVerdict v = decide_invertibility(f, 2);
  json checks = json::array();
  bool agreed = true;

  if (v.inverse) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 5);
    for (int k = 0; k < 5; ++k) {
      const Rational tp(BigInt(num(rng)), BigInt(den(rng))), tq(BigInt(num(rng)), BigInt(den(rng)));
      const Point2 x = invert(v, tp, tq);
      const PreimageResult r = preimage_count(f, tp, tq);
      const bool ok = r.count() == 1 && r.points[0].exact && *r.points[0].exact == x;
      agreed = agreed && ok;
      checks.push_back({{"target", json::array({tp, tq})}, {"oracle_count", r.count()}, {"agreed", ok}});
    }
  } else if (v.witness) {
    const Witness& w = *v.witness;
    bool ok = false;
    try {
      const PreimageResult r = preimage_count(f, w.target.first, w.target.second);
      ok = w.kind == WitnessKind::MissingValue ? r.count() == 0 : r.count() >= 2;
      checks.push_back({{"target", point_json(w.target)}, {"oracle_count", r.count()}, {"agreed", ok}});
    } catch (const degenerate_fiber&) {
      // a curve in the fibre is itself a collision
      ok = w.kind == WitnessKind::Collision;
      checks.push_back({{"target", point_json(w.target)}, {"oracle_count", "infinite"}, {"agreed", ok}});
    }
    for (const PreimagePoint& x : w.preimages)
      if (x.exact) ok = ok && eval(f, x.exact->first, x.exact->second) == w.target;
    agreed = agreed && ok;
  }

  Outcome o;
  o.input = {{"file", file}, {"map", f}, {"seed", seed}};
  o.result = {{"verdict", v}, {"checks", checks}};
  o.crosscheck = json{{"agreed", agreed}};
  o.code = agreed ? 0 : 2;
  return o;
}

Outcome cmd_cuboid_eval(const std::vector<std::string>& args) {
  const BigInt t = arg_integer(args[0]), p = arg_integer(args[1]), q = arg_integer(args[2]);
  Outcome o;
  o.input = {{"t", t.get_str()}, {"p", p.get_str()}, {"q", q.get_str()}};
  o.result = {{"value", cuboid_char_eval(t, p, q).get_str()}, {"warnings", cuboid_param_warnings(t, p, q)}};
  return o;
}

Outcome cmd_cuboid_transform(const std::vector<std::string>& args) {
  const BigInt B = arg_integer(args[0]), p = arg_integer(args[1]), q = arg_integer(args[2]);
  const auto once = cubic_param_transform(B, p, q);
  const auto twice = cubic_param_transform(B, once.first, once.second);
  Outcome o;
  o.input = {{"B", B.get_str()}, {"p", p.get_str()}, {"q", q.get_str()}};
  o.result = {{"image", json::array({once.first.get_str(), once.second.get_str()})},
              {"applied_twice", json::array({twice.first.get_str(), twice.second.get_str()})},
              {"involution", twice == std::pair<BigInt, BigInt>{p, q}}};
  return o;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invertibility analysis of quadratic maps of the plane", "quadinv"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized sampling")->capture_default_str();

  std::string file;
  int bound = 4;
  bool numeric = false;
  std::vector<std::string> target, coeffs, vquartic, vcubic;

  auto* classify = app.add_subcommand("classify", "form class, invertibility verdict and inverse");
  classify->add_option("file", file, "map JSON")->required();
  classify->add_option("--bound", bound, "falsifier search bound")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "reduction transcript to the class representative");
  reduce->add_option("file", file, "map JSON")->required();
  reduce->add_flag("--numeric", numeric, "allow binary64 square and cube roots");

  auto* inv = app.add_subcommand("invert", "exact preimage under an invertible map");
  inv->add_option("file", file, "map JSON")->required();
  inv->add_option("--target", target, "P Q")->expected(2)->required();

  auto* witness = app.add_subcommand("witness", "search for a collision or a missing value");
  witness->add_option("file", file, "map JSON")->required();
  witness->add_option("--bound", bound, "grid half-width in units of 1/2")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "closed-form root certificates");
  roots->require_subcommand(1);
  auto* cubic = roots->add_subcommand("cubic", "q^3 + A1 q^2 + A2 q + A3");
  cubic->add_option("coeffs", coeffs, "A1 A2 A3")->expected(3)->required();
  auto* quartic = roots->add_subcommand("quartic", "x^4 + A1 x^3 + A2 x^2 + A3 x + A4");
  quartic->add_option("coeffs", coeffs, "A1 A2 A3 A4")->expected(4)->required();

  auto* verify = app.add_subcommand("verify", "cross-check a certificate against the Sturm oracle");
  verify->add_option("file", file, "map JSON");
  verify->add_option("--quartic", vquartic, "A1 A2 A3 A4")->expected(4);
  verify->add_option("--cubic", vcubic, "A1 A2 A3")->expected(3);

  auto* cuboid = app.add_subcommand("cuboid", "cuboid polynomial utilities");
  cuboid->require_subcommand(1);
  auto* ceval = cuboid->add_subcommand("eval", "value of the tenth-degree cuboid polynomial");
  ceval->add_option("tpq", coeffs, "T P Q")->expected(3)->required();
  auto* ctrans = cuboid->add_subcommand("transform", "(p, q) -> (B q^3 - p, q)");
  ctrans->add_option("bpq", coeffs, "B P Q")->expected(3)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  Outcome o;
  try {
    if (*classify) {
      command = "classify";
      o = cmd_classify(file, bound);
    } else if (*reduce) {
      command = "reduce";
      o = cmd_reduce(file, numeric);
    } else if (*inv) {
      command = "invert";
      o = cmd_invert(file, target);
    } else if (*witness) {
      command = "witness";
      o = cmd_witness(file, bound);
    } else if (*cubic) {
      command = "roots cubic";
      o = cmd_roots_cubic(coeffs);
    } else if (*quartic) {
      command = "roots quartic";
      o = cmd_roots_quartic(coeffs);
    } else if (*verify) {
      command = "verify";
      const int sources = !file.empty() + !vquartic.empty() + !vcubic.empty();
      if (sources != 1) throw input_error("usage", "verify takes exactly one of FILE, --quartic, --cubic");
      o = !vquartic.empty() ? verify_quartic(vquartic)
          : !vcubic.empty() ? verify_cubic(vcubic)
                            : verify_map(file, seed);
    } else if (*ceval) {
      command = "cuboid eval";
      o = cmd_cuboid_eval(coeffs);
    } else if (*ctrans) {
      command = "cuboid transform";
      o = cmd_cuboid_transform(coeffs);
    }
  } catch (const input_error& e) {
    out << error_json(e.kind(), e.what()).dump(2) << "\n";
    return 1;
  } catch (const parse_error& e) {
    out << error_json("parse", e.what()).dump(2) << "\n";
    return 1;
  } catch (const degenerate_fiber& e) {
    out << error_json("degenerate_fiber", e.what()).dump(2) << "\n";
    return 1;
  } catch (const arithmetic_error& e) {
    out << error_json("arithmetic", e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    out << error_json("invalid_argument", e.what()).dump(2) << "\n";
    return 1;
  } catch (const json::exception& e) {
    out << error_json("malformed_json", e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    out << error_json("internal", e.what()).dump(2) << "\n";
    return 2;
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json report{{"command", command}, {"input", o.input}, {"result", o.result}};
  if (o.crosscheck) report["oracle_crosscheck"] = *o.crosscheck;
  report["timing"] = {{"elapsed_ms", ms}};
  out << report.dump(2) << "\n";
  return o.code;
}

}  // namespace quadinv
