#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "quadinv/cli.hpp"
#include "quadinv/json_io.hpp"

using namespace quadinv;

namespace {

const std::string kDir = QUADINV_TEST_DIR;

std::string data(const std::string& name) { return kDir + "/data/" + name; }

struct Run {
  int code;
  json out;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, json::parse(out.str())};
}

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

json golden(const std::string& name) {
  std::ifstream in(kDir + "/golden/" + name);
  REQUIRE(in);
  return json::parse(in);
}

Rational R(const char* s) { return Rational::parse(s); }

template <class T>
void round_trips(const T& x) {
  const json j = x;
  CHECK(json::parse(j.dump()).get<T>() == x);
}

}  // namespace

TEST_CASE("roots quartic on (x - 1)^2 (x^2 + 1)") {
  const Run r = run_cli({"roots", "quartic", "-2", "2", "-2", "1"});
  CHECK(r.code == 0);
  const json& res = r.out["result"];
  CHECK(res["D4"] == "0");
  CHECK(res["A0"] == "32");
  CHECK(res["A1"] == "-32");
  CHECK(res["x0"] == "1");
  CHECK(res["exactly_one_real"] == true);
  CHECK(strip_timing(r.out) == golden("roots_quartic_double_root.json"));
}

TEST_CASE("classify the shear") {
  const Run r = run_cli({"classify", data("shear.json")});
  CHECK(r.code == 0);
  CHECK(r.out["result"]["class"]["tag"] == "Zero");
  CHECK(r.out["result"]["status"] == "InvertibleQuadratic");
  CHECK(r.out["result"]["inverse_description"] == "p = p~ - q~^2, q = q~");
  json expected = golden("classify_shear.json");
  expected["input"]["file"] = data("shear.json");
  CHECK(strip_timing(r.out) == expected);
}

TEST_CASE("verify a repeated complex pair") {
  const Run r = run_cli({"verify", "--quartic", "0", "2", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out["result"]["certificate"]["exactly_one_real"] == false);
  CHECK(r.out["result"]["oracle"]["distinct_real"] == 0);
  CHECK(r.out["oracle_crosscheck"]["agreed"] == true);
  CHECK(strip_timing(r.out) == golden("verify_quartic_complex_pair.json"));
}

TEST_CASE("verify cubic and map files") {
  CHECK(run_cli({"verify", "--cubic", "-1", "-8", "12"}).code == 0);
  CHECK(run_cli({"verify", "--cubic", "0", "1", "0"}).code == 0);
  for (const char* f : {"shear.json", "indefinite.json", "semidefinite.json", "definite.json", "p_squared.json",
                        "conjugated_shear.json", "affine.json"}) {
    const Run r = run_cli({"--seed", "7", "verify", data(f)});
    CHECK_MESSAGE(r.code == 0, f);
    CHECK(r.out["oracle_crosscheck"]["agreed"] == true);
  }
}

TEST_CASE("roots cubic reports the oracle structure") {
  const Run r = run_cli({"roots", "cubic", "0", "-1", "0"});
  CHECK(r.code == 0);
  CHECK(r.out["result"]["verdict"] == "ThreeDistinctReal");
  CHECK(r.out["result"]["root_structure"]["distinct_real"] == 3);
  CHECK(run_cli({"roots", "cubic", "-7/2", "1/3", "0"}).code == 0);
}

TEST_CASE("reduce") {
  const Run z = run_cli({"reduce", data("conjugated_shear.json")});
  CHECK(z.code == 0);
  CHECK(z.out["result"]["transcript"]["reached"] == true);
  CHECK(z.out["result"]["replay_matches"] == true);

  const Run needs = run_cli({"reduce", data("definite.json")});
  CHECK(needs.code == 1);
  CHECK(needs.out["error"]["kind"] == "needs_numeric");

  const Run num = run_cli({"reduce", "--numeric", data("definite.json")});
  CHECK(num.code == 0);
  CHECK(num.out["result"]["transcript"]["steps"].empty());

  CHECK(run_cli({"reduce", data("affine.json")}).code == 1);
}

TEST_CASE("invert and witness") {
  const Run inv = run_cli({"invert", data("shear.json"), "--target", "11", "3"});
  CHECK(inv.code == 0);
  CHECK(inv.out["result"]["preimage"] == json::array({"2", "3"}));

  const Run neg = run_cli({"invert", data("conjugated_shear.json"), "--target", "-7/2", "-1"});
  CHECK(neg.code == 0);
  CHECK(neg.out["result"]["verified"] == true);

  const Run bad = run_cli({"invert", data("indefinite.json"), "--target", "2", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out["error"]["kind"] == "not_invertible");

  const Run w = run_cli({"witness", data("indefinite.json"), "--bound", "4"});
  CHECK(w.code == 0);
  CHECK(w.out["result"]["found"] == true);
  CHECK(w.out["result"]["witness"]["kind"] == "Collision");
  CHECK(w.out["result"]["witness"]["target"] == json::array({"0", "0"}));

  const Run none = run_cli({"witness", data("shear.json"), "--bound", "2"});
  CHECK(none.out["result"]["found"] == false);
}

TEST_CASE("cuboid subcommands") {
  const Run e = run_cli({"cuboid", "eval", "1", "1", "2"});
  CHECK(e.code == 0);
  CHECK(e.out["result"]["value"] == "4032");
  const Run t = run_cli({"cuboid", "transform", "2", "3", "2"});
  CHECK(t.out["result"]["image"] == json::array({"13", "2"}));
  CHECK(t.out["result"]["involution"] == true);
  CHECK(run_cli({"cuboid", "eval", "1", "1/2", "2"}).code == 1);
}

TEST_CASE("malformed input exits 1 with a structured error") {
  for (const char* f : {"malformed.json", "float_coeff.json", "unknown_key.json", "zero_den.json", "missing.json"}) {
    const Run r = run_cli({"classify", data(f)});
    CHECK_MESSAGE(r.code == 1, f);
    CHECK(r.out.contains("error"));
    CHECK(r.out["error"]["kind"].is_string());
  }
  CHECK(run_cli({"roots", "quartic", "1", "2", "x", "4"}).code == 1);
  CHECK(run_cli({"roots", "quartic", "1", "2"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"verify"}).code == 1);
}

TEST_CASE("reports survive a parse round trip") {
  const Run r = run_cli({"classify", data("indefinite.json"), "--bound", "2"});
  CHECK(json::parse(r.out.dump()) == r.out);
  CHECK(r.out["result"].get<InvertibilityVerdict>().status == InvertibilityStatus::NotInvertible);
}

TEST_CASE("json round trips of the records") {
  round_trips(R("-7/2"));
  round_trips(Poly1{R("1/3"), R("0"), R("-2")});
  testkit::RandomRationals rnd(91);
  round_trips(rnd.map());
  round_trips(rnd.invertible_affine());
  round_trips(FormTriple{rnd(), rnd(), rnd()});

  const QuarticCert q = quartic_exactly_one_real(R("-2"), R("2"), R("-2"), R("1"));
  const json jq = q;
  const QuarticCert back = json::parse(jq.dump()).get<QuarticCert>();
  CHECK(json(back) == jq);

  const CubicCert c = cubic_classify(R("-1"), R("-8"), R("12"));
  CHECK(json(json(c).get<CubicCert>()) == json(c));

  const InvertibilityVerdict v = decide_invertibility(shapes::indefinite_canonical(), 2);
  CHECK(json(json(v).get<InvertibilityVerdict>()) == json(v));

  const InvertibilityVerdict s = decide_invertibility(compose_source(shapes::shear(), AffineMap2::swap()));
  CHECK(json(json(s).get<InvertibilityVerdict>()) == json(s));

  CHECK_THROWS_AS(json(1.5).get<Rational>(), parse_error);
  CHECK(json(3).get<Rational>() == Rational(3));
}
