#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "ydual/catalog.hpp"
#include "ydual/scenario.hpp"

using namespace ydual;
using namespace ydual::testing;
using nlohmann::json;

namespace {

const std::string src = YDUAL_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scenario_path(const std::string& name) { return src + "/scenarios/" + name + ".json"; }

json super_line_doc() { return json::parse(slurp(scenario_path("super_line"))); }

// message of the ScenarioError thrown by parsing `text`
std::string parse_error(const std::string& text) {
  try {
    (void)parse_scenario_text(text);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  FAIL("no ScenarioError");
  return {};
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string out = (dir / "ydual_cli_out.txt").string();
  const std::string err = (dir / "ydual_cli_err.txt").string();
  const std::string cmd = std::string(YDUAL_CLI) + " " + args + " > " + out + " 2> " + err;
  const int raw = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(raw));
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("canonical files are fixed points of parse then serialize") {
  for (const char* name : {"trivial", "super_line", "super_plane", "poly_line_N6",
                           "qi_line_negative", "sweedler_base_negative"}) {
    const std::string text = slurp(scenario_path(name));
    const ScenarioFile f = parse_scenario_text(text);
    CHECK_MESSAGE(serialize_scenario(f.scenario, f.suites) == text, name);
  }
}

TEST_CASE("catalog examples serialize to the shipped files") {
  for (const auto& e : catalog())
    CHECK_MESSAGE(serialize_scenario(build_example(e.name)) == slurp(scenario_path(e.name)),
                  e.name);
}

TEST_CASE("shorthand forms expand to the inline scenario") {
  const ScenarioFile f = parse_scenario(scenario_path("super_line_short"));
  CHECK(f.scenario.evaluation);
  DualityScenario s = f.scenario;
  s.name = "super_line";
  const std::string once = serialize_scenario(s);
  CHECK(once == slurp(scenario_path("super_line")));
  const ScenarioFile again = parse_scenario_text(once);
  CHECK(serialize_scenario(again.scenario) == once);
}

TEST_CASE("a parsed file runs exactly like the built example") {
  for (const char* name : {"super_line", "poly_line_N6", "qi_line_negative"}) {
    const ScenarioFile f = parse_scenario(scenario_path(name));
    CHECK(run_suites(f.scenario, f.suites).to_json(false) ==
          verify_duality(build_example(name)).to_json(false));
  }
}

TEST_CASE("scalar errors name the field") {
  json d = super_line_doc();
  d["H"]["mult"][1][2] = "1/0";
  const std::string m = parse_error(d.dump());
  CHECK(m.find("H.mult[1][2]") != std::string::npos);
  CHECK(m.find("zero denominator") != std::string::npos);

  d = super_line_doc();
  d["base"]["antipode"][0][0] = 1.0;
  CHECK(parse_error(d.dump()).find("base.antipode[0][0]: floats are not accepted") !=
        std::string::npos);

  d = super_line_doc();
  d["pairing"]["values"][0][0] = "x";
  CHECK(parse_error(d.dump()).find("pairing.values[0][0]") != std::string::npos);

  // integers and reducible fractions are fine
  d = super_line_doc();
  d["H"]["antipode"][0][0] = 1;
  d["pairing"]["values"][1][1] = "2/2";
  CHECK(serialize_scenario(parse_scenario_text(d.dump()).scenario) ==
        slurp(scenario_path("super_line")));
}

TEST_CASE("semantic errors") {
  json d = super_line_doc();
  d["H"]["module"] = "Hx";
  CHECK(parse_error(d.dump()).find("H.module: undefined module 'Hx'") != std::string::npos);

  d = super_line_doc();
  d["Hd"]["module"] = "H";
  CHECK(parse_error(d.dump()).find("already used by H") != std::string::npos);

  d = super_line_doc();
  d["H"]["mult"].erase(1);
  CHECK(parse_error(d.dump()).find("H.mult: expected a 2x4 matrix") != std::string::npos);

  d = super_line_doc();
  d["modules"]["R"]["coaction"][0].push_back("0");
  CHECK(parse_error(d.dump()).find("modules.R.coaction[0]") != std::string::npos);

  d = super_line_doc();
  d["colour"] = "blue";
  CHECK(parse_error(d.dump()).find("colour: unknown field") != std::string::npos);

  d = super_line_doc();
  d.erase("R");
  CHECK(parse_error(d.dump()).find("R: missing") != std::string::npos);

  d = super_line_doc();
  d["field"] = "GF:x";
  CHECK(parse_error(d.dump()).find("field:") != std::string::npos);

  d = super_line_doc();
  d["truncation"] = 3;
  CHECK(parse_error(d.dump()).find("truncation: only graded") != std::string::npos);

  d = super_line_doc();
  d["suites"] = {"axioms", "everything"};
  CHECK(parse_error(d.dump()).find("suites[1]") != std::string::npos);

  d = super_line_doc();
  d["modules"]["Spare"] = d["modules"]["H"];
  CHECK(parse_error(d.dump()).find("modules.Spare: defined but never used") !=
        std::string::npos);

  d = super_line_doc();
  d["Hd"] = "graded-dual-of:H";
  CHECK(parse_error(d.dump()).find("use dual-of:H") != std::string::npos);

  d = super_line_doc();
  d["pairing"] = "pairwise";
  CHECK(parse_error(d.dump()).find("unknown pairing") != std::string::npos);

  json p = json::parse(slurp(scenario_path("poly_line_N6")));
  p["truncation"] = 5;
  CHECK(parse_error(p.dump()).find("truncation: is 5") != std::string::npos);
  p = json::parse(slurp(scenario_path("poly_line_N6")));
  // a pairing that mixes degrees
  p["pairing"]["values"][0][1] = "1";
  CHECK(parse_error(p.dump()).find("pairing.values") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"name\": \"x\",\n  oops\n}\n";
  try {
    (void)parse_scenario_text(text);
    FAIL("parsed");
  } catch (const ScenarioSyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
  }
  try {
    (void)parse_scenario_text("{\"name\": \"x\",");
    FAIL("parsed");
  } catch (const ScenarioSyntaxError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS((void)parse_scenario(src + "/scenarios/no_such_file.json"), ScenarioError);
}

TEST_CASE("H as the dual of H^d with the braided evaluation") {
  // H^d := Λ(x) and H := its dual, paired by ⟨f, x⟩ = ev(C(f⊗x)): the
  // swapped form of super_line
  json d = super_line_doc();
  json hd = d["H"];
  hd["module"] = "Hd";
  json mods;
  mods["Hd"] = d["modules"]["H"];
  d["modules"] = mods;
  d["Hd"] = hd;
  d["H"] = "dual-of:Hd";
  d["pairing"] = "evaluation-composed-with-braiding";
  d["R"] = "hd-with-comult";
  const ScenarioFile f = parse_scenario_text(d.dump());
  CHECK_FALSE(f.scenario.evaluation);
  CHECK(failures(check_quasi_dual(*f.scenario.pairing, "qd")) == 0);
  const Matrix v = f.scenario.pairing->values();
  CHECK(v(1, 1) == Scalar(-1));
  const Report r = run_suites(f.scenario, {Suite::duality});
  INFO(failing_ids(r));
  CHECK(r.exit_code() == 0);
}

TEST_CASE("suites from the file, deduplicated") {
  json d = super_line_doc();
  d["suites"] = {"axioms", "axioms"};
  const ScenarioFile f = parse_scenario_text(d.dump());
  REQUIRE(f.suites.size() == 2);
  const Report a = run_suites(f.scenario, f.suites);
  CHECK(a.items().size() == verify_duality(f.scenario, Suite::axioms).items().size());
  d["suites"] = {"lemmas", "all"};
  CHECK(run_suites(parse_scenario_text(d.dump()).scenario, {Suite::lemmas, Suite::all})
            .items()
            .size() == verify_duality(f.scenario).items().size());
}

TEST_CASE("cli exit codes") {
  Run r = cli("verify " + scenario_path("super_line") + " --no-timestamp");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["summary"]["fail"] == 0);
  CHECK(r.out.find("timestamp") == std::string::npos);

  r = cli("verify " + scenario_path("poly_line_no_factorial") + " --suite axioms --report text");
  CHECK(r.code == 1);
  CHECK(r.out.find("[fail] def-1.1-mult-h") != std::string::npos);

  r = cli("verify " + scenario_path("super_line_zeroed_row") + " --suite axioms");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"hyp-left-faithful\"") != std::string::npos);

  r = cli("example qi_line_negative");
  CHECK(r.code == 1);
  CHECK(r.out.find("pipeline-refused") != std::string::npos);
  CHECK(r.out.find("\"timestamp\"") != std::string::npos);

  r = cli("verify " + src + "/scenarios/no_such_file.json");
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot open") != std::string::npos);

  r = cli("example nope");
  CHECK(r.code == 2);
  CHECK(r.err.find("super_plane") != std::string::npos);

  r = cli("verify " + scenario_path("super_line") + " --suite bogus");
  CHECK(r.code == 2);
  r = cli("");
  CHECK(r.code == 2);

  r = cli("list");
  CHECK(r.code == 0);
  for (const auto& e : catalog()) CHECK(r.out.find(e.name) != std::string::npos);
}

TEST_CASE("cli determinism and overrides") {
  const Run a = cli("verify " + scenario_path("super_plane") + " --no-timestamp");
  const Run b = cli("verify " + scenario_path("super_plane") + " --no-timestamp");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const Run n4 = cli("example poly_line_N6 --truncation 4 --suite axioms --no-timestamp");
  CHECK(n4.code == 0);
  CHECK(json::parse(n4.out)["scenario"] == "poly_line_N4");

  const Run exp = cli("export super_line");
  CHECK(exp.code == 0);
  CHECK(exp.out == slurp(scenario_path("super_line")));

  const Run text = cli("example super_line --suite duality --report text");
  CHECK(text.out.find("[pass] thm-1.8-phi-psi-id") != std::string::npos);
}
