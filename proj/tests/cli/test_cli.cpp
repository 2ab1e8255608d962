#include <string>

#include "cli/runner.hpp"
#include "cli/scenario.hpp"
#include "doctest.h"

using namespace relstab;
using namespace relstab::cli;

namespace {

const std::string kModule = R"(# J3 over kC4
field p=2
context kind=module
group kind=cyclic n=4
subgroup elems=[2]
system kind=subgroup_induced
object kind=jordan size=3
task kind=localize cap=4 window=2 seed=7
)";

const std::string kComplex = R"(field p=2
context kind=complex
system kind=truncation
object kind=complex degrees=[-1,0] dims=[1,1] d0=[[0]]
task kind=verify window=2 seed=7
)";

std::string module_scenario(const std::string& object, const std::string& task) {
  return "field p=2\ncontext kind=module\ngroup kind=cyclic n=4\nsubgroup elems=[2]\n"
         "system kind=subgroup_induced\nobject " + object + "\ntask " + task + "\n";
}

ScenarioError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e;
  }
  FAIL("scenario parsed");
  throw;
}

ErrorKind run_error(const std::string& text) {
  try {
    run_scenario(parse_scenario(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("scenario ran");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("defaults are filled in") {
  const Scenario sc = parse_scenario("field p=3\ncontext kind=complex\nsystem kind=truncation\nobject kind=sphere degree=0\n");
  CHECK(sc.p == 3);
  CHECK(sc.task.kind == "localize");
  CHECK(sc.task.cap == 4);
  CHECK(sc.task.window == 2);
  CHECK(sc.task.seed == 1);
  CHECK(sc.task.depth == 1);
  CHECK(sc.task.budget == 4096);
  CHECK(sc.system.cutoff == 0);
  CHECK_FALSE(sc.group.has_value());

  const Json j = scenario_json(parse_scenario(kModule));
  CHECK(j["task"]["seed"] == 7);
  CHECK(j["task"]["budget"] == 4096);
  CHECK(j["subgroup"] == Json::array({2}));
}

TEST_CASE("syntax errors carry line and column") {
  auto e = parse_error("field p=2\ncontext kind=module kind=complex\n");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.line() == 2);
  CHECK(e.column() == 21);

  e = parse_error("field p=2\nwidget size=3\n");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.line() == 2);

  e = parse_error("field p=2 q=3\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 11);

  e = parse_error("field p=[2,3\n");
  CHECK(e.kind() == ErrorKind::ParseError);

  e = parse_error("field p=2\nfield p=3\n");
  CHECK(e.line() == 2);

  e = parse_error("field p=99999999999999999999999\n");
  CHECK(e.kind() == ErrorKind::ParseError);
}

TEST_CASE("semantic errors carry the key path") {
  auto e = parse_error("field p=4\ncontext kind=complex\nsystem kind=truncation\nobject kind=sphere degree=0\n");
  CHECK(e.kind() == ErrorKind::ValidationError);
  CHECK(e.path() == "field.p");

  e = parse_error("field p=2\ncontext kind=complex\nsystem kind=subgroup_induced\nobject kind=sphere degree=0\n");
  CHECK(e.path() == "system.kind");

  e = parse_error(module_scenario("kind=jordan size=3", "kind=localize cap=99"));
  CHECK(e.path() == "task.cap");

  e = parse_error(module_scenario("kind=jordan", "kind=localize"));
  CHECK(e.path() == "object.size");

  e = parse_error("field p=2\ncontext kind=complex\nsystem kind=truncation\n"
                  "object kind=complex degrees=[0,2] dims=[1,1]\n");
  CHECK(e.path() == "object.degrees");

  e = parse_error("context kind=complex\nsystem kind=truncation\nobject kind=sphere degree=0\n");
  CHECK(e.path() == "field");
}

TEST_CASE("materialization errors are validation errors") {
  // jordan modules need a cyclic p-group in characteristic p
  CHECK(run_error(module_scenario("kind=jordan size=5", "kind=localize")) == ErrorKind::ValidationError);
  // d0 has the wrong shape for dims [1,2]
  CHECK(run_error("field p=2\ncontext kind=complex\nsystem kind=truncation\n"
                  "object kind=complex degrees=[0,1] dims=[1,2] d1=[[1]]\n") == ErrorKind::ValidationError);
  // d o d != 0
  CHECK(run_error("field p=2\ncontext kind=complex\nsystem kind=truncation\n"
                  "object kind=complex degrees=[0,1,2] dims=[1,1,1] d1=[[1]] d2=[[1]]\n") == ErrorKind::ValidationError);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::ParseError) == kInputError);
  CHECK(exit_code_for(ErrorKind::ValidationError) == kInputError);
  CHECK(exit_code_for(ErrorKind::IoError) == kInputError);
  CHECK(exit_code_for(ErrorKind::NotFinite) == kExhausted);
  CHECK(exit_code_for(ErrorKind::DimensionBudgetExceeded) == kExhausted);
  CHECK(exit_code_for(ErrorKind::BudgetExceeded) == kExhausted);
  CHECK(exit_code_for(ErrorKind::CompositeNonzero) == kVerdictFail);
  CHECK_THROWS_AS(load_scenario("/nonexistent/relstab.scn"), Error);
}

TEST_CASE("reports have the documented top-level keys") {
  const RunResult r = run_scenario(parse_scenario(kComplex));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.report.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"scenario", "hypotheses", "resolution", "ladder", "verification", "oracle",
                                         "stable_hom", "verdict", "seed", "version"});
  CHECK(r.report["seed"] == 7);
  CHECK(r.report["version"] == kVersion);
  CHECK(dump_json(r.report).back() == '\n');
  CHECK(render_text(r.report).find("verdict: pass") != std::string::npos);
}

TEST_CASE("truncation of a two-term complex verifies") {
  const RunResult r = run_scenario(parse_scenario(kComplex));
  CHECK(r.exit_code == kOk);
  CHECK(r.report["verdict"] == "pass");
  CHECK(r.report["resolution"]["outcome"] == "FiniteDim");
  CHECK(r.report["resolution"]["d"] == 1);
  CHECK(r.report["ladder"]["dim_l0"] == 1);
  CHECK(r.report["verification"]["verdict"] == "pass");
}

TEST_CASE("a member localizes to itself") {
  const RunResult r = run_scenario(parse_scenario(module_scenario("kind=induced of=trivial", "kind=localize")));
  CHECK(r.exit_code == kOk);
  CHECK(r.report["verdict"] == "pass");
  CHECK(r.report["resolution"]["d"] == 0);
  CHECK(r.report["ladder"]["x_perp_stably_zero"] == true);
}

TEST_CASE("the trivial module over (C4, C2) reaches the cap") {
  const RunResult r = run_scenario(parse_scenario(module_scenario("kind=trivial", "kind=resolve cap=4")));
  CHECK(r.exit_code == kExhausted);
  CHECK(r.report["verdict"] == "exhausted");
  CHECK(r.report["resolution"]["outcome"] == "CapReached");
  CHECK(r.report["resolution"]["kernel_dims"] == Json::array({1, 1, 1, 1}));
}

TEST_CASE("a tight budget is reported, not thrown") {
  const RunResult r = run_scenario(parse_scenario(module_scenario("kind=regular", "kind=resolve budget=4")));
  CHECK(r.exit_code == kExhausted);
  CHECK(r.report["verdict"] == "exhausted");
}

TEST_CASE("stable_hom and oracle tasks") {
  const std::string sh = "field p=2\ncontext kind=module\ngroup kind=cyclic n=4\nsubgroup elems=[2]\n"
                         "system kind=subgroup_induced\nsource kind=jordan size=2\nobject kind=jordan size=3\n"
                         "task kind=stable_hom\n";
  const RunResult a = run_scenario(parse_scenario(sh));
  CHECK(a.exit_code == kOk);
  // dim (J2, J3)_T over kC4 = min(2,3) - max(0, 2+3-4) = 1
  CHECK(a.report.at("stable_hom").at("stable_dim") == 1);
  CHECK(a.report.at("stable_hom").at("hom_dim") == 2);

  Scenario sc = parse_scenario(kComplex);
  sc.task.kind = "oracle";
  const RunResult b = run_scenario(sc);
  CHECK(b.exit_code == kOk);
  CHECK(b.report["verdict"] == "pass");
  const Json& checks = b.report.at("oracle").at("checks");
  CHECK(checks.size() > 3);
  for (const auto& row : checks) CHECK(row.at("agree") == true);
}

TEST_CASE("seeds make runs repeatable") {
  const std::string text = "field p=3\ncontext kind=complex\nsystem kind=truncation\n"
                           "object kind=random seed=11 lo=-2 hi=2 max_dim=2\ntask kind=verify seed=5\n";
  const std::string a = dump_json(run_scenario(parse_scenario(text)).report);
  const std::string b = dump_json(run_scenario(parse_scenario(text)).report);
  CHECK(a == b);
}
