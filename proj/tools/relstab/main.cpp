#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cli/runner.hpp"
#include "cli/suite.hpp"

namespace {

using namespace relstab;
using namespace relstab::cli;

struct Outputs {
  std::string json_path;
  std::string text_path;
  bool quiet = false;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << body;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

void emit(const Outputs& o, const Json& report) {
  const std::string text = render_text(report);
  if (!o.json_path.empty()) write_file(o.json_path, dump_json(report));
  if (!o.text_path.empty()) write_file(o.text_path, text);
  if (!o.quiet) std::cout << text;
}

int run_file(const std::string& file, std::optional<std::string> force_kind, std::optional<long long> cap,
             std::optional<std::uint64_t> seed, const Outputs& o) {
  Scenario sc = load_scenario(file);
  if (force_kind) sc.task.kind = *force_kind;
  if (cap) sc.task.cap = *cap;
  if (seed) sc.task.seed = *seed;
  const RunResult r = run_scenario(sc);
  emit(o, r.report);
  return r.exit_code;
}

int run_suite_cmd(std::optional<std::uint64_t> seed, const Outputs& o) {
  SuiteOptions opts;
  if (seed) opts.seed = *seed;
  const auto results = run_suite(opts, [&](const CriterionResult& r) {
    if (!o.quiet) std::cout << criterion_line(r) << "\n" << std::flush;
  });
  const Json report = suite_json(results, opts);
  if (!o.json_path.empty()) write_file(o.json_path, dump_json(report));
  if (!o.text_path.empty()) {
    std::string text;
    for (const auto& r : results) text += criterion_line(r) + "\n";
    write_file(o.text_path, text);
  }
  return report["verdict"] == "pass" ? kOk : kVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relstab: localization triangles from precovering families over finite fields"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Outputs out;
  std::optional<long long> cap;
  std::optional<std::uint64_t> seed;
  std::string file;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", out.json_path, "write the JSON report to this path");
    sub->add_option("--text", out.text_path, "write the text report to this path");
    sub->add_option("--seed", seed, "override the scenario seed");
    sub->add_flag("--quiet", out.quiet, "print nothing to stdout");
  };
  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "scenario file")->required();
    sub->add_option("--cap", cap, "override the resolution cap")->check(CLI::Range(0LL, kMaxCap));
    add_common(sub);
  };

  auto* run = app.add_subcommand("run", "run the task named in the scenario");
  auto* verify = app.add_subcommand("verify", "localize and verify the scenario object");
  auto* oracle = app.add_subcommand("oracle", "cross-check the scenario against independent oracles");
  auto* suite = app.add_subcommand("suite", "run the shipped acceptance battery");
  add_file(run);
  add_file(verify);
  add_file(oracle);
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*suite) return run_suite_cmd(seed, out);
    std::optional<std::string> force;
    if (*verify) force = "verify";
    if (*oracle) force = "oracle";
    return run_file(file, force, cap, seed, out);
  } catch (const Error& e) {
    std::cerr << "relstab: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "relstab: internal error: " << e.what() << "\n";
    return kVerdictFail;
  }
}
