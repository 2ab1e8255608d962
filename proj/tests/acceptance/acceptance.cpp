// Runs the acceptance battery and prints one line per criterion.
//
//   acceptance <path-to-relstab> [seed]
//
// Criteria 1-9 run in-process through the same code as `relstab suite`;
// criterion 10 runs `relstab suite` twice and compares the JSON bytes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/suite.hpp"

namespace fs = std::filesystem;
using namespace relstab::cli;

namespace {

constexpr double kCriterionOneSeconds = 60.0;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CriterionResult determinism(const std::string& exe, std::uint64_t seed) {
  CriterionResult r;
  r.id = 10;
  r.name = "determinism: two `relstab suite` runs give byte-identical JSON";
  const fs::path dir = fs::temp_directory_path() / ("relstab-acceptance-" + std::to_string(seed));
  fs::create_directories(dir);
  std::string first;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("suite" + std::to_string(run) + ".json");
    fs::remove(out);
    const std::string cmd =
        "\"" + exe + "\" suite --quiet --seed " + std::to_string(seed) + " --json \"" + out.string() + "\"";
    const int rc = std::system(cmd.c_str());
    ++r.cases;
    if (rc != 0) {
      r.pass = false;
      r.failures.push_back("run " + std::to_string(run) + " exited with status " + std::to_string(rc));
      continue;
    }
    const std::string body = slurp(out);
    if (body.empty()) {
      r.pass = false;
      r.failures.push_back("run " + std::to_string(run) + " wrote no report");
    }
    if (run == 0) {
      first = body;
    } else if (body != first) {
      r.pass = false;
      r.failures.push_back("reports differ");
    }
  }
  fs::remove_all(dir);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-relstab> [seed]\n";
    return 2;
  }
  const std::string exe = argv[1];
  SuiteOptions opts;
  if (argc > 2) opts.seed = std::stoull(argv[2]);

  bool all = true;
  for (int id = 1; id <= kSuiteCriteria; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = run_criterion(id, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (id == 1 && secs >= kCriterionOneSeconds) {
      r.pass = false;
      r.failures.push_back("took " + std::to_string(secs) + " s, limit 60 s");
    }
    all = all && r.pass;
    std::cout << criterion_line(r) << "\n" << std::flush;
  }
  const CriterionResult det = determinism(exe, opts.seed);
  all = all && det.pass;
  std::cout << criterion_line(det) << "\n";
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << "\n";
  return all ? 0 : 1;
}
