#pragma once

#include <string>

#include "cli/scenario.hpp"
#include "json.hpp"

namespace relstab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.3.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kVerdictFail = 1, kInputError = 2, kExhausted = 3 };

int exit_code_for(ErrorKind kind);

struct RunResult {
  Json report;
  int exit_code = kOk;
};

/// Runs the scenario's task. Input errors found while building groups and
/// objects are rethrown as ValidationError; cap and budget exhaustion are
/// caught and reported (verdict `exhausted`, exit 3).
RunResult run_scenario(const Scenario& sc);

/// The normalized scenario with all defaults filled in.
Json scenario_json(const Scenario& sc);

/// Plain-text rendering: nested sections, arrays of records as tables.
std::string render_text(const Json& report);

/// Serialized JSON as written by --json (two-space indent, trailing newline).
std::string dump_json(const Json& report);

}  // namespace relstab::cli
