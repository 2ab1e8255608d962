#pragma once

// Scenario files: line-oriented `section key=value ...` records.
//
//   field p=2
//   context kind=module
//   group kind=cyclic n=4
//   subgroup elems=[2]
//   system kind=subgroup_induced
//   object kind=jordan size=3
//   task kind=localize cap=4 window=2 seed=7
//
// Values are integers, bare words (`jordan:2` is shorthand for an object) or
// bracketed lists of values. `#` starts a comment.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relstab/error.hpp"

namespace relstab::cli {

struct Value {
  std::variant<long long, std::string, std::vector<Value>> v;

  bool is_int() const { return std::holds_alternative<long long>(v); }
  bool is_word() const { return std::holds_alternative<std::string>(v); }
  bool is_list() const { return std::holds_alternative<std::vector<Value>>(v); }
  long long as_int() const { return std::get<long long>(v); }
  const std::string& as_word() const { return std::get<std::string>(v); }
  const std::vector<Value>& as_list() const { return std::get<std::vector<Value>>(v); }
  std::string to_string() const;
};

/// A ParseError (with line and column) or a ValidationError (with the key
/// path, e.g. `field.p`).
class ScenarioError : public Error {
 public:
  ScenarioError(ErrorKind kind, std::string path, std::size_t line, std::size_t column, const std::string& message);

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
};

/// An object description; the parameters depend on the kind.
struct ObjectSpec {
  std::string kind;
  std::map<std::string, Value> params;
  std::string path;  // key path for error messages
};

struct GroupSpec {
  std::string kind = "cyclic";
  long long n = 0;
  std::vector<long long> factors;
  std::vector<std::vector<long long>> perms;
  long long bound = 512;
};

struct SystemSpec {
  std::string kind;
  std::vector<ObjectSpec> gens;
  long long cutoff = 0;
};

struct TaskSpec {
  std::string kind = "localize";
  long long cap = 4;
  long long window = 2;
  std::uint64_t seed = 1;
  long long depth = 1;
  long long budget = 4096;
};

struct Scenario {
  unsigned p = 2;
  std::string context;  // module | complex
  std::optional<GroupSpec> group;
  std::optional<std::vector<long long>> subgroup;
  SystemSpec system;
  ObjectSpec object;
  std::optional<ObjectSpec> source;  // stable_hom only
  TaskSpec task;
};

/// Checks syntax, keys and numeric bounds and fills in defaults (cap 4,
/// window 2, seed 1, extension depth 1, budget 4096). References to groups
/// and modules are checked when the scenario is materialized.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

inline constexpr long long kMaxCap = 16;
inline constexpr long long kMaxWindow = 8;
inline constexpr long long kMaxDepth = 4;
inline constexpr long long kMaxBudget = 10'000'000;

}  // namespace relstab::cli
