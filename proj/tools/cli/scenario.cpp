#include "cli/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "relstab/linalg.hpp"

namespace relstab::cli {

std::string Value::to_string() const {
  if (is_int()) return std::to_string(as_int());
  if (is_word()) return as_word();
  std::string s = "[";
  const auto& l = as_list();
  for (std::size_t k = 0; k < l.size(); ++k) s += (k ? "," : "") + l[k].to_string();
  return s + "]";
}

namespace {

std::string where(const std::string& path, std::size_t line, std::size_t column, const std::string& message) {
  std::string s;
  if (line) s += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  if (!path.empty()) s += path + ": ";
  return s + message;
}

}  // namespace

ScenarioError::ScenarioError(ErrorKind kind, std::string path, std::size_t line, std::size_t column,
                             const std::string& message)
    : Error(kind, where(path, line, column, message)), path_(std::move(path)), line_(line), column_(column) {}

namespace {

struct Entry {
  Value value;
  std::size_t column;
};

struct Record {
  std::string section;
  std::size_t line;
  std::map<std::string, Entry> entries;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw ScenarioError(ErrorKind::ParseError, "", line, col, msg);
}

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw ScenarioError(ErrorKind::ValidationError, path, 0, 0, msg);
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-'; }

class LineParser {
 public:
  LineParser(const std::string& text, std::size_t line) : s_(text), line_(line) {}

  void skip_space() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  std::size_t column() const { return i_ + 1; }

  std::string word() {
    const std::size_t start = i_;
    while (i_ < s_.size() && word_char(s_[i_])) ++i_;
    if (start == i_) parse_fail(line_, start + 1, "expected a name");
    return s_.substr(start, i_ - start);
  }

  std::string key() {
    const std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != '=' && word_char(s_[i_])) ++i_;
    if (start == i_) parse_fail(line_, start + 1, "expected key=value");
    return s_.substr(start, i_ - start);
  }

  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) parse_fail(line_, i_ + 1, std::string("expected '") + c + "'");
    ++i_;
  }

  Value value() {
    if (i_ >= s_.size()) parse_fail(line_, i_ + 1, "missing value");
    if (s_[i_] == '[') {
      ++i_;
      std::vector<Value> items;
      skip_space();
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        return {items};
      }
      while (true) {
        skip_space();
        items.push_back(value());
        skip_space();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        expect(']');
        return {items};
      }
    }
    const std::size_t start = i_;
    std::string w = word();
    const bool numeric = std::all_of(w.begin() + (w[0] == '-' ? 1 : 0), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (numeric && w != "-") {
      try {
        return {std::stoll(w)};
      } catch (const std::out_of_range&) {
        parse_fail(line_, start + 1, "integer out of range: " + w);
      }
    }
    if (std::isdigit(static_cast<unsigned char>(w[0])) || w[0] == '-') parse_fail(line_, start + 1, "malformed value: " + w);
    return {w};
  }

 private:
  const std::string& s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

std::vector<Record> tokenize(const std::string& text) {
  std::vector<Record> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto hash = raw.find('#');
    const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    LineParser lp(body, line);
    if (lp.done()) continue;
    Record rec;
    rec.line = line;
    rec.section = lp.word();
    while (!lp.done()) {
      const std::size_t col = lp.column();
      const std::string k = lp.key();
      lp.expect('=');
      Value v = lp.value();
      if (rec.entries.count(k)) parse_fail(line, col, "duplicate key '" + k + "'");
      rec.entries.emplace(k, Entry{std::move(v), col});
    }
    out.push_back(std::move(rec));
  }
  return out;
}

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"field", {"p"}},
      {"context", {"kind"}},
      {"group", {"kind", "n", "factors", "gens", "bound"}},
      {"subgroup", {"elems"}},
      {"system", {"kind", "gens", "cutoff"}},
      {"object", {}},  // checked per object kind
      {"source", {}},
      {"task", {"kind", "cap", "window", "seed", "depth", "budget"}},
  };
  return keys;
}

const std::map<std::string, std::set<std::string>>& object_keys(const std::string& context) {
  static const std::map<std::string, std::set<std::string>> module = {
      {"trivial", {}},
      {"regular", {}},
      {"jordan", {"size"}},
      {"coset", {}},
      {"induced", {"of"}},
      {"sum", {"parts"}},
      {"random", {"seed", "recipe", "rank", "vectors"}},
      {"action", {"gens"}},
  };
  static const std::map<std::string, std::set<std::string>> complex = {
      {"complex", {"degrees", "dims"}},  // plus d<i>
      {"sphere", {"degree"}},
      {"disk", {"degree"}},
      {"sum", {"parts"}},
      {"random", {"seed", "lo", "hi", "max_dim"}},
  };
  return context == "module" ? module : complex;
}

bool is_diff_key(const std::string& k) {
  if (k.size() < 2 || k[0] != 'd') return false;
  std::size_t i = 1;
  if (k[i] == '-') ++i;
  if (i >= k.size()) return false;
  for (; i < k.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(k[i]))) return false;
  return true;
}

long long int_in(const std::string& path, const Value& v, long long lo, long long hi) {
  if (!v.is_int()) invalid(path, "expected an integer, got " + v.to_string());
  if (v.as_int() < lo || v.as_int() > hi)
    invalid(path, v.to_string() + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v.as_int();
}

std::vector<long long> int_list(const std::string& path, const Value& v, long long lo, long long hi) {
  if (!v.is_list()) invalid(path, "expected a list, got " + v.to_string());
  std::vector<long long> out;
  for (std::size_t k = 0; k < v.as_list().size(); ++k)
    out.push_back(int_in(path + "[" + std::to_string(k) + "]", v.as_list()[k], lo, hi));
  return out;
}

/// `jordan:2`, `sphere:-1`, `trivial`, ...
ObjectSpec short_object(const std::string& path, const Value& v, const std::string& context) {
  if (!v.is_word()) invalid(path, "expected an object name such as jordan:2, got " + v.to_string());
  const std::string& w = v.as_word();
  const auto colon = w.find(':');
  ObjectSpec o;
  o.path = path;
  o.kind = w.substr(0, colon);
  const auto& kinds = object_keys(context);
  if (!kinds.count(o.kind) || o.kind == "sum" || o.kind == "random" || o.kind == "action" || o.kind == "complex")
    invalid(path, "'" + o.kind + "' cannot be used in a list");
  if (colon != std::string::npos) {
    long long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(w.substr(colon + 1), &used);
      if (used != w.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      invalid(path, "malformed parameter in " + w);
    }
    if (o.kind == "jordan")
      o.params["size"] = {n};
    else if (o.kind == "sphere" || o.kind == "disk")
      o.params["degree"] = {n};
    else
      invalid(path, "'" + o.kind + "' takes no parameter");
  }
  if ((o.kind == "jordan" && !o.params.count("size")) || ((o.kind == "sphere" || o.kind == "disk") && !o.params.count("degree")))
    invalid(path, "'" + o.kind + "' needs a parameter, e.g. " + o.kind + ":1");
  return o;
}

std::vector<ObjectSpec> object_list(const std::string& path, const Value& v, const std::string& context) {
  if (!v.is_list()) invalid(path, "expected a list of objects");
  std::vector<ObjectSpec> out;
  for (std::size_t k = 0; k < v.as_list().size(); ++k)
    out.push_back(short_object(path + "[" + std::to_string(k) + "]", v.as_list()[k], context));
  return out;
}

void check_matrix(const std::string& path, const Value& v) {
  if (!v.is_list()) invalid(path, "expected a matrix [[..],..]");
  std::size_t width = 0;
  for (std::size_t r = 0; r < v.as_list().size(); ++r) {
    const auto row = int_list(path + "[" + std::to_string(r) + "]", v.as_list()[r], -1'000'000, 1'000'000);
    if (r == 0) width = row.size();
    if (row.size() != width) invalid(path, "rows of different lengths");
  }
}

ObjectSpec parse_object(const Record& rec, const std::string& context) {
  const std::string sec = rec.section;
  auto it = rec.entries.find("kind");
  if (it == rec.entries.end()) invalid(sec + ".kind", "missing");
  if (!it->second.value.is_word()) invalid(sec + ".kind", "expected a name");
  ObjectSpec o;
  o.path = sec;
  o.kind = it->second.value.as_word();
  const auto& kinds = object_keys(context);
  const auto allowed = kinds.find(o.kind);
  if (allowed == kinds.end()) invalid(sec + ".kind", "unknown " + context + " object kind '" + o.kind + "'");
  for (const auto& [k, e] : rec.entries) {
    if (k == "kind") continue;
    const bool ok = allowed->second.count(k) || (o.kind == "complex" && is_diff_key(k));
    if (!ok) parse_fail(rec.line, e.column, "unknown key '" + k + "' for " + sec + " kind=" + o.kind);
    o.params[k] = e.value;
  }
  const auto need = [&](const std::string& k) {
    if (!o.params.count(k)) invalid(sec + "." + k, "missing (required for kind=" + o.kind + ")");
    return o.params.at(k);
  };
  if (o.kind == "jordan") int_in(sec + ".size", need("size"), 1, 1024);
  if (o.kind == "sphere" || o.kind == "disk") int_in(sec + ".degree", need("degree"), -8, 8);
  if (o.kind == "sum") object_list(sec + ".parts", need("parts"), context);
  if (o.kind == "induced" && o.params.count("of")) short_object(sec + ".of", o.params.at("of"), context);
  if (o.kind == "action") {
    const Value& g = need("gens");
    if (!g.is_list()) invalid(sec + ".gens", "expected a list of matrices");
    for (std::size_t k = 0; k < g.as_list().size(); ++k) check_matrix(sec + ".gens[" + std::to_string(k) + "]", g.as_list()[k]);
  }
  if (o.kind == "random") {
    if (o.params.count("seed")) int_in(sec + ".seed", o.params.at("seed"), 0, (1LL << 62));
    if (context == "module") {
      if (o.params.count("recipe")) {
        const Value& r = o.params.at("recipe");
        if (!r.is_word() || (r.as_word() != "sub" && r.as_word() != "quot" && r.as_word() != "sum"))
          invalid(sec + ".recipe", "expected sub, quot or sum");
      }
      if (o.params.count("rank")) int_in(sec + ".rank", o.params.at("rank"), 1, 4);
      if (o.params.count("vectors")) int_in(sec + ".vectors", o.params.at("vectors"), 0, 8);
    } else {
      const long long lo = o.params.count("lo") ? int_in(sec + ".lo", o.params.at("lo"), -8, 8) : -2;
      const long long hi = o.params.count("hi") ? int_in(sec + ".hi", o.params.at("hi"), -8, 8) : 2;
      if (lo > hi) invalid(sec + ".hi", "must be >= lo");
      if (o.params.count("max_dim")) int_in(sec + ".max_dim", o.params.at("max_dim"), 0, 6);
    }
  }
  if (o.kind == "complex") {
    const auto degrees = int_list(sec + ".degrees", need("degrees"), -8, 8);
    const auto dims = int_list(sec + ".dims", need("dims"), 0, 64);
    if (degrees.size() != dims.size()) invalid(sec + ".dims", "needs one entry per degree");
    for (std::size_t k = 1; k < degrees.size(); ++k)
      if (degrees[k] != degrees[k - 1] + 1) invalid(sec + ".degrees", "must be consecutive and ascending");
    for (const auto& [k, v] : o.params)
      if (is_diff_key(k)) check_matrix(sec + "." + k, v);
  }
  return o;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const auto records = tokenize(text);
  std::map<std::string, const Record*> by_section;
  for (const auto& r : records) {
    if (!section_keys().count(r.section)) parse_fail(r.line, 1, "unknown section '" + r.section + "'");
    if (by_section.count(r.section)) parse_fail(r.line, 1, "section '" + r.section + "' appears twice");
    by_section[r.section] = &r;
    const auto& keys = section_keys().at(r.section);
    if (r.section == "object" || r.section == "source") continue;
    for (const auto& [k, e] : r.entries)
      if (!keys.count(k)) parse_fail(r.line, e.column, "unknown key '" + k + "' in section '" + r.section + "'");
  }
  const auto get = [&](const std::string& sec) -> const Record& {
    if (!by_section.count(sec)) invalid(sec, "missing section");
    return *by_section.at(sec);
  };
  const auto entry = [&](const Record& r, const std::string& k) -> const Value* {
    auto it = r.entries.find(k);
    return it == r.entries.end() ? nullptr : &it->second.value;
  };
  const auto word = [&](const Record& r, const std::string& k, bool required) -> std::string {
    const Value* v = entry(r, k);
    if (!v) {
      if (required) invalid(r.section + "." + k, "missing");
      return {};
    }
    if (!v->is_word()) invalid(r.section + "." + k, "expected a name, got " + v->to_string());
    return v->as_word();
  };

  Scenario sc;
  {
    const Record& f = get("field");
    const Value* p = entry(f, "p");
    if (!p) invalid("field.p", "missing");
    const long long pv = int_in("field.p", *p, 0, PrimeField::kMaxPrime);
    if (!is_prime(unsigned(pv))) invalid("field.p", std::to_string(pv) + " is not prime");
    sc.p = unsigned(pv);
  }
  sc.context = word(get("context"), "kind", true);
  if (sc.context != "module" && sc.context != "complex") invalid("context.kind", "expected module or complex");

  if (by_section.count("group")) {
    const Record& g = get("group");
    GroupSpec gs;
    gs.kind = word(g, "kind", true);
    if (gs.kind == "cyclic" || gs.kind == "dihedral") {
      const Value* n = entry(g, "n");
      if (!n) invalid("group.n", "missing");
      gs.n = int_in("group.n", *n, gs.kind == "cyclic" ? 1 : 2, 256);
    } else if (gs.kind == "direct_product") {
      const Value* f = entry(g, "factors");
      if (!f) invalid("group.factors", "missing");
      gs.factors = int_list("group.factors", *f, 1, 64);
      if (gs.factors.empty()) invalid("group.factors", "needs at least one factor");
    } else if (gs.kind == "permutations") {
      const Value* gens = entry(g, "gens");
      if (!gens) invalid("group.gens", "missing");
      if (!gens->is_list()) invalid("group.gens", "expected a list of permutations");
      for (std::size_t k = 0; k < gens->as_list().size(); ++k)
        gs.perms.push_back(int_list("group.gens[" + std::to_string(k) + "]", gens->as_list()[k], 0, 63));
      if (const Value* b = entry(g, "bound")) gs.bound = int_in("group.bound", *b, 1, 4096);
    } else if (gs.kind != "klein_four") {
      invalid("group.kind", "unknown group kind '" + gs.kind + "'");
    }
    sc.group = gs;
  }
  if (by_section.count("subgroup")) {
    const Value* e = entry(get("subgroup"), "elems");
    if (!e) invalid("subgroup.elems", "missing");
    sc.subgroup = int_list("subgroup.elems", *e, 0, 4095);
  }

  {
    const Record& s = get("system");
    sc.system.kind = word(s, "kind", true);
    if (sc.system.kind == "subgroup_induced") {
      if (sc.context != "module") invalid("system.kind", "subgroup_induced needs context kind=module");
      if (!sc.subgroup) invalid("subgroup", "missing section (needed by subgroup_induced)");
    } else if (sc.system.kind == "add_list") {
      const Value* gens = entry(s, "gens");
      if (!gens) invalid("system.gens", "missing");
      sc.system.gens = object_list("system.gens", *gens, sc.context);
    } else if (sc.system.kind == "truncation") {
      if (sc.context != "complex") invalid("system.kind", "truncation needs context kind=complex");
      if (const Value* c = entry(s, "cutoff")) sc.system.cutoff = int_in("system.cutoff", *c, -6, 6);
    } else {
      invalid("system.kind", "unknown system kind '" + sc.system.kind + "'");
    }
    for (const std::string k : {"gens", "cutoff"})
      if (entry(s, k) && !(k == "gens" ? sc.system.kind == "add_list" : sc.system.kind == "truncation"))
        invalid("system." + k, "not used by kind=" + sc.system.kind);
  }
  if (sc.context == "module" && !sc.group) invalid("group", "missing section (needed by context kind=module)");
  if (sc.context == "complex" && sc.group) invalid("group", "not used by context kind=complex");

  sc.object = parse_object(get("object"), sc.context);
  if (by_section.count("source")) sc.source = parse_object(get("source"), sc.context);

  if (by_section.count("task")) {
    const Record& t = get("task");
    if (entry(t, "kind")) sc.task.kind = word(t, "kind", true);
    static const std::set<std::string> kinds = {"stable_hom", "resolve", "localize", "verify", "oracle"};
    if (!kinds.count(sc.task.kind)) invalid("task.kind", "unknown task kind '" + sc.task.kind + "'");
    if (const Value* v = entry(t, "cap")) sc.task.cap = int_in("task.cap", *v, 0, kMaxCap);
    if (const Value* v = entry(t, "window")) sc.task.window = int_in("task.window", *v, 0, kMaxWindow);
    if (const Value* v = entry(t, "seed")) sc.task.seed = std::uint64_t(int_in("task.seed", *v, 0, (1LL << 62)));
    if (const Value* v = entry(t, "depth")) sc.task.depth = int_in("task.depth", *v, 0, kMaxDepth);
    if (const Value* v = entry(t, "budget")) sc.task.budget = int_in("task.budget", *v, 1, kMaxBudget);
  }
  if (sc.source && sc.task.kind != "stable_hom") invalid("source", "only used by task kind=stable_hom");
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace relstab::cli
