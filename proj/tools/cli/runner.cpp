#include "cli/runner.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "relstab/localize.hpp"
#include "relstab/oracle.hpp"

namespace relstab::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::IoError:
      return kInputError;
    case ErrorKind::NotFinite:
    case ErrorKind::DimensionBudgetExceeded:
    case ErrorKind::BudgetExceeded:
      return kExhausted;
    default:
      return kVerdictFail;
  }
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw ScenarioError(ErrorKind::ValidationError, path, 0, 0, msg);
}

/// Library errors raised while building inputs are input errors.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json value_json(const Value& v) {
  if (v.is_int()) return v.as_int();
  if (v.is_word()) return v.as_word();
  Json a = Json::array();
  for (const auto& x : v.as_list()) a.push_back(value_json(x));
  return a;
}

Json object_spec_json(const ObjectSpec& o) {
  Json j;
  j["kind"] = o.kind;
  for (const auto& [k, v] : o.params) j[k] = value_json(v);
  return j;
}

std::string short_name(const ObjectSpec& o) {
  std::string s = o.kind;
  if (o.params.count("size")) s += ":" + std::to_string(o.params.at("size").as_int());
  if (o.params.count("degree")) s += ":" + std::to_string(o.params.at("degree").as_int());
  return s;
}

Mat matrix_from(PrimeField f, const std::string& path, const Value& v, std::size_t rows, std::size_t cols) {
  const auto& rs = v.as_list();
  if (rs.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(rs.size()));
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = rs[r].as_list();
    if (row.size() != cols) bad(path, "expected " + std::to_string(cols) + " columns, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c].as_int());
  }
  return m;
}

// ---- groups and objects ----

GroupPtr build_group(const GroupSpec& g) {
  return guarded("group", [&]() -> GroupPtr {
    const auto make = [&]() -> FiniteGroup {
      if (g.kind == "cyclic") return cyclic(std::size_t(g.n));
      if (g.kind == "dihedral") return dihedral(std::size_t(g.n));
      if (g.kind == "klein_four") return klein_four();
      if (g.kind == "direct_product") {
        FiniteGroup out = cyclic(std::size_t(g.factors[0]));
        for (std::size_t k = 1; k < g.factors.size(); ++k) {
          if (out.order() * std::size_t(g.factors[k]) > 512)
            bad("group.factors", "group order exceeds 512");
          out = direct_product(out, cyclic(std::size_t(g.factors[k])));
        }
        return out;
      }
      std::vector<Permutation> perms;
      for (const auto& p : g.perms) perms.emplace_back(p.begin(), p.end());
      return from_permutations(perms, std::size_t(g.bound));
    };
    return std::make_shared<const FiniteGroup>(make());
  });
}

struct ModuleWorld {
  GroupPtr group;
  PrimeField field;
  std::optional<SubgroupEmbedding> emb;
};

GModule build_module(const ModuleWorld& w, const ObjectSpec& o) {
  return guarded(o.path, [&]() -> GModule {
    const auto& P = o.params;
    if (o.kind == "trivial") return trivial_module(w.group, w.field);
    if (o.kind == "regular") return regular_module(w.group, w.field);
    if (o.kind == "jordan") return jordan_module(w.group, w.field, std::size_t(P.at("size").as_int()));
    if (o.kind == "coset") {
      if (!w.emb) bad(o.path, "kind=coset needs a subgroup section");
      return coset_permutation_module(*w.emb, w.field);
    }
    if (o.kind == "induced") {
      if (!w.emb) bad(o.path, "kind=induced needs a subgroup section");
      ObjectSpec inner{"trivial", {}, o.path + ".of"};
      if (P.count("of")) {
        const std::string s = P.at("of").as_word();
        const auto colon = s.find(':');
        inner.kind = s.substr(0, colon);
        if (colon != std::string::npos) inner.params["size"] = {std::stoll(s.substr(colon + 1))};
      }
      const GModule n = build_module({w.emb->sub, w.field, std::nullopt}, inner);
      return induce_module(*w.emb, n).relabeled("Ind(" + n.label() + ")");
    }
    if (o.kind == "sum") {
      std::vector<GModule> parts;
      for (const auto& v : P.at("parts").as_list()) {
        const std::string s = v.as_word();
        const auto colon = s.find(':');
        ObjectSpec part{s.substr(0, colon), {}, o.path + ".parts"};
        if (colon != std::string::npos) part.params["size"] = {std::stoll(s.substr(colon + 1))};
        parts.push_back(build_module(w, part));
      }
      return direct_sum_modules(parts, w.field, w.group).object;
    }
    if (o.kind == "random") {
      ModuleRecipe r;
      const std::string kind = P.count("recipe") ? P.at("recipe").as_word() : "sub";
      r.kind = kind == "sub" ? ModuleRecipe::Kind::SubmoduleOfFree
               : kind == "quot" ? ModuleRecipe::Kind::QuotientOfFree
                                : ModuleRecipe::Kind::SumOfNamed;
      if (P.count("rank")) r.rank = std::size_t(P.at("rank").as_int());
      if (P.count("vectors")) r.vectors = std::size_t(P.at("vectors").as_int());
      const std::uint64_t seed = P.count("seed") ? std::uint64_t(P.at("seed").as_int()) : 1;
      return random_module(w.group, w.field, r, seed);
    }
    // action
    const auto& gens = P.at("gens").as_list();
    if (gens.size() != w.group->generators().size())
      bad(o.path + ".gens", "the group has " + std::to_string(w.group->generators().size()) + " generators, got " +
                                std::to_string(gens.size()) + " matrices");
    std::vector<Mat> mats;
    std::size_t d = gens.empty() ? 0 : gens[0].as_list().size();
    for (std::size_t k = 0; k < gens.size(); ++k)
      mats.push_back(matrix_from(w.field, o.path + ".gens[" + std::to_string(k) + "]", gens[k], d, d));
    return module_from_action(w.group, w.field, mats, "action");
  });
}

Complex build_complex(PrimeField f, const ObjectSpec& o) {
  return guarded(o.path, [&]() -> Complex {
    const auto& P = o.params;
    if (o.kind == "sphere") return sphere(f, int(P.at("degree").as_int()));
    if (o.kind == "disk") return disk(f, int(P.at("degree").as_int()));
    if (o.kind == "sum") {
      std::vector<Complex> parts;
      for (const auto& v : P.at("parts").as_list()) {
        const std::string s = v.as_word();
        const auto colon = s.find(':');
        ObjectSpec part{s.substr(0, colon), {}, o.path + ".parts"};
        part.params["degree"] = {std::stoll(s.substr(colon + 1))};
        parts.push_back(build_complex(f, part));
      }
      return chain_direct_sum(parts, f).object;
    }
    if (o.kind == "random") {
      SplitMix64 rng(P.count("seed") ? std::uint64_t(P.at("seed").as_int()) : 1);
      const int lo = P.count("lo") ? int(P.at("lo").as_int()) : -2;
      const int hi = P.count("hi") ? int(P.at("hi").as_int()) : 2;
      const std::size_t md = P.count("max_dim") ? std::size_t(P.at("max_dim").as_int()) : 2;
      return random_complex(f, lo, hi, md, rng).relabeled("random");
    }
    // complex
    std::vector<long long> degrees, dims_ll;
    for (const auto& v : P.at("degrees").as_list()) degrees.push_back(v.as_int());
    for (const auto& v : P.at("dims").as_list()) dims_ll.push_back(v.as_int());
    if (degrees.empty()) return Complex(f);
    const int lo = int(degrees.front());
    std::vector<std::size_t> dims(dims_ll.begin(), dims_ll.end());
    std::vector<Mat> diffs;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t rows = k == 0 ? 0 : dims[k - 1];
      const std::string key = "d" + std::to_string(lo + int(k));
      if (P.count(key)) {
        if (k == 0) bad(o.path + "." + key, "d maps out of the lowest degree, there is no target");
        diffs.push_back(matrix_from(f, o.path + "." + key, P.at(key), rows, dims[k]));
      } else {
        diffs.emplace_back(f, rows, dims[k]);
      }
    }
    for (const auto& [k, v] : P)
      if (k.size() > 1 && k[0] == 'd' && k != "degrees" && k != "dims") {
        const int i = std::stoi(k.substr(1));
        if (i <= lo || i > int(degrees.back())) bad(o.path + "." + k, "degree " + std::to_string(i) + " is outside the complex");
      }
    return Complex::make(f, lo, std::move(dims), std::move(diffs), "X");
  });
}

// ---- report sections ----

Json check_json(const HypothesisReport::Check& c) {
  Json j;
  j["ok"] = c.ok;
  j["checked"] = c.checked;
  j["failures"] = c.failures;
  return j;
}

Json hypotheses_json(const HypothesisReport& r) {
  Json j;
  j["factorization"] = check_json(r.factorization);
  j["shift_up"] = check_json(r.shift_up);
  j["shift_down"] = check_json(r.shift_down);
  j["injective_hull"] = check_json(r.injective_hull);
  j["passes"] = r.passes();
  return j;
}

template <class Ctx>
Json resolution_json(const Ctx& ctx, const Resolution<Ctx>& res) {
  Json j;
  j["outcome"] = res.outcome == Outcome::FiniteDim ? "FiniteDim" : "CapReached";
  j["d"] = res.outcome == Outcome::FiniteDim ? Json(res.d()) : Json(nullptr);
  j["cap"] = res.cap;
  j["dim_x"] = ctx.dim(res.x);
  Json steps = Json::array();
  std::vector<std::size_t> kdims;
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    const auto& s = res.steps[i];
    Json st;
    st["i"] = i;
    st["dim_k"] = ctx.dim(s.k);
    st["dim_r"] = ctx.dim(s.precover.src());
    st["dim_kernel"] = ctx.dim(s.inclusion.src());
    st["conflation"] = s.conflation;
    steps.push_back(st);
    kdims.push_back(ctx.dim(s.inclusion.src()));
  }
  j["steps"] = steps;
  j["kernel_dims"] = kdims;
  return j;
}

template <class Ctx>
Json ladder_json(const Ctx& ctx, const Ladder<Ctx>& lad, const LocalizationTriangle<Ctx>& tri) {
  Json j;
  j["d"] = lad.d;
  j["assertions"] = lad.assertions;
  j["dim_l0"] = ctx.dim(lad.l0);
  j["dim_x_perp"] = ctx.dim(tri.x_perp);
  j["x_perp_stably_zero"] = is_stably_zero_object(ctx, tri.x_perp);
  j["remark_iii"] = remark_iii_check(ctx, lad) == ConditionalResult::Holds ? "holds" : "not_applicable";
  Json levels = Json::array();
  for (std::size_t i = 0; i < lad.levels.size(); ++i) {
    Json l;
    l["level"] = i;
    l["dim_cone"] = ctx.dim(lad.levels[i].cone.c);
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = r.verdict ? "pass" : "fail";
  j["extension_checked"] = r.extension_checked;
  Json rows = Json::array();
  for (const auto& c : r.per_object) {
    Json o;
    o["label"] = c.label;
    o["dim"] = c.dim;
    o["dim_l0"] = c.dim_l0;
    o["dim_x"] = c.dim_x;
    o["dim_perp"] = c.dim_perp;
    o["iso"] = c.iso;
    o["extension"] = c.from_extension;
    rows.push_back(o);
  }
  j["per_object"] = rows;
  return j;
}

Json oracle_json(const OracleReport& r, const std::string& subject) {
  Json j;
  j["name"] = r.name;
  j["subject"] = subject;
  j["agree"] = r.agree;
  j["search_space"] = r.search_space;
  j["route_a"] = r.route_a;
  j["route_b"] = r.route_b;
  return j;
}

OracleReport brute_force(const GModule& a, const GModule& b) { return hom_basis_oracle(a, b); }
OracleReport brute_force(const Complex& a, const Complex& b) { return hom_basis_oracle(a, b); }

template <class Ctx>
void homology_oracle(const Ctx&, const typename Ctx::Object&, Json&, bool&) {}

template <>
void homology_oracle<ComplexContext>(const ComplexContext&, const Complex& x, Json& checks, bool& all) {
  const int lo = x.is_zero() ? -1 : std::max(-kWindow, x.lo() - 1);
  const int hi = x.is_zero() ? 1 : std::min(kWindow, x.hi() + 1);
  const auto r = homology_stablehom_oracle(x, lo, hi);
  checks.push_back(oracle_json(r, x.label() + " over [" + std::to_string(lo) + "," + std::to_string(hi) + "]"));
  all = all && r.agree;
}

Json skeleton(const Scenario& sc) {
  Json j;
  j["scenario"] = scenario_json(sc);
  for (const char* k : {"hypotheses", "resolution", "ladder", "verification", "oracle", "stable_hom"}) j[k] = nullptr;
  j["verdict"] = nullptr;
  j["seed"] = sc.task.seed;
  j["version"] = kVersion;
  return j;
}

template <class Ctx>
RunResult run_with(const Scenario& sc, const PrecoverSystem<Ctx>& sys, const typename Ctx::Object& x,
                   const std::optional<typename Ctx::Object>& source) {
  const Ctx& ctx = sys.context();
  RunResult out;
  Json& rep = out.report;
  rep = skeleton(sc);
  const std::string& task = sc.task.kind;
  const auto finish = [&](const std::string& verdict, int code) {
    rep["verdict"] = verdict;
    out.exit_code = code;
    return out;
  };

  if (task == "stable_hom") {
    const auto src = source.value_or(x);
    const auto s = stable_hom(ctx, src, x);
    Json j;
    j["source"] = ctx.label(src);
    j["target"] = ctx.label(x);
    j["hom_dim"] = s.hom_dim();
    j["phom_dim"] = s.phom_dim();
    j["stable_dim"] = s.quotient_dim();
    Json gens = Json::array();
    for (const auto& g : sys.generators()) {
      Json row;
      row["generator"] = ctx.label(g);
      row["stable_dim"] = stable_hom(ctx, g, x).quotient_dim();
      gens.push_back(row);
    }
    j["from_generators"] = gens;
    rep["stable_hom"] = j;
    return finish("pass", kOk);
  }

  if (task == "oracle") {
    Json checks = Json::array();
    bool all = true;
    std::vector<typename Ctx::Object> others = {x};
    for (const auto& g : sys.generators())
      if (others.size() < 4) others.push_back(g);
    try {
      const auto r = brute_force(x, x);
      checks.push_back(oracle_json(r, ctx.label(x) + " -> " + ctx.label(x)));
      all = all && r.agree;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      Json skipped;
      skipped["name"] = "hom_basis_bruteforce";
      skipped["subject"] = ctx.label(x) + " -> " + ctx.label(x);
      skipped["skipped"] = e.what();
      checks.push_back(skipped);
    }
    for (const auto& o : others) {
      const auto a = phom_primary_vs_dual(ctx, o, x);
      checks.push_back(oracle_json(a, ctx.label(o) + " -> " + ctx.label(x)));
      const auto b = phom_dual_route(ctx, x, o);
      checks.push_back(oracle_json(b, ctx.label(x) + " -> " + ctx.label(o)));
      all = all && a.agree && b.agree;
    }
    homology_oracle(ctx, x, checks, all);
    Json j;
    j["checks"] = checks;
    j["all_agree"] = all;
    rep["oracle"] = j;
    return all ? finish("pass", kOk) : finish("fail", kVerdictFail);
  }

  const auto hyps = check_hypotheses(sys, sc.task.seed);
  rep["hypotheses"] = hypotheses_json(hyps);
  std::optional<Resolution<Ctx>> res;
  try {
    res = build_resolution(sys, x, std::size_t(sc.task.cap), std::size_t(sc.task.budget));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DimensionBudgetExceeded) throw;
    Json j;
    j["outcome"] = "BudgetExceeded";
    j["error"] = e.what();
    rep["resolution"] = j;
    return finish("exhausted", kExhausted);
  }
  rep["resolution"] = resolution_json(ctx, *res);
  if (res->outcome == Outcome::CapReached) return finish("exhausted", kExhausted);
  if (task == "resolve") return finish("pass", kOk);

  const auto lad = build_ladder(ctx, *res);
  const auto tri = localization_triangle(ctx, lad);
  rep["ladder"] = ladder_json(ctx, lad, tri);
  if (task == "localize") return finish("pass", kOk);

  const auto ver = verify_localization(sys, lad, int(sc.task.window), sc.task.seed, std::size_t(sc.task.depth));
  rep["verification"] = verification_json(ver);
  return ver.verdict ? finish("pass", kOk) : finish("fail", kVerdictFail);
}

// ---- text ----

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat_record(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items())
    if (x.is_object() || (x.is_array() && !x.empty() && x[0].is_object())) return false;
  return true;
}

void render(std::ostringstream& os, const Json& v, const std::string& key, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  if (v.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(os, x, k, key.empty() ? indent : indent + 1);
    return;
  }
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat_record)) {
    os << pad << key << ":\n";
    std::vector<std::string> cols;
    for (const auto& [k, x] : v[0].items()) cols.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      std::vector<std::string> r;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        r.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "-");
        width[c] = std::max(width[c], r.back().size());
      }
      cells.push_back(std::move(r));
    }
    const auto line = [&](const std::vector<std::string>& r) {
      os << pad << "  ";
      for (std::size_t c = 0; c < r.size(); ++c) os << r[c] << std::string(width[c] - r[c].size() + 2, ' ');
      os << "\n";
    };
    line(cols);
    for (const auto& r : cells) line(r);
    return;
  }
  os << pad << key << ": " << scalar_text(v) << "\n";
}

}  // namespace

Json scenario_json(const Scenario& sc) {
  Json j;
  j["field"] = {{"p", sc.p}};
  j["context"] = sc.context;
  if (sc.group) {
    Json g;
    g["kind"] = sc.group->kind;
    if (sc.group->kind == "cyclic" || sc.group->kind == "dihedral") g["n"] = sc.group->n;
    if (sc.group->kind == "direct_product") g["factors"] = sc.group->factors;
    if (sc.group->kind == "permutations") {
      g["gens"] = sc.group->perms;
      g["bound"] = sc.group->bound;
    }
    j["group"] = g;
  } else {
    j["group"] = nullptr;
  }
  j["subgroup"] = sc.subgroup ? Json(*sc.subgroup) : Json(nullptr);
  Json s;
  s["kind"] = sc.system.kind;
  if (sc.system.kind == "add_list") {
    Json gens = Json::array();
    for (const auto& g : sc.system.gens) gens.push_back(short_name(g));
    s["gens"] = gens;
  }
  if (sc.system.kind == "truncation") s["cutoff"] = sc.system.cutoff;
  j["system"] = s;
  j["object"] = object_spec_json(sc.object);
  j["source"] = sc.source ? object_spec_json(*sc.source) : Json(nullptr);
  Json t;
  t["kind"] = sc.task.kind;
  t["cap"] = sc.task.cap;
  t["window"] = sc.task.window;
  t["seed"] = sc.task.seed;
  t["depth"] = sc.task.depth;
  t["budget"] = sc.task.budget;
  j["task"] = t;
  return j;
}

RunResult run_scenario(const Scenario& sc) {
  const PrimeField f(sc.p);
  if (sc.context == "module") {
    ModuleWorld w{build_group(*sc.group), f, std::nullopt};
    if (sc.subgroup) {
      std::vector<std::size_t> elems(sc.subgroup->begin(), sc.subgroup->end());
      w.emb = guarded("subgroup.elems", [&] { return subgroup_generated(w.group, elems); });
    }
    const ModuleContext ctx(w.group, f);
    std::unique_ptr<PrecoverSystem<ModuleContext>> sys;
    if (sc.system.kind == "subgroup_induced") {
      sys = std::make_unique<SubgroupInducedSystem>(ctx, *w.emb);
    } else {
      std::vector<GModule> gens;
      for (const auto& g : sc.system.gens) gens.push_back(build_module(w, g));
      sys = std::make_unique<AddListSystem<ModuleContext>>(ctx, gens);
    }
    const GModule x = build_module(w, sc.object);
    std::optional<GModule> src;
    if (sc.source) src = build_module(w, *sc.source);
    return run_with<ModuleContext>(sc, *sys, x, src);
  }
  const ComplexContext ctx(f);
  std::unique_ptr<PrecoverSystem<ComplexContext>> sys;
  if (sc.system.kind == "truncation") {
    sys = std::make_unique<TruncationSystem>(ctx, int(sc.system.cutoff));
  } else {
    std::vector<Complex> gens;
    for (const auto& g : sc.system.gens) gens.push_back(build_complex(f, g));
    sys = std::make_unique<AddListSystem<ComplexContext>>(ctx, gens);
  }
  const Complex x = build_complex(f, sc.object);
  std::optional<Complex> src;
  if (sc.source) src = build_complex(f, *sc.source);
  return run_with<ComplexContext>(sc, *sys, x, src);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, "", 0);
  return os.str();
}

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace relstab::cli
