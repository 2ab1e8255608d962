#pragma once

// Precovering families, membership, resolutions and the hypothesis checks.

#include <memory>
#include <string>
#include <vector>

#include "relstab/stable.hpp"

namespace relstab {

template <FrobeniusContext Ctx>
class PrecoverSystem {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  explicit PrecoverSystem(Ctx ctx) : ctx_(std::move(ctx)) {}
  virtual ~PrecoverSystem() = default;

  const Ctx& context() const noexcept { return ctx_; }

  virtual std::string kind() const = 0;
  virtual std::string describe() const = 0;
  /// A map R_x -> x from a member through which every map from a member factors.
  virtual Morphism precover_of(const Object& x) const = 0;
  virtual std::vector<Object> generators() const = 0;
  virtual Object sample_member(SplitMix64& rng) const = 0;

 private:
  Ctx ctx_;
};

/// sum_k comps[k] o proj_k.
template <FrobeniusContext Ctx>
typename Ctx::Morphism map_from_sum(const Ctx& ctx, const DirectSum<typename Ctx::Object, typename Ctx::Morphism>& sum,
                                    const std::vector<typename Ctx::Morphism>& comps, const typename Ctx::Object& target) {
  auto out = ctx.zero(sum.object, target);
  for (std::size_t k = 0; k < comps.size(); ++k) out = ctx.add(out, ctx.compose(comps[k], sum.projections[k]));
  return out;
}

/// Maps from projective-injective objects into x that, together with `eval`,
/// make a surjection. Greedy on the standard basis, so deterministic.
std::vector<GModuleHom> projective_completion(const ModuleContext& ctx, const GModuleHom& eval);
std::vector<ChainMap> projective_completion(const ComplexContext& ctx, const ChainMap& eval);

/// add(gens): every hom from a listed generator, plus just enough
/// projective-injective summands (regular modules, resp. disks) to make the
/// precover surjective.
template <FrobeniusContext Ctx>
class AddListSystem : public PrecoverSystem<Ctx> {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  AddListSystem(Ctx ctx, std::vector<Object> gens) : PrecoverSystem<Ctx>(std::move(ctx)), gens_(std::move(gens)) {}

  std::string kind() const override { return "add_list"; }
  std::string describe() const override {
    std::string s = "add_list{";
    for (std::size_t k = 0; k < gens_.size(); ++k) s += (k ? "," : "") + this->context().label(gens_[k]);
    return s + "}";
  }

  Morphism precover_of(const Object& x) const override {
    const Ctx& ctx = this->context();
    std::vector<Object> parts;
    std::vector<Morphism> comps;
    for (const auto& g : gens_)
      for (auto& h : ctx.hom_basis(g, x)) {
        parts.push_back(g);
        comps.push_back(std::move(h));
      }
    Morphism eval = parts.empty() ? ctx.zero(ctx.direct_sum({}).object, x)
                                  : map_from_sum(ctx, ctx.direct_sum(parts), comps, x);
    for (auto& extra : projective_completion(ctx, eval)) {
      parts.push_back(extra.src());
      comps.push_back(std::move(extra));
    }
    const auto sum = ctx.direct_sum(parts);
    return map_from_sum(ctx, sum, comps, x);
  }

  std::vector<Object> generators() const override { return gens_; }

  Object sample_member(SplitMix64& rng) const override {
    const Ctx& ctx = this->context();
    if (gens_.empty()) return ctx.direct_sum({}).object;
    std::vector<Object> parts;
    const std::size_t n = std::size_t(rng.between(1, 2));
    for (std::size_t k = 0; k < n; ++k) parts.push_back(gens_[rng.below(gens_.size())]);
    return ctx.direct_sum(parts).object;
  }

 private:
  std::vector<Object> gens_;
};

/// H-projective modules: summands of modules induced from H; the precover is
/// the counit Ind Res x -> x.
class SubgroupInducedSystem : public PrecoverSystem<ModuleContext> {
 public:
  SubgroupInducedSystem(ModuleContext ctx, SubgroupEmbedding emb);

  std::string kind() const override { return "subgroup_induced"; }
  std::string describe() const override;
  GModuleHom precover_of(const GModule& x) const override;
  /// Ind of the non-projective named modules of H (at least Ind of the trivial module).
  std::vector<GModule> generators() const override;
  GModule sample_member(SplitMix64& rng) const override;

  const SubgroupEmbedding& embedding() const noexcept { return emb_; }

 private:
  SubgroupEmbedding emb_;
};

/// Complexes supported in degrees >= cutoff; the precover is the inclusion of
/// the good truncation at the cutoff.
class TruncationSystem : public PrecoverSystem<ComplexContext> {
 public:
  explicit TruncationSystem(ComplexContext ctx, int cutoff = 0)
      : PrecoverSystem<ComplexContext>(std::move(ctx)), cutoff_(cutoff) {}

  std::string kind() const override { return "truncation"; }
  std::string describe() const override { return "truncation{cutoff=" + std::to_string(cutoff_) + "}"; }
  ChainMap precover_of(const Complex& x) const override;
  /// S(cutoff) and D(cutoff + 1).
  std::vector<Complex> generators() const override;
  /// Random complex supported in [cutoff, cutoff + 2].
  Complex sample_member(SplitMix64& rng) const override;

  int cutoff() const noexcept { return cutoff_; }

 private:
  int cutoff_;
};

template <FrobeniusContext Ctx>
bool is_member(const PrecoverSystem<Ctx>& sys, const typename Ctx::Object& x) {
  return is_split_epi(sys.context(), sys.precover_of(x));
}

/// Repeated suspension (k > 0) or desuspension (k < 0). Contexts with a
/// reduce() hook drop projective-injective summands after each step.
template <FrobeniusContext Ctx>
typename Ctx::Object shift_object(const Ctx& ctx, typename Ctx::Object x, int k) {
  const auto step = [&](typename Ctx::Object y) {
    if constexpr (requires { ctx.reduce(y); })
      return ctx.reduce(y);
    else
      return y;
  };
  for (int s = 0; s < k; ++s) x = step(suspend(ctx, x));
  for (int s = 0; s > k; --s) x = step(desuspend(ctx, x));
  return x;
}

template <FrobeniusContext Ctx>
struct TestObject {
  typename Ctx::Object object;
  std::string label;
};

/// Generators and their shifts by |k| <= window that are members, in a fixed
/// order (generator-major, k ascending). Shifts leaving the degree window are
/// skipped.
template <FrobeniusContext Ctx>
std::vector<TestObject<Ctx>> test_objects(const PrecoverSystem<Ctx>& sys, int window) {
  const Ctx& ctx = sys.context();
  std::vector<TestObject<Ctx>> out;
  for (const auto& g : sys.generators())
    for (int k = -window; k <= window; ++k) {
      typename Ctx::Object x;
      try {
        x = shift_object(ctx, g, k);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::WindowExceeded) continue;
        throw;
      }
      if (!is_member(sys, x)) continue;
      const std::string name = k == 0 ? ctx.label(g) : "sus^" + std::to_string(k) + "(" + ctx.label(g) + ")";
      out.push_back({std::move(x), name});
    }
  return out;
}

struct HypothesisReport {
  struct Check {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // labels of witnesses
  };
  Check factorization;   // (i)
  Check shift_up;        // (ii), suspension
  Check shift_down;      // (ii), desuspension; informational
  Check injective_hull;  // (iii)
  /// (i), (ii)-up and (iii): the hypotheses the construction relies on.
  bool passes() const noexcept { return factorization.ok && shift_up.ok && injective_hull.ok; }
};

/// Every hom from `member` into x factors through the precover of x.
template <FrobeniusContext Ctx>
bool precover_factors(const PrecoverSystem<Ctx>& sys, const typename Ctx::Object& member,
                      const typename Ctx::Object& x) {
  const Ctx& ctx = sys.context();
  return factor_through(ctx, sys.precover_of(x), member, ctx.hom_basis(member, x)).has_value();
}

template <FrobeniusContext Ctx>
HypothesisReport check_hypotheses(const PrecoverSystem<Ctx>& sys, std::uint64_t seed) {
  const Ctx& ctx = sys.context();
  SplitMix64 rng(seed);
  HypothesisReport rep;
  const auto gens = sys.generators();

  std::vector<typename Ctx::Object> members = gens;
  for (int k = 0; k < 2; ++k) members.push_back(sys.sample_member(rng));
  std::vector<typename Ctx::Object> xs = gens;
  for (int k = 0; k < 3; ++k) xs.push_back(ctx.random_object(rng));
  for (const auto& m : members)
    for (const auto& x : xs) {
      ++rep.factorization.checked;
      if (!precover_factors(sys, m, x)) {
        rep.factorization.ok = false;
        rep.factorization.failures.push_back(ctx.label(m) + " -> " + ctx.label(x));
      }
    }

  auto membership = [&](HypothesisReport::Check& check, auto make, const std::string& prefix) {
    for (const auto& g : gens) {
      ++check.checked;
      bool ok = false;
      try {
        ok = is_member(sys, make(g));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::WindowExceeded) throw;
      }
      if (!ok) {
        check.ok = false;
        check.failures.push_back(prefix + "(" + ctx.label(g) + ")");
      }
    }
  };
  membership(rep.shift_up, [&](const auto& g) { return suspend(ctx, g); }, "suspend");
  membership(rep.shift_down, [&](const auto& g) { return desuspend(ctx, g); }, "desuspend");
  membership(rep.injective_hull, [&](const auto& g) { return ctx.injective_embedding(g).dst(); }, "I");
  return rep;
}

template <FrobeniusContext Ctx>
struct ResolutionStep {
  typename Ctx::Object k;         // K_i
  typename Ctx::Morphism precover;  // R_i -> K_i
  typename Ctx::Morphism inclusion;  // K_{i+1} -> R_i
  bool conflation = false;        // precover surjective
};

enum class Outcome { FiniteDim, CapReached };

template <FrobeniusContext Ctx>
struct Resolution {
  typename Ctx::Object x;
  std::vector<ResolutionStep<Ctx>> steps;
  typename Ctx::Object last;  // K_{steps.size()}
  Outcome outcome = Outcome::CapReached;
  std::size_t cap = 0;

  /// The R-dimension; meaningful only for FiniteDim.
  std::size_t d() const noexcept { return steps.size(); }
  const typename Ctx::Object& k(std::size_t i) const { return i < steps.size() ? steps[i].k : last; }
};

/// Precover, take the kernel, repeat until K_d is a member or `cap` steps
/// have been taken. Throws DimensionBudgetExceeded once dim R_i * dim K_i
/// exceeds `budget`.
template <FrobeniusContext Ctx>
Resolution<Ctx> build_resolution(const PrecoverSystem<Ctx>& sys, const typename Ctx::Object& x, std::size_t cap,
                                 std::size_t budget) {
  const Ctx& ctx = sys.context();
  Resolution<Ctx> res;
  res.x = x;
  res.cap = cap;
  typename Ctx::Object k = x;
  for (std::size_t i = 0;; ++i) {
    const auto p = sys.precover_of(k);
    const std::size_t entries = ctx.dim(p.src()) * ctx.dim(k);
    if (entries > budget)
      throw Error(ErrorKind::DimensionBudgetExceeded, "step " + std::to_string(i) + " needs " + std::to_string(entries) +
                                                          " entries, budget " + std::to_string(budget));
    if (is_split_epi(ctx, p)) {
      res.outcome = Outcome::FiniteDim;
      break;
    }
    if (i == cap) {
      res.outcome = Outcome::CapReached;
      break;
    }
    auto ker = ctx.kernel(p);
    if (ctx.flatten(ctx.compose(p, ker.map)) != Vec(ctx.flat_size(ker.object, k), 0))
      throw Error(ErrorKind::WellDefinednessFailure, "precover o kernel inclusion is not zero");
    res.steps.push_back({k, p, ker.map, ctx.is_epi(p)});
    k = ker.object;
  }
  res.last = k;
  return res;
}

}  // namespace relstab
