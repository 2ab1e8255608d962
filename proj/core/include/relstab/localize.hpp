#pragma once

// The ladder of cones over a finite resolution, the localization triangle
// X_R -> X -> X_perp, and the checks of its defining properties.

#include <optional>
#include <string>
#include <vector>

#include "relstab/precover.hpp"

namespace relstab {

/// Level i of the ladder: L_i = cone(eps_{i+1}), the filler mu_i: L_i -> K_i
/// and eps_i = inclusion o mu_i (absent at level 0).
template <FrobeniusContext Ctx>
struct LadderLevel {
  Triangle<Ctx> cone;  // eps_{i+1}: prev -> R_i, cone L_i
  typename Ctx::Morphism mu;
  std::optional<typename Ctx::Morphism> eps;
};

template <FrobeniusContext Ctx>
struct Ladder {
  typename Ctx::Object x;
  std::size_t d = 0;
  std::vector<ResolutionStep<Ctx>> steps;  // steps[i]: R_i -> K_i, K_{i+1} -> R_i
  std::vector<LadderLevel<Ctx>> levels;    // levels[i] for i = 0 .. d-1 (empty when d = 0)
  typename Ctx::Object l0;
  typename Ctx::Morphism lambda;  // L_0 -> X
  std::size_t assertions = 0;     // exact identities checked while building
};

namespace detail {

template <FrobeniusContext Ctx>
bool is_zero_map(const Ctx& ctx, const typename Ctx::Morphism& f) {
  for (auto e : ctx.flatten(f))
    if (e) return false;
  return true;
}

template <FrobeniusContext Ctx>
Ladder<Ctx> run_ladder(const Ctx& ctx, const typename Ctx::Object& x, const std::vector<ResolutionStep<Ctx>>& steps) {
  using Morphism = typename Ctx::Morphism;
  Ladder<Ctx> lad;
  lad.x = x;
  lad.d = steps.size();
  lad.steps = steps;
  if (lad.d == 0) {
    lad.l0 = x;
    lad.lambda = ctx.identity(x);
    return lad;
  }
  lad.levels.resize(lad.d);
  // R_d := K_d, so eps_d is the inclusion K_d -> R_{d-1}.
  Morphism eps = steps[lad.d - 1].inclusion;
  for (std::size_t n = lad.d; n-- > 0;) {
    const auto& step = steps[n];
    // prev -> R_n -> K_n must vanish exactly before the filler exists.
    if (!is_zero_map(ctx, ctx.compose(step.precover, eps)))
      throw Error(ErrorKind::WellDefinednessFailure, "composite into K_" + std::to_string(n) + " is not zero");
    ++lad.assertions;
    LadderLevel<Ctx>& level = lad.levels[n];
    level.cone = cone_triangle(ctx, eps);
    // mu_n is (precover, 0) on R_n + I(prev), pushed down to the cone.
    const Morphism on_sum = ctx.compose(step.precover, level.cone.proj_b);
    auto mu = ctx.descend(level.cone.cone_proj, on_sum);
    if (!mu) throw Error(ErrorKind::WellDefinednessFailure, "filler into K_" + std::to_string(n) + " is not defined");
    ++lad.assertions;
    level.mu = *mu;
    if (n > 0) {
      level.eps = ctx.compose(steps[n - 1].inclusion, level.mu);
      eps = *level.eps;
    }
  }
  lad.l0 = lad.levels[0].cone.c;
  lad.lambda = lad.levels[0].mu;
  // The square R_0 -> L_0 -> X commutes with the precover on the nose.
  if (ctx.flatten(ctx.compose(lad.lambda, lad.levels[0].cone.g)) != ctx.flatten(steps[0].precover))
    throw Error(ErrorKind::WellDefinednessFailure, "lambda o (R_0 -> L_0) differs from the precover");
  ++lad.assertions;
  return lad;
}

}  // namespace detail

/// Throws NotFinite unless the resolution reached a member.
template <FrobeniusContext Ctx>
Ladder<Ctx> build_ladder(const Ctx& ctx, const Resolution<Ctx>& res) {
  if (res.outcome != Outcome::FiniteDim)
    throw Error(ErrorKind::NotFinite, "no member kernel within cap " + std::to_string(res.cap));
  return detail::run_ladder(ctx, res.x, res.steps);
}

enum class LadderMode { Strict, Lax };

/// Runs the ladder on an externally supplied chain. Every composite
/// K_{i+1} -> R_i -> K_i must vanish (CompositeNonzero); in strict mode each
/// precover must also pass the factorization spot-check against `sys`
/// (FactorizationFailure).
template <FrobeniusContext Ctx>
Ladder<Ctx> synthetic_ladder(const Ctx& ctx, const typename Ctx::Object& x, const std::vector<ResolutionStep<Ctx>>& chain,
                             LadderMode mode, const PrecoverSystem<Ctx>* sys = nullptr) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& s = chain[i];
    if (!detail::is_zero_map(ctx, ctx.compose(s.precover, s.inclusion)))
      throw Error(ErrorKind::CompositeNonzero, "K_" + std::to_string(i + 1) + " -> R_" + std::to_string(i) + " -> K_" +
                                                   std::to_string(i));
    if (i + 1 < chain.size() && !(chain[i + 1].k == s.inclusion.src()))
      throw Error(ErrorKind::DimensionMismatch, "chain objects do not line up at step " + std::to_string(i));
  }
  if (!chain.empty() && !(chain[0].k == x)) throw Error(ErrorKind::DimensionMismatch, "chain does not start at x");
  if (mode == LadderMode::Strict) {
    if (!sys) throw Error(ErrorKind::FactorizationFailure, "strict mode needs a precover system");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& p = chain[i].precover;
      for (const auto& g : sys->generators())
        if (!factor_through(ctx, p, g, ctx.hom_basis(g, p.dst())))
          throw Error(ErrorKind::FactorizationFailure,
                      "map " + ctx.label(g) + " -> K_" + std::to_string(i) + " does not factor through R_" + std::to_string(i));
    }
  }
  return detail::run_ladder(ctx, x, chain);
}

template <FrobeniusContext Ctx>
struct LocalizationTriangle {
  typename Ctx::Object x_r, x, x_perp;
  Triangle<Ctx> triangle;  // cone of lambda
};

template <FrobeniusContext Ctx>
LocalizationTriangle<Ctx> localization_triangle(const Ctx& ctx, const Ladder<Ctx>& lad) {
  LocalizationTriangle<Ctx> t;
  t.triangle = cone_triangle(ctx, lad.lambda);
  t.x_r = lad.l0;
  t.x = lad.x;
  t.x_perp = t.triangle.c;
  return t;
}

/// (L_0, X_perp); NotFinite if the resolution hits the cap.
template <FrobeniusContext Ctx>
std::pair<typename Ctx::Object, typename Ctx::Object> adjoint_values(const PrecoverSystem<Ctx>& sys,
                                                                     const typename Ctx::Object& x, std::size_t cap,
                                                                     std::size_t budget = 4096) {
  const Ctx& ctx = sys.context();
  const auto lad = build_ladder(ctx, build_resolution(sys, x, cap, budget));
  const auto tri = localization_triangle(ctx, lad);
  return {tri.x_r, tri.x_perp};
}

enum class ConditionalResult { NotApplicable, Holds };

/// When every step was a conflation, lambda must be a stable isomorphism.
/// Throws ConditionalViolated otherwise.
template <FrobeniusContext Ctx>
ConditionalResult remark_iii_check(const Ctx& ctx, const Ladder<Ctx>& lad) {
  for (const auto& s : lad.steps)
    if (!s.conflation) return ConditionalResult::NotApplicable;
  const auto tri = cone_triangle(ctx, lad.lambda);
  if (!is_stably_zero_object(ctx, tri.c))
    throw Error(ErrorKind::ConditionalViolated, "all steps are conflations but cone(lambda) is not stably zero");
  return ConditionalResult::Holds;
}

struct ObjectCheck {
  std::string label;
  std::size_t dim = 0;      // dim of the test object
  std::size_t dim_l0 = 0;   // dim (R, L_0)_T
  std::size_t dim_x = 0;    // dim (R, X)_T
  std::size_t dim_perp = 0; // dim (R, X_perp)_T
  Mat induced;              // (R, L_0)_T -> (R, X)_T
  bool iso = false;
  bool from_extension = false;
};

struct VerificationReport {
  std::vector<ObjectCheck> per_object;
  std::size_t extension_checked = 0;
  bool verdict = true;
};

template <FrobeniusContext Ctx>
ObjectCheck check_against(const Ctx& ctx, const std::string& label, const typename Ctx::Object& r,
                          const Ladder<Ctx>& lad, const LocalizationTriangle<Ctx>& tri) {
  ObjectCheck c;
  c.label = label;
  c.dim = ctx.dim(r);
  const auto from = stable_hom(ctx, r, lad.l0);
  const auto to = stable_hom(ctx, r, lad.x);
  c.dim_l0 = from.quotient_dim();
  c.dim_x = to.quotient_dim();
  c.induced = induced_stable_matrix(ctx, from, to, lad.lambda);
  c.iso = c.dim_l0 == c.dim_x && rank(c.induced) == c.dim_x;
  c.dim_perp = stable_hom(ctx, r, tri.x_perp).quotient_dim();
  return c;
}

/// Checks the induced maps (R, L_0)_T -> (R, X)_T and orthogonality against
/// the members among the shifted generators, two sampled members, and
/// objects built from those by up to `depth` cones of random maps (two per
/// level).
template <FrobeniusContext Ctx>
VerificationReport verify_localization(const PrecoverSystem<Ctx>& sys, const Ladder<Ctx>& lad, int window,
                                       std::uint64_t seed, std::size_t depth) {
  const Ctx& ctx = sys.context();
  SplitMix64 rng(seed);
  const auto tri = localization_triangle(ctx, lad);
  VerificationReport rep;
  std::vector<TestObject<Ctx>> pool = test_objects(sys, window);
  for (int k = 0; k < 2; ++k) pool.push_back({sys.sample_member(rng), "sample" + std::to_string(k)});
  for (const auto& t : pool) rep.per_object.push_back(check_against(ctx, t.label, t.object, lad, tri));

  for (std::size_t level = 1; level <= depth && !pool.empty(); ++level)
    for (int k = 0; k < 2; ++k) {
      const auto& a = pool[rng.below(pool.size())];
      const auto& b = pool[rng.below(pool.size())];
      const auto f = random_morphism(ctx, a.object, b.object, rng);
      typename Ctx::Object c;
      try {
        c = cone_triangle(ctx, f).c;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::WindowExceeded) continue;
        throw;
      }
      const std::string label = "cone(" + a.label + "->" + b.label + ")";
      auto check = check_against(ctx, label, c, lad, tri);
      check.from_extension = true;
      rep.per_object.push_back(std::move(check));
      ++rep.extension_checked;
      pool.push_back({c, label});
    }
  for (const auto& c : rep.per_object) rep.verdict = rep.verdict && c.iso && c.dim_perp == 0;
  return rep;
}

}  // namespace relstab
