#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/localize.hpp"

using namespace relstab;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Complex sum(const std::vector<Complex>& parts, PrimeField f = F2) { return chain_direct_sum(parts, f).object; }

std::vector<std::size_t> sphere_dims(const ComplexContext& ctx, const Complex& x, int lo, int hi) {
  std::vector<std::size_t> out;
  for (int i = lo; i <= hi; ++i) out.push_back(stable_hom(ctx, sphere(ctx.field(), i), x).quotient_dim());
  return out;
}

/// Some surjection a -> b, found among random combinations of the hom basis.
GModuleHom some_epi(const ModuleContext& ctx, const GModule& a, const GModule& b, SplitMix64& rng) {
  for (int t = 0; t < 200; ++t) {
    const auto f = random_morphism(ctx, a, b, rng);
    if (ctx.is_epi(f)) return f;
  }
  FAIL("no surjection found");
  return zero_hom(a, b);
}

/// R_i -> K_i surjective with K_{i+1} its kernel, for the given R_i.
std::vector<ResolutionStep<ModuleContext>> epi_chain(const ModuleContext& ctx, const GModule& x,
                                                     const std::vector<GModule>& rs, SplitMix64& rng) {
  std::vector<ResolutionStep<ModuleContext>> out;
  GModule k = x;
  for (const auto& r : rs) {
    const auto p = some_epi(ctx, r, k, rng);
    const auto ker = ctx.kernel(p);
    out.push_back({k, p, ker.map, true});
    k = ker.object;
  }
  return out;
}

template <class Ctx>
bool stably_iso_against(const Ctx& ctx, const std::vector<typename Ctx::Object>& tests, const typename Ctx::Morphism& f) {
  for (const auto& r : tests) {
    const Mat m = induced_stable_matrix(ctx, r, f);
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ladder of a member") {
  const auto c4 = fixtures::c4();
  const SubgroupInducedSystem sys(ModuleContext(c4, F2), subgroup_generated(c4, {2}));
  const ModuleContext& ctx = sys.context();
  const GModule x = ctx.direct_sum(sys.generators()).object;
  const auto res = build_resolution(sys, x, 4, 4096);
  REQUIRE(res.outcome == Outcome::FiniteDim);
  const auto lad = build_ladder(ctx, res);
  CHECK(lad.d == 0);
  CHECK(lad.l0 == x);
  CHECK(lad.lambda.mat().is_identity());
  const auto tri = localization_triangle(ctx, lad);
  CHECK(is_stably_zero_object(ctx, tri.x_perp));
  CHECK(remark_iii_check(ctx, lad) == ConditionalResult::Holds);
  const auto rep = verify_localization(sys, lad, 2, 1, 2);
  CHECK(rep.verdict);
  CHECK(rep.extension_checked > 0);
}

TEST_CASE("no ladder without a finite resolution") {
  const auto c4 = fixtures::c4();
  const SubgroupInducedSystem sys(ModuleContext(c4, F2), subgroup_generated(c4, {2}));
  CHECK_THROWS_AS(adjoint_values(sys, trivial_module(c4, F2), 4), Error);
  try {
    adjoint_values(sys, trivial_module(c4, F2), 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFinite);
  }
}

TEST_CASE("truncation of S(0) + S(-1)") {
  const TruncationSystem sys{ComplexContext(F2)};
  const ComplexContext& ctx = sys.context();
  const Complex x = sum({sphere(F2, 0), sphere(F2, -1)});
  const auto res = build_resolution(sys, x, 4, 4096);
  REQUIRE(res.outcome == Outcome::FiniteDim);
  REQUIRE(res.d() == 1);
  const auto lad = build_ladder(ctx, res);
  // with d = 1 the ladder is the cone of K_1 -> R_0 and nothing else
  const auto direct = cone_triangle(ctx, res.steps[0].inclusion);
  CHECK(lad.levels.size() == 1);
  CHECK(lad.l0 == direct.c);
  CHECK(lad.levels[0].cone.g == direct.g);
  CHECK(sphere_dims(ctx, lad.l0, -3, 3) == std::vector<std::size_t>{0, 0, 0, 1, 0, 0, 0});
  const auto [xr, xp] = adjoint_values(sys, x, 4);
  CHECK(sphere_dims(ctx, xr, -3, 3) == sphere_dims(ctx, sphere(F2, 0), -3, 3));
  CHECK(sphere_dims(ctx, xp, -3, 3) == sphere_dims(ctx, sphere(F2, -1), -3, 3));
  CHECK(remark_iii_check(ctx, lad) == ConditionalResult::NotApplicable);
  const auto rep = verify_localization(sys, lad, 2, 7, 2);
  CHECK(rep.verdict);
  for (const auto& c : rep.per_object) {
    CHECK(c.iso);
    CHECK(c.dim_perp == 0);
  }
}

TEST_CASE("contractible input") {
  const TruncationSystem sys{ComplexContext(F3)};
  const ComplexContext& ctx = sys.context();
  const auto lad = build_ladder(ctx, build_resolution(sys, disk(F3, 0), 4, 4096));
  const auto tri = localization_triangle(ctx, lad);
  CHECK(is_stably_zero_object(ctx, tri.x_r));
  CHECK(is_stably_zero_object(ctx, tri.x));
  CHECK(is_stably_zero_object(ctx, tri.x_perp));
}

TEST_CASE("truncation localizes random complexes") {
  SplitMix64 rng(1234);
  for (int t = 0; t < 25; ++t) {
    const PrimeField f = t % 2 ? F3 : F2;
    const TruncationSystem sys{ComplexContext(f)};
    const ComplexContext& ctx = sys.context();
    const Complex x = random_complex(f, -3, 3, 3, rng);
    const auto res = build_resolution(sys, x, 4, 4096);
    REQUIRE(res.outcome == Outcome::FiniteDim);
    CHECK(res.d() <= 1);
    const auto lad = build_ladder(ctx, res);
    const auto rep = verify_localization(sys, lad, 2, std::uint64_t(t), 2);
    CHECK(rep.verdict);
    const auto hx = x.homology_dims(-3, 3);
    const auto l0 = sphere_dims(ctx, lad.l0, -3, 3);
    for (int i = -3; i <= 3; ++i) CHECK(l0[std::size_t(i + 3)] == (i >= 0 ? hx[std::size_t(i + 3)] : 0));
  }
}

TEST_CASE("synthetic ladder of split epis") {
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const GModule j2 = jordan_module(c4, F2, 2), kg = regular_module(c4, F2);
  const AddListSystem<ModuleContext> sys(ctx, {j2, kg});
  auto sum_of = [&](std::vector<GModule> parts) { return ctx.direct_sum(parts); };

  // x = J2 + J2 <- J2 + J2 + J2 <- J2 + J2 <- J2 + kC4, each a projection onto a summand block
  const auto r0 = sum_of({j2, j2, j2}), r1 = sum_of({j2, j2}), r2 = sum_of({j2, kg});
  const auto x = sum_of({j2, j2});
  const GModuleHom p0 = ctx.add(ctx.compose(x.injections[0], r0.projections[0]), ctx.compose(x.injections[1], r0.projections[1]));
  const GModuleHom p1 = r1.projections[0];
  const GModuleHom p2 = r2.projections[0];
  std::vector<ResolutionStep<ModuleContext>> chain = {
      {x.object, p0, r0.injections[2], true},
      {j2, p1, r1.injections[1], true},
      {j2, p2, r2.injections[1], true},
  };
  const auto lad = synthetic_ladder(ctx, x.object, chain, LadderMode::Strict, &sys);
  CHECK(lad.d == 3);
  CHECK(lad.levels.size() == 3);
  CHECK(lad.assertions == 2 * 3 + 1);
  CHECK(remark_iii_check(ctx, lad) == ConditionalResult::Holds);
  std::vector<GModule> js;
  for (std::size_t s = 1; s <= 4; ++s) js.push_back(jordan_module(c4, F2, s));
  CHECK(stably_iso_against(ctx, js, lad.lambda));

  // the same chain with K_1 included into the wrong summand
  auto bad = chain;
  bad[0].inclusion = r0.injections[0];
  try {
    synthetic_ladder(ctx, x.object, bad, LadderMode::Lax);
    FAIL("expected CompositeNonzero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositeNonzero);
  }
  // strict mode rejects a precover that misses maps from a generator
  auto weak = chain;
  weak[1].precover = zero_hom(r1.object, j2);
  try {
    synthetic_ladder(ctx, x.object, weak, LadderMode::Strict, &sys);
    FAIL("expected FactorizationFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FactorizationFailure);
  }
}

TEST_CASE("synthetic ladders over Jordan modules") {
  SplitMix64 rng(19);
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  std::vector<GModule> js;
  for (std::size_t s = 1; s <= 4; ++s) js.push_back(jordan_module(c4, F2, s));
  for (int t = 0; t < 10; ++t) {
    // J3 <- kC4, then J2 and J3 onto the successive kernels
    const auto chain = epi_chain(ctx, js[2], {js[3], js[1], js[2]}, rng);
    const auto lad = synthetic_ladder(ctx, js[2], chain, LadderMode::Lax);
    CHECK(lad.d == 3);
    for (std::size_t n = 0; n < lad.d; ++n) {
      const auto& lv = lad.levels[n];
      CHECK(is_stably_zero_map(ctx, ctx.compose(lv.cone.g, lv.cone.f)));
      CHECK(is_stably_zero_map(ctx, ctx.compose(lv.cone.h, lv.cone.g)));
      CHECK(ctx.compose(chain[n].precover, lv.cone.proj_b).mat() == ctx.compose(lv.mu, lv.cone.cone_proj).mat());
    }
    CHECK(ctx.compose(lad.lambda, lad.levels[0].cone.g).mat() == chain[0].precover.mat());
    // all steps are conflations, so L_0 -> X is a stable isomorphism
    CHECK(remark_iii_check(ctx, lad) == ConditionalResult::Holds);
    CHECK(stably_iso_against(ctx, js, lad.lambda));
  }
}
