#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/oracle.hpp"
#include "relstab/stable.hpp"

using namespace relstab;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

/// dim of stable homs J_a -> J_b over k[x]/(x^n): min(a, b) minus the maps
/// through the free module, max(0, a + b - n).
std::size_t jordan_stable_dim(std::size_t a, std::size_t b, std::size_t n) {
  return std::min(a, b) - (a + b > n ? a + b - n : 0);
}

template <class Ctx>
std::vector<std::size_t> dim_vector(const Ctx& ctx, const std::vector<typename Ctx::Object>& tests,
                                    const typename Ctx::Object& x) {
  std::vector<std::size_t> out;
  for (const auto& r : tests) out.push_back(stable_hom(ctx, r, x).quotient_dim());
  return out;
}

std::vector<GModule> jordans(const GroupPtr& g, PrimeField f) {
  std::vector<GModule> out;
  for (std::size_t s = 1; s <= g->order(); ++s) out.push_back(jordan_module(g, f, s));
  return out;
}

/// Multiplication by x = g - 1 on a module over a cyclic group.
GModuleHom times_x(const GModule& m) {
  return GModuleHom(m, m, m.action(1) - Mat::identity(m.field(), m.dim()));
}

std::vector<Complex> spheres(PrimeField f, int lo, int hi) {
  std::vector<Complex> out;
  for (int i = lo; i <= hi; ++i) out.push_back(sphere(f, i));
  return out;
}

}  // namespace

TEST_CASE("stable homs over group algebras") {
  const auto c2 = fixtures::c2();
  const ModuleContext ctx(c2, F2);
  const GModule k = trivial_module(c2, F2);
  const GModule kg = regular_module(c2, F2);
  CHECK(stable_hom(ctx, k, k).quotient_dim() == 1);
  CHECK(stable_hom(ctx, k, k).phom_dim() == 0);
  CHECK(stable_hom(ctx, kg, k).quotient_dim() == 0);
  CHECK(stable_hom(ctx, kg, kg).quotient_dim() == 0);
  CHECK(stable_hom(ctx, kg, kg).hom_dim() == 2);
  CHECK(is_stably_zero_object(ctx, kg));
  CHECK_FALSE(is_stably_zero_object(ctx, k));
  CHECK(is_stably_zero_map(ctx, identity_hom(kg)));
  CHECK_FALSE(is_stably_zero_map(ctx, identity_hom(k)));
  CHECK(is_stably_zero_map(ctx, zero_hom(k, k)));
}

TEST_CASE("stable homs between Jordan modules") {
  for (unsigned p : {2u, 3u}) {
    const auto g = fixtures::share(cyclic(p == 2 ? 4 : 3));
    const ModuleContext ctx(g, PrimeField(p));
    const auto js = jordans(g, PrimeField(p));
    for (std::size_t a = 0; a < js.size(); ++a)
      for (std::size_t b = 0; b < js.size(); ++b) {
        const auto s = stable_hom(ctx, js[a], js[b]);
        CHECK(s.quotient_dim() == jordan_stable_dim(a + 1, b + 1, g->order()));
        CHECK(s.quotient_dim() + s.phom_dim() == s.hom_dim());
      }
  }
}

TEST_CASE("stable homs of complexes") {
  const ComplexContext ctx(F2);
  CHECK(stable_hom(ctx, sphere(F2, 0), sphere(F2, 0)).quotient_dim() == 1);
  CHECK(stable_hom(ctx, disk(F2, 0), sphere(F2, 0)).quotient_dim() == 0);
  CHECK(stable_hom(ctx, sphere(F2, 0), disk(F2, 1)).quotient_dim() == 0);
  CHECK(stable_hom(ctx, sphere(F2, 0), disk(F2, 1)).hom_dim() == 1);
  CHECK(is_stably_zero_object(ctx, disk(F2, 3)));
  CHECK_FALSE(is_stably_zero_object(ctx, sphere(F2, 3)));
}

TEST_CASE("maps out of the injective hull are stably zero") {
  SplitMix64 rng(3);
  const ModuleContext mctx(fixtures::c4(), F2);
  const ComplexContext cctx(F3);
  for (int t = 0; t < 15; ++t) {
    const GModule m = mctx.random_object(rng), n = mctx.random_object(rng);
    CHECK(stable_hom(mctx, mctx.injective_embedding(m).dst(), n).quotient_dim() == 0);
    const Complex x = cctx.random_object(rng), y = cctx.random_object(rng);
    CHECK(stable_hom(cctx, cctx.injective_embedding(x).dst(), y).quotient_dim() == 0);
  }
}

TEST_CASE("suspension and desuspension") {
  const auto c2 = fixtures::c2();
  const auto c4 = fixtures::c4();
  const ModuleContext ctx2(c2, F2), ctx4(c4, F2);
  const GModule s = suspend(ctx2, trivial_module(c2, F2));
  CHECK(s.dim() == 1);
  CHECK(s.action(1).is_identity());
  const GModule ds = desuspend(ctx4, trivial_module(c4, F2));
  CHECK(ds.dim() == 3);
  // the augmentation ideal is J_3
  const auto js = jordans(c4, F2);
  CHECK(dim_vector(ctx4, js, ds) == dim_vector(ctx4, js, js[2]));
  // suspension of J_1 is J_3 and of J_2 is J_2
  CHECK(dim_vector(ctx4, js, suspend(ctx4, js[0])) == dim_vector(ctx4, js, js[2]));
  CHECK(dim_vector(ctx4, js, suspend(ctx4, js[1])) == dim_vector(ctx4, js, js[1]));

  const ComplexContext cctx(F2);
  const auto sph = spheres(F2, -3, 3);
  CHECK(dim_vector(cctx, sph, suspend(cctx, sphere(F2, 0))) == dim_vector(cctx, sph, sphere(F2, 1)));
  CHECK(dim_vector(cctx, sph, desuspend(cctx, sphere(F2, 0))) == dim_vector(cctx, sph, sphere(F2, -1)));
}

TEST_CASE("suspend undoes desuspend up to stable equivalence") {
  SplitMix64 rng(8);
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const auto js = jordans(c4, F2);
  for (int t = 0; t < 20; ++t) {
    const GModule m = ctx.random_object(rng);
    CHECK(dim_vector(ctx, js, suspend(ctx, desuspend(ctx, m))) == dim_vector(ctx, js, m));
  }
  const ComplexContext cctx(F3);
  const auto sph = spheres(F3, -4, 4);
  for (int t = 0; t < 20; ++t) {
    const Complex x = cctx.random_object(rng);
    CHECK(dim_vector(cctx, sph, suspend(cctx, desuspend(cctx, x))) == dim_vector(cctx, sph, x));
  }
}

TEST_CASE("cones") {
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const auto js = jordans(c4, F2);
  for (const auto& j : js) {
    CHECK(is_stably_zero_object(ctx, cone_triangle(ctx, identity_hom(j)).c));
    // cone(0 -> m) is m plus a free summand
    const auto z = cone_triangle(ctx, zero_hom(direct_sum_modules({}, F2, c4).object, j));
    CHECK(dim_vector(ctx, js, z.c) == dim_vector(ctx, js, j));
  }
  // x: J_2 -> J_2 has cone J_1 + J_3 plus free summands
  const auto t = cone_triangle(ctx, times_x(js[1]));
  CHECK(t.c.dim() == 8);
  std::vector<std::size_t> expected;
  for (std::size_t r = 1; r <= 4; ++r) expected.push_back(jordan_stable_dim(r, 1, 4) + jordan_stable_dim(r, 3, 4));
  CHECK(expected == std::vector<std::size_t>{2, 2, 2, 0});
  CHECK(dim_vector(ctx, js, t.c) == expected);
  CHECK(is_stably_zero_map(ctx, compose(t.g, t.f)));
  CHECK(is_stably_zero_map(ctx, compose(t.h, t.g)));

  const ComplexContext cctx(F2);
  const auto sph = spheres(F2, -3, 3);
  CHECK(is_stably_zero_object(cctx, cone_triangle(cctx, identity_map(sphere(F2, 1))).c));
  // cone(S(0) -> 0) is S(1)
  const auto c = cone_triangle(cctx, zero_map(sphere(F2, 0), Complex(F2)));
  CHECK(dim_vector(cctx, sph, c.c) == dim_vector(cctx, sph, sphere(F2, 1)));
}

TEST_CASE("induced stable matrices") {
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const auto js = jordans(c4, F2);
  for (const auto& r : js)
    for (const auto& m : js) {
      const Mat id = induced_stable_matrix(ctx, r, identity_hom(m));
      CHECK(id.is_identity());
      CHECK(induced_stable_matrix(ctx, r, zero_hom(m, m)).is_zero());
    }
  // on (J_2, J_2)_T = span(1, x), multiplication by x has rank 1
  CHECK(induced_stable_matrix(ctx, js[1], times_x(js[1])).rows() == 2);
  CHECK(rank(induced_stable_matrix(ctx, js[1], times_x(js[1]))) == 1);
}

TEST_CASE("long exact sequences of cone triangles") {
  SplitMix64 rng(44);
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const auto js = jordans(c4, F2);
  for (int t = 0; t < 25; ++t) {
    const GModule a = ctx.random_object(rng), b = ctx.random_object(rng);
    const auto tri = cone_triangle(ctx, random_morphism(ctx, a, b, rng));
    for (const auto& r : js) CHECK(les_exact_check(ctx, r, tri));
  }
  const ComplexContext cctx(F3);
  const auto sph = spheres(F3, -3, 3);
  for (int t = 0; t < 25; ++t) {
    const Complex a = cctx.random_object(rng), b = cctx.random_object(rng);
    const auto tri = cone_triangle(cctx, random_morphism(cctx, a, b, rng));
    for (const auto& r : sph) CHECK(les_exact_check(cctx, r, tri));
  }
  // the truncation triangle
  const Complex x = chain_direct_sum({sphere(F3, 0), sphere(F3, -1), disk(F3, 1)}, F3).object;
  const auto tri = cone_triangle(cctx, nonnegative_truncation(x).map);
  for (const auto& r : sph) CHECK(les_exact_check(cctx, r, tri));
}

TEST_CASE("factorization and split epis") {
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const GModule k = trivial_module(c4, F2);
  CHECK(is_split_epi(ctx, identity_hom(k)));
  CHECK_FALSE(is_split_epi(ctx, projective_cover(k)));
  const auto sum = direct_sum_modules({k, k}, F2, c4);
  CHECK(is_split_epi(ctx, sum.projections[0]));
  CHECK(factor_through(ctx, projective_cover(k), k, {identity_hom(k)}) == std::nullopt);
}
