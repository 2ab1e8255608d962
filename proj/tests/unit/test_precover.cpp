#include <algorithm>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/precover.hpp"

using namespace relstab;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Complex sum(const std::vector<Complex>& parts, PrimeField f = F2) { return chain_direct_sum(parts, f).object; }

SubgroupInducedSystem induced_system(const GroupPtr& g, std::vector<std::size_t> gens, PrimeField f) {
  return SubgroupInducedSystem(ModuleContext(g, f), subgroup_generated(g, std::move(gens)));
}

std::vector<std::size_t> kernel_dims(const Resolution<ModuleContext>& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= r.steps.size(); ++i) out.push_back(r.k(i).dim());
  return out;
}

}  // namespace

TEST_CASE("subgroup-induced precovers") {
  const auto c4 = fixtures::c4();
  const auto sys = induced_system(c4, {2}, F2);
  const GModule k = trivial_module(c4, F2);
  const auto p = sys.precover_of(k);
  CHECK(p.src().dim() == 2);
  CHECK(sys.context().is_epi(p));
  CHECK_FALSE(is_member(sys, k));
  for (const auto& g : sys.generators()) CHECK(is_member(sys, g));
  CHECK(is_member(sys, regular_module(c4, F2)));
  // Ind(trivial of C2) and Ind(regular of C2) = kC4, the latter projective and dropped
  CHECK(sys.generators().size() == 1);
  CHECK(sys.generators()[0].dim() == 2);
}

TEST_CASE("add-list precovers") {
  const auto c4 = fixtures::c4();
  const ModuleContext ctx(c4, F2);
  const GModule j1 = jordan_module(c4, F2, 1), j2 = jordan_module(c4, F2, 2);
  const GModule kg = regular_module(c4, F2);
  const AddListSystem<ModuleContext> sys(ctx, {j2, kg});
  CHECK(hom_basis(j2, j1).size() == 1);
  CHECK(hom_basis(kg, j1).size() == 1);
  const auto p = sys.precover_of(j1);
  // every hom from every generator: one copy of J_2 and one of kC4
  CHECK(p.src().dim() == 2 + 4);
  CHECK(ctx.is_epi(p));
  CHECK(is_member(sys, j2));
  CHECK(is_member(sys, kg));
  CHECK_FALSE(is_member(sys, j1));
  // without a projective generator the completion adds just enough copies of kC4
  const AddListSystem<ModuleContext> bare(ctx, {j1});
  const auto q = bare.precover_of(j2);
  CHECK(ctx.is_epi(q));
  CHECK(q.src().dim() == 1 + 4);
  CHECK(bare.precover_of(j1).src().dim() == 1);
}

TEST_CASE("add-list precovers of complexes") {
  const ComplexContext ctx(F3);
  const AddListSystem<ComplexContext> sys(ctx, {sphere(F3, 0)});
  const Complex x = sum({sphere(F3, 0), sphere(F3, 1)}, F3);
  const auto p = sys.precover_of(x);
  CHECK(ctx.is_epi(p));
  CHECK(is_member(sys, sphere(F3, 0)));
  CHECK(is_member(sys, sum({sphere(F3, 0), sphere(F3, 0)}, F3)));
  CHECK_FALSE(is_member(sys, x));
}

TEST_CASE("truncation precovers") {
  const TruncationSystem sys{ComplexContext(F2)};
  const Complex x = sum({sphere(F2, 0), sphere(F2, -1)});
  const auto p = sys.precover_of(x);
  CHECK(p.src() == sphere(F2, 0));
  CHECK_FALSE(sys.context().is_epi(p));
  CHECK_FALSE(is_member(sys, x));
  CHECK(is_member(sys, sphere(F2, 0)));
  CHECK(is_member(sys, disk(F2, 1)));
  CHECK(is_member(sys, Complex(F2)));
  CHECK_FALSE(is_member(sys, disk(F2, 0)));
}

TEST_CASE("resolutions") {
  const auto c4 = fixtures::c4();
  const auto sys = induced_system(c4, {2}, F2);
  const auto gen = sys.generators()[0];
  const auto r0 = build_resolution(sys, gen, 4, 4096);
  CHECK(r0.outcome == Outcome::FiniteDim);
  CHECK(r0.d() == 0);

  const auto r = build_resolution(sys, trivial_module(c4, F2), 5, 4096);
  CHECK(r.outcome == Outcome::CapReached);
  CHECK(kernel_dims(r) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  for (const auto& s : r.steps) CHECK(s.conflation);
  const auto r4 = build_resolution(sys, trivial_module(c4, F2), 4, 4096);
  CHECK(kernel_dims(r4) == std::vector<std::size_t>{1, 1, 1, 1});

  CHECK_THROWS_AS(build_resolution(sys, trivial_module(c4, F2), 4, 1), Error);
  try {
    build_resolution(sys, trivial_module(c4, F2), 4, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionBudgetExceeded);
  }

  const TruncationSystem tsys{ComplexContext(F2)};
  const auto rt = build_resolution(tsys, sum({sphere(F2, 0), sphere(F2, -1)}), 4, 4096);
  CHECK(rt.outcome == Outcome::FiniteDim);
  CHECK(rt.d() == 1);
  CHECK(rt.k(1).is_zero());
  CHECK_FALSE(rt.steps[0].conflation);
}

TEST_CASE("precover factorization on random pairs") {
  SplitMix64 rng(77);
  const auto c4 = fixtures::c4();
  const auto sys = induced_system(c4, {2}, F2);
  const AddListSystem<ModuleContext> add(ModuleContext(c4, F2), {jordan_module(c4, F2, 2), regular_module(c4, F2)});
  const TruncationSystem tsys{ComplexContext(F3)};
  for (int t = 0; t < 15; ++t) {
    CHECK(precover_factors(sys, sys.sample_member(rng), sys.context().random_object(rng)));
    CHECK(precover_factors(add, add.sample_member(rng), add.context().random_object(rng)));
    CHECK(precover_factors(tsys, tsys.sample_member(rng), tsys.context().random_object(rng)));
  }
}

TEST_CASE("hypothesis checks") {
  const auto c4 = fixtures::c4();
  for (const auto& [g, h, p] : {std::tuple{fixtures::c4(), std::size_t{2}, 2u}, std::tuple{fixtures::v4(), std::size_t{1}, 2u},
                                std::tuple{fixtures::v4(), std::size_t{2}, 2u}, std::tuple{fixtures::s3(), std::size_t{1}, 3u}}) {
    const auto sys = induced_system(g, {h}, PrimeField(p));
    const auto rep = check_hypotheses(sys, 5);
    CHECK(rep.passes());
    CHECK(rep.shift_down.ok);
    CHECK(rep.factorization.checked > 0);
  }

  const TruncationSystem tsys{ComplexContext(F2)};
  const auto trep = check_hypotheses(tsys, 5);
  CHECK(trep.passes());
  CHECK(trep.factorization.ok);
  CHECK(trep.shift_up.ok);
  CHECK(trep.injective_hull.ok);
  CHECK_FALSE(trep.shift_down.ok);

  const AddListSystem<ModuleContext> bad(ModuleContext(c4, F2), {jordan_module(c4, F2, 1), regular_module(c4, F2)});
  const auto brep = check_hypotheses(bad, 5);
  CHECK_FALSE(brep.passes());
  CHECK_FALSE(brep.shift_up.ok);
  CHECK(brep.shift_up.failures == std::vector<std::string>{"suspend(J1)"});
  CHECK(brep.factorization.ok);
  CHECK(brep.injective_hull.ok);
}

TEST_CASE("test objects") {
  const TruncationSystem tsys{ComplexContext(F2)};
  const auto objs = test_objects(tsys, 2);
  std::vector<std::string> labels;
  for (const auto& o : objs) labels.push_back(o.label);
  CHECK(labels.front() == "S(0)");
  CHECK(std::find(labels.begin(), labels.end(), "sus^2(S(0))") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "sus^-1(S(0))") == labels.end());
  for (const auto& o : objs) CHECK(is_member(tsys, o.object));

  // module shifts are reduced: J2 over kC4 is periodic of period one
  const auto c4 = fixtures::c4();
  const auto msys = induced_system(c4, {2}, F2);
  const auto mobjs = test_objects(msys, 2);
  CHECK(mobjs.size() == 5);
  for (const auto& o : mobjs) {
    CHECK(o.object.dim() == 2);
    CHECK(is_member(msys, o.object));
  }
}

TEST_CASE("truncation at other cutoffs") {
  for (int c : {-2, 1, 3}) {
    const TruncationSystem sys{ComplexContext(F3), c};
    const Complex x = sum({sphere(F3, c), sphere(F3, c - 1), disk(F3, c)}, F3);
    const auto p = sys.precover_of(x);
    CHECK(p.src().lo() == c);
    CHECK(p.src().homology_dims(c - 2, c + 2) == std::vector<std::size_t>{0, 0, 1, 0, 0});
    CHECK(is_member(sys, sphere(F3, c)));
    CHECK_FALSE(is_member(sys, x));
    const auto rep = check_hypotheses(sys, 3);
    CHECK(rep.passes());
    CHECK_FALSE(rep.shift_down.ok);
    const auto res = build_resolution(sys, x, 4, 4096);
    CHECK(res.outcome == Outcome::FiniteDim);
    CHECK(res.d() == 1);
  }
}
