#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/error.hpp"

using namespace relstab;

namespace {

std::multiset<std::size_t> element_orders(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) out.insert(g.element_order(x));
  return out;
}

void check_structure(const FiniteGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto perm = g.left_regular(x);
    std::sort(perm.begin(), perm.end());
    for (std::size_t k = 0; k < perm.size(); ++k) CHECK(perm[k] == k);
    CHECK(g.mul(x, g.inverse(x)) == 0);
  }
}

void check_cosets(const SubgroupEmbedding& e) {
  const auto& G = *e.parent;
  CHECK(e.index() * e.sub->order() == G.order());
  CHECK(e.transversal[0] == 0);
  std::vector<int> hits(G.order(), 0);
  for (std::size_t i = 0; i < e.index(); ++i)
    for (auto h : e.inject) ++hits[G.mul(e.transversal[i], h)];
  for (auto h : hits) CHECK(h == 1);
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto [i, h] = e.decompose(g);
    CHECK(G.mul(e.transversal[i], e.inject[h]) == g);
  }
  // inject is a homomorphism
  for (std::size_t a = 0; a < e.sub->order(); ++a)
    for (std::size_t b = 0; b < e.sub->order(); ++b)
      CHECK(e.inject[e.sub->mul(a, b)] == G.mul(e.inject[a], e.inject[b]));
}

}  // namespace

TEST_CASE("named groups") {
  const auto c4 = cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(element_orders(c4) == std::multiset<std::size_t>{1, 2, 4, 4});
  const auto v4 = klein_four();
  CHECK(element_orders(v4) == std::multiset<std::size_t>{1, 2, 2, 2});
  const auto d8 = dihedral(4);
  CHECK(d8.order() == 8);
  CHECK(element_orders(d8) == std::multiset<std::size_t>{1, 2, 2, 2, 2, 2, 4, 4});
  const auto c2c2 = direct_product(cyclic(2), cyclic(2));
  CHECK(c2c2.order() == 4);
  CHECK(element_orders(c2c2) == element_orders(v4));
  for (const auto* g : {&c4, &v4, &d8, &c2c2}) check_structure(*g);
}

TEST_CASE("permutation closures") {
  // (0 1) and (2 3) generate a Klein four-group
  const auto g = from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK(g.order() == 4);
  CHECK(element_orders(g) == element_orders(klein_four()));
  const auto s3 = from_permutations({{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.order() == 6);
  CHECK(element_orders(s3) == std::multiset<std::size_t>{1, 2, 2, 2, 3, 3});
  check_structure(s3);
  // S5 has 120 elements
  CHECK(from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}).order() == 120);
  CHECK_THROWS_AS(from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), Error);
  try {
    (void)from_permutations({{0, 0, 1}});
    FAIL("expected InvalidPermutation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPermutation);
  }
  try {
    (void)from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 64);
    FAIL("expected ClosureBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureBoundExceeded);
  }
}

TEST_CASE("check_cayley") {
  const auto c6 = cyclic(6);
  CHECK(check_cayley(6, c6.table()).ok);
  auto bad = c6.table();
  bad[2 * 6 + 3] = 4;  // 2 + 3 should be 5
  const auto rep = check_cayley(6, bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.witness.empty());
  CHECK_THROWS_AS(FiniteGroup::from_table(6, bad, {1}, "bad"), Error);
  CHECK(check_cayley(4, direct_product(cyclic(2), cyclic(2)).table()).ok);
  // generators must generate
  CHECK_THROWS_AS(FiniteGroup::from_table(6, c6.table(), {2}, "C6"), Error);
}

TEST_CASE("subgroups and transversals") {
  const auto c4 = fixtures::c4();
  const auto h = subgroup_generated(c4, {2});
  CHECK(h.sub->order() == 2);
  CHECK(h.index() == 2);
  CHECK(h.transversal == std::vector<std::size_t>{0, 1});
  check_cosets(h);

  const auto triv = subgroup_generated(c4, {});
  CHECK(triv.sub->order() == 1);
  CHECK(triv.transversal == std::vector<std::size_t>{0, 1, 2, 3});
  check_cosets(triv);

  // klein four, H = <a>: cosets {e, a}, {b, ab}
  const auto v4 = fixtures::v4();
  const auto ha = subgroup_generated(v4, {1});
  CHECK(ha.sub->order() == 2);
  CHECK(ha.transversal == std::vector<std::size_t>{0, 2});
  check_cosets(ha);

  const auto s3 = fixtures::s3();
  for (std::size_t x = 0; x < s3->order(); ++x) check_cosets(subgroup_generated(s3, {x}));
  CHECK_THROWS_AS(subgroup_generated(c4, {7}), Error);
}

TEST_CASE("sylow subgroups") {
  const auto s3 = fixtures::s3();
  CHECK(sylow_subgroup(s3, 2).sub->order() == 2);
  CHECK(sylow_subgroup(s3, 3).sub->order() == 3);
  CHECK(sylow_subgroup(s3, 5).sub->order() == 1);
  const auto d8 = fixtures::share(dihedral(4));
  CHECK(sylow_subgroup(d8, 2).sub->order() == 8);
  const auto s4 = fixtures::share(from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}));
  CHECK(s4->order() == 24);
  CHECK(sylow_subgroup(s4, 2).sub->order() == 8);
  CHECK(sylow_subgroup(s4, 3).sub->order() == 3);
}
