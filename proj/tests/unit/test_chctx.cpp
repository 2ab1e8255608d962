#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/chctx.hpp"
#include "relstab/error.hpp"
#include "relstab/oracle.hpp"

using namespace relstab;
using fixtures::M;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Complex sum(const std::vector<Complex>& parts, PrimeField f = F2) { return chain_direct_sum(parts, f).object; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("complex construction") {
  const Complex s0 = sphere(F2, 0);
  CHECK(s0.lo() == 0);
  CHECK(s0.hi() == 0);
  const Complex d0 = disk(F2, 0);
  CHECK(d0.lo() == -1);
  CHECK(d0.hi() == 0);
  CHECK(d0.d(0) == M(2, {{1}}));
  CHECK(d0.is_acyclic());
  CHECK(kind_of([] {
          Complex::make(F2, 0, {1, 1, 1}, {Mat(F2, 0, 1), M(2, {{1}}), M(2, {{1}})});
        }) == ErrorKind::SquareNonzero);
  CHECK(kind_of([] { Complex::make(F2, 0, {1, 2}, {Mat(F2, 0, 1), M(2, {{1}})}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { sphere(F2, 9); }) == ErrorKind::WindowExceeded);
  CHECK(kind_of([] { shift(sphere(F2, 8), 1); }) == ErrorKind::WindowExceeded);
  // zero ends are trimmed
  const Complex t = Complex::make(F2, -2, {0, 1, 0}, {Mat(F2, 0, 0), Mat(F2, 0, 1), Mat(F2, 1, 0)});
  CHECK(t == sphere(F2, -1));
}

TEST_CASE("homology") {
  CHECK(sphere(F2, 0).homology_dims(-1, 1) == std::vector<std::size_t>{0, 1, 0});
  CHECK(disk(F2, 0).homology_dims(-1, 1) == std::vector<std::size_t>{0, 0, 0});
  CHECK(sum({sphere(F2, 0), disk(F2, 0)}).homology_dims(-1, 1) == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("shift") {
  const Complex d = disk(F3, 1);
  const Complex s = shift(d, 1);
  CHECK(s.lo() == 1);
  CHECK(s.d(2) == M(3, {{2}}));
  CHECK(shift(s, -1) == d);
  CHECK(shift(sphere(F2, 0), 1) == sphere(F2, 1));
}

TEST_CASE("contractible embedding") {
  const Complex s0 = sphere(F2, 0);
  const Complex c = cone_of_identity(s0);
  CHECK(c.lo() == 0);
  CHECK(c.hi() == 1);
  CHECK(c.dim(0) == 1);
  CHECK(c.dim(1) == 1);

  SplitMix64 rng(21);
  for (const PrimeField f : {F2, F3})
    for (int t = 0; t < 40; ++t) {
      const Complex x = random_complex(f, -2, 2, 3, rng);
      const ChainMap iota = contractible_embedding(x);
      CHECK(iota.dst().is_acyclic());
      for (int i = x.lo(); i <= x.hi(); ++i) CHECK(rank(iota.at(i)) == x.dim(i));
      CHECK(nullhomotopy_solve(identity_map(iota.dst())).has_value());
      const ChainMap pi = contractible_cover(x);
      CHECK(pi.src().is_acyclic());
      for (int i = x.lo(); i <= x.hi(); ++i) CHECK(rank(pi.at(i)) == x.dim(i));
    }
}

TEST_CASE("good truncation") {
  const Complex x = sum({sphere(F2, 0), sphere(F2, -1)});
  const auto w = nonnegative_truncation(x);
  CHECK(w.object == sphere(F2, 0));
  CHECK(chain_kernel(w.map).object.is_zero());
  CHECK(nonnegative_truncation(disk(F2, 0)).object.is_zero());
  const Complex pos = sum({sphere(F2, 0), disk(F2, 2)});
  const auto wp = nonnegative_truncation(pos);
  CHECK(wp.object == pos);
  CHECK(wp.map == identity_map(pos));

  SplitMix64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const PrimeField f = t % 2 ? F3 : F2;
    const Complex y = random_complex(f, -3, 3, 3, rng);
    const auto tw = nonnegative_truncation(y);
    const auto hy = y.homology_dims(0, 3), hw = tw.object.homology_dims(0, 3);
    for (std::size_t k = 1; k < hy.size(); ++k) CHECK(hy[k] == hw[k]);
    CHECK(hw[0] >= hy[0]);
    CHECK(tw.object.homology_dims(-3, -1) == std::vector<std::size_t>{0, 0, 0});
  }
}

TEST_CASE("chain homs") {
  CHECK(chain_hom_basis(sphere(F2, 0), sphere(F2, 0)).size() == 1);
  CHECK(chain_hom_basis(sphere(F2, 0), sphere(F2, 1)).empty());
  CHECK(chain_hom_basis(disk(F2, 1), sphere(F2, 0)).empty());
  CHECK(chain_hom_basis(sphere(F2, 0), disk(F2, 1)).size() == 1);
  CHECK(nullhomotopy_solve(identity_map(disk(F2, 0))).has_value());
  CHECK_FALSE(nullhomotopy_solve(identity_map(sphere(F2, 0))).has_value());

  SplitMix64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Complex a = random_complex(F2, -1, 1, 2, rng), b = random_complex(F2, -1, 1, 2, rng);
    if (flat_size(a, b) > 14) continue;
    CHECK(hom_basis_oracle(a, b).agree);
  }
}

TEST_CASE("kernels and cokernels of chain maps") {
  SplitMix64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const PrimeField f = t % 2 ? F3 : F2;
    const Complex a = random_complex(f, -2, 2, 3, rng), b = random_complex(f, -2, 2, 3, rng);
    const auto basis = chain_hom_basis(a, b);
    ChainMap g = zero_map(a, b);
    for (const auto& h : basis) g = add(g, scale(h, Elem(rng.below(f.p()))));
    const auto k = chain_kernel(g);
    const auto c = chain_cokernel(g);
    CHECK(flatten(compose(g, k.map)) == Vec(flat_size(k.object, b), 0));
    CHECK(flatten(compose(c.map, g)) == Vec(flat_size(a, c.object), 0));
    for (int i = -2; i <= 2; ++i) {
      CHECK(k.object.dim(i) + rank(g.at(i)) == a.dim(i));
      CHECK(c.object.dim(i) + rank(g.at(i)) == b.dim(i));
    }
  }
}

TEST_CASE("homotopy span consists of chain maps") {
  SplitMix64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const Complex a = random_complex(F3, -2, 2, 2, rng), b = random_complex(F3, -2, 2, 2, rng);
    for (const auto& v : homotopy_span(a, b)) CHECK_NOTHROW(unflatten(a, b, v));
  }
}
