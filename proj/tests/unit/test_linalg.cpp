#include "doctest.h"
#include "fixtures.hpp"
#include "relstab/error.hpp"

using namespace relstab;
using fixtures::M;
using fixtures::random_mat;

TEST_CASE("prime field validation") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(97));
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(101), Error);
  try {
    PrimeField bad(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidField);
  }
  const PrimeField f(7);
  for (unsigned a = 1; a < 7; ++a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
  CHECK(f.reduce(-1) == 6);
}

TEST_CASE("mat_mul") {
  const PrimeField f2(2);
  SplitMix64 rng(11);
  const Mat a = random_mat(f2, 2, 2, rng);
  CHECK(Mat::identity(f2, 2) * a == a);
  CHECK(M(2, {{1, 1}, {1, 1}}) * M(2, {{1}, {1}}) == M(2, {{0}, {0}}));
  CHECK_THROWS_AS(M(2, {{1, 1}}) * M(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(M(2, {{1}}) * M(3, {{1}}), Error);
  // zero-sized shapes are legal
  CHECK((Mat(f2, 3, 0) * Mat(f2, 0, 4)).is_zero());
  CHECK((Mat(f2, 3, 0) * Mat(f2, 0, 4)).rows() == 3);
}

TEST_CASE("mat_mul is associative on random triples") {
  const PrimeField f3(3);
  SplitMix64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    const Mat a = random_mat(f3, 4, 4, rng), b = random_mat(f3, 4, 4, rng), c = random_mat(f3, 4, 4, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rref") {
  const Rref r = rref(M(2, {{1, 1}, {1, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  const Rref z = rref(Mat(PrimeField(2), 3, 3));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  // det = 4 - 1 = 0 mod 3
  CHECK(rank(M(3, {{2, 1}, {1, 2}})) == 1);
  CHECK(rank(M(5, {{2, 1}, {1, 2}})) == 2);
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  SplitMix64 rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = rng.between(0, 5), c = rng.between(0, 6);
      const Mat a = random_mat(f, r, c, rng);
      const Rref once = rref(a);
      CHECK(rref(once.reduced).reduced == once.reduced);
      const Mat k = kernel_basis(a);
      CHECK(once.rank + k.cols() == a.cols());
      CHECK((a * k).is_zero());
    }
  }
}

TEST_CASE("kernel_basis canonical form") {
  CHECK(kernel_basis(Mat::identity(PrimeField(2), 2)).cols() == 0);
  CHECK(kernel_basis(M(2, {{1, 1}})) == M(2, {{1}, {1}}));
  CHECK(kernel_basis(M(2, {{1, 1}, {1, 1}})) == M(2, {{1}, {1}}));
  // free columns ascending, pivots back-solved: x0 = -x1 - 2 x2 over F_3
  CHECK(kernel_basis(M(3, {{1, 1, 2}})) == M(3, {{2, 1}, {1, 0}, {0, 1}}));
}

TEST_CASE("solve_linear") {
  const PrimeField f(3);
  const Mat b = M(3, {{1, 2}, {0, 1}});
  CHECK(*solve_linear(Mat::identity(f, 2), b) == b);
  CHECK(*solve_linear(M(2, {{1, 1}}), M(2, {{1}})) == M(2, {{1}, {0}}));
  CHECK_FALSE(solve_linear(M(2, {{0}}), M(2, {{1}})).has_value());
  CHECK_THROWS_AS(solve_linear(M(2, {{1, 1}}), M(2, {{1}, {1}})), Error);

  SplitMix64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const Mat a = random_mat(f, 3, 4, rng), rhs = random_mat(f, 3, 2, rng);
    if (auto x = solve_linear(a, rhs)) CHECK(a * *x == rhs);
    // a consistent system by construction
    const Mat x0 = random_mat(f, 4, 2, rng);
    const auto y = solve_linear(a, a * x0);
    REQUIRE(y.has_value());
    CHECK(a * *y == a * x0);
  }
}

TEST_CASE("inverse") {
  const Mat a = M(5, {{2, 1}, {1, 2}});
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  CHECK_FALSE(inverse(M(3, {{2, 1}, {1, 2}})).has_value());
}

TEST_CASE("kronecker and direct sums") {
  const PrimeField f(3);
  const Mat a = M(3, {{1, 2}, {0, 1}});
  const Mat k = kronecker(Mat::identity(f, 2), a);
  CHECK(k.block(0, 0, 2, 2) == a);
  CHECK(k.block(2, 2, 2, 2) == a);
  CHECK(k.block(0, 2, 2, 2).is_zero());
  CHECK(direct_sum_mat(M(3, {{1}}), M(3, {{2}})) == M(3, {{1, 0}, {0, 2}}));
  const Mat big = kronecker(Mat(f, 2, 3), Mat(f, 4, 5));
  CHECK(big.rows() == 8);
  CHECK(big.cols() == 15);
  CHECK_THROWS_AS(kronecker(M(2, {{1}}), M(3, {{1}})), Error);
}

TEST_CASE("echelon basis agrees with rref") {
  SplitMix64 rng(17);
  const PrimeField f(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> vs;
    for (int k = 0; k < 5; ++k) vs.push_back(random_mat(f, 1, 6, rng).data());
    EchelonBasis e(f, 6);
    for (const auto& v : vs) e.insert(v);
    CHECK(e.to_mat() == row_space(f, 6, vs));
    CHECK(e.rank() == rank(Mat::from_columns(f, 6, vs)));
    // membership coordinates: v = sum v[pivot_k] row_k
    const Mat rows = e.to_mat();
    const auto piv = e.sorted_pivots();
    for (const auto& v : vs) {
      Vec rebuilt(6, 0);
      for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < 6; ++j) rebuilt[j] = f.add(rebuilt[j], f.mul(v[piv[k]], rows(k, j)));
      CHECK(rebuilt == v);
    }
  }
}
