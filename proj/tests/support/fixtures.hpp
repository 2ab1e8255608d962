#pragma once

#include <memory>

#include "relstab/contexts.hpp"
#include "relstab/groups.hpp"
#include "relstab/linalg.hpp"
#include "relstab/random.hpp"

namespace fixtures {

using namespace relstab;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline GroupPtr c2() { return share(cyclic(2)); }
inline GroupPtr c4() { return share(cyclic(4)); }
inline GroupPtr v4() { return share(klein_four()); }
/// S3 acting on three points, generated by a 3-cycle and a transposition.
inline GroupPtr s3() { return share(from_permutations({{1, 2, 0}, {1, 0, 2}})); }

inline Mat random_mat(PrimeField f, std::size_t r, std::size_t c, SplitMix64& rng) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Elem(rng.below(f.p()));
  return m;
}

inline Mat M(unsigned p, const std::vector<std::vector<long long>>& rows) {
  return Mat::from_rows(PrimeField(p), rows);
}

}  // namespace fixtures
