#pragma once

#include <vector>

namespace relstab {

/// An object together with its structure map: the inclusion of a kernel, the
/// projection onto a cokernel, and so on.
template <class Object, class Morphism>
struct ObjectWithMap {
  Object object;
  Morphism map;
};

template <class Object, class Morphism>
struct DirectSum {
  Object object;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

}  // namespace relstab
