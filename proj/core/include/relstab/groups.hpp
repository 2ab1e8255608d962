#pragma once

// Finite groups as Cayley tables. Element 0 is always the identity.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace relstab {

using Permutation = std::vector<std::size_t>;  // image list on {0, ..., m-1}

struct CayleyReport {
  bool ok = true;
  std::string witness;  // empty when ok
};

/// Checks identity (index 0) and two-sided inverses; associativity is
/// checked exhaustively for n <= 64 (larger tables come from permutation
/// closures, which are associative by construction).
CayleyReport check_cayley(std::size_t n, const std::vector<std::size_t>& table);

class FiniteGroup {
 public:
  /// Validates the table (ValidationFailure with the offending triple) and
  /// that `generators` generate the whole group.
  static FiniteGroup from_table(std::size_t order, std::vector<std::size_t> table, std::vector<std::size_t> generators,
                                std::string name);

  std::size_t order() const noexcept { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const noexcept { return inverse_[a]; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t element_order(std::size_t a) const;
  /// Left multiplication by g as a permutation of element indices.
  Permutation left_regular(std::size_t g) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic(std::size_t n);
/// Order 2n: index i + n*j stands for r^i s^j.
FiniteGroup dihedral(std::size_t n);
/// C2 x C2 with e = 0, a = 1, b = 2, ab = 3.
FiniteGroup klein_four();
/// Index i1 + |G1| * i2.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
/// Breadth-first closure of the given permutations; throws
/// ClosureBoundExceeded past `bound` elements and InvalidPermutation on
/// malformed input.
FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::size_t bound = 512);

struct SubgroupEmbedding {
  GroupPtr parent;
  GroupPtr sub;
  std::vector<std::size_t> inject;       // sub index -> parent index (ascending)
  std::vector<std::size_t> transversal;  // left coset representatives, transversal[0] = 0
  std::vector<std::size_t> coset_of;     // parent element -> coset number
  std::vector<std::optional<std::size_t>> sub_index;  // parent element -> sub index, if in H

  std::size_t index() const noexcept { return transversal.size(); }
  /// Writes g = transversal[i] * inject[h]; returns {i, h}.
  std::pair<std::size_t, std::size_t> decompose(std::size_t g) const;
};

/// Closure of `elems`; representatives are the smallest element index of
/// each left coset gH.
SubgroupEmbedding subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& elems);

/// A Sylow p-subgroup, grown greedily from the trivial group.
SubgroupEmbedding sylow_subgroup(const GroupPtr& g, unsigned p);

}  // namespace relstab
