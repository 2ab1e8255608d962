#pragma once

// Finite-dimensional kG-modules and their homomorphisms.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relstab/groups.hpp"
#include "relstab/linalg.hpp"
#include "relstab/structure.hpp"

namespace relstab {

/// Cheap-to-copy handle on an immutable representation. The full action
/// table (one matrix per group element) is stored.
class GModule {
 public:
  GModule() = default;

  /// Trusted constructor: the caller guarantees the table is a representation.
  static GModule from_table(GroupPtr group, PrimeField field, std::size_t dim, std::vector<Mat> action, std::string label);

  bool valid() const noexcept { return data_ != nullptr; }
  const FiniteGroup& group() const noexcept { return *data_->group; }
  const GroupPtr& group_ptr() const noexcept { return data_->group; }
  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const Mat& action(std::size_t g) const noexcept { return data_->action[g]; }
  const std::vector<Mat>& actions() const noexcept { return data_->action; }
  const std::string& label() const noexcept { return data_->label; }

  GModule relabeled(std::string label) const;

  /// Same group, field, and action table.
  friend bool operator==(const GModule& a, const GModule& b);

 private:
  struct Data {
    GroupPtr group;
    PrimeField field;
    std::size_t dim;
    std::vector<Mat> action;
    std::string label;
  };
  std::shared_ptr<const Data> data_;
};

class GModuleHom {
 public:
  GModuleHom() = default;
  /// Throws NotIntertwining unless mat * rho_src(s) = rho_dst(s) * mat on generators.
  GModuleHom(GModule src, GModule dst, Mat mat);

  const GModule& src() const noexcept { return src_; }
  const GModule& dst() const noexcept { return dst_; }
  const Mat& mat() const noexcept { return mat_; }

 private:
  GModule src_;
  GModule dst_;
  Mat mat_;
};

bool intertwines(const GModule& src, const GModule& dst, const Mat& mat);

GModuleHom compose(const GModuleHom& g, const GModuleHom& f);  // g after f
GModuleHom identity_hom(const GModule& m);
GModuleHom zero_hom(const GModule& src, const GModule& dst);

/// Builds the full table along a breadth-first spanning tree of the Cayley
/// graph and checks every remaining edge (RelationViolation) and
/// invertibility of the generator images (SingularMatrix).
GModule module_from_action(GroupPtr group, PrimeField field, const std::vector<Mat>& generator_images, std::string label);

GModule trivial_module(GroupPtr group, PrimeField field);
GModule regular_module(GroupPtr group, PrimeField field);
/// k[x]/(x^s) with the generator acting as 1 + x. Requires a cyclic group
/// presented by one generator and 1 <= s <= the p-part of |G|
/// (KindUnavailable otherwise).
GModule jordan_module(GroupPtr group, PrimeField field, std::size_t s);
/// Permutation module on the left cosets G/H.
GModule coset_permutation_module(const SubgroupEmbedding& emb, PrimeField field);

GModule restrict_module(const GModule& m, const SubgroupEmbedding& emb);
/// Basis t_i (x) e_j at index i * dim + j over the left transversal.
GModule induce_module(const SubgroupEmbedding& emb, const GModule& n);
/// Ind Res m -> m, t_i (x) v |-> t_i v.
GModuleHom counit_hom(const GModule& m, const SubgroupEmbedding& emb);

/// kG (x) m with G acting on the left factor only; this is Ind from the
/// trivial subgroup of Res m, hence free.
GModule free_module_on(const GModule& m);
/// m -> kG (x) m, v |-> sum_g g (x) g^-1 v.
GModuleHom injective_embedding(const GModule& m);
/// kG (x) m -> m, g (x) v |-> g v.
GModuleHom projective_cover(const GModule& m);

/// Canonical basis of Hom_kG(m, n): the flattened maps are returned in RREF.
/// Solves for the images of a spinning basis of m.
std::vector<GModuleHom> hom_basis(const GModule& m, const GModule& n);
/// Same space via the full intertwining system on all matrix entries; kept as
/// an independent route for cross-checking.
std::vector<GModuleHom> hom_basis_system(const GModule& m, const GModule& n);

/// Spanning set (flattened, row-major dst x src) of the maps m -> n that
/// factor through a projective: the relative trace sum_g g.E.g^-1 of the
/// elementary matrices.
std::vector<Vec> projective_factoring_span(const GModule& m, const GModule& n);
/// Number of spanning vectors, and the k-th one in full.
std::size_t projective_factoring_count(const GModule& m, const GModule& n);
Vec projective_factoring_vector(const GModule& m, const GModule& n, std::size_t k);
/// Every spanning vector, restricted to the given flat positions. Reading
/// only the pivot positions of a hom basis gives coordinates cheaply.
std::vector<Vec> projective_factoring_span_at(const GModule& m, const GModule& n,
                                              const std::vector<std::size_t>& positions);
/// Projective iff the restriction to a Sylow p-subgroup P is free, iff the
/// norm element of P acts with rank dim/|P|.
bool is_projective(const GModule& m);

/// Drops projective summands found by random relative traces: if
/// phi = Tr(E) is not nilpotent, m = ker phi^N + im phi^N with the image
/// projective. Stably isomorphic to m; deterministic; best effort.
GModule strip_projective_summands(const GModule& m);

ObjectWithMap<GModule, GModuleHom> kernel_with_inclusion(const GModuleHom& f);
ObjectWithMap<GModule, GModuleHom> cokernel_with_projection(const GModuleHom& f);
/// The smallest submodule containing `vectors`, with its inclusion.
ObjectWithMap<GModule, GModuleHom> submodule_generated(const GModule& m, const std::vector<Vec>& vectors);
DirectSum<GModule, GModuleHom> direct_sum_modules(const std::vector<GModule>& parts, PrimeField field, GroupPtr group);

struct ModuleRecipe {
  enum class Kind { SubmoduleOfFree, QuotientOfFree, SumOfNamed };
  Kind kind = Kind::SubmoduleOfFree;
  std::size_t rank = 1;     // free rank, or number of summands for SumOfNamed
  std::size_t vectors = 1;  // random vectors spun up (ignored for SumOfNamed)
};

GModule random_module(GroupPtr group, PrimeField field, const ModuleRecipe& recipe, std::uint64_t seed);

/// Named modules available for sampling over this group (trivial, regular,
/// Jordan modules when cyclic, permutation modules on cosets of cyclic subgroups).
std::vector<GModule> named_module_battery(const GroupPtr& group, PrimeField field);

/// True iff the group is presented by one generator of full order.
bool is_cyclic_presentation(const FiniteGroup& g);

}  // namespace relstab
