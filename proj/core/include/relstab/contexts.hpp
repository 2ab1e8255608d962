#pragma once

// The two Frobenius categories behind one interface. Everything in the stable,
// precover and localize layers is written against FrobeniusContext.

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "relstab/chctx.hpp"
#include "relstab/modctx.hpp"
#include "relstab/random.hpp"

namespace relstab {

template <class C>
concept FrobeniusContext = requires(const C& ctx, const typename C::Object& x, const typename C::Morphism& f,
                                    const std::vector<typename C::Object>& parts, const Vec& v,
                                    const std::vector<std::size_t>& pos, SplitMix64& rng) {
  { ctx.field() } -> std::convertible_to<PrimeField>;
  { ctx.identity(x) } -> std::same_as<typename C::Morphism>;
  { ctx.zero(x, x) } -> std::same_as<typename C::Morphism>;
  { ctx.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { ctx.add(f, f) } -> std::same_as<typename C::Morphism>;
  { ctx.scale(f, Elem{1}) } -> std::same_as<typename C::Morphism>;
  { ctx.flat_size(x, x) } -> std::same_as<std::size_t>;
  { ctx.flatten(f) } -> std::same_as<Vec>;
  { ctx.unflatten(x, x, v) } -> std::same_as<typename C::Morphism>;
  { ctx.hom_basis(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { ctx.phom_count(x, x) } -> std::same_as<std::size_t>;
  { ctx.phom_vector(x, x, std::size_t{0}) } -> std::same_as<Vec>;
  { ctx.phom_span_at(x, x, pos) } -> std::same_as<std::vector<Vec>>;
  { ctx.injective_embedding(x) } -> std::same_as<typename C::Morphism>;
  { ctx.projective_cover(x) } -> std::same_as<typename C::Morphism>;
  { ctx.kernel(f) } -> std::same_as<ObjectWithMap<typename C::Object, typename C::Morphism>>;
  { ctx.cokernel(f) } -> std::same_as<ObjectWithMap<typename C::Object, typename C::Morphism>>;
  { ctx.direct_sum(parts) } -> std::same_as<DirectSum<typename C::Object, typename C::Morphism>>;
  { ctx.descend(f, f) } -> std::same_as<std::optional<typename C::Morphism>>;
  { ctx.is_projective_injective(x) } -> std::same_as<bool>;
  { ctx.is_epi(f) } -> std::same_as<bool>;
  { ctx.dim(x) } -> std::same_as<std::size_t>;
  { ctx.label(x) } -> std::convertible_to<std::string>;
  { ctx.random_object(rng) } -> std::same_as<typename C::Object>;
};

class ModuleContext {
 public:
  using Object = GModule;
  using Morphism = GModuleHom;

  ModuleContext(GroupPtr group, PrimeField field) : group_(std::move(group)), field_(field) {}

  PrimeField field() const { return field_; }
  const GroupPtr& group() const { return group_; }

  Morphism identity(const Object& x) const { return identity_hom(x); }
  Morphism zero(const Object& a, const Object& b) const { return zero_hom(a, b); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return relstab::compose(g, f); }
  Morphism add(const Morphism& a, const Morphism& b) const;
  Morphism scale(const Morphism& f, Elem c) const;

  std::size_t flat_size(const Object& a, const Object& b) const { return a.dim() * b.dim(); }
  Vec flatten(const Morphism& f) const { return f.mat().data(); }
  Morphism unflatten(const Object& a, const Object& b, const Vec& v) const;

  std::vector<Morphism> hom_basis(const Object& a, const Object& b) const { return relstab::hom_basis(a, b); }
  std::size_t phom_count(const Object& a, const Object& b) const { return projective_factoring_count(a, b); }
  Vec phom_vector(const Object& a, const Object& b, std::size_t k) const {
    return projective_factoring_vector(a, b, k);
  }
  std::vector<Vec> phom_span_at(const Object& a, const Object& b, const std::vector<std::size_t>& pos) const {
    return projective_factoring_span_at(a, b, pos);
  }

  Morphism injective_embedding(const Object& x) const { return relstab::injective_embedding(x); }
  Morphism projective_cover(const Object& x) const { return relstab::projective_cover(x); }
  ObjectWithMap<Object, Morphism> kernel(const Morphism& f) const { return kernel_with_inclusion(f); }
  ObjectWithMap<Object, Morphism> cokernel(const Morphism& f) const { return cokernel_with_projection(f); }
  DirectSum<Object, Morphism> direct_sum(const std::vector<Object>& parts) const {
    return direct_sum_modules(parts, field_, group_);
  }
  /// u with u o epi = h, if h kills the kernel of epi.
  std::optional<Morphism> descend(const Morphism& epi, const Morphism& h) const;

  bool is_projective_injective(const Object& x) const { return is_projective(x); }
  /// Optional hook used by shift_object to keep iterated shifts small.
  Object reduce(const Object& x) const { return strip_projective_summands(x); }
  bool is_epi(const Morphism& f) const { return rank(f.mat()) == f.dst().dim(); }
  std::size_t dim(const Object& x) const { return x.dim(); }
  std::string label(const Object& x) const { return x.label(); }
  Object random_object(SplitMix64& rng) const;

 private:
  GroupPtr group_;
  PrimeField field_;
};

class ComplexContext {
 public:
  using Object = Complex;
  using Morphism = ChainMap;

  explicit ComplexContext(PrimeField field) : field_(field) {}

  PrimeField field() const { return field_; }

  Morphism identity(const Object& x) const { return identity_map(x); }
  Morphism zero(const Object& a, const Object& b) const { return zero_map(a, b); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return relstab::compose(g, f); }
  Morphism add(const Morphism& a, const Morphism& b) const { return relstab::add(a, b); }
  Morphism scale(const Morphism& f, Elem c) const { return relstab::scale(f, c); }

  std::size_t flat_size(const Object& a, const Object& b) const { return relstab::flat_size(a, b); }
  Vec flatten(const Morphism& f) const { return relstab::flatten(f); }
  Morphism unflatten(const Object& a, const Object& b, const Vec& v) const { return relstab::unflatten(a, b, v); }

  std::vector<Morphism> hom_basis(const Object& a, const Object& b) const { return chain_hom_basis(a, b); }
  std::size_t phom_count(const Object& a, const Object& b) const { return homotopy_span_count(a, b); }
  Vec phom_vector(const Object& a, const Object& b, std::size_t k) const { return homotopy_span_vector(a, b, k); }
  std::vector<Vec> phom_span_at(const Object& a, const Object& b, const std::vector<std::size_t>& pos) const;

  Morphism injective_embedding(const Object& x) const { return contractible_embedding(x); }
  Morphism projective_cover(const Object& x) const { return contractible_cover(x); }
  ObjectWithMap<Object, Morphism> kernel(const Morphism& f) const { return chain_kernel(f); }
  ObjectWithMap<Object, Morphism> cokernel(const Morphism& f) const { return chain_cokernel(f); }
  DirectSum<Object, Morphism> direct_sum(const std::vector<Object>& parts) const {
    return chain_direct_sum(parts, field_);
  }
  std::optional<Morphism> descend(const Morphism& epi, const Morphism& h) const;

  bool is_projective_injective(const Object& x) const { return x.is_acyclic(); }
  bool is_epi(const Morphism& f) const;
  std::size_t dim(const Object& x) const { return x.total_dim(); }
  std::string label(const Object& x) const { return x.label(); }
  /// Supported in [-2, 2] with dims at most 2.
  Object random_object(SplitMix64& rng) const;

 private:
  PrimeField field_;
};

static_assert(FrobeniusContext<ModuleContext>);
static_assert(FrobeniusContext<ComplexContext>);

}  // namespace relstab
