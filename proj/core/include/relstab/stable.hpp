#pragma once

// The stable category T = E/P over any FrobeniusContext: stable hom spaces,
// cones, suspension and the long exact sequences of triangles.

#include <optional>
#include <string>
#include <vector>

#include "relstab/contexts.hpp"
#include "relstab/error.hpp"

namespace relstab {

/// Hom(m, n) modulo the maps factoring through a projective-injective.
///
/// The hom basis is kept in RREF of the flattened maps, so the coordinates of
/// a hom are read off at the pivot positions. The phom subspace is stored in
/// those coordinates, again in RREF; the quotient basis is given by the
/// coordinates that are not phom pivots.
template <FrobeniusContext Ctx>
class StableHomSpace {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  StableHomSpace(const Ctx& ctx, Object src, Object dst);

  const Object& src() const noexcept { return src_; }
  const Object& dst() const noexcept { return dst_; }
  std::size_t hom_dim() const noexcept { return hom_.size(); }
  std::size_t phom_dim() const noexcept { return phom_.rank(); }
  std::size_t quotient_dim() const noexcept { return quotient_pos_.size(); }
  const std::vector<Morphism>& hom_basis() const noexcept { return hom_; }

  /// Coordinates in the hom basis; throws WellDefinednessFailure if f is not
  /// in the span (which would mean f is not a morphism src -> dst).
  Vec hom_coords(const Morphism& f) const;
  /// Coordinates of the class of f in the quotient basis.
  Vec quotient_coords(const Morphism& f) const;
  /// A representative of the j-th quotient basis vector.
  const Morphism& quotient_rep(std::size_t j) const { return hom_[quotient_pos_[j]]; }
  bool is_stably_zero(const Morphism& f) const;

 private:
  const Ctx* ctx_;
  Object src_;
  Object dst_;
  std::vector<Morphism> hom_;
  std::vector<Vec> hom_flat_;
  std::vector<std::size_t> hom_pivots_;  // pivot position of each hom basis vector
  EchelonBasis phom_;                    // in hom coordinates
  std::vector<std::size_t> quotient_pos_;
};

template <FrobeniusContext Ctx>
StableHomSpace<Ctx>::StableHomSpace(const Ctx& ctx, Object src, Object dst)
    : ctx_(&ctx), src_(std::move(src)), dst_(std::move(dst)), phom_(ctx.field(), 0) {
  hom_ = ctx.hom_basis(src_, dst_);
  for (const auto& h : hom_) {
    Vec v = ctx.flatten(h);
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    hom_pivots_.push_back(p);
    hom_flat_.push_back(std::move(v));
  }
  phom_ = EchelonBasis(ctx.field(), hom_.size());
  if (hom_.empty()) return;
  // Each spanning vector is a morphism, so its pivot entries are its coordinates.
  std::vector<std::size_t> chosen;
  const auto span = ctx.phom_span_at(src_, dst_, hom_pivots_);
  for (std::size_t k = 0; k < span.size() && phom_.rank() < hom_.size(); ++k)
    if (phom_.insert(span[k])) chosen.push_back(k);
  // Spot-check: the chosen spanning vectors really lie in the hom span.
  for (auto k : chosen) {
    const Vec full = ctx.phom_vector(src_, dst_, k);
    Vec rebuilt(full.size(), 0);
    const Vec& c = span[k];
    for (std::size_t b = 0; b < hom_.size(); ++b)
      if (c[b])
        for (std::size_t t = 0; t < full.size(); ++t)
          rebuilt[t] = ctx.field().add(rebuilt[t], ctx.field().mul(c[b], hom_flat_[b][t]));
    if (rebuilt != full) throw Error(ErrorKind::WellDefinednessFailure, "projective-factoring map outside the hom space");
  }
  const auto piv = phom_.sorted_pivots();
  for (std::size_t j = 0, q = 0; j < hom_.size(); ++j) {
    if (q < piv.size() && piv[q] == j) {
      ++q;
      continue;
    }
    quotient_pos_.push_back(j);
  }
}

template <FrobeniusContext Ctx>
Vec StableHomSpace<Ctx>::hom_coords(const Morphism& f) const {
  const Vec v = ctx_->flatten(f);
  const PrimeField& fld = ctx_->field();
  Vec c(hom_.size());
  Vec rebuilt(v.size(), 0);
  for (std::size_t b = 0; b < hom_.size(); ++b) {
    c[b] = v[hom_pivots_[b]];
    if (c[b])
      for (std::size_t t = 0; t < v.size(); ++t) rebuilt[t] = fld.add(rebuilt[t], fld.mul(c[b], hom_flat_[b][t]));
  }
  if (rebuilt != v) throw Error(ErrorKind::WellDefinednessFailure, "map is not in the hom space");
  return c;
}

template <FrobeniusContext Ctx>
Vec StableHomSpace<Ctx>::quotient_coords(const Morphism& f) const {
  Vec c = hom_coords(f);
  phom_.reduce(c);
  Vec out(quotient_pos_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = c[quotient_pos_[j]];
  return out;
}

template <FrobeniusContext Ctx>
bool StableHomSpace<Ctx>::is_stably_zero(const Morphism& f) const {
  Vec c = hom_coords(f);
  return phom_.reduce(c);
}

template <FrobeniusContext Ctx>
StableHomSpace<Ctx> stable_hom(const Ctx& ctx, const typename Ctx::Object& m, const typename Ctx::Object& n) {
  return StableHomSpace<Ctx>(ctx, m, n);
}

template <FrobeniusContext Ctx>
bool is_stably_zero_map(const Ctx& ctx, const typename Ctx::Morphism& f) {
  if (ctx.flatten(f) == Vec(ctx.flat_size(f.src(), f.dst()), 0)) return true;
  return stable_hom(ctx, f.src(), f.dst()).is_stably_zero(f);
}

/// For both shipped contexts an object is zero in T iff it is
/// projective-injective (id factors through I(m) iff m is a summand of it).
template <FrobeniusContext Ctx>
bool is_stably_zero_object(const Ctx& ctx, const typename Ctx::Object& m) {
  return ctx.is_projective_injective(m);
}

/// Matrix of (r, m)_T -> (r, n)_T, post-composition with f: m -> n.
template <FrobeniusContext Ctx>
Mat induced_stable_matrix(const Ctx& ctx, const StableHomSpace<Ctx>& from, const StableHomSpace<Ctx>& to,
                          const typename Ctx::Morphism& f) {
  Mat out(ctx.field(), to.quotient_dim(), from.quotient_dim());
  for (std::size_t j = 0; j < from.quotient_dim(); ++j) {
    const Vec col = to.quotient_coords(ctx.compose(f, from.quotient_rep(j)));
    for (std::size_t i = 0; i < col.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

template <FrobeniusContext Ctx>
Mat induced_stable_matrix(const Ctx& ctx, const typename Ctx::Object& r, const typename Ctx::Morphism& f) {
  return induced_stable_matrix(ctx, stable_hom(ctx, r, f.src()), stable_hom(ctx, r, f.dst()), f);
}

/// a -> b -> c -> a[1] with c the cone of f. Besides the four maps, the
/// construction data is kept: c = coker((f, -iota): a -> b + I(a)).
template <FrobeniusContext Ctx>
struct Triangle {
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  Object a, b, c, a_shift;
  Morphism f, g, h;
  Morphism iota;          // a -> I(a)
  Morphism presentation;  // (f, -iota): a -> b + I(a)
  Morphism cone_proj;     // b + I(a) -> c
  Morphism inj_b, inj_i;  // into b + I(a)
  Morphism proj_b, proj_i;
};

/// Suspension: the cokernel of the injective embedding, with its projection.
template <FrobeniusContext Ctx>
ObjectWithMap<typename Ctx::Object, typename Ctx::Morphism> suspension_data(const Ctx& ctx,
                                                                             const typename Ctx::Object& m) {
  return ctx.cokernel(ctx.injective_embedding(m));
}

template <FrobeniusContext Ctx>
typename Ctx::Object suspend(const Ctx& ctx, const typename Ctx::Object& m) {
  return suspension_data(ctx, m).object;
}

template <FrobeniusContext Ctx>
typename Ctx::Object desuspend(const Ctx& ctx, const typename Ctx::Object& m) {
  return ctx.kernel(ctx.projective_cover(m)).object;
}

template <FrobeniusContext Ctx>
Triangle<Ctx> cone_triangle(const Ctx& ctx, const typename Ctx::Morphism& f) {
  using Morphism = typename Ctx::Morphism;
  Triangle<Ctx> t;
  t.a = f.src();
  t.b = f.dst();
  t.f = f;
  t.iota = ctx.injective_embedding(t.a);
  const auto sum = ctx.direct_sum({t.b, t.iota.dst()});
  t.inj_b = sum.injections[0];
  t.inj_i = sum.injections[1];
  t.proj_b = sum.projections[0];
  t.proj_i = sum.projections[1];
  const PrimeField fld = ctx.field();
  t.presentation = ctx.add(ctx.compose(t.inj_b, f), ctx.compose(t.inj_i, ctx.scale(t.iota, fld.neg(1))));
  const auto coker = ctx.cokernel(t.presentation);
  t.c = coker.object;
  t.cone_proj = coker.map;
  t.g = ctx.compose(t.cone_proj, t.inj_b);

  const auto shift = ctx.cokernel(t.iota);
  t.a_shift = shift.object;
  const Morphism to_shift = ctx.compose(shift.map, t.proj_i);  // (0, pi) on b + I(a)
  auto h = ctx.descend(t.cone_proj, to_shift);
  if (!h) throw Error(ErrorKind::WellDefinednessFailure, "connecting map does not descend to the cone");
  t.h = *h;

  // g f = (cone_proj inj_i) iota, so g f factors through I(a); h g = 0.
  const Morphism witness = ctx.compose(ctx.compose(t.cone_proj, t.inj_i), t.iota);
  if (ctx.flatten(ctx.compose(t.g, f)) != ctx.flatten(witness))
    throw Error(ErrorKind::WellDefinednessFailure, "g f does not factor through I(a)");
  const Vec hg = ctx.flatten(ctx.compose(t.h, t.g));
  for (auto e : hg)
    if (e) throw Error(ErrorKind::WellDefinednessFailure, "h g is not zero");
  return t;
}

/// Exactness of (r, a)_T -> (r, b)_T -> (r, c)_T at the middle.
template <FrobeniusContext Ctx>
bool les_exact_check(const Ctx& ctx, const typename Ctx::Object& r, const Triangle<Ctx>& t) {
  const auto ra = stable_hom(ctx, r, t.a);
  const auto rb = stable_hom(ctx, r, t.b);
  const auto rc = stable_hom(ctx, r, t.c);
  const Mat m1 = induced_stable_matrix(ctx, ra, rb, t.f);
  const Mat m2 = induced_stable_matrix(ctx, rb, rc, t.g);
  if (!(m2 * m1).is_zero()) return false;
  return rank(m1) + rank(m2) == rb.quotient_dim();
}

/// A random combination of the hom basis.
template <FrobeniusContext Ctx>
typename Ctx::Morphism random_morphism(const Ctx& ctx, const typename Ctx::Object& a, const typename Ctx::Object& b,
                                       SplitMix64& rng) {
  const auto basis = ctx.hom_basis(a, b);
  Vec v(ctx.flat_size(a, b), 0);
  const PrimeField fld = ctx.field();
  for (const auto& h : basis) {
    const Elem c = Elem(rng.below(fld.p()));
    if (!c) continue;
    const Vec hv = ctx.flatten(h);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = fld.add(v[t], fld.mul(c, hv[t]));
  }
  return ctx.unflatten(a, b, v);
}

/// Solves p o u_k = targets[k] over Hom(w, src p); nullopt if some target
/// does not factor.
template <FrobeniusContext Ctx>
std::optional<std::vector<typename Ctx::Morphism>> factor_through(const Ctx& ctx, const typename Ctx::Morphism& p,
                                                                  const typename Ctx::Object& w,
                                                                  const std::vector<typename Ctx::Morphism>& targets) {
  using Morphism = typename Ctx::Morphism;
  std::vector<Morphism> out;
  if (targets.empty()) return out;
  const auto basis = ctx.hom_basis(w, p.src());
  const std::size_t rows = ctx.flat_size(w, p.dst());
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(ctx.flatten(ctx.compose(p, b)));
  std::vector<Vec> rhs;
  for (const auto& t : targets) rhs.push_back(ctx.flatten(t));
  const Mat a = Mat::from_columns(ctx.field(), rows, cols);
  const Mat b = Mat::from_columns(ctx.field(), rows, rhs);
  const auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  const PrimeField fld = ctx.field();
  for (std::size_t k = 0; k < targets.size(); ++k) {
    Vec v(ctx.flat_size(w, p.src()), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Elem c = (*x)(j, k);
      if (!c) continue;
      const Vec bv = ctx.flatten(basis[j]);
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = fld.add(v[t], fld.mul(c, bv[t]));
    }
    out.push_back(ctx.unflatten(w, p.src(), v));
  }
  return out;
}

/// True iff p: r -> x has a section (x is a summand of r along p).
template <FrobeniusContext Ctx>
bool is_split_epi(const Ctx& ctx, const typename Ctx::Morphism& p) {
  if (!ctx.is_epi(p)) return false;
  return factor_through(ctx, p, p.dst(), {ctx.identity(p.dst())}).has_value();
}

}  // namespace relstab
