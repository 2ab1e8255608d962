#include "relstab/contexts.hpp"

#include "relstab/error.hpp"

namespace relstab {

namespace {

// Right inverse of a surjective matrix, as a linear map.
std::optional<Mat> right_inverse(const Mat& epi) {
  return solve_linear(epi, Mat::identity(epi.field(), epi.rows()));
}

}  // namespace

GModuleHom ModuleContext::add(const GModuleHom& a, const GModuleHom& b) const {
  return GModuleHom(a.src(), a.dst(), a.mat() + b.mat());
}

GModuleHom ModuleContext::scale(const GModuleHom& f, Elem c) const { return GModuleHom(f.src(), f.dst(), f.mat().scaled(c)); }

GModuleHom ModuleContext::unflatten(const GModule& a, const GModule& b, const Vec& v) const {
  if (v.size() != a.dim() * b.dim()) throw Error(ErrorKind::DimensionMismatch, "unflatten: wrong length");
  Mat m(field_, b.dim(), a.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = v[i * a.dim() + j];
  return GModuleHom(a, b, std::move(m));
}

std::optional<GModuleHom> ModuleContext::descend(const GModuleHom& epi, const GModuleHom& h) const {
  const auto r = right_inverse(epi.mat());
  if (!r) return std::nullopt;
  Mat u = h.mat() * *r;
  if (!(u * epi.mat() == h.mat())) return std::nullopt;
  return GModuleHom(epi.dst(), h.dst(), std::move(u));
}

GModule ModuleContext::random_object(SplitMix64& rng) const {
  ModuleRecipe recipe;
  recipe.kind = static_cast<ModuleRecipe::Kind>(rng.below(3));
  recipe.rank = std::size_t(rng.between(1, 2));
  recipe.vectors = std::size_t(rng.between(1, 2));
  return random_module(group_, field_, recipe, rng.next());
}

std::vector<Vec> ComplexContext::phom_span_at(const Complex& a, const Complex& b,
                                              const std::vector<std::size_t>& pos) const {
  std::vector<Vec> out;
  const std::size_t n = homotopy_span_count(a, b);
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec full = homotopy_span_vector(a, b, k);
    Vec v(pos.size());
    for (std::size_t t = 0; t < pos.size(); ++t) v[t] = full[pos[t]];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<ChainMap> ComplexContext::descend(const ChainMap& epi, const ChainMap& h) const {
  const Complex& c = epi.dst();
  const DegreeRange r = joint_range(c, h.dst());
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    const auto inv = right_inverse(epi.at(i));
    if (!inv) return std::nullopt;
    Mat u = h.at(i) * *inv;
    if (!(u * epi.at(i) == h.at(i))) return std::nullopt;
    comps.push_back(std::move(u));
  }
  return ChainMap(c, h.dst(), std::move(comps));
}

bool ComplexContext::is_epi(const ChainMap& f) const {
  const DegreeRange r = f.range();
  for (int i = r.lo; i <= r.hi; ++i)
    if (rank(f.at(i)) != f.dst().dim(i)) return false;
  return true;
}

Complex ComplexContext::random_object(SplitMix64& rng) const {
  const int lo = int(rng.between(-2, 1));
  const int hi = int(rng.between(lo, 2));
  return random_complex(field_, lo, hi, 2, rng);
}

}  // namespace relstab
