#include "relstab/precover.hpp"

namespace relstab {

std::vector<GModuleHom> projective_completion(const ModuleContext& ctx, const GModuleHom& eval) {
  const GModule& x = eval.dst();
  const FiniteGroup& G = *ctx.group();
  EchelonBasis image(ctx.field(), x.dim());
  for (std::size_t c = 0; c < eval.mat().cols(); ++c) image.insert(eval.mat().column(c));
  std::vector<GModuleHom> out;
  const GModule free = regular_module(ctx.group(), ctx.field());
  for (std::size_t j = 0; j < x.dim() && image.rank() < x.dim(); ++j) {
    Vec e(x.dim(), 0);
    e[j] = 1;
    if (image.contains(e)) continue;
    // kG -> x, g |-> g e_j
    Mat m(ctx.field(), x.dim(), G.order());
    for (std::size_t g = 0; g < G.order(); ++g) {
      const Vec col = x.action(g).column(j);
      for (std::size_t i = 0; i < x.dim(); ++i) m(i, g) = col[i];
      image.insert(col);
    }
    out.emplace_back(free, x, std::move(m));
  }
  return out;
}

std::vector<ChainMap> projective_completion(const ComplexContext& ctx, const ChainMap& eval) {
  const Complex& x = eval.dst();
  std::vector<ChainMap> out;
  if (x.is_zero()) return out;
  std::vector<EchelonBasis> image;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    EchelonBasis b(ctx.field(), x.dim(i));
    const Mat f = eval.at(i);
    for (std::size_t c = 0; c < f.cols(); ++c) b.insert(f.column(c));
    image.push_back(std::move(b));
  }
  // Top down: a disk D(i) -> x hitting v in degree i also hits d v below.
  for (int i = x.hi(); i >= x.lo(); --i) {
    EchelonBasis& img = image[std::size_t(i - x.lo())];
    for (std::size_t j = 0; j < x.dim(i) && img.rank() < x.dim(i); ++j) {
      Vec e(x.dim(i), 0);
      e[j] = 1;
      if (img.contains(e)) continue;
      img.insert(e);
      const Complex D = disk(ctx.field(), i);
      const Vec dv = x.d(i).column(j);
      if (i > x.lo()) image[std::size_t(i - 1 - x.lo())].insert(dv);
      const DegreeRange r = joint_range(D, x);
      std::vector<Mat> comps;
      for (int t = r.lo; t <= r.hi; ++t) {
        Mat m(ctx.field(), x.dim(t), D.dim(t));
        if (t == i) m.set_block(0, 0, Mat::from_columns(ctx.field(), x.dim(i), {e}));
        if (t == i - 1 && x.dim(t) > 0) m.set_block(0, 0, Mat::from_columns(ctx.field(), x.dim(t), {dv}));
        comps.push_back(std::move(m));
      }
      out.emplace_back(D, x, std::move(comps));
    }
  }
  return out;
}

SubgroupInducedSystem::SubgroupInducedSystem(ModuleContext ctx, SubgroupEmbedding emb)
    : PrecoverSystem<ModuleContext>(std::move(ctx)), emb_(std::move(emb)) {}

std::string SubgroupInducedSystem::describe() const {
  std::string s = "subgroup_induced{H=[";
  for (std::size_t k = 0; k < emb_.inject.size(); ++k) s += (k ? "," : "") + std::to_string(emb_.inject[k]);
  return s + "]}";
}

GModuleHom SubgroupInducedSystem::precover_of(const GModule& x) const { return counit_hom(x, emb_); }

std::vector<GModule> SubgroupInducedSystem::generators() const {
  const PrimeField f = context().field();
  std::vector<GModule> sub_mods;
  for (const auto& m : named_module_battery(emb_.sub, f)) {
    if (sub_mods.size() > 0 && is_projective(m)) continue;
    bool dup = false;
    for (const auto& s : sub_mods) dup = dup || s == m;
    if (!dup) sub_mods.push_back(m);
  }
  std::vector<GModule> out;
  for (const auto& m : sub_mods) out.push_back(induce_module(emb_, m).relabeled("Ind(" + m.label() + ")"));
  return out;
}

GModule SubgroupInducedSystem::sample_member(SplitMix64& rng) const {
  const ModuleContext sub(emb_.sub, context().field());
  const GModule m = sub.random_object(rng);
  return induce_module(emb_, m).relabeled("Ind(" + m.label() + ")");
}

ChainMap TruncationSystem::precover_of(const Complex& x) const {
  if (cutoff_ == 0) return nonnegative_truncation(x).map;
  // x[-c] has its degree-c part in degree 0.
  const auto w = nonnegative_truncation(shift(x, -cutoff_));
  const ChainMap back = shift(w.map, cutoff_);
  return ChainMap(back.src(), x, back.components());
}

std::vector<Complex> TruncationSystem::generators() const {
  const PrimeField f = context().field();
  return {sphere(f, cutoff_), disk(f, cutoff_ + 1)};
}

Complex TruncationSystem::sample_member(SplitMix64& rng) const {
  return random_complex(context().field(), cutoff_, cutoff_ + 2, 2, rng).relabeled("sample");
}

}  // namespace relstab
