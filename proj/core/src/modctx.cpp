#include "relstab/modctx.hpp"

#include <algorithm>
#include <set>

#include "relstab/error.hpp"
#include "relstab/random.hpp"

namespace relstab {

namespace {

void require_compatible(const GModule& a, const GModule& b, const char* what) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, what);
  if (a.group_ptr() != b.group_ptr() && a.group().table() != b.group().table())
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": modules over different groups");
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

GModuleHom hom_from_flat(const GModule& src, const GModule& dst, const Vec& flat) {
  Mat m(src.field(), dst.dim(), src.dim());
  std::copy(flat.begin(), flat.end(), m.row(0).data());
  return GModuleHom(src, dst, std::move(m));
}

std::vector<GModuleHom> canonical_basis(const GModule& m, const GModule& n, const std::vector<Vec>& flats) {
  const Mat rs = row_space(m.field(), m.dim() * n.dim(), flats);
  std::vector<GModuleHom> out;
  out.reserve(rs.rows());
  for (std::size_t r = 0; r < rs.rows(); ++r) {
    Vec v(rs.row(r).begin(), rs.row(r).end());
    out.push_back(hom_from_flat(m, n, v));
  }
  return out;
}


}  // namespace

GModule GModule::from_table(GroupPtr group, PrimeField field, std::size_t dim, std::vector<Mat> action,
                            std::string label) {
  GModule m;
  m.data_ = std::make_shared<const Data>(Data{std::move(group), field, dim, std::move(action), std::move(label)});
  return m;
}

GModule GModule::relabeled(std::string label) const {
  return from_table(data_->group, data_->field, data_->dim, data_->action, std::move(label));
}

bool operator==(const GModule& a, const GModule& b) {
  if (a.data_ == b.data_) return true;
  if (!a.valid() || !b.valid()) return false;
  return a.field() == b.field() && a.dim() == b.dim() && a.group().table() == b.group().table() &&
         a.actions() == b.actions();
}

bool intertwines(const GModule& src, const GModule& dst, const Mat& mat) {
  if (mat.rows() != dst.dim() || mat.cols() != src.dim()) return false;
  for (auto s : src.group().generators())
    if (!(mat * src.action(s) == dst.action(s) * mat)) return false;
  return true;
}

GModuleHom::GModuleHom(GModule src, GModule dst, Mat mat) : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
  if (mat_.rows() != dst_.dim() || mat_.cols() != src_.dim())
    throw Error(ErrorKind::DimensionMismatch, "hom matrix is " + std::to_string(mat_.rows()) + "x" +
                                                  std::to_string(mat_.cols()) + ", expected " +
                                                  std::to_string(dst_.dim()) + "x" + std::to_string(src_.dim()));
  if (!intertwines(src_, dst_, mat_))
    throw Error(ErrorKind::NotIntertwining, src_.label() + " -> " + dst_.label());
}

GModuleHom compose(const GModuleHom& g, const GModuleHom& f) {
  if (f.dst().dim() != g.src().dim()) throw Error(ErrorKind::DimensionMismatch, "compose: dst/src dims differ");
  return GModuleHom(f.src(), g.dst(), g.mat() * f.mat());
}

GModuleHom identity_hom(const GModule& m) { return GModuleHom(m, m, Mat::identity(m.field(), m.dim())); }

GModuleHom zero_hom(const GModule& src, const GModule& dst) {
  return GModuleHom(src, dst, Mat(src.field(), dst.dim(), src.dim()));
}

GModule module_from_action(GroupPtr group, PrimeField field, const std::vector<Mat>& generator_images,
                           std::string label) {
  const auto& gens = group->generators();
  if (generator_images.size() != gens.size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(gens.size()) + " generator images, got " +
                                                  std::to_string(generator_images.size()));
  std::size_t dim = 0;
  if (!generator_images.empty()) dim = generator_images.front().rows();
  for (const auto& m : generator_images) {
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "generator images must be square of equal size");
    if (!(m.field() == field)) throw Error(ErrorKind::FieldMismatch, "generator image over wrong field");
    if (rank(m) != dim) throw Error(ErrorKind::SingularMatrix, label + ": generator image is not invertible");
  }
  const std::size_t n = group->order();
  std::vector<Mat> action(n);
  std::vector<bool> seen(n, false);
  action[0] = Mat::identity(field, dim);
  seen[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t g = queue[k];
    for (std::size_t si = 0; si < gens.size(); ++si) {
      const std::size_t h = group->mul(g, gens[si]);
      Mat image = action[g] * generator_images[si];
      if (!seen[h]) {
        seen[h] = true;
        action[h] = std::move(image);
        queue.push_back(h);
      } else if (!(action[h] == image)) {
        throw Error(ErrorKind::RelationViolation,
                    label + ": element " + std::to_string(g) + " times generator " + std::to_string(gens[si]) +
                        " evaluates inconsistently");
      }
    }
  }
  return GModule::from_table(std::move(group), field, dim, std::move(action), std::move(label));
}

GModule trivial_module(GroupPtr group, PrimeField field) {
  std::vector<Mat> action(group->order(), Mat::identity(field, 1));
  return GModule::from_table(std::move(group), field, 1, std::move(action), "k");
}

GModule regular_module(GroupPtr group, PrimeField field) {
  const std::size_t n = group->order();
  std::vector<Mat> action;
  action.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    Mat m(field, n, n);
    for (std::size_t h = 0; h < n; ++h) m(group->mul(g, h), h) = 1;
    action.push_back(std::move(m));
  }
  return GModule::from_table(std::move(group), field, n, std::move(action), "kG");
}

bool is_cyclic_presentation(const FiniteGroup& g) {
  return g.generators().size() == 1 && g.element_order(g.generators()[0]) == g.order();
}

GModule jordan_module(GroupPtr group, PrimeField field, std::size_t s) {
  if (!is_cyclic_presentation(*group))
    throw Error(ErrorKind::KindUnavailable, "jordan modules need a cyclic group with one generator");
  std::size_t ppart = 1;
  for (std::size_t n = group->order(); n % field.p() == 0; n /= field.p()) ppart *= field.p();
  if (ppart == 1) throw Error(ErrorKind::KindUnavailable, "p does not divide |G|");
  if (s < 1 || s > ppart)
    throw Error(ErrorKind::KindUnavailable, "jordan size " + std::to_string(s) + " outside [1, " + std::to_string(ppart) + "]");
  Mat g = Mat::identity(field, s);
  for (std::size_t i = 0; i + 1 < s; ++i) g(i + 1, i) = 1;
  return module_from_action(std::move(group), field, {g}, "J" + std::to_string(s));
}

GModule coset_permutation_module(const SubgroupEmbedding& emb, PrimeField field) {
  const auto& G = *emb.parent;
  const std::size_t idx = emb.index();
  std::vector<Mat> action;
  action.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    Mat m(field, idx, idx);
    for (std::size_t i = 0; i < idx; ++i) m(emb.coset_of[G.mul(g, emb.transversal[i])], i) = 1;
    action.push_back(std::move(m));
  }
  return GModule::from_table(emb.parent, field, idx, std::move(action), "k[G/H" + std::to_string(emb.sub->order()) + "]");
}

GModule restrict_module(const GModule& m, const SubgroupEmbedding& emb) {
  if (m.group().table() != emb.parent->table()) throw Error(ErrorKind::DimensionMismatch, "restrict: module is not over the parent group");
  std::vector<Mat> action;
  action.reserve(emb.inject.size());
  for (auto g : emb.inject) action.push_back(m.action(g));
  return GModule::from_table(emb.sub, m.field(), m.dim(), std::move(action), "Res(" + m.label() + ")");
}

GModule induce_module(const SubgroupEmbedding& emb, const GModule& n) {
  if (n.group().table() != emb.sub->table()) throw Error(ErrorKind::DimensionMismatch, "induce: module is not over the subgroup");
  const auto& G = *emb.parent;
  const std::size_t idx = emb.index(), d = n.dim();
  std::vector<Mat> action;
  action.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    Mat m(n.field(), idx * d, idx * d);
    for (std::size_t i = 0; i < idx; ++i) {
      // g t_i = t_{i'} h
      const auto [ip, h] = emb.decompose(G.mul(g, emb.transversal[i]));
      m.set_block(ip * d, i * d, n.action(h));
    }
    action.push_back(std::move(m));
  }
  return GModule::from_table(emb.parent, n.field(), idx * d, std::move(action), "Ind(" + n.label() + ")");
}

GModuleHom counit_hom(const GModule& m, const SubgroupEmbedding& emb) {
  const GModule src = induce_module(emb, restrict_module(m, emb));
  const std::size_t d = m.dim();
  Mat mat(m.field(), d, emb.index() * d);
  for (std::size_t i = 0; i < emb.index(); ++i) mat.set_block(0, i * d, m.action(emb.transversal[i]));
  return GModuleHom(src, m, std::move(mat));
}

GModule free_module_on(const GModule& m) {
  const auto emb = subgroup_generated(m.group_ptr(), {});
  return induce_module(emb, restrict_module(m, emb)).relabeled("kG*" + m.label());
}

GModuleHom injective_embedding(const GModule& m) {
  const GModule target = free_module_on(m);
  const auto& G = m.group();
  const std::size_t d = m.dim();
  Mat mat(m.field(), G.order() * d, d);
  for (std::size_t g = 0; g < G.order(); ++g) mat.set_block(g * d, 0, m.action(G.inverse(g)));
  return GModuleHom(m, target, std::move(mat));
}

GModuleHom projective_cover(const GModule& m) {
  const GModule source = free_module_on(m);
  const auto& G = m.group();
  const std::size_t d = m.dim();
  Mat mat(m.field(), d, G.order() * d);
  for (std::size_t g = 0; g < G.order(); ++g) mat.set_block(0, g * d, m.action(g));
  return GModuleHom(source, m, std::move(mat));
}

std::vector<GModuleHom> hom_basis(const GModule& m, const GModule& n) {
  require_compatible(m, n, "hom_basis");
  const PrimeField f = m.field();
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return {};
  const auto& gens = m.group().generators();

  // Spinning basis u_t of m: each node is seed v_k or A_s u_t'. A hom is
  // fixed by the images w_k of the seeds, and phi(u_t) = W_t w_seed(t).
  EchelonBasis span(f, a);
  std::vector<Vec> node_vec;
  std::vector<std::size_t> node_seed;
  std::vector<Mat> node_word;
  std::vector<std::pair<std::size_t, std::size_t>> relations;  // (node, generator slot)
  std::size_t seeds = 0;
  for (std::size_t j = 0; j < a && span.rank() < a; ++j) {
    Vec e = unit_vector(a, j);
    if (!span.insert(e)) continue;
    const std::size_t first = node_vec.size();
    node_vec.push_back(std::move(e));
    node_seed.push_back(seeds++);
    node_word.push_back(Mat::identity(f, b));
    for (std::size_t t = first; t < node_vec.size(); ++t)
      for (std::size_t si = 0; si < gens.size(); ++si) {
        Vec w = mat_vec(m.action(gens[si]), node_vec[t]);
        if (span.insert(w)) {
          node_vec.push_back(std::move(w));
          node_seed.push_back(node_seed[t]);
          node_word.push_back(n.action(gens[si]) * node_word[t]);
        } else {
          relations.emplace_back(t, si);
        }
      }
  }
  const Mat basis_cols = Mat::from_columns(f, a, node_vec);
  const Mat to_node_coords = *inverse(basis_cols);

  const std::size_t unknowns = seeds * b;
  Mat eqs(f, relations.size() * b, unknowns);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto [t, si] = relations[r];
    const Vec c = mat_vec(to_node_coords, mat_vec(m.action(gens[si]), node_vec[t]));
    Mat lhs = n.action(gens[si]) * node_word[t];
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < b; ++k) {
        auto& e = eqs(r * b + i, node_seed[t] * b + k);
        e = f.add(e, lhs(i, k));
      }
    for (std::size_t tau = 0; tau < c.size(); ++tau) {
      if (!c[tau]) continue;
      const Mat& w = node_word[tau];
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t k = 0; k < b; ++k) {
          auto& e = eqs(r * b + i, node_seed[tau] * b + k);
          e = f.sub(e, f.mul(c[tau], w(i, k)));
        }
    }
  }
  const Mat sols = kernel_basis(eqs);

  std::vector<Vec> flats;
  flats.reserve(sols.cols());
  for (std::size_t s = 0; s < sols.cols(); ++s) {
    Mat phi(f, b, a);  // columns phi(u_t)
    for (std::size_t t = 0; t < a; ++t) {
      Vec w(b);
      for (std::size_t k = 0; k < b; ++k) w[k] = sols(node_seed[t] * b + k, s);
      const Vec img = mat_vec(node_word[t], w);
      for (std::size_t i = 0; i < b; ++i) phi(i, t) = img[i];
    }
    const Mat F = phi * to_node_coords;
    flats.push_back(F.data());
  }
  return canonical_basis(m, n, flats);
}

std::vector<GModuleHom> hom_basis_system(const GModule& m, const GModule& n) {
  require_compatible(m, n, "hom_basis_system");
  const PrimeField f = m.field();
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return {};
  const auto& gens = m.group().generators();
  // unknown F(c, j) at index c * a + j; equation (B F - F A)(i, j) = 0
  Mat eqs(f, gens.size() * a * b, a * b);
  for (std::size_t si = 0; si < gens.size(); ++si) {
    const Mat& A = m.action(gens[si]);
    const Mat& B = n.action(gens[si]);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) {
        const std::size_t row = (si * b + i) * a + j;
        for (std::size_t c = 0; c < b; ++c) eqs(row, c * a + j) = f.add(eqs(row, c * a + j), B(i, c));
        for (std::size_t c = 0; c < a; ++c) eqs(row, i * a + c) = f.sub(eqs(row, i * a + c), A(c, j));
      }
  }
  const Mat sols = kernel_basis(eqs);
  std::vector<Vec> flats;
  for (std::size_t s = 0; s < sols.cols(); ++s) flats.push_back(sols.column(s));
  return canonical_basis(m, n, flats);
}

namespace {

// Entry (i, j) of sum_g rho_n(g) E_xy rho_m(g^-1).
Elem trace_entry(const GModule& m, const GModule& n, std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
  const auto& G = m.group();
  std::uint32_t acc = 0;
  for (std::size_t g = 0; g < G.order(); ++g) acc += std::uint32_t(n.action(g)(i, x)) * m.action(G.inverse(g))(y, j);
  return Elem(acc % m.field().p());
}

}  // namespace

std::size_t projective_factoring_count(const GModule& m, const GModule& n) { return m.dim() * n.dim(); }

Vec projective_factoring_vector(const GModule& m, const GModule& n, std::size_t k) {
  require_compatible(m, n, "projective_factoring_vector");
  const auto& G = m.group();
  const std::size_t a = m.dim(), b = n.dim();
  const std::size_t x = k / a, y = k % a;
  std::vector<std::uint32_t> acc(a * b, 0);
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Mat& rn = n.action(g);
    const Mat& rm = m.action(G.inverse(g));
    for (std::size_t i = 0; i < b; ++i) {
      const std::uint32_t u = rn(i, x);
      if (!u) continue;
      for (std::size_t j = 0; j < a; ++j) acc[i * a + j] += u * rm(y, j);
    }
  }
  Vec v(a * b);
  for (std::size_t t = 0; t < v.size(); ++t) v[t] = Elem(acc[t] % m.field().p());
  return v;
}

std::vector<Vec> projective_factoring_span(const GModule& m, const GModule& n) {
  std::vector<Vec> out;
  const std::size_t count = projective_factoring_count(m, n);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(projective_factoring_vector(m, n, k));
  return out;
}

std::vector<Vec> projective_factoring_span_at(const GModule& m, const GModule& n,
                                              const std::vector<std::size_t>& positions) {
  require_compatible(m, n, "projective_factoring_span_at");
  const std::size_t a = m.dim();
  std::vector<Vec> out;
  out.reserve(projective_factoring_count(m, n));
  for (std::size_t k = 0; k < projective_factoring_count(m, n); ++k) {
    Vec v(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t)
      v[t] = trace_entry(m, n, k / a, k % a, positions[t] / a, positions[t] % a);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_projective(const GModule& m) {
  if (m.dim() == 0) return true;
  const auto sylow = sylow_subgroup(m.group_ptr(), m.field().p());
  Mat norm(m.field(), m.dim(), m.dim());
  for (auto g : sylow.inject) norm = norm + m.action(g);
  return rank(norm) * sylow.inject.size() == m.dim();
}

GModule strip_projective_summands(const GModule& m) {
  const PrimeField f = m.field();
  const auto& G = m.group();
  SplitMix64 rng(0x51A1B5EEDULL + m.dim());
  GModule cur = m;
  for (bool found = true; found && cur.dim() > 0;) {
    found = false;
    const std::size_t a = cur.dim();
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      Mat e(f, a, a);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) e(i, j) = Elem(rng.below(f.p()));
      Mat phi(f, a, a);
      for (std::size_t g = 0; g < G.order(); ++g) phi = phi + cur.action(g) * e * cur.action(G.inverse(g));
      for (std::size_t n = 1; n < a; n *= 2) phi = phi * phi;
      if (phi.is_zero()) continue;
      cur = kernel_with_inclusion(GModuleHom(cur, cur, phi)).object;
      found = true;
    }
  }
  return cur.dim() == m.dim() ? m : cur.relabeled(m.label());
}

namespace {

GModule module_on_subspace(const GModule& m, const Mat& basis, const std::vector<std::size_t>& coord_rows,
                           std::string label) {
  // basis has an identity block on coord_rows, so coordinates are read off there.
  std::vector<Mat> gens;
  for (auto s : m.group().generators()) {
    const Mat image = m.action(s) * basis;
    Mat coords = image.select_rows(coord_rows);
    if (!(basis * coords == image))
      throw Error(ErrorKind::WellDefinednessFailure, label + ": subspace is not invariant");
    gens.push_back(std::move(coords));
  }
  return module_from_action(m.group_ptr(), m.field(), gens, std::move(label));
}

}  // namespace

ObjectWithMap<GModule, GModuleHom> kernel_with_inclusion(const GModuleHom& f) {
  const NullSpace ns = nullspace(f.mat());
  GModule k = module_on_subspace(f.src(), ns.basis, ns.free_cols, "ker");
  return {k, GModuleHom(k, f.src(), ns.basis)};
}

ObjectWithMap<GModule, GModuleHom> cokernel_with_projection(const GModuleHom& f) {
  const GModule& n = f.dst();
  const NullSpace ann = nullspace(f.mat().transpose());
  const Mat q = ann.basis.transpose();  // rows span the annihilator of the image
  std::vector<Mat> gens;
  for (auto s : n.group().generators()) {
    const Mat qr = q * n.action(s);
    Mat a = qr.select_cols(ann.free_cols);
    if (!(a * q == qr)) throw Error(ErrorKind::WellDefinednessFailure, "coker: image is not invariant");
    gens.push_back(std::move(a));
  }
  GModule quotient = module_from_action(n.group_ptr(), n.field(), gens, "coker");
  return {quotient, GModuleHom(n, quotient, q)};
}

ObjectWithMap<GModule, GModuleHom> submodule_generated(const GModule& m, const std::vector<Vec>& vectors) {
  EchelonBasis span(m.field(), m.dim());
  std::vector<Vec> frontier;
  for (const auto& v : vectors)
    if (span.insert(v)) frontier.push_back(v);
  const auto& gens = m.group().generators();
  for (std::size_t k = 0; k < frontier.size(); ++k)
    for (auto s : gens) {
      Vec w = mat_vec(m.action(s), frontier[k]);
      if (span.insert(w)) frontier.push_back(std::move(w));
    }
  const Mat basis = span.to_mat().transpose();
  GModule sub = module_on_subspace(m, basis, span.sorted_pivots(), "sub");
  return {sub, GModuleHom(sub, m, basis)};
}

DirectSum<GModule, GModuleHom> direct_sum_modules(const std::vector<GModule>& parts, PrimeField field, GroupPtr group) {
  std::size_t total = 0;
  std::string label;
  for (const auto& p : parts) {
    if (!(p.field() == field)) throw Error(ErrorKind::FieldMismatch, "direct sum");
    total += p.dim();
    label += (label.empty() ? "" : "+") + p.label();
  }
  if (parts.size() == 1) {
    return {parts[0], {identity_hom(parts[0])}, {identity_hom(parts[0])}};
  }
  std::vector<Mat> action;
  action.reserve(group->order());
  for (std::size_t g = 0; g < group->order(); ++g) {
    Mat m(field, total, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
      m.set_block(off, off, p.action(g));
      off += p.dim();
    }
    action.push_back(std::move(m));
  }
  DirectSum<GModule, GModuleHom> out;
  out.object = GModule::from_table(group, field, total, std::move(action), label.empty() ? "0" : "(" + label + ")");
  std::size_t off = 0;
  for (const auto& p : parts) {
    Mat inj(field, total, p.dim()), proj(field, p.dim(), total);
    for (std::size_t i = 0; i < p.dim(); ++i) {
      inj(off + i, i) = 1;
      proj(i, off + i) = 1;
    }
    out.injections.emplace_back(p, out.object, std::move(inj));
    out.projections.emplace_back(out.object, p, std::move(proj));
    off += p.dim();
  }
  return out;
}

std::vector<GModule> named_module_battery(const GroupPtr& group, PrimeField field) {
  std::vector<GModule> out{trivial_module(group, field), regular_module(group, field)};
  if (is_cyclic_presentation(*group) && group->order() % field.p() == 0) {
    std::size_t ppart = 1;
    for (std::size_t n = group->order(); n % field.p() == 0; n /= field.p()) ppart *= field.p();
    for (std::size_t s = 1; s <= ppart; ++s) out.push_back(jordan_module(group, field, s));
  }
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 1; x < group->order(); ++x) {
    auto emb = subgroup_generated(group, {x});
    if (emb.inject.size() == group->order() || !seen.insert(emb.inject).second) continue;
    out.push_back(coset_permutation_module(emb, field));
  }
  return out;
}

GModule random_module(GroupPtr group, PrimeField field, const ModuleRecipe& recipe, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::string tag = "#" + std::to_string(seed);
  if (recipe.kind == ModuleRecipe::Kind::SumOfNamed) {
    const auto battery = named_module_battery(group, field);
    std::vector<GModule> parts;
    for (std::size_t i = 0; i < recipe.rank; ++i) parts.push_back(battery[rng.below(battery.size())]);
    return direct_sum_modules(parts, field, group).object;
  }
  std::vector<GModule> copies(recipe.rank, regular_module(group, field));
  const GModule free = direct_sum_modules(copies, field, group).object;
  std::vector<Vec> vectors;
  while (vectors.size() < recipe.vectors && free.dim() > 0) {
    Vec v(free.dim());
    for (auto& x : v) x = Elem(rng.below(field.p()));
    if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; })) vectors.push_back(std::move(v));
  }
  auto sub = submodule_generated(free, vectors);
  if (recipe.kind == ModuleRecipe::Kind::SubmoduleOfFree) return sub.object.relabeled("Sub" + tag);
  return cokernel_with_projection(sub.map).object.relabeled("Quot" + tag);
}

}  // namespace relstab
