#include "relstab/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "relstab/error.hpp"

namespace relstab {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<std::size_t> closure(std::size_t n, const std::vector<std::size_t>& table,
                                 const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : gens) {
      const std::size_t h = table[out[k] * n + s];
      if (!seen[h]) {
        seen[h] = true;
        out.push_back(h);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CayleyReport check_cayley(std::size_t n, const std::vector<std::size_t>& table) {
  CayleyReport rep;
  auto fail = [&](std::string w) {
    rep.ok = false;
    rep.witness = std::move(w);
    return rep;
  };
  if (n == 0) return fail("empty group");
  if (table.size() != n * n) return fail("table has " + std::to_string(table.size()) + " entries");
  for (auto x : table)
    if (x >= n) return fail("entry " + std::to_string(x) + " out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (table[a] != a || table[a * n] != a) return fail("identity fails at " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table[a * n + b] == 0 && table[b * n + a] == 0;
    if (!has_inverse) return fail("no two-sided inverse for " + std::to_string(a));
  }
  if (n > 64) return rep;  // associativity is checked exhaustively only up to order 64
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t ab_c = table[table[a * n + b] * n + c];
        const std::size_t a_bc = table[a * n + table[b * n + c]];
        if (ab_c != a_bc) return fail("associativity fails at " + triple(a, b, c));
      }
  return rep;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<std::size_t> table,
                                    std::vector<std::size_t> generators, std::string name) {
  const CayleyReport rep = check_cayley(order, table);
  if (!rep.ok) throw Error(ErrorKind::ValidationFailure, name + ": " + rep.witness);
  for (auto s : generators)
    if (s >= order) throw Error(ErrorKind::ValidationFailure, name + ": generator out of range");
  if (closure(order, table, generators).size() != order)
    throw Error(ErrorKind::ValidationFailure, name + ": generators do not generate the group");
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.generators_ = std::move(generators);
  g.name_ = std::move(name);
  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g.mul(a, b) == 0) g.inverse_[a] = b;
  return g;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

Permutation FiniteGroup::left_regular(std::size_t g) const {
  Permutation perm(order_);
  for (std::size_t h = 0; h < order_; ++h) perm[h] = mul(g, h);
  return perm;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ValidationFailure, "cyclic(0)");
  std::vector<std::size_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(n, std::move(t), std::move(gens), "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::ValidationFailure, "dihedral(0)");
  const std::size_t order = 2 * n;
  std::vector<std::size_t> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x * order + y] = rot + n * ((b + d) % 2);
    }
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return FiniteGroup::from_table(order, std::move(t), std::move(gens), "D" + std::to_string(order));
}

FiniteGroup klein_four() {
  std::vector<std::size_t> t(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) t[x * 4 + y] = x ^ y;
  return FiniteGroup::from_table(4, std::move(t), {1, 2}, "V4");
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = g1.mul(x % n1, y % n1) + n1 * g2.mul(x / n1, y / n1);
  std::vector<std::size_t> gens;
  for (auto s : g1.generators()) gens.push_back(s);
  for (auto s : g2.generators()) gens.push_back(n1 * s);
  return FiniteGroup::from_table(n, std::move(t), std::move(gens), g1.name() + "x" + g2.name());
}

FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::size_t bound) {
  const std::size_t m = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != m) throw Error(ErrorKind::InvalidPermutation, "permutations act on different point sets");
    std::vector<bool> hit(m, false);
    for (auto x : g) {
      if (x >= m || hit[x]) throw Error(ErrorKind::InvalidPermutation, "not a bijection of {0.." + std::to_string(m) + ")");
      hit[x] = true;
    }
  }
  Permutation id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  // composition convention: (a*b)(x) = a(b(x))
  auto compose = [m](const Permutation& a, const Permutation& b) {
    Permutation c(m);
    for (std::size_t x = 0; x < m; ++x) c[x] = a[b[x]];
    return c;
  };
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& s : gens) {
      Permutation h = compose(elems[k], s);
      if (index.emplace(h, elems.size()).second) {
        elems.push_back(std::move(h));
        if (elems.size() > bound)
          throw Error(ErrorKind::ClosureBoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::size_t> gen_idx;
  for (const auto& s : gens) {
    const std::size_t i = index.at(s);
    if (i != 0 && std::find(gen_idx.begin(), gen_idx.end(), i) == gen_idx.end()) gen_idx.push_back(i);
  }
  return FiniteGroup::from_table(n, std::move(t), std::move(gen_idx), "Perm" + std::to_string(n));
}

std::pair<std::size_t, std::size_t> SubgroupEmbedding::decompose(std::size_t g) const {
  const std::size_t i = coset_of[g];
  const std::size_t h = parent->mul(parent->inverse(transversal[i]), g);
  return {i, *sub_index[h]};
}

SubgroupEmbedding subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& elems) {
  const std::size_t n = g->order();
  for (auto e : elems)
    if (e >= n) throw Error(ErrorKind::ValidationFailure, "subgroup element " + std::to_string(e) + " out of range");
  SubgroupEmbedding emb;
  emb.parent = g;
  emb.inject = closure(n, g->table(), elems);
  const std::size_t m = emb.inject.size();
  emb.sub_index.assign(n, std::nullopt);
  for (std::size_t k = 0; k < m; ++k) emb.sub_index[emb.inject[k]] = k;

  std::vector<std::size_t> sub_table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) sub_table[a * m + b] = *emb.sub_index[g->mul(emb.inject[a], emb.inject[b])];
  std::vector<std::size_t> sub_gens;
  for (auto e : elems) {
    const std::size_t s = *emb.sub_index[e];
    if (s != 0 && std::find(sub_gens.begin(), sub_gens.end(), s) == sub_gens.end()) sub_gens.push_back(s);
  }
  emb.sub = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(m, std::move(sub_table), std::move(sub_gens), g->name() + ".sub" + std::to_string(m)));

  emb.coset_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (emb.coset_of[x] != n) continue;
    const std::size_t c = emb.transversal.size();
    emb.transversal.push_back(x);
    for (auto h : emb.inject) emb.coset_of[g->mul(x, h)] = c;
  }
  return emb;
}

SubgroupEmbedding sylow_subgroup(const GroupPtr& g, unsigned p) {
  std::size_t target = 1;
  for (std::size_t n = g->order(); n % p == 0; n /= p) target *= p;
  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  std::vector<std::size_t> gens;
  std::size_t current = 1;
  // A proper p-subgroup is normalised by some p-element outside it, so
  // repeated passes always make progress until the order reaches |G|_p.
  for (bool grew = true; grew && current < target;) {
    grew = false;
    for (std::size_t x = 1; x < g->order() && current < target; ++x) {
      if (!is_p_power(g->element_order(x))) continue;
      auto trial = gens;
      trial.push_back(x);
      const std::size_t size = closure(g->order(), g->table(), trial).size();
      if (size > current && is_p_power(size)) {
        gens = std::move(trial);
        current = size;
        grew = true;
      }
    }
  }
  return subgroup_generated(g, gens);
}

}  // namespace relstab
