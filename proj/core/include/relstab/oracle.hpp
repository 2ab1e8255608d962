#pragma once

// Deliberately naive second routes for the hom, phom and stable-hom
// computations. Slow by design; used by the test suites and `relstab oracle`.

#include <string>
#include <vector>

#include "relstab/stable.hpp"

namespace relstab {

struct OracleReport {
  std::string name;
  std::string route_a;  // canonical form (RREF or dimension list)
  std::string route_b;
  bool agree = false;
  std::size_t search_space = 0;
};

inline constexpr std::size_t kBruteForceBudget = std::size_t{1} << 20;

/// Enumerates every matrix (every tuple of components) and keeps the
/// morphisms; returns the RREF of their span. BudgetExceeded if the search
/// space is larger than `budget`.
Mat hom_span_bruteforce(const GModule& m, const GModule& n, std::size_t budget = kBruteForceBudget);
Mat hom_span_bruteforce(const Complex& x, const Complex& y, std::size_t budget = kBruteForceBudget);

/// hom_basis against the brute-force span.
OracleReport hom_basis_oracle(const GModule& m, const GModule& n, std::size_t budget = kBruteForceBudget);
OracleReport hom_basis_oracle(const Complex& x, const Complex& y, std::size_t budget = kBruteForceBudget);

/// The maps factoring through a projective-injective, two ways: h o iota_m
/// for h: I(m) -> n, and pi_n o h for h: m -> P(n).
template <FrobeniusContext Ctx>
OracleReport phom_dual_route(const Ctx& ctx, const typename Ctx::Object& m, const typename Ctx::Object& n) {
  const std::size_t width = ctx.flat_size(m, n);
  const auto iota = ctx.injective_embedding(m);
  const auto pi = ctx.projective_cover(n);
  std::vector<Vec> a, b;
  for (const auto& h : ctx.hom_basis(iota.dst(), n)) a.push_back(ctx.flatten(ctx.compose(h, iota)));
  for (const auto& h : ctx.hom_basis(m, pi.src())) b.push_back(ctx.flatten(ctx.compose(pi, h)));
  OracleReport rep;
  rep.name = "phom_dual_route";
  const Mat ra = row_space(ctx.field(), width, a);
  const Mat rb = row_space(ctx.field(), width, b);
  rep.route_a = ra.to_string();
  rep.route_b = rb.to_string();
  rep.agree = ra == rb;
  rep.search_space = a.size() + b.size();
  return rep;
}

/// The primary phom subspace (relative traces, resp. d s + s d) against
/// route A of the dual-route oracle.
template <FrobeniusContext Ctx>
OracleReport phom_primary_vs_dual(const Ctx& ctx, const typename Ctx::Object& m, const typename Ctx::Object& n) {
  const std::size_t width = ctx.flat_size(m, n);
  std::vector<Vec> primary;
  for (std::size_t k = 0; k < ctx.phom_count(m, n); ++k) primary.push_back(ctx.phom_vector(m, n, k));
  const auto dual = phom_dual_route(ctx, m, n);
  OracleReport rep;
  rep.name = "phom_primary_vs_dual";
  rep.route_a = row_space(ctx.field(), width, primary).to_string();
  rep.route_b = dual.route_a;
  rep.agree = rep.route_a == rep.route_b && dual.agree;
  rep.search_space = primary.size() + dual.search_space;
  return rep;
}

/// dim (S(i), x)_T against dim H_i(x) for i in [from, to].
OracleReport homology_stablehom_oracle(const Complex& x, int from, int to);

}  // namespace relstab
