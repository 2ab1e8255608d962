#include "relstab/oracle.hpp"

#include <algorithm>

namespace relstab {

namespace {

std::size_t search_size(unsigned p, std::size_t entries, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) {
    total *= p;
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(p) + "^" + std::to_string(entries) + " candidates exceed " +
                                                 std::to_string(budget));
  }
  return total;
}

// Odometer over F_p^n; returns false after the last vector.
bool next_vector(Vec& v, unsigned p) {
  for (auto& e : v) {
    if (++e < p) return true;
    e = 0;
  }
  return false;
}

std::string dims_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

}  // namespace

Mat hom_span_bruteforce(const GModule& m, const GModule& n, std::size_t budget) {
  const std::size_t width = m.dim() * n.dim();
  search_size(m.field().p(), width, budget);
  EchelonBasis span(m.field(), width);
  Vec v(width, 0);
  Mat f(m.field(), n.dim(), m.dim());
  do {
    std::copy(v.begin(), v.end(), f.row(0).data());
    if (width && intertwines(m, n, f)) span.insert(v);
  } while (next_vector(v, m.field().p()));
  return span.to_mat();
}

Mat hom_span_bruteforce(const Complex& x, const Complex& y, std::size_t budget) {
  const std::size_t width = flat_size(x, y);
  search_size(x.field().p(), width, budget);
  EchelonBasis span(x.field(), width);
  if (!width) return span.to_mat();
  const DegreeRange r = joint_range(x, y);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) comps.emplace_back(x.field(), y.dim(i), x.dim(i));
  auto at = [&](int i) -> Mat {
    if (i < r.lo || i > r.hi) return Mat(x.field(), y.dim(i), x.dim(i));
    return comps[std::size_t(i - r.lo)];
  };
  Vec v(width, 0);
  do {
    std::size_t off = 0;
    for (auto& c : comps)
      for (std::size_t a = 0; a < c.rows(); ++a)
        for (std::size_t b = 0; b < c.cols(); ++b) c(a, b) = v[off++];
    bool chain = true;
    for (int i = r.lo; i <= r.hi + 1 && chain; ++i) chain = y.d(i) * at(i) == at(i - 1) * x.d(i);
    if (chain) span.insert(v);
  } while (next_vector(v, x.field().p()));
  return span.to_mat();
}

OracleReport hom_basis_oracle(const GModule& m, const GModule& n, std::size_t budget) {
  OracleReport rep;
  rep.name = "hom_basis_bruteforce";
  const Mat brute = hom_span_bruteforce(m, n, budget);
  std::vector<Vec> flats;
  for (const auto& h : hom_basis(m, n)) flats.push_back(h.mat().data());
  const Mat solver = row_space(m.field(), m.dim() * n.dim(), flats);
  rep.route_a = solver.to_string();
  rep.route_b = brute.to_string();
  rep.agree = solver == brute;
  rep.search_space = search_size(m.field().p(), m.dim() * n.dim(), budget);
  return rep;
}

OracleReport hom_basis_oracle(const Complex& x, const Complex& y, std::size_t budget) {
  OracleReport rep;
  rep.name = "hom_basis_bruteforce";
  const Mat brute = hom_span_bruteforce(x, y, budget);
  std::vector<Vec> flats;
  for (const auto& h : chain_hom_basis(x, y)) flats.push_back(flatten(h));
  const Mat solver = row_space(x.field(), flat_size(x, y), flats);
  rep.route_a = solver.to_string();
  rep.route_b = brute.to_string();
  rep.agree = solver == brute;
  rep.search_space = search_size(x.field().p(), flat_size(x, y), budget);
  return rep;
}

OracleReport homology_stablehom_oracle(const Complex& x, int from, int to) {
  const ComplexContext ctx(x.field());
  std::vector<std::size_t> stable, homology = x.homology_dims(from, to);
  for (int i = from; i <= to; ++i) stable.push_back(stable_hom(ctx, sphere(x.field(), i), x).quotient_dim());
  OracleReport rep;
  rep.name = "homology_stablehom";
  rep.route_a = dims_string(stable);
  rep.route_b = dims_string(homology);
  rep.agree = stable == homology;
  rep.search_space = std::size_t(to - from + 1);
  return rep;
}

}  // namespace relstab
