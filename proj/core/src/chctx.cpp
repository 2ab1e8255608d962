#include "relstab/chctx.hpp"

#include <algorithm>

#include "relstab/error.hpp"

namespace relstab {

namespace {

std::string deg(int i) { return std::to_string(i); }

Mat zero(PrimeField f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

}  // namespace

Complex Complex::make(PrimeField field, int lo, std::vector<std::size_t> dims, std::vector<Mat> diffs,
                      std::string label) {
  if (diffs.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "need one differential per degree");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : dims[k - 1];
    if (diffs[k].rows() != below || diffs[k].cols() != dims[k])
      throw Error(ErrorKind::DimensionMismatch, "d_" + deg(lo + int(k)) + " has shape " +
                                                    std::to_string(diffs[k].rows()) + "x" +
                                                    std::to_string(diffs[k].cols()) + ", expected " +
                                                    std::to_string(below) + "x" + std::to_string(dims[k]));
    if (!(diffs[k].field() == field)) throw Error(ErrorKind::FieldMismatch, "differential over wrong field");
  }
  for (std::size_t k = 1; k < dims.size(); ++k)
    if (!(diffs[k - 1] * diffs[k]).is_zero())
      throw Error(ErrorKind::SquareNonzero, "d_" + deg(lo + int(k) - 1) + " d_" + deg(lo + int(k)) + " != 0");
  // trim zero ends
  std::size_t first = 0, last = dims.size();
  while (first < last && dims[first] == 0) ++first;
  while (last > first && dims[last - 1] == 0) --last;
  Complex c(field);
  c.label_ = std::move(label);
  if (first == last) return c;
  c.lo_ = lo + int(first);
  const int hi = lo + int(last) - 1;
  if (c.lo_ < -kWindow || hi > kWindow)
    throw Error(ErrorKind::WindowExceeded, "support [" + deg(c.lo_) + "," + deg(hi) + "] leaves [-" + deg(kWindow) +
                                               "," + deg(kWindow) + "]");
  c.dims_.assign(dims.begin() + first, dims.begin() + last);
  c.diffs_.assign(diffs.begin() + first, diffs.begin() + last);
  c.diffs_[0] = zero(field, 0, c.dims_[0]);
  return c;
}

std::size_t Complex::dim(int i) const noexcept {
  if (i < lo_ || i > hi()) return 0;
  return dims_[std::size_t(i - lo_)];
}

std::size_t Complex::total_dim() const noexcept {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

Mat Complex::d(int i) const {
  if (i < lo_ || i > hi()) return zero(field_, dim(i - 1), dim(i));
  return diffs_[std::size_t(i - lo_)];
}

Complex Complex::relabeled(std::string label) const {
  Complex c = *this;
  c.label_ = std::move(label);
  return c;
}

std::vector<std::size_t> Complex::homology_dims(int from, int to) const {
  std::vector<std::size_t> out;
  for (int i = from; i <= to; ++i) out.push_back(dim(i) - rank(d(i)) - rank(d(i + 1)));
  return out;
}

bool Complex::is_acyclic() const {
  for (auto h : homology_dims(lo_, hi()))
    if (h) return false;
  return true;
}

DegreeRange joint_range(const Complex& a, const Complex& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return {b.lo(), b.hi()};
  if (b.is_zero()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

ChainMap::ChainMap(Complex src, Complex dst, std::vector<Mat> components)
    : src_(std::move(src)), dst_(std::move(dst)), range_(joint_range(src_, dst_)), comps_(std::move(components)) {
  if (!(src_.field() == dst_.field())) throw Error(ErrorKind::FieldMismatch, "chain map ends over different fields");
  if (comps_.size() != range_.size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(range_.size()) + " components");
  for (int i = range_.lo; i <= range_.hi; ++i) {
    const Mat& f = comps_[std::size_t(i - range_.lo)];
    if (f.rows() != dst_.dim(i) || f.cols() != src_.dim(i))
      throw Error(ErrorKind::DimensionMismatch, "component in degree " + deg(i) + " has the wrong shape");
  }
  for (int i = range_.lo; i <= range_.hi + 1; ++i)
    if (!(dst_.d(i) * at(i) == at(i - 1) * src_.d(i)))
      throw Error(ErrorKind::NotChainMap, "square at degree " + deg(i) + " does not commute");
}

Mat ChainMap::at(int i) const {
  if (i < range_.lo || i > range_.hi) return zero(src_.field(), dst_.dim(i), src_.dim(i));
  return comps_[std::size_t(i - range_.lo)];
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.dst() == g.src())) throw Error(ErrorKind::DimensionMismatch, "compose: middle complexes differ");
  const DegreeRange r = joint_range(f.src(), g.dst());
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) comps.push_back(g.at(i) * f.at(i));
  return ChainMap(f.src(), g.dst(), std::move(comps));
}

ChainMap identity_map(const Complex& x) {
  std::vector<Mat> comps;
  for (int i = x.lo(); i <= x.hi(); ++i) comps.push_back(Mat::identity(x.field(), x.dim(i)));
  return ChainMap(x, x, std::move(comps));
}

ChainMap zero_map(const Complex& src, const Complex& dst) {
  const DegreeRange r = joint_range(src, dst);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) comps.push_back(zero(src.field(), dst.dim(i), src.dim(i)));
  return ChainMap(src, dst, std::move(comps));
}

ChainMap add(const ChainMap& a, const ChainMap& b) {
  std::vector<Mat> comps;
  for (std::size_t k = 0; k < a.components().size(); ++k) comps.push_back(a.components()[k] + b.components()[k]);
  return ChainMap(a.src(), a.dst(), std::move(comps));
}

ChainMap scale(const ChainMap& a, Elem c) {
  std::vector<Mat> comps;
  for (const auto& m : a.components()) comps.push_back(m.scaled(c));
  return ChainMap(a.src(), a.dst(), std::move(comps));
}

std::size_t flat_size(const Complex& src, const Complex& dst) {
  const DegreeRange r = joint_range(src, dst);
  std::size_t n = 0;
  for (int i = r.lo; i <= r.hi; ++i) n += src.dim(i) * dst.dim(i);
  return n;
}

Vec flatten(const ChainMap& f) {
  Vec out;
  out.reserve(flat_size(f.src(), f.dst()));
  for (const auto& m : f.components()) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

ChainMap unflatten(const Complex& src, const Complex& dst, const Vec& v) {
  if (v.size() != flat_size(src, dst)) throw Error(ErrorKind::DimensionMismatch, "unflatten: wrong length");
  const DegreeRange r = joint_range(src, dst);
  std::vector<Mat> comps;
  std::size_t off = 0;
  for (int i = r.lo; i <= r.hi; ++i) {
    Mat m(src.field(), dst.dim(i), src.dim(i));
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = v[off++];
    comps.push_back(std::move(m));
  }
  return ChainMap(src, dst, std::move(comps));
}

Complex shift(const Complex& x, int k) {
  if (x.is_zero()) return x;
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  const bool negate = (k % 2) != 0;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    dims.push_back(x.dim(i));
    diffs.push_back(negate ? -x.d(i) : x.d(i));
  }
  return Complex::make(x.field(), x.lo() + k, std::move(dims), std::move(diffs), x.label() + "[" + deg(k) + "]");
}

ChainMap shift(const ChainMap& f, int k) {
  const Complex s = shift(f.src(), k), t = shift(f.dst(), k);
  const DegreeRange r = joint_range(s, t);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) comps.push_back(f.at(i - k));
  return ChainMap(s, t, std::move(comps));
}

Complex sphere(PrimeField field, int i) {
  return Complex::make(field, i, {1}, {zero(field, 0, 1)}, "S(" + deg(i) + ")");
}

Complex disk(PrimeField field, int i) {
  return Complex::make(field, i - 1, {1, 1}, {zero(field, 0, 1), Mat::identity(field, 1)}, "D(" + deg(i) + ")");
}

std::vector<ChainMap> chain_hom_basis(const Complex& x, const Complex& y) {
  const PrimeField f = x.field();
  const DegreeRange r = joint_range(x, y);
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (int i = r.lo; i <= r.hi; ++i) {
    offset.push_back(n);
    n += x.dim(i) * y.dim(i);
  }
  if (n == 0) return {};
  auto var = [&](int i, std::size_t a, std::size_t b) { return offset[std::size_t(i - r.lo)] + a * x.dim(i) + b; };
  // (d^y_i f_i - f_{i-1} d^x_i)(a, b) = 0 for a in y_{i-1}, b in x_i
  std::size_t neq = 0;
  for (int i = r.lo; i <= r.hi + 1; ++i) neq += y.dim(i - 1) * x.dim(i);
  Mat eqs(f, neq, n);
  std::size_t row = 0;
  for (int i = r.lo; i <= r.hi + 1; ++i) {
    const Mat dy = y.d(i), dx = x.d(i);
    for (std::size_t a = 0; a < y.dim(i - 1); ++a)
      for (std::size_t b = 0; b < x.dim(i); ++b, ++row) {
        for (std::size_t c = 0; c < y.dim(i); ++c)
          if (dy(a, c)) eqs(row, var(i, c, b)) = f.add(eqs(row, var(i, c, b)), dy(a, c));
        for (std::size_t c = 0; c < x.dim(i - 1); ++c)
          if (dx(c, b)) eqs(row, var(i - 1, a, c)) = f.sub(eqs(row, var(i - 1, a, c)), dx(c, b));
      }
  }
  const Mat sols = kernel_basis(eqs);
  std::vector<Vec> flats;
  for (std::size_t s = 0; s < sols.cols(); ++s) flats.push_back(sols.column(s));
  const Mat rs = row_space(f, n, flats);
  std::vector<ChainMap> out;
  for (std::size_t k = 0; k < rs.rows(); ++k) out.push_back(unflatten(x, y, Vec(rs.row(k).begin(), rs.row(k).end())));
  return out;
}

namespace {

struct HomotopySlot {
  int degree;  // s: x_degree -> y_{degree+1}
  std::size_t r, c;
};

HomotopySlot homotopy_slot(const Complex& x, const Complex& y, std::size_t k) {
  const DegreeRange r = joint_range(x, y);
  for (int i = r.lo - 1; i <= r.hi; ++i) {
    const std::size_t n = y.dim(i + 1) * x.dim(i);
    if (k < n) return {i, k / x.dim(i), k % x.dim(i)};
    k -= n;
  }
  throw Error(ErrorKind::DimensionMismatch, "homotopy index out of range");
}

}  // namespace

std::size_t homotopy_span_count(const Complex& x, const Complex& y) {
  const DegreeRange r = joint_range(x, y);
  std::size_t n = 0;
  for (int i = r.lo - 1; i <= r.hi; ++i) n += y.dim(i + 1) * x.dim(i);
  return n;
}

Vec homotopy_span_vector(const Complex& x, const Complex& y, std::size_t k) {
  const HomotopySlot s = homotopy_slot(x, y, k);
  const DegreeRange r = joint_range(x, y);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) comps.emplace_back(x.field(), y.dim(i), x.dim(i));
  // f_i = d^y_{i+1} s_i gets column c := column r of d^y_{i+1}
  const int i = s.degree;
  if (i >= r.lo && i <= r.hi) {
    const Mat dy = y.d(i + 1);
    Mat& fi = comps[std::size_t(i - r.lo)];
    for (std::size_t a = 0; a < dy.rows(); ++a) fi(a, s.c) = dy(a, s.r);
  }
  // f_{i+1} = s_i d^x_{i+1} gets row r := row c of d^x_{i+1}
  if (i + 1 >= r.lo && i + 1 <= r.hi) {
    const Mat dx = x.d(i + 1);
    Mat& fj = comps[std::size_t(i + 1 - r.lo)];
    for (std::size_t b = 0; b < dx.cols(); ++b) fj(s.r, b) = dx(s.c, b);
  }
  Vec out;
  for (const auto& m : comps) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

std::vector<Vec> homotopy_span(const Complex& x, const Complex& y) {
  std::vector<Vec> out;
  const std::size_t n = homotopy_span_count(x, y);
  for (std::size_t k = 0; k < n; ++k) out.push_back(homotopy_span_vector(x, y, k));
  return out;
}

std::optional<std::vector<Mat>> nullhomotopy_solve(const ChainMap& f) {
  const Complex& x = f.src();
  const Complex& y = f.dst();
  const Mat a = Mat::from_columns(x.field(), flat_size(x, y), homotopy_span(x, y));
  const Mat b = Mat::from_columns(x.field(), flat_size(x, y), {flatten(f)});
  const auto sol = solve_linear(a, b);
  if (!sol) return std::nullopt;
  const DegreeRange r = joint_range(x, y);
  std::vector<Mat> out;
  std::size_t k = 0;
  for (int i = r.lo - 1; i <= r.hi; ++i) {
    Mat s(x.field(), y.dim(i + 1), x.dim(i));
    for (std::size_t a0 = 0; a0 < s.rows(); ++a0)
      for (std::size_t b0 = 0; b0 < s.cols(); ++b0) s(a0, b0) = (*sol)(k++, 0);
    out.push_back(std::move(s));
  }
  return out;
}

Complex cone_of_identity(const Complex& x) {
  if (x.is_zero()) return x;
  const PrimeField f = x.field();
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  for (int i = x.lo(); i <= x.hi() + 1; ++i) {
    dims.push_back(x.dim(i) + x.dim(i - 1));
    // D_i(a, b) = (d a + b, -d b) : x_i + x_{i-1} -> x_{i-1} + x_{i-2}
    Mat D(f, x.dim(i - 1) + x.dim(i - 2), x.dim(i) + x.dim(i - 1));
    D.set_block(0, 0, x.d(i));
    D.set_block(0, x.dim(i), Mat::identity(f, x.dim(i - 1)));
    D.set_block(x.dim(i - 1), x.dim(i), -x.d(i - 1));
    if (i == x.lo()) D = zero(f, 0, dims.back());
    diffs.push_back(std::move(D));
  }
  return Complex::make(f, x.lo(), std::move(dims), std::move(diffs), "C(" + x.label() + ")");
}

ChainMap contractible_embedding(const Complex& x) {
  const Complex c = cone_of_identity(x);
  const DegreeRange r = joint_range(x, c);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    Mat m(x.field(), c.dim(i), x.dim(i));
    m.set_block(0, 0, Mat::identity(x.field(), x.dim(i)));
    comps.push_back(std::move(m));
  }
  return ChainMap(x, c, std::move(comps));
}

ChainMap contractible_cover(const Complex& x) {
  const Complex c = cone_of_identity(shift(x, -1));
  const DegreeRange r = joint_range(c, x);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    // c_i = x_{i+1} + x_i
    Mat m(x.field(), x.dim(i), c.dim(i));
    m.set_block(0, x.dim(i + 1), Mat::identity(x.field(), x.dim(i)));
    comps.push_back(std::move(m));
  }
  return ChainMap(c, x, std::move(comps));
}

ObjectWithMap<Complex, ChainMap> chain_kernel(const ChainMap& f) {
  const Complex& x = f.src();
  const PrimeField fld = x.field();
  if (x.is_zero()) return {x, identity_map(x)};
  std::vector<NullSpace> ns;
  for (int i = x.lo(); i <= x.hi(); ++i) ns.push_back(nullspace(f.at(i)));
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    const NullSpace& n = ns[std::size_t(i - x.lo())];
    dims.push_back(n.basis.cols());
    if (i == x.lo()) {
      diffs.push_back(zero(fld, 0, n.basis.cols()));
      continue;
    }
    const NullSpace& below = ns[std::size_t(i - 1 - x.lo())];
    const Mat image = x.d(i) * n.basis;
    Mat coords = image.select_rows(below.free_cols);
    if (!(below.basis * coords == image)) throw Error(ErrorKind::WellDefinednessFailure, "kernel is not a subcomplex");
    diffs.push_back(std::move(coords));
  }
  Complex k = Complex::make(fld, x.lo(), dims, diffs, "ker");
  const DegreeRange r = joint_range(k, x);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    if (i < x.lo() || i > x.hi()) comps.push_back(zero(fld, x.dim(i), k.dim(i)));
    else comps.push_back(ns[std::size_t(i - x.lo())].basis);
  }
  return {k, ChainMap(k, x, std::move(comps))};
}

ObjectWithMap<Complex, ChainMap> chain_cokernel(const ChainMap& f) {
  const Complex& y = f.dst();
  const PrimeField fld = y.field();
  if (y.is_zero()) return {y, identity_map(y)};
  std::vector<Mat> q;
  std::vector<std::vector<std::size_t>> free;
  for (int i = y.lo(); i <= y.hi(); ++i) {
    NullSpace ann = nullspace(f.at(i).transpose());
    q.push_back(ann.basis.transpose());
    free.push_back(std::move(ann.free_cols));
  }
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  for (int i = y.lo(); i <= y.hi(); ++i) {
    const Mat& qi = q[std::size_t(i - y.lo())];
    dims.push_back(qi.rows());
    if (i == y.lo()) {
      diffs.push_back(zero(fld, 0, qi.rows()));
      continue;
    }
    const Mat qd = q[std::size_t(i - 1 - y.lo())] * y.d(i);
    Mat a = qd.select_cols(free[std::size_t(i - y.lo())]);
    if (!(a * qi == qd)) throw Error(ErrorKind::WellDefinednessFailure, "image is not a subcomplex");
    diffs.push_back(std::move(a));
  }
  Complex c = Complex::make(fld, y.lo(), dims, diffs, "coker");
  const DegreeRange r = joint_range(y, c);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    if (i < y.lo() || i > y.hi()) comps.push_back(zero(fld, c.dim(i), y.dim(i)));
    else comps.push_back(q[std::size_t(i - y.lo())]);
  }
  return {c, ChainMap(y, c, std::move(comps))};
}

DirectSum<Complex, ChainMap> chain_direct_sum(const std::vector<Complex>& parts, PrimeField field) {
  if (parts.size() == 1) return {parts[0], {identity_map(parts[0])}, {identity_map(parts[0])}};
  int lo = 0, hi = -1;
  bool any = false;
  std::string label;
  for (const auto& p : parts) {
    if (!(p.field() == field)) throw Error(ErrorKind::FieldMismatch, "direct sum");
    label += (label.empty() ? "" : "+") + p.label();
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.lo()) : p.lo();
    hi = any ? std::max(hi, p.hi()) : p.hi();
    any = true;
  }
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  for (int i = lo; i <= hi; ++i) {
    std::size_t n = 0, m = 0;
    for (const auto& p : parts) {
      n += p.dim(i);
      m += p.dim(i - 1);
    }
    dims.push_back(n);
    Mat D(field, i == lo ? 0 : m, n);
    if (i != lo) {
      std::size_t r0 = 0, c0 = 0;
      for (const auto& p : parts) {
        D.set_block(r0, c0, p.d(i));
        r0 += p.dim(i - 1);
        c0 += p.dim(i);
      }
    }
    diffs.push_back(std::move(D));
  }
  DirectSum<Complex, ChainMap> out;
  out.object = Complex::make(field, lo, dims, diffs, label.empty() ? "0" : "(" + label + ")");
  std::vector<std::size_t> offset(parts.size(), 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Complex& p = parts[k];
    const DegreeRange r = joint_range(p, out.object);
    std::vector<Mat> inj, proj;
    for (int i = r.lo; i <= r.hi; ++i) {
      std::size_t off = 0;
      for (std::size_t j = 0; j < k; ++j) off += parts[j].dim(i);
      Mat a(field, out.object.dim(i), p.dim(i)), b(field, p.dim(i), out.object.dim(i));
      for (std::size_t t = 0; t < p.dim(i); ++t) {
        a(off + t, t) = 1;
        b(t, off + t) = 1;
      }
      inj.push_back(std::move(a));
      proj.push_back(std::move(b));
    }
    out.injections.emplace_back(p, out.object, std::move(inj));
    out.projections.emplace_back(out.object, p, std::move(proj));
  }
  return out;
}

ObjectWithMap<Complex, ChainMap> nonnegative_truncation(const Complex& x) {
  const PrimeField f = x.field();
  if (x.is_zero() || x.hi() < 0) {
    Complex z(f);
    return {z, zero_map(z, x)};
  }
  const NullSpace k0 = nullspace(x.d(0));
  std::vector<std::size_t> dims{k0.basis.cols()};
  std::vector<Mat> diffs{zero(f, 0, k0.basis.cols())};
  for (int i = 1; i <= x.hi(); ++i) {
    dims.push_back(x.dim(i));
    if (i == 1) {
      const Mat d1 = x.d(1);
      Mat coords = d1.select_rows(k0.free_cols);
      if (!(k0.basis * coords == d1)) throw Error(ErrorKind::WellDefinednessFailure, "d_1 does not land in ker d_0");
      diffs.push_back(std::move(coords));
    } else {
      diffs.push_back(x.d(i));
    }
  }
  Complex w = Complex::make(f, 0, dims, diffs, "tau(" + x.label() + ")");
  const DegreeRange r = joint_range(w, x);
  std::vector<Mat> comps;
  for (int i = r.lo; i <= r.hi; ++i) {
    if (i < 0) comps.push_back(zero(f, x.dim(i), 0));
    else if (i == 0) comps.push_back(w.dim(0) ? k0.basis : zero(f, x.dim(0), 0));
    else comps.push_back(Mat::identity(f, x.dim(i)));
  }
  return {w, ChainMap(w, x, std::move(comps))};
}

Complex random_complex(PrimeField field, int lo, int hi, std::size_t max_dim, SplitMix64& rng) {
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
  for (int i = lo; i <= hi; ++i) {
    const std::size_t n = std::size_t(rng.below(max_dim + 1));
    dims.push_back(n);
    if (i == lo) {
      diffs.push_back(zero(field, 0, n));
      continue;
    }
    // image must lie in ker d_{i-1}
    const Mat kb = kernel_basis(diffs.back());
    Mat coeffs(field, kb.cols(), n);
    for (std::size_t a = 0; a < coeffs.rows(); ++a)
      for (std::size_t b = 0; b < coeffs.cols(); ++b) coeffs(a, b) = Elem(rng.below(field.p()));
    diffs.push_back(kb * coeffs);
  }
  return Complex::make(field, lo, std::move(dims), std::move(diffs), "rand");
}

}  // namespace relstab
