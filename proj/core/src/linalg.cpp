#include "relstab/linalg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "relstab/error.hpp"

namespace relstab {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "p = " + std::to_string(p) + " is not a prime in [2, 97]");
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::SingularMatrix, "inverse of zero in F_" + std::to_string(p_));
  // a^(p-2)
  unsigned result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Elem(result);
}

namespace detail {

void axpy_sub(const PrimeField& f, std::span<Elem> dst, std::span<const Elem> src, Elem c, std::size_t from) {
  if (c == 0) return;
  const unsigned p = f.p();
  std::array<Elem, PrimeField::kMaxPrime + 1> times{};
  for (unsigned x = 0; x < p; ++x) times[x] = Elem((x * c) % p);
  const std::size_t n = dst.size();
  for (std::size_t j = from; j < n; ++j) {
    const Elem s = src[j];
    if (s == 0) continue;
    const Elem m = times[s];
    const Elem d = dst[j];
    dst[j] = Elem(d >= m ? d - m : d + p - m);
  }
}

namespace {
void scale_in_place(const PrimeField& f, std::span<Elem> v, Elem c) {
  for (auto& x : v) x = f.mul(x, c);
}
void check_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::FieldMismatch,
                "F_" + std::to_string(a.field().p()) + " vs F_" + std::to_string(b.field().p()));
}
}  // namespace

}  // namespace detail

using detail::axpy_sub;

Mat Mat::identity(PrimeField field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  Mat m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Mat Mat::from_columns(PrimeField field, std::size_t rows, const std::vector<Vec>& columns) {
  Mat m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Mat Mat::row_vector(PrimeField field, const Vec& v) {
  Mat m(field, 1, v.size());
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
  detail::check_same_field(*this, b);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat m(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) std::copy_n(row(idx[k]).begin(), cols_, m.row(k).begin());
  return m;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  detail::check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  Mat s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.add(data_[i], o.data_[i]);
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  detail::check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
  Mat s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.sub(data_[i], o.data_[i]);
  return s;
}

Mat Mat::operator-() const {
  Mat s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.neg(data_[i]);
  return s;
}

Mat Mat::scaled(Elem c) const {
  Mat s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.mul(data_[i], c);
  return s;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << unsigned((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat mat_mul(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const unsigned p = a.field().p();
  Mat c(a.field(), a.rows(), b.cols());
  std::vector<std::uint32_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint32_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
      // 97*96*k overflows 2^32 only for k > ~460000; reduce periodically anyway.
      if ((k & 0x3fff) == 0x3fff)
        for (auto& x : acc) x %= p;
    }
    auto crow = c.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) crow[j] = Elem(acc[j] % p);
  }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "mat_vec length");
  const unsigned p = a.field().p();
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    const auto r = a.row(i);
    for (std::size_t k = 0; k < v.size(); ++k) acc += std::uint64_t(r[k]) * v[k];
    out[i] = Elem(acc % p);
  }
  return out;
}

Rref rref(Mat a) {
  const PrimeField& f = a.field();
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pr = lead_row;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead_row)
      std::swap_ranges(a.row(pr).begin(), a.row(pr).end(), a.row(lead_row).begin());
    const Elem inv = f.inv(a(lead_row, c));
    detail::scale_in_place(f, a.row(lead_row).subspan(c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row) continue;
      const Elem factor = a(r, c);
      if (factor) axpy_sub(f, a.row(r), a.row(lead_row), factor, c);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

NullSpace nullspace(const Mat& a) {
  const Rref r = rref(a);
  const PrimeField& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  NullSpace ns;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) ns.free_cols.push_back(c);
  ns.basis = Mat(f, a.cols(), ns.free_cols.size());
  for (std::size_t j = 0; j < ns.free_cols.size(); ++j) {
    const std::size_t fc = ns.free_cols[j];
    ns.basis(fc, j) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) ns.basis(r.pivots[k], j) = f.neg(r.reduced(k, fc));
  }
  return ns;
}

Mat kernel_basis(const Mat& a) { return nullspace(a).basis; }

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_linear: a.rows != b.rows");
  const Rref r = rref(hstack(a, b));
  Mat x(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < r.rank; ++k) {
    const std::size_t pc = r.pivots[k];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(k, a.cols() + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_linear(a, Mat::identity(a.field(), a.rows()));
}

Mat kronecker(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  const PrimeField& f = a.field();
  Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem aij = a(i, j);
      if (!aij) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = f.mul(aij, b(r, c));
    }
  return k;
}

Mat direct_sum_mat(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  Mat s(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

Mat hstack(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack rows");
  Mat s(a.field(), a.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(0, a.cols(), b);
  return s;
}

Mat vstack(const Mat& a, const Mat& b) {
  detail::check_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack cols");
  Mat s(a.field(), a.rows() + b.rows(), a.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), 0, b);
  return s;
}

bool EchelonBasis::reduce(Vec& v) const {
  if (v.size() != width_) throw Error(ErrorKind::DimensionMismatch, "EchelonBasis width");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Elem c = v[pivots_[k]];
    if (c) axpy_sub(field_, v, rows_[k], c);
  }
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

bool EchelonBasis::insert(Vec v) {
  if (reduce(v)) return false;
  const std::size_t pc = static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; }) - v.begin());
  detail::scale_in_place(field_, v, field_.inv(v[pc]));
  for (auto& r : rows_) {
    const Elem c = r[pc];
    if (c) axpy_sub(field_, r, v, c);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pc);
  return true;
}

std::vector<std::size_t> EchelonBasis::sorted_pivots() const {
  auto p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

Mat EchelonBasis::to_mat() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Mat m(field_, rows_.size(), width_);
  for (std::size_t k = 0; k < order.size(); ++k) std::copy(rows_[order[k]].begin(), rows_[order[k]].end(), m.row(k).begin());
  return m;
}

Mat row_space(PrimeField field, std::size_t width, const std::vector<Vec>& vectors) {
  EchelonBasis eb(field, width);
  for (const auto& v : vectors) eb.insert(v);
  return eb.to_mat();
}

}  // namespace relstab
