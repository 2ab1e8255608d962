#pragma once

// Dense linear algebra over prime fields F_p (2 <= p <= 97).
//
// Everything is exact; the canonical forms (leftmost pivots, free variables
// set to zero, free columns in ascending order) are part of the contract so
// that reports built on top are byte-reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relstab {

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

class PrimeField {
 public:
  static constexpr unsigned kMaxPrime = 97;

  /// Throws InvalidField unless p is a prime in [2, 97].
  explicit PrimeField(unsigned p);

  unsigned p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    unsigned s = unsigned(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return Elem(a >= b ? a - b : a + p_ - b); }
  Elem neg(Elem a) const noexcept { return Elem(a == 0 ? 0 : p_ - a); }
  Elem mul(Elem a, Elem b) const noexcept { return Elem((unsigned(a) * b) % p_); }
  Elem inv(Elem a) const;
  Elem reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return Elem(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned n) noexcept;

/// Row-major dense matrix over a prime field. Zero-row and zero-column
/// shapes are legal and common (maps into or out of the zero object).
class Mat {
 public:
  Mat() : field_(2) {}
  Mat(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p; ragged input throws DimensionMismatch.
  static Mat from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);
  static Mat from_columns(PrimeField field, std::size_t rows, const std::vector<Vec>& columns);
  /// A single row holding v.
  static Mat row_vector(PrimeField field, const Vec& v);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long value) { (*this)(r, c) = field_.reduce(value); }

  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const Vec& data() const noexcept { return data_; }

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Elem c) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// Throws DimensionMismatch / FieldMismatch.
Mat mat_mul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }
Vec mat_vec(const Mat& a, const Vec& v);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(Mat a);
std::size_t rank(const Mat& a);

struct NullSpace {
  Mat basis;                            // cols - rank columns
  std::vector<std::size_t> free_cols;   // basis column j has a 1 at row free_cols[j]
};

NullSpace nullspace(const Mat& a);
/// Columns form the canonical basis of {x : a x = 0}.
Mat kernel_basis(const Mat& a);

/// Some X with a X = b, free variables set to zero; nullopt if inconsistent.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

Mat kronecker(const Mat& a, const Mat& b);
Mat direct_sum_mat(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Incrementally maintained reduced row-echelon basis of a subspace of F_p^width.
/// Rows are kept fully reduced, so a member vector v equals
/// sum_k v[pivot_k] * row_k.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t width) : field_(field), width_(width) {}

  /// Reduces v against the basis in place; returns true iff v ends up zero.
  bool reduce(Vec& v) const;
  bool contains(Vec v) const { return reduce(v); }
  /// Adds v; returns true iff the rank grew.
  bool insert(Vec v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  const PrimeField& field() const noexcept { return field_; }

  /// Pivot columns in ascending order.
  std::vector<std::size_t> sorted_pivots() const;
  /// The basis as an RREF matrix (rows sorted by pivot).
  Mat to_mat() const;

 private:
  PrimeField field_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical RREF of the row span of a set of vectors (zero rows dropped).
Mat row_space(PrimeField field, std::size_t width, const std::vector<Vec>& vectors);

namespace detail {
/// dst[j] -= c * src[j] for j >= from.
void axpy_sub(const PrimeField& f, std::span<Elem> dst, std::span<const Elem> src, Elem c, std::size_t from = 0);
}  // namespace detail

}  // namespace relstab
