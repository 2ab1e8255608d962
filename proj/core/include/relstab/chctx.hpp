#pragma once

// Bounded complexes of finite-dimensional F_p-vector spaces, homological
// grading (d: X_i -> X_{i-1}), with degreewise split conflations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relstab/linalg.hpp"
#include "relstab/random.hpp"
#include "relstab/structure.hpp"

namespace relstab {

/// Every nonzero term of a complex must sit in [-kWindow, kWindow].
inline constexpr int kWindow = 8;

class Complex {
 public:
  Complex() : field_(2) {}
  explicit Complex(PrimeField field) : field_(field) {}

  /// dims[k] is the dimension in degree lo + k. diffs[k] is d_{lo+k}, of shape
  /// dims[k-1] x dims[k] (diffs[0] must have zero rows). Checks shapes
  /// (DimensionMismatch), d o d = 0 (SquareNonzero) and the window
  /// (WindowExceeded). Zero ends are trimmed.
  static Complex make(PrimeField field, int lo, std::vector<std::size_t> dims, std::vector<Mat> diffs,
                      std::string label = "");

  const PrimeField& field() const noexcept { return field_; }
  /// Lowest and highest nonzero degree; lo() > hi() for the zero complex.
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + int(dims_.size()) - 1; }
  bool is_zero() const noexcept { return dims_.empty(); }
  std::size_t dim(int i) const noexcept;
  std::size_t total_dim() const noexcept;
  /// d_i : X_i -> X_{i-1}; a correctly shaped zero matrix outside the support.
  Mat d(int i) const;
  const std::string& label() const noexcept { return label_; }
  Complex relabeled(std::string label) const;

  std::vector<std::size_t> homology_dims(int from, int to) const;
  bool is_acyclic() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.field_ == b.field_ && a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.diffs_ == b.diffs_;
  }

 private:
  PrimeField field_;
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Mat> diffs_;  // diffs_[k] = d_{lo+k}
  std::string label_;
};

/// Degrees where either end is nonzero, as a closed range (empty if lo > hi).
struct DegreeRange {
  int lo = 0;
  int hi = -1;
  std::size_t size() const noexcept { return hi < lo ? 0 : std::size_t(hi - lo + 1); }
};
DegreeRange joint_range(const Complex& a, const Complex& b);

class ChainMap {
 public:
  ChainMap() = default;
  /// components[k] is f_{range.lo + k} for range = joint_range(src, dst).
  /// Throws DimensionMismatch on shapes and NotChainMap if d f != f d.
  ChainMap(Complex src, Complex dst, std::vector<Mat> components);

  const Complex& src() const noexcept { return src_; }
  const Complex& dst() const noexcept { return dst_; }
  DegreeRange range() const noexcept { return range_; }
  /// f_i, zero-shaped outside the range.
  Mat at(int i) const;
  const std::vector<Mat>& components() const noexcept { return comps_; }

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.comps_ == b.comps_;
  }

 private:
  Complex src_;
  Complex dst_;
  DegreeRange range_;
  std::vector<Mat> comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap identity_map(const Complex& x);
ChainMap zero_map(const Complex& src, const Complex& dst);
ChainMap add(const ChainMap& a, const ChainMap& b);
ChainMap scale(const ChainMap& a, Elem c);

/// Concatenated row-major components over the joint range.
Vec flatten(const ChainMap& f);
std::size_t flat_size(const Complex& src, const Complex& dst);
/// Inverse of flatten; checks the chain condition.
ChainMap unflatten(const Complex& src, const Complex& dst, const Vec& v);

/// x[k]_i = x_{i-k} with differential (-1)^k d.
Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);

Complex sphere(PrimeField field, int i);
/// k in degrees i and i-1 with d = 1.
Complex disk(PrimeField field, int i);

/// Canonical basis (RREF of flattened maps) of all chain maps.
std::vector<ChainMap> chain_hom_basis(const Complex& x, const Complex& y);
/// Spanning set of the null-homotopic maps d s + s d, one per elementary s.
std::size_t homotopy_span_count(const Complex& x, const Complex& y);
Vec homotopy_span_vector(const Complex& x, const Complex& y, std::size_t k);
std::vector<Vec> homotopy_span(const Complex& x, const Complex& y);
/// Components s_i: x_i -> y_{i+1} (i from range.lo - 1 to range.hi) with
/// f = d s + s d, or nullopt if f is not nullhomotopic.
std::optional<std::vector<Mat>> nullhomotopy_solve(const ChainMap& f);

/// The contractible cone of the identity: C(x)_i = x_i + x_{i-1} with
/// D(a, b) = (d a + b, -d b), and x embedded as (id, 0).
Complex cone_of_identity(const Complex& x);
ChainMap contractible_embedding(const Complex& x);
/// C(x[-1]) -> x, (c, a) |-> a.
ChainMap contractible_cover(const Complex& x);

ObjectWithMap<Complex, ChainMap> chain_kernel(const ChainMap& f);
ObjectWithMap<Complex, ChainMap> chain_cokernel(const ChainMap& f);
DirectSum<Complex, ChainMap> chain_direct_sum(const std::vector<Complex>& parts, PrimeField field);

/// W_0 = ker d_0, W_i = x_i for i >= 1, zero below; with its inclusion.
ObjectWithMap<Complex, ChainMap> nonnegative_truncation(const Complex& x);

/// Random complex supported in [lo, hi] with each dim in [0, max_dim]; the
/// differentials are random maps into the kernel of the next one down.
Complex random_complex(PrimeField field, int lo, int hi, std::size_t max_dim, SplitMix64& rng);

}  // namespace relstab
