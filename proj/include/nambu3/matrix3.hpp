#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nambu3/error.hpp"
#include "nambu3/scalar.hpp"

namespace nambu3 {

/// Axis directions of a 3-dimensional matrix; (i), (j), (k) follow the X, Y, Z axes.
enum class Direction { I, J, K };

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::I: return "i";
    case Direction::J: return "j";
    case Direction::K: return "k";
  }
  return "?";
}

template <ScalarType S>
using Matrix2 = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <ScalarType S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

/// 1-based index triple (i, j, k).
using Cell = std::array<int, 3>;
using CellSet = std::vector<Cell>;

/// Dense m x n x p matrix with entries A(i,j,k), 1 <= i <= m, 1 <= j <= n, 1 <= k <= p.
///
/// Entries are stored in lexicographic (i,j,k) order, so each section is a
/// strided view over the storage. Indices in the public interface are 1-based.
template <ScalarType S>
class Matrix3 {
public:
  using Scalar = S;
  using Storage = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using RowMajor = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Strides = Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>;
  using SectionView = Eigen::Map<const RowMajor, 0, Strides>;
  using MutableSectionView = Eigen::Map<RowMajor, 0, Strides>;

  Matrix3() = default;

  Matrix3(int m, int n, int p, Storage data) : m_(m), n_(n), p_(p), data_(std::move(data)) {
    if (m < 1 || n < 1 || p < 1) throw ShapeError("Matrix3: extents must be positive");
    if (data_.size() != static_cast<Eigen::Index>(m) * n * p)
      throw ShapeError("Matrix3: storage size does not match extents");
  }

  static Matrix3 zero(int m, int n, int p) {
    check_extents(m, n, p);
    return Matrix3(m, n, p, Storage::Constant(static_cast<Eigen::Index>(m) * n * p, S{}));
  }

  /// Builds A(i,j,k) = f(i,j,k) with 1-based arguments.
  template <class F>
  static Matrix3 from_function(int m, int n, int p, F&& f) {
    check_extents(m, n, p);
    Storage data(static_cast<Eigen::Index>(m) * n * p);
    Eigen::Index pos = 0;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= p; ++k) data[pos++] = S(f(i, j, k));
    return Matrix3(m, n, p, std::move(data));
  }

  int rows_i() const { return m_; }
  int rows_j() const { return n_; }
  int rows_k() const { return p_; }
  std::array<int, 3> shape() const { return {m_, n_, p_}; }
  int extent(Direction d) const {
    return d == Direction::I ? m_ : d == Direction::J ? n_ : p_;
  }
  bool is_cubic() const { return m_ == n_ && n_ == p_; }
  /// Order of a cubic matrix; callers check is_cubic() first.
  int order() const { return n_; }

  const Storage& raw() const { return data_; }

  const S& operator()(int i, int j, int k) const {
    check_index(i, j, k);
    return data_[offset(i - 1, j - 1, k - 1)];
  }

  /// Section of orientation d with 1-based label, viewed as a rectangular matrix:
  /// I -> n x p over (j,k), J -> m x p over (i,k), K -> m x n over (i,j).
  SectionView section_view(Direction d, int label) const {
    check_label(d, label);
    const auto [start, rows, cols, outer, inner] = section_layout(d, label - 1);
    return SectionView(data_.data() + start, rows, cols, Strides(outer, inner));
  }

  bool operator==(const Matrix3& other) const {
    return shape() == other.shape() && data_ == other.data_;
  }

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
    a.require_same_shape(b);
    return Matrix3(a.m_, a.n_, a.p_, a.data_ + b.data_);
  }
  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
    a.require_same_shape(b);
    return Matrix3(a.m_, a.n_, a.p_, a.data_ - b.data_);
  }
  friend Matrix3 operator-(const Matrix3& a) { return Matrix3(a.m_, a.n_, a.p_, -a.data_); }
  friend Matrix3 operator*(const S& alpha, const Matrix3& a) {
    return Matrix3(a.m_, a.n_, a.p_, a.data_ * alpha);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return scalar_traits<S>::is_zero(x); });
  }

  void require_same_shape(const Matrix3& other) const {
    if (shape() != other.shape()) throw ShapeError("Matrix3: shape mismatch");
  }

  void require_cubic(const char* what) const {
    if (!is_cubic()) throw DomainError(std::string(what) + ": matrix is not cubic");
  }

  std::size_t offset(int i0, int j0, int k0) const {
    return (static_cast<std::size_t>(i0) * n_ + j0) * p_ + k0;
  }

  struct Layout {
    Eigen::Index start, rows, cols, outer, inner;
  };

  Layout section_layout(Direction d, int label0) const {
    const Eigen::Index np = static_cast<Eigen::Index>(n_) * p_;
    switch (d) {
      case Direction::I: return {label0 * np, n_, p_, p_, 1};
      case Direction::J: return {static_cast<Eigen::Index>(label0) * p_, m_, p_, np, 1};
      case Direction::K: return {label0, m_, n_, np, p_};
    }
    return {};
  }

private:
  static void check_extents(int m, int n, int p) {
    if (m < 1 || n < 1 || p < 1) throw ShapeError("Matrix3: extents must be positive");
  }

  void check_index(int i, int j, int k) const {
    if (i < 1 || i > m_ || j < 1 || j > n_ || k < 1 || k > p_)
      throw IndexError("Matrix3: index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ") out of range");
  }

  void check_label(Direction d, int label) const {
    if (label < 1 || label > extent(d))
      throw IndexError(std::string("Matrix3: section label out of range for direction ") + to_string(d));
  }

  int m_ = 0, n_ = 0, p_ = 0;
  Storage data_;
};

/// Binds entries positionally in lexicographic (i,j,k) order.
template <ScalarType S>
Matrix3<S> make_matrix3(int m, int n, int p, std::span<const S> entries) {
  if (m < 1 || n < 1 || p < 1) throw ShapeError("make_matrix3: extents must be positive");
  if (entries.size() != static_cast<std::size_t>(m) * n * p)
    throw ShapeError("make_matrix3: expected " + std::to_string(static_cast<std::size_t>(m) * n * p) +
                     " entries, got " + std::to_string(entries.size()));
  typename Matrix3<S>::Storage data(static_cast<Eigen::Index>(entries.size()));
  std::copy(entries.begin(), entries.end(), data.begin());
  return Matrix3<S>(m, n, p, std::move(data));
}

/// Cubic matrix with I(i,j,i) = 1: every section of orientation (j) is the unit matrix.
template <ScalarType S>
Matrix3<S> identity_cubic(int n) {
  if (n < 1) throw ShapeError("identity_cubic: order must be positive");
  return Matrix3<S>::from_function(n, n, n, [](int i, int, int k) { return i == k ? S(1) : S(0); });
}

template <ScalarType S>
Matrix2<S> section(const Matrix3<S>& a, Direction d, int label) {
  return a.section_view(d, label);
}

/// Row of direction d through the two fixed indices, in the order they appear in (i,j,k).
template <ScalarType S>
RowVector<S> row(const Matrix3<S>& a, Direction d, int f1, int f2) {
  const int len = a.extent(d);
  RowVector<S> out(len);
  for (int t = 1; t <= len; ++t) {
    switch (d) {
      case Direction::I: out[t - 1] = a(t, f1, f2); break;
      case Direction::J: out[t - 1] = a(f1, t, f2); break;
      case Direction::K: out[t - 1] = a(f1, f2, t); break;
    }
  }
  return out;
}

namespace detail {

template <ScalarType S>
void require_cells_in_range(const Matrix3<S>& a, std::span<const Cell> cells) {
  std::set<Cell> seen;
  for (const Cell& c : cells) {
    if (c[0] < 1 || c[0] > a.rows_i() || c[1] < 1 || c[1] > a.rows_j() || c[2] < 1 || c[2] > a.rows_k())
      throw IndexError("cell out of range");
    if (!seen.insert(c).second) throw DomainError("cell set contains a duplicate");
  }
}

inline bool all_distinct(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace detail

/// True iff no two cells lie in a common section of any orientation.
template <ScalarType S>
bool is_transversal(const Matrix3<S>& a, std::span<const Cell> cells) {
  a.require_cubic("is_transversal");
  if (cells.size() != static_cast<std::size_t>(a.order()))
    throw ArityError("is_transversal: expected " + std::to_string(a.order()) + " cells");
  detail::require_cells_in_range(a, cells);
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<int> coords;
    for (const Cell& c : cells) coords.push_back(c[axis]);
    if (!detail::all_distinct(coords)) return false;
  }
  return true;
}

/// Rows of direction d given by their two fixed indices (for I: (j,k); J: (i,k); K: (i,j)).
/// True iff no section passes through two of the rows.
template <ScalarType S>
bool is_transversal_section(const Matrix3<S>& a, Direction d, std::span<const std::array<int, 2>> rows) {
  a.require_cubic("is_transversal_section");
  const int n = a.order();
  if (rows.size() != static_cast<std::size_t>(n))
    throw ArityError("is_transversal_section: expected " + std::to_string(n) + " rows");
  std::set<std::array<int, 2>> seen;
  for (const auto& r : rows) {
    if (r[0] < 1 || r[0] > n || r[1] < 1 || r[1] > n) throw IndexError("row index out of range");
    if (!seen.insert(r).second) throw DomainError("row set contains a duplicate");
  }
  (void)d;  // the fixed-index pairs already encode the two other orientations
  std::vector<int> first, second;
  for (const auto& r : rows) {
    first.push_back(r[0]);
    second.push_back(r[1]);
  }
  return detail::all_distinct(first) && detail::all_distinct(second);
}

/// Main diagonal section as an n x n matrix: J -> A(t,l,t); I -> A(t,l,l); K -> A(l,l,t).
template <ScalarType S>
Matrix2<S> main_diagonal_section(const Matrix3<S>& a, Direction d) {
  a.require_cubic("main_diagonal_section");
  const int n = a.order();
  Matrix2<S> out(n, n);
  for (int t = 1; t <= n; ++t)
    for (int l = 1; l <= n; ++l) {
      switch (d) {
        case Direction::I: out(t - 1, l - 1) = a(t, l, l); break;
        case Direction::J: out(t - 1, l - 1) = a(t, l, t); break;
        case Direction::K: out(t - 1, l - 1) = a(l, l, t); break;
      }
    }
  return out;
}

/// Trace relative to a direction: the sum of the main diagonal section,
/// equivalently the sum of the traces of all sections of that orientation.
template <ScalarType S>
S trace_dir(const Matrix3<S>& a, Direction d = Direction::J) {
  a.require_cubic("trace_dir");
  S acc{};
  for (int label = 1; label <= a.order(); ++label) acc += a.section_view(d, label).trace();
  return acc;
}

/// Conjugate transpose with respect to the main diagonal section of direction d.
/// J: B(i,j,k) = conj A(k,j,i); I: B(i,j,k) = conj A(i,k,j); K: B(i,j,k) = conj A(j,i,k).
template <ScalarType S>
Matrix3<S> hermitian_adjoint(const Matrix3<S>& a, Direction d = Direction::J) {
  a.require_cubic("hermitian_adjoint");
  const int n = a.order();
  return Matrix3<S>::from_function(n, n, n, [&](int i, int j, int k) {
    switch (d) {
      case Direction::I: return scalar_traits<S>::conj(a(i, k, j));
      case Direction::J: return scalar_traits<S>::conj(a(k, j, i));
      case Direction::K: return scalar_traits<S>::conj(a(j, i, k));
    }
    return S{};
  });
}

template <ScalarType S>
double max_abs(const Matrix3<S>& a) {
  double best = 0.0;
  for (const S& x : a.raw()) best = std::max(best, scalar_traits<S>::abs(x));
  return best;
}

inline CellSet main_diagonal_cells(int n) {
  CellSet out;
  for (int t = 1; t <= n; ++t) out.push_back({t, t, t});
  return out;
}

/// The secondary diagonal obtained by reversing the index along `reversed`.
inline CellSet secondary_diagonal_cells(int n, Direction reversed) {
  CellSet out;
  const int axis = static_cast<int>(reversed);
  for (int t = 1; t <= n; ++t) {
    Cell c{t, t, t};
    c[axis] = n + 1 - t;
    out.push_back(c);
  }
  return out;
}

}  // namespace nambu3
