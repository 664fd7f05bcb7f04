#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "motive/scalar.hpp"

// Exact linear algebra over Rational and GF. Pivots are chosen as the first
// nonzero entry; no magnitude heuristics are meaningful for exact scalars.

namespace motive {

/// Reduced row echelon form of a matrix together with its pivot columns.
template <class Scalar> struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived> &input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        pick = r;
        break;
      }
    if (pick < 0) continue;
    m.row(row).swap(m.row(pick));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Derived> Eigen::Index rank(const Eigen::MatrixBase<Derived> &m) {
  return row_echelon(m).rank();
}

/// Null space of an already reduced system; columns of the result form a basis.
template <class Scalar>
Matrix<Scalar> nullspace_from_echelon(const RowEchelon<Scalar> &e, Eigen::Index cols,
                                      const Scalar &zero, const Scalar &one) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<Scalar> basis(cols, static_cast<Eigen::Index>(free.size()));
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    for (Eigen::Index r = 0; r < cols; ++r) basis(r, j) = zero;
    basis(free[j], j) = one;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], j) = -e.reduced(i, free[j]);
  }
  return basis;
}

template <class Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived> &m,
                                           const typename Derived::Scalar &zero,
                                           const typename Derived::Scalar &one) {
  return nullspace_from_echelon(row_echelon(m), m.cols(), zero, one);
}

/// Solves U x = b for square upper-triangular U with nonzero diagonal.
template <class DerivedU, class DerivedB>
Vector<typename DerivedU::Scalar> solve_upper_triangular(const Eigen::MatrixBase<DerivedU> &u,
                                                         const Eigen::MatrixBase<DerivedB> &b) {
  using Scalar = typename DerivedU::Scalar;
  const Eigen::Index n = u.rows();
  if (u.cols() != n || b.size() != n) throw std::invalid_argument("triangular solve: shape mismatch");
  Vector<Scalar> x = b;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (!is_zero(u(i, j))) x[i] -= u(i, j) * x[j];
    if (is_zero(u(i, i))) throw std::domain_error("triangular solve: zero diagonal");
    x[i] /= u(i, i);
  }
  return x;
}

/// Row space accumulated one vector at a time, kept in reduced echelon form.
/// Suited to large, sparse, highly redundant systems.
template <class Scalar> class RowSpace {
public:
  explicit RowSpace(Eigen::Index cols) : cols_(cols) {}

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index cols() const { return cols_; }

  /// Reduces v against the current basis; returns true if v enlarged the span.
  bool add(Vector<Scalar> v) {
    reduce(v);
    Eigen::Index lead = -1;
    for (Eigen::Index c = 0; c < cols_; ++c)
      if (!is_zero(v[c])) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    const Scalar inv = Scalar(1) / v[lead];
    for (Eigen::Index c = lead; c < cols_; ++c) v[c] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_zero(rows_[i][lead])) continue;
      const Scalar f = rows_[i][lead];
      for (Eigen::Index c = lead; c < cols_; ++c) rows_[i][c] -= f * v[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(Vector<Scalar> v) const {
    reduce(v);
    for (Eigen::Index c = 0; c < cols_; ++c)
      if (!is_zero(v[c])) return false;
    return true;
  }

  RowEchelon<Scalar> echelon(const Scalar &zero) const {
    RowEchelon<Scalar> e;
    e.reduced = Matrix<Scalar>::Constant(rank(), cols_, zero);
    for (Eigen::Index i = 0; i < rank(); ++i) e.reduced.row(i) = rows_[i].transpose();
    e.pivots = pivots_;
    return e;
  }

private:
  void reduce(Vector<Scalar> &v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Eigen::Index p = pivots_[i];
      if (is_zero(v[p])) continue;
      const Scalar f = v[p];
      for (Eigen::Index c = p; c < cols_; ++c)
        if (!is_zero(rows_[i][c])) v[c] -= f * rows_[i][c];
    }
  }

  Eigen::Index cols_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

/// True when v lies in the column span of a.
template <class DerivedA, class DerivedV>
bool in_column_span(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedV> &v) {
  using Scalar = typename DerivedA::Scalar;
  RowSpace<Scalar> space(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j) space.add(a.col(j));
  return space.contains(v);
}

template <class Derived> bool is_zero_matrix(const Eigen::MatrixBase<Derived> &m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

} // namespace motive
