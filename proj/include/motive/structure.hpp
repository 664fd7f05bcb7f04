#pragma once

#include <utility>
#include <vector>

#include "motive/linalg.hpp"

namespace motive {

/// Sparse integer structure constants of an algebra with a fixed basis:
/// b_i * b_j = sum over (k, c) in products[i][j] of c * b_k.
class StructureConstants {
public:
  using Term = std::pair<int, long>;

  StructureConstants() = default;
  explicit StructureConstants(int dimension)
      : dimension_(dimension), products_(static_cast<std::size_t>(dimension) * dimension) {}

  int dimension() const { return dimension_; }
  const std::vector<Term> &product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * dimension_ + j];
  }
  void set_product(int i, int j, std::vector<Term> terms) {
    products_[static_cast<std::size_t>(i) * dimension_ + j] = std::move(terms);
  }

  /// Bilinear extension to coefficient vectors.
  template <class Scalar>
  Vector<Scalar> multiply(const Vector<Scalar> &x, const Vector<Scalar> &y, const CoefficientRing &ring) const {
    Vector<Scalar> out = zero_vector<Scalar>(dimension_, ring);
    for (int i = 0; i < dimension_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dimension_; ++j) {
        if (is_zero(y[j])) continue;
        const Scalar xy = x[i] * y[j];
        for (const auto &[k, c] : product(i, j)) out[k] += scalar_from_integer<Scalar>(c, ring) * xy;
      }
    }
    return out;
  }

  /// Matrix of left multiplication by x (column j is x * b_j).
  template <class Scalar>
  Matrix<Scalar> left_multiplication(const Vector<Scalar> &x, const CoefficientRing &ring) const {
    Matrix<Scalar> m(dimension_, dimension_);
    for (int j = 0; j < dimension_; ++j) {
      Vector<Scalar> b = zero_vector<Scalar>(dimension_, ring);
      b[j] = scalar_from_integer<Scalar>(1, ring);
      m.col(j) = multiply(x, b, ring);
    }
    return m;
  }

private:
  int dimension_ = 0;
  std::vector<std::vector<Term>> products_;
};

/// Basis (as columns) of the centre {z : z b = b z for every basis element b}.
template <class Scalar> Matrix<Scalar> commutant(const StructureConstants &s, const CoefficientRing &ring) {
  const int n = s.dimension();
  const Scalar zero = scalar_from_integer<Scalar>(0, ring);
  RowSpace<Scalar> equations(n);
  for (int j = 0; j < n; ++j) {
    Matrix<Scalar> rows = Matrix<Scalar>::Constant(n, n, zero);
    for (int i = 0; i < n; ++i) {
      for (const auto &[k, c] : s.product(i, j)) rows(k, i) += scalar_from_integer<Scalar>(c, ring);
      for (const auto &[k, c] : s.product(j, i)) rows(k, i) -= scalar_from_integer<Scalar>(c, ring);
    }
    for (int k = 0; k < n; ++k)
      if (!is_zero_matrix(rows.row(k))) equations.add(rows.row(k).transpose());
  }
  return nullspace_from_echelon(equations.echelon(zero), n, zero, scalar_from_integer<Scalar>(1, ring));
}

/// Collects multiplicities of basis indices into a sorted term list.
std::vector<StructureConstants::Term> collect_terms(const std::vector<int> &indices);

} // namespace motive
