#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "motive/crossed.hpp"

namespace motive {

/// Omega_G: one copy of G/H for every subgroup H (not one per class).
class OmegaSet {
public:
  explicit OmegaSet(std::shared_ptr<const SubgroupClassTable> table);

  const SubgroupClassTable &classes() const { return *table_; }
  int size() const { return static_cast<int>(subgroup_of_.size()); }
  /// Index into classes().all_subgroups() of the copy containing the point.
  int subgroup_of(int point) const { return subgroup_of_[point]; }
  /// Smallest element of the coset.
  int representative(int point) const { return representative_[point]; }
  /// The point x H_s of the copy of G/H_s.
  int point(int subgroup, int x) const {
    return offsets_[subgroup] + cosets_[subgroup].coset_of[x];
  }
  int act(int g, int point) const { return action_[static_cast<std::size_t>(point) * order_ + g]; }
  bool fixed_by(const std::vector<int> &generators, int pt) const;
  /// "(H-index,coset-rep)"
  std::string point_name(int point) const;

private:
  std::shared_ptr<const SubgroupClassTable> table_;
  int order_ = 0;
  std::vector<int> offsets_;
  std::vector<CosetSpace> cosets_;
  std::vector<int> subgroup_of_;
  std::vector<int> representative_;
  std::vector<int> action_;
};

/// Transitive G-set G/S over Omega x Omega, the base coset mapping to (source, target).
struct SpanBasisElement {
  int stabilizer_class = 0;
  int source = 0;
  int target = 0;
};

template <class Scalar> struct SpanElement {
  CoefficientRing ring;
  Vector<Scalar> coefficients;

  friend bool operator==(const SpanElement &a, const SpanElement &b) {
    return a.ring == b.ring && a.coefficients == b.coefficients;
  }
};

/// Bound on |G| for the span algebra; the basis grows roughly like |Omega|^2.
constexpr std::uint64_t kMaxSpanOrder = 24;
/// Structure constants are computed eagerly, so the span basis itself is bounded too.
constexpr std::uint64_t kMaxSpanDimension = 1000;

/// The span algebra k b(Omega x Omega), a model of the Mackey algebra mu_k(G).
class MackeyAlgebra {
public:
  explicit MackeyAlgebra(std::shared_ptr<const CrossedBurnsideRing> crossed,
                         std::uint64_t max_order = kMaxSpanOrder);

  const CrossedBurnsideRing &crossed() const { return *crossed_; }
  const SubgroupClassTable &classes() const { return crossed_->classes(); }
  const FiniteGroup &group() const { return crossed_->group(); }
  const OmegaSet &omega() const { return omega_; }
  const std::vector<SpanBasisElement> &basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Basis index of the span with stabilizer t over (source, target).
  int canonical(const Subgroup &t, int source, int target) const;
  /// b_i after b_j: fibered product over target(b_j) = source(b_i), decomposed into orbits.
  std::vector<StructureConstants::Term> compose_basis(int i, int j) const;
  const StructureConstants &structure() const { return structure_; }

  template <class Scalar> SpanElement<Scalar> basis_element(int i, const CoefficientRing &ring) const {
    SpanElement<Scalar> e{ring, zero_vector<Scalar>(dimension(), ring)};
    e.coefficients[i] = scalar_from_integer<Scalar>(1, ring);
    return e;
  }
  template <class Scalar> SpanElement<Scalar> zero(const CoefficientRing &ring) const {
    return {ring, zero_vector<Scalar>(dimension(), ring)};
  }
  template <class Scalar> SpanElement<Scalar> one(const CoefficientRing &ring) const {
    return {ring, convert<Scalar>(identity_, ring)};
  }
  template <class Scalar>
  SpanElement<Scalar> compose(const SpanElement<Scalar> &x, const SpanElement<Scalar> &y) const {
    require_same_ring(x.ring, y.ring);
    return {x.ring, structure_.multiply(x.coefficients, y.coefficients, x.ring)};
  }

  /// Elementary spans for S <= U (subgroups given as all_subgroups() indices).
  int restriction(int u, int s) const;
  int transfer(int u, int s) const;
  /// c_x : G/S -> G/xSx^-1
  int conjugation(int s, int x) const;

  /// Bouc's map on the crossed Burnside ring.
  template <class Scalar> SpanElement<Scalar> zeta(const CrossedElement<Scalar> &x) const {
    SpanElement<Scalar> out = zero<Scalar>(x.ring);
    for (int i = 0; i < crossed_->dimension(); ++i)
      if (!is_zero(x.coefficients[i])) out.coefficients += convert<Scalar>(zeta_[i], x.ring) * x.coefficients[i];
    return out;
  }

  /// Basis of the centre as columns of coefficient vectors.
  template <class Scalar> Matrix<Scalar> center(const CoefficientRing &ring) const {
    return commutant<Scalar>(structure_, ring);
  }

  /// p_k: the span f, g : V -> Omega goes to M[y, x] = #{v : f(v) = x, g(v) = y}.
  template <class Scalar> Matrix<Scalar> project(const SpanElement<Scalar> &x) const {
    Matrix<Scalar> m = Matrix<Scalar>::Constant(omega_.size(), omega_.size(), scalar_from_integer<Scalar>(0, x.ring));
    for (int i = 0; i < dimension(); ++i) {
      if (is_zero(x.coefficients[i])) continue;
      for (const auto &[row, col] : projection_[i]) m(row, col) += x.coefficients[i];
    }
    return m;
  }

  /// Integer matrix of project(b_i).
  Matrix<long> integer_projection(int i) const;

  /// The Rognerud map Z kG -> Y_k(G).
  template <class Scalar> Matrix<Scalar> iota_k(const CenterElement<Scalar> &z) const {
    const FiniteGroup &g = group();
    const CenterAlgebra &c = crossed_->center();
    Matrix<Scalar> m = Matrix<Scalar>::Constant(omega_.size(), omega_.size(), scalar_from_integer<Scalar>(0, z.ring));
    for (const auto &w : iota_words_) {
      // coefficient sum over x in H of lambda_{gx}
      Scalar coefficient = scalar_from_integer<Scalar>(0, z.ring);
      for (int x : classes().all_subgroups()[w.subgroup].elements())
        coefficient += z.coordinates[c.class_of(g.mul(w.element, x))];
      if (!is_zero(coefficient)) m += project(SpanElement<Scalar>{z.ring, convert<Scalar>(w.span, z.ring)}) * coefficient;
    }
    return m;
  }

private:
  struct IotaWord {
    int subgroup;
    int element;
    Vector<Rational> span;
  };

  Vector<Rational> word(const std::vector<int> &spans_right_to_left) const;

  std::shared_ptr<const CrossedBurnsideRing> crossed_;
  OmegaSet omega_;
  std::vector<SpanBasisElement> basis_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<CosetSpace> class_cosets_;
  StructureConstants structure_;
  Vector<Rational> identity_;
  std::vector<Vector<Rational>> zeta_;
  std::vector<std::vector<std::pair<int, int>>> projection_;
  std::vector<IotaWord> iota_words_;
};

/// Y_k(G) = End_kG(k Omega) on the double-coset basis.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const OmegaSet &omega);

  struct BasisOperator {
    int source_subgroup = 0; // H: columns xH
    int target_subgroup = 0; // K: rows yK
    int double_coset = 0;    // smallest element of H g K
    std::vector<std::pair<int, int>> entries; // (row, column) with value 1
  };

  int dimension() const { return static_cast<int>(basis_.size()); }
  int points() const { return points_; }
  const std::vector<BasisOperator> &basis() const { return basis_; }

  template <class Scalar> Matrix<Scalar> operator_matrix(int i, const CoefficientRing &ring) const {
    Matrix<Scalar> m = Matrix<Scalar>::Constant(points_, points_, scalar_from_integer<Scalar>(0, ring));
    for (const auto &[r, c] : basis_[i].entries) m(r, c) = scalar_from_integer<Scalar>(1, ring);
    return m;
  }
  template <class Scalar> Matrix<Scalar> identity(const CoefficientRing &ring) const {
    Matrix<Scalar> m = Matrix<Scalar>::Constant(points_, points_, scalar_from_integer<Scalar>(0, ring));
    for (int i = 0; i < points_; ++i) m(i, i) = scalar_from_integer<Scalar>(1, ring);
    return m;
  }
  /// Coordinates of m in the basis, or nullopt when m is not G-equivariant.
  template <class Scalar>
  std::optional<Vector<Scalar>> coordinates(const Matrix<Scalar> &m, const CoefficientRing &ring) const {
    Vector<Scalar> v = zero_vector<Scalar>(dimension(), ring);
    for (int i = 0; i < dimension(); ++i) {
      const auto &[r0, c0] = basis_[i].entries.front();
      v[i] = m(r0, c0);
      for (const auto &[r, c] : basis_[i].entries)
        if (!(m(r, c) == v[i])) return std::nullopt;
    }
    return v;
  }
  /// Structure constants of the basis operators under matrix product.
  const StructureConstants &structure() const { return structure_; }
  /// Integer matrix of basis operator i.
  Matrix<long> integer_operator(int i) const;
  template <class Scalar> Eigen::Index center_dimension(const CoefficientRing &ring) const {
    return commutant<Scalar>(structure_, ring).cols();
  }

private:
  int points_ = 0;
  std::vector<BasisOperator> basis_;
  StructureConstants structure_;
};

/// Permutation matrix of g acting on k Omega.
template <class Scalar> Matrix<Scalar> omega_action(const OmegaSet &omega, int g, const CoefficientRing &ring) {
  Matrix<Scalar> m = Matrix<Scalar>::Constant(omega.size(), omega.size(), scalar_from_integer<Scalar>(0, ring));
  for (int p = 0; p < omega.size(); ++p) m(omega.act(g, p), p) = scalar_from_integer<Scalar>(1, ring);
  return m;
}

/// First basis pair (i, j) with project(b_i b_j) != project(b_i) project(b_j). The check
/// runs over the integers, which settles it for every coefficient ring at once.
std::optional<std::pair<int, int>> projection_defect(const MackeyAlgebra &m);

} // namespace motive
