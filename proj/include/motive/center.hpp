#pragma once

#include <optional>
#include <vector>

#include "motive/linalg.hpp"
#include "motive/structure.hpp"
#include "motive/subgroups.hpp"

namespace motive {

/// Element of Z kG in class-sum coordinates.
template <class Scalar> struct CenterElement {
  CoefficientRing ring;
  Vector<Scalar> coordinates;

  friend bool operator==(const CenterElement &a, const CenterElement &b) {
    return a.ring == b.ring && a.coordinates == b.coordinates;
  }
};

/// Z kG on the basis of conjugacy-class sums, identity class first.
class CenterAlgebra {
public:
  explicit CenterAlgebra(FiniteGroup g);

  const FiniteGroup &group() const { return group_; }
  const std::vector<std::vector<int>> &classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }
  int dimension() const { return static_cast<int>(classes_.size()); }
  const StructureConstants &structure() const { return structure_; }

  template <class Scalar> CenterElement<Scalar> class_sum(int c, const CoefficientRing &ring) const {
    CenterElement<Scalar> e{ring, zero_vector<Scalar>(dimension(), ring)};
    e.coordinates[c] = scalar_from_integer<Scalar>(1, ring);
    return e;
  }
  template <class Scalar> std::vector<CenterElement<Scalar>> class_sums(const CoefficientRing &ring) const {
    std::vector<CenterElement<Scalar>> out;
    for (int c = 0; c < dimension(); ++c) out.push_back(class_sum<Scalar>(c, ring));
    return out;
  }
  template <class Scalar> CenterElement<Scalar> one(const CoefficientRing &ring) const {
    return class_sum<Scalar>(0, ring);
  }
  template <class Scalar> CenterElement<Scalar> zero(const CoefficientRing &ring) const {
    return {ring, zero_vector<Scalar>(dimension(), ring)};
  }

  template <class Scalar>
  CenterElement<Scalar> multiply(const CenterElement<Scalar> &x, const CenterElement<Scalar> &y) const {
    require_same_ring(x.ring, y.ring);
    return {x.ring, structure_.multiply(x.coordinates, y.coordinates, x.ring)};
  }

  /// Sum of coefficients of the underlying group-algebra element.
  template <class Scalar> Scalar augmentation(const CenterElement<Scalar> &x) const {
    Scalar s = scalar_from_integer<Scalar>(0, x.ring);
    for (int c = 0; c < dimension(); ++c)
      s += scalar_from_integer<Scalar>(static_cast<long>(classes_[c].size()), x.ring) * x.coordinates[c];
    return s;
  }

  /// Coefficients per group element.
  template <class Scalar> Vector<Scalar> to_group_algebra(const CenterElement<Scalar> &x) const {
    Vector<Scalar> v(group_.size());
    for (int g = 0; g < group_.size(); ++g) v[g] = x.coordinates[class_of_[g]];
    return v;
  }
  /// Inverse of to_group_algebra; nullopt when v is not constant on classes.
  template <class Scalar>
  std::optional<CenterElement<Scalar>> from_group_algebra(const Vector<Scalar> &v, const CoefficientRing &ring) const {
    CenterElement<Scalar> x{ring, zero_vector<Scalar>(dimension(), ring)};
    for (int c = 0; c < dimension(); ++c) {
      x.coordinates[c] = v[classes_[c].front()];
      for (int g : classes_[c])
        if (!(v[g] == x.coordinates[c])) return std::nullopt;
    }
    return x;
  }

private:
  FiniteGroup group_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  StructureConstants structure_;
};

/// Product in the group algebra kG on coefficient vectors indexed by elements.
template <class Scalar> Vector<Scalar> convolve(const FiniteGroup &g, const Vector<Scalar> &u, const Vector<Scalar> &v) {
  Vector<Scalar> out = u * Scalar(0);
  for (int a = 0; a < g.size(); ++a) {
    if (is_zero(u[a])) continue;
    for (int b = 0; b < g.size(); ++b)
      if (!is_zero(v[b])) out[g.mul(a, b)] += u[a] * v[b];
  }
  return out;
}

template <class Scalar> Scalar augmentation(const Vector<Scalar> &v) {
  Scalar s = v.size() ? v[0] * Scalar(0) : Scalar(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v[i];
  return s;
}

/// Smallest e such that every block of Z F_p G has residue field inside F_{p^e}.
int splitting_exponent(const CenterAlgebra &z, int p);

/// Primitive idempotents of Z F_q G (q = p^e). Without e, the splitting exponent is used.
/// Throws group_too_large("field bound", ...) when q would exceed 256.
std::vector<CenterElement<GF>> blocks_mod_p(const CenterAlgebra &z, int p, std::optional<int> e = std::nullopt);

/// Minimal nonzero idempotents of Z F_q G by scanning all q^dim elements.
/// Throws group_too_large("scan bound", ...) above 2^20 candidates.
std::vector<CenterElement<GF>> idempotents_by_scan(const CenterAlgebra &z, const CoefficientRing &field);

} // namespace motive
