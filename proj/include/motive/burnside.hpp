#pragma once

#include <memory>
#include <vector>

#include "motive/linalg.hpp"
#include "motive/structure.hpp"
#include "motive/subgroups.hpp"

namespace motive {

/// Linear combination of [G/H] over the subgroup classes.
template <class Scalar> struct BurnsideElement {
  CoefficientRing ring;
  Vector<Scalar> coefficients;

  friend bool operator==(const BurnsideElement &a, const BurnsideElement &b) {
    return a.ring == b.ring && a.coefficients == b.coefficients;
  }
};

/// Checks ring membership of every coefficient (integrality, p-locality).
void validate(const CoefficientRing &ring, const Vector<Rational> &coefficients);
inline void validate(const CoefficientRing &, const Vector<GF> &) {}

/// Rational coefficients read in another ring: same values, or reduced into F_q.
template <class Scalar> Vector<Scalar> convert(const Vector<Rational> &v, const CoefficientRing &ring);
template <> inline Vector<Rational> convert<Rational>(const Vector<Rational> &v, const CoefficientRing &ring) {
  validate(ring, v);
  return v;
}
template <> Vector<GF> convert<GF>(const Vector<Rational> &v, const CoefficientRing &ring);

/// Integer matrix read in the scalar ring.
template <class Scalar> Matrix<Scalar> convert_integer_matrix(const Matrix<long> &m, const CoefficientRing &ring) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_from_integer<Scalar>(m(i, j), ring);
  return out;
}

/// Burnside ring B_k(G) on the basis {[G/H] : H in the class table}.
class BurnsideRing {
public:
  explicit BurnsideRing(std::shared_ptr<const SubgroupClassTable> table);

  const SubgroupClassTable &classes() const { return *table_; }
  std::shared_ptr<const SubgroupClassTable> class_table() const { return table_; }
  int dimension() const { return table_->size(); }
  /// marks(H, U) = #{gU : H <= gUg^-1}; zero unless H is subconjugate to U.
  const Matrix<long> &marks() const { return marks_; }
  /// [G/H] [G/K] = sum over double cosets HgK of [G/(H cap gKg^-1)]
  const StructureConstants &structure() const { return structure_; }

  template <class Scalar> BurnsideElement<Scalar> basis_element(int i, const CoefficientRing &ring) const {
    BurnsideElement<Scalar> e{ring, zero_vector<Scalar>(dimension(), ring)};
    e.coefficients[i] = scalar_from_integer<Scalar>(1, ring);
    return e;
  }
  template <class Scalar> BurnsideElement<Scalar> one(const CoefficientRing &ring) const {
    return basis_element<Scalar>(dimension() - 1, ring);
  }
  template <class Scalar> BurnsideElement<Scalar> zero(const CoefficientRing &ring) const {
    return {ring, zero_vector<Scalar>(dimension(), ring)};
  }

  template <class Scalar>
  BurnsideElement<Scalar> multiply(const BurnsideElement<Scalar> &x, const BurnsideElement<Scalar> &y) const {
    require_same_ring(x.ring, y.ring);
    return {x.ring, structure_.multiply(x.coefficients, y.coefficients, x.ring)};
  }

  /// Ghost vector (phi_H(x))_H.
  template <class Scalar> Vector<Scalar> ghost(const BurnsideElement<Scalar> &x) const {
    return convert_integer_matrix<Scalar>(marks_, x.ring) * x.coefficients;
  }

  /// Inverse of the mark homomorphism over Q; the result is validated against ring.
  BurnsideElement<Rational> from_ghost(const Vector<Rational> &ghost, const CoefficientRing &ring) const;

private:
  std::shared_ptr<const SubgroupClassTable> table_;
  Matrix<long> marks_;
  StructureConstants structure_;
};

/// e^G_H: phi_K(e^G_H) = 1 if K is conjugate to H, else 0. Indexed like the class table.
std::vector<BurnsideElement<Rational>> rational_idempotents(const BurnsideRing &ring);

struct DressIdempotent {
  int residual_class = 0; // J
  std::vector<int> fiber; // classes H with residual(H) conjugate to J
  BurnsideElement<Rational> element;
};

/// f^G_J summed over residual fibers. Coefficients are integral (solvable mode) or
/// p-local (prime mode); a membership failure throws std::logic_error.
std::vector<DressIdempotent> dress_idempotents(const BurnsideRing &ring, ResidualMode mode);

} // namespace motive
