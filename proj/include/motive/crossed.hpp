#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "motive/burnside.hpp"
#include "motive/center.hpp"

namespace motive {

/// Orbit representative of a pair (H, a) with a in C_G(H), under simultaneous conjugation.
struct CrossedPairClass {
  int subgroup_class = 0;
  /// least element index in the N_G(H)-orbit of a, H the class representative
  int label = 0;
  /// the G-orbit as (index into all_subgroups(), label) pairs, sorted
  std::vector<std::pair<int, int>> orbit;
};

template <class Scalar> struct CrossedElement {
  CoefficientRing ring;
  Vector<Scalar> coefficients;

  friend bool operator==(const CrossedElement &a, const CrossedElement &b) {
    return a.ring == b.ring && a.coefficients == b.coefficients;
  }
};

/// One central element of k C_G(H) per subgroup class H, stored over all of G.
template <class Scalar> struct CrossedGhostVector {
  CoefficientRing ring;
  std::vector<Vector<Scalar>> components;

  friend bool operator==(const CrossedGhostVector &a, const CrossedGhostVector &b) {
    return a.ring == b.ring && a.components == b.components;
  }
};

/// Crossed Burnside ring B^c_k(G) on the basis [H, a]_G.
class CrossedBurnsideRing {
public:
  explicit CrossedBurnsideRing(std::shared_ptr<const BurnsideRing> burnside);

  const BurnsideRing &burnside() const { return *burnside_; }
  const SubgroupClassTable &classes() const { return burnside_->classes(); }
  const FiniteGroup &group() const { return classes().group(); }
  const CenterAlgebra &center() const { return center_; }

  const std::vector<CrossedPairClass> &basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Basis index of the class of (K, b); b must centralize K.
  int fuse(const Subgroup &k, int b) const;
  /// Index of [H, e] for subgroup class H.
  int untwisted(int subgroup_class) const { return untwisted_[subgroup_class]; }
  /// "[C2#1,(1,2)]"
  std::string basis_name(int i) const;
  int basis_by_name(const std::string &name) const;

  const StructureConstants &structure() const { return structure_; }
  /// Literal product crossed G-set G/H x G/K, decomposed into orbits; test oracle.
  std::vector<StructureConstants::Term> product_by_orbits(int i, int j) const;

  template <class Scalar> CrossedElement<Scalar> basis_element(int i, const CoefficientRing &ring) const {
    CrossedElement<Scalar> e{ring, zero_vector<Scalar>(dimension(), ring)};
    e.coefficients[i] = scalar_from_integer<Scalar>(1, ring);
    return e;
  }
  template <class Scalar> CrossedElement<Scalar> one(const CoefficientRing &ring) const {
    return basis_element<Scalar>(untwisted(classes().size() - 1), ring);
  }
  template <class Scalar> CrossedElement<Scalar> zero(const CoefficientRing &ring) const {
    return {ring, zero_vector<Scalar>(dimension(), ring)};
  }

  template <class Scalar>
  CrossedElement<Scalar> multiply(const CrossedElement<Scalar> &x, const CrossedElement<Scalar> &y) const {
    require_same_ring(x.ring, y.ring);
    return {x.ring, structure_.multiply(x.coefficients, y.coefficients, x.ring)};
  }

  /// Forgets labels: [H, a] -> [G/H].
  template <class Scalar> BurnsideElement<Scalar> alpha(const CrossedElement<Scalar> &x) const {
    BurnsideElement<Scalar> b = burnside_->zero<Scalar>(x.ring);
    for (int i = 0; i < dimension(); ++i) b.coefficients[basis_[i].subgroup_class] += x.coefficients[i];
    return b;
  }
  /// [G/H] -> [H, e].
  template <class Scalar> CrossedElement<Scalar> iota(const BurnsideElement<Scalar> &b) const {
    CrossedElement<Scalar> x = zero<Scalar>(b.ring);
    for (int h = 0; h < classes().size(); ++h) x.coefficients[untwisted_[h]] = b.coefficients[h];
    return x;
  }

  /// phi_H([D, s]) = sum over gD in (G/D)^H of g s g^-1, for every class H.
  template <class Scalar> CrossedGhostVector<Scalar> crossed_marks(const CrossedElement<Scalar> &x) const {
    CrossedGhostVector<Scalar> out = zero_ghost<Scalar>(x.ring);
    for (int i = 0; i < dimension(); ++i) {
      if (is_zero(x.coefficients[i])) continue;
      for (int h = 0; h < classes().size(); ++h)
        for (const auto &[element, count] : marks_[i][h])
          out.components[h][element] += scalar_from_integer<Scalar>(count, x.ring) * x.coefficients[i];
    }
    return out;
  }

  /// rho = phi_1, read in Z kG.
  template <class Scalar> CenterElement<Scalar> rho(const CrossedElement<Scalar> &x) const {
    const Vector<Scalar> v = crossed_marks(x).components[0];
    auto z = center_.from_group_algebra(v, x.ring);
    if (!z) throw std::logic_error("rho image is not central");
    return *z;
  }

  template <class Scalar> CrossedGhostVector<Scalar> zero_ghost(const CoefficientRing &ring) const {
    return {ring, std::vector<Vector<Scalar>>(classes().size(), zero_vector<Scalar>(group().size(), ring))};
  }
  /// Componentwise product in the group algebras k C_G(H).
  template <class Scalar>
  CrossedGhostVector<Scalar> ghost_multiply(const CrossedGhostVector<Scalar> &a, const CrossedGhostVector<Scalar> &b) const {
    require_same_ring(a.ring, b.ring);
    CrossedGhostVector<Scalar> out{a.ring, {}};
    for (std::size_t h = 0; h < a.components.size(); ++h)
      out.components.push_back(convolve(group(), a.components[h], b.components[h]));
    return out;
  }
  /// Componentwise augmentation.
  template <class Scalar> Vector<Scalar> ghost_alpha(const CrossedGhostVector<Scalar> &a) const {
    Vector<Scalar> out = zero_vector<Scalar>(classes().size(), a.ring);
    for (int h = 0; h < classes().size(); ++h) out[h] = augmentation(a.components[h]);
    return out;
  }
  /// y -> (y_H * e)_H
  template <class Scalar> CrossedGhostVector<Scalar> ghost_iota(const Vector<Scalar> &y, const CoefficientRing &ring) const {
    CrossedGhostVector<Scalar> out = zero_ghost<Scalar>(ring);
    for (int h = 0; h < classes().size(); ++h) out.components[h][group().identity()] = y[h];
    return out;
  }
  /// Support in C_G(H), centrality there, and invariance under N_G(H).
  template <class Scalar> bool is_ghost_fixed(const CrossedGhostVector<Scalar> &a) const {
    const FiniteGroup &g = group();
    for (int h = 0; h < classes().size(); ++h) {
      const auto &c = classes()[h];
      const auto &v = a.components[h];
      for (int x = 0; x < g.size(); ++x)
        if (!c.centralizer.contains(x) && !is_zero(v[x])) return false;
      for (int n : generating_set(g, c.normalizer))
        for (int x = 0; x < g.size(); ++x)
          if (!(v[g.conj(n, x)] == v[x])) return false;
    }
    return true;
  }

private:
  std::shared_ptr<const BurnsideRing> burnside_;
  CenterAlgebra center_;
  std::vector<CrossedPairClass> basis_;
  /// label_index_[class][element] = basis index of [rep, element], -1 off the centralizer
  std::vector<std::vector<int>> label_index_;
  std::vector<int> untwisted_;
  StructureConstants structure_;
  /// marks_[basis][class] = sparse phi_H([D, s]) as (element, count)
  std::vector<std::vector<std::vector<std::pair<int, long>>>> marks_;
};

struct CrossedIdempotent {
  int residual_class = 0;
  CrossedElement<Rational> element;
};

/// iota(f_J) for J in C^inf(G); verified idempotent, orthogonal, summing to 1.
std::vector<CrossedIdempotent> integral_idempotents(const CrossedBurnsideRing &ring);

/// Every 0/1 ghost vector pulled back through the marks; the integral ones, mapped by
/// iota, reduced to the minimal nonzero idempotents. Limited to 14 subgroup classes.
std::vector<CrossedElement<Rational>> idempotent_oracle(const CrossedBurnsideRing &ring);

/// Rank of the ideal e * B^c(G); e an idempotent over a characteristic-zero ring.
Eigen::Index ideal_rank(const CrossedBurnsideRing &ring, const CrossedElement<Rational> &e);
Eigen::Index ideal_rank(const BurnsideRing &ring, const BurnsideElement<Rational> &e);

struct PLocalSummand {
  int residual_class = 0;
  std::vector<int> fiber;
  CrossedElement<Rational> idempotent;
  Eigen::Index rank = 0;
  std::uint64_t weyl_order = 0;
  Eigen::Index weyl_rank = 0;
  /// Same comparison at the level of Burnside rings.
  Eigen::Index burnside_rank = 0;
  Eigen::Index weyl_burnside_rank = 0;
};

struct PLocalReport {
  int prime = 0;
  bool idempotent = true;
  bool orthogonal = true;
  bool complete = true;
  std::vector<PLocalSummand> summands;

  bool ranks_agree() const;
  bool burnside_ranks_agree() const;
};

PLocalReport p_local_report(const CrossedBurnsideRing &ring, int p);

/// Convenience constructor from a group.
std::shared_ptr<const CrossedBurnsideRing> make_crossed_ring(const FiniteGroup &g);

} // namespace motive
