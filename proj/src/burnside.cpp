#include "motive/burnside.hpp"

#include <stdexcept>

namespace motive {

void validate(const CoefficientRing &ring, const Vector<Rational> &coefficients) {
  for (Eigen::Index i = 0; i < coefficients.size(); ++i)
    if (!belongs_to(coefficients[i], ring))
      throw std::domain_error("coefficient " + to_string(coefficients[i]) + " is not in " + ring.name());
}

template <> Vector<GF> convert<GF>(const Vector<Rational> &v, const CoefficientRing &ring) {
  Vector<GF> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = reduce(v[i], ring.field());
  return out;
}

BurnsideRing::BurnsideRing(std::shared_ptr<const SubgroupClassTable> table)
    : table_(std::move(table)), structure_(table_->size()) {
  const FiniteGroup &g = table_->group();
  const int n = table_->size();
  marks_ = Matrix<long>::Zero(n, n);
  for (int h = 0; h < n; ++h)
    for (int u = h; u < n; ++u) {
      if (!table_->subconjugate(h, u)) continue;
      const auto geo = coset_geometry(g, (*table_)[h].representative, (*table_)[u].representative);
      marks_(h, u) = static_cast<long>(geo.fixed_cosets.size());
    }
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      const Subgroup &hs = (*table_)[h].representative;
      const Subgroup &ks = (*table_)[k].representative;
      std::vector<int> summands;
      for (int x : coset_geometry(g, hs, ks).double_coset_representatives)
        summands.push_back(table_->fuse(intersection(hs, conjugate(g, ks, x))).index);
      structure_.set_product(h, k, collect_terms(summands));
    }
}

BurnsideElement<Rational> BurnsideRing::from_ghost(const Vector<Rational> &ghost,
                                                   const CoefficientRing &ring) const {
  const Matrix<Rational> m = convert_integer_matrix<Rational>(marks_, ring);
  Vector<Rational> x = solve_upper_triangular(m, ghost);
  validate(ring, x);
  return {ring, std::move(x)};
}

std::vector<BurnsideElement<Rational>> rational_idempotents(const BurnsideRing &ring) {
  std::vector<BurnsideElement<Rational>> out;
  const int n = ring.dimension();
  for (int h = 0; h < n; ++h) {
    Vector<Rational> ghost = zero_vector<Rational>(n, CoefficientRing::rationals());
    ghost[h] = 1;
    out.push_back(ring.from_ghost(ghost, CoefficientRing::rationals()));
  }
  return out;
}

std::vector<DressIdempotent> dress_idempotents(const BurnsideRing &ring, ResidualMode mode) {
  const auto &classes = ring.classes();
  const CoefficientRing target =
      mode.is_solvable() ? CoefficientRing::integers() : CoefficientRing::p_local(mode.prime);
  std::vector<DressIdempotent> out;
  for (int j : classes.residual_fixed_classes(mode)) {
    DressIdempotent d;
    d.residual_class = j;
    Vector<Rational> ghost = zero_vector<Rational>(ring.dimension(), target);
    for (int h = 0; h < classes.size(); ++h)
      if (classes.residual_class(h, mode) == j) {
        d.fiber.push_back(h);
        ghost[h] = 1;
      }
    try {
      d.element = ring.from_ghost(ghost, target);
    } catch (const std::domain_error &e) {
      throw std::logic_error("Dress idempotent for " + classes[j].name + " left " + target.name() +
                             ": " + e.what());
    }
    out.push_back(std::move(d));
  }
  return out;
}

} // namespace motive
