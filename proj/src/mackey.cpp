#include "motive/mackey.hpp"

#include <algorithm>

namespace motive {

OmegaSet::OmegaSet(std::shared_ptr<const SubgroupClassTable> table)
    : table_(std::move(table)), order_(table_->group().size()) {
  const FiniteGroup &g = table_->group();
  for (std::size_t s = 0; s < table_->all_subgroups().size(); ++s) {
    offsets_.push_back(size());
    cosets_.push_back(left_cosets(g, table_->all_subgroups()[s]));
    for (int rep : cosets_.back().representatives) {
      subgroup_of_.push_back(static_cast<int>(s));
      representative_.push_back(rep);
    }
  }
  action_.resize(static_cast<std::size_t>(size()) * order_);
  for (int p = 0; p < size(); ++p)
    for (int x = 0; x < order_; ++x)
      action_[static_cast<std::size_t>(p) * order_ + x] = point(subgroup_of_[p], g.mul(x, representative_[p]));
}

bool OmegaSet::fixed_by(const std::vector<int> &generators, int pt) const {
  return std::all_of(generators.begin(), generators.end(), [&](int s) { return act(s, pt) == pt; });
}

std::string OmegaSet::point_name(int p) const {
  return "(" + std::to_string(subgroup_of_[p]) + "," + table_->group().element_string(representative_[p]) + ")";
}

namespace {

std::uint64_t span_key(int cls, int x, int y, int points) {
  return (static_cast<std::uint64_t>(cls) * points + x) * points + y;
}

} // namespace

MackeyAlgebra::MackeyAlgebra(std::shared_ptr<const CrossedBurnsideRing> crossed, std::uint64_t max_order)
    : crossed_(std::move(crossed)), omega_(crossed_->burnside().class_table()) {
  const FiniteGroup &g = group();
  const SubgroupClassTable &t = classes();
  if (g.order() > max_order) throw group_too_large("span bound", max_order, g.order());
  const int n = omega_.size();

  // basis: N_G(S)-orbits on (Omega x Omega)^S for each class representative S
  for (int s = 0; s < t.size(); ++s) {
    const auto gens = generating_set(g, t[s].representative);
    std::vector<int> fixed;
    for (int p = 0; p < n; ++p)
      if (omega_.fixed_by(gens, p)) fixed.push_back(p);
    for (int x : fixed)
      for (int y : fixed) {
        if (index_.count(span_key(s, x, y, n))) continue;
        const int index = dimension();
        basis_.push_back({s, x, y});
        for (int m : t[s].normalizer.elements()) index_[span_key(s, omega_.act(m, x), omega_.act(m, y), n)] = index;
      }
    class_cosets_.push_back(left_cosets(g, t[s].representative));
  }
  if (basis_.size() > kMaxSpanDimension)
    throw group_too_large("span dimension bound", kMaxSpanDimension, basis_.size());

  structure_ = StructureConstants(dimension());
  for (int i = 0; i < dimension(); ++i)
    for (int j = 0; j < dimension(); ++j)
      if (basis_[j].target == basis_[i].source ||
          omega_.subgroup_of(basis_[j].target) == omega_.subgroup_of(basis_[i].source))
        structure_.set_product(i, j, compose_basis(i, j));

  identity_ = zero_vector<Rational>(dimension(), CoefficientRing::integers());
  for (std::size_t h = 0; h < t.all_subgroups().size(); ++h) {
    const int p = omega_.point(static_cast<int>(h), g.identity());
    identity_[canonical(t.all_subgroups()[h], p, p)] += 1;
  }

  projection_.resize(dimension());
  for (int i = 0; i < dimension(); ++i)
    for (int rep : class_cosets_[basis_[i].stabilizer_class].representatives)
      projection_[i].emplace_back(omega_.act(rep, basis_[i].target), omega_.act(rep, basis_[i].source));

  // zeta([L,a]) = sum_U sum_{w in L\G/U} t^U_S c_{w^-1 a w} r^U_S,  S = w^-1 L w cap U
  const auto &subs = t.all_subgroups();
  for (const auto &pair : crossed_->basis()) {
    Vector<Rational> z = zero_vector<Rational>(dimension(), CoefficientRing::integers());
    const Subgroup &l = t[pair.subgroup_class].representative;
    for (std::size_t u = 0; u < subs.size(); ++u)
      for (int w : coset_geometry(g, l, subs[u]).double_coset_representatives) {
        const int wi = g.inv(w);
        const int s = t.subgroup_index(intersection(conjugate(g, l, wi), subs[u]));
        const int ui = static_cast<int>(u);
        z += word({restriction(ui, s), conjugation(s, g.conj(wi, pair.label)), transfer(ui, s)});
      }
    zeta_.push_back(std::move(z));
  }

  // iota_k words t^H_{H cap gHg^-1} c_g r^H_{H cap g^-1Hg}, g over H\G/H
  for (std::size_t h = 0; h < subs.size(); ++h)
    for (int x : coset_geometry(g, subs[h], subs[h]).double_coset_representatives) {
      const int hi = static_cast<int>(h);
      const int inner = t.subgroup_index(intersection(subs[h], conjugate(g, subs[h], g.inv(x))));
      const int outer = t.subgroup_index(intersection(subs[h], conjugate(g, subs[h], x)));
      iota_words_.push_back({hi, x, word({restriction(hi, inner), conjugation(inner, x), transfer(hi, outer)})});
    }
}

int MackeyAlgebra::canonical(const Subgroup &s, int source, int target) const {
  const auto f = classes().fuse(s);
  auto it = index_.find(span_key(f.index, omega_.act(f.conjugator, source), omega_.act(f.conjugator, target),
                                 omega_.size()));
  if (it == index_.end()) throw std::invalid_argument("stabilizer does not fix the span's points");
  return it->second;
}

std::vector<StructureConstants::Term> MackeyAlgebra::compose_basis(int i, int j) const {
  const FiniteGroup &g = group();
  const SubgroupClassTable &t = classes();
  const auto &outer = basis_[i]; // applied second
  const auto &inner = basis_[j]; // applied first
  const Subgroup &s1 = t[outer.stabilizer_class].representative;
  const Subgroup &s2 = t[inner.stabilizer_class].representative;
  const CosetSpace &cosets = class_cosets_[inner.stabilizer_class];
  // pairs (hS2, S1) with h . target(inner) = source(outer), up to the S1 action
  std::vector<char> seen(cosets.size(), 0);
  std::vector<int> summands;
  for (int c = 0; c < cosets.size(); ++c) {
    const int h = cosets.representatives[c];
    if (seen[c] || omega_.act(h, inner.target) != outer.source) continue;
    for (int s : s1.elements()) seen[cosets.coset_of[g.mul(s, h)]] = 1;
    summands.push_back(canonical(intersection(s1, conjugate(g, s2, h)), omega_.act(h, inner.source), outer.target));
  }
  return collect_terms(summands);
}

int MackeyAlgebra::restriction(int u, int s) const {
  const FiniteGroup &g = group();
  const Subgroup &sub = classes().all_subgroups()[s];
  return canonical(sub, omega_.point(u, g.identity()), omega_.point(s, g.identity()));
}

int MackeyAlgebra::transfer(int u, int s) const {
  const FiniteGroup &g = group();
  const Subgroup &sub = classes().all_subgroups()[s];
  return canonical(sub, omega_.point(s, g.identity()), omega_.point(u, g.identity()));
}

int MackeyAlgebra::conjugation(int s, int x) const {
  const FiniteGroup &g = group();
  const SubgroupClassTable &t = classes();
  const Subgroup &sub = t.all_subgroups()[s];
  const int image = t.subgroup_index(conjugate(g, sub, x));
  // gS -> g x^-1 (xSx^-1)
  return canonical(sub, omega_.point(s, g.identity()), omega_.point(image, g.inv(x)));
}

Vector<Rational> MackeyAlgebra::word(const std::vector<int> &spans) const {
  const CoefficientRing z = CoefficientRing::integers();
  Vector<Rational> out = basis_element<Rational>(spans.front(), z).coefficients;
  for (std::size_t k = 1; k < spans.size(); ++k)
    out = structure_.multiply(basis_element<Rational>(spans[k], z).coefficients, out, z);
  return out;
}

HeckeAlgebra::HeckeAlgebra(const OmegaSet &omega) : points_(omega.size()) {
  const SubgroupClassTable &t = omega.classes();
  const FiniteGroup &g = t.group();
  const auto &subs = t.all_subgroups();
  std::vector<std::vector<int>> points_of(subs.size());
  for (int p = 0; p < points_; ++p) points_of[omega.subgroup_of(p)].push_back(p);
  for (std::size_t h = 0; h < subs.size(); ++h)
    for (std::size_t k = 0; k < subs.size(); ++k) {
      // relative position of xH and yK is the double coset H x^-1 y K
      std::vector<int> double_coset_of(g.size(), -1);
      const auto reps = coset_geometry(g, subs[h], subs[k]).double_coset_representatives;
      const int first = dimension();
      for (std::size_t d = 0; d < reps.size(); ++d) {
        basis_.push_back({static_cast<int>(h), static_cast<int>(k), reps[d], {}});
        for (int a : subs[h].elements())
          for (int b : subs[k].elements()) double_coset_of[g.mul(g.mul(a, reps[d]), b)] = static_cast<int>(d);
      }
      for (int col : points_of[h])
        for (int row : points_of[k]) {
          const int rel = g.mul(g.inv(omega.representative(col)), omega.representative(row));
          basis_[first + double_coset_of[rel]].entries.emplace_back(row, col);
        }
    }

  structure_ = StructureConstants(dimension());
  std::vector<Matrix<long>> ops;
  for (int i = 0; i < dimension(); ++i) ops.push_back(integer_operator(i));
  for (int i = 0; i < dimension(); ++i)
    for (int j = 0; j < dimension(); ++j) {
      if (basis_[i].source_subgroup != basis_[j].target_subgroup) continue;
      const Matrix<long> m = ops[i] * ops[j];
      std::vector<StructureConstants::Term> terms;
      for (int k = 0; k < dimension(); ++k) {
        const auto &[r, c] = basis_[k].entries.front();
        if (m(r, c)) terms.emplace_back(k, m(r, c));
      }
      structure_.set_product(i, j, std::move(terms));
    }
}

Matrix<long> HeckeAlgebra::integer_operator(int i) const {
  Matrix<long> m = Matrix<long>::Zero(points_, points_);
  for (const auto &[r, c] : basis_[i].entries) m(r, c) = 1;
  return m;
}

Matrix<long> MackeyAlgebra::integer_projection(int i) const {
  Matrix<long> m = Matrix<long>::Zero(omega_.size(), omega_.size());
  for (const auto &[r, c] : projection_[i]) m(r, c) += 1;
  return m;
}

std::optional<std::pair<int, int>> projection_defect(const MackeyAlgebra &m) {
  std::vector<Matrix<long>> p;
  for (int i = 0; i < m.dimension(); ++i) p.push_back(m.integer_projection(i));
  for (int i = 0; i < m.dimension(); ++i)
    for (int j = 0; j < m.dimension(); ++j) {
      Matrix<long> lhs = Matrix<long>::Zero(m.omega().size(), m.omega().size());
      for (const auto &[k, c] : m.structure().product(i, j)) lhs += c * p[k];
      if (lhs != p[i] * p[j]) return std::make_pair(i, j);
    }
  return std::nullopt;
}

} // namespace motive
