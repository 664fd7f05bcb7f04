#include "motive/crossed.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace motive {

CrossedBurnsideRing::CrossedBurnsideRing(std::shared_ptr<const BurnsideRing> burnside)
    : burnside_(std::move(burnside)), center_(burnside_->classes().group()) {
  const SubgroupClassTable &t = classes();
  const FiniteGroup &g = group();
  label_index_.assign(t.size(), std::vector<int>(g.size(), -1));
  untwisted_.assign(t.size(), -1);
  for (int h = 0; h < t.size(); ++h) {
    const auto &c = t[h];
    for (int a : c.centralizer.elements()) {
      if (label_index_[h][a] >= 0) continue;
      const int index = dimension();
      for (int n : c.normalizer.elements()) label_index_[h][g.conj(n, a)] = index;
      CrossedPairClass pair{h, a, {}};
      for (int x = 0; x < g.size(); ++x)
        pair.orbit.emplace_back(t.subgroup_index(conjugate(g, c.representative, x)), g.conj(x, a));
      std::sort(pair.orbit.begin(), pair.orbit.end());
      pair.orbit.erase(std::unique(pair.orbit.begin(), pair.orbit.end()), pair.orbit.end());
      basis_.push_back(std::move(pair));
    }
    untwisted_[h] = label_index_[h][g.identity()];
  }

  structure_ = StructureConstants(dimension());
  for (int i = 0; i < dimension(); ++i)
    for (int j = 0; j < dimension(); ++j) {
      const Subgroup &hs = t[basis_[i].subgroup_class].representative;
      const Subgroup &ks = t[basis_[j].subgroup_class].representative;
      std::vector<int> summands;
      // [H,a][K,b] = sum over HxK of [H cap xKx^-1, a . xbx^-1]
      for (int x : coset_geometry(g, hs, ks).double_coset_representatives)
        summands.push_back(fuse(intersection(hs, conjugate(g, ks, x)),
                                g.mul(basis_[i].label, g.conj(x, basis_[j].label))));
      structure_.set_product(i, j, collect_terms(summands));
    }

  marks_.assign(dimension(), std::vector<std::vector<std::pair<int, long>>>(t.size()));
  for (int i = 0; i < dimension(); ++i) {
    const int d = basis_[i].subgroup_class;
    for (int h = 0; h <= d; ++h) {
      if (!t.subconjugate(h, d)) continue;
      std::map<int, long> sum;
      for (int x : coset_geometry(g, t[h].representative, t[d].representative).fixed_cosets)
        ++sum[g.conj(x, basis_[i].label)];
      marks_[i][h].assign(sum.begin(), sum.end());
    }
  }
}

int CrossedBurnsideRing::fuse(const Subgroup &k, int b) const {
  const auto f = classes().fuse(k);
  const int index = label_index_[f.index][group().conj(f.conjugator, b)];
  if (index < 0) throw std::invalid_argument("label does not centralize the subgroup");
  return index;
}

std::string CrossedBurnsideRing::basis_name(int i) const {
  return "[" + classes()[basis_[i].subgroup_class].name + "," + group().element_string(basis_[i].label) + "]";
}

int CrossedBurnsideRing::basis_by_name(const std::string &name) const {
  for (int i = 0; i < dimension(); ++i)
    if (basis_name(i) == name) return i;
  throw std::invalid_argument("unknown crossed basis element: " + name);
}

std::vector<StructureConstants::Term> CrossedBurnsideRing::product_by_orbits(int i, int j) const {
  const SubgroupClassTable &t = classes();
  const FiniteGroup &g = group();
  const auto ch = left_cosets(g, t[basis_[i].subgroup_class].representative);
  const auto ck = left_cosets(g, t[basis_[j].subgroup_class].representative);
  std::vector<char> seen(static_cast<std::size_t>(ch.size()) * ck.size(), 0);
  std::vector<int> summands;
  for (int u = 0; u < ch.size(); ++u)
    for (int v = 0; v < ck.size(); ++v) {
      if (seen[static_cast<std::size_t>(u) * ck.size() + v]) continue;
      ElementSet stabilizer(g.size());
      for (int x = 0; x < g.size(); ++x) {
        const int a = ch.coset_of[g.mul(x, ch.representatives[u])];
        const int b = ck.coset_of[g.mul(x, ck.representatives[v])];
        seen[static_cast<std::size_t>(a) * ck.size() + b] = 1;
        if (a == u && b == v) stabilizer.set(x);
      }
      // pointwise product of the labels x a x^-1 on xH and y b y^-1 on yK
      const int label = g.mul(g.conj(ch.representatives[u], basis_[i].label),
                              g.conj(ck.representatives[v], basis_[j].label));
      summands.push_back(fuse(Subgroup(stabilizer), label));
    }
  return collect_terms(summands);
}

namespace {

void verify_decomposition(const CrossedBurnsideRing &ring, const std::vector<CrossedElement<Rational>> &es) {
  if (es.empty()) throw std::logic_error("empty idempotent decomposition");
  auto sum = ring.zero<Rational>(es.front().ring);
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum.coefficients += es[i].coefficients;
    for (std::size_t j = 0; j < es.size(); ++j) {
      const auto p = ring.multiply(es[i], es[j]);
      if (!(i == j ? p == es[i] : p == ring.zero<Rational>(p.ring)))
        throw std::logic_error("idempotent decomposition is not orthogonal");
    }
  }
  if (!(sum == ring.one<Rational>(sum.ring))) throw std::logic_error("idempotents do not sum to 1");
}

} // namespace

std::vector<CrossedIdempotent> integral_idempotents(const CrossedBurnsideRing &ring) {
  std::vector<CrossedIdempotent> out;
  std::vector<CrossedElement<Rational>> elements;
  for (const auto &f : dress_idempotents(ring.burnside(), ResidualMode::solvable())) {
    out.push_back({f.residual_class, ring.iota(f.element)});
    elements.push_back(out.back().element);
  }
  verify_decomposition(ring, elements);
  return out;
}

std::vector<CrossedElement<Rational>> idempotent_oracle(const CrossedBurnsideRing &ring) {
  const BurnsideRing &b = ring.burnside();
  const int n = b.dimension();
  if (n > 14) throw group_too_large("class-count bound", 14, static_cast<std::uint64_t>(n));
  const CoefficientRing z = CoefficientRing::integers();
  const Matrix<Rational> marks = convert_integer_matrix<Rational>(b.marks(), CoefficientRing::rationals());
  std::vector<std::pair<std::uint32_t, CrossedElement<Rational>>> candidates;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Vector<Rational> ghost(n);
    for (int h = 0; h < n; ++h) ghost[h] = (mask >> h) & 1u;
    const Vector<Rational> x = solve_upper_triangular(marks, ghost);
    bool integral = true;
    for (int h = 0; h < n && integral; ++h) integral = belongs_to(x[h], z);
    if (integral) candidates.emplace_back(mask, ring.iota(BurnsideElement<Rational>{z, x}));
  }
  std::vector<CrossedElement<Rational>> out;
  for (const auto &[mask, e] : candidates) {
    if (!(ring.multiply(e, e) == e)) throw std::logic_error("pulled-back 0/1 ghost vector is not idempotent");
    bool minimal = true;
    for (const auto &[other, f] : candidates)
      if (other != mask && ring.multiply(e, f) == f) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(e);
  }
  // canonical order: by the lowest class on which the ghost vector is 1
  auto lowest = [&](const CrossedElement<Rational> &e) {
    const Vector<Rational> g = b.ghost(ring.alpha(e));
    for (int h = 0; h < n; ++h)
      if (!is_zero(g[h])) return h;
    return n;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto &a, const auto &c) { return lowest(a) < lowest(c); });
  return out;
}

Eigen::Index ideal_rank(const CrossedBurnsideRing &ring, const CrossedElement<Rational> &e) {
  return rank(ring.structure().left_multiplication(e.coefficients, CoefficientRing::rationals()));
}

Eigen::Index ideal_rank(const BurnsideRing &ring, const BurnsideElement<Rational> &e) {
  return rank(ring.structure().left_multiplication(e.coefficients, CoefficientRing::rationals()));
}

bool PLocalReport::ranks_agree() const {
  return std::all_of(summands.begin(), summands.end(), [](const auto &s) { return s.rank == s.weyl_rank; });
}

bool PLocalReport::burnside_ranks_agree() const {
  return std::all_of(summands.begin(), summands.end(),
                     [](const auto &s) { return s.burnside_rank == s.weyl_burnside_rank; });
}

PLocalReport p_local_report(const CrossedBurnsideRing &ring, int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  const SubgroupClassTable &t = ring.classes();
  const FiniteGroup &g = ring.group();
  const ResidualMode mode = ResidualMode::p(p);
  PLocalReport report;
  report.prime = p;
  auto sum = ring.zero<Rational>(CoefficientRing::p_local(p));
  std::vector<CrossedElement<Rational>> es;
  for (const auto &f : dress_idempotents(ring.burnside(), mode)) {
    PLocalSummand s;
    s.residual_class = f.residual_class;
    s.fiber = f.fiber;
    s.idempotent = ring.iota(f.element);
    s.rank = ideal_rank(ring, s.idempotent);
    s.burnside_rank = ideal_rank(ring.burnside(), f.element);

    const auto &j = t[f.residual_class];
    const auto weyl = make_crossed_ring(quotient_group(g, j.normalizer, j.representative).group);
    s.weyl_order = weyl->group().order();
    const auto weyl_dress = dress_idempotents(weyl->burnside(), mode);
    // the class of the trivial subgroup is always first and always p-perfect
    const auto &f1 = weyl_dress.front();
    s.weyl_rank = ideal_rank(*weyl, weyl->iota(f1.element));
    s.weyl_burnside_rank = ideal_rank(weyl->burnside(), f1.element);

    sum.coefficients += s.idempotent.coefficients;
    es.push_back(s.idempotent);
    report.summands.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b) {
      const auto prod = ring.multiply(es[a], es[b]);
      if (a == b && !(prod == es[a])) report.idempotent = false;
      if (a != b && !(prod == ring.zero<Rational>(prod.ring))) report.orthogonal = false;
    }
  report.complete = sum == ring.one<Rational>(sum.ring);
  return report;
}

std::shared_ptr<const CrossedBurnsideRing> make_crossed_ring(const FiniteGroup &g) {
  auto table = std::make_shared<const SubgroupClassTable>(SubgroupClassTable::compute(g));
  auto burnside = std::make_shared<const BurnsideRing>(std::move(table));
  return std::make_shared<const CrossedBurnsideRing>(std::move(burnside));
}

} // namespace motive
