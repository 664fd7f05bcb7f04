#include "motive/checks.hpp"

#include <array>
#include <cmath>
#include <random>
#include <set>

namespace motive {

namespace {

const CoefficientRing kZ = CoefficientRing::integers();
const CoefficientRing kQ = CoefficientRing::rationals();

/// Index tuples: every tuple when there are at most `limit`, otherwise a seeded sample.
template <std::size_t N>
std::vector<std::array<int, N>> tuples(int n, bool exhaustive, const CheckOptions &options) {
  std::vector<std::array<int, N>> out;
  if (n == 0) return out;
  if (exhaustive) {
    std::array<int, N> t{};
    while (true) {
      out.push_back(t);
      std::size_t k = 0;
      while (k < N && ++t[k] == n) t[k++] = 0;
      if (k == N) break;
    }
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < options.samples; ++s) {
    std::array<int, N> t{};
    for (auto &v : t) v = pick(rng);
    out.push_back(t);
  }
  return out;
}

Check make(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

std::string pair_detail(int i, int j) { return "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")"; }

/// Runs f over the tuples and reports the first failing one.
template <std::size_t N, class F>
Check over_tuples(std::string name, const std::vector<std::array<int, N>> &ts, F &&f) {
  for (const auto &t : ts)
    if (!f(t)) {
      std::string d = "first failure at (";
      for (std::size_t k = 0; k < N; ++k) d += (k ? "," : "") + std::to_string(t[k]);
      return make(std::move(name), false, d + ")");
    }
  return make(std::move(name), true, std::to_string(ts.size()) + " cases");
}

std::string prime_suffix(int p) { return CoefficientRing::prime_field(p).name(); }

} // namespace

std::vector<StructureConstants::Term> burnside_product_by_orbits(const BurnsideRing &b, int h, int k) {
  const auto &t = b.classes();
  const auto &g = t.group();
  const auto ch = left_cosets(g, t[h].representative);
  const auto ck = left_cosets(g, t[k].representative);
  std::vector<char> seen(static_cast<std::size_t>(ch.size()) * ck.size(), 0);
  std::vector<int> summands;
  for (int i = 0; i < ch.size(); ++i)
    for (int j = 0; j < ck.size(); ++j) {
      if (seen[static_cast<std::size_t>(i) * ck.size() + j]) continue;
      ElementSet stab(g.size());
      for (int x = 0; x < g.size(); ++x) {
        const int a = ch.coset_of[g.mul(x, ch.representatives[i])];
        const int c = ck.coset_of[g.mul(x, ck.representatives[j])];
        seen[static_cast<std::size_t>(a) * ck.size() + c] = 1;
        if (a == i && c == j) stab.set(x);
      }
      summands.push_back(t.fuse(Subgroup(stab)).index);
    }
  return collect_terms(summands);
}

CheckList group_checks(const SubgroupClassTable &t) {
  const FiniteGroup &g = t.group();
  CheckList out;
  const auto &subs = t.all_subgroups();

  bool fusion = true;
  std::string fusion_detail;
  for (std::size_t s = 0; s < subs.size() && fusion; ++s) {
    const auto f = t.fuse(subs[s]);
    if (!(conjugate(g, subs[s], f.conjugator) == t[f.index].representative)) {
      fusion = false;
      fusion_detail = "conjugator fails for subgroup " + std::to_string(s);
    }
  }
  for (int i = 0; i < t.size() && fusion; ++i)
    for (int x = 0; x < g.size() && fusion; ++x)
      if (t.fuse(conjugate(g, t[i].representative, x)).index != i) {
        fusion = false;
        fusion_detail = "conjugate of " + t[i].name + " fuses elsewhere";
      }
  out.push_back(make("group.fusion", fusion, fusion_detail));

  bool ordering = true;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.subconjugate(i, j) && i > j) ordering = false;
  out.push_back(make("group.ordering_extends_subconjugacy", ordering));

  bool centralizers = true, normalizers = true;
  for (const auto &c : t.classes())
    for (int x = 0; x < g.size(); ++x) {
      bool commutes = true;
      for (int h : c.representative.elements()) commutes = commutes && g.mul(x, h) == g.mul(h, x);
      centralizers = centralizers && c.centralizer.contains(x) == commutes;
      normalizers = normalizers && c.normalizer.contains(x) == (conjugate(g, c.representative, x) == c.representative);
    }
  out.push_back(make("group.centralizers", centralizers));
  out.push_back(make("group.normalizers", normalizers));

  bool partition = true, fixed = true;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) {
      const auto geo = coset_geometry(g, t[i].representative, t[j].representative);
      int total = 0;
      for (int s : geo.double_coset_sizes) total += s;
      partition = partition && total == g.size();
      fixed = fixed && (geo.fixed_cosets.empty() || t.subconjugate(i, j));
      if (i == t.size() - 1) fixed = fixed && (geo.fixed_cosets.empty() == (j != t.size() - 1));
    }
  out.push_back(make("group.double_cosets_partition", partition));
  out.push_back(make("group.fixed_cosets", fixed));

  bool derived = true;
  std::string derived_detail;
  for (int i = 0; i < t.size(); ++i) {
    Subgroup h = t[i].representative;
    int steps = 0;
    while (true) {
      Subgroup d = derived_subgroup(g, h);
      if (d == h) break;
      h = std::move(d);
      ++steps;
    }
    const bool ok = steps <= std::log2(static_cast<double>(t[i].representative.order())) + 1e-9 &&
                    h == residual(g, t[i].representative, ResidualMode::solvable()) &&
                    t.fuse(h).index == t[i].solvable_residual;
    if (!ok && derived) derived_detail = t[i].name;
    derived = derived && ok;
  }
  out.push_back(make("group.derived_series", derived, derived_detail));

  for (int p : prime_divisors(g.order())) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < t.size(); ++i) {
      const Subgroup &h = t[i].representative;
      const Subgroup op = residual(g, h, ResidualMode::p(p));
      auto p_power = [&](int n) {
        while (n % p == 0) n /= p;
        return n == 1;
      };
      bool good = op.is_subgroup_of(h) && is_normal_in(g, op, h) && p_power(h.order() / op.order()) &&
                  t.fuse(op).index == t.residual_class(i, ResidualMode::p(p));
      for (const auto &n : subs)
        if (good && n.is_subgroup_of(h) && is_normal_in(g, n, h) && p_power(h.order() / n.order()))
          good = op.is_subgroup_of(n);
      if (!good && ok) detail = t[i].name;
      ok = ok && good;
    }
    out.push_back(make("group.p_residual." + std::to_string(p), ok, detail));
  }
  return out;
}

CheckList burnside_checks(const BurnsideRing &b, const CheckOptions &options) {
  const auto &t = b.classes();
  const int n = b.dimension();
  const long order = static_cast<long>(t.group().order());
  CheckList out;

  bool triangular = true, diagonal = true, first = true, last = true;
  for (int h = 0; h < n; ++h)
    for (int u = 0; u < n; ++u) {
      const long m = b.marks()(h, u);
      triangular = triangular && ((m != 0) == t.subconjugate(h, u)) && (m == 0 || h <= u);
      if (h == u) diagonal = diagonal && m == t[h].normalizer.order() / t[h].representative.order();
      if (h == 0) first = first && m == order / t[u].representative.order();
      if (u == n - 1) last = last && m == 1;
    }
  out.push_back(make("burnside.marks_triangular", triangular));
  out.push_back(make("burnside.marks_diagonal", diagonal, "diagonal entry |N_G(H)/H|"));
  out.push_back(make("burnside.marks_trivial_row", first));
  out.push_back(make("burnside.marks_full_column", last));

  const bool small = t.group().order() <= 24;
  out.push_back(over_tuples("burnside.product_orbit_oracle", tuples<2>(n, small, options), [&](auto p) {
    return b.structure().product(p[0], p[1]) == burnside_product_by_orbits(b, p[0], p[1]);
  }));
  out.push_back(over_tuples("burnside.marks_multiplicative", tuples<2>(n, true, options), [&](auto p) {
    const auto x = b.basis_element<Rational>(p[0], kZ), y = b.basis_element<Rational>(p[1], kZ);
    return b.ghost(b.multiply(x, y)) == b.ghost(x).cwiseProduct(b.ghost(y)) &&
           b.ghost(b.zero<Rational>(kZ)) == zero_vector<Rational>(n, kZ);
  }));

  const auto es = rational_idempotents(b);
  Vector<Rational> sum = zero_vector<Rational>(n, kQ);
  bool orthogonal = true;
  for (int i = 0; i < n; ++i) {
    sum += es[i].coefficients;
    for (int j = 0; j < n; ++j)
      orthogonal = orthogonal && b.multiply(es[i], es[j]).coefficients ==
                                     (i == j ? es[i].coefficients : zero_vector<Rational>(n, kQ));
  }
  out.push_back(make("burnside.rational_idempotents", orthogonal && sum == b.one<Rational>(kQ).coefficients));

  std::vector<ResidualMode> modes{ResidualMode::solvable()};
  for (int p : prime_divisors(t.group().order())) modes.push_back(ResidualMode::p(p));
  for (const auto &mode : modes) {
    const std::string name = mode.is_solvable() ? "burnside.dress_solvable" : "burnside.dress_p." + std::to_string(mode.prime);
    try {
      const auto fs = dress_idempotents(b, mode);
      bool ok = true;
      Vector<Rational> total = zero_vector<Rational>(n, kQ);
      for (const auto &f : fs) {
        total += f.element.coefficients;
        const auto ghost = b.ghost(f.element);
        for (int h = 0; h < n; ++h)
          ok = ok && ghost[h] == Rational(t.residual_class(h, mode) == f.residual_class ? 1 : 0);
        for (const auto &e : fs)
          ok = ok && b.multiply(f.element, e.element).coefficients ==
                         (&e == &f ? f.element.coefficients : zero_vector<Rational>(n, kQ));
      }
      out.push_back(make(name, ok && total == b.one<Rational>(kQ).coefficients,
                         std::to_string(fs.size()) + " idempotents"));
    } catch (const std::logic_error &e) {
      out.push_back(make(name, false, e.what()));
    }
  }
  return out;
}

CheckList crossed_checks(const CrossedBurnsideRing &c, const CheckOptions &options) {
  const BurnsideRing &b = c.burnside();
  const int n = c.dimension();
  const auto order = c.group().order();
  CheckList out;
  auto e = [&](int i) { return c.basis_element<Rational>(i, kZ); };

  out.push_back(over_tuples("crossed.associative", tuples<3>(n, order <= 12, options), [&](auto t) {
    return c.multiply(c.multiply(e(t[0]), e(t[1])), e(t[2])) == c.multiply(e(t[0]), c.multiply(e(t[1]), e(t[2])));
  }));
  out.push_back(over_tuples("crossed.commutative", tuples<2>(n, true, options),
                            [&](auto t) { return c.multiply(e(t[0]), e(t[1])) == c.multiply(e(t[1]), e(t[0])); }));
  out.push_back(over_tuples("crossed.unital", tuples<1>(n, true, options), [&](auto t) {
    return c.multiply(c.one<Rational>(kZ), e(t[0])) == e(t[0]);
  }));
  out.push_back(over_tuples("crossed.product_orbit_oracle", tuples<2>(n, order <= 24, options), [&](auto t) {
    return c.structure().product(t[0], t[1]) == c.product_by_orbits(t[0], t[1]);
  }));
  out.push_back(over_tuples("crossed.marks_multiplicative", tuples<2>(n, order <= 24, options), [&](auto t) {
    return c.crossed_marks(c.multiply(e(t[0]), e(t[1]))) ==
           c.ghost_multiply(c.crossed_marks(e(t[0])), c.crossed_marks(e(t[1])));
  }));

  // injectivity: the linear map to the crossed ghost ring has full column rank
  const int classes = c.classes().size(), points = c.group().size();
  Matrix<Rational> phi(classes * points, n);
  for (int i = 0; i < n; ++i) {
    const auto ghost = c.crossed_marks(e(i));
    for (int h = 0; h < classes; ++h) phi.block(h * points, i, points, 1) = ghost.components[h];
  }
  out.push_back(make("crossed.marks_injective", rank(phi) == n));
  out.push_back(over_tuples("crossed.marks_fixed", tuples<1>(n, true, options),
                            [&](auto t) { return c.is_ghost_fixed(c.crossed_marks(e(t[0]))); }));

  out.push_back(over_tuples("crossed.alpha_square", tuples<1>(n, true, options), [&](auto t) {
    return c.ghost_alpha(c.crossed_marks(e(t[0]))) == b.ghost(c.alpha(e(t[0])));
  }));
  out.push_back(over_tuples("crossed.iota_square", tuples<1>(b.dimension(), true, options), [&](auto t) {
    const auto x = b.basis_element<Rational>(t[0], kZ);
    return c.crossed_marks(c.iota(x)) == c.ghost_iota(b.ghost(x), kZ);
  }));
  out.push_back(over_tuples("crossed.alpha_iota_identity", tuples<1>(b.dimension(), true, options), [&](auto t) {
    const auto x = b.basis_element<Rational>(t[0], kZ);
    return c.alpha(c.iota(x)) == x;
  }));
  out.push_back(over_tuples("crossed.alpha_multiplicative", tuples<2>(n, true, options), [&](auto t) {
    return c.alpha(c.multiply(e(t[0]), e(t[1]))) == b.multiply(c.alpha(e(t[0])), c.alpha(e(t[1])));
  }));
  out.push_back(over_tuples("crossed.iota_multiplicative", tuples<2>(b.dimension(), true, options), [&](auto t) {
    const auto x = b.basis_element<Rational>(t[0], kZ), y = b.basis_element<Rational>(t[1], kZ);
    return c.iota(b.multiply(x, y)) == c.multiply(c.iota(x), c.iota(y));
  }));
  out.push_back(over_tuples("crossed.rho_multiplicative", tuples<2>(n, order <= 24, options), [&](auto t) {
    return c.rho(c.multiply(e(t[0]), e(t[1]))) == c.center().multiply(c.rho(e(t[0])), c.rho(e(t[1])));
  }));
  out.push_back(make("crossed.rho_unital", c.rho(c.one<Rational>(kZ)) == c.center().one<Rational>(kZ)));
  out.push_back(over_tuples("crossed.rho_augmentation", tuples<1>(n, true, options), [&](auto t) {
    const auto &h = c.classes()[c.basis()[t[0]].subgroup_class].representative;
    return c.center().augmentation(c.rho(e(t[0]))) == Rational(static_cast<long>(order) / h.order());
  }));

  const auto fs = integral_idempotents(c);
  bool corollary = true;
  for (const auto &f : fs) {
    const auto expected = f.residual_class == 0 ? c.center().one<Rational>(kZ) : c.center().zero<Rational>(kZ);
    corollary = corollary && c.rho(f.element) == expected;
  }
  out.push_back(make("crossed.rho_of_idempotents", corollary, std::to_string(fs.size()) + " idempotents"));

  if (c.classes().size() <= 14) {
    const auto oracle = idempotent_oracle(c);
    std::set<std::vector<std::string>> lhs, rhs;
    auto key = [](const CrossedElement<Rational> &x) {
      std::vector<std::string> k;
      for (Eigen::Index i = 0; i < x.coefficients.size(); ++i) k.push_back(to_string(x.coefficients[i]));
      return k;
    };
    for (const auto &f : fs) lhs.insert(key(f.element));
    for (const auto &x : oracle) rhs.insert(key(x));
    out.push_back(make("crossed.idempotents_match_oracle", lhs == rhs,
                       std::to_string(fs.size()) + " vs " + std::to_string(oracle.size())));
    // a ghost vector concentrated on identities comes from the Burnside ring
    bool lemma = true;
    for (const auto &x : oracle) {
      const auto ghost = c.crossed_marks(x);
      bool untwisted = true;
      for (const auto &comp : ghost.components)
        for (Eigen::Index g = 1; g < comp.size(); ++g) untwisted = untwisted && is_zero(comp[g]);
      if (untwisted) lemma = lemma && c.iota(c.alpha(x)) == x;
    }
    out.push_back(make("crossed.untwisted_ghost_lifts", lemma));
  }
  return out;
}

namespace {

template <class Scalar> bool rho_surjective(const CrossedBurnsideRing &c, const CoefficientRing &ring) {
  Matrix<Scalar> m(c.center().dimension(), c.dimension());
  for (int i = 0; i < c.dimension(); ++i) m.col(i) = c.rho(c.basis_element<Scalar>(i, ring)).coordinates;
  return rank(m) == c.center().dimension();
}

} // namespace

CheckList center_checks(const CrossedBurnsideRing &c, const CheckOptions &options) {
  const CenterAlgebra &z = c.center();
  const int n = z.dimension();
  CheckList out;
  auto cs = [&](int i) { return z.class_sum<Rational>(i, kZ); };
  out.push_back(over_tuples("center.convolution_oracle", tuples<2>(n, true, options), [&](auto t) {
    return z.to_group_algebra(z.multiply(cs(t[0]), cs(t[1]))) ==
           convolve(z.group(), z.to_group_algebra(cs(t[0])), z.to_group_algebra(cs(t[1])));
  }));
  out.push_back(over_tuples("center.associative", tuples<3>(n, true, options), [&](auto t) {
    return z.multiply(z.multiply(cs(t[0]), cs(t[1])), cs(t[2])) == z.multiply(cs(t[0]), z.multiply(cs(t[1]), cs(t[2])));
  }));
  out.push_back(over_tuples("center.commutative", tuples<2>(n, true, options),
                            [&](auto t) { return z.multiply(cs(t[0]), cs(t[1])) == z.multiply(cs(t[1]), cs(t[0])); }));
  out.push_back(over_tuples("center.unital", tuples<1>(n, true, options),
                            [&](auto t) { return z.multiply(z.one<Rational>(kZ), cs(t[0])) == cs(t[0]); }));
  out.push_back(over_tuples("center.augmentation_multiplicative", tuples<2>(n, true, options), [&](auto t) {
    return z.augmentation(z.multiply(cs(t[0]), cs(t[1]))) == z.augmentation(cs(t[0])) * z.augmentation(cs(t[1]));
  }));
  out.push_back(make("rho.surjective.Q", rho_surjective<Rational>(c, kQ)));
  for (int p : prime_divisors(c.group().order())) {
    out.push_back(make("rho.surjective." + prime_suffix(p), rho_surjective<GF>(c, CoefficientRing::prime_field(p))));
    for (auto &check : block_checks(c, p)) out.push_back(std::move(check));
  }
  return out;
}

CheckList block_checks(const CrossedBurnsideRing &c, int p, std::optional<int> exponent) {
  const CenterAlgebra &z = c.center();
  const auto blocks = blocks_mod_p(z, p, exponent);
  const CoefficientRing ring = blocks.front().ring;
  const std::string suffix = "." + ring.name();
  CheckList out;

  bool orthogonal = true;
  auto sum = z.zero<GF>(ring);
  for (const auto &e : blocks) {
    sum.coordinates += e.coordinates;
    for (const auto &f : blocks)
      orthogonal = orthogonal && z.multiply(e, f) == (&e == &f ? e : z.zero<GF>(ring));
  }
  out.push_back(make("blocks.orthogonal_idempotents" + suffix, orthogonal && sum == z.one<GF>(ring),
                     std::to_string(blocks.size()) + " blocks"));

  // primitive: as many blocks as the dimension of the Frobenius-fixed subalgebra
  const int q = ring.field().order();
  Matrix<GF> frob(z.dimension(), z.dimension());
  for (int j = 0; j < z.dimension(); ++j) {
    auto x = z.class_sum<GF>(j, ring);
    auto y = z.one<GF>(ring);
    for (int k = 0; k < q; ++k) y = z.multiply(y, x);
    frob.col(j) = y.coordinates - x.coordinates;
  }
  const auto fixed = z.dimension() - rank(frob);
  out.push_back(make("blocks.primitive" + suffix, static_cast<Eigen::Index>(blocks.size()) == fixed));

  try {
    const auto scanned = idempotents_by_scan(z, ring);
    out.push_back(make("blocks.scan_oracle" + suffix, scanned == blocks,
                       std::to_string(scanned.size()) + " by scan"));
  } catch (const group_too_large &) {
    // the scan is only an oracle for small centres
  }

  Matrix<GF> image(z.dimension(), c.dimension());
  for (int i = 0; i < c.dimension(); ++i) image.col(i) = c.rho(c.basis_element<GF>(i, ring)).coordinates;
  bool spanned = true;
  for (const auto &e : blocks) spanned = spanned && in_column_span(image, e.coordinates);
  out.push_back(make("blocks.in_rho_image" + suffix, spanned));
  return out;
}

std::uint64_t span_count_by_formula(const MackeyAlgebra &m) {
  const auto &t = m.classes();
  const FiniteGroup &g = m.group();
  const OmegaSet &omega = m.omega();
  std::uint64_t total = 0;
  for (int s = 0; s < t.size(); ++s) {
    const auto gens = generating_set(g, t[s].representative);
    std::vector<int> fixed;
    for (int pt = 0; pt < omega.size(); ++pt)
      if (omega.fixed_by(gens, pt)) fixed.push_back(pt);
    std::uint64_t sum = 0;
    for (int x : t[s].normalizer.elements()) {
      std::uint64_t f = 0;
      for (int pt : fixed) f += omega.act(x, pt) == pt;
      sum += f * f;
    }
    total += sum / static_cast<std::uint64_t>(t[s].normalizer.order());
  }
  return total;
}

namespace {

bool structure_associative(const StructureConstants &s, std::string &detail) {
  const int n = s.dimension();
  std::vector<long> lhs(n, 0), rhs(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto &[a, ca] : s.product(i, j))
          for (const auto &[b, cb] : s.product(a, k)) lhs[b] += ca * cb;
        for (const auto &[a, ca] : s.product(j, k))
          for (const auto &[b, cb] : s.product(i, a)) rhs[b] += ca * cb;
        if (lhs != rhs) {
          detail = "first failure at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          return false;
        }
      }
  return true;
}

template <class Scalar> CheckList mackey_checks_impl(const MackeyAlgebra &m, const CoefficientRing &ring) {
  const CrossedBurnsideRing &c = m.crossed();
  const CenterAlgebra &z = c.center();
  const HeckeAlgebra y(m.omega());
  const std::string suffix = "." + ring.name();
  CheckList out;
  auto span = [&](int i) { return m.basis_element<Scalar>(i, ring); };
  auto cross = [&](int i) { return c.basis_element<Scalar>(i, ring); };
  const CheckOptions all;

  out.push_back(make("mackey.span_count_formula", span_count_by_formula(m) == static_cast<std::uint64_t>(m.dimension()),
                     std::to_string(m.dimension()) + " spans"));
  std::string detail;
  out.push_back(make("mackey.compose_associative", structure_associative(m.structure(), detail), detail));
  out.push_back(over_tuples("mackey.compose_unital" + suffix, tuples<1>(m.dimension(), true, all), [&](auto t) {
    return m.compose(m.one<Scalar>(ring), span(t[0])) == span(t[0]) &&
           m.compose(span(t[0]), m.one<Scalar>(ring)) == span(t[0]);
  }));

  std::vector<SpanElement<Scalar>> zetas;
  for (int i = 0; i < c.dimension(); ++i) zetas.push_back(m.zeta(cross(i)));
  out.push_back(make("mackey.zeta_unital" + suffix, m.zeta(c.one<Scalar>(ring)) == m.one<Scalar>(ring)));
  out.push_back(over_tuples("mackey.zeta_multiplicative" + suffix, tuples<2>(c.dimension(), true, all), [&](auto t) {
    return m.compose(zetas[t[0]], zetas[t[1]]) == m.zeta(c.multiply(cross(t[0]), cross(t[1])));
  }));
  out.push_back([&] {
    for (int i = 0; i < c.dimension(); ++i)
      for (int k = 0; k < m.dimension(); ++k)
        if (!(m.compose(zetas[i], span(k)) == m.compose(span(k), zetas[i])))
          return make("mackey.zeta_central" + suffix, false, pair_detail(i, k));
    return make("mackey.zeta_central" + suffix, true);
  }());

  const auto defect = projection_defect(m);
  out.push_back(make("mackey.projection_multiplicative", !defect, defect ? pair_detail(defect->first, defect->second) : ""));
  out.push_back(make("mackey.projection_unital" + suffix, m.project(m.one<Scalar>(ring)) == y.identity<Scalar>(ring)));

  bool equivariant = true;
  for (int g : m.group().generator_indices()) {
    Matrix<long> a = Matrix<long>::Zero(m.omega().size(), m.omega().size());
    for (int p = 0; p < m.omega().size(); ++p) a(m.omega().act(g, p), p) = 1;
    for (int i = 0; i < y.dimension(); ++i) {
      const Matrix<long> op = y.integer_operator(i);
      equivariant = equivariant && op * a == a * op;
    }
  }
  out.push_back(make("hecke.equivariant", equivariant, std::to_string(y.dimension()) + " operators"));

  std::vector<Matrix<Scalar>> ops;
  for (int i = 0; i < y.dimension(); ++i) ops.push_back(y.operator_matrix<Scalar>(i, ring));
  out.push_back(make("mackey.iota_unital" + suffix, m.iota_k(z.one<Scalar>(ring)) == y.identity<Scalar>(ring)));
  out.push_back(over_tuples("mackey.iota_multiplicative" + suffix, tuples<2>(z.dimension(), true, all), [&](auto t) {
    const auto a = z.class_sum<Scalar>(t[0], ring), b = z.class_sum<Scalar>(t[1], ring);
    return m.iota_k(z.multiply(a, b)) == m.iota_k(a) * m.iota_k(b);
  }));
  out.push_back(over_tuples("mackey.iota_central" + suffix, tuples<1>(z.dimension(), true, all), [&](auto t) {
    const Matrix<Scalar> v = m.iota_k(z.class_sum<Scalar>(t[0], ring));
    if (!y.coordinates(v, ring)) return false;
    for (const auto &op : ops)
      if (!(v * op == op * v)) return false;
    return true;
  }));
  out.push_back(over_tuples("mackey.diagram" + suffix, tuples<1>(c.dimension(), true, all), [&](auto t) {
    return m.project(zetas[t[0]]) == m.iota_k(c.rho(cross(t[0])));
  }));

  const int points = m.omega().size();
  Matrix<Scalar> image(points * points, c.dimension());
  for (int i = 0; i < c.dimension(); ++i) {
    const Matrix<Scalar> p = m.project(zetas[i]);
    for (int r = 0; r < points; ++r)
      for (int col = 0; col < points; ++col) image(r * points + col, i) = p(r, col);
  }
  const auto image_rank = rank(image);
  const auto center_dim = y.center_dimension<Scalar>(ring);
  out.push_back(make("mackey.onto_hecke_center" + suffix, image_rank == center_dim,
                     std::to_string(image_rank) + " vs dim Z Y = " + std::to_string(center_dim)));
  return out;
}

template <class Scalar> Check zeta_surjectivity_impl(const MackeyAlgebra &m, const CoefficientRing &ring) {
  const CrossedBurnsideRing &c = m.crossed();
  Matrix<Scalar> image(m.dimension(), c.dimension());
  for (int i = 0; i < c.dimension(); ++i) image.col(i) = m.zeta(c.basis_element<Scalar>(i, ring)).coefficients;
  const auto r = rank(image);
  const auto d = m.center<Scalar>(ring).cols();
  return make("mackey.zeta_surjective." + ring.name(), r == d,
              "rank " + std::to_string(r) + " vs dim Z mu = " + std::to_string(d));
}

} // namespace

CheckList mackey_checks(const MackeyAlgebra &m, const CoefficientRing &ring) {
  if (ring.kind == RingKind::PrimeField) return mackey_checks_impl<GF>(m, ring);
  return mackey_checks_impl<Rational>(m, ring);
}

Check zeta_surjectivity(const MackeyAlgebra &m, const CoefficientRing &ring) {
  if (ring.kind == RingKind::PrimeField) return zeta_surjectivity_impl<GF>(m, ring);
  return zeta_surjectivity_impl<Rational>(m, ring);
}

} // namespace motive
