#include "motive/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "motive/scalar.hpp"

namespace motive {

namespace {

bool is_power_of(int n, int p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

std::string abelian_hint(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> divisors;
  for (int p : prime_divisors(h.order())) {
    // c[k] = log_p #{x in the Sylow p-part : x^(p^k) = 1}
    std::vector<int> c{0};
    for (int pk = p;; pk *= p) {
      int count = 0;
      for (int x : h.elements()) {
        const int o = g.element_order(x);
        if (is_power_of(o, p) && pk % o == 0) ++count;
      }
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == c.back()) break;
      c.push_back(lg);
    }
    // parts with size >= k: c[k] - c[k-1]; expand to the partition
    std::vector<int> atleast;
    for (std::size_t k = 1; k < c.size(); ++k) atleast.push_back(c[k] - c[k - 1]);
    const int parts = atleast.empty() ? 0 : atleast[0];
    for (int i = 0; i < parts; ++i) {
      int size = 0;
      for (int a : atleast)
        if (a > i) ++size;
      int d = 1;
      for (int s = 0; s < size; ++s) d *= p;
      divisors.push_back(d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  std::string out;
  for (int d : divisors) out += (out.empty() ? "C" : "xC") + std::to_string(d);
  return out;
}

std::string type_hint(const FiniteGroup &g, const Subgroup &h) {
  const int n = h.order();
  if (n == 1) return "1";
  int max_order = 1, involutions = 0;
  for (int x : h.elements()) {
    max_order = std::max(max_order, g.element_order(x));
    if (g.element_order(x) == 2) ++involutions;
  }
  if (max_order == n) return "C" + std::to_string(n);
  if (is_abelian(g, h)) return n == 4 ? "V4" : abelian_hint(g, h);
  if (n % 2 == 0 && max_order == n / 2) {
    for (int r : h.elements()) {
      if (g.element_order(r) != n / 2) continue;
      for (int s : h.elements())
        if (g.element_order(s) == 2 && g.conj(s, r) == g.inv(r)) return n == 6 ? "S3" : "D" + std::to_string(n);
    }
  }
  if (n == 8) return "Q8";
  if (n == 12 && max_order == 3) return "A4";
  if (n == 24 && max_order == 4 && involutions == 9) return "S4";
  const Subgroup d = derived_subgroup(g, h);
  if (n == 60 && d.order() == 60) return "A5";
  if (n == 120 && d.order() == 60 && derived_subgroup(g, d).order() == 60 && involutions == 25) return "S5";
  return "G" + std::to_string(n);
}

} // namespace

Subgroup residual(const FiniteGroup &g, const Subgroup &h, ResidualMode mode) {
  Subgroup cur = h;
  while (true) {
    Subgroup next;
    if (mode.is_solvable()) {
      next = derived_subgroup(g, cur);
    } else {
      std::vector<int> coprime;
      for (int x : cur.elements())
        if (g.element_order(x) % mode.prime != 0) coprime.push_back(x);
      next = generate(g, coprime);
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

SubgroupClassTable SubgroupClassTable::compute(const FiniteGroup &g) {
  if (g.order() > g.limits().max_order) throw group_too_large("lattice bound", g.limits().max_order, g.order());
  SubgroupClassTable table(g);
  const int n = g.size();

  // discovery: every subgroup K != 1 is <M, x> for a maximal M < K, and M is
  // conjugate to some class already found, so joins of representatives suffice
  struct Found {
    Subgroup rep;
    std::vector<std::pair<Subgroup, int>> conjugates; // (x R x^-1, x)
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, int, ElementSetHash> known;
  auto register_class = [&](const Subgroup &k) {
    Found f;
    f.rep = k;
    std::unordered_map<ElementSet, int, ElementSetHash> local;
    for (int x = 0; x < n; ++x) {
      Subgroup c = conjugate(g, k, x);
      if (local.emplace(c.members(), x).second) f.conjugates.emplace_back(c, x);
    }
    for (const auto &[c, x] : f.conjugates) {
      if (key_less(c, f.rep)) f.rep = c;
      known.emplace(c.members(), static_cast<int>(found.size()));
    }
    found.push_back(std::move(f));
  };
  register_class(trivial_subgroup(g));
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup rep = found[i].rep;
    std::vector<int> gens = generating_set(g, rep);
    gens.push_back(0);
    ElementSet visited(n);
    for (int x = 0; x < n; ++x) {
      if (rep.contains(x) || visited.test(x)) continue;
      for (int h : rep.elements()) visited.set(g.mul(h, x));
      gens.back() = x;
      Subgroup k = generate(g, gens);
      if (!known.contains(k.members())) register_class(k);
    }
  }

  std::vector<int> order_idx(found.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    if (found[a].rep.order() != found[b].rep.order()) return found[a].rep.order() < found[b].rep.order();
    return key_less(found[a].rep, found[b].rep);
  });

  for (int ci = 0; ci < static_cast<int>(order_idx.size()); ++ci) {
    Found &f = found[order_idx[ci]];
    // conjugator relative to the chosen representative R = y K y^-1
    int y = -1;
    for (const auto &[c, x] : f.conjugates)
      if (c == f.rep) y = x;
    SubgroupClass sc;
    sc.representative = f.rep;
    sc.centralizer = centralizer(g, f.rep);
    sc.normalizer = normalizer(g, f.rep);
    table.classes_.push_back(std::move(sc));
    std::sort(f.conjugates.begin(), f.conjugates.end(),
              [](const auto &a, const auto &b) { return key_less(a.first, b.first); });
    for (const auto &[c, x] : f.conjugates) {
      // c = x K x^-1, R = y K y^-1, so (y x^-1) c (y x^-1)^-1 = R
      table.fusion_.emplace(c.members(), Fusion{ci, g.mul(y, g.inv(x))});
      table.all_index_.emplace(c.members(), static_cast<int>(table.all_.size()));
      table.all_.push_back(c);
      table.all_class_.push_back(ci);
    }
  }

  const auto primes = prime_divisors(g.order());
  std::map<std::string, int> hint_count;
  for (auto &sc : table.classes_) {
    sc.solvable_residual = table.fuse(residual(g, sc.representative, ResidualMode::solvable())).index;
    for (int p : primes) sc.p_residuals[p] = table.fuse(residual(g, sc.representative, ResidualMode::p(p))).index;
    sc.type_hint = type_hint(g, sc.representative);
    sc.name = sc.type_hint + "#" + std::to_string(++hint_count[sc.type_hint]);
  }
  return table;
}

SubgroupClassTable::Fusion SubgroupClassTable::fuse(const Subgroup &h) const {
  auto it = fusion_.find(h.members());
  if (it == fusion_.end()) throw std::invalid_argument("not a subgroup of the tabulated group");
  return it->second;
}

int SubgroupClassTable::subgroup_index(const Subgroup &h) const {
  auto it = all_index_.find(h.members());
  if (it == all_index_.end()) throw std::invalid_argument("not a subgroup of the tabulated group");
  return it->second;
}

bool SubgroupClassTable::subconjugate(int i, int j) const {
  for (std::size_t s = 0; s < all_.size(); ++s)
    if (all_class_[s] == i && all_[s].is_subgroup_of(classes_[j].representative)) return true;
  return false;
}

int SubgroupClassTable::residual_class(int i, ResidualMode mode) const {
  if (mode.is_solvable()) return classes_[i].solvable_residual;
  auto it = classes_[i].p_residuals.find(mode.prime);
  // primes not dividing |G| leave every subgroup p-perfect
  return it == classes_[i].p_residuals.end() ? i : it->second;
}

std::vector<int> SubgroupClassTable::residual_fixed_classes(ResidualMode mode) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (residual_class(i, mode) == i) out.push_back(i);
  return out;
}

int SubgroupClassTable::class_by_name(const std::string &name) const {
  for (int i = 0; i < size(); ++i)
    if (classes_[i].name == name) return i;
  throw std::invalid_argument("unknown subgroup class: " + name);
}

std::vector<Subgroup> all_subgroups_by_closure(const FiniteGroup &g) {
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::unordered_map<ElementSet, int, ElementSetHash> seen{{out[0].members(), 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int x = 0; x < g.size(); ++x) {
      if (out[i].contains(x)) continue;
      std::vector<int> gens = out[i].elements();
      gens.push_back(x);
      Subgroup k = generate(g, gens);
      if (seen.emplace(k.members(), static_cast<int>(out.size())).second) out.push_back(std::move(k));
    }
  return out;
}

CosetSpace left_cosets(const FiniteGroup &g, const Subgroup &k) {
  CosetSpace cs;
  cs.coset_of.assign(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (cs.coset_of[x] >= 0) continue;
    const int id = cs.size();
    cs.representatives.push_back(x);
    for (int e : k.elements()) cs.coset_of[g.mul(x, e)] = id;
  }
  return cs;
}

CosetGeometry coset_geometry(const FiniteGroup &g, const Subgroup &h, const Subgroup &k) {
  CosetGeometry geo;
  ElementSet seen(g.size());
  for (int x = 0; x < g.size(); ++x) {
    if (seen.test(x)) continue;
    int size = 0;
    for (int a : h.elements())
      for (int b : k.elements()) {
        const int y = g.mul(g.mul(a, x), b);
        if (!seen.test(y)) {
          seen.set(y);
          ++size;
        }
      }
    geo.double_coset_representatives.push_back(x);
    geo.double_coset_sizes.push_back(size);
  }
  const auto hgens = generating_set(g, h);
  for (int rep : left_cosets(g, k).representatives) {
    // H <= rep K rep^-1  iff  rep^-1 s rep in K for all generators s of H
    const int ri = g.inv(rep);
    if (std::all_of(hgens.begin(), hgens.end(), [&](int s) { return k.contains(g.conj(ri, s)); }))
      geo.fixed_cosets.push_back(rep);
  }
  return geo;
}

QuotientGroup quotient_group(const FiniteGroup &g, const Subgroup &n, const Subgroup &j) {
  if (!is_normal_in(g, j, n)) throw not_normal_error("subgroup is not normal");
  // cosets of J inside N, numbered in order of their smallest element
  std::vector<int> coset_of(g.size(), -1);
  int count = 0;
  for (int x : n.elements()) {
    if (coset_of[x] >= 0) continue;
    for (int e : j.elements()) coset_of[g.mul(x, e)] = count;
    ++count;
  }
  auto action = [&](int x) {
    std::vector<std::uint16_t> im(count);
    for (int y : n.elements()) im[coset_of[y]] = static_cast<std::uint16_t>(coset_of[g.mul(x, y)]);
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  for (int s : generating_set(g, n)) gens.push_back(action(s));
  GroupLimits limits = g.limits();
  limits.max_degree = std::max(limits.max_degree, count);
  QuotientGroup q{FiniteGroup(count, std::move(gens), limits), std::vector<int>(g.size(), -1)};
  for (int x : n.elements()) q.projection[x] = q.group.index_of(action(x));
  return q;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.size(), false);
  for (int a = 0; a < g.size(); ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g.size(); ++x) {
      const int c = g.conj(x, a);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

} // namespace motive
