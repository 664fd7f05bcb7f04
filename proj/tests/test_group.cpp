#include <gtest/gtest.h>

#include <set>

#include "motive/scalar.hpp"
#include "motive/subgroups.hpp"

using namespace motive;

namespace {

// Every subset closed under multiplication; only usable for tiny groups.
std::set<std::vector<int>> subgroups_by_subset_scan(const FiniteGroup &g) {
  std::set<std::vector<int>> out;
  const int n = g.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue; // must contain the identity
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<int> s;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u) s.push_back(a);
    out.insert(s);
  }
  return out;
}

bool commutes(const FiniteGroup &g, int a, int b) { return g.mul(a, b) == g.mul(b, a); }

// All commutators of a subgroup, then closure.
Subgroup commutator_closure(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> comms;
  for (int a : h.elements())
    for (int b : h.elements()) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generate(g, comms);
}

bool is_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

TEST(Permutation, ParsesAndComposes) {
  const auto a = Permutation::parse_cycles("(1 2)", 3);
  const auto b = Permutation::parse_cycles("(2,3)", 3);
  EXPECT_EQ((a * b).cycle_string(), "(1,2,3)"); // b acts first
  EXPECT_EQ(a.inverse(), a);
  EXPECT_TRUE((a * a).is_identity());
  EXPECT_EQ(Permutation::identity(4).cycle_string(), "()");
  EXPECT_THROW(Permutation::parse_cycles("(1 1)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse_cycles("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse_cycles("(1 2", 3), std::invalid_argument);
}

TEST(FiniteGroup, FamilyOrders) {
  EXPECT_EQ(FiniteGroup::parse("cyclic:2").order(), 2u);
  EXPECT_EQ(FiniteGroup::parse("cyclic:2").degree(), 2);
  EXPECT_EQ(FiniteGroup::parse("alt:5").order(), 60u);
  EXPECT_EQ(FiniteGroup::parse("sym:4").order(), 24u);
  EXPECT_EQ(FiniteGroup::parse("dihedral:4").order(), 8u);
  EXPECT_EQ(FiniteGroup::parse("sym:16").order(), 20922789888000u); // exact order without materializing
}

TEST(FiniteGroup, KleinFourFromGenerators) {
  const auto g = FiniteGroup::parse("gens:\"(1 2)(3 4);(1 3)(2 4)\"");
  EXPECT_EQ(g.order(), 4u);
  // closure oracle: breadth-first products of the generators
  std::set<Permutation> seen{Permutation::identity(4)};
  std::vector<Permutation> frontier{Permutation::identity(4)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &p : frontier)
      for (const auto &s : g.generators())
        if (seen.insert(p * s).second) next.push_back(p * s);
    frontier = std::move(next);
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(FiniteGroup::parse("gens:(1 2)(3 4),(1 3)(2 4)").order(), 4u);
}

TEST(FiniteGroup, ElementTableIsAGroup) {
  const auto g = FiniteGroup::parse("sym:4");
  ASSERT_EQ(g.size(), 24);
  EXPECT_TRUE(g.element(0).is_identity());
  for (int a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.mul(a, g.inv(a)), 0);
    for (int b = 0; b < g.size(); ++b) {
      EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
      for (int c = 0; c < g.size(); c += 5) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
}

TEST(FiniteGroup, Bounds) {
  EXPECT_THROW(FiniteGroup::parse("sym:17"), group_too_large);
  EXPECT_THROW(FiniteGroup::parse("gens:(1 2 3"), std::invalid_argument);
  EXPECT_THROW(FiniteGroup::parse("nonsense:3"), std::invalid_argument);
  const auto big = FiniteGroup::parse("sym:6", GroupLimits{});
  EXPECT_EQ(big.order(), 720u);
  EXPECT_THROW(SubgroupClassTable::compute(big), group_too_large);
  try {
    SubgroupClassTable::compute(big);
  } catch (const group_too_large &e) {
    EXPECT_EQ(e.bound_name, "lattice bound");
  }
}

TEST(SubgroupClasses, SmallGroupsAgainstSubsetScan) {
  for (const char *spec : {"cyclic:2", "sym:3", "cyclic:4", "gens:(1 2)(3 4);(1 3)(2 4)", "dihedral:4"}) {
    const auto g = FiniteGroup::parse(spec);
    const auto table = SubgroupClassTable::compute(g);
    const auto scanned = subgroups_by_subset_scan(g);
    std::set<std::vector<int>> listed;
    for (const auto &h : table.all_subgroups()) listed.insert(h.elements());
    EXPECT_EQ(listed, scanned) << spec;
  }
}

TEST(SubgroupClasses, ClassCounts) {
  EXPECT_EQ(SubgroupClassTable::compute(FiniteGroup::parse("cyclic:2")).size(), 2);
  EXPECT_EQ(SubgroupClassTable::compute(FiniteGroup::parse("sym:3")).size(), 4);
  EXPECT_EQ(SubgroupClassTable::compute(FiniteGroup::parse("sym:4")).size(), 11);
  EXPECT_EQ(SubgroupClassTable::compute(FiniteGroup::parse("alt:4")).size(), 5);
  const auto a5 = SubgroupClassTable::compute(FiniteGroup::parse("alt:5"));
  ASSERT_EQ(a5.size(), 9);
  std::vector<std::string> hints;
  for (const auto &c : a5.classes()) hints.push_back(c.type_hint);
  EXPECT_EQ(hints, (std::vector<std::string>{"1", "C2", "C3", "V4", "C5", "S3", "D10", "A4", "A5"}));
  EXPECT_EQ(a5[1].name, "C2#1");
}

TEST(SubgroupClasses, ClosureOracleAndFusion) {
  for (const char *spec : {"sym:4", "alt:5", "dihedral:6"}) {
    const auto g = FiniteGroup::parse(spec);
    const auto table = SubgroupClassTable::compute(g);
    const auto closure = all_subgroups_by_closure(g);
    EXPECT_EQ(closure.size(), table.all_subgroups().size()) << spec;
    for (const auto &h : closure) {
      const auto f = table.fuse(h);
      EXPECT_EQ(conjugate(g, h, f.conjugator), table[f.index].representative);
    }
    // no two representatives conjugate
    for (int i = 0; i < table.size(); ++i)
      for (int x = 0; x < g.size(); ++x)
        EXPECT_EQ(table.fuse(conjugate(g, table[i].representative, x)).index, i);
    // ordering extends subconjugacy
    for (int i = 0; i < table.size(); ++i)
      for (int j = 0; j < table.size(); ++j)
        if (table.subconjugate(i, j)) EXPECT_LE(i, j);
  }
}

TEST(SubgroupClasses, CentralizerAndNormalizerByDirectCheck) {
  const auto g = FiniteGroup::parse("sym:4");
  const auto table = SubgroupClassTable::compute(g);
  for (const auto &c : table.classes()) {
    for (int x = 0; x < g.size(); ++x) {
      bool centralizes = true;
      for (int h : c.representative.elements()) centralizes = centralizes && commutes(g, x, h);
      EXPECT_EQ(c.centralizer.contains(x), centralizes);
      EXPECT_EQ(c.normalizer.contains(x), conjugate(g, c.representative, x) == c.representative);
    }
    EXPECT_TRUE(is_normal_in(g, c.representative, c.normalizer));
  }
}

TEST(Residuals, AgainstNormalSubgroupScan) {
  for (const char *spec : {"sym:4", "alt:5"}) {
    const auto g = FiniteGroup::parse(spec);
    const auto table = SubgroupClassTable::compute(g);
    const auto &subs = table.all_subgroups();
    for (int i = 0; i < table.size(); ++i) {
      const Subgroup &h = table[i].representative;
      // solvable residual = largest perfect subgroup of H
      int best = -1;
      for (std::size_t s = 0; s < subs.size(); ++s)
        if (subs[s].is_subgroup_of(h) && commutator_closure(g, subs[s]) == subs[s] &&
            (best < 0 || subs[s].order() > subs[best].order()))
          best = static_cast<int>(s);
      EXPECT_EQ(residual(g, h, ResidualMode::solvable()), subs[best]);
      EXPECT_EQ(table[i].solvable_residual, table.fuse(subs[best]).index);
      for (int p : prime_divisors(g.order())) {
        int min = -1;
        for (std::size_t s = 0; s < subs.size(); ++s)
          if (subs[s].is_subgroup_of(h) && is_normal_in(g, subs[s], h) &&
              is_power(h.order() / subs[s].order(), p) && (min < 0 || subs[s].order() < subs[min].order()))
            min = static_cast<int>(s);
        EXPECT_EQ(residual(g, h, ResidualMode::p(p)), subs[min]);
        EXPECT_EQ(table.residual_class(i, ResidualMode::p(p)), table.fuse(subs[min]).index);
      }
    }
  }
}

TEST(Residuals, NamedExamples) {
  const auto s3 = FiniteGroup::parse("sym:3");
  EXPECT_EQ(residual(s3, whole_group(s3), ResidualMode::solvable()).order(), 1);
  EXPECT_EQ(residual(s3, whole_group(s3), ResidualMode::p(2)).order(), 3);
  const auto a4 = FiniteGroup::parse("alt:4");
  EXPECT_EQ(residual(a4, whole_group(a4), ResidualMode::p(2)).order(), 12);
  const auto a5 = FiniteGroup::parse("alt:5");
  EXPECT_EQ(residual(a5, whole_group(a5), ResidualMode::solvable()).order(), 60);
}

TEST(CosetGeometry, PartitionsAndFixedPoints) {
  const auto c2 = FiniteGroup::parse("cyclic:2");
  const auto one = trivial_subgroup(c2);
  EXPECT_EQ(coset_geometry(c2, one, one).double_coset_representatives.size(), 2u);
  const auto whole = whole_group(c2);
  EXPECT_EQ(coset_geometry(c2, whole, whole).double_coset_representatives.size(), 1u);
  EXPECT_EQ(coset_geometry(c2, whole, whole).fixed_cosets.size(), 1u);

  const auto g = FiniteGroup::parse("sym:3");
  const auto table = SubgroupClassTable::compute(g);
  EXPECT_EQ(coset_geometry(g, table[1].representative, table[1].representative)
                .double_coset_representatives.size(),
            2u);
  for (const auto &h : table.all_subgroups())
    for (const auto &k : table.all_subgroups()) {
      const auto geo = coset_geometry(g, h, k);
      int total = 0;
      for (int s : geo.double_coset_sizes) total += s;
      EXPECT_EQ(total, g.size());
      if (!geo.fixed_cosets.empty()) EXPECT_TRUE(table.subconjugate(table.fuse(h).index, table.fuse(k).index));
      for (int rep : geo.fixed_cosets) EXPECT_TRUE(h.is_subgroup_of(conjugate(g, k, rep)));
    }
}

TEST(Quotient, WeylGroups) {
  const auto a5 = FiniteGroup::parse("alt:5");
  const auto table = SubgroupClassTable::compute(a5);
  const auto &c5 = table[table.class_by_name("C5#1")];
  EXPECT_EQ(c5.normalizer.order(), 10);
  EXPECT_EQ(quotient_group(a5, c5.normalizer, c5.representative).group.order(), 2u);
  EXPECT_EQ(quotient_group(a5, whole_group(a5), trivial_subgroup(a5)).group.order(), 60u);
  EXPECT_EQ(quotient_group(a5, whole_group(a5), whole_group(a5)).group.order(), 1u);
  EXPECT_THROW(quotient_group(a5, whole_group(a5), c5.representative), not_normal_error);
  const auto q = quotient_group(a5, c5.normalizer, c5.representative);
  for (int a : c5.normalizer.elements())
    for (int b : c5.normalizer.elements())
      EXPECT_EQ(q.projection[a5.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
}

TEST(ConjugacyClasses, Counts) {
  EXPECT_EQ(conjugacy_classes(FiniteGroup::parse("cyclic:2")).size(), 2u);
  EXPECT_EQ(conjugacy_classes(FiniteGroup::parse("sym:3")).size(), 3u);
  EXPECT_EQ(conjugacy_classes(FiniteGroup::parse("alt:5")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(FiniteGroup::parse("sym:4")).front(), std::vector<int>{0});
}
