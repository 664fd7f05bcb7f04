#include <gtest/gtest.h>

#include "motive/checks.hpp"

using namespace motive;

namespace {

std::string failures(const CheckList &checks) {
  std::string out;
  for (const auto &c : checks)
    if (!c.pass) out += c.name + " (" + c.detail + ") ";
  return out;
}

} // namespace

TEST(Suites, InvariantsHold) {
  for (const char *spec : {"cyclic:2", "cyclic:4", "sym:3", "dihedral:4", "alt:4", "sym:4", "alt:5"}) {
    const auto c = make_crossed_ring(FiniteGroup::parse(spec));
    EXPECT_TRUE(all_pass(group_checks(c->classes()))) << spec << ": " << failures(group_checks(c->classes()));
    const auto b = burnside_checks(c->burnside());
    EXPECT_TRUE(all_pass(b)) << spec << ": " << failures(b);
    const auto x = crossed_checks(*c);
    EXPECT_TRUE(all_pass(x)) << spec << ": " << failures(x);
    const auto z = center_checks(*c);
    EXPECT_TRUE(all_pass(z)) << spec << ": " << failures(z);
  }
}

TEST(Suites, SampledChecksAreSeeded) {
  const auto c = make_crossed_ring(FiniteGroup::parse("alt:5"));
  const CheckOptions a{7, 50}, b{7, 50};
  const auto x = crossed_checks(*c, a), y = crossed_checks(*c, b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i].detail, y[i].detail);
}

TEST(Suites, MackeyInvariantsHold) {
  const std::vector<CoefficientRing> rings{CoefficientRing::rationals(), CoefficientRing::prime_field(2),
                                           CoefficientRing::prime_field(3)};
  for (const char *spec : {"cyclic:2", "cyclic:3", "sym:3"}) {
    const MackeyAlgebra m(make_crossed_ring(FiniteGroup::parse(spec)));
    for (const auto &ring : rings) {
      const auto checks = mackey_checks(m, ring);
      EXPECT_TRUE(all_pass(checks)) << spec << " " << ring.name() << ": " << failures(checks);
    }
  }
}

TEST(Suites, SpanCountFormula) {
  const MackeyAlgebra m(make_crossed_ring(FiniteGroup::parse("cyclic:2")));
  EXPECT_EQ(span_count_by_formula(m), 6u);
}

TEST(Suites, BurnsideOrbitProduct) {
  const auto c = make_crossed_ring(FiniteGroup::parse("sym:3"));
  // [G/1]^2 = 6 [G/1]
  EXPECT_EQ(burnside_product_by_orbits(c->burnside(), 0, 0), (std::vector<StructureConstants::Term>{{0, 6}}));
}
