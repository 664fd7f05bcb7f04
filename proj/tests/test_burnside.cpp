#include <gtest/gtest.h>

#include <map>

#include "motive/burnside.hpp"

using namespace motive;

namespace {

BurnsideRing ring_of(const char *spec) {
  return BurnsideRing(std::make_shared<const SubgroupClassTable>(
      SubgroupClassTable::compute(FiniteGroup::parse(spec))));
}

// [G/H] x [G/K] decomposed orbit by orbit: counts of stabilizer classes.
std::vector<long> product_by_orbits(const BurnsideRing &b, int h, int k) {
  const auto &t = b.classes();
  const auto &g = t.group();
  const auto ch = left_cosets(g, t[h].representative);
  const auto ck = left_cosets(g, t[k].representative);
  std::vector<long> out(b.dimension(), 0);
  std::vector<std::vector<bool>> seen(ch.size(), std::vector<bool>(ck.size(), false));
  for (int i = 0; i < ch.size(); ++i)
    for (int j = 0; j < ck.size(); ++j) {
      if (seen[i][j]) continue;
      ElementSet stab(g.size());
      for (int x = 0; x < g.size(); ++x) {
        const int a = ch.coset_of[g.mul(x, ch.representatives[i])];
        const int c = ck.coset_of[g.mul(x, ck.representatives[j])];
        seen[a][c] = true;
        if (a == i && c == j) stab.set(x);
      }
      ++out[t.fuse(Subgroup(stab)).index];
    }
  return out;
}

Vector<Rational> rationals(std::initializer_list<long> values) {
  Vector<Rational> v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v[i++] = x;
  return v;
}

} // namespace

TEST(TableOfMarks, CyclicTwo) {
  const auto b = ring_of("cyclic:2");
  Matrix<long> expected(2, 2);
  expected << 2, 1, 0, 1;
  EXPECT_EQ(b.marks(), expected);
}

TEST(TableOfMarks, Shape) {
  for (const char *spec : {"sym:3", "sym:4", "alt:5"}) {
    const auto b = ring_of(spec);
    const auto &t = b.classes();
    const int n = b.dimension();
    const long order = static_cast<long>(t.group().order());
    for (int h = 0; h < n; ++h) {
      EXPECT_EQ(b.marks()(h, n - 1), 1);
      EXPECT_EQ(b.marks()(0, h), order / t[h].representative.order());
      EXPECT_EQ(b.marks()(h, h), t[h].normalizer.order() / t[h].representative.order());
      for (int u = 0; u < n; ++u) EXPECT_EQ(b.marks()(h, u) != 0, t.subconjugate(h, u));
    }
  }
}

TEST(BurnsideProduct, MatchesOrbitDecomposition) {
  for (const char *spec : {"cyclic:2", "sym:3", "dihedral:4", "alt:4", "sym:4"}) {
    const auto b = ring_of(spec);
    for (int h = 0; h < b.dimension(); ++h)
      for (int k = 0; k < b.dimension(); ++k) {
        std::vector<long> dense(b.dimension(), 0);
        for (const auto &[i, c] : b.structure().product(h, k)) dense[i] += c;
        EXPECT_EQ(dense, product_by_orbits(b, h, k)) << spec << " " << h << " " << k;
      }
  }
}

TEST(BurnsideProduct, NamedExamples) {
  const auto q = CoefficientRing::integers();
  const auto c2 = ring_of("cyclic:2");
  const auto x = c2.basis_element<Rational>(0, q);
  EXPECT_EQ(c2.multiply(x, x).coefficients, rationals({2, 0}));
  EXPECT_EQ(c2.multiply(c2.one<Rational>(q), x), x);
  const auto s3 = ring_of("sym:3");
  const auto y = s3.basis_element<Rational>(1, q); // [S3/C2]
  EXPECT_EQ(s3.multiply(y, y).coefficients, rationals({1, 1, 0, 0}));
  EXPECT_THROW(s3.multiply(y, s3.one<Rational>(CoefficientRing::rationals())), mixed_rings_error);
}

TEST(BurnsideProduct, MarksAreMultiplicative) {
  const auto q = CoefficientRing::integers();
  for (const char *spec : {"sym:3", "dihedral:4", "alt:4", "sym:4", "alt:5"}) {
    const auto b = ring_of(spec);
    for (int h = 0; h < b.dimension(); ++h)
      for (int k = 0; k < b.dimension(); ++k) {
        const auto x = b.basis_element<Rational>(h, q);
        const auto y = b.basis_element<Rational>(k, q);
        EXPECT_EQ(b.ghost(b.multiply(x, y)), b.ghost(x).cwiseProduct(b.ghost(y)));
      }
  }
}

TEST(BurnsideProduct, FiniteFieldCoefficients) {
  const auto f2 = CoefficientRing::prime_field(2);
  const auto b = ring_of("cyclic:2");
  const auto x = b.basis_element<GF>(0, f2);
  EXPECT_TRUE(b.multiply(x, x).coefficients[0].is_zero()); // 2 = 0
}

TEST(RationalIdempotents, CyclicTwo) {
  const auto es = rational_idempotents(ring_of("cyclic:2"));
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es[0].coefficients, (Vector<Rational>(2) << Rational(1, 2), 0).finished());
  EXPECT_EQ(es[1].coefficients, (Vector<Rational>(2) << Rational(-1, 2), 1).finished());
}

TEST(RationalIdempotents, OrthogonalAndComplete) {
  const auto b = ring_of("sym:4");
  const auto es = rational_idempotents(b);
  Vector<Rational> sum = zero_vector<Rational>(b.dimension(), CoefficientRing::rationals());
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum += es[i].coefficients;
    Vector<Rational> indicator = zero_vector<Rational>(b.dimension(), CoefficientRing::rationals());
    indicator[i] = 1;
    EXPECT_EQ(b.ghost(es[i]), indicator);
    for (std::size_t j = 0; j < es.size(); ++j)
      EXPECT_EQ(b.multiply(es[i], es[j]).coefficients, i == j ? es[i].coefficients : Vector<Rational>(sum * 0));
  }
  EXPECT_EQ(sum, b.one<Rational>(CoefficientRing::rationals()).coefficients);
}

TEST(DressIdempotents, SolubleGroupHasOnlyOne) {
  for (const char *spec : {"sym:3", "sym:4", "dihedral:4"}) {
    const auto b = ring_of(spec);
    const auto fs = dress_idempotents(b, ResidualMode::solvable());
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].element.coefficients, b.one<Rational>(CoefficientRing::integers()).coefficients);
  }
}

TEST(DressIdempotents, AlternatingFive) {
  const auto b = ring_of("alt:5");
  const auto &t = b.classes();
  const auto fs = dress_idempotents(b, ResidualMode::solvable());
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].residual_class, 0);
  EXPECT_EQ(fs[1].residual_class, t.size() - 1);
  // f_1 = [G/A4] + [G/D10] + [G/S3] - [G/C3] - 2[G/C2] + [G/1]
  std::map<std::string, long> expected{{"A4", 1}, {"D10", 1}, {"S3", 1}, {"C3", -1}, {"C2", -2}, {"1", 1}};
  for (int i = 0; i < t.size(); ++i) {
    const long want = expected.count(t[i].type_hint) ? expected[t[i].type_hint] : 0;
    EXPECT_EQ(fs[0].element.coefficients[i], Rational(want)) << t[i].name;
    EXPECT_EQ(fs[1].element.coefficients[i], Rational((i == t.size() - 1 ? 1 : 0) - want)) << t[i].name;
  }
}

TEST(DressIdempotents, PrimeModeAlternatingFive) {
  const auto b = ring_of("alt:5");
  const auto &t = b.classes();
  const auto fs = dress_idempotents(b, ResidualMode::p(2));
  std::vector<std::string> js;
  for (const auto &f : fs) js.push_back(t[f.residual_class].type_hint);
  EXPECT_EQ(js, (std::vector<std::string>{"1", "C3", "C5", "A4", "A5"}));
  Vector<Rational> sum = zero_vector<Rational>(b.dimension(), CoefficientRing::rationals());
  for (const auto &f : fs) {
    EXPECT_EQ(f.element.ring, CoefficientRing::p_local(2));
    sum += f.element.coefficients;
    EXPECT_EQ(b.multiply(f.element, f.element), f.element);
    const auto ghost = b.ghost(f.element);
    for (int h = 0; h < t.size(); ++h)
      EXPECT_EQ(ghost[h], Rational(t.residual_class(h, ResidualMode::p(2)) == f.residual_class ? 1 : 0));
  }
  EXPECT_EQ(sum, b.one<Rational>(CoefficientRing::rationals()).coefficients);
}

TEST(FromGhost, RejectsNonIntegral) {
  const auto b = ring_of("cyclic:2");
  EXPECT_THROW(b.from_ghost(rationals({1, 0}), CoefficientRing::integers()), std::domain_error);
  EXPECT_NO_THROW(b.from_ghost(rationals({1, 0}), CoefficientRing::p_local(3)));
  EXPECT_THROW(b.from_ghost(rationals({1, 0}), CoefficientRing::p_local(2)), std::domain_error);
}
