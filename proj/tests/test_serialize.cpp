#include <gtest/gtest.h>

#include "motive/serialize.hpp"

using namespace motive;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();
const CoefficientRing kQ = CoefficientRing::rationals();

} // namespace

TEST(Serialize, BurnsideElementKeysAndFormat) {
  const auto c = make_crossed_ring(FiniteGroup::parse("sym:3"));
  const auto &b = c->burnside();
  auto x = b.zero<Rational>(kQ);
  x.coefficients[0] = Rational(1, 2);
  x.coefficients[3] = -3;
  EXPECT_EQ(to_json(b, x).dump(), R"({"1#1":"1/2","S3#1":"-3"})");
  EXPECT_EQ(burnside_from_json<Rational>(b, to_json(b, x), kQ), x);
}

TEST(Serialize, CrossedRoundTrip) {
  const auto c = make_crossed_ring(FiniteGroup::parse("alt:4"));
  auto x = c->zero<Rational>(kZ);
  for (int i = 0; i < c->dimension(); ++i) x.coefficients[i] = (i % 3) - 1;
  const Json j = to_json(*c, x);
  EXPECT_EQ(crossed_from_json<Rational>(*c, Json::parse(j.dump()), kZ), x);
  EXPECT_EQ(to_json(*c, c->zero<Rational>(kZ)).dump(), "{}");
}

TEST(Serialize, RejectsCoefficientsOutsideRing) {
  const auto c = make_crossed_ring(FiniteGroup::parse("cyclic:2"));
  const Json j = {{"[1#1,()]", "1/2"}};
  EXPECT_THROW(crossed_from_json<Rational>(*c, j, kZ), std::invalid_argument);
  EXPECT_NO_THROW(crossed_from_json<Rational>(*c, j, CoefficientRing::p_local(3)));
  EXPECT_THROW(crossed_from_json<Rational>(*c, j, CoefficientRing::p_local(2)), std::invalid_argument);
  EXPECT_THROW(crossed_from_json<Rational>(*c, Json{{"[C7#1,()]", "1"}}, kZ), std::exception);
}

TEST(Serialize, PrimeFieldReduction) {
  const auto c = make_crossed_ring(FiniteGroup::parse("sym:3"));
  const auto f3 = CoefficientRing::prime_field(3);
  const auto x = crossed_from_json<GF>(*c, Json{{"[1#1,()]", "1/2"}, {"[S3#1,()]", "-1"}}, f3);
  EXPECT_EQ(to_json(*c, x).dump(), R"({"[1#1,()]":"2","[S3#1,()]":"2"})");
  EXPECT_EQ(crossed_from_json<GF>(*c, to_json(*c, x), f3), x);
}

TEST(Serialize, ExtensionFieldElements) {
  const auto z = CenterAlgebra(FiniteGroup::parse("cyclic:3"));
  const auto f4 = CoefficientRing::prime_field(2, 2);
  for (const auto &block : blocks_mod_p(z, 2)) {
    const Json j = to_json(z, block);
    EXPECT_EQ(center_from_json<GF>(z, Json::parse(j.dump()), f4), block);
  }
}

TEST(Serialize, CenterKeysAreClassRepresentatives) {
  const auto z = CenterAlgebra(FiniteGroup::parse("sym:3"));
  const auto x = z.class_sum<Rational>(1, kZ);
  const Json j = to_json(z, x);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(center_from_json<Rational>(z, j, kZ), x);
  EXPECT_EQ(to_json(z, z.one<Rational>(kZ)).dump(), R"j({"()":"1"})j");
  const std::string other = z.group().element_string(z.classes()[1][1]);
  EXPECT_THROW(center_from_json<Rational>(z, Json{{other, "1"}}, kZ), std::invalid_argument);
}

TEST(Serialize, SpanTriples) {
  const MackeyAlgebra m(make_crossed_ring(FiniteGroup::parse("cyclic:2")));
  const Json j = to_json(m, m.one<Rational>(kQ));
  ASSERT_EQ(j.size(), 2u);
  for (const auto &t : j) {
    EXPECT_EQ(t["x"], t["y"]);
    EXPECT_EQ(t["coeff"], "1");
  }
  EXPECT_EQ(j[0]["S"], "1#1");
  EXPECT_EQ(j[0]["x"], "(0,())");
}
