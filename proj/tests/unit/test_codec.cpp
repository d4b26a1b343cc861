#include <cmath>

#include <gtest/gtest.h>

#include "swarmcomm/codec.hpp"

using namespace swarmcomm;

namespace {
std::vector<std::size_t> sizes(const Code& c) {
  std::vector<std::size_t> out;
  for (const auto& e : c.entries) out.push_back(e.k);
  return out;
}
}  // namespace

TEST(Source, NormalizesAndSorts) {
  bool reordered = false;
  const auto s = SymbolSource::from_weights({1, 3}, &reordered);
  EXPECT_TRUE(reordered);
  EXPECT_DOUBLE_EQ(s[0], 0.75);
  EXPECT_DOUBLE_EQ(s[1], 0.25);
  EXPECT_THROW(SymbolSource::from_weights({}), DomainError);
  EXPECT_THROW(SymbolSource::from_weights({1, -1}), DomainError);
  EXPECT_THROW(SymbolSource::from_weights({0, 0}), DomainError);
}

TEST(Source, GeometricHalves) {
  const auto s = SymbolSource::geometric(3);
  EXPECT_DOUBLE_EQ(s[0], 4.0 / 7.0);
  EXPECT_DOUBLE_EQ(s[2], 1.0 / 7.0);
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(entropy(SymbolSource::uniform(4)), 2.0);
  EXPECT_DOUBLE_EQ(entropy(SymbolSource({1.0})), 0.0);
  EXPECT_DOUBLE_EQ(entropy(SymbolSource({0.5, 0.25, 0.25})), 1.5);
}

TEST(Bits, NaturalBinaryMsbFirst) {
  EXPECT_EQ(to_bits(6, 4), (Bits{0, 1, 1, 0}));
  EXPECT_EQ(bits_to_string(parse_bits("0101")), "0101");
  EXPECT_THROW(parse_bits("01a"), DomainError);
}

TEST(FixedCode, ShiftByOneEnumeratesWords) {
  const auto code = build_fixed_code(Family::alg2, 6, 8);
  ASSERT_EQ(code.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(code.entries[i].bits, to_bits(i, 3));
    EXPECT_EQ(code.entries[i].k, 6u);
  }
}

TEST(FixedCode, ShiftByTwoSmallestSwarm) {
  const auto code = build_fixed_code(Family::alg1, 15, 2);
  ASSERT_EQ(code.size(), 2u);
  EXPECT_EQ(code.entries[0].bits, Bits{0});
  EXPECT_EQ(code.entries[1].bits, Bits{1});
}

TEST(FixedCode, CapacityError) {
  EXPECT_THROW(build_fixed_code(Family::alg2, 5, 5), CapacityError);
  try {
    build_fixed_code(Family::alg2, 5, 5);
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("capacity 2^2 = 4"), std::string::npos);
  }
  EXPECT_THROW(build_fixed_code(Family::alg1, 14, 1), CapacityError);
}

TEST(VariableCode, ShiftByOneTower) {
  const auto src = SymbolSource::uniform(4);
  const auto code = build_variable_code(Family::alg2, src);
  EXPECT_EQ(sizes(code), (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(code.average_size(src), 2.5);
  EXPECT_LT(code.average_size(src), 2.0 * entropy(src));
}

TEST(VariableCode, ShiftByTwoTower) {
  const auto src = SymbolSource::uniform(2);
  const auto code = build_variable_code(Family::alg1, src);
  EXPECT_EQ(sizes(code), (std::vector<std::size_t>{1, 2}));
  EXPECT_DOUBLE_EQ(code.average_size(src), 1.5);
  // 14 singleton levels, then 2, 4, 8 words at k = 15, 16, 17.
  const auto big = build_variable_code(Family::alg1, SymbolSource::uniform(28));
  EXPECT_EQ(big.entries[13].k, 14u);
  EXPECT_EQ(big.entries[14].k, 15u);
  EXPECT_EQ(big.entries[15].k, 15u);
  EXPECT_EQ(big.entries[16].k, 16u);
  EXPECT_EQ(big.entries[27].k, 17u);
  EXPECT_EQ(big.entries[27].scheme, Scheme::alg1);
}

TEST(VariableCode, SingleSymbol) {
  const SymbolSource src({1.0});
  const auto code = build_variable_code(Family::alg2, src);
  EXPECT_EQ(sizes(code), std::vector<std::size_t>{1});
  EXPECT_DOUBLE_EQ(code.average_size(src), 1.0);
}

TEST(VariableCode, LevelsFillInProbabilityOrder) {
  const auto src = SymbolSource::geometric(12);
  const auto code = build_variable_code(Family::alg2, src);
  for (std::size_t i = 1; i < code.size(); ++i) EXPECT_LE(code.entries[i - 1].k, code.entries[i].k);
  // sizes 1..3 singletons, 4 words at k=4, 4 at k=5, then k=6.
  EXPECT_EQ(sizes(code), (std::vector<std::size_t>{1, 2, 3, 4, 4, 4, 4, 5, 5, 5, 5, 6}));
}

TEST(Transmit, FixedShiftByOne) {
  const auto g = GridGraph::eight_grid(40, 2);
  const auto code = build_fixed_code(Family::alg2, 6, 8);
  const auto r = transmit(g, code, 3);
  EXPECT_EQ(r.received, std::optional<std::size_t>(3));
  ASSERT_TRUE(r.delay.has_value());
  EXPECT_NEAR(static_cast<double>(*r.delay), 204.0, 6.0);
}

TEST(Transmit, SingleRobotWalks) {
  const auto g = GridGraph::eight_grid(40, 2);
  const auto code = build_variable_code(Family::alg2, SymbolSource::uniform(4));
  const auto r = transmit(g, code, 0);
  EXPECT_EQ(r.received, std::optional<std::size_t>(0));
  EXPECT_EQ(r.delay, std::optional<std::size_t>(39));
}

TEST(Transmit, RoundTripEverySymbol) {
  const auto g = GridGraph::eight_grid(60, 2);
  for (auto family : {Family::alg1, Family::alg2}) {
    const auto code = build_variable_code(family, SymbolSource::geometric(20));
    for (std::size_t i = 0; i < code.size(); ++i)
      EXPECT_EQ(transmit(g, code, i).received, std::optional<std::size_t>(i)) << to_string(family) << " " << i;
  }
}

TEST(Transmit, SymbolOutOfRange) {
  const auto g = GridGraph::eight_grid(40, 2);
  EXPECT_THROW(transmit(g, build_fixed_code(Family::alg2, 4, 2), 2), DomainError);
}

TEST(BoundCheck, ShiftByOneUniformFour) {
  const auto src = SymbolSource::uniform(4);
  const auto rep = bound_check(build_variable_code(Family::alg2, src), src, 40);
  EXPECT_TRUE(rep.pass());
  EXPECT_DOUBLE_EQ(rep.K, 2.5);
  EXPECT_LE(rep.D, 100.0);
}

TEST(BoundCheck, ShiftByTwoUniformTwo) {
  const auto src = SymbolSource::uniform(2);
  const auto rep = bound_check(build_variable_code(Family::alg1, src), src, 100);
  EXPECT_TRUE(rep.pass());
  EXPECT_LE(rep.D, 10.0 * 100.0 * rep.K);
}

TEST(BoundCheck, SingleSymbolTriviallyPasses) {
  const SymbolSource src({1.0});
  for (auto family : {Family::alg1, Family::alg2}) {
    const auto rep = bound_check(build_variable_code(family, src), src, 20);
    EXPECT_TRUE(rep.pass());
    EXPECT_DOUBLE_EQ(rep.K, 1.0);
  }
}

TEST(DelayFormulas, Values) {
  EXPECT_DOUBLE_EQ(alg1_delay_bound(15, 100), 2252.5);
  EXPECT_DOUBLE_EQ(alg2_delay(15, 100), 1275.0);
  EXPECT_DOUBLE_EQ(delay_lower_bound(3, 10), 18.0);
}
