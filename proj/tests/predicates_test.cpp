#include "cdmat/predicates.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cdmat/zoo.hpp"
#include "test_support.hpp"

namespace cdmat {
namespace {

using testing::mask_of;

std::vector<BinaryMatroid> connected_random(std::uint64_t seed, int count, int max_rows, int max_cols) {
  std::mt19937_64 rng(seed);
  std::vector<BinaryMatroid> out;
  while (static_cast<int>(out.size()) < count) {
    auto m = testing::random_matroid(rng, max_rows, max_cols);
    if (m.size() >= 2 && is_connected(m)) out.push_back(std::move(m));
  }
  return out;
}

bool same_pair(const CircuitPair& p, std::uint64_t a, std::uint64_t b) {
  return (p.first.bits() == a && p.second.bits() == b) || (p.first.bits() == b && p.second.bits() == a);
}

TEST(CircuitDifference, S8IsNot) {
  const auto s8 = zoo::s8();
  EXPECT_FALSE(is_circuit_difference(s8));
  const auto w = circuit_difference_violation(s8);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->first.intersects(w->second));
  EXPECT_FALSE(s8.circuits().contains(w->first ^ w->second));
  const auto c1 = mask_of({1, 4, 7, 8}), c2 = mask_of({2, 3, 5, 6, 8});
  EXPECT_EQ(c1 ^ c2, mask_of({1, 2, 6}) | mask_of({3, 4, 5, 7}));
  const auto all = circuit_difference_violations(s8);
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const CircuitPair& p) { return same_pair(p, c1, c2); }));
}

TEST(CircuitDifference, PositiveExamples) {
  EXPECT_TRUE(is_circuit_difference(zoo::complete(4)));
  EXPECT_TRUE(is_circuit_difference(zoo::tipless_spike(4)));
  for (int m = 1; m <= 7; ++m) EXPECT_TRUE(is_circuit_difference(zoo::uniform_rank1(m)));
  EXPECT_TRUE(is_circuit_difference(zoo::loop()));
  EXPECT_TRUE(is_circuit_difference(BinaryMatroid()));
}

TEST(CircuitDifference, ViolationsAreGenuineAndComplete) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = testing::random_matroid(rng, 5, 9);
    const auto circuits = testing::brute_circuits(testing::columns_of(m.representation()));
    std::size_t expected = 0;
    for (auto a : circuits)
      for (auto b : circuits)
        if (a < b && (a & b) && !circuits.count(a ^ b)) ++expected;
    EXPECT_EQ(circuit_difference_violations(m).size(), expected);
    EXPECT_EQ(is_circuit_difference(m), expected == 0);
  }
}

TEST(Skew, Examples) {
  EXPECT_FALSE(skew_circuit_pair(zoo::s8()).has_value());
  EXPECT_FALSE(skew_circuit_pair(zoo::complete(4)).has_value());
  const auto prism = zoo::graphic(zoo::prism_graph());
  const auto p = skew_circuit_pair(prism);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->first, prism.set(0b000000111));
  EXPECT_EQ(p->second, prism.set(0b000111000));
  EXPECT_EQ(prism.rank_of(0b111111), 4);
  EXPECT_EQ(prism.rank(), 5);
}

TEST(Skew, AgreesWithDefinitionOverAllPairs) {
  for (const auto& m : connected_random(33, 100, 5, 9)) {
    bool any = false;
    for (auto a : m.circuits().masks())
      for (auto b : m.circuits().masks())
        if (a != b && are_skew(m, a, b)) any = true;
    EXPECT_EQ(skew_circuit_pair(m).has_value(), any);
  }
}

TEST(CircuitComplementary, Examples) {
  EXPECT_TRUE(is_circuit_complementary(zoo::uniform_rank1(4)));
  EXPECT_TRUE(is_circuit_complementary(zoo::r10()));
  EXPECT_FALSE(is_circuit_complementary(zoo::complete(4)));
  EXPECT_TRUE(is_circuit_complementary(zoo::free_matroid(3)));
}

TEST(HyperplaneComplementary, Examples) {
  EXPECT_TRUE(is_hyperplane_complementary(zoo::ag(3)));
  EXPECT_FALSE(is_hyperplane_complementary(zoo::pg(3)));
  const auto ag4 = zoo::ag(4);
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      EXPECT_FALSE(is_hyperplane_complementary(delete_elements(ag4, ag4.set(detail::bit(a) | detail::bit(b)))));
}

TEST(HyperplaneComplementary, IsCircuitComplementarityOfTheDual) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::random_matroid(rng, 6, 10);
    EXPECT_EQ(is_hyperplane_complementary(m), is_circuit_complementary(dual(m)));
  }
}

TEST(Unbreakable, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_unbreakable(zoo::circuit(n)));
  EXPECT_FALSE(is_unbreakable(zoo::cographic(zoo::prism_graph())));
  EXPECT_THROW(is_unbreakable(zoo::free_matroid(2)), NotConnected);
}

TEST(Unbreakable, IffDualHasNoSkewPair) {
  for (const auto& m : connected_random(37, 120, 5, 9))
    EXPECT_EQ(is_unbreakable(m), !skew_circuit_pair(dual(m)).has_value());
}

TEST(Flats, AreClosedAndComplete) {
  const auto m = zoo::complete(4);
  const auto f = flats(m);
  std::set<std::uint64_t> expected;
  for (std::uint64_t s = 0; s < 64; ++s) expected.insert(m.closure(s));
  EXPECT_EQ(std::set<std::uint64_t>(f.begin(), f.end()), expected);
  EXPECT_EQ(f.size(), 15u);  // the partition lattice of a 4-set
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_regular(zoo::complete(5)));
  EXPECT_FALSE(is_regular(zoo::f7()));
  EXPECT_FALSE(is_regular(zoo::f7_star()));
  EXPECT_TRUE(is_regular(zoo::r10()));
  EXPECT_FALSE(is_regular(zoo::s8()));
  EXPECT_FALSE(is_regular(zoo::ag(4)));
  EXPECT_TRUE(is_regular(zoo::cographic(zoo::complete_graph(5))));
  EXPECT_TRUE(is_regular(zoo::complete_bipartite(3, 3)));
}

TEST(Regular, SeriesParallelReductionPreservesRegularity) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testing::random_matroid(rng, 4, 9);
    const bool direct = !has_minor(m, zoo::f7()) && !has_minor(m, zoo::f7_star());
    EXPECT_EQ(is_regular(m), direct) << m.representation().to_string();
  }
}

TEST(Structure, SkewPairRulesOutCircuitDifference) {
  for (const auto& m : connected_random(41, 150, 5, 9))
    if (skew_circuit_pair(m)) EXPECT_FALSE(is_circuit_difference(m));
}

TEST(Structure, DifferenceIdentityForCircuitsMeetingBoth) {
  for (const auto& m : connected_random(43, 40, 5, 9)) {
    const auto c = m.circuits().masks();
    for (auto c1 : c)
      for (auto c2 : c)
        for (auto d : c)
          if ((d & c1) && (d & c2) && !(c1 & c2)) ASSERT_EQ(d & ~(c1 | c2), (c1 ^ d) & (c2 ^ d));
  }
}

TEST(Structure, CircuitComplementaryImpliesCircuitDifference) {
  for (const auto& m : connected_random(45, 300, 5, 8))
    if (is_circuit_complementary(m)) EXPECT_TRUE(is_circuit_difference(m));
}

}  // namespace
}  // namespace cdmat
