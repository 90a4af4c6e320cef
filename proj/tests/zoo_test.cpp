#include "cdmat/zoo.hpp"

#include <gtest/gtest.h>

#include "cdmat/isomorphism.hpp"
#include "cdmat/predicates.hpp"
#include "test_support.hpp"

namespace cdmat {
namespace {

using testing::mask_of;

TEST(Zoo, S8MatrixRows) {
  const auto s8 = zoo::s8();
  EXPECT_EQ(s8.representation().to_string(), "10001110\n01001111\n00100011\n00011001\n");
  EXPECT_EQ(s8.labels(), BinaryMatroid::default_labels(8));
  EXPECT_TRUE(s8.circuits().contains(mask_of({1, 2, 6})));
  EXPECT_TRUE(s8.circuits().contains(mask_of({3, 4, 5, 7})));
}

TEST(Zoo, Ag3IsU34) {
  EXPECT_TRUE(is_isomorphic(zoo::ag(3), zoo::circuit(4)));
  EXPECT_EQ(zoo::ag(3).circuits().size(), 1u);
}

TEST(Zoo, TippedFourSpikeAndS8AreAgPlusE) {
  const auto ext = zoo::ag_plus_e(4);
  EXPECT_TRUE(is_isomorphic(zoo::tipped_spike(4), ext));
  const auto spike = zoo::tipped_spike(4);
  const int tip = *spike.index_of("t");
  for (int e = 0; e < spike.size(); ++e) {
    if (e == tip) continue;
    EXPECT_TRUE(is_isomorphic(delete_elements(spike, ElementSet::single(e, 9)), zoo::s8())) << e;
  }
}

TEST(Zoo, N5HasSixCircuits) {
  const auto n5 = zoo::n5();
  const std::set<std::uint64_t> expected{0b01001 /* a,d */, 0b10010 /* b,e */, 0b00111, 0b01110,
                                         0b10101, 0b11100};
  EXPECT_EQ(testing::as_set(n5.circuits()), expected);
  EXPECT_EQ(testing::brute_circuits(testing::columns_of(n5.representation())), expected);
}

TEST(Zoo, ProjectiveAndAffineSizes) {
  for (int r = 1; r <= 6; ++r) {
    const auto pg = zoo::pg(r);
    EXPECT_EQ(pg.size(), (1 << r) - 1);
    EXPECT_EQ(pg.rank(), r);
    EXPECT_TRUE(is_simple(pg));
    const auto ag = zoo::ag(r);
    EXPECT_EQ(ag.size(), 1 << (r - 1));
    EXPECT_EQ(ag.rank(), r);
    EXPECT_TRUE(is_simple(ag));
  }
}

TEST(Zoo, AgIsPgMinusAHyperplane) {
  for (int r = 2; r <= 5; ++r) {
    const auto pg = zoo::pg(r);
    const auto ag = zoo::ag(r);
    // The removed points form a flat of rank r - 1 whose complement is a cocircuit.
    std::uint64_t kept = 0;
    for (int j = 0; j < pg.size(); ++j)
      if (pg.label(j)[0] == '1') kept |= detail::bit(j);
    EXPECT_TRUE(pg.cocircuits().contains(kept));
    EXPECT_EQ(restriction(pg, pg.set(kept)).labels(), ag.labels());
  }
}

TEST(Zoo, AgPlusEIsUniqueUpToIsomorphism) {
  for (int r = 3; r <= 5; ++r) {
    const auto first = zoo::ag_plus_e(r);
    for (std::uint64_t p = 2; p < (std::uint64_t{1} << r); p += 2)
      EXPECT_TRUE(is_isomorphic(first, zoo::ag_plus_e(r, p))) << r << " " << p;
  }
}

TEST(Zoo, DualOfGraphicIsCographic) {
  const std::vector<Graph> graphs{zoo::complete_graph(4), zoo::complete_graph(5), zoo::prism_graph(),
                                  zoo::complete_bipartite_graph(3, 3), zoo::cycle_graph(5),
                                  {3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}}};
  for (const auto& g : graphs) EXPECT_TRUE(is_isomorphic(dual(zoo::graphic(g)), zoo::cographic(g)));
}

TEST(Zoo, GraphicCircuitsAreCycles) {
  // The circuits of M(K_4): four triangles and three 4-cycles.
  const auto h = zoo::complete(4).circuits().size_histogram();
  EXPECT_EQ(h[3], 4);
  EXPECT_EQ(h[4], 3);
  EXPECT_EQ(zoo::complete(4).circuits().size(), 7u);
}

TEST(Zoo, R10Facts) {
  const auto r10 = zoo::r10();
  EXPECT_EQ(r10.size(), 10);
  EXPECT_EQ(r10.rank(), 5);
  EXPECT_TRUE(is_cosimple(r10));
  EXPECT_TRUE(is_connected(r10));
  EXPECT_TRUE(is_circuit_complementary(r10));
  const auto k33 = zoo::complete_bipartite(3, 3);
  for (int e = 0; e < 10; ++e) EXPECT_TRUE(is_isomorphic(delete_elements(r10, r10.set(detail::bit(e))), k33));
}

TEST(Zoo, SpikeLabels) {
  const auto s = zoo::tipped_spike(3);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3", "t"}));
  EXPECT_EQ(zoo::tipless_spike(4).representation().to_string(), "10000111\n01001011\n00101101\n00011110\n");
}

TEST(Zoo, MakeParsesSpecs) {
  EXPECT_EQ(zoo::make("s8").representation(), zoo::s8().representation());
  EXPECT_EQ(zoo::make("K:5").size(), 10);
  EXPECT_EQ(zoo::make("K*:5").rank(), 6);
  EXPECT_EQ(zoo::make("Kb:3,3").size(), 9);
  EXPECT_EQ(zoo::make("r10").rank(), 5);
  EXPECT_EQ(zoo::make("ag:4").size(), 8);
  EXPECT_EQ(zoo::make("ag+e:4").size(), 9);
  EXPECT_EQ(zoo::make("pg:3").size(), 7);
  EXPECT_EQ(zoo::make("u1:6").size(), 6);
  EXPECT_EQ(zoo::make("spike:4").size(), 8);
  EXPECT_EQ(zoo::make("spike:4:tipped").size(), 9);
  EXPECT_EQ(zoo::make("spike:4:tipless").size(), 8);
  EXPECT_EQ(zoo::make("dual:n5").rank(), 3);
  EXPECT_EQ(zoo::make("loop").rank(), 0);
  EXPECT_THROW(zoo::make("nonsense"), MalformedInput);
  EXPECT_THROW(zoo::make("K:x"), MalformedInput);
  EXPECT_THROW(zoo::make("K"), MalformedInput);
  EXPECT_THROW(zoo::make("spike:4:bent"), MalformedInput);
  EXPECT_THROW(zoo::make("pg:0"), ParameterOutOfRange);
}

}  // namespace
}  // namespace cdmat
