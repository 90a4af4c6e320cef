#include "cdmat/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cdmat/isomorphism.hpp"
#include "test_support.hpp"

#ifndef CDMAT_TEST_DATA
#error "CDMAT_TEST_DATA must point at tests/data"
#endif

namespace cdmat {
namespace {

const std::string kData = CDMAT_TEST_DATA;

TEST(Parse, S8MatrixFile) {
  const auto m = io::parse_input(kData + "/s8.txt");
  EXPECT_EQ(m.size(), 8);
  EXPECT_EQ(m.rank(), 4);
  EXPECT_EQ(m.representation(), zoo::s8().representation());
}

TEST(Parse, GraphFile) {
  const auto m = io::parse_input(kData + "/k4.txt");
  EXPECT_EQ(m.size(), 6);
  EXPECT_EQ(m.rank(), 3);
  EXPECT_TRUE(is_isomorphic(m, zoo::complete(4)));
  EXPECT_EQ(io::parse_input("graph:@" + kData + "/k4.txt").circuits(), m.circuits());
}

TEST(Parse, NameSpec) {
  const auto m = io::parse_input("r10");
  EXPECT_EQ(m.size(), 10);
  EXPECT_EQ(m.rank(), 5);
}

TEST(Parse, LabelsAndComments) {
  const auto m = io::parse_string("# a triangle\n2 3\n101\n011\n\nx y z\n");
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(m.rank(), 2);
}

TEST(Parse, GraphWithParallelEdgesAndLoops) {
  const auto m = io::parse_string("graph\nu v\nu v\nw w\n");
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.rank(), 1);
  EXPECT_TRUE(m.is_loop(2));
}

void expect_error_at(const std::string& text, int line) {
  try {
    (void)io::parse_string(text);
    FAIL() << "no error for:\n" << text;
  } catch (const MalformedInput& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(Parse, ErrorsCarryLineNumbers) {
  expect_error_at("", 0);
  expect_error_at("2\n", 1);
  expect_error_at("2 x\n", 1);
  expect_error_at("2 3\n101\n01\n", 3);
  expect_error_at("2 3\n101\n012\n", 3);
  expect_error_at("2 3\n101\n", 2);
  expect_error_at("1 2\n11\na\n", 3);
  expect_error_at("1 2\n11\na b\nextra\n", 4);
  expect_error_at("graph\na b\na\n", 3);
  EXPECT_THROW(io::parse_input("no-such-spec"), MalformedInput);
  EXPECT_THROW(io::parse_input("graph:@/nonexistent"), MalformedInput);
}

TEST(Parse, RoundTripIsIsomorphic) {
  std::mt19937_64 rng(61);
  std::vector<BinaryMatroid> cases{zoo::s8(), zoo::r10(), zoo::n5(), zoo::pg(3), BinaryMatroid(), zoo::loop()};
  for (int i = 0; i < 100; ++i) cases.push_back(testing::random_matroid(rng, 6, 10));
  for (const auto& m : cases) {
    const auto back = io::parse_string(io::to_matrix_string(m));
    EXPECT_EQ(back.labels(), m.labels());
    EXPECT_EQ(back.circuits(), m.circuits());
    EXPECT_TRUE(is_isomorphic(back, m));
  }
}

}  // namespace
}  // namespace cdmat
