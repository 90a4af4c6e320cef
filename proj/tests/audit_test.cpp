#include <gtest/gtest.h>

#include "cdmat/audit.hpp"

using namespace cdmat;

namespace {

const audit::Result& find(const std::vector<audit::Result>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.lemma == id) return r;
  throw std::runtime_error("missing audit " + id);
}

}  // namespace

TEST(Audit, SingleAuditSelection) {
  audit::Options o;
  o.lemma = "1.2";
  const auto rs = audit::run(o);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].lemma, "1.2");
  EXPECT_EQ(rs[0].checked, 353u);
  EXPECT_TRUE(rs[0].passed());
}

TEST(Audit, N5SeriesMinorIffSkewAtNine) {
  audit::Options o;
  o.lemma = "4.2";
  const auto rs = audit::run(o);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_TRUE(rs[0].passed());
}

TEST(Audit, InvalidOptions) {
  audit::Options o;
  o.lemma = "9.9";
  EXPECT_THROW(audit::run(o), ParameterOutOfRange);
  o.lemma.clear();
  o.max_elements = 15;
  EXPECT_THROW(audit::run(o), ParameterOutOfRange);
}

TEST(Audit, CorruptedCircuitDifferenceIsCaught) {
  // Claims every matroid is circuit-difference.
  audit::Oracles bad;
  bad.circuit_difference = [](const BinaryMatroid&) { return true; };
  audit::Options o;
  o.max_elements = 7;
  o.lemma = "1.2";
  const auto rs = audit::run(o, bad);
  ASSERT_EQ(rs.size(), 1u);
  ASSERT_FALSE(rs[0].passed());
  // Every witness parses back to a matroid that really has a skew pair.
  for (const auto& f : rs[0].failures) {
    const auto first_line_end = f.witness.find("skew");
    const auto m = io::parse_string(f.witness.substr(0, first_line_end));
    EXPECT_TRUE(skew_circuit_pair(m).has_value());
    EXPECT_FALSE(is_circuit_difference(m));
  }
}

TEST(Audit, CorruptedSkewOracleIsCaughtByN5Audit) {
  audit::Oracles bad;
  bad.has_skew_pair = [](const BinaryMatroid& m) { return m.size() % 2 == 0; };
  audit::Options o;
  o.max_elements = 7;
  o.lemma = "4.2";
  const auto rs = audit::run(o, bad);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_FALSE(rs[0].passed());
  for (const auto& f : rs[0].failures) EXPECT_FALSE(f.witness.empty());
}

TEST(Audit, CorruptedCircuitComplementaryIsCaughtByCosimpleClassification) {
  audit::Oracles bad;
  bad.circuit_complementary = [](const BinaryMatroid&) { return true; };
  audit::Options o;
  o.max_elements = 7;
  o.lemma = "2.8";
  const auto rs = audit::run(o, bad);
  EXPECT_FALSE(rs.at(0).passed());
}

TEST(Audit, SmallRunPassesAndIsDeterministic) {
  audit::Options o;
  o.max_elements = 7;
  o.seed = 11;
  const auto a = audit::run(o), b = audit::run(o);
  ASSERT_EQ(a.size(), audit::audit_ids().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].passed()) << a[i].lemma << ": " << (a[i].failures.empty() ? "" : a[i].failures[0].description);
    EXPECT_EQ(a[i].checked, b[i].checked);
    EXPECT_EQ(a[i].corpus, b[i].corpus);
  }
  EXPECT_EQ(find(a, "2.8").checked, 1u);  // only U1,4 below 10 elements
}
