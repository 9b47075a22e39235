#include <gtest/gtest.h>

#include <set>
#include <string>

#include "liechain/oracle.hpp"
#include "liechain/theorems.hpp"

using namespace liechain;

namespace {

std::set<std::string> failing_claims(const Report& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks) {
    if (!c.pass) out.insert(c.claim);
  }
  return out;
}

const SuiteOptions kSmall{20, 40};

}  // namespace

TEST(Enumerate, SmallDimensions) {
  EXPECT_EQ(enumerate_groups(3, 60).size(), 5u);
  EXPECT_EQ(enumerate_groups(8, 60).size(), 19u);
  EXPECT_EQ(enumerate_groups(0, 60).size(), 1u);
}

TEST(Enumerate, DistinctAndBounded) {
  const auto groups = enumerate_groups(60, 60);
  const std::set<GroupType> distinct(groups.begin(), groups.end());
  EXPECT_EQ(distinct.size(), groups.size());
  for (const auto& grp : groups) EXPECT_LE(dims(grp).dim, 60) << grp.spec();
  EXPECT_TRUE(distinct.count(parse_group("SU(3) x SU(2) x T^49")));
  EXPECT_TRUE(distinct.count(parse_group("SO(11)")));
  EXPECT_FALSE(distinct.count(parse_group("SO(12)")));
}

TEST(Enumerate, SimpleTypesByDegree) {
  // SU_2..SU_8, Sp_4..Sp_8, SO_7..SO_8, five exceptional types.
  EXPECT_EQ(simple_types_up_to_degree(8).size(), 7u + 3u + 2u + 5u);
}

TEST(CuratedScope, Sizes) {
  EXPECT_EQ(curated_scope(1).size(), 15u);
  for (const auto& grp : curated_scope(3)) EXPECT_TRUE(in_curated_closure(grp)) << grp.spec();
}

TEST(Suites, FormulaSuitesPass) {
  Oracle oracle;
  for (const char* name : {"general", "dimlen", "sqrt", "smalll", "liedep", "depbds", "ld", "complex", "tables",
                           "lendim"}) {
    const Report r = run_suite(name, kSmall, oracle);
    EXPECT_FALSE(r.checks.empty()) << name;
    EXPECT_TRUE(failing_claims(r).empty()) << name << " fails " << *failing_claims(r).begin();
  }
}

// The only disagreement with the stated classification is SU(3) x SU(2),
// whose depth is 4 rather than 5.
TEST(Suites, ChainDifferenceOneMismatchIsSU3TimesSU2) {
  Oracle oracle;
  const Report r = suites::cd(kSmall, oracle);
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    EXPECT_EQ(parse_group(c.inputs).derived(), parse_group("SU(3) x SU(2)")) << c.inputs;
    EXPECT_EQ(c.lhs, "cd=2");
  }
  EXPECT_FALSE(r.all_pass());
}

TEST(Suites, LcdFailsOnlyInTheG2PerFactorBound) {
  Oracle oracle;
  const Report r = suites::lcd(kSmall, oracle);
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    EXPECT_EQ(c.claim, "lcd.simple_factor");
    EXPECT_EQ(c.inputs, "G2 a=0");
  }
}

TEST(Suites, ComplexDepthTableIsOneMore) {
  for (const auto& s : simple_types_up_to_degree(10)) {
    const std::int64_t c = suites::complex_depth_table(s);
    if (c >= 0) {
      EXPECT_EQ(c, depth_simple(s) + 1) << s.spec();
    }
  }
}

TEST(Suites, MinimalClassicalLength) {
  EXPECT_EQ(suites::min_classical_length(7), 7);
  EXPECT_EQ(suites::min_classical_length(26), 31);
  EXPECT_EQ(suites::min_classical_length(248), 309);
}

TEST(Suites, UnknownNameThrows) {
  Oracle oracle;
  EXPECT_THROW(run_suite("nope", kSmall, oracle), DomainError);
}
