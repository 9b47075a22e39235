#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "liechain/chains.hpp"
#include "liechain/errors.hpp"
#include "liechain/oracle.hpp"
#include "liechain/theorems.hpp"

using namespace liechain;

namespace {

GroupType g(const char* text) { return parse_group(text); }

std::vector<std::string> node_specs(const Chain& c) {
  std::vector<std::string> out;
  for (const auto& n : c.nodes) out.push_back(n.spec());
  return out;
}

}  // namespace

TEST(MaxChain, SU3) {
  const Chain c = max_chain(g("SU(3)"));
  EXPECT_EQ(node_specs(c), (std::vector<std::string>{"SU(3)", "SU(2) x T", "SU(2)", "T", "1"}));
  ASSERT_EQ(c.steps.size(), 4u);
  EXPECT_TRUE(c.steps[0].is<kind::Reducible>());
  EXPECT_TRUE(c.steps[1].is<kind::TorusDrop>());
  EXPECT_TRUE(c.steps[2].is<kind::Reducible>());
  EXPECT_TRUE(c.steps[3].is<kind::TorusDrop>());
}

TEST(MaxChain, F4GoesThroughSO9) {
  const Chain c = max_chain(g("F4"));
  EXPECT_EQ(c.length(), 11u);
  EXPECT_EQ(c.nodes[1], g("SO(9)"));
  EXPECT_NE(verify_chain(c).overall, Overall::invalid);
}

TEST(MaxChain, Sp4) {
  const Chain c = max_chain(g("Sp(4)"));
  EXPECT_EQ(c.length(), 5u);
  EXPECT_EQ(c.nodes[1], g("SU(2)^2"));
  EXPECT_EQ(verify_chain(c).overall, Overall::valid);
}

TEST(MaxChain, ClassicalLengthsAndVerification) {
  for (Family f : {Family::SU, Family::Sp, Family::SO}) {
    for (int n = 2; n <= 50; ++n) {
      if ((f == Family::Sp && (n < 4 || n % 2 != 0)) || (f == Family::SO && n < 7)) continue;
      const GroupType grp = GroupType::simple(SimpleType::classical(f, n));
      const Chain c = max_chain(grp);
      EXPECT_EQ(static_cast<std::int64_t>(c.length()), f_classical(f, n)) << grp.spec();
      EXPECT_NE(verify_chain(c).overall, Overall::invalid) << grp.spec() << ": " << verify_chain(c).reason;
    }
  }
}

TEST(MaxChain, LengthMatchesFormulaOnEnumeratedGroups) {
  for (const auto& grp : enumerate_groups(40, 12)) {
    const Chain c = max_chain(grp);
    EXPECT_EQ(static_cast<std::int64_t>(c.length()), length(grp)) << grp.spec();
    EXPECT_NE(verify_chain(c).overall, Overall::invalid) << grp.spec();
  }
}

TEST(MinChain, CuratedDescents) {
  EXPECT_EQ(node_specs(*min_chain(g("SO(7)"))), (std::vector<std::string>{"SO(7)", "G2", "SU(2)", "T", "1"}));
  EXPECT_EQ(node_specs(*min_chain(g("SU(2)^3"))),
            (std::vector<std::string>{"SU(2)^3", "SU(2)^2", "SU(2)", "T", "1"}));
  EXPECT_EQ(node_specs(*min_chain(g("E6"))), (std::vector<std::string>{"E6", "F4", "SU(2)", "T", "1"}));
  EXPECT_EQ(node_specs(*min_chain(g("SU(3) x T"))), (std::vector<std::string>{"SU(3) x T", "SU(3)", "SU(2)", "T", "1"}));
}

TEST(MinChain, LengthIsDepthForEverySimpleType) {
  for (const auto& s : simple_types_up_to_degree(60)) {
    const auto c = min_chain(GroupType::simple(s));
    ASSERT_TRUE(c.has_value()) << s.spec();
    EXPECT_EQ(static_cast<std::int64_t>(c->length()), depth_simple(s)) << s.spec();
    EXPECT_NE(verify_chain(*c).overall, Overall::invalid) << s.spec();
  }
}

TEST(MinChain, CuratedDescentsVerifyWithoutUnknownSteps) {
  for (const char* text : {"SU(2)", "SU(3)", "SU(7)", "Sp(4)", "Sp(6)", "SO(7)", "SO(8)", "G2"}) {
    const auto c = min_chain(g(text));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(verify_chain(*c).overall, Overall::valid) << text;
  }
}

TEST(MinChain, IntervalCasesNeedTheOracle) {
  EXPECT_FALSE(min_chain(g("SU(4) x Sp(4)")).has_value());
  EXPECT_FALSE(min_chain(g("SU(7) x SU(2)")).has_value());
  Oracle oracle;
  const auto c = min_chain(g("SU(4) x Sp(4)"), &oracle);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(static_cast<std::int64_t>(c->length()), oracle.depth(g("SU(4) x Sp(4)")));
  EXPECT_EQ(verify_chain(*c).overall, Overall::valid);
  EXPECT_FALSE(min_chain(g("SU(7) x SU(2)"), &oracle).has_value());
}

TEST(Verify, Examples) {
  EXPECT_EQ(verify_chain(max_chain(g("SU(4)"))).overall, Overall::valid);

  const VerifyReport bad = verify_chain(parse_chain("SU(3)\nT\n1\n"));
  EXPECT_EQ(bad.overall, Overall::invalid);
  ASSERT_TRUE(bad.invalid_step.has_value());
  EXPECT_EQ(*bad.invalid_step, 0u);

  EXPECT_EQ(verify_chain(parse_chain("G2\nSU(3)\nSU(2)\nT\n1\n")).overall, Overall::valid);
}

TEST(Verify, MalformedChains) {
  EXPECT_EQ(verify_chain(Chain{}).overall, Overall::invalid);
  EXPECT_EQ(verify_chain(parse_chain("SU(2)\nT\n")).overall, Overall::invalid);
  const VerifyReport up = verify_chain(parse_chain("SU(2)\nSU(3)\n1\n"));
  EXPECT_EQ(up.overall, Overall::invalid);
  EXPECT_EQ(*up.invalid_step, 0u);
}

TEST(Verify, UnknownStepsOutsideCuratedSet) {
  const VerifyReport r = verify_chain(parse_chain("SU(7)\nSU(3)\nSU(2)\nT\n1\n"));
  EXPECT_EQ(r.overall, Overall::valid_modulo_unknown);
  EXPECT_EQ(r.unknown_steps, (std::vector<std::size_t>{0}));
}

TEST(ParseChain, CommentsAndErrors) {
  const Chain c = parse_chain("# SU(3) chain\n\nSU(3)\n  SU(2) x T\n# note\nSU(2)\nT\n1\n");
  EXPECT_EQ(c.length(), 4u);
  EXPECT_EQ(parse_chain(format_chain(c)).nodes, c.nodes);
  try {
    parse_chain("SU(3)\nSU(\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ChainInvariants, NodesStrictlyDecrease) {
  Oracle oracle;
  for (const auto& grp : enumerate_groups(30, 10)) {
    std::vector<Chain> chains{max_chain(grp)};
    if (auto c = min_chain(grp, &oracle)) chains.push_back(*c);
    for (const auto& c : chains) {
      for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
        const Dims a = dims(c.nodes[i]);
        const Dims b = dims(c.nodes[i + 1]);
        EXPECT_TRUE(b.dim < a.dim || (b.dim == a.dim && b.rank < a.rank)) << grp.spec() << " step " << i;
      }
    }
  }
}

TEST(ChainInvariants, MinChainLengthIsDepthWhereAvailable) {
  Oracle oracle;
  for (const auto& grp : enumerate_groups(40, 12)) {
    const auto c = min_chain(grp, &oracle);
    if (!c) continue;
    EXPECT_EQ(static_cast<std::int64_t>(c->length()), refined_depth(grp, oracle).exact()) << grp.spec();
    EXPECT_NE(verify_chain(*c).overall, Overall::invalid) << grp.spec();
  }
}

TEST(ChainInvariants, TorusChainDropsOneCircleAtATime) {
  for (int k = 1; k <= 8; ++k) {
    const Chain c = max_chain(GroupType::torus(k));
    EXPECT_EQ(c.length(), static_cast<std::size_t>(k));
    for (const auto& step : c.steps) EXPECT_TRUE(step.is<kind::TorusDrop>());
  }
}
