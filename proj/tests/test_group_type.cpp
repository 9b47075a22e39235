#include <gtest/gtest.h>

#include <unordered_set>

#include "liechain/errors.hpp"
#include "liechain/group_type.hpp"

using namespace liechain;

TEST(Canonicalize, LowRankCoincidences) {
  EXPECT_EQ(canonicalize(Family::SU, 1), GroupType::trivial());
  EXPECT_EQ(canonicalize(Family::SO, 1), GroupType::trivial());
  EXPECT_EQ(canonicalize(Family::Sp, 2), GroupType::simple(SimpleType::su(2)));
  EXPECT_EQ(canonicalize(Family::SO, 2), GroupType::torus(1));
  EXPECT_EQ(canonicalize(Family::SO, 3), GroupType::simple(SimpleType::su(2)));
  EXPECT_EQ(canonicalize(Family::SO, 4), GroupType(0, {SimpleType::su(2), SimpleType::su(2)}));
  EXPECT_EQ(canonicalize(Family::SO, 5), GroupType::simple(SimpleType::sp(4)));
  EXPECT_EQ(canonicalize(Family::SO, 6), GroupType::simple(SimpleType::su(4)));
  EXPECT_EQ(canonicalize(Family::SU, 5), GroupType::simple(SimpleType::su(5)));
  EXPECT_EQ(canonicalize(Family::SO, 7), GroupType::simple(SimpleType::so(7)));
}

TEST(Canonicalize, RejectsMalformedDegrees) {
  EXPECT_THROW(canonicalize(Family::Sp, 5), MalformedTypeError);
  EXPECT_THROW(canonicalize(Family::SU, 0), MalformedTypeError);
  EXPECT_THROW(canonicalize(Family::SO, -3), MalformedTypeError);
  EXPECT_THROW(SimpleType::so(6), MalformedTypeError);
  EXPECT_THROW(SimpleType::sp(2), MalformedTypeError);
  EXPECT_THROW(SimpleType::su(1), MalformedTypeError);
  EXPECT_THROW(SimpleType::exceptional(Family::SU), MalformedTypeError);
}

TEST(Dims, StandardFormulas) {
  EXPECT_EQ(dims(canonicalize(Family::E8)), (Dims{248, 8}));
  EXPECT_EQ(dims(canonicalize(Family::E7)), (Dims{133, 7}));
  EXPECT_EQ(dims(canonicalize(Family::E6)), (Dims{78, 6}));
  EXPECT_EQ(dims(canonicalize(Family::F4)), (Dims{52, 4}));
  EXPECT_EQ(dims(canonicalize(Family::G2)), (Dims{14, 2}));
  EXPECT_EQ(dims(SimpleType::su(3)), (Dims{8, 2}));
  EXPECT_EQ(dims(SimpleType::sp(6) ), (Dims{21, 3}));
  EXPECT_EQ(dims(SimpleType::so(9)), (Dims{36, 4}));
  EXPECT_EQ(dims(SimpleType::so(10)), (Dims{45, 5}));
  EXPECT_EQ(dims(GroupType::simple(SimpleType::sp(6)) * GroupType::torus(2)), (Dims{23, 5}));
  EXPECT_EQ(dims(GroupType::trivial()), (Dims{0, 0}));
}

TEST(Dims, CanonicalizationPreservesDimensionAndRank) {
  for (Family f : {Family::SU, Family::Sp, Family::SO}) {
    for (int n = 1; n <= 30; ++n) {
      if (f == Family::Sp && n % 2 != 0) continue;
      const GroupType g = canonicalize(f, n);
      std::int64_t dim = 0;
      std::int64_t rank = 0;
      switch (f) {
        case Family::SU: dim = n * n - 1; rank = n - 1; break;
        case Family::Sp: dim = n * (n + 1) / 2; rank = n / 2; break;
        default: dim = n * (n - 1) / 2; rank = n / 2; break;
      }
      EXPECT_EQ(dims(g), (Dims{dim, rank})) << family_name(f) << n;
    }
  }
}

TEST(GroupType, ProductIsCommutativeAndSorted) {
  const GroupType a = GroupType::simple(SimpleType::su(5)) * GroupType::torus(2);
  const GroupType b = GroupType::simple(SimpleType::sp(6)) * GroupType::simple(SimpleType::su(2));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b).torus_rank(), 2);
  EXPECT_EQ((a * b).factors().size(), 3u);
  EXPECT_EQ((a * b).spec(), "SU(2) x SU(5) x Sp(6) x T^2");
}

TEST(GroupType, SpecForms) {
  EXPECT_EQ(GroupType::trivial().spec(), "1");
  EXPECT_EQ(GroupType::torus(1).spec(), "T");
  EXPECT_EQ(GroupType::torus(3).spec(), "T^3");
  EXPECT_EQ(power(GroupType::simple(SimpleType::su(2)), 4).spec(), "SU(2)^4");
  EXPECT_EQ(canonicalize(Family::G2).spec(), "G2");
}

TEST(GroupType, DerivedGroupedAndRemoval) {
  const GroupType g(3, {SimpleType::su(2), SimpleType::su(2), SimpleType::so(8)});
  EXPECT_EQ(g.derived(), GroupType(0, {SimpleType::su(2), SimpleType::su(2), SimpleType::so(8)}));
  const auto groups = g.grouped();
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].multiplicity, 2);
  EXPECT_EQ(groups[1].type, SimpleType::so(8));
  EXPECT_EQ(g.multiplicity(SimpleType::su(2)), 2);
  EXPECT_EQ(g.without_one(SimpleType::su(2)), GroupType(3, {SimpleType::su(2), SimpleType::so(8)}));
  EXPECT_FALSE(g.is_semisimple());
  EXPECT_TRUE(g.derived().is_semisimple());
  EXPECT_TRUE(GroupType::torus(4).is_torus());
  EXPECT_TRUE(GroupType::trivial().is_torus());
}

TEST(GroupType, HashDistinguishesTorusRank) {
  std::unordered_set<GroupType> set;
  for (int z = 0; z < 5; ++z) {
    set.insert(GroupType::torus(z));
    set.insert(GroupType::simple(SimpleType::su(3)).with_torus(z));
  }
  EXPECT_EQ(set.size(), 10u);
}

TEST(Invariants, CanonicalizeIsIdempotent) {
  for (Family f : {Family::SU, Family::Sp, Family::SO}) {
    for (int n = 1; n <= 100; ++n) {
      if (f == Family::Sp && n % 2 != 0) continue;
      const GroupType once = canonicalize(f, n);
      GroupType twice = GroupType::torus(once.torus_rank());
      for (const auto& s : once.factors()) {
        twice = twice * (is_classical(s.family()) ? canonicalize(s.family(), s.degree()) : canonicalize(s.family()));
      }
      EXPECT_EQ(twice, once) << family_name(f) << n;
    }
  }
}

TEST(Invariants, DimsAreAdditive) {
  const std::vector<GroupType> samples = {
      GroupType::trivial(), GroupType::torus(3), canonicalize(Family::SO, 4), canonicalize(Family::E7),
      GroupType::simple(SimpleType::sp(10)) * GroupType::torus(1), canonicalize(Family::SU, 9)};
  for (const auto& a : samples) {
    for (const auto& b : samples) EXPECT_EQ(dims(a * b), dims(a) + dims(b)) << a.spec() << " * " << b.spec();
  }
}

TEST(Invariants, PositiveRootCountAtLeastTwiceRank) {
  for (Family f : {Family::SU, Family::Sp, Family::SO}) {
    for (int n = 2; n <= 100; ++n) {
      if ((f == Family::Sp && (n < 4 || n % 2 != 0)) || (f == Family::SO && n < 7)) continue;
      const SimpleType s = SimpleType::classical(f, n);
      EXPECT_LE(2 * s.rank(), s.dim() - s.rank()) << s.spec();
    }
  }
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
    const SimpleType s = SimpleType::exceptional(f);
    EXPECT_LE(2 * s.rank(), s.dim() - s.rank()) << s.spec();
  }
}
