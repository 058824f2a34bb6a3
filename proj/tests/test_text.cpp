#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace kcube;
using kcube::testing::pt;

TEST(PointText, FormatAndParse) {
  EXPECT_EQ(format_point(pt(3, {2, 0, 1})), "2,0,1");
  EXPECT_EQ(parse_point("2,0,1", CubeParams(3, 3)), pt(3, {2, 0, 1}));
  EXPECT_EQ(parse_point("11,0", CubeParams(12, 2)), pt(12, {11, 0}));
}

TEST(PointText, Errors) {
  const CubeParams p(3, 3);
  EXPECT_THROW(parse_point("2,0", p), domain_error);
  EXPECT_THROW(parse_point("2,0,3", p), domain_error);
  EXPECT_THROW(parse_point("2,,1", p), parse_error);
  EXPECT_THROW(parse_point("2,a,1", p), parse_error);
  EXPECT_THROW(parse_point("201", p), domain_error);
  EXPECT_THROW(parse_point("", p), parse_error);
}

TEST(PointText, RoundTripOnRandomPoints) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 30)(rng);
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<int> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const Point a(CubeParams(k, n), c);
    EXPECT_EQ(parse_point(format_point(a), a.params()), a);
  }
}

TEST(FamilyText, FormatAndParse) {
  const CubeParams p(3, 2);
  const Family f = parse_family("2,0;0,2", p);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(format_family(f), "0,2;2,0");
  EXPECT_EQ(format_family(parse_family("", p)), "");
  EXPECT_TRUE(parse_family("", p).empty());
  EXPECT_THROW(parse_family("0,2;", p), parse_error);
}

TEST(VariantText, FormatAndParse) {
  const CubeParams p(5, 3);
  EXPECT_EQ(parse_variant("standard", p), LowerHalfSpec::standard(p));
  EXPECT_EQ(parse_variant("slice:1", p), LowerHalfSpec::slice(p, 1));
  EXPECT_EQ(parse_variant("shift:2", p), LowerHalfSpec::shift(p, 2));
  for (const auto& s : all_variants(p)) EXPECT_EQ(parse_variant(format_variant(s), p), s);
  EXPECT_THROW(parse_variant("slice", p), parse_error);
  EXPECT_THROW(parse_variant("slice:x", p), parse_error);
  EXPECT_THROW(parse_variant("rotate:1", p), parse_error);
  EXPECT_THROW(parse_variant("slice:2", p), domain_error);
}
