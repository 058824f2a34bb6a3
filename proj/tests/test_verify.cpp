#include <gtest/gtest.h>

#include "support.hpp"

using namespace kcube;
using namespace kcube::verify;

namespace {

std::string detail_of(const VerifyReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "<missing>";
}

std::vector<std::string> json_lines(const std::vector<VerifyReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(to_json_line(r));
  return out;
}

}  // namespace

TEST(WeightLemma, CountsCrossPairs) {
  const auto spec = LowerHalfSpec::standard(CubeParams(2, 3));
  std::uint64_t low = 0, high = 0;
  for (const auto& a : enumerate_lower_half(spec)) (a[0] == 0 ? low : high)++;
  const auto r = verify_weight_lemma(spec);
  EXPECT_EQ(r.status(), Status::pass);
  EXPECT_EQ(r.checked, low * high);
  EXPECT_EQ(r.checked, 3u);
}

TEST(WeightLemma, VacuousWhenHighSliceEmpty) {
  const auto r = verify_weight_lemma(LowerHalfSpec::standard(CubeParams(3, 2)));
  EXPECT_EQ(r.status(), Status::vacuous);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 0u);
  EXPECT_FALSE(r.note.empty());
}

TEST(Bijection, Examples) {
  const auto r1 = verify_bijection(LowerHalfSpec::standard(CubeParams(3, 3)));
  EXPECT_EQ(r1.status(), Status::pass);
  EXPECT_EQ(r1.checked, 9u);
  const auto r2 = verify_bijection(LowerHalfSpec::slice(CubeParams(5, 2), 1));
  EXPECT_EQ(r2.status(), Status::pass);
  EXPECT_EQ(r2.checked, 5u);
  const CubeParams p(4, 3);
  for (int z = 0; z <= g_prime_threshold(p); ++z)
    EXPECT_EQ(verify_bijection(LowerHalfSpec::shift(p, z)).status(), Status::pass) << z;
}

TEST(Bijection, RequiresTwoDimensions) {
  EXPECT_THROW(verify_bijection(LowerHalfSpec::standard(CubeParams(3, 1))), domain_error);
}

TEST(Preservation, PairCounts) {
  const auto r1 = verify_preservation(LowerHalfSpec::standard(CubeParams(2, 3)));
  EXPECT_EQ(r1.status(), Status::pass);
  EXPECT_EQ(r1.checked, 10u);
  const auto r2 = verify_preservation(LowerHalfSpec::standard(CubeParams(3, 3)));
  EXPECT_EQ(r2.status(), Status::pass);
  EXPECT_EQ(r2.checked, 45u);
  EXPECT_EQ(detail_of(r2, "mirrored_pairs"), "45");
  EXPECT_EQ(verify_preservation(LowerHalfSpec::slice(CubeParams(5, 2), 1)).status(), Status::pass);
}

TEST(Census, Anchors) {
  for (int k : {2, 3}) {
    const auto r = verify_census(LowerHalfSpec::standard(CubeParams(k, 2)));
    EXPECT_EQ(r.status(), Status::pass);
    EXPECT_EQ(detail_of(r, "lower_half_count"), "2");
    EXPECT_EQ(detail_of(r, "cube_count"), "2");
    EXPECT_EQ(detail_of(r, "oracle_lower_half_count"), "2");
  }
  const auto r = verify_census(LowerHalfSpec::standard(CubeParams(3, 3)));
  EXPECT_EQ(r.status(), Status::pass);
  EXPECT_EQ(detail_of(r, "lower_half_count"), "9");
  EXPECT_EQ(detail_of(r, "oracle_lower_half_count"), "9");
  EXPECT_EQ(detail_of(r, "oracle_cube_count"), "9");
}

TEST(Census, SkipsAboveLimit) {
  Options opt;
  opt.census_max_points = 8;
  const auto r = verify_census(LowerHalfSpec::standard(CubeParams(3, 3)), opt);
  EXPECT_EQ(r.status(), Status::skipped);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 0u);
}

TEST(Structure, PassesOnGrid) {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2; n <= 3; ++n)
      for (const auto& s : all_variants(CubeParams(k, n))) EXPECT_EQ(verify_structure(s).status(), Status::pass);
}

TEST(Report, FailureRecordsWitnessAndCapsList) {
  Options opt;
  opt.mutation = Mutation::drop_complement;
  const auto r = verify_bijection(LowerHalfSpec::standard(CubeParams(3, 3)), opt);
  EXPECT_EQ(r.status(), Status::fail);
  ASSERT_FALSE(r.witnesses.empty());

  const auto big = verify_preservation(LowerHalfSpec::standard(CubeParams(5, 4)), opt);
  EXPECT_GT(big.failures, max_witnesses);
  EXPECT_EQ(big.witnesses.size(), max_witnesses);
}

TEST(Report, PassIffNoWitnesses) {
  for (const auto& r : verify_all(Grid{2, 3, 2, 3, true})) EXPECT_EQ(r.ok(), r.witnesses.empty());
}

TEST(Mutants, EachIsCaught) {
  const Grid grid{2, 4, 2, 3, true};
  for (auto m : {Mutation::drop_complement, Mutation::g_for_g_prime, Mutation::always_self_intersecting}) {
    Options opt;
    opt.mutation = m;
    EXPECT_FALSE(all_ok(verify_all(grid, opt))) << to_string(m);
  }
  EXPECT_TRUE(all_ok(verify_all(grid)));
}

TEST(Mutants, Names) {
  for (auto m : {Mutation::none, Mutation::drop_complement, Mutation::g_for_g_prime,
                 Mutation::always_self_intersecting})
    EXPECT_EQ(parse_mutation(to_string(m)), m);
  EXPECT_THROW(parse_mutation("nope"), parse_error);
}

TEST(VerifyAll, EmptyGrid) {
  EXPECT_TRUE(verify_all(Grid{3, 2, 2, 4, true}).empty());
  EXPECT_TRUE(all_ok({}));
}

TEST(VerifyAll, CanonicalOrderAndThreadIndependence) {
  const Grid grid{2, 4, 2, 3, true};
  const auto serial = verify_all(grid);
  ASSERT_FALSE(serial.empty());
  EXPECT_EQ(serial[0].lemma, "structure");
  EXPECT_EQ(serial[1].lemma, "weight");
  EXPECT_EQ(serial[4].lemma, "census");
  EXPECT_EQ(serial[0].k, 2);
  EXPECT_EQ(serial.back().k, 4);
  Options opt;
  opt.threads = 4;
  EXPECT_EQ(json_lines(verify_all(grid, opt)), json_lines(serial));
}

TEST(VerifyAll, RejectsOneDimensionalCells) {
  EXPECT_THROW(verify_all(Grid{2, 3, 1, 2, true}), domain_error);
}

TEST(Json, Layout) {
  const auto r = verify_census(LowerHalfSpec::slice(CubeParams(5, 2), 1));
  const auto j = to_json(r);
  EXPECT_EQ(j["lemma"], "census");
  EXPECT_EQ(j["variant"], "slice:1");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["witnesses"].is_array());
  EXPECT_TRUE(j["details"].is_object());
  EXPECT_FALSE(j.contains("wall_ms"));
  EXPECT_TRUE(to_json(r, true).contains("wall_ms"));
}
