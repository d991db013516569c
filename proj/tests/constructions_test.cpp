#include <gtest/gtest.h>

#include <set>

#include "dfkit/admissibility.hpp"
#include "dfkit/constructions.hpp"
#include "oracle.hpp"

using namespace dfkit;

namespace {

Ring ring_of(std::vector<u64> qs) { return Ring::build(qs); }

std::vector<Block> negate(const Group& g, const std::vector<Block>& blocks) {
  std::vector<Block> out;
  for (const auto& b : blocks) {
    std::vector<u64> n;
    for (auto x : b) n.push_back(g.neg(x));
    out.push_back(make_block(g, n));
  }
  return out;
}

}  // namespace

TEST(Orbit, SevenAndThirteen) {
  const auto f7 = orbit_ddf(Action::multiplier(Group::cyclic(7), 2));
  EXPECT_EQ(f7.blocks(), (std::vector<Block>{{1, 2, 4}, {3, 5, 6}}));
  EXPECT_TRUE(oracle::is_df(f7.group(), f7.blocks(), 2));

  const auto f13 = orbit_ddf(Action::multiplier(Group::cyclic(13), 3));
  EXPECT_EQ(f13.size(), 4u);
  EXPECT_TRUE(oracle::is_df(f13.group(), f13.blocks(), 2));
}

TEST(Orbit, FixedPointIsReported) {
  try {
    orbit_ddf(Action::multiplier(Group::cyclic(8), 3));
    FAIL();
  } catch (const NotSemiregular& e) {
    EXPECT_EQ(e.witness().element, 4u);
  }
}

TEST(OrbitSplit, Examples) {
  const auto [a, b] = orbit_ddf_split(Action::multiplier(Group::cyclic(7), 2));
  EXPECT_EQ(a.blocks(), (std::vector<Block>{{1, 2, 4}}));
  EXPECT_EQ(b.blocks(), (std::vector<Block>{{3, 5, 6}}));

  const auto act13 = Action::multiplier(Group::cyclic(13), 3);
  const auto [c, d] = orbit_ddf_split(act13);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(oracle::is_df(c.group(), c.blocks(), 1));
  EXPECT_TRUE(oracle::is_df(d.group(), d.blocks(), 1));
  EXPECT_EQ(d.blocks(), negate(c.group(), c.blocks()));
  std::set<Block> both(c.blocks().begin(), c.blocks().end());
  both.insert(d.blocks().begin(), d.blocks().end());
  const auto whole = orbit_ddf(act13).blocks();
  EXPECT_EQ(both, std::set<Block>(whole.begin(), whole.end()));

  // 5 has order 4 modulo 13: v k is even.
  EXPECT_THROW(orbit_ddf_split(Action::multiplier(Group::cyclic(13), 5)), Error);
}

TEST(Furino, Examples) {
  const auto f = furino_ddf_cyclic(7, 3, false);
  EXPECT_TRUE(oracle::is_df(f.group(), f.blocks(), 2));
  const auto h = furino_ddf(ring_of({7, 13}), 3, true);
  EXPECT_EQ(h.size(), 15u);
  EXPECT_TRUE(oracle::is_df(h.group(), h.blocks(), 1));
  try {
    furino_ddf_cyclic(10, 3, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2 ≢ 1 (mod 3)"), std::string::npos) << e.what();
  }
}

TEST(Furino, CyclicUnit) {
  EXPECT_EQ(cyclic_unit_of_order(7, 3), 2u);
  EXPECT_EQ(multiplicative_order_mod(cyclic_unit_of_order(91, 3), 91), 3u);
  EXPECT_THROW(cyclic_unit_of_order(10, 3), Error);
}

TEST(Cyclotomic, SevenAsRing) {
  const auto r = ring_of({7});
  EXPECT_EQ(cyclotomic_s_set(r.factors()[0], 3), (std::vector<Field::Code>{3}));
  const auto f = cyclotomic_half_ddf(r, 3);
  EXPECT_EQ(f.blocks(), (std::vector<Block>{{3, 5, 6}}));
  EXPECT_TRUE(oracle::is_df(f.group(), f.blocks(), 1));
}

TEST(Cyclotomic, NinetyOne) {
  const auto r = ring_of({7, 13});
  EXPECT_EQ(nonzero_associate_classes(r).size(), 3u);
  EXPECT_EQ(cyclotomic_representatives(r, 3).size(), 15u);
  const auto f = cyclotomic_half_ddf(r, 3);
  EXPECT_EQ(f.size(), 15u);
  EXPECT_TRUE(oracle::is_df(f.group(), f.blocks(), 1));
  EXPECT_NE(classify_family(f), FamilyKind::plain);
}

TEST(Cyclotomic, R1729) {
  const auto r = ring_of({7, 13, 19});
  const auto classes = nonzero_associate_classes(r);
  ASSERT_EQ(classes.size(), 7u);
  EXPECT_EQ(classes[0].support, (std::vector<std::size_t>{0}));
  EXPECT_EQ(classes[3].support, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(classes[6].support, (std::vector<std::size_t>{0, 1, 2}));

  const auto x = cyclotomic_representatives(r, 3);
  EXPECT_EQ(x.size(), 288u);
  const std::set<u64> xs(x.begin(), x.end());
  // sigma-sets quoted for the single-support classes.
  EXPECT_TRUE(xs.count(r.from_residues(std::vector<u64>{3, 0, 0})));
  EXPECT_TRUE(xs.count(r.from_residues(std::vector<u64>{0, 2, 0})));
  EXPECT_TRUE(xs.count(r.from_residues(std::vector<u64>{0, 4, 0})));

  const auto f = cyclotomic_half_ddf(r, 3);
  EXPECT_EQ(f.size(), 288u);
  EXPECT_TRUE(verify_df(f, 1).pass);
  const auto pdf = extend_to_pdf(f);
  EXPECT_EQ(pdf.size(), 288u + 865u);
  EXPECT_EQ(classify_family(pdf), FamilyKind::partitioned);
}

TEST(Cyclotomic, EverySigmaChoiceWorks) {
  const auto r = ring_of({7, 13, 19});
  const auto classes = nonzero_associate_classes(r);
  // Replace the default factor of each multi-support class in turn.
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c].support) {
      const auto f = cyclotomic_half_ddf(r, 3, SigmaChoice{{c, i}});
      EXPECT_TRUE(verify_df(f, 1).pass) << c << ":" << i;
    }
  EXPECT_THROW(cyclotomic_half_ddf(r, 3, SigmaChoice{{0, 1}}), Error);
  EXPECT_THROW(cyclotomic_half_ddf(ring_of({7, 13}), 4), Error);
}

TEST(TrivialDs, Examples) {
  const auto d3 = trivial_ds(3);
  EXPECT_EQ(d3.set, (Block{1, 2, 3}));
  EXPECT_EQ(d3.params, (DSParams{4, 3, 2}));
  EXPECT_EQ(trivial_ds(1).params, (DSParams{2, 1, 0}));
  const auto d6 = trivial_ds(6);
  EXPECT_EQ(d6.params, (DSParams{7, 6, 5}));
  EXPECT_TRUE(oracle::is_df(d6.group, {d6.set}, 5));
}

TEST(UnitsHdm, Examples) {
  const auto h7 = units_hdm(ring_of({7}), 3);
  EXPECT_EQ(h7.rows()[0], (DiffMatrix::Row{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(verify_hdm(h7).pass);
  EXPECT_TRUE(verify_hdm(units_hdm(ring_of({7, 13}), 3)).pass);
  const auto h5 = units_hdm(ring_of({5}), 4);
  EXPECT_TRUE(verify_hdm(h5).pass);
  const auto dm5 = hdm_to_dm(h5);
  EXPECT_EQ(dm5.row_count(), 5u);
  EXPECT_TRUE(verify_dm(dm5).pass);
}

TEST(Product, TwentyEight) {
  const auto ds = trivial_ds(3);
  const Family over_g(ds.group, {ds.set});
  const auto r = ring_of({7});
  const auto f = product_ddf(over_g, furino_ddf(r, 3, false), units_hdm(r, 3));
  EXPECT_EQ(f.group().order(), 28u);
  EXPECT_EQ(f.size(), 9u);
  EXPECT_TRUE(oracle::is_df(f.group(), f.blocks(), 2));
  EXPECT_EQ(f.uncovered().size(), 1u);
  EXPECT_EQ(result1_ddf(3, r).blocks(), f.blocks());
}

TEST(Product, MismatchedBlockSizes) {
  const auto ds = trivial_ds(4);
  const Family over_g(ds.group, {ds.set});
  const auto r = ring_of({7});
  EXPECT_THROW(product_ddf(over_g, furino_ddf(r, 3, false), units_hdm(r, 3)), Error);
}

TEST(Result1, Examples) {
  const auto f65 = result1_ddf(4, ring_of({13}));
  EXPECT_EQ(f65.group().describe(), "Z_5 x GF(13)");
  EXPECT_TRUE(oracle::is_df(f65.group(), f65.blocks(), 3));
  const auto f364 = result1_ddf(3, ring_of({7, 13}));
  EXPECT_EQ(f364.group().order(), 364u);
  EXPECT_TRUE(oracle::is_df(f364.group(), f364.blocks(), 2));
  EXPECT_EQ(f364.uncovered().size(), 1u);
}

TEST(Singer, SmallCases) {
  const auto s23 = singer_ds(2, 3);
  EXPECT_EQ(s23.params, (DSParams{7, 3, 1}));
  EXPECT_TRUE(oracle::is_df(s23.group, {s23.set}, 1));
  const auto s33 = singer_ds(3, 3);
  EXPECT_EQ(s33.params, (DSParams{13, 4, 1}));
  EXPECT_TRUE(oracle::is_df(s33.group, {s33.set}, 1));
  EXPECT_THROW(singer_ds(6, 3), Error);
}

// Frozen from an independent trace computation over GF(2^8) with the least
// irreducible modulus and least primitive element.
TEST(Singer, FourFour) {
  const auto s = singer_ds(4, 4);
  EXPECT_EQ(s.params, (DSParams{85, 21, 5}));
  EXPECT_EQ(s.set, (Block{0, 3, 6, 11, 12, 13, 17, 19, 22, 24, 26, 34, 38, 44, 48, 49, 51, 52, 67, 68, 76}));
  EXPECT_TRUE(oracle::is_df(s.group, {s.set}, 5));
}

TEST(DdsFromDs, Examples) {
  const auto d = dds_from_ds(singer_ds(2, 3), 2);
  EXPECT_EQ(d.params, (DDSParams{7, 2, 6, 6, 2}));
  EXPECT_EQ(d.group.describe(), "Z_7 x Z_2");
  const auto e = dds_from_ds(singer_ds(4, 4), 2);
  EXPECT_EQ(e.params, (DDSParams{85, 2, 42, 42, 10}));
  EXPECT_TRUE(dds_counting_identity(e.params).pass);
  const auto s = singer_ds(3, 3);
  const auto one = dds_from_ds(s, 1);
  EXPECT_EQ(one.group, s.group);
  EXPECT_EQ(one.set, s.set);
  EXPECT_EQ(one.subgroup, (Block{0}));
}

TEST(Result3Star, Examples) {
  const auto a = result3star_dds(4, 4, 3, 2);
  EXPECT_EQ(a.params, (DDSParams{85, 2, 42, 42, 10}));
  EXPECT_EQ(a.group.describe(), "Z_85 x Z_2");
  const auto b = result3star_dds(3, 3, 2, 2);
  EXPECT_EQ(b.params, (DDSParams{13, 2, 8, 8, 2}));
  EXPECT_EQ(b.group.describe(), "Z_13 x Z_2");
  const auto c = result3star_dds(2, 3, 1, 1);
  EXPECT_EQ(c.params, (DDSParams{7, 1, 3, 3, 1}));
  EXPECT_EQ(c.group.describe(), "Z_7");
}

TEST(Result3Star, NonIsomorphicTargetFails) {
  // n = 3 * 6 / 3 = 6 but the target is Z_800 x Z_3 while the build is Z_400 x Z_6.
  try {
    result3star_dds(7, 4, 3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("invariant factors"), std::string::npos) << e.what();
  }
  EXPECT_THROW(result3star_dds(4, 4, 2, 1), Error);  // 2 does not divide 3
  EXPECT_THROW(result3star_dds(4, 3, 3, 1), Error);  // gcd(3, 3) != 1
}
