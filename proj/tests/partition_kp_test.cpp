#include "shortlinks/kp.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "shortlinks/isomorphism.hpp"

namespace shortlinks {
namespace {

std::vector<Partition> partitions_up_to(int max_m) {
  std::vector<Partition> out;
  for (int m = 2; m <= max_m; ++m)
    for (auto& p : enumerate_partitions(m)) out.push_back(std::move(p));
  return out;
}

// Hyperoctahedron facets with i' sent to the part vertex, by plain set
// operations over all 2^m sign vectors.
std::set<std::set<VertexId>> kp_facets_oracle(const Partition& p) {
  const int m = p.ground_size();
  std::set<std::set<VertexId>> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::set<VertexId> f;
    std::set<std::size_t> used_parts;
    bool clash = false;
    for (int i = 1; i <= m; ++i) {
      if (mask >> (i - 1) & 1) {
        auto j = p.part_of(i);
        if (!used_parts.insert(j).second) clash = true;
        f.insert(m + 1 + static_cast<VertexId>(j));
      } else {
        f.insert(i);
      }
    }
    if (!clash) out.insert(f);
  }
  return out;
}

TEST(PartitionTest, ParseAndCanonicalRoundTrip) {
  auto p = Partition::parse("3,4,5|1,2");
  EXPECT_EQ(p.to_string(), "3,4,5|1,2");
  EXPECT_EQ(p.canonical().to_string(), "1,2|3,4,5");
  EXPECT_EQ(Partition::parse(p.canonical().to_string()), p.canonical());
  EXPECT_EQ(Partition::parse(" 2 , 1 | 3 ").to_string(), "1,2|3");
  EXPECT_EQ(Partition::parse("3|2|1").canonical().to_string(), "1|2|3");
}

TEST(PartitionTest, RejectsMalformed) {
  for (const char* bad : {"", "1,2|", "1,,2", "1|3", "1,1", "0,1", "a|1", "1|2|2"})
    EXPECT_THROW(Partition::parse(bad), InputError) << bad;
}

TEST(PartitionTest, EnumerationCountsArePartitionNumbers) {
  const std::size_t expected[] = {0, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(enumerate_partitions(m).size(), expected[m]) << m;
}

TEST(PartitionTest, EnumerationMatchesFixtureOrder) {
  std::istringstream in(testing::read_fixture("table1_partitions.txt"));
  std::vector<std::string> listed;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') listed.push_back(line);
  std::vector<std::string> generated;
  for (int m = 3; m <= 5; ++m)
    for (const auto& p : enumerate_partitions(m)) generated.push_back(p.to_string());
  EXPECT_EQ(listed, generated);
}

TEST(BuildKpTest, SmallExampleFacets) {
  auto k = build_kp(Partition::parse("1|2,3"));
  SimplicialComplex expected(2, {{1, 2, 3}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}});
  EXPECT_EQ(k.facets(), expected.facets());
}

TEST(BuildKpTest, FacetCountsFromTable) {
  EXPECT_EQ(build_kp(Partition::parse("1|2,3")).facet_count(), 6u);
  EXPECT_EQ(build_kp(Partition::parse("1,2,3,4")).facet_count(), 5u);
  EXPECT_EQ(build_kp(Partition::parse("1|2|3|4|5")).facet_count(), 32u);
}

TEST(BuildKpTest, MatchesOracleAndProductFormula) {
  for (const auto& p : partitions_up_to(8)) {
    auto k = build_kp(p);
    std::set<std::set<VertexId>> got;
    for (const auto& f : k.facets()) got.insert(std::set<VertexId>(f.vertices().begin(), f.vertices().end()));
    EXPECT_EQ(got, kp_facets_oracle(p)) << p.to_string();
    EXPECT_EQ(k.facet_count(), kp_summary(p).facet_count) << p.to_string();
  }
}

TEST(BuildKpTest, Errors) {
  EXPECT_THROW(build_kp(Partition::parse("1")), InputError);
}

TEST(BuildKpTest, ClosedWithShortLinksAndConsistentPartition) {
  for (const auto& p : partitions_up_to(7)) {
    auto k = build_kp(p);
    ASSERT_TRUE(is_closed_pseudomanifold(k).closed()) << p.to_string();
    auto type = complex_type(k);
    EXPECT_TRUE(is_short_link_type(type)) << p.to_string();
    EXPECT_EQ(type == std::set<int>{3}, p.part_count() == 1) << p.to_string();
    EXPECT_EQ(type == std::set<int>{4}, p.singleton_count() == p.part_count()) << p.to_string();
    for (const auto& f : k.facets())
      EXPECT_EQ(characteristic_partition(k, f).size_profile(), p.size_profile()) << p.to_string() << f.to_string();
    EXPECT_EQ(classify(k).size_profile(), p.size_profile());
  }
}

TEST(BuildKpTest, LinkEdgesCountContainingFacets) {
  for (const auto& p : partitions_up_to(6)) {
    auto k = build_kp(p);
    for (const auto& link : all_links(k)) {
      std::size_t containing = 0;
      for (const auto& f : k.facets())
        if (std::includes(f.vertices().begin(), f.vertices().end(), link.face.begin(), link.face.end())) ++containing;
      EXPECT_EQ(link.edge_count(), containing);
      for (auto s : link.sizes) EXPECT_GE(s, 3u);
    }
  }
}

TEST(BuildKpTest, SkeletonMissesExactlySingletonPairs) {
  for (const auto& p : partitions_up_to(7)) {
    auto g = skeleton(build_kp(p));
    auto s = kp_summary(p);
    ASSERT_EQ(g.vertex_count(), s.skeleton_m);
    const int m = p.ground_size();
    std::set<std::pair<VertexId, VertexId>> missing;
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
      for (std::size_t b = a + 1; b < g.vertex_count(); ++b)
        if (!g.adjacent(a, b)) missing.emplace(g.label(a), g.label(b));
    std::set<std::pair<VertexId, VertexId>> expected;
    for (std::size_t j = 0; j < p.part_count(); ++j)
      if (p.parts()[j].size() == 1) expected.emplace(p.parts()[j][0], m + 1 + static_cast<VertexId>(j));
    EXPECT_EQ(missing, expected) << p.to_string();
    EXPECT_EQ(missing.size(), s.skeleton_h);
  }
}

TEST(BuildKpTest, IsomorphicToProductDual) {
  for (const auto& p : partitions_up_to(6)) {
    auto a = detail::IndexedComplex(build_kp(p));
    auto b = detail::IndexedComplex(product_dual(p));
    bool found = false;
    detail::for_each_isomorphism(a, b, [&](const auto&) {
      found = true;
      return false;
    });
    EXPECT_TRUE(found) << p.to_string();
  }
}

// Full search, no short-link shortcut.
TEST(BuildKpTest, IsomorphicExactlyWhenSizeProfilesAgree) {
  auto all = partitions_up_to(6);
  std::vector<SimplicialComplex> complexes;
  for (const auto& p : all) complexes.push_back(build_kp(p));
  std::vector<Partition> shuffled;
  for (const auto& p : all) {
    // Same sizes, elements handed out in reverse.
    std::vector<Partition::Part> parts;
    int next = p.ground_size();
    for (const auto& part : p.parts()) {
      Partition::Part q;
      for (std::size_t k = 0; k < part.size(); ++k) q.push_back(next--);
      parts.push_back(q);
    }
    shuffled.emplace_back(parts);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      const auto& a = complexes[i];
      auto b = build_kp(shuffled[j]);
      if (a.dimension() != b.dimension() || a.facet_count() != b.facet_count()) {
        EXPECT_NE(all[i].size_profile(), all[j].size_profile());
        continue;
      }
      bool found = false;
      detail::for_each_isomorphism(detail::IndexedComplex(a), detail::IndexedComplex(b), [&](const auto&) {
        found = true;
        return false;
      });
      EXPECT_EQ(found, all[i].size_profile() == all[j].size_profile()) << all[i].to_string() << " vs " << shuffled[j].to_string();
    }
}

TEST(ClassifyTest, RejectsOtherTypes) {
  EXPECT_THROW(classify(testing::thirteen_facet_complex()), InputError);
  EXPECT_EQ(classify(testing::octahedron()).size_profile(), (std::vector<int>{1, 1, 1}));
}

TEST(KpSummaryTest, TableRows) {
  EXPECT_EQ(kp_summary(Partition::parse("1,2|3,4")), (KpSummary{9, 6, 0, 72, 36, 1}));
  EXPECT_EQ(kp_summary(Partition::parse("1|2|3,4,5")), (KpSummary{16, 8, 2, 192, 96, 2}));
  EXPECT_EQ(kp_summary(Partition::parse("1|2,3")), (KpSummary{6, 5, 1, 12, 12, 2}));
  EXPECT_EQ(kp_summary(Partition::parse("1|2|3")), (KpSummary{8, 6, 3, 48, 8, 1}));
}

TEST(ProductDualTest, FacetCountAndDimension) {
  auto k = product_dual(Partition::parse("1|2,3"));
  EXPECT_EQ(k.dimension(), 2);
  EXPECT_EQ(k.facet_count(), 6u);
  EXPECT_EQ(k.vertices().size(), 5u);
}

}  // namespace
}  // namespace shortlinks
