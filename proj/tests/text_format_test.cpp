#include "shortlinks/text_format.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shortlinks/kp.hpp"

namespace shortlinks {
namespace {

TEST(TextFormatTest, DetectKind) {
  EXPECT_EQ(detect_kind("# note\n\nsimplicial 2\n1 2 3\n"), FileKind::simplicial);
  EXPECT_EQ(detect_kind("graph 2\n1 2\n"), FileKind::graph);
  EXPECT_EQ(detect_kind("quad 4 # trailing\n1 2 3 4\n"), FileKind::quadrillage);
  EXPECT_THROW(detect_kind("polygon 3\n"), InputError);
  EXPECT_THROW(detect_kind("# only comments\n"), InputError);
}

TEST(TextFormatTest, ComplexFixturesParse) {
  EXPECT_EQ(parse_complex(testing::read_fixture("thirteen_facets.simp")).facets(), testing::thirteen_facet_complex().facets());
  EXPECT_EQ(parse_complex(testing::read_fixture("octahedron.simp")).facets(), testing::octahedron().facets());
  EXPECT_EQ(parse_complex(testing::read_fixture("tetrahedron.simp")).facets(), testing::simplex_boundary(2).facets());
}

TEST(TextFormatTest, ComplexErrors) {
  EXPECT_THROW(parse_complex("simplicial 2\n1 2\n"), InputError);
  EXPECT_THROW(parse_complex("simplicial 2\n1 2 x\n"), InputError);
  EXPECT_THROW(parse_complex("simplicial 2\n1 2 2\n"), InputError);
  EXPECT_THROW(parse_complex("simplicial 0\n1\n"), InputError);
  EXPECT_THROW(parse_complex("simplicial\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_complex("graph 3\n1 2 3\n"), InputError);
  try {
    parse_complex("simplicial 2\n1 2 3\n# skip\n4 -5 6\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(TextFormatTest, GraphAndQuadErrors) {
  EXPECT_THROW(parse_graph("graph 3\n1 4\n"), InputError);
  EXPECT_THROW(parse_graph("graph 3\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_graph("graph 3\n1 1\n"), InputError);
  EXPECT_THROW(parse_quadrillage("quad 4\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_quadrillage("quad 4\n1 2 3 5\n"), InputError);
}

TEST(TextFormatTest, ComplexRoundTrip) {
  std::vector<SimplicialComplex> all{testing::thirteen_facet_complex(), testing::octahedron()};
  for (int m = 2; m <= 6; ++m)
    for (const auto& p : enumerate_partitions(m)) {
      all.push_back(build_kp(p));
      all.push_back(product_dual(p));
    }
  for (const auto& k : all) {
    auto back = parse_complex(serialize(k));
    EXPECT_EQ(back.dimension(), k.dimension());
    EXPECT_EQ(back.facets(), k.facets());
    EXPECT_EQ(serialize(back), serialize(k));
  }
}

TEST(TextFormatTest, GraphRoundTrip) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : testing::connected_graphs(n)) {
      auto back = parse_graph(serialize(g));
      EXPECT_TRUE(back.same_edges(g));
      EXPECT_EQ(serialize(back), serialize(g));
    }
  for (const char* name : {"c5.graph", "k5_minus_k2.graph", "k5_minus_k3.graph", "k6_minus_3k2.graph",
                           "k7_minus_c5.graph"}) {
    auto g = parse_graph(testing::read_fixture(name));
    EXPECT_TRUE(parse_graph(serialize(g)).same_edges(g)) << name;
  }
}

TEST(TextFormatTest, QuadrillageRoundTrip) {
  std::vector<Quadrillage> all{cube(), dual_cuboctahedron(), grid(2, 3), torus(3, 4), torus(4, 5)};
  for (const char* name : {"cube.quad", "grid_2_3.quad", "torus_3_4.quad", "dual_cuboctahedron.quad"})
    all.push_back(parse_quadrillage(testing::read_fixture(name)));
  for (const auto& q : all) EXPECT_EQ(parse_quadrillage(serialize(q)), q);
}

TEST(TextFormatTest, ShippedQuadFixturesMatchConstructors) {
  EXPECT_EQ(parse_quadrillage(testing::read_fixture("cube.quad")), cube());
  EXPECT_EQ(parse_quadrillage(testing::read_fixture("grid_2_3.quad")), grid(2, 3));
  EXPECT_EQ(parse_quadrillage(testing::read_fixture("torus_3_4.quad")), torus(3, 4));
  EXPECT_EQ(parse_quadrillage(testing::read_fixture("dual_cuboctahedron.quad")), dual_cuboctahedron());
}

}  // namespace
}  // namespace shortlinks
