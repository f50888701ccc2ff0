#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "kscontext/catalog.hpp"
#include "kscontext/error.hpp"
#include "kscontext/ortho_graph.hpp"
#include "kscontext/solver.hpp"
#include "support/random_graphs.hpp"

namespace kscontext {
namespace {

using testing::complete_graph;

VectorSet standard_basis(int d) {
  VectorSet s{"basis", d, {}};
  for (int k = 0; k < d; ++k) {
    ExactVector v(static_cast<std::size_t>(d), ExactScalar(0));
    v[k] = 1;
    s.rays.push_back(v);
  }
  return s;
}

TEST(BuildGraph, StandardBasisIsTriangle) {
  OrthoGraph g = build_graph(standard_basis(3));
  EXPECT_EQ(g, complete_graph(3));
}

TEST(BuildGraph, Cabello18HasEighteenVertices) {
  OrthoGraph g = build_graph(load_builtin("cabello18"));
  EXPECT_EQ(g.size(), 18);
}

TEST(BuildGraph, EdgesAreExactlyOrthogonalPairs) {
  for (const auto& e : builtin_catalog()) {
    if (e.name == "e8") continue;
    VectorSet s = load_builtin(e.name);
    OrthoGraph g = build_graph(s);
    for (int u = 0; u < g.size(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (int v = u + 1; v < g.size(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), inner_product(s.rays[u], s.rays[v]).is_zero());
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
      }
    }
  }
}

TEST(CliqueNumber, CatalogAndTrivialCases) {
  EXPECT_EQ(clique_number(build_graph(load_builtin("peres33"))), 3);
  EXPECT_EQ(clique_number(build_graph(load_builtin("e8"))), 8);
  EXPECT_EQ(clique_number(OrthoGraph(5)), 1);
}

TEST(CliqueNumber, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    OrthoGraph g = testing::random_graph(rng, 10);
    int best = 0;
    for (unsigned mask = 0; mask < (1U << 10); ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < 10; ++v) {
        if ((mask >> v & 1U) != 0) vs.push_back(v);
      }
      if (static_cast<int>(vs.size()) > best && is_clique(g, vs)) best = static_cast<int>(vs.size());
    }
    EXPECT_EQ(clique_number(g), best);
    EXPECT_EQ(static_cast<int>(maximum_clique(g).size()), best);
    EXPECT_TRUE(is_clique(g, maximum_clique(g)));
  }
}

TEST(EnumerateContexts, CatalogCounts) {
  EXPECT_EQ(enumerate_contexts(build_graph(load_builtin("stabilizer2q"))).size(), 105U);
  EXPECT_EQ(enumerate_contexts(build_graph(load_builtin("e8"))).size(), 2025U);
  EXPECT_EQ(enumerate_contexts(complete_graph(4)).size(), 1U);
}

TEST(EnumerateContexts, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    OrthoGraph g = testing::random_graph(rng, 10);
    const int omega = clique_number(g);
    std::vector<Context> want;
    for (unsigned mask = 0; mask < (1U << 10); ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < 10; ++v) {
        if ((mask >> v & 1U) != 0) vs.push_back(v);
      }
      if (static_cast<int>(vs.size()) == omega && is_clique(g, vs)) want.push_back(vs);
    }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(enumerate_contexts(g), want);
  }
}

TEST(EnumerateContexts, CatalogContextsAreOrthonormalBases) {
  for (const auto& e : builtin_catalog()) {
    VectorSet s = load_builtin(e.name);
    OrthoGraph g = build_graph(s);
    auto contexts = enumerate_contexts(g);
    for (const auto& c : contexts) {
      ASSERT_EQ(static_cast<int>(c.size()), s.dimension) << e.name;
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          EXPECT_TRUE(inner_product(s.rays[c[a]], s.rays[c[b]]).is_zero());
        }
      }
    }
    EXPECT_TRUE(uncovered_vertices(g, contexts).empty()) << e.name;
  }
}

TEST(EnumerateContexts, ReportsUncoveredVertices) {
  OrthoGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  EXPECT_EQ(uncovered_vertices(g, enumerate_contexts(g)), (std::vector<int>{3, 4}));
}

TEST(EnumerateContexts, IndependentSetMeetsContextAtMostOnce) {
  for (const auto& e : builtin_catalog()) {
    OrthoGraph g = build_graph(load_builtin(e.name));
    auto a = max_independent_set(g);
    ASSERT_TRUE(is_independent(g, a));
    for (const auto& c : enumerate_contexts(g)) {
      int shared = 0;
      for (int v : c) shared += std::binary_search(a.begin(), a.end(), v) ? 1 : 0;
      EXPECT_LE(shared, 1);
    }
  }
}

TEST(DisjointUnion, TwoTriangles) {
  GraphUnion u = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(u.graph.size(), 6);
  EXPECT_FALSE(u.omega_mismatch);
  EXPECT_EQ(enumerate_contexts(u.graph).size(), 2U);
}

TEST(DisjointUnion, Cabello18DoublesContexts) {
  OrthoGraph g = build_graph(load_builtin("cabello18"));
  const std::size_t single = enumerate_contexts(g).size();
  GraphUnion u = disjoint_union(g, g);
  EXPECT_EQ(u.graph.size(), 36);
  EXPECT_EQ(enumerate_contexts(u.graph).size(), 2 * single);
  EXPECT_EQ(enumerate_contexts(disjoint_copies(g, 3)).size(), 3 * single);
}

TEST(DisjointUnion, MismatchedOmegaIsFlagged) {
  GraphUnion u = disjoint_union(complete_graph(3), complete_graph(4));
  EXPECT_TRUE(u.omega_mismatch);
  EXPECT_EQ(clique_number(u.graph), 4);
  EXPECT_EQ(enumerate_contexts(u.graph), (std::vector<Context>{{3, 4, 5, 6}}));
}

TEST(ExportGraph, DotForK2) {
  std::string dot = export_graph(complete_graph(2), GraphFormat::kDot);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v1;"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(ExportGraph, JsonRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    OrthoGraph g = testing::random_graph(rng, 12);
    EXPECT_EQ(parse_graph_json(export_graph(g, GraphFormat::kJson)), g);
  }
  OrthoGraph c = build_graph(load_builtin("cabello18"));
  EXPECT_EQ(parse_graph_json(export_graph(c, GraphFormat::kJson)), c);
}

TEST(ExportGraph, Cabello18HasEighteenNodes) {
  std::string dot = export_graph(build_graph(load_builtin("cabello18")), GraphFormat::kDot);
  int nodes = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 18);
}

TEST(ExportGraph, InconsistentContextsRejected) {
  std::string text = R"({"n":3,"edges":[[0,1],[1,2],[0,2]],"omega":2,"contexts":[[0,1]]})";
  try {
    parse_graph_json(text);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kInconsistentGraph);
  }
}

}  // namespace
}  // namespace kscontext
