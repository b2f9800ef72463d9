#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reference.hpp"

namespace cyclat {
namespace {

using testing::load;

TEST(Parse, CompleteGraphOnFourVertices) {
  const Multigraph g = load("k4");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g.edge(3), (Edge{3, 1, 2}));
  for (VertexId v : g.vertices()) EXPECT_EQ(g.degree(v), 3);
}

TEST(Parse, LoopsCountTwiceAndIdsMayBeSparse) {
  const Multigraph g = load("b3_loops_sparse");
  EXPECT_EQ(g.edge_ids(), (std::vector<EdgeId>{5, 7, 10, 20, 30}));
  EXPECT_EQ(g.degree(0), 5);
  EXPECT_EQ(g.incident(0).size(), 4u);
  EXPECT_EQ(g.edge_id_bound(), 31);
  EXPECT_TRUE(g.edge(5).is_loop());
}

TEST(Parse, SymbolicTokensKeepFirstAppearanceOrder) {
  const Multigraph g = load("k33");
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(1), "x");
  EXPECT_EQ(g.label(4), "b");
}

TEST(Parse, OneBasedTokensAndIsolatedVertices) {
  const Multigraph g = parse_edge_list("4 2\n1 2\n2 4\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.label(0), "1");
  EXPECT_EQ(g.label(2), "3");
  EXPECT_EQ(g.label(3), "4");
  EXPECT_EQ(g.degree(2), 0);
  // Tokens that fit 0..n-1 are read zero-based.
  EXPECT_EQ(parse_edge_list("4 2\n1 2\n2 3\n").label(0), "0");
}

TEST(Parse, ReportsTheOffendingLine) {
  try {
    parse_edge_list("# header next\n2 2\n0 1\n0 1 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 1\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 2\n0 1 4\n1 0 4\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 2\na b\nb c\n"), ParseError);
}

TEST(Parse, FormatRoundTrips) {
  for (const auto& f : testing::all_fixtures()) {
    const Multigraph again = parse_edge_list(format_edge_list(f.graph));
    EXPECT_EQ(again, f.graph) << f.name;
  }
}

TEST(Multigraph, RejectsBadConstruction) {
  EXPECT_THROW(Multigraph({0, 0}, {}), ArgumentError);
  EXPECT_THROW(Multigraph({0, 1}, {{0, 0, 2}}), ArgumentError);
  EXPECT_THROW(Multigraph({0, 1}, {{0, 0, 1}, {0, 1, 0}}), ArgumentError);
  EXPECT_THROW(Multigraph({-1}, {}), ArgumentError);
}

TEST(Multigraph, IncidenceIsSortedAndOppositeWorks) {
  const Multigraph g = load("doubled_triangle");
  for (VertexId v : g.vertices()) {
    const auto inc = g.incident(v);
    EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
  }
  EXPECT_EQ(g.opposite(0, 0), 1);
  EXPECT_EQ(g.opposite(6, 0), 0);
  EXPECT_EQ(g.degree(0), 6);
}

TEST(Multigraph, SameEdgesIgnoresOrientation) {
  const Multigraph a({0, 1}, {{0, 0, 1}, {1, 1, 1}});
  const Multigraph b({0, 1}, {{0, 1, 0}, {1, 1, 1}});
  const Multigraph c({0, 1}, {{0, 1, 0}, {2, 1, 1}});
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(same_edges(a, b));
  EXPECT_FALSE(same_edges(a, c));
}

TEST(Multigraph, CompactRenumbersInOrder) {
  const Multigraph g = compact(load("b3_loops_sparse"));
  EXPECT_EQ(g.edge_ids(), (std::vector<EdgeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(g.edge(0), (Edge{0, 0, 0}));
}

TEST(Components, SplitsDisjointTriangles) {
  const Multigraph g = load("two_triangles");
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1], (std::vector<VertexId>{3, 4, 5}));
  EXPECT_FALSE(is_connected(g));
  const Multigraph sub = induced_subgraph(g, comps[1]);
  EXPECT_EQ(sub.edge_ids(), (std::vector<EdgeId>{3, 4, 5}));
}

TEST(SpanningForest, BreadthFirstFromLeastVertex) {
  const Multigraph g = load("k4");
  const SpanningForest t = spanning_forest(g);
  EXPECT_EQ(std::vector<EdgeId>(t.tree_edges().begin(), t.tree_edges().end()),
            (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(t.path(1, 2), (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(t.depth(3), 1);
  const SpanningForest r = spanning_forest(g, 3);
  EXPECT_EQ(r.component_roots().front(), 3);
}

TEST(SpanningForest, FromEdgesValidates) {
  const Multigraph g = load("k4");
  EXPECT_NO_THROW(SpanningForest::from_edges(g, std::vector<EdgeId>{0, 3, 5}));
  EXPECT_THROW(SpanningForest::from_edges(g, std::vector<EdgeId>{0, 1, 3}), ArgumentError);
  EXPECT_THROW(SpanningForest::from_edges(g, std::vector<EdgeId>{0, 1}), ArgumentError);
}

TEST(SpanningForest, DiameterMatchesAllPairsSearch) {
  for (const auto& f : testing::all_fixtures()) {
    const SpanningForest t = spanning_forest(f.graph);
    const auto d = tree_diameter(f.graph, t);
    EXPECT_EQ(*std::max_element(d.begin(), d.end()),
              testing::brute_force_tree_diameter(f.graph, t))
        << f.name;
  }
}

TEST(Minor, ContractionMergesEndpoints) {
  const Multigraph g = load("k4");
  const std::vector<EdgeId> contract{0};
  const MinorMap m = minor(g, {}, contract);
  EXPECT_EQ(m.result.num_vertices(), 3u);
  EXPECT_EQ(m.result.num_edges(), 5u);
  EXPECT_EQ(m.image(1), 0);
  // Edges 1 and 3 become parallel between {0,1} and 2.
  EXPECT_EQ(std::minmax(m.result.edge(3).u, m.result.edge(3).v), std::minmax(VertexId{0}, VertexId{2}));
}

TEST(Paths, EdgeDisjointPathsInK4) {
  const Multigraph g = load("k4");
  const PathSystem ps = edge_disjoint_paths(g, 0, 1, 3);
  EXPECT_TRUE(ps.complete);
  std::set<EdgeId> used;
  for (const auto& p : ps.paths) {
    for (EdgeId e : p) EXPECT_TRUE(used.insert(e).second);
  }
  EXPECT_FALSE(edge_disjoint_paths(g, 0, 1, 4).complete);
  EXPECT_EQ(edge_disjoint_paths(load("c3"), 0, 1, 3).maximum(), 2);
}

TEST(Paths, BreadthFirstPathAvoidsExcludedEdges) {
  const Multigraph g = load("c3");
  EXPECT_EQ(*bfs_path(g, 0, 1), (std::vector<EdgeId>{0}));
  const std::vector<EdgeId> excluded{0};
  EXPECT_EQ(*bfs_path(g, 0, 1, excluded), (std::vector<EdgeId>{2, 1}));
  const std::vector<EdgeId> both{0, 1};
  EXPECT_FALSE(bfs_path(g, 0, 1, both).has_value());
}

}  // namespace
}  // namespace cyclat
