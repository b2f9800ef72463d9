#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reference.hpp"

namespace cyclat {
namespace {

using testing::load;

std::size_t count_origin(const CycleBasis& b, CycleOrigin origin) {
  return static_cast<std::size_t>(std::count_if(b.provenance.begin(), b.provenance.end(),
                                                [&](const Provenance& p) { return p.origin == origin; }));
}

TEST(SemiFundamental, CompleteGraphStarTree) {
  const Multigraph g = load("k4");
  const SemiFundamentalResult r = semi_fundamental_basis(g, spanning_forest(g));
  ASSERT_EQ(r.basis.size(), 6u);
  EXPECT_FALSE(r.lifted);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.basis.cycles[i].size(), 3u);
  for (std::size_t i = 3; i < 6; ++i) EXPECT_EQ(r.basis.cycles[i].size(), 4u);
  EXPECT_EQ(basis_determinant(g, r.basis.cycles), 8);
  EXPECT_EQ(testing::rational_determinant(indicator_matrix(g, r.basis.cycles)) % 8, 0);
  ASSERT_EQ(r.steps.size(), 3u);
  for (const auto& s : r.steps) EXPECT_LT(s.e, s.f);
}

TEST(SemiFundamental, ParallelEdges) {
  const Multigraph g = load("b3");
  const SemiFundamentalResult r = semi_fundamental_basis(g, spanning_forest(g));
  EXPECT_EQ(r.basis.cycles,
            (std::vector<std::vector<EdgeId>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(r.basis.provenance[2].tag(), "semi-fundamental(1,2,0)");
  EXPECT_EQ(basis_determinant(g, r.basis.cycles), 2);
  EXPECT_EQ(r.exchanges, 0u);
}

TEST(SemiFundamental, LiftsThroughCosimplification) {
  const Multigraph c3 = load("c3");
  const SemiFundamentalResult r = semi_fundamental_basis(c3, spanning_forest(c3));
  EXPECT_TRUE(r.lifted);
  EXPECT_EQ(r.basis.cycles, (std::vector<std::vector<EdgeId>>{{0, 1, 2}}));
  EXPECT_TRUE(r.basis.provenance[0].lifted);

  const Multigraph p2 = load("p2");
  EXPECT_EQ(semi_fundamental_basis(p2, spanning_forest(p2)).basis.size(), 0u);

  for (const char* name : {"triangle_pendant", "k4_subdivided", "dumbbell"}) {
    const Multigraph g = load(name);
    const SemiFundamentalResult lifted = semi_fundamental_basis(g, spanning_forest(g));
    EXPECT_TRUE(hnf_lattices_equal(indicator_matrix(g, enumerate_cycles(g)),
                                   indicator_matrix(g, lifted.basis.cycles)))
        << name;
    for (const auto& c : lifted.basis.cycles) EXPECT_TRUE(is_cycle(g, c)) << name;
  }
}

TEST(SemiFundamental, RejectsDisconnectedInput) {
  const Multigraph g = load("two_triangles");
  EXPECT_THROW(semi_fundamental_basis(g, spanning_forest(g)), PreconditionError);
}

TEST(SemiFundamental, AnyRootGivesALatticeBasis) {
  for (const auto& f : testing::three_edge_connected_fixtures()) {
    for (VertexId root : f.graph.vertices()) {
      const SpanningForest t = spanning_forest(f.graph, root);
      const SemiFundamentalResult r = semi_fundamental_basis(f.graph, t);
      EXPECT_EQ(r.basis.size(), f.graph.num_edges()) << f.name;
      EXPECT_EQ(count_origin(r.basis, CycleOrigin::fundamental),
                f.graph.num_edges() - f.graph.num_vertices() + 1);
      EXPECT_EQ(basis_determinant(f.graph, r.basis.cycles), lattice_determinant(f.graph))
          << f.name << " root " << root;
    }
  }
}

TEST(SemiFundamental, NonBreadthFirstTree) {
  // A Hamiltonian path as the tree forces exchanges on the prism.
  const Multigraph g = load("prism");
  const SpanningForest t = SpanningForest::from_edges(g, std::vector<EdgeId>{0, 1, 8, 5, 3});
  const SemiFundamentalResult r = semi_fundamental_basis(g, t);
  EXPECT_EQ(basis_determinant(g, r.basis.cycles), 32);
  const int diameter = testing::brute_force_tree_diameter(g, t);
  for (const auto& c : r.basis.cycles) {
    EXPECT_LE(static_cast<int>(c.size()), 2 * diameter);
  }
}

}  // namespace
}  // namespace cyclat
