#include <sstream>

#include <gtest/gtest.h>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/graph.hpp>
#include <fillin_lab/graph_io.hpp>

#include "oracles.hpp"

using namespace fillin_lab;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Graph make(std::size_t n, Pairs const& edges) { return Graph::build(n, edges); }

EdgeSet pairs(Pairs const& p) { return EdgeSet::from_pairs(p); }

} // namespace

TEST(GraphBuild, FourCycle) {
  Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphBuild, Edgeless) {
  Graph g = make(3, {});
  EXPECT_EQ(g.edge_count(), 0u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 0u);
}

TEST(GraphBuild, DuplicatesCollapse) {
  Graph g = make(5, {{0, 1}, {0, 1}, {1, 2}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphBuild, RejectsOutOfRangeAndLoops) {
  EXPECT_THROW(make(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(make(3, {{1, 1}}), InvalidInput);
  try {
    make(3, {{2, 7}});
    FAIL();
  } catch (InvalidInput const& e) {
    EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
  }
}

TEST(GraphBuild, DenseAndSparseAgree) {
  Graph dense = complete_graph(12);
  EXPECT_EQ(dense.storage(), Graph::Storage::dense);
  Graph sparse = path_graph(12);
  EXPECT_EQ(sparse.storage(), Graph::Storage::sparse);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gnp_graph(20, 0.1 + 0.04 * static_cast<double>(seed), seed);
    Graph round = Graph::from_bit_matrix(g.to_bit_matrix());
    EXPECT_EQ(g, round);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      degree_sum += g.degree(v);
      EXPECT_EQ(g.neighbors(v).size(), g.degree(v));
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
      EXPECT_FALSE(g.has_edge(v, v));
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(AddEdges, TriangulatesFourCycle) {
  Graph c4 = cycle_graph(4);
  Graph h = add_edges(c4, pairs({{0, 2}}));
  EXPECT_TRUE(is_chordal(h).chordal);
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_FALSE(c4.has_edge(0, 2));
}

TEST(AddEdges, IdentityAndClique) {
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(add_edges(c4, EdgeSet{}), c4);
  EXPECT_EQ(add_edges(empty_graph(3), pairs({{0, 1}, {1, 2}, {0, 2}})), complete_graph(3));
}

TEST(AddEdges, RejectsBadPairs) {
  EXPECT_THROW(pairs({{1, 1}}), InvalidInput);
  EXPECT_THROW(add_edges(cycle_graph(4), pairs({{0, 9}})), InvalidInput);
}

TEST(AddEdges, Associative) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    Graph g = gnp_graph(9, 0.3, rng.next());
    auto pick = [&] {
      std::vector<Edge> out;
      for (int i = 0; i < 5; ++i) {
        Vertex a = static_cast<Vertex>(rng.below(9));
        Vertex b = static_cast<Vertex>(rng.below(9));
        if (a != b) out.push_back(make_edge(a, b));
      }
      return EdgeSet(out);
    };
    EdgeSet a = pick();
    EdgeSet b = pick();
    EXPECT_EQ(add_edges(add_edges(g, a), b).edges(), add_edges(g, a.united(b)).edges());
  }
}

TEST(InducedSubgraph, Examples) {
  std::vector<Vertex> three{1, 2, 3};
  Subgraph p = induced_subgraph(cycle_graph(5), three);
  EXPECT_EQ(p.graph, path_graph(3));
  EXPECT_EQ(p.to_original, three);
  EXPECT_EQ(induced_subgraph(cycle_graph(5), std::vector<Vertex>{}).graph.vertex_count(), 0u);
  EXPECT_EQ(induced_subgraph(complete_graph(5), std::vector<Vertex>{0, 2, 4}).graph, complete_graph(3));
  EXPECT_THROW(induced_subgraph(complete_graph(5), std::vector<Vertex>{0, 5}), InvalidInput);
}

TEST(NonEdgesWithin, Examples) {
  auto all4 = all_vertices(4);
  EXPECT_EQ(non_edges_within(cycle_graph(4), all4), pairs({{0, 2}, {1, 3}}));
  EXPECT_TRUE(non_edges_within(complete_graph(4), all4).empty());
  EXPECT_EQ(non_edges_within(empty_graph(3), all_vertices(3)).size(), 3u);
}

TEST(NonEdgesWithin, CountsComplementInducedEdges) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    Graph g = gnp_graph(10, rng.unit(), rng.next());
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng.chance(0.6)) subset.push_back(v);
    }
    std::size_t k = subset.size();
    EXPECT_EQ(induced_subgraph(g, subset).graph.edge_count() + non_edges_within(g, subset).size(), k * (k - 1) / 2);
  }
}

TEST(NonEdgesWithin, ComplementIsInvolution) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gnp_graph(8, 0.4, seed);
    auto all = all_vertices(8);
    Graph complement = Graph::build(8, non_edges_within(g, all));
    Graph back = Graph::build(8, non_edges_within(complement, all));
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(Dimacs, RoundTripAndOneBased) {
  Graph g = petersen_graph();
  std::string text = to_dimacs(g);
  EXPECT_EQ(text.rfind("p edge 10 15\n", 0), 0u);
  std::istringstream in("c comment\n\n" + text);
  EXPECT_EQ(read_dimacs(in), g);
  std::istringstream one("p edge 2 1\ne 1 2\n");
  Graph k2 = read_dimacs(one);
  EXPECT_TRUE(k2.has_edge(0, 1));
}

TEST(Dimacs, Rejections) {
  for (std::string bad : {"e 1 2\n", "p edge 2 1\ne 0 1\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 1 1\n",
                          "p edge x 1\n", "p edge 2 1\nq 1 2\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_dimacs(in), InvalidInput) << bad;
  }
}

TEST(CanonicalText, SortedZeroBased) {
  EdgeSet e = pairs({{3, 1}, {0, 2}});
  EXPECT_EQ(to_canonical_text(e), "0 2\n1 3\n");
  std::istringstream in(to_canonical_text(e));
  EXPECT_EQ(parse_canonical_text(in), e);
}

TEST(Generators, RegularDegreesAndParity) {
  Graph g = random_regular_graph(10, 3, 7);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_THROW(random_regular_graph(5, 3, 1), InvalidInput);
  EXPECT_EQ(gnp_graph(8, 0.5, 1), gnp_graph(8, 0.5, 1));
  EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
  EXPECT_EQ(grid_graph(3, 4).edge_count(), 17u);
}
