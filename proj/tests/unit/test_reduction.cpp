#include <gtest/gtest.h>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/reduction.hpp>

#include "oracles.hpp"

using namespace fillin_lab;

namespace {

Graph k2() { return complete_graph(2); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, Vertex(a + v));
  }
  return Graph::build(a + b, edges);
}

Graph prism() { // 3-regular on 6 vertices, K4-free
  return Graph::build(6, std::vector<std::pair<Vertex, Vertex>>{
                             {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace

TEST(ReducePrimitive, KTwoShape) {
  ReducedInstance inst = reduce_primitive(k2());
  EXPECT_EQ(inst.graph.vertex_count(), 10u);
  ASSERT_EQ(inst.blocks.size(), 2u);
  for (auto const& block : inst.blocks) EXPECT_EQ(block.size(), 4u);
  for (Vertex a = 2; a < 10; ++a) {
    for (Vertex b = a + 1; b < 10; ++b) EXPECT_TRUE(inst.graph.has_edge(a, b));
  }
  for (Vertex v = 0; v < 2; ++v) {
    for (Vertex u : inst.blocks[inst.missed_block(v)]) EXPECT_FALSE(inst.graph.has_edge(v, u));
    for (Vertex u : inst.blocks[1 - inst.missed_block(v)]) EXPECT_TRUE(inst.graph.has_edge(v, u));
  }
  EXPECT_EQ(inst.original(), k2());
}

TEST(ReducePrimitive, VertexCountFormula) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Graph g = gnp_graph(n, 0.5, n);
    ReducedInstance inst = reduce_primitive(g);
    EXPECT_EQ(inst.graph.vertex_count(), n * n * n + n);
    EXPECT_NO_THROW(check_instance(inst, g));
  }
}

TEST(ReducePrimitive, EdgelessGivesSplitGraph) {
  ReducedInstance inst = reduce_primitive(empty_graph(2));
  EXPECT_TRUE(is_split(inst.graph).has_value());
  EXPECT_TRUE(exact_fillin_ordering_oracle(inst.graph).fill.empty());
}

TEST(ReducePrimitive, KTwoOptimumIsFour) {
  ReducedInstance inst = reduce_primitive(k2());
  EXPECT_EQ(exact_fillin_ordering_oracle(inst.graph).fill.size(), 4u);
  EXPECT_EQ(oracle::min_fill_by_subsets(oracle::adjacency(inst.graph)), 4);
}

TEST(ReducePrimitive, Guardrail) {
  EXPECT_THROW(reduce_primitive(empty_graph(41)), LimitExceeded);
  Limits small;
  small.primitive_max_n = 3;
  EXPECT_THROW(reduce_primitive(path_graph(4), small), LimitExceeded);
}

TEST(Brooks, PetersenThreeColors) {
  Graph p = petersen_graph();
  Coloring c = brooks_coloring(p, 3);
  EXPECT_FALSE(coloring_conflict(p, c).has_value());
  EXPECT_LE(c.colors, 3u);
  EXPECT_FALSE(c.fallback);
  for (auto x : c.color) EXPECT_LT(x, 3u);
}

TEST(Brooks, EvenCycle) {
  Coloring c = brooks_coloring(cycle_graph(6), 3);
  EXPECT_FALSE(coloring_conflict(cycle_graph(6), c).has_value());
  EXPECT_LE(c.colors, 3u);
}

TEST(Brooks, RejectsCliqueComponentAndHighDegree) {
  try {
    brooks_coloring(complete_graph(4), 3);
    FAIL();
  } catch (InvalidInput const& e) {
    EXPECT_NE(std::string(e.what()).find("strip clique components"), std::string::npos);
  }
  EXPECT_THROW(brooks_coloring(star_graph(4), 3), InvalidInput);
  EXPECT_THROW(brooks_coloring(cycle_graph(5), 2), InvalidInput);
}

TEST(Brooks, ProperOnRandomBoundedDegreeGraphs) {
  std::size_t fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    std::uint32_t d = static_cast<std::uint32_t>(rng.between(3, 5));
    std::size_t n = rng.between(d + 2, 24);
    Graph g = random_bounded_degree_graph(n, d, rng.chance(0.5) ? 0.0 : 0.2, rng.next());
    CliqueStripping strip = strip_clique_components(g, d);
    Coloring c = brooks_coloring(strip.core, d);
    ASSERT_FALSE(coloring_conflict(strip.core, c).has_value()) << seed;
    std::uint32_t used = 0;
    for (auto x : c.color) used = std::max(used, x + 1);
    EXPECT_LE(used, c.colors);
    if (c.fallback) {
      ++fallbacks;
    } else {
      EXPECT_LE(used, d);
    }
  }
  EXPECT_EQ(fallbacks, 0u);
}

TEST(StripCliques, TakesDVerticesPerComponent) {
  // K4 plus a disjoint 4-cycle
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                               {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  Graph g = Graph::build(8, edges);
  CliqueStripping s = strip_clique_components(g, 3);
  EXPECT_EQ(s.clique_components.size(), 1u);
  EXPECT_EQ(s.cover_part.size(), 3u);
  EXPECT_EQ(s.core, cycle_graph(4));
  std::vector<Vertex> expected{4, 5, 6, 7};
  EXPECT_EQ(s.to_original, expected);
}

TEST(ReduceColored, ThreeRegularSixVertices) {
  Graph g = prism();
  ReducedInstance inst = reduce_colored(g, 1, brooks_coloring(g, 3), {}, 3);
  EXPECT_EQ(inst.graph.vertex_count(), 24u);
  EXPECT_NO_THROW(check_instance(inst, g));
  for (auto const& block : inst.blocks) EXPECT_EQ(block.size(), 6u);
}

TEST(ReduceColored, UnusedColorBlockSeesEveryOriginalVertex) {
  Graph g = complete_bipartite(3, 3);
  Coloring c;
  c.colors = 3;
  c.color = {0, 0, 0, 1, 1, 1};
  ReducedInstance inst = reduce_colored(g, 1, c);
  ASSERT_EQ(inst.blocks.size(), 3u);
  for (Vertex v = 0; v < 6; ++v) {
    for (Vertex u : inst.blocks[2]) EXPECT_TRUE(inst.graph.has_edge(v, u));
  }
  EXPECT_NO_THROW(check_instance(inst, g));
}

TEST(ReduceColored, RejectsImproperColoring) {
  Coloring bad;
  bad.colors = 3;
  bad.color = {0, 0, 1, 2};
  try {
    reduce_colored(cycle_graph(4), 1, bad);
    FAIL();
  } catch (InvalidInput const& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos);
  }
}

TEST(ReduceColored, EdgelessIsSplit) {
  Graph g = empty_graph(3);
  ReducedInstance inst = reduce_colored(g, 1, brooks_coloring(g, 3));
  EXPECT_TRUE(is_split(inst.graph).has_value());
}

TEST(ReduceColored, Guardrail) {
  Limits small;
  small.colored_max_gadget = 50;
  Graph g = cycle_graph(6);
  EXPECT_THROW(reduce_colored(g, 3, brooks_coloring(g, 3), small), LimitExceeded);
}

TEST(FullVertices, Examples) {
  Graph g = path_graph(3);
  ReducedInstance inst = reduce_primitive(g);
  // every original vertex full
  VertexCover all = VertexCover::from({0, 1, 2});
  EXPECT_EQ(full_vertices(inst, split_completion(inst, all)), all);
  ReducedInstance edgeless = reduce_primitive(empty_graph(2));
  EXPECT_EQ(full_vertices(edgeless, EdgeSet{}).size(), 0u);
  EXPECT_THROW(full_vertices(inst, EdgeSet{}), InvalidInput);
}

TEST(FullVertices, RoundTripAndAccounting) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    std::size_t n = rng.between(1, 5);
    Graph g = gnp_graph(n, rng.unit(), rng.next());
    ReducedInstance inst = reduce_primitive(g);
    // random cover: an exact cover plus random extra vertices
    std::vector<Vertex> c = exact_vertex_cover(g).cover.vertices;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.chance(0.3)) c.push_back(v);
    }
    VertexCover cover = VertexCover::from(c);
    FillIn fill = split_completion(inst, cover);
    EXPECT_EQ(fill.size(), split_completion_size(inst, cover));
    Graph completed = add_edges(inst.graph, fill);
    EXPECT_TRUE(is_split(completed).has_value());
    EXPECT_EQ(full_vertices(inst, fill), cover);
    for (auto s : {GreedyStrategy::min_degree, GreedyStrategy::min_fill}) {
      FillIn f = greedy_minfill_heuristic(inst.graph, s).fill;
      VertexCover full = full_vertices(inst, f);
      EXPECT_TRUE(is_vertex_cover(g, full));
      EXPECT_GE(f.size(), inst.block_deficit() * full.size());
    }
  }
}

TEST(SplitCompletion, SizeFormulaAndRejection) {
  ReducedInstance inst = reduce_primitive(k2());
  FillIn f = split_completion(inst, VertexCover::from({0}));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_TRUE(split_completion(reduce_primitive(empty_graph(2)), VertexCover{}).empty());
  EXPECT_THROW(split_completion(inst, VertexCover{}), InvalidInput);
}

TEST(SplitCompletion, ColoredUpperBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_bounded_degree_graph(8, 3, 0.2, seed);
    CliqueStripping s = strip_clique_components(g, 3);
    ReducedInstance inst = reduce_colored(s.core, 1, brooks_coloring(s.core, 3), {}, 3);
    VertexCover cover = exact_vertex_cover(s.core).cover;
    std::size_t const tau = cover.size();
    std::size_t const n = s.core.vertex_count();
    EXPECT_LE(split_completion(inst, cover).size(), n * tau + tau * (tau - (tau > 0 ? 1 : 0)) / 2);
  }
}

TEST(Sandwich, KTwoWindow) {
  Graph g = k2();
  auto rep = verify_sandwich(g, reduce_primitive(g));
  EXPECT_TRUE(rep.pass());
  ASSERT_TRUE(rep.oracle_size.has_value());
  EXPECT_EQ(*rep.oracle_size, 4u);
  EXPECT_EQ(rep.tau, 1u);
}

TEST(Sandwich, EdgelessWindow) {
  Graph g = empty_graph(2);
  auto rep = verify_sandwich(g, reduce_primitive(g));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(*rep.oracle_size, 0u);
}

TEST(Sandwich, PathOnThree) {
  Graph g = path_graph(3);
  auto rep = verify_sandwich(g, reduce_primitive(g));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.constructive_size, 9u);
  for (auto const& f : rep.fillins) EXPECT_GE(f.fill.size(), 9u) << f.algorithm;
}

TEST(Theorem4, Examples) {
  Graph g = k2();
  ReducedInstance inst = reduce_primitive(g);
  VertexCover exact = exact_vertex_cover(g).cover;
  auto yes = theorem4_check(inst, 1, split_completion(inst, VertexCover::from({0})), exact);
  EXPECT_TRUE(yes.pass());
  EXPECT_EQ(yes.threshold, 7u);
  ASSERT_TRUE(yes.extracted_cover.has_value());
  EXPECT_EQ(*yes.extracted_cover, 1u);
  for (auto s : {GreedyStrategy::min_degree, GreedyStrategy::min_fill}) {
    FillIn f = greedy_minfill_heuristic(inst.graph, s).fill;
    EXPECT_GT(f.size(), 3u);
    EXPECT_TRUE(theorem4_check(inst, 0, f, exact).pass());
  }
  Graph e = empty_graph(2);
  ReducedInstance einst = reduce_primitive(e);
  auto none = theorem4_check(einst, 0, EdgeSet{}, VertexCover{});
  EXPECT_TRUE(none.pass());
  EXPECT_EQ(*none.extracted_cover, 0u);
}

TEST(Sidecar, Fields) {
  Graph g = prism();
  ReducedInstance inst = reduce_colored(g, 2, brooks_coloring(g, 3), {}, 3);
  auto j = instance_sidecar(inst);
  EXPECT_EQ(j["reduction"], "colored");
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["b"], 2);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["coloring"].size(), 6u);
  auto p = instance_sidecar(reduce_primitive(k2()));
  EXPECT_EQ(p["reduction"], "primitive");
  EXPECT_TRUE(p["b"].is_null());
}
