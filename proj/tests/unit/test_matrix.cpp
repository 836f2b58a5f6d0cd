#include <sstream>

#include <gtest/gtest.h>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/matrix.hpp>

#include "oracles.hpp"

using namespace fillin_lab;

namespace {

EliminationOrdering natural(std::size_t n) { return EliminationOrdering{all_vertices(n)}; }

std::vector<std::pair<int, int>> as_pairs(EdgeSet const& e) {
  std::vector<std::pair<int, int>> out;
  for (auto const& x : e) out.emplace_back(int(x.u), int(x.v));
  return out;
}

} // namespace

TEST(GraphFromPattern, Examples) {
  EXPECT_EQ(graph_from_pattern(SparsePattern::tridiagonal(5)), path_graph(5));
  EXPECT_EQ(graph_from_pattern(SparsePattern::arrow(5)), star_graph(4));
  EXPECT_EQ(graph_from_pattern(SparsePattern::from_entries(4, {{0, 0}, {3, 3}})).edge_count(), 0u);
}

TEST(SparsePatternEntries, NormalizesAndRejects) {
  auto p = SparsePattern::from_entries(3, {{2, 0}, {0, 2}, {1, 1}});
  ASSERT_EQ(p.positions.size(), 1u);
  EXPECT_EQ(p.positions[0], make_edge(0, 2));
  EXPECT_THROW(SparsePattern::from_entries(3, {{0, 3}}), InvalidInput);
}

TEST(SymbolicFactor, Examples) {
  EXPECT_TRUE(symbolic_factor(SparsePattern::tridiagonal(5), natural(5)).fill.empty());
  auto center_first = symbolic_factor(SparsePattern::arrow(5), natural(5));
  EXPECT_EQ(center_first.fill.size(), 6u);
  EXPECT_EQ(as_pairs(center_first.fill), oracle::elimination_fill(oracle::adjacency(star_graph(4)), {0, 1, 2, 3, 4}));
  EXPECT_TRUE(symbolic_factor(SparsePattern::arrow(5), EliminationOrdering{{1, 2, 3, 4, 0}}).fill.empty());
  EXPECT_THROW(symbolic_factor(SparsePattern::arrow(3), EliminationOrdering{{0, 0, 1}}), InvalidInput);
}

TEST(SymbolicFactor, NonzeroCount) {
  auto r = symbolic_factor(SparsePattern::arrow(5), natural(5));
  EXPECT_EQ(r.nonzeros, 2 * (4 + 6) + 5u);
}

TEST(FillEquivalence, Examples) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    EliminationOrdering order = natural(7);
    rng.shuffle(order.order);
    EXPECT_TRUE(fill_equivalence_check(SparsePattern::tridiagonal(7), order));
  }
  EXPECT_TRUE(fill_equivalence_check(SparsePattern::from_entries(0, {}), natural(0)));
  EXPECT_TRUE(symbolic_factor(SparsePattern::from_entries(4, {}), natural(4)).fill.empty());
}

TEST(FillEquivalence, RandomPatternsAgainstReferenceGame) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::size_t n = rng.between(1, 8);
    Graph g = gnp_graph(n, 0.1 + 0.6 * rng.unit(), rng.next());
    SparsePattern p = pattern_from_graph(g);
    for (int k = 0; k < 30; ++k) {
      EliminationOrdering order = natural(n);
      rng.shuffle(order.order);
      ASSERT_TRUE(fill_equivalence_check(p, order));
      auto sym = symbolic_factor(p, order);
      std::vector<int> ref(order.order.begin(), order.order.end());
      auto expected = oracle::elimination_fill(oracle::adjacency(g), ref);
      ASSERT_EQ(as_pairs(sym.fill), expected);
      EXPECT_EQ(sym.nonzeros, 2 * (g.edge_count() + expected.size()) + n);
      EXPECT_EQ(sym.fill.empty(), check_peo(g, order.order));
    }
  }
}

TEST(MatrixMarket, ReadWriteRoundTrip) {
  SparsePattern p = SparsePattern::arrow(6);
  std::ostringstream out;
  write_matrix_market(out, p);
  std::istringstream in(out.str());
  auto back = read_matrix_market(in);
  EXPECT_EQ(back.pattern.n, 6u);
  EXPECT_EQ(back.pattern.positions, p.positions);
  EXPECT_TRUE(back.warnings.empty());
}

TEST(MatrixMarket, RealFieldAndZeroDiagonalWarning) {
  std::istringstream in("%%MatrixMarket matrix coordinate real symmetric\n% comment\n3 3 4\n1 1 0.0\n2 1 1.5\n3 2 -2\n"
                        "3 3 4.0\n");
  auto mm = read_matrix_market(in);
  EXPECT_EQ(mm.pattern.positions.size(), 2u);
  ASSERT_EQ(mm.warnings.size(), 1u);
  EXPECT_NE(mm.warnings[0].find("diagonal"), std::string::npos);
}

TEST(MatrixMarket, Rejections) {
  for (std::string bad : {"3 3 1\n1 2\n", "%%MatrixMarket matrix coordinate real general\n3 3 1\n1 2 1\n",
                          "%%MatrixMarket matrix array real symmetric\n3 3\n",
                          "%%MatrixMarket matrix coordinate pattern symmetric\n3 4 1\n1 2\n",
                          "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n1 4\n",
                          "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n1 2\n",
                          "%%MatrixMarket matrix coordinate real symmetric\n3 3 1\n2 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_matrix_market(in), InvalidInput) << bad;
  }
}
