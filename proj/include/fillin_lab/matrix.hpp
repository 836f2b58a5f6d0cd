#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/graph.hpp>

namespace fillin_lab {

/// Nonzero pattern of a symmetric n x n matrix: strict upper triangle only,
/// diagonal structurally nonzero.
struct SparsePattern {
  std::size_t n = 0;
  std::vector<Edge> positions; // (row, col) as (u, v), row < col, sorted

  /// Normalizes (i, j) to i < j, drops diagonal entries and duplicates.
  /// Throws InvalidInput for an out-of-range index.
  static SparsePattern from_entries(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const& entries);
  static SparsePattern tridiagonal(std::size_t n);
  /// Dense first row and column.
  static SparsePattern arrow(std::size_t n);
};

Graph graph_from_pattern(SparsePattern const& pattern);
SparsePattern pattern_from_graph(Graph const& g);

struct SymbolicFactor {
  EdgeSet fill;               // introduced positions, in original row ids
  std::size_t nonzeros = 0;   // of L + L^T including the diagonal
  std::vector<std::size_t> etree_parent; // in elimination positions; n for roots
};

/// Symbolic Cholesky of P A P^T, where P puts ordering.order[k] at position
/// k. Column structures are merged along the elimination tree.
SymbolicFactor symbolic_factor(SparsePattern const& pattern, EliminationOrdering const& ordering);

/// Symbolic fill equals elimination_fill on the pattern graph, and the
/// nonzero count equals 2 (|E| + |fill|) + n.
bool fill_equivalence_check(SparsePattern const& pattern, EliminationOrdering const& ordering);

struct MatrixMarketPattern {
  SparsePattern pattern;
  std::vector<std::string> warnings;
};

/// Coordinate format with a "symmetric" qualifier; 1-based indices.
MatrixMarketPattern read_matrix_market(std::istream& in);
MatrixMarketPattern read_matrix_market_file(std::filesystem::path const& path);
void write_matrix_market(std::ostream& out, SparsePattern const& pattern);

} // namespace fillin_lab
