#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/graph.hpp>
#include <fillin_lab/limits.hpp>

namespace fillin_lab {

struct VertexCover {
  std::vector<Vertex> vertices; // sorted, unique

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const;
  static VertexCover from(std::vector<Vertex> vertices);
  friend bool operator==(VertexCover const&, VertexCover const&) = default;
};

/// An edge with neither endpoint in the set, if any.
std::optional<Edge> uncovered_edge(Graph const& g, VertexCover const& cover);
bool is_vertex_cover(Graph const& g, VertexCover const& cover);

enum class SolveStatus {
  optimal,   // a best solution was found and verified
  none,      // proved: nothing exists within the requested budget
  exhausted, // node budget ran out before a proof
};

std::string_view to_string(SolveStatus status);

struct VertexCoverOptions {
  std::uint64_t node_budget = 50'000'000;
};

struct VertexCoverResult {
  SolveStatus status = SolveStatus::exhausted;
  VertexCover cover;
  std::uint64_t nodes = 0;
};

/// Branch and bound on a maximum-degree vertex (take it, or take all its
/// neighbors) with degree-0/degree-1 folding and a matching lower bound.
VertexCoverResult exact_vertex_cover(Graph const& g, VertexCoverOptions const& options = {});

struct OracleResult {
  FillIn fill;
  EliminationOrdering ordering;
  std::uint64_t states = 0;
};

/// Minimum fill-in as the best elimination game over all orderings. Orderings
/// sharing the same eliminated prefix set are merged (subset dynamic
/// program), so the cost is 2^n states. Throws LimitExceeded above the limit.
OracleResult exact_fillin_ordering_oracle(Graph const& g, Limits const& limits = {});

struct BranchOptions {
  std::uint64_t node_budget = 20'000'000;
  unsigned workers = 1;
};

struct BranchResult {
  SolveStatus status = SolveStatus::exhausted;
  FillIn fill;
  std::uint64_t nodes = 0;
};

/// Smallest fill-in of size <= budget, found by iterative deepening over the
/// chords of a shortest hole. status == none proves no fill-in fits.
BranchResult exact_fillin_branch(Graph const& g, std::size_t budget, BranchOptions const& options = {});

enum class GreedyStrategy { min_degree, min_fill };

std::string_view to_string(GreedyStrategy strategy);
GreedyStrategy parse_strategy(std::string_view text);

struct HeuristicResult {
  FillIn fill;
  EliminationOrdering ordering;
};

/// Elimination game picking the minimum current degree (or minimum number
/// of missing pairs in the current neighborhood), smallest id on ties.
HeuristicResult greedy_minfill_heuristic(Graph const& g, GreedyStrategy strategy);

} // namespace fillin_lab
