#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/graph.hpp>
#include <fillin_lab/inequality.hpp>
#include <fillin_lab/limits.hpp>
#include <fillin_lab/solvers.hpp>

namespace fillin_lab {

// ---------------------------------------------------------------------------
// Coloring
// ---------------------------------------------------------------------------

struct Coloring {
  std::vector<std::uint32_t> color; // per vertex, values in [0, colors)
  std::uint32_t colors = 0;         // q; classes may be empty
  /// Set when the constructive Brooks procedure could not be completed and
  /// a greedy (d+1)-coloring was used instead.
  bool fallback = false;
};

/// A monochromatic edge, if any.
std::optional<Edge> coloring_conflict(Graph const& g, Coloring const& c);

/// Proper coloring with at most d colors for a graph of maximum degree <= d,
/// d >= 3, without a K_{d+1} component. Throws InvalidInput on a violated
/// precondition; a K_{d+1} component is reported with a hint to strip clique
/// components first.
Coloring brooks_coloring(Graph const& g, std::uint32_t d);

struct CliqueStripping {
  Graph core;
  /// core vertex i is original vertex to_original[i]
  std::vector<Vertex> to_original;
  /// removed K_{d+1} components, each as sorted original ids
  std::vector<std::vector<Vertex>> clique_components;
  /// d vertices from every removed component; an optimal cover of them
  std::vector<Vertex> cover_part;
};

/// Removes every K_{d+1} component (in a graph of max degree <= d these are
/// exactly the components on d+1 vertices of degree d).
CliqueStripping strip_clique_components(Graph const& g, std::uint32_t d);

// ---------------------------------------------------------------------------
// Reduced instances
// ---------------------------------------------------------------------------

enum class ReductionKind { primitive, colored };

std::string to_string(ReductionKind kind);

/// Gadget graph H built from G. V(G) keeps ids 0..n-1; the gadget clique U
/// follows as consecutive blocks.
struct ReducedInstance {
  ReductionKind kind = ReductionKind::primitive;
  Graph graph;        // H
  std::size_t n = 0;  // |V(G)|
  std::size_t b = 0;  // colored only
  std::uint32_t q = 0;
  std::uint32_t d = 0; // degree bound the colored instance was requested for
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::uint32_t> coloring; // colored only
  bool coloring_fallback = false;

  /// Index of the block original vertex v is non-adjacent to.
  std::size_t missed_block(Vertex v) const;
  /// |block|: n^2 (primitive) or b*n (colored).
  std::size_t block_deficit() const;
  /// G, recovered as H restricted to V(G).
  Graph original() const;
};

/// Throws ConsistencyFailure naming the first violated structural invariant.
void check_instance(ReducedInstance const& inst, Graph const& g);

ReducedInstance reduce_primitive(Graph const& g, Limits const& limits = {});
ReducedInstance reduce_colored(Graph const& g, std::size_t b, Coloring const& coloring,
                               Limits const& limits = {}, std::uint32_t d = 0);

nlohmann::json instance_sidecar(ReducedInstance const& inst);

/// Original vertices all of whose missing edges to U lie in `fill`. The
/// fill-in is verified first (InvalidInput if invalid); a result that is not
/// a vertex cover of G raises ConsistencyFailure.
VertexCover full_vertices(ReducedInstance const& inst, FillIn const& fill);

/// Same extraction without re-verifying the fill-in; the cover check stays.
VertexCover full_vertices_trusted(ReducedInstance const& inst, FillIn const& fill);

/// All missing edges between C and U plus all non-edges inside C.
FillIn split_completion(ReducedInstance const& inst, VertexCover const& cover);

/// |C| * deficit + C(|C|, 2) - |E(G[C])|, computed by counting.
std::size_t split_completion_size(ReducedInstance const& inst, VertexCover const& cover);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct SandwichOptions {
  std::size_t random_orderings = 4;
  std::uint64_t seed = 1;
  Limits limits{};
  VertexCoverOptions cover{};
};

struct NamedFillIn {
  std::string algorithm;
  FillIn fill;
};

struct SandwichReport {
  std::size_t tau = 0;
  VertexCover exact_cover;
  std::size_t deficit = 0;
  std::size_t constructive_size = 0;
  std::optional<std::size_t> oracle_size; // phi(H), when H fits the oracle
  std::vector<NamedFillIn> fillins;
  std::vector<std::size_t> extracted_sizes;
  std::vector<Inequality> checks;
  bool cover_exhausted = false;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Fill-ins of H from every in-repo algorithm: min-degree, min-fill, MCS
/// order, the split completion of the given cover, seeded random orderings
/// and (when H is small enough) the ordering oracle.
std::vector<NamedFillIn> suite_fillins(ReducedInstance const& inst, VertexCover const& cover,
                                       std::size_t random_orderings, std::uint64_t seed, Limits const& limits);

/// Window tau*deficit <= |E+| and constructive < (tau+1)*deficit (primitive),
/// or the bn*tau + C(tau,2) bound (colored), on every suite fill-in.
SandwichReport verify_sandwich(Graph const& g, ReducedInstance const& inst, SandwichOptions const& options = {});

struct Theorem4Verdict {
  std::size_t c = 0;
  std::size_t threshold = 0; // (c+1) n^2 - 1
  std::size_t tau = 0;
  std::size_t fill_size = 0;
  std::optional<std::size_t> extracted_cover;
  std::vector<Inequality> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Both directions of the decision equivalence for one fill-in of the
/// primitive instance: a fill-in within (c+1)n^2 - 1 yields a cover of size
/// <= c, and tau <= c yields a split completion within the threshold.
Theorem4Verdict theorem4_check(ReducedInstance const& inst, std::size_t c, FillIn const& fill,
                               VertexCover const& exact_cover);

} // namespace fillin_lab
