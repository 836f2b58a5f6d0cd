#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <fillin_lab/graph.hpp>

namespace fillin_lab {

using FillIn = EdgeSet;

/// A permutation of 0..n-1. For the elimination game, order[0] is
/// eliminated first.
struct EliminationOrdering {
  std::vector<Vertex> order;

  std::size_t size() const noexcept { return order.size(); }
  EliminationOrdering reversed() const;
  /// position[v] = index of v in order.
  std::vector<std::size_t> positions() const;
};

/// Throws InvalidInput unless `order` is a permutation of 0..n-1.
void validate_permutation(std::span<Vertex const> order, std::size_t n);

/// Perfect elimination ordering: every vertex's later neighbors form a clique.
struct PeoCertificate {
  std::vector<Vertex> order;
};

/// Induced cycle of length >= 4, listed in cyclic order.
struct HoleCertificate {
  std::vector<Vertex> cycle;
};

using ChordalityCertificate = std::variant<PeoCertificate, HoleCertificate>;

struct ChordalityResult {
  bool chordal = false;
  ChordalityCertificate certificate;
};

/// Maximum cardinality search visit order. Ties among maximal weight go to
/// the smallest id. The reverse of the visit order is a PEO iff g is chordal.
EliminationOrdering mcs_ordering(Graph const& g);

ChordalityResult is_chordal(Graph const& g);

/// Independent certificate checkers, straight from the definitions.
bool check_peo(Graph const& g, std::span<Vertex const> elimination_order);
bool check_hole(Graph const& g, std::span<Vertex const> cycle);
bool check_certificate(Graph const& g, ChordalityResult const& result);

nlohmann::json certificate_to_json(ChordalityCertificate const& cert);
ChordalityCertificate certificate_from_json(nlohmann::json const& j);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Split recognition by the degree-sequence test; the witness partition is
/// verified before return.
std::optional<SplitPartition> is_split(Graph const& g);
bool check_split_partition(Graph const& g, SplitPartition const& p);

/// The elimination game: in order, clique each vertex's not-yet-eliminated
/// neighborhood, then delete it. Returns the added pairs in g's ids.
FillIn elimination_fill(Graph const& g, EliminationOrdering const& ordering);

struct FillInVerdict {
  enum class Status { valid, out_of_range, already_edge, not_chordal };
  Status status = Status::valid;
  std::optional<Edge> offending_pair;
  std::optional<HoleCertificate> hole;

  bool valid() const noexcept { return status == Status::valid; }
  std::string describe() const;
};

/// Every pair must be a non-edge of g and g + fill must be chordal.
FillInVerdict verify_fillin(Graph const& g, FillIn const& fill);

/// Finds a hole (not necessarily shortest) or nothing if g is chordal. Scans
/// all (center, non-adjacent neighbor pair) triples, so it is independent of
/// the MCS path and used as the fallback for hole extraction.
std::optional<HoleCertificate> find_hole_exhaustive(Graph const& g);

/// Shortest hole of g, if any.
std::optional<HoleCertificate> find_shortest_hole(Graph const& g);

} // namespace fillin_lab
