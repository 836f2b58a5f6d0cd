#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <fillin_lab/inequality.hpp>
#include <fillin_lab/reduction.hpp>

namespace fillin_lab {

enum class TransferMode { fillin, completion };

std::string to_string(TransferMode mode);

struct TransferConfig {
  Rational epsilon{1, 2};
  std::uint32_t d = 3;
  /// Defaults to ceil(1/epsilon).
  std::optional<std::size_t> b;
  TransferMode mode = TransferMode::fillin;
  VertexCoverOptions cover{};
  Limits limits{};

  /// Throws InvalidInput unless 0 < epsilon < 1 and d >= 3.
  void validate() const;
  std::size_t block_factor() const;
  /// 1 + eps/3 (fill-in) or 1 + eps^2 / (10 d^3) (completion).
  Rational alpha() const;
  /// (1/eps + 1) d + 1, the instance-size constant.
  Rational size_constant() const;
};

/// Per-inequality evaluation of one pipeline run. Passes iff every record does.
struct RatioAudit {
  std::string instance;
  TransferMode mode = TransferMode::fillin;
  Rational epsilon;
  std::size_t b = 0;
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  Rational alpha;
  std::vector<Inequality> records;
  std::size_t n = 0;              // vertices of the normalized graph
  std::size_t isolated_removed = 0;
  std::size_t cover_size = 0;
  std::optional<std::size_t> tau;
  std::size_t fill_size = 0;
  std::size_t surrogate_opt = 0;  // |split completion of an exact cover|
  Rational measured_alpha;        // objective / surrogate objective
  bool condition_met = false;     // measured_alpha <= alpha
  std::vector<std::string> skipped;
  std::vector<std::string> notes;

  bool pass() const;
  std::optional<Rational> ratio() const;
};

using FillInProcedure = std::function<FillIn(ReducedInstance const&)>;
using CompletionProcedure = std::function<Graph(ReducedInstance const&)>;

struct TransferResult {
  VertexCover cover; // ids of the input graph
  RatioAudit audit;
};

/// Reduce G with the colored reduction, run the fill-in procedure on H and
/// return the full vertices as the cover, auditing each step of the ratio
/// argument on the run's numbers. Isolated vertices are removed before the
/// reduction (they never enter a minimum cover).
TransferResult vc_via_fillin(Graph const& g, FillInProcedure const& procedure, TransferConfig config);
TransferResult vc_via_completion(Graph const& g, CompletionProcedure const& procedure, TransferConfig config);

/// In-repo procedures.
FillInProcedure exact_backed_fillin();
FillInProcedure heuristic_fillin(GreedyStrategy strategy);
CompletionProcedure exact_backed_completion();
CompletionProcedure heuristic_completion(GreedyStrategy strategy);

/// One line per record: "PASS|FAIL name: lhs rel rhs (slack s)".
std::string audit_text(RatioAudit const& audit);
nlohmann::json audit_json(RatioAudit const& audit);

Rational parse_rational(std::string const& text);

} // namespace fillin_lab
