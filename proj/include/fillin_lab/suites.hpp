#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <fillin_lab/graph.hpp>
#include <fillin_lab/inequality.hpp>
#include <fillin_lab/limits.hpp>
#include <fillin_lab/report.hpp>

namespace fillin_lab {

inline constexpr std::uint64_t default_seed = 0x5eed'f111'1ab0'0001ULL;

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct SuiteOptions {
  std::uint64_t seed = default_seed;
  std::size_t trials = 50;
  /// Vertex range of generated graphs; each suite has its own defaults.
  std::optional<std::size_t> nmin;
  std::optional<std::size_t> nmax;
  unsigned jobs = 1;
  Limits limits{};
  /// Replaces the generated corpus when non-empty.
  std::vector<NamedGraph> inputs;
  /// Full per-instance records instead of the compact form.
  bool detail = false;

  std::size_t random_orderings = 4;         // sandwich, theorem4
  std::vector<Rational> epsilons{Rational(1, 2)}; // transfer
  std::uint32_t d = 3;                      // transfer
  bool heuristics = true;                   // transfer
  std::size_t orderings = 100;              // matrix: orderings per pattern
};

RunReport verify_sandwich_suite(SuiteOptions const& options);
RunReport verify_theorem4_suite(SuiteOptions const& options);
RunReport verify_transfer_suite(SuiteOptions const& options);
RunReport verify_matrix_suite(SuiteOptions const& options);

/// Dispatch by suite name; InvalidInput for an unknown name.
RunReport run_suite(std::string const& suite, SuiteOptions const& options);

} // namespace fillin_lab
