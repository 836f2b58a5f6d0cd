#pragma once

#include <cstdint>
#include <random>

#include <fillin_lab/graph.hpp>

namespace fillin_lab {

/// Seeded source used by every randomized component. Bounded draws are done
/// by rejection on the raw 64-bit stream so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

/// Seed for the index-th item of a corpus; independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
/// Uniform-ish d-regular graph by the pairing model with restarts. Throws
/// InvalidInput when n*d is odd or d >= n; the degrees are verified.
Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);
/// Random graph of maximum degree <= d: a d-regular graph with edges
/// removed independently with probability drop.
Graph random_bounded_degree_graph(std::size_t n, std::size_t d, double drop, std::uint64_t seed);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph petersen_graph();
/// Labeled graph on n vertices whose edges are the set bits of `mask` over
/// the pairs (0,1), (0,2), ..., (n-2, n-1).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

} // namespace fillin_lab
