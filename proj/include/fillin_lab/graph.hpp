#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fillin_lab {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(Edge const&, Edge const&) = default;
};

/// Normalizes {a, b} so that u < v. Throws InvalidInput on a self-pair.
Edge make_edge(Vertex a, Vertex b);

/// Sorted, duplicate-free set of unordered pairs. Range checks happen
/// against a host graph when the set is applied.
class EdgeSet {
public:
  EdgeSet() = default;
  /// Sorts and collapses duplicates; pairs must already be normalized.
  explicit EdgeSet(std::vector<Edge> edges);

  static EdgeSet from_pairs(std::span<std::pair<Vertex, Vertex> const> pairs);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(Edge e) const;
  std::span<Edge const> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  EdgeSet united(EdgeSet const& other) const;

  friend bool operator==(EdgeSet const&, EdgeSet const&) = default;

private:
  std::vector<Edge> edges_;
};

/// Packed symmetric adjacency matrix. This is the mutable working
/// representation used inside solvers; Graph values never expose mutation.
class BitMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static std::size_t words_for(std::size_t n) noexcept { return (n + word_bits - 1) / word_bits; }

  std::size_t size() const noexcept { return n_; }
  std::size_t row_words() const noexcept { return words_; }

  bool test(Vertex i, Vertex j) const noexcept {
    return (bits_[i * words_ + j / word_bits] >> (j % word_bits)) & Word{1};
  }
  /// Sets both (i, j) and (j, i). Returns true when the pair was absent.
  bool set(Vertex i, Vertex j) noexcept;
  void reset(Vertex i, Vertex j) noexcept;

  std::span<Word const> row(Vertex i) const noexcept { return {bits_.data() + i * words_, words_}; }
  std::span<Word> row(Vertex i) noexcept { return {bits_.data() + i * words_, words_}; }

  std::size_t degree(Vertex i) const noexcept;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Calls f(v) for every set bit of a packed vertex mask, in increasing order.
template <class F>
void for_each_bit(std::span<BitMatrix::Word const> mask, F&& f) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    BitMatrix::Word word = mask[w];
    while (word != 0) {
      auto bit = static_cast<std::size_t>(std::countr_zero(word));
      f(static_cast<Vertex>(w * BitMatrix::word_bits + bit));
      word &= word - 1;
    }
  }
}

inline std::size_t popcount(std::span<BitMatrix::Word const> mask) {
  std::size_t total = 0;
  for (auto w : mask) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

/// Simple undirected graph over dense ids 0..n-1. Immutable after
/// construction. Dense graphs (m > n^2/8) are held as a BitMatrix, sparse
/// ones as sorted adjacency lists plus a hashed edge index.
class Graph {
public:
  enum class Storage { sparse, dense };

  Graph() = default;

  /// Throws InvalidInput naming the offending pair on an out-of-range
  /// endpoint or a self-loop. Duplicate pairs collapse.
  static Graph build(std::size_t vertex_count, std::span<std::pair<Vertex, Vertex> const> edges);
  static Graph build(std::size_t vertex_count, EdgeSet const& edges);
  static Graph from_bit_matrix(BitMatrix bits);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  Storage storage() const noexcept { return storage_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (storage_ == Storage::dense) {
      for_each_bit(bits_.row(v), f);
    } else {
      for (Vertex w : adjacency_[v]) f(w);
    }
  }

  EdgeSet edges() const;
  BitMatrix to_bit_matrix() const;

  friend bool operator==(Graph const& a, Graph const& b);

private:
  static Graph from_edges(std::size_t n, std::vector<Edge> const& sorted_unique);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Storage storage_ = Storage::sparse;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_set<std::uint64_t> edge_index_;
  BitMatrix bits_;
};

/// True when m > n^2/8, the switch point to packed storage.
bool prefers_dense(std::size_t vertex_count, std::size_t edge_count) noexcept;

/// G + E+. The input is not modified. Throws InvalidInput for pairs out of range.
Graph add_edges(Graph const& g, EdgeSet const& extra);

struct Subgraph {
  Graph graph;
  /// to_original[i] is the host id of subgraph vertex i.
  std::vector<Vertex> to_original;
};

Subgraph induced_subgraph(Graph const& g, std::span<Vertex const> vertices);

/// Unordered pairs inside `vertices` that are not edges of g.
EdgeSet non_edges_within(Graph const& g, std::span<Vertex const> vertices);

std::vector<Vertex> all_vertices(std::size_t n);

void check_vertex_range(Graph const& g, std::span<Vertex const> vertices);

} // namespace fillin_lab
