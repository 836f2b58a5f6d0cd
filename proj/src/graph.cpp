#include <fillin_lab/graph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

#include <fillin_lab/errors.hpp>

namespace fillin_lab {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

} // namespace

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InvalidInput("self-loop " + pair_text(a, b));
  return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto const& e : edges_) {
    if (e.u >= e.v) throw InvalidInput("edge set pair not normalized " + pair_text(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet EdgeSet::from_pairs(std::span<std::pair<Vertex, Vertex> const> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
  return EdgeSet(std::move(edges));
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet EdgeSet::united(EdgeSet const& other) const {
  std::vector<Edge> merged;
  merged.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                 std::back_inserter(merged));
  EdgeSet out;
  out.edges_ = std::move(merged);
  return out;
}

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

bool BitMatrix::set(Vertex i, Vertex j) noexcept {
  Word& a = bits_[i * words_ + j / word_bits];
  Word const mask = Word{1} << (j % word_bits);
  if (a & mask) return false;
  a |= mask;
  bits_[j * words_ + i / word_bits] |= Word{1} << (i % word_bits);
  return true;
}

void BitMatrix::reset(Vertex i, Vertex j) noexcept {
  bits_[i * words_ + j / word_bits] &= ~(Word{1} << (j % word_bits));
  bits_[j * words_ + i / word_bits] &= ~(Word{1} << (i % word_bits));
}

std::size_t BitMatrix::degree(Vertex i) const noexcept { return popcount(row(i)); }

bool prefers_dense(std::size_t vertex_count, std::size_t edge_count) noexcept {
  // m > n^2 / 8, compared without rounding
  return 8 * edge_count > vertex_count * vertex_count;
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> const& sorted_unique) {
  Graph g;
  g.n_ = n;
  g.m_ = sorted_unique.size();
  g.degree_.assign(n, 0);
  for (auto const& e : sorted_unique) {
    ++g.degree_[e.u];
    ++g.degree_[e.v];
  }
  if (prefers_dense(n, g.m_)) {
    g.storage_ = Storage::dense;
    g.bits_ = BitMatrix(n);
    for (auto const& e : sorted_unique) g.bits_.set(e.u, e.v);
    return g;
  }
  g.storage_ = Storage::sparse;
  g.adjacency_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) g.adjacency_[v].reserve(g.degree_[v]);
  g.edge_index_.reserve(g.m_);
  for (auto const& e : sorted_unique) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.edge_index_.insert(edge_key(e.u, e.v));
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::build(std::size_t vertex_count, std::span<std::pair<Vertex, Vertex> const> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw InvalidInput("endpoint out of range " + pair_text(a, b) + " for " +
                         std::to_string(vertex_count) + " vertices");
    }
    normalized.push_back(make_edge(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return from_edges(vertex_count, normalized);
}

Graph Graph::build(std::size_t vertex_count, EdgeSet const& edges) {
  for (auto const& e : edges) {
    if (e.v >= vertex_count) {
      throw InvalidInput("endpoint out of range " + pair_text(e.u, e.v) + " for " +
                         std::to_string(vertex_count) + " vertices");
    }
  }
  return from_edges(vertex_count, {edges.begin(), edges.end()});
}

Graph Graph::from_bit_matrix(BitMatrix bits) {
  std::size_t const n = bits.size();
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (bits.test(v, v)) throw InvalidInput("self-loop " + pair_text(v, v));
    total += bits.degree(v);
  }
  std::size_t const m = total / 2;
  if (!prefers_dense(n, m)) {
    std::vector<Edge> edges;
    edges.reserve(m);
    for (Vertex u = 0; u < n; ++u) {
      for_each_bit(bits.row(u), [&](Vertex v) {
        if (u < v) edges.push_back({u, v});
      });
    }
    return from_edges(n, edges);
  }
  Graph g;
  g.n_ = n;
  g.m_ = m;
  g.storage_ = Storage::dense;
  g.degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) g.degree_[v] = bits.degree(v);
  g.bits_ = std::move(bits);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (storage_ == Storage::dense) return bits_.test(u, v);
  return edge_index_.contains(edge_key(u, v));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  if (storage_ == Storage::sparse) return adjacency_[v];
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for_each_bit(bits_.row(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

EdgeSet Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return EdgeSet(std::move(out));
}

BitMatrix Graph::to_bit_matrix() const {
  if (storage_ == Storage::dense) return bits_;
  BitMatrix bits(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) bits.set(u, v);
    }
  }
  return bits;
}

bool operator==(Graph const& a, Graph const& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) return false;
  for (Vertex u = 0; u < a.n_; ++u) {
    if (a.degree_[u] != b.degree_[u]) return false;
    bool same = true;
    a.for_each_neighbor(u, [&](Vertex v) { same = same && b.has_edge(u, v); });
    if (!same) return false;
  }
  return true;
}

void check_vertex_range(Graph const& g, std::span<Vertex const> vertices) {
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
  }
}

Graph add_edges(Graph const& g, EdgeSet const& extra) {
  for (auto const& e : extra) {
    if (e.v >= g.vertex_count()) {
      throw InvalidInput("pair out of range " + pair_text(e.u, e.v));
    }
  }
  if (extra.empty()) return g;
  std::size_t added = 0;
  for (auto const& e : extra) added += g.has_edge(e.u, e.v) ? 0 : 1;
  if (g.storage() == Graph::Storage::dense || prefers_dense(g.vertex_count(), g.edge_count() + added)) {
    BitMatrix bits = g.to_bit_matrix();
    for (auto const& e : extra) bits.set(e.u, e.v);
    return Graph::from_bit_matrix(std::move(bits));
  }
  return Graph::build(g.vertex_count(), g.edges().united(extra));
}

Subgraph induced_subgraph(Graph const& g, std::span<Vertex const> vertices) {
  check_vertex_range(g, vertices);
  Subgraph out;
  out.to_original.assign(vertices.begin(), vertices.end());
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto const& ids = out.to_original;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.has_edge(ids[i], ids[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  out.graph = Graph::build(ids.size(), edges);
  return out;
}

EdgeSet non_edges_within(Graph const& g, std::span<Vertex const> vertices) {
  check_vertex_range(g, vertices);
  std::vector<Vertex> ids(vertices.begin(), vertices.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!g.has_edge(ids[i], ids[j])) out.push_back({ids[i], ids[j]});
    }
  }
  return EdgeSet(std::move(out));
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

} // namespace fillin_lab
