#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the Graph type used to read adjacency, and favor obviousness
// over speed: every one is exponential.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <fillin_lab/graph.hpp>

namespace oracle {

using Adj = std::vector<std::vector<bool>>;
using Pair = std::pair<int, int>;

inline Adj adjacency(fillin_lab::Graph const& g) {
  int const n = static_cast<int>(g.vertex_count());
  Adj a(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) a[u][v] = u != v && g.has_edge(u, v);
  }
  return a;
}

inline int edge_count(Adj const& a) {
  int m = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) m += a[u][v] ? 1 : 0;
  }
  return m;
}

/// True if the vertices of `mask` induce a single cycle of length >= 4.
inline bool induces_hole(Adj const& a, std::uint32_t mask) {
  int const n = static_cast<int>(a.size());
  std::vector<int> vs;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) vs.push_back(v);
  }
  if (vs.size() < 4) return false;
  for (int v : vs) {
    int deg = 0;
    for (int w : vs) deg += a[v][w] ? 1 : 0;
    if (deg != 2) return false;
  }
  // 2-regular: a hole iff connected
  std::vector<int> stack{vs[0]};
  std::uint32_t seen = 1U << vs[0];
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : vs) {
      if (a[v][w] && !(seen >> w & 1U)) {
        seen |= 1U << w;
        stack.push_back(w);
      }
    }
  }
  return seen == mask;
}

/// Chordal iff no vertex subset induces a hole. n <= 20.
inline bool is_chordal(Adj const& a) {
  int const n = static_cast<int>(a.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) >= 4 && induces_hole(a, mask)) return false;
  }
  return true;
}

/// Split iff some bipartition is (clique, independent set).
inline bool is_split(Adj const& a) {
  int const n = static_cast<int>(a.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        bool in_u = mask >> u & 1U;
        bool in_v = mask >> v & 1U;
        if (in_u && in_v && !a[u][v]) ok = false;
        if (!in_u && !in_v && a[u][v]) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Fill of the elimination game, as pairs (u < v).
inline std::vector<Pair> elimination_fill(Adj a, std::vector<int> const& order) {
  int const n = static_cast<int>(a.size());
  std::vector<bool> gone(n, false);
  std::vector<Pair> fill;
  for (int x : order) {
    std::vector<int> later;
    for (int w = 0; w < n; ++w) {
      if (!gone[w] && w != x && a[x][w]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        int u = later[i], v = later[j];
        if (!a[u][v]) {
          a[u][v] = a[v][u] = true;
          fill.emplace_back(std::min(u, v), std::max(u, v));
        }
      }
    }
    gone[x] = true;
  }
  std::sort(fill.begin(), fill.end());
  return fill;
}

/// Minimum fill over all n! orderings.
inline int min_fill_by_permutations(Adj const& a) {
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  int best = -1;
  do {
    int size = static_cast<int>(elimination_fill(a, order).size());
    if (best < 0 || size < best) best = size;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Minimum fill by trying non-edge subsets in order of size. Only usable
/// when the graph has few non-edges.
inline int min_fill_by_subsets(Adj const& a) {
  int const n = static_cast<int>(a.size());
  std::vector<Pair> non_edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!a[u][v]) non_edges.emplace_back(u, v);
    }
  }
  int const k = static_cast<int>(non_edges.size());
  for (int size = 0; size <= k; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if (std::popcount(mask) != size) continue;
      Adj b = a;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1U) b[non_edges[i].first][non_edges[i].second] = b[non_edges[i].second][non_edges[i].first] = true;
      }
      if (is_chordal(b)) return size;
    }
  }
  return k;
}

inline bool covers(Adj const& a, std::uint64_t mask) {
  int const n = static_cast<int>(a.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (a[u][v] && !(mask >> u & 1U) && !(mask >> v & 1U)) return false;
    }
  }
  return true;
}

/// Minimum vertex cover size by subset enumeration.
inline int vertex_cover_size(Adj const& a) {
  int const n = static_cast<int>(a.size());
  int best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size < best && covers(a, mask)) best = size;
  }
  return best;
}

/// Is there a vertex cover with at most k vertices? Enumerates k-subsets only.
inline bool has_cover_of_size(Adj const& a, int k) {
  int const n = static_cast<int>(a.size());
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + std::min(k, n), true);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) mask |= std::uint64_t{1} << i;
    }
    if (covers(a, mask)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

} // namespace oracle
