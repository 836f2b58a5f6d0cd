#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/reduction.hpp>

namespace fillin_lab {

namespace {

constexpr std::uint32_t uncolored = std::numeric_limits<std::uint32_t>::max();

std::vector<std::vector<Vertex>> components(Graph const& g, std::vector<bool> const& removed) {
  std::size_t const n = g.vertex_count();
  std::vector<bool> seen(removed);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.for_each_neighbor(comp[i], [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool connected_without(Graph const& g, std::vector<Vertex> const& comp, std::vector<Vertex> const& cut) {
  std::vector<bool> removed(g.vertex_count(), true);
  for (Vertex v : comp) removed[v] = false;
  for (Vertex v : cut) removed[v] = true;
  auto parts = components(g, removed);
  return parts.size() <= 1;
}

// BFS order from root restricted to `allowed`.
std::vector<Vertex> bfs_order(Graph const& g, Vertex root, std::vector<bool> const& allowed) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> order{root};
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.for_each_neighbor(order[i], [&](Vertex w) {
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    });
  }
  return order;
}

void color_greedily(Graph const& g, std::vector<Vertex> const& order, std::vector<std::uint32_t>& color) {
  std::vector<bool> used;
  for (Vertex v : order) {
    used.assign(g.degree(v) + 2, false);
    g.for_each_neighbor(v, [&](Vertex w) {
      if (color[w] != uncolored && color[w] < used.size()) used[color[w]] = true;
    });
    std::uint32_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
}

// Colors `piece` in reverse BFS order from `root`, root last. When the root
// has degree < d inside the piece this never needs more than d colors.
void color_rooted(Graph const& g, std::vector<Vertex> const& piece, Vertex root, std::vector<std::uint32_t>& color) {
  std::vector<bool> allowed(g.vertex_count(), false);
  for (Vertex v : piece) allowed[v] = true;
  auto order = bfs_order(g, root, allowed);
  std::reverse(order.begin(), order.end());
  color_greedily(g, order, color);
}

std::optional<Vertex> find_cut_vertex(Graph const& g, std::vector<Vertex> const& comp) {
  for (Vertex c : comp) {
    if (!connected_without(g, comp, {c})) return c;
  }
  return std::nullopt;
}

// Colors a d-regular component that is not complete. Returns false when no
// case of the constructive argument applies.
bool color_regular_component(Graph const& g, std::vector<Vertex> const& comp, std::vector<std::uint32_t>& color) {
  if (auto cut = find_cut_vertex(g, comp)) {
    std::vector<bool> removed(g.vertex_count(), true);
    for (Vertex v : comp) removed[v] = false;
    removed[*cut] = true;
    for (auto piece : components(g, removed)) {
      piece.push_back(*cut);
      std::vector<std::uint32_t> local(g.vertex_count(), uncolored);
      color_rooted(g, piece, *cut, local);
      // rename colors so the shared cut vertex is always color 0
      std::uint32_t const at_cut = local[*cut];
      for (Vertex v : piece) {
        std::uint32_t c = local[v];
        color[v] = c == at_cut ? 0 : (c == 0 ? at_cut : c);
      }
    }
    return true;
  }
  for (Vertex v : comp) {
    auto hood = g.neighbors(v);
    for (std::size_t i = 0; i < hood.size(); ++i) {
      for (std::size_t j = i + 1; j < hood.size(); ++j) {
        Vertex x = hood[i];
        Vertex y = hood[j];
        if (g.has_edge(x, y) || !connected_without(g, comp, {x, y})) continue;
        color[x] = 0;
        color[y] = 0;
        std::vector<bool> allowed(g.vertex_count(), false);
        for (Vertex w : comp) allowed[w] = true;
        allowed[x] = false;
        allowed[y] = false;
        auto order = bfs_order(g, v, allowed);
        std::reverse(order.begin(), order.end());
        color_greedily(g, order, color);
        return true;
      }
    }
  }
  return false;
}

bool is_clique_component(Graph const& g, std::vector<Vertex> const& comp, std::uint32_t d) {
  if (comp.size() != std::size_t{d} + 1) return false;
  return std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == d; });
}

} // namespace

std::optional<Edge> coloring_conflict(Graph const& g, Coloring const& c) {
  for (auto const& e : g.edges()) {
    if (c.color[e.u] == c.color[e.v]) return e;
  }
  return std::nullopt;
}

Coloring brooks_coloring(Graph const& g, std::uint32_t d) {
  std::size_t const n = g.vertex_count();
  if (d < 3) throw InvalidInput("Brooks coloring needs d >= 3, got d = " + std::to_string(d));
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > d) {
      throw InvalidInput("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                         " > d = " + std::to_string(d));
    }
  }
  auto comps = components(g, std::vector<bool>(n, false));
  for (auto const& comp : comps) {
    if (is_clique_component(g, comp, d)) {
      throw InvalidInput("graph has a K_" + std::to_string(d + 1) + " component containing vertex " +
                         std::to_string(comp.front()) + "; strip clique components before coloring");
    }
  }

  Coloring result;
  result.color.assign(n, uncolored);
  for (auto const& comp : comps) {
    auto low = std::find_if(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) < d; });
    if (low != comp.end()) {
      color_rooted(g, comp, *low, result.color);
    } else if (!color_regular_component(g, comp, result.color)) {
      result.fallback = true;
      color_greedily(g, comp, result.color);
    }
  }
  std::uint32_t used = 0;
  for (auto c : result.color) used = std::max(used, c + 1);
  if (used > d) {
    // the constructive procedure missed a case; a greedy coloring still
    // needs at most d + 1 colors
    result.fallback = true;
    result.color.assign(n, uncolored);
    color_greedily(g, all_vertices(n), result.color);
    result.colors = d + 1;
  } else {
    result.colors = d;
  }
  if (auto e = coloring_conflict(g, result)) {
    throw ConsistencyFailure("coloring is not proper at (" + std::to_string(e->u) + ", " + std::to_string(e->v) + ")");
  }
  return result;
}

CliqueStripping strip_clique_components(Graph const& g, std::uint32_t d) {
  std::size_t const n = g.vertex_count();
  CliqueStripping out;
  std::vector<bool> drop(n, false);
  for (auto const& comp : components(g, std::vector<bool>(n, false))) {
    if (!is_clique_component(g, comp, d)) continue;
    out.clique_components.push_back(comp);
    out.cover_part.insert(out.cover_part.end(), comp.begin(), comp.begin() + d);
    for (Vertex v : comp) drop[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!drop[v]) out.to_original.push_back(v);
  }
  out.core = induced_subgraph(g, out.to_original).graph;
  return out;
}

} // namespace fillin_lab
