#include <algorithm>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/solvers.hpp>

namespace fillin_lab {

bool VertexCover::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

VertexCover VertexCover::from(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return {std::move(vertices)};
}

std::optional<Edge> uncovered_edge(Graph const& g, VertexCover const& cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : cover.vertices) {
    if (v < in.size()) in[v] = true;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (in[u]) continue;
    std::optional<Edge> found;
    g.for_each_neighbor(u, [&](Vertex v) {
      if (!found && !in[v]) found = make_edge(u, v);
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_vertex_cover(Graph const& g, VertexCover const& cover) {
  for (Vertex v : cover.vertices) {
    if (v >= g.vertex_count()) return false;
  }
  return !uncovered_edge(g, cover);
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::none: return "none";
    case SolveStatus::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

using Word = BitMatrix::Word;
using Mask = std::vector<Word>;

bool has(Mask const& m, Vertex v) { return (m[v / 64] >> (v % 64)) & 1U; }
void drop(Mask& m, Vertex v) { m[v / 64] &= ~(Word{1} << (v % 64)); }

class CoverSearch {
public:
  CoverSearch(Graph const& g, std::uint64_t budget) : adj_(g.to_bit_matrix()), budget_(budget) {}

  std::size_t degree(Mask const& alive, Vertex v) const {
    auto row = adj_.row(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < alive.size(); ++w) d += static_cast<std::size_t>(std::popcount(row[w] & alive[w]));
    return d;
  }

  // Greedy maximal matching size: a lower bound on the cover of the rest.
  std::size_t matching_bound(Mask alive) const {
    std::size_t size = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) {
      if (!has(alive, v)) continue;
      auto row = adj_.row(v);
      for (std::size_t w = 0; w < alive.size(); ++w) {
        Word both = row[w] & alive[w];
        if (both != 0) {
          auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(both)));
          drop(alive, v);
          drop(alive, u);
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void run(Mask alive, std::vector<Vertex>& chosen) {
    if (exhausted) return;
    if (++nodes > budget_) {
      exhausted = true;
      return;
    }
    std::size_t const mark = chosen.size();
    // fold isolated and pendant vertices until none remain
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < adj_.size(); ++v) {
        if (!has(alive, v)) continue;
        std::size_t d = degree(alive, v);
        if (d == 0) {
          drop(alive, v);
          changed = true;
        } else if (d == 1) {
          auto row = adj_.row(v);
          for (std::size_t w = 0; w < alive.size(); ++w) {
            Word both = row[w] & alive[w];
            if (both != 0) {
              auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(both)));
              chosen.push_back(u);
              drop(alive, u);
              break;
            }
          }
          drop(alive, v);
          changed = true;
        }
      }
    }

    Vertex pivot = 0;
    std::size_t pivot_degree = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) {
      if (!has(alive, v)) continue;
      std::size_t d = degree(alive, v);
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    if (pivot_degree == 0) {
      if (chosen.size() < best.size()) best = chosen;
      chosen.resize(mark);
      return;
    }
    if (chosen.size() + matching_bound(alive) >= best.size()) {
      chosen.resize(mark);
      return;
    }

    Mask without = alive;
    drop(without, pivot);
    chosen.push_back(pivot);
    run(without, chosen);
    chosen.pop_back();

    Mask closed = without;
    std::size_t const before = chosen.size();
    auto row = adj_.row(pivot);
    for (std::size_t w = 0; w < alive.size(); ++w) {
      Word both = row[w] & alive[w];
      while (both != 0) {
        auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(both)));
        both &= both - 1;
        chosen.push_back(u);
        drop(closed, u);
      }
    }
    run(closed, chosen);
    chosen.resize(before);
    chosen.resize(mark);
  }

  std::vector<Vertex> best;
  std::uint64_t nodes = 0;
  bool exhausted = false;

private:
  BitMatrix adj_;
  std::uint64_t budget_;
};

} // namespace

VertexCoverResult exact_vertex_cover(Graph const& g, VertexCoverOptions const& options) {
  std::size_t const n = g.vertex_count();
  CoverSearch search(g, options.node_budget);
  // every non-isolated vertex is a valid starting incumbent
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 0) search.best.push_back(v);
  }
  Mask alive(BitMatrix::words_for(n), 0);
  for (Vertex v = 0; v < n; ++v) alive[v / 64] |= Word{1} << (v % 64);
  std::vector<Vertex> chosen;
  search.run(alive, chosen);

  VertexCoverResult result;
  result.nodes = search.nodes;
  result.cover = VertexCover::from(search.best);
  result.status = search.exhausted ? SolveStatus::exhausted : SolveStatus::optimal;
  if (auto e = uncovered_edge(g, result.cover)) {
    throw ConsistencyFailure("vertex cover search returned a non-cover, edge (" + std::to_string(e->u) +
                             ", " + std::to_string(e->v) + ") uncovered");
  }
  return result;
}

} // namespace fillin_lab
