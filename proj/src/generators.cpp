#include <fillin_lab/generators.hpp>

#include <string>

#include <fillin_lab/errors.hpp>

namespace fillin_lab {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below needs a positive bound");
  std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph::build(n, EdgeSet(std::move(edges)));
}

Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) {
    throw InvalidInput("regular: n * d = " + std::to_string(n * d) + " is odd, no such graph exists");
  }
  if (d > 0 && d >= n) throw InvalidInput("regular: need d < n");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
    rng.shuffle(points);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      if (points[i] == points[i + 1]) {
        simple = false;
      } else {
        edges.push_back(make_edge(points[i], points[i + 1]));
      }
    }
    if (!simple) continue;
    EdgeSet set(std::move(edges));
    if (set.size() != n * d / 2) continue;
    Graph g = Graph::build(n, set);
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != d) throw ConsistencyFailure("regular generator produced a wrong degree");
    }
    return g;
  }
  throw LimitExceeded("regular: no simple pairing found within the attempt limit");
}

Graph random_bounded_degree_graph(std::size_t n, std::size_t d, double drop, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t m = n;
  if ((m * d) % 2 != 0) ++m;
  Graph regular = random_regular_graph(m, d, rng.next());
  std::vector<Edge> kept;
  for (auto const& e : regular.edges()) {
    if (e.u < n && e.v < n && !rng.chance(drop)) kept.push_back(e);
  }
  return Graph::build(n, EdgeSet(std::move(kept)));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle: need n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, Vertex((v + 1) % n)));
  return Graph::build(n, EdgeSet(std::move(edges)));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, EdgeSet(std::move(edges)));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, EdgeSet(std::move(edges)));
}

Graph empty_graph(std::size_t n) { return Graph::build(n, EdgeSet{}); }

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(leaves + 1, EdgeSet(std::move(edges)));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return Vertex(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::build(rows * cols, EdgeSet(std::move(edges)));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::build(10, EdgeSet(std::move(edges)));
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({u, v});
    }
  }
  return Graph::build(n, EdgeSet(std::move(edges)));
}

} // namespace fillin_lab
