#include <fillin_lab/chordal.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include <fillin_lab/errors.hpp>

namespace fillin_lab {

EliminationOrdering EliminationOrdering::reversed() const {
  return {std::vector<Vertex>(order.rbegin(), order.rend())};
}

std::vector<std::size_t> EliminationOrdering::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

void validate_permutation(std::span<Vertex const> order, std::size_t n) {
  if (order.size() != n) {
    throw InvalidInput("ordering has " + std::to_string(order.size()) + " entries, expected " +
                       std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n) throw InvalidInput("ordering entry " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidInput("ordering repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

EliminationOrdering mcs_ordering(Graph const& g) {
  std::size_t const n = g.vertex_count();
  EliminationOrdering visit;
  visit.order.reserve(n);
  if (n == 0) return visit;

  // buckets[w] holds unnumbered vertices of weight w; std::set keeps the
  // smallest id at begin() for the tie-break.
  std::vector<std::set<Vertex>> buckets(n);
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
  std::size_t top = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[top].empty()) --top;
    Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    numbered[v] = true;
    visit.order.push_back(v);
    g.for_each_neighbor(v, [&](Vertex w) {
      if (numbered[w]) return;
      buckets[weight[w]].erase(w);
      ++weight[w];
      buckets[weight[w]].insert(w);
      top = std::max(top, weight[w]);
    });
  }
  return visit;
}

namespace {

// Shortest x-y path avoiding v and every neighbor of v other than x and y.
// Closing it through v gives an induced cycle of length >= 4.
std::optional<std::vector<Vertex>> hole_through(Graph const& g, Vertex v, Vertex x, Vertex y) {
  std::size_t const n = g.vertex_count();
  std::vector<bool> blocked(n, false);
  blocked[v] = true;
  g.for_each_neighbor(v, [&](Vertex w) { blocked[w] = true; });
  blocked[x] = false;
  blocked[y] = false;

  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(n, none);
  std::deque<Vertex> queue{x};
  parent[x] = x;
  while (!queue.empty() && parent[y] == none) {
    Vertex u = queue.front();
    queue.pop_front();
    g.for_each_neighbor(u, [&](Vertex w) {
      if (blocked[w] || parent[w] != none) return;
      // x and y are both neighbors of v; the path must not shortcut v's
      // neighborhood, so y may only be entered, never expanded
      parent[w] = u;
      if (w != y) queue.push_back(w);
    });
  }
  if (parent[y] == none) return std::nullopt;
  std::vector<Vertex> cycle{v};
  std::vector<Vertex> path;
  for (Vertex w = y; w != x; w = parent[w]) path.push_back(w);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

struct PeoViolation {
  Vertex center;
  Vertex first;
  Vertex second;
};

std::optional<PeoViolation> find_peo_violation(Graph const& g, std::span<Vertex const> elimination_order) {
  std::size_t const n = g.vertex_count();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[elimination_order[i]] = i;
  for (Vertex v : elimination_order) {
    Vertex parent = v;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    g.for_each_neighbor(v, [&](Vertex w) {
      if (pos[w] > pos[v] && pos[w] < best) {
        best = pos[w];
        parent = w;
      }
    });
    if (parent == v) continue;
    std::optional<PeoViolation> found;
    g.for_each_neighbor(v, [&](Vertex w) {
      if (found || w == parent || pos[w] < pos[v]) return;
      if (!g.has_edge(parent, w)) found = PeoViolation{v, parent, w};
    });
    if (found) return found;
  }
  return std::nullopt;
}

} // namespace

ChordalityResult is_chordal(Graph const& g) {
  EliminationOrdering peo = mcs_ordering(g).reversed();
  auto violation = find_peo_violation(g, peo.order);
  if (!violation) return {true, PeoCertificate{std::move(peo.order)}};

  auto cycle = hole_through(g, violation->center, violation->first, violation->second);
  if (cycle) return {false, HoleCertificate{std::move(*cycle)}};
  auto hole = find_hole_exhaustive(g);
  if (!hole) throw ConsistencyFailure("PEO check failed but no hole exists");
  return {false, std::move(*hole)};
}

bool check_peo(Graph const& g, std::span<Vertex const> elimination_order) {
  std::size_t const n = g.vertex_count();
  if (elimination_order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = elimination_order[i];
    if (v >= n || pos[v] != n) return false;
    pos[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    g.for_each_neighbor(v, [&](Vertex w) {
      if (pos[w] > pos[v]) later.push_back(w);
    });
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.has_edge(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

bool check_hole(Graph const& g, std::span<Vertex const> cycle) {
  std::size_t const len = cycle.size();
  if (len < 4) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool check_certificate(Graph const& g, ChordalityResult const& result) {
  if (result.chordal) {
    auto const* peo = std::get_if<PeoCertificate>(&result.certificate);
    return peo != nullptr && check_peo(g, peo->order);
  }
  auto const* hole = std::get_if<HoleCertificate>(&result.certificate);
  return hole != nullptr && check_hole(g, hole->cycle);
}

nlohmann::json certificate_to_json(ChordalityCertificate const& cert) {
  if (auto const* peo = std::get_if<PeoCertificate>(&cert)) {
    return {{"kind", "peo"}, {"order", peo->order}};
  }
  return {{"kind", "hole"}, {"cycle", std::get<HoleCertificate>(cert).cycle}};
}

ChordalityCertificate certificate_from_json(nlohmann::json const& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "peo") return PeoCertificate{j.at("order").get<std::vector<Vertex>>()};
  if (kind == "hole") return HoleCertificate{j.at("cycle").get<std::vector<Vertex>>()};
  throw InvalidInput("unknown certificate kind '" + kind + "'");
}

std::optional<SplitPartition> is_split(Graph const& g) {
  std::size_t const n = g.vertex_count();
  std::vector<Vertex> by_degree = all_vertices(n);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Hammer-Simeone: with degrees d1 >= ... >= dn and k = max{i : d_i >= i-1},
  // g is split iff sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i.
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(by_degree[i]) >= i) k = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < k ? head : tail) += g.degree(by_degree[i]);
  if (head != k * (k == 0 ? 0 : k - 1) + tail) return std::nullopt;

  SplitPartition p;
  p.clique.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(k));
  p.independent.assign(by_degree.begin() + static_cast<std::ptrdiff_t>(k), by_degree.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (!check_split_partition(g, p)) throw ConsistencyFailure("split degree test produced a bad partition");
  return p;
}

bool check_split_partition(Graph const& g, SplitPartition const& p) {
  if (p.clique.size() + p.independent.size() != g.vertex_count()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (auto const* part : {&p.clique, &p.independent}) {
    for (Vertex v : *part) {
      if (v >= g.vertex_count() || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < p.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!g.has_edge(p.clique[i], p.clique[j])) return false;
    }
  }
  for (std::size_t i = 0; i < p.independent.size(); ++i) {
    for (std::size_t j = i + 1; j < p.independent.size(); ++j) {
      if (g.has_edge(p.independent[i], p.independent[j])) return false;
    }
  }
  return true;
}

FillIn elimination_fill(Graph const& g, EliminationOrdering const& ordering) {
  std::size_t const n = g.vertex_count();
  validate_permutation(ordering.order, n);
  BitMatrix work = g.to_bit_matrix();
  std::vector<BitMatrix::Word> alive(BitMatrix::words_for(n), 0);
  for (Vertex v = 0; v < n; ++v) alive[v / 64] |= BitMatrix::Word{1} << (v % 64);

  std::vector<Edge> added;
  std::vector<BitMatrix::Word> hood(alive.size());
  for (Vertex v : ordering.order) {
    alive[v / 64] &= ~(BitMatrix::Word{1} << (v % 64));
    auto row = work.row(v);
    for (std::size_t w = 0; w < hood.size(); ++w) hood[w] = row[w] & alive[w];
    for_each_bit(hood, [&](Vertex u) {
      auto urow = work.row(u);
      for (std::size_t w = 0; w < hood.size(); ++w) {
        BitMatrix::Word missing = hood[w] & ~urow[w];
        if (w == u / 64) missing &= ~(BitMatrix::Word{1} << (u % 64));
        while (missing != 0) {
          auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(missing)));
          missing &= missing - 1;
          if (work.set(u, x)) added.push_back(make_edge(u, x));
        }
      }
    });
  }
  return EdgeSet(std::move(added));
}

std::string FillInVerdict::describe() const {
  auto pair = [&] {
    return offending_pair ? " (" + std::to_string(offending_pair->u) + ", " +
                                std::to_string(offending_pair->v) + ")"
                          : std::string{};
  };
  switch (status) {
    case Status::valid: return "valid fill-in";
    case Status::out_of_range: return "pair out of range" + pair();
    case Status::already_edge: return "pair is already an edge" + pair();
    case Status::not_chordal: return "completion is not chordal";
  }
  return {};
}

FillInVerdict verify_fillin(Graph const& g, FillIn const& fill) {
  FillInVerdict verdict;
  for (auto const& e : fill) {
    if (e.v >= g.vertex_count()) {
      verdict.status = FillInVerdict::Status::out_of_range;
      verdict.offending_pair = e;
      return verdict;
    }
    if (g.has_edge(e.u, e.v)) {
      verdict.status = FillInVerdict::Status::already_edge;
      verdict.offending_pair = e;
      return verdict;
    }
  }
  auto result = is_chordal(add_edges(g, fill));
  if (!result.chordal) {
    verdict.status = FillInVerdict::Status::not_chordal;
    verdict.hole = std::get<HoleCertificate>(result.certificate);
  }
  return verdict;
}

std::optional<HoleCertificate> find_hole_exhaustive(Graph const& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto hood = g.neighbors(v);
    for (std::size_t i = 0; i < hood.size(); ++i) {
      for (std::size_t j = i + 1; j < hood.size(); ++j) {
        if (g.has_edge(hood[i], hood[j])) continue;
        if (auto cycle = hole_through(g, v, hood[i], hood[j])) return HoleCertificate{std::move(*cycle)};
      }
    }
  }
  return std::nullopt;
}

std::optional<HoleCertificate> find_shortest_hole(Graph const& g) {
  std::optional<HoleCertificate> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto hood = g.neighbors(v);
    for (std::size_t i = 0; i < hood.size(); ++i) {
      for (std::size_t j = i + 1; j < hood.size(); ++j) {
        if (g.has_edge(hood[i], hood[j])) continue;
        auto cycle = hole_through(g, v, hood[i], hood[j]);
        if (cycle && (!best || cycle->size() < best->cycle.size())) {
          best = HoleCertificate{std::move(*cycle)};
          if (best->cycle.size() == 4) return best;
        }
      }
    }
  }
  return best;
}

} // namespace fillin_lab
