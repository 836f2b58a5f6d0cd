#include <fillin_lab/reduction.hpp>

#include <algorithm>
#include <random>
#include <string>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>

namespace fillin_lab {

std::string to_string(ReductionKind kind) { return kind == ReductionKind::primitive ? "primitive" : "colored"; }

std::size_t ReducedInstance::missed_block(Vertex v) const {
  return kind == ReductionKind::primitive ? std::size_t{v} : std::size_t{coloring[v]};
}

std::size_t ReducedInstance::block_deficit() const { return kind == ReductionKind::primitive ? n * n : b * n; }

Graph ReducedInstance::original() const { return induced_subgraph(graph, all_vertices(n)).graph; }

namespace {

// Fills row bits [lo, hi) of a BitMatrix row.
void set_row_range(std::span<BitMatrix::Word> row, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi;) {
    std::size_t w = i / 64;
    std::size_t bit = i % 64;
    std::size_t span = std::min<std::size_t>(64 - bit, hi - i);
    BitMatrix::Word mask = span == 64 ? ~BitMatrix::Word{0} : ((BitMatrix::Word{1} << span) - 1) << bit;
    row[w] |= mask;
    i += span;
  }
}

ReducedInstance assemble(Graph const& g, ReducedInstance inst, std::size_t block_count, std::size_t block_size) {
  std::size_t const n = g.vertex_count();
  std::size_t const total = n + block_count * block_size;
  BitMatrix bits(total);
  for (auto const& e : g.edges()) bits.set(e.u, e.v);
  inst.blocks.assign(block_count, {});
  for (std::size_t k = 0; k < block_count; ++k) {
    auto& block = inst.blocks[k];
    block.resize(block_size);
    for (std::size_t i = 0; i < block_size; ++i) block[i] = static_cast<Vertex>(n + k * block_size + i);
  }
  // U is a clique
  for (std::size_t a = n; a < total; ++a) {
    auto row = bits.row(static_cast<Vertex>(a));
    set_row_range(row, n, total);
    row[a / 64] &= ~(BitMatrix::Word{1} << (a % 64));
  }
  // each original vertex sees every block except the one it misses
  for (Vertex v = 0; v < n; ++v) {
    std::size_t const missed = inst.missed_block(v);
    for (std::size_t k = 0; k < block_count; ++k) {
      if (k == missed) continue;
      for (Vertex a : inst.blocks[k]) bits.set(v, a);
    }
  }
  inst.graph = Graph::from_bit_matrix(std::move(bits));
  check_instance(inst, g);
  return inst;
}

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

} // namespace

void check_instance(ReducedInstance const& inst, Graph const& g) {
  auto fail = [](std::string const& what) { throw ConsistencyFailure("reduced instance invariant violated: " + what); };
  std::size_t const n = inst.n;
  Graph const& h = inst.graph;
  if (g.vertex_count() != n) fail("original vertex count");
  std::size_t const deficit = inst.block_deficit();
  std::size_t const expected_vertices = inst.kind == ReductionKind::primitive ? n * n * n + n : (inst.b * inst.q + 1) * n;
  if (h.vertex_count() != expected_vertices) fail("|V(H)| = " + std::to_string(h.vertex_count()));
  std::size_t const expected_blocks = inst.kind == ReductionKind::primitive ? n : inst.q;
  if (inst.blocks.size() != expected_blocks) fail("block count");

  std::vector<std::size_t> block_of(h.vertex_count(), SIZE_MAX);
  for (std::size_t k = 0; k < inst.blocks.size(); ++k) {
    if (inst.blocks[k].size() != deficit) fail("block " + std::to_string(k) + " size");
    for (Vertex a : inst.blocks[k]) {
      if (a < n || a >= h.vertex_count() || block_of[a] != SIZE_MAX) fail("block membership");
      block_of[a] = k;
    }
  }
  // H[V(G)] = G
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.has_edge(u, v) != g.has_edge(u, v)) fail("H[V(G)] differs from G at (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }
  // U is a clique: every U vertex has degree |U| - 1 inside U
  std::size_t const u_size = h.vertex_count() - n;
  for (Vertex a = static_cast<Vertex>(n); a < h.vertex_count(); ++a) {
    std::size_t inside = 0;
    h.for_each_neighbor(a, [&](Vertex w) { inside += w >= n ? 1 : 0; });
    if (inside + 1 != u_size) fail("U is not a clique at " + std::to_string(a));
  }
  // adjacency pattern between V(G) and U
  for (Vertex v = 0; v < n; ++v) {
    std::size_t const missed = inst.missed_block(v);
    if (missed >= inst.blocks.size()) fail("vertex " + std::to_string(v) + " misses no block");
    std::size_t seen = 0;
    bool ok = true;
    h.for_each_neighbor(v, [&](Vertex w) {
      if (w < n) return;
      ++seen;
      ok = ok && block_of[w] != missed;
    });
    if (!ok || seen != u_size - deficit) fail("vertex " + std::to_string(v) + " adjacency to U");
  }
  for (auto const& e : g.edges()) {
    if (inst.missed_block(e.u) == inst.missed_block(e.v)) {
      fail("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") misses a single block");
    }
  }
}

ReducedInstance reduce_primitive(Graph const& g, Limits const& limits) {
  std::size_t const n = g.vertex_count();
  if (n == 0) throw InvalidInput("primitive reduction needs n >= 1");
  if (n > limits.primitive_max_n) {
    throw LimitExceeded("primitive reduction limited to n <= " + std::to_string(limits.primitive_max_n) +
                        " (H would have " + std::to_string(n * n * n + n) + " vertices)");
  }
  ReducedInstance inst;
  inst.kind = ReductionKind::primitive;
  inst.n = n;
  return assemble(g, std::move(inst), n, n * n);
}

ReducedInstance reduce_colored(Graph const& g, std::size_t b, Coloring const& coloring, Limits const& limits,
                               std::uint32_t d) {
  std::size_t const n = g.vertex_count();
  if (b == 0) throw InvalidInput("b must be positive");
  if (coloring.color.size() != n) throw InvalidInput("coloring size does not match the graph");
  if (coloring.colors == 0 && n > 0) throw InvalidInput("coloring uses zero colors");
  for (Vertex v = 0; v < n; ++v) {
    if (coloring.color[v] >= coloring.colors) {
      throw InvalidInput("vertex " + std::to_string(v) + " has color " + std::to_string(coloring.color[v]) +
                         " outside [0, " + std::to_string(coloring.colors) + ")");
    }
  }
  if (auto e = coloring_conflict(g, coloring)) {
    throw InvalidInput("coloring is not proper: edge (" + std::to_string(e->u) + ", " + std::to_string(e->v) +
                       ") is monochromatic");
  }
  if (b * coloring.colors * n > limits.colored_max_gadget) {
    throw LimitExceeded("colored reduction limited to b*q*n <= " + std::to_string(limits.colored_max_gadget));
  }
  ReducedInstance inst;
  inst.kind = ReductionKind::colored;
  inst.n = n;
  inst.b = b;
  inst.q = coloring.colors;
  inst.d = d == 0 ? coloring.colors : d;
  inst.coloring = coloring.color;
  inst.coloring_fallback = coloring.fallback;
  return assemble(g, std::move(inst), coloring.colors, b * n);
}

nlohmann::json instance_sidecar(ReducedInstance const& inst) {
  nlohmann::json j;
  j["reduction"] = to_string(inst.kind);
  j["n"] = inst.n;
  j["vertices"] = inst.graph.vertex_count();
  j["edges"] = inst.graph.edge_count();
  j["blocks"] = inst.blocks;
  if (inst.kind == ReductionKind::colored) {
    j["b"] = inst.b;
    j["q"] = inst.q;
    j["d"] = inst.d;
    j["coloring"] = inst.coloring;
    j["coloring_fallback"] = inst.coloring_fallback;
  } else {
    j["b"] = nullptr;
    j["q"] = nullptr;
    j["coloring"] = nlohmann::json::array();
  }
  return j;
}

VertexCover full_vertices_trusted(ReducedInstance const& inst, FillIn const& fill) {
  std::size_t const n = inst.n;
  std::size_t const deficit = inst.block_deficit();
  std::vector<std::size_t> count(n, 0);
  for (auto const& e : fill) {
    if (e.u >= n || e.v < n) continue; // need one original endpoint, one in U
    std::size_t const block = (e.v - n) / deficit;
    if (block == inst.missed_block(e.u)) ++count[e.u];
  }
  VertexCover cover;
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] == deficit) cover.vertices.push_back(v);
  }
  if (auto e = uncovered_edge(inst.original(), cover)) {
    throw ConsistencyFailure("full vertices do not cover edge (" + std::to_string(e->u) + ", " +
                             std::to_string(e->v) + ") of G");
  }
  return cover;
}

VertexCover full_vertices(ReducedInstance const& inst, FillIn const& fill) {
  auto verdict = verify_fillin(inst.graph, fill);
  if (!verdict.valid()) throw InvalidInput("not a fill-in of H: " + verdict.describe());
  return full_vertices_trusted(inst, fill);
}

FillIn split_completion(ReducedInstance const& inst, VertexCover const& cover) {
  Graph const g = inst.original();
  for (Vertex v : cover.vertices) {
    if (v >= inst.n) throw InvalidInput("cover vertex " + std::to_string(v) + " is not an original vertex");
  }
  if (auto e = uncovered_edge(g, cover)) {
    throw InvalidInput("not a vertex cover: edge (" + std::to_string(e->u) + ", " + std::to_string(e->v) +
                       ") is uncovered");
  }
  std::vector<Edge> fill;
  for (Vertex c : cover.vertices) {
    for (Vertex a : inst.blocks[inst.missed_block(c)]) fill.push_back({c, a});
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      Vertex u = cover.vertices[i];
      Vertex v = cover.vertices[j];
      if (!g.has_edge(u, v)) fill.push_back(make_edge(u, v));
    }
  }
  return EdgeSet(std::move(fill));
}

std::size_t split_completion_size(ReducedInstance const& inst, VertexCover const& cover) {
  Graph const g = inst.original();
  std::size_t inside = 0;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) inside += g.has_edge(cover.vertices[i], cover.vertices[j]) ? 1 : 0;
  }
  return cover.size() * inst.block_deficit() + choose2(cover.size()) - inside;
}

std::vector<NamedFillIn> suite_fillins(ReducedInstance const& inst, VertexCover const& cover,
                                       std::size_t random_orderings, std::uint64_t seed, Limits const& limits) {
  Graph const& h = inst.graph;
  std::vector<NamedFillIn> out;
  out.push_back({"min-degree", greedy_minfill_heuristic(h, GreedyStrategy::min_degree).fill});
  out.push_back({"min-fill", greedy_minfill_heuristic(h, GreedyStrategy::min_fill).fill});
  out.push_back({"mcs-order", elimination_fill(h, mcs_ordering(h).reversed())});
  out.push_back({"split-completion", split_completion(inst, cover)});
  Rng rng(seed);
  for (std::size_t i = 0; i < random_orderings; ++i) {
    EliminationOrdering order{all_vertices(h.vertex_count())};
    rng.shuffle(order.order);
    out.push_back({"random-order-" + std::to_string(i), elimination_fill(h, order)});
  }
  if (h.vertex_count() <= limits.ordering_oracle_max_n) {
    out.push_back({"ordering-oracle", exact_fillin_ordering_oracle(h, limits).fill});
  }
  return out;
}

bool SandwichReport::pass() const { return !cover_exhausted && all_pass(checks); }

nlohmann::json SandwichReport::to_json() const {
  nlohmann::json j;
  j["tau"] = tau;
  j["exact_cover"] = exact_cover.vertices;
  j["block_deficit"] = deficit;
  j["constructive_size"] = constructive_size;
  j["oracle_size"] = oracle_size ? nlohmann::json(*oracle_size) : nlohmann::json(nullptr);
  j["cover_exhausted"] = cover_exhausted;
  auto& algos = j["fillins"] = nlohmann::json::array();
  for (std::size_t i = 0; i < fillins.size(); ++i) {
    algos.push_back({{"algorithm", fillins[i].algorithm},
                     {"size", fillins[i].fill.size()},
                     {"full_vertices", i < extracted_sizes.size() ? extracted_sizes[i] : 0}});
  }
  auto& records = j["checks"] = nlohmann::json::array();
  for (auto const& c : checks) records.push_back(c.to_json());
  j["pass"] = pass();
  return j;
}

SandwichReport verify_sandwich(Graph const& g, ReducedInstance const& inst, SandwichOptions const& options) {
  check_instance(inst, g);
  SandwichReport report;
  auto vc = exact_vertex_cover(g, options.cover);
  if (vc.status != SolveStatus::optimal) {
    report.cover_exhausted = true;
    return report;
  }
  std::size_t const tau = vc.cover.size();
  std::size_t const d = inst.block_deficit();
  report.tau = tau;
  report.exact_cover = vc.cover;
  report.deficit = d;

  FillIn constructive = split_completion(inst, vc.cover);
  report.constructive_size = constructive.size();
  auto& checks = report.checks;
  checks.push_back(check("constructive size matches |C|*deficit + C(|C|,2) - |E(G[C])|", constructive.size(),
                         Relation::equal, split_completion_size(inst, vc.cover)));
  if (inst.kind == ReductionKind::primitive) {
    checks.push_back(check("constructive < (tau+1) n^2", constructive.size(), Relation::less, (tau + 1) * d));
  } else {
    checks.push_back(check("constructive <= b n tau + C(tau,2)", constructive.size(), Relation::less_equal,
                           d * tau + choose2(tau)));
  }

  report.fillins = suite_fillins(inst, vc.cover, options.random_orderings, options.seed, options.limits);
  for (auto const& [name, fill] : report.fillins) {
    auto verdict = verify_fillin(inst.graph, fill);
    checks.push_back(check(name + ": valid fill-in", verdict.valid() ? 1 : 0, Relation::equal, 1));
    if (!verdict.valid()) {
      report.extracted_sizes.push_back(0);
      continue;
    }
    auto full = full_vertices_trusted(inst, fill);
    report.extracted_sizes.push_back(full.size());
    checks.push_back(check(name + ": |E+| >= deficit * |full|", fill.size(), Relation::greater_equal, d * full.size()));
    checks.push_back(check(name + ": |full| >= tau", full.size(), Relation::greater_equal, tau));
    if (name == "ordering-oracle") {
      report.oracle_size = fill.size();
      checks.push_back(check("phi(H) >= tau * deficit", fill.size(), Relation::greater_equal, tau * d));
      if (inst.kind == ReductionKind::primitive) {
        checks.push_back(check("phi(H) < (tau+1) n^2", fill.size(), Relation::less, (tau + 1) * d));
      } else {
        checks.push_back(check("phi(H) <= b n tau + C(tau,2)", fill.size(), Relation::less_equal, d * tau + choose2(tau)));
      }
    }
  }
  return report;
}

bool Theorem4Verdict::pass() const { return all_pass(checks); }

nlohmann::json Theorem4Verdict::to_json() const {
  nlohmann::json j{{"c", c}, {"tau", tau}, {"threshold", threshold}, {"fill_size", fill_size}};
  j["extracted_cover"] = extracted_cover ? nlohmann::json(*extracted_cover) : nlohmann::json(nullptr);
  auto& records = j["checks"] = nlohmann::json::array();
  for (auto const& r : checks) records.push_back(r.to_json());
  j["pass"] = pass();
  return j;
}

Theorem4Verdict theorem4_check(ReducedInstance const& inst, std::size_t c, FillIn const& fill,
                               VertexCover const& exact_cover) {
  if (inst.kind != ReductionKind::primitive) throw InvalidInput("decision check applies to the primitive reduction");
  auto verdict = verify_fillin(inst.graph, fill);
  if (!verdict.valid()) throw InvalidInput("not a fill-in of H: " + verdict.describe());
  std::size_t const n2 = inst.n * inst.n;
  Theorem4Verdict out;
  out.c = c;
  out.tau = exact_cover.size();
  out.threshold = (c + 1) * n2 - 1;
  out.fill_size = fill.size();

  if (out.tau <= c) {
    out.checks.push_back(check("tau <= c: split completion <= (c+1) n^2 - 1", split_completion_size(inst, exact_cover),
                               Relation::less_equal, out.threshold));
  } else {
    out.checks.push_back(check("tau > c: |E+| > (c+1) n^2 - 1", fill.size(), Relation::greater, out.threshold));
  }
  if (fill.size() <= out.threshold) {
    auto full = full_vertices_trusted(inst, fill);
    out.extracted_cover = full.size();
    out.checks.push_back(check("n^2 * |full| <= |E+|", n2 * full.size(), Relation::less_equal, fill.size()));
    out.checks.push_back(check("|full| <= c", full.size(), Relation::less_equal, c));
    out.checks.push_back(check("tau <= |full|", out.tau, Relation::less_equal, full.size()));
  }
  return out;
}

} // namespace fillin_lab
