#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/solvers.hpp>

namespace fillin_lab {

// ---------------------------------------------------------------------------
// Ordering oracle
// ---------------------------------------------------------------------------

OracleResult exact_fillin_ordering_oracle(Graph const& g, Limits const& limits) {
  std::size_t const n = g.vertex_count();
  if (n > limits.ordering_oracle_max_n) {
    throw LimitExceeded("oracle limit exceeded: ordering oracle accepts n <= " +
                        std::to_string(limits.ordering_oracle_max_n) + ", got n = " + std::to_string(n));
  }
  OracleResult result;
  if (n == 0) return result;

  std::vector<std::uint32_t> adj(n, 0);
  for (auto const& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  // Once the set `eliminated` is gone, v's neighbors in the elimination graph
  // are the vertices outside it reachable from v through eliminated vertices.
  auto reach = [&](Vertex v, std::uint32_t eliminated) {
    std::uint32_t seen = 1U << v;
    std::uint32_t frontier = adj[v];
    std::uint32_t outside = 0;
    while (frontier != 0) {
      std::uint32_t bit = frontier & (~frontier + 1);
      frontier &= frontier - 1;
      if (seen & bit) continue;
      seen |= bit;
      if (eliminated & bit) {
        frontier |= adj[static_cast<std::size_t>(std::countr_zero(bit))] & ~seen;
      } else {
        outside |= bit;
      }
    }
    return static_cast<std::uint32_t>(std::popcount(outside));
  };

  // best[S]: fewest edges of the filled graph incident to S from above when
  // S is eliminated first; summed over all vertices this is |E(G + F)|.
  std::size_t const states = std::size_t{1} << n;
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> best(states, unset);
  best[0] = 0;
  for (std::uint32_t s = 1; s < states; ++s) {
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(rest));
      std::uint32_t prev = s & ~(1U << v);
      best[s] = std::min(best[s], best[prev] + reach(v, prev));
    }
  }
  result.states = states;

  std::vector<Vertex> order(n);
  std::uint32_t s = static_cast<std::uint32_t>(states - 1);
  for (std::size_t slot = n; slot-- > 0;) {
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(rest));
      std::uint32_t prev = s & ~(1U << v);
      if (best[prev] + reach(v, prev) == best[s]) {
        order[slot] = v;
        s = prev;
        break;
      }
    }
  }
  result.ordering.order = std::move(order);
  result.fill = elimination_fill(g, result.ordering);
  std::size_t const expected = best[states - 1] - g.edge_count();
  if (result.fill.size() != expected) {
    throw ConsistencyFailure("ordering oracle: elimination game gave " + std::to_string(result.fill.size()) +
                             " fill edges, reach counting gave " + std::to_string(expected));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Hole-chord branching
// ---------------------------------------------------------------------------

namespace {

std::vector<Edge> hole_chords(HoleCertificate const& hole) {
  auto const& c = hole.cycle;
  std::vector<Edge> chords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 2; j < c.size(); ++j) {
      if (i == 0 && j == c.size() - 1) continue;
      chords.push_back(make_edge(c[i], c[j]));
    }
  }
  std::sort(chords.begin(), chords.end());
  return chords;
}

class ChordBranching {
public:
  ChordBranching(Graph const& g, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
                 std::atomic<bool>& exhausted)
      : base_(g), nodes_(nodes), budget_(budget), exhausted_(exhausted) {}

  // Depth-first search for a fill-in of exactly `remaining` more chords (or
  // fewer, if the graph turns chordal early).
  bool search(std::vector<Edge>& fill, std::size_t remaining, std::atomic<long>* abort_above = nullptr,
              long my_index = -1) {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    if (abort_above != nullptr && abort_above->load(std::memory_order_relaxed) < my_index) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      exhausted_.store(true);
      return false;
    }
    std::vector<Edge> key(fill);
    std::sort(key.begin(), key.end());
    if (!failed_.insert(key).second) return false;

    Graph current = add_edges(base_, EdgeSet(key));
    auto hole = find_shortest_hole(current);
    if (!hole) return true;
    if (remaining == 0) return false;
    for (auto const& chord : hole_chords(*hole)) {
      fill.push_back(chord);
      if (search(fill, remaining - 1, abort_above, my_index)) return true;
      fill.pop_back();
    }
    return false;
  }

  void reset_memo() { failed_.clear(); }

private:
  Graph const& base_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::atomic<bool>& exhausted_;
  std::set<std::vector<Edge>> failed_;
};

} // namespace

BranchResult exact_fillin_branch(Graph const& g, std::size_t budget, BranchOptions const& options) {
  BranchResult result;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  auto root_hole = find_shortest_hole(g);
  if (!root_hole) {
    result.status = SolveStatus::optimal;
    result.nodes = 1;
    return result;
  }
  auto const root_chords = hole_chords(*root_hole);
  unsigned const workers = std::max(1U, options.workers);

  for (std::size_t depth = 1; depth <= budget; ++depth) {
    std::vector<std::optional<std::vector<Edge>>> found(root_chords.size());
    std::atomic<long> lowest_success{std::numeric_limits<long>::max()};
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
      ChordBranching search(g, nodes, options.node_budget, exhausted);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= root_chords.size()) return;
        if (lowest_success.load() < static_cast<long>(i)) return;
        std::vector<Edge> fill{root_chords[i]};
        if (search.search(fill, depth - 1, &lowest_success, static_cast<long>(i))) {
          found[i] = fill;
          long expected = lowest_success.load();
          while (static_cast<long>(i) < expected &&
                 !lowest_success.compare_exchange_weak(expected, static_cast<long>(i))) {
          }
        }
      }
    };
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, root_chords.size()); ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    for (auto& candidate : found) {
      if (!candidate) continue;
      result.fill = EdgeSet(std::move(*candidate));
      result.status = SolveStatus::optimal;
      result.nodes = nodes.load();
      auto verdict = verify_fillin(g, result.fill);
      if (!verdict.valid()) throw ConsistencyFailure("branch solver produced " + verdict.describe());
      return result;
    }
    if (exhausted.load()) break;
  }
  result.nodes = nodes.load();
  result.status = exhausted.load() ? SolveStatus::exhausted : SolveStatus::none;
  return result;
}

// ---------------------------------------------------------------------------
// Greedy elimination heuristics
// ---------------------------------------------------------------------------

std::string_view to_string(GreedyStrategy strategy) {
  return strategy == GreedyStrategy::min_degree ? "min-degree" : "min-fill";
}

GreedyStrategy parse_strategy(std::string_view text) {
  if (text == "min-degree") return GreedyStrategy::min_degree;
  if (text == "min-fill") return GreedyStrategy::min_fill;
  throw InvalidInput("unknown strategy '" + std::string(text) + "' (expected min-degree or min-fill)");
}

HeuristicResult greedy_minfill_heuristic(Graph const& g, GreedyStrategy strategy) {
  using Word = BitMatrix::Word;
  std::size_t const n = g.vertex_count();
  std::size_t const words = BitMatrix::words_for(n);
  BitMatrix work = g.to_bit_matrix();
  std::vector<Word> alive(words, 0);
  for (Vertex v = 0; v < n; ++v) alive[v / 64] |= Word{1} << (v % 64);
  std::vector<bool> eliminated(n, false);

  std::vector<Word> hood(words);
  auto load_hood = [&](Vertex v) {
    auto row = work.row(v);
    for (std::size_t w = 0; w < words; ++w) hood[w] = row[w] & alive[w];
  };
  auto score_of = [&](Vertex v) -> std::size_t {
    load_hood(v);
    if (strategy == GreedyStrategy::min_degree) return popcount(hood);
    std::size_t missing = 0;
    for_each_bit(hood, [&](Vertex u) {
      auto urow = work.row(u);
      std::size_t count = 0;
      for (std::size_t w = 0; w < words; ++w) count += static_cast<std::size_t>(std::popcount(hood[w] & ~urow[w]));
      missing += count - 1; // u itself is in hood but not in its own row
    });
    return missing / 2;
  };

  std::vector<std::size_t> score(n);
  for (Vertex v = 0; v < n; ++v) score[v] = score_of(v);

  HeuristicResult result;
  result.ordering.order.reserve(n);
  std::vector<Edge> added;
  std::vector<Word> dirty(words);
  std::vector<Word> x_hood(words);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (!eliminated[v] && score[v] < best) {
        best = score[v];
        pick = v;
      }
    }
    eliminated[pick] = true;
    alive[pick / 64] &= ~(Word{1} << (pick % 64));
    result.ordering.order.push_back(pick);

    load_hood(pick);
    x_hood = hood;
    dirty = x_hood;
    std::size_t const first_new = added.size();
    for_each_bit(x_hood, [&](Vertex u) {
      auto urow = work.row(u);
      for (std::size_t w = 0; w < words; ++w) {
        Word missing = x_hood[w] & ~urow[w];
        if (w == u / 64) missing &= ~(Word{1} << (u % 64));
        while (missing != 0) {
          auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(missing)));
          missing &= missing - 1;
          if (work.set(u, x)) added.push_back(make_edge(u, x));
        }
      }
    });
    if (strategy == GreedyStrategy::min_fill) {
      // a vertex adjacent to both ends of a new edge loses one missing pair
      for (std::size_t i = first_new; i < added.size(); ++i) {
        auto a = work.row(added[i].u);
        auto b = work.row(added[i].v);
        for (std::size_t w = 0; w < words; ++w) dirty[w] |= a[w] & b[w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) dirty[w] &= alive[w];
    for_each_bit(dirty, [&](Vertex v) { score[v] = score_of(v); });
  }
  result.fill = EdgeSet(std::move(added));
  return result;
}

} // namespace fillin_lab
