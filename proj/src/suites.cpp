#include <fillin_lab/suites.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <thread>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/matrix.hpp>
#include <fillin_lab/reduction.hpp>
#include <fillin_lab/transfer.hpp>

namespace fillin_lab {

namespace {

// Runs f(0..count-1) on up to `jobs` threads. Results keep index order, so
// the output never depends on scheduling; the first exception by index wins.
template <class Result, class F>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, F const& f) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(std::max(1U, jobs), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct Entry {
  nlohmann::json record;
  std::size_t checks = 0;
  bool pass = true;
};

nlohmann::json failed_names(std::vector<Inequality> const& lines) {
  auto out = nlohmann::json::array();
  for (auto const& l : lines) {
    if (!l.pass) out.push_back(l.name);
  }
  return out;
}

Entry failure_entry(std::size_t index, std::string const& name, std::string const& what) {
  Entry e;
  e.pass = false;
  e.checks = 1;
  e.record = {{"index", index}, {"name", name}, {"error", what}, {"pass", false}};
  return e;
}

Graph random_small_graph(std::size_t n, Rng& rng) {
  double p = 0.15 + 0.7 * rng.unit();
  return gnp_graph(n, p, rng.next());
}

/// All labeled graphs with n in [nmin, min(nmax, 2)], then `trials` random
/// graphs with n in [max(nmin, 3), nmax].
std::vector<NamedGraph> small_corpus(SuiteOptions const& o, std::size_t nmin, std::size_t nmax) {
  if (!o.inputs.empty()) return o.inputs;
  std::vector<NamedGraph> out;
  for (std::size_t n = std::max<std::size_t>(nmin, 1); n <= std::min<std::size_t>(nmax, 2); ++n) {
    std::size_t const pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      out.push_back({"all-n" + std::to_string(n) + "-" + std::to_string(mask), graph_from_mask(n, mask)});
    }
  }
  std::size_t lo = std::max<std::size_t>(nmin, 3);
  if (lo > nmax) lo = std::max<std::size_t>(nmin, 1);
  if (lo <= nmax) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      Rng rng(derive_seed(o.seed, i));
      std::size_t n = rng.between(lo, nmax);
      out.push_back({"gnp-" + std::to_string(i), random_small_graph(n, rng)});
    }
  }
  return out;
}

RunReport finish(std::string const& suite, nlohmann::json parameters, std::vector<Entry> const& entries) {
  RunReport report;
  report.command = "verify " + suite;
  report.parameters = std::move(parameters);
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (auto const& e : entries) {
    checks += e.checks;
    failures += e.pass ? 0 : 1;
    report.audits.push_back(e.record);
  }
  report.outputs = {{"instances", entries.size()}, {"checks", checks}, {"failing_instances", failures}};
  return report;
}

nlohmann::json common_parameters(SuiteOptions const& o, std::size_t nmin, std::size_t nmax) {
  nlohmann::json p{{"seed", o.seed}, {"trials", o.trials}, {"nmin", nmin}, {"nmax", nmax}};
  if (!o.inputs.empty()) {
    auto names = nlohmann::json::array();
    for (auto const& in : o.inputs) names.push_back(in.name);
    p["inputs"] = names;
  }
  return p;
}

nlohmann::json fill_sizes(std::vector<NamedFillIn> const& fills) {
  nlohmann::json out = nlohmann::json::object();
  for (auto const& f : fills) out[f.algorithm] = f.fill.size();
  return out;
}

} // namespace

RunReport verify_sandwich_suite(SuiteOptions const& o) {
  std::size_t const nmin = o.nmin.value_or(1);
  std::size_t const nmax = o.nmax.value_or(3);
  auto corpus = small_corpus(o, nmin, nmax);
  auto entries = parallel_map<Entry>(corpus.size(), o.jobs, [&](std::size_t i) {
    auto const& [name, g] = corpus[i];
    try {
      ReducedInstance inst = reduce_primitive(g, o.limits);
      SandwichOptions so;
      so.random_orderings = o.random_orderings;
      so.seed = derive_seed(o.seed, 1'000'000 + i);
      so.limits = o.limits;
      auto rep = verify_sandwich(g, inst, so);
      Entry e;
      e.pass = rep.pass();
      e.checks = rep.checks.size() + (rep.cover_exhausted ? 1 : 0);
      if (o.detail) {
        e.record = rep.to_json();
        e.record["index"] = i;
        e.record["name"] = name;
        e.record["hash"] = content_hash(g);
      } else {
        std::size_t const n2 = g.vertex_count() * g.vertex_count();
        e.record = {{"index", i},
                    {"name", name},
                    {"hash", content_hash(g)},
                    {"n", g.vertex_count()},
                    {"tau", rep.tau},
                    {"window", {rep.tau * n2, (rep.tau + 1) * n2}},
                    {"constructive", rep.constructive_size},
                    {"oracle", rep.oracle_size ? nlohmann::json(*rep.oracle_size) : nlohmann::json(nullptr)},
                    {"fillins", fill_sizes(rep.fillins)},
                    {"cover_exhausted", rep.cover_exhausted},
                    {"failed", failed_names(rep.checks)},
                    {"pass", e.pass}};
      }
      return e;
    } catch (ConsistencyFailure const& err) {
      return failure_entry(i, name, err.what());
    }
  });
  auto params = common_parameters(o, nmin, nmax);
  params["random_orderings"] = o.random_orderings;
  return finish("sandwich", params, entries);
}

RunReport verify_theorem4_suite(SuiteOptions const& o) {
  std::size_t const nmin = o.nmin.value_or(1);
  std::size_t const nmax = o.nmax.value_or(3);
  auto corpus = small_corpus(o, nmin, nmax);
  auto entries = parallel_map<Entry>(corpus.size(), o.jobs, [&](std::size_t i) {
    auto const& [name, g] = corpus[i];
    try {
      Rng rng(derive_seed(o.seed, 2'000'000 + i));
      std::size_t const c = rng.between(0, g.vertex_count());
      ReducedInstance inst = reduce_primitive(g, o.limits);
      auto vc = exact_vertex_cover(g);
      if (vc.status != SolveStatus::optimal) throw LimitExceeded("exact vertex cover exhausted on " + name);
      auto fills = suite_fillins(inst, vc.cover, o.random_orderings, rng.next(), o.limits);
      Entry e;
      std::vector<Inequality> lines;
      auto per_fill = nlohmann::json::array();
      std::size_t threshold = 0;
      for (auto const& [algorithm, fill] : fills) {
        auto verdict = theorem4_check(inst, c, fill, vc.cover);
        threshold = verdict.threshold;
        for (auto line : verdict.checks) {
          line.name = algorithm + ": " + line.name;
          lines.push_back(std::move(line));
        }
        if (o.detail) {
          auto j = verdict.to_json();
          j["algorithm"] = algorithm;
          per_fill.push_back(std::move(j));
        }
      }
      e.pass = all_pass(lines);
      e.checks = lines.size();
      e.record = {{"index", i},
                  {"name", name},
                  {"hash", content_hash(g)},
                  {"n", g.vertex_count()},
                  {"c", c},
                  {"tau", vc.cover.size()},
                  {"threshold", threshold},
                  {"fillins", fill_sizes(fills)},
                  {"failed", failed_names(lines)},
                  {"pass", e.pass}};
      if (o.detail) e.record["verdicts"] = per_fill;
      return e;
    } catch (ConsistencyFailure const& err) {
      return failure_entry(i, name, err.what());
    }
  });
  auto params = common_parameters(o, nmin, nmax);
  params["random_orderings"] = o.random_orderings;
  return finish("theorem4", params, entries);
}

RunReport verify_transfer_suite(SuiteOptions const& o) {
  std::size_t const nmin = o.nmin.value_or(4);
  std::size_t const nmax = o.nmax.value_or(10);
  std::vector<NamedGraph> corpus = o.inputs;
  if (corpus.empty()) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      Rng rng(derive_seed(o.seed, i));
      std::size_t n = rng.between(nmin, nmax);
      double drop = std::array<double, 3>{0.0, 0.15, 0.3}[rng.below(3)];
      corpus.push_back({"bounded-" + std::to_string(i), random_bounded_degree_graph(n, o.d, drop, rng.next())});
    }
  }
  auto entries = parallel_map<Entry>(corpus.size(), o.jobs, [&](std::size_t i) {
    auto const& [name, g] = corpus[i];
    try {
      CliqueStripping strip = strip_clique_components(g, o.d);
      Entry e;
      auto runs = nlohmann::json::array();
      std::vector<Inequality> all;
      auto record_run = [&](TransferResult const& result, std::string const& procedure, bool exact) {
        auto const& audit = result.audit;
        std::vector<Inequality> lines = audit.records;
        std::vector<Vertex> total = strip.cover_part;
        for (Vertex v : result.cover.vertices) total.push_back(strip.to_original[v]);
        lines.push_back(check("cover of the input graph", is_vertex_cover(g, VertexCover::from(total)) ? 1 : 0,
                              Relation::equal, 1));
        if (exact && audit.tau) {
          lines.push_back(check("exact-backed |C| = tau", audit.cover_size, Relation::equal, *audit.tau));
        }
        bool const pass = all_pass(lines);
        nlohmann::json run;
        if (o.detail) {
          run = audit_json(audit);
        } else {
          auto ratio = audit.ratio();
          run = {{"epsilon", rational_text(audit.epsilon)},
                 {"mode", to_string(audit.mode)},
                 {"b", audit.b},
                 {"q", audit.q},
                 {"cover_size", audit.cover_size},
                 {"tau", audit.tau ? nlohmann::json(*audit.tau) : nlohmann::json(nullptr)},
                 {"ratio", ratio ? nlohmann::json(rational_text(*ratio)) : nlohmann::json(nullptr)},
                 {"condition_met", audit.condition_met},
                 {"lines", audit.records.size()},
                 {"skipped", audit.skipped.size()}};
        }
        run["procedure"] = procedure;
        run["failed"] = failed_names(lines);
        run["pass"] = pass;
        runs.push_back(std::move(run));
        all.insert(all.end(), lines.begin(), lines.end());
      };
      for (auto const& eps : o.epsilons) {
        TransferConfig config;
        config.epsilon = eps;
        config.d = o.d;
        config.limits = o.limits;
        config.mode = TransferMode::fillin;
        record_run(vc_via_fillin(strip.core, exact_backed_fillin(), config), "exact-backed", true);
        if (o.heuristics) {
          for (auto s : {GreedyStrategy::min_fill, GreedyStrategy::min_degree}) {
            record_run(vc_via_fillin(strip.core, heuristic_fillin(s), config), std::string(to_string(s)), false);
          }
        }
        config.mode = TransferMode::completion;
        record_run(vc_via_completion(strip.core, exact_backed_completion(), config), "exact-backed", true);
        if (o.heuristics) {
          for (auto s : {GreedyStrategy::min_fill, GreedyStrategy::min_degree}) {
            record_run(vc_via_completion(strip.core, heuristic_completion(s), config), std::string(to_string(s)),
                       false);
          }
        }
      }
      e.pass = all_pass(all);
      e.checks = all.size();
      e.record = {{"index", i},
                  {"name", name},
                  {"hash", content_hash(g)},
                  {"n", g.vertex_count()},
                  {"clique_components_removed", strip.clique_components.size()},
                  {"runs", runs},
                  {"pass", e.pass}};
      return e;
    } catch (ConsistencyFailure const& err) {
      return failure_entry(i, name, err.what());
    }
  });
  auto params = common_parameters(o, nmin, nmax);
  auto eps = nlohmann::json::array();
  for (auto const& x : o.epsilons) eps.push_back(rational_text(x));
  params["epsilons"] = eps;
  params["d"] = o.d;
  params["heuristics"] = o.heuristics;
  return finish("transfer", params, entries);
}

RunReport verify_matrix_suite(SuiteOptions const& o) {
  std::size_t const nmin = o.nmin.value_or(1);
  std::size_t const nmax = o.nmax.value_or(10);
  std::vector<NamedGraph> corpus = o.inputs;
  if (corpus.empty()) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      Rng rng(derive_seed(o.seed, i));
      std::size_t n = rng.between(nmin, nmax);
      double p = 0.1 + 0.6 * rng.unit();
      corpus.push_back({"pattern-" + std::to_string(i), gnp_graph(n, p, rng.next())});
    }
  }
  auto entries = parallel_map<Entry>(corpus.size(), o.jobs, [&](std::size_t i) {
    auto const& [name, g] = corpus[i];
    SparsePattern pattern = pattern_from_graph(g);
    Rng rng(derive_seed(o.seed, 3'000'000 + i));
    std::size_t mismatches = 0;
    std::size_t peo_mismatches = 0;
    for (std::size_t k = 0; k < o.orderings; ++k) {
      EliminationOrdering order{all_vertices(pattern.n)};
      rng.shuffle(order.order);
      if (!fill_equivalence_check(pattern, order)) ++mismatches;
      bool zero_fill = symbolic_factor(pattern, order).fill.empty();
      if (zero_fill != check_peo(g, order.order)) ++peo_mismatches;
    }
    Entry e;
    e.checks = 2 * o.orderings;
    e.pass = mismatches == 0 && peo_mismatches == 0;
    e.record = {{"index", i},
                {"name", name},
                {"hash", content_hash(g)},
                {"n", pattern.n},
                {"positions", pattern.positions.size()},
                {"orderings", o.orderings},
                {"fill_mismatches", mismatches},
                {"zero_fill_peo_mismatches", peo_mismatches},
                {"pass", e.pass}};
    return e;
  });
  auto params = common_parameters(o, nmin, nmax);
  params["orderings"] = o.orderings;
  RunReport report = finish("matrix", params, entries);

  for (std::size_t n : {std::size_t{5}, std::max<std::size_t>(nmax, 2)}) {
    std::string const tag = " (n=" + std::to_string(n) + ")";
    EliminationOrdering natural{all_vertices(n)};
    report.add(check("tridiagonal, natural order: fill" + tag, symbolic_factor(SparsePattern::tridiagonal(n), natural).fill.size(),
                     Relation::equal, 0));
    report.add(check("arrow, center first: fill = C(n-1, 2)" + tag,
                     symbolic_factor(SparsePattern::arrow(n), natural).fill.size(), Relation::equal,
                     (n - 1) * (n - 2) / 2));
    EliminationOrdering leaves_first{all_vertices(n)};
    std::rotate(leaves_first.order.begin(), leaves_first.order.begin() + 1, leaves_first.order.end());
    report.add(check("arrow, leaves first: fill" + tag,
                     symbolic_factor(SparsePattern::arrow(n), leaves_first).fill.size(), Relation::equal, 0));
  }
  return report;
}

RunReport run_suite(std::string const& suite, SuiteOptions const& options) {
  if (suite == "sandwich") return verify_sandwich_suite(options);
  if (suite == "theorem4") return verify_theorem4_suite(options);
  if (suite == "transfer") return verify_transfer_suite(options);
  if (suite == "matrix") return verify_matrix_suite(options);
  throw InvalidInput("unknown suite '" + suite + "' (expected sandwich, theorem4, transfer or matrix)");
}

} // namespace fillin_lab
