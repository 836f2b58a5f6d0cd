// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/reduction.hpp>
#include <fillin_lab/solvers.hpp>
#include <fillin_lab/suites.hpp>
#include <fillin_lab/transfer.hpp>

#include "oracles.hpp"

using namespace fillin_lab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

std::size_t tau_of(Graph const& g) {
  auto r = exact_vertex_cover(g);
  if (r.status != SolveStatus::optimal) throw ConsistencyFailure("vertex cover search exhausted");
  return r.cover.size();
}

std::string summary(RunReport const& r) {
  return std::to_string(r.outputs.value("instances", 0)) + " instances, " +
         std::to_string(r.outputs.value("checks", 0)) + " checks, " +
         std::to_string(r.outputs.value("failing_instances", 0)) + " failing";
}

// all labeled graphs on n <= 2
Outcome criterion1() {
  Outcome out;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    std::size_t pairs = choose2(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto inst = reduce_primitive(g);
      std::size_t tau = tau_of(g);
      auto phi = exact_fillin_ordering_oracle(inst.graph).fill.size();
      int brute = oracle::min_fill_by_subsets(oracle::adjacency(inst.graph));
      std::size_t n2 = n * n;
      bool ok = tau * n2 <= phi && phi < (tau + 1) * n2 && int(phi) == brute;
      if (!ok) out.pass = false;
      out.detail += "n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()) + " tau=" + std::to_string(tau) +
                    " phi(H)=" + std::to_string(phi) + "; ";
      ++graphs;
    }
  }
  out.detail += std::to_string(graphs) + " graphs";
  return out;
}

Outcome criterion2() {
  SuiteOptions o;
  o.trials = 200;
  o.nmin = 3;
  o.nmax = 8;
  RunReport r = verify_sandwich_suite(o);
  std::size_t generated = r.outputs.value("instances", 0);
  return {r.pass() && generated >= 200, summary(r)};
}

// full_vertices on every fill-in produced for both reductions
Outcome criterion3() {
  Outcome out;
  std::size_t trials = 0, primitive = 0, colored = 0, failures = 0;
  Limits limits;
  auto run = [&](ReducedInstance const& inst, Graph const& g, std::uint64_t seed) {
    VertexCover cover = exact_vertex_cover(g).cover;
    for (auto const& f : suite_fillins(inst, cover, 6, seed, limits)) {
      ++trials;
      try {
        VertexCover c = full_vertices(inst, f.fill);
        if (!is_vertex_cover(g, c)) ++failures;
      } catch (std::exception const&) {
        ++failures;
      }
    }
  };
  for (std::uint64_t i = 0; trials < 10000 || colored < 200; ++i) {
    Rng rng(derive_seed(default_seed, i));
    if (i % 2 == 0) {
      std::size_t n = rng.between(1, 5);
      Graph g = gnp_graph(n, rng.unit(), rng.next());
      run(reduce_primitive(g, limits), g, rng.next());
      ++primitive;
    } else {
      std::size_t n = rng.between(4, 9);
      Graph g = random_bounded_degree_graph(n, 3, 0.3 * rng.unit(), rng.next());
      auto core = strip_clique_components(g, 3).core;
      std::size_t b = rng.between(1, 3);
      run(reduce_colored(core, b, brooks_coloring(core, 3), limits, 3), core, rng.next());
      ++colored;
    }
  }
  out.pass = failures == 0;
  out.detail = std::to_string(trials) + " trials (" + std::to_string(primitive) + " primitive, " +
               std::to_string(colored) + " colored instances), " + std::to_string(failures) + " failures";
  return out;
}

Outcome criterion4() {
  SuiteOptions o;
  o.trials = 200;
  o.nmin = 1;
  o.nmax = 8;
  RunReport r = verify_theorem4_suite(o);
  return {r.pass() && r.outputs.value("instances", 0) >= 200, summary(r)};
}

// colored instances: split completion of an exact cover and the |E(H)| bound
Outcome criterion5() {
  Outcome out;
  std::size_t instances = 0, failures = 0;
  std::uint32_t const d = 3;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(default_seed ^ 5, i));
    std::size_t n = rng.between(4, 12);
    Graph g = random_bounded_degree_graph(n, d, 0.3 * rng.unit(), rng.next());
    Graph core = strip_clique_components(g, d).core;
    if (core.vertex_count() == 0) continue;
    std::size_t b = rng.between(1, 4);
    auto inst = reduce_colored(core, b, brooks_coloring(core, d), {}, d);
    auto cover = exact_vertex_cover(core).cover;
    std::size_t tau = cover.size(), nn = core.vertex_count();
    std::size_t split = split_completion(inst, cover).size();
    bool eq1 = split <= b * nn * tau + choose2(tau);
    bool edges = inst.graph.edge_count() < b * b * d * d * nn * nn;
    if (!eq1 || !edges || split != split_completion_size(inst, cover)) ++failures;
    ++instances;
  }
  out.pass = failures == 0 && instances >= 100;
  out.detail = std::to_string(instances) + " colored instances, " + std::to_string(failures) + " failures";
  return out;
}

Outcome criterion6() {
  SuiteOptions o;
  o.trials = 100;
  o.d = 3;
  o.epsilons = {Rational(1, 2), Rational(1, 4)};
  RunReport r = verify_transfer_suite(o);
  // exact-backed runs must have every inequality line true, not only the suite verdict
  std::size_t unmet = 0;
  for (auto const& inst : r.audits) {
    if (!inst.contains("runs")) continue;
    for (auto const& run : inst["runs"]) {
      if (run.value("procedure", "").rfind("exact", 0) != 0) continue;
      if (!run.value("condition_met", false) || run.value("skipped", 0) != 0 || run["tau"].is_null()) ++unmet;
    }
  }
  return {r.pass() && r.outputs.value("instances", 0) >= 100 && unmet == 0,
          summary(r) + ", exact-backed runs with unmet condition or skipped lines: " + std::to_string(unmet)};
}

Outcome criterion7() {
  Outcome out;
  std::size_t compared = 0, mismatched = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    Rng rng(derive_seed(default_seed ^ 7, i));
    std::size_t n = rng.between(1, 8);
    Graph g = gnp_graph(n, 0.15 + 0.7 * rng.unit(), rng.next());
    std::size_t phi = exact_fillin_ordering_oracle(g).fill.size();
    if (phi > 6) continue;
    auto br = exact_fillin_branch(g, 6);
    ++compared;
    if (br.status != SolveStatus::optimal || br.fill.size() != phi || !verify_fillin(g, br.fill).valid()) ++mismatched;
  }
  std::size_t small = 0, disagree = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << choose2(n)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto r = is_chordal(g);
      if (r.chordal != oracle::is_chordal(oracle::adjacency(g)) || !check_certificate(g, r)) ++disagree;
      ++small;
    }
  }
  std::size_t random = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng(derive_seed(default_seed ^ 77, i));
    Graph g = gnp_graph(rng.between(6, 7), rng.unit(), rng.next());
    auto r = is_chordal(g);
    if (r.chordal != oracle::is_chordal(oracle::adjacency(g)) || !check_certificate(g, r)) ++disagree;
    ++random;
  }
  out.pass = mismatched == 0 && disagree == 0 && compared >= 100;
  out.detail = "branch vs oracle: " + std::to_string(compared) + " compared, " + std::to_string(mismatched) +
               " mismatched; chordality: " + std::to_string(small) + " labeled graphs with n <= 5 + " +
               std::to_string(random) + " random, " + std::to_string(disagree) + " disagreements";
  return out;
}

Outcome criterion8() {
  SuiteOptions o;
  o.trials = 100;
  o.orderings = 100;
  o.nmax = 10;
  RunReport r = verify_matrix_suite(o);
  return {r.pass() && r.outputs.value("instances", 0) >= 100, summary(r)};
}

} // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
