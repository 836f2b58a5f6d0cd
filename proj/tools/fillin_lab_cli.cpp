// fillin-lab: instance generation, reductions, exact solvers and
// verification suites. Reports go to stdout (or --out) as JSON; a one-line
// summary goes to stderr.
//
// Exit codes: 0 pass, 1 check failure, 2 invalid input, 3 resource guardrail.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fillin_lab/chordal.hpp>
#include <fillin_lab/errors.hpp>
#include <fillin_lab/generators.hpp>
#include <fillin_lab/graph_io.hpp>
#include <fillin_lab/matrix.hpp>
#include <fillin_lab/reduction.hpp>
#include <fillin_lab/report.hpp>
#include <fillin_lab/solvers.hpp>
#include <fillin_lab/suites.hpp>
#include <fillin_lab/transfer.hpp>

namespace fl = fillin_lab;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_invalid = 2;
constexpr int exit_guardrail = 3;

using Clock = std::chrono::steady_clock;

bool is_matrix_market(std::string const& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".mtx") == 0;
}

struct LoadedGraph {
  fl::Graph graph;
  std::vector<std::string> warnings;
};

LoadedGraph load_graph(std::string const& path) {
  if (is_matrix_market(path)) {
    auto mm = fl::read_matrix_market_file(path);
    return {fl::graph_from_pattern(mm.pattern), mm.warnings};
  }
  return {fl::read_dimacs_file(path), {}};
}

void write_text(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fl::InvalidInput("cannot write " + path);
  out << text;
}

void emit(fl::RunReport const& report, std::string const& out_path) {
  std::string text = report.dump();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

int verdict_code(fl::RunReport const& report) { return report.pass() ? exit_pass : exit_check_failure; }

nlohmann::json edges_json(fl::EdgeSet const& edges) {
  auto out = nlohmann::json::array();
  for (auto const& e : edges) out.push_back({e.u, e.v});
  return out;
}

void add_timing(fl::RunReport& report, bool enabled, Clock::time_point start) {
  if (!enabled) return;
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report.timings = nlohmann::json{{"wall_ms", ms}};
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  double p = 0.5;
  std::size_t d = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t seed = fl::default_seed;
  std::string out;
};

int run_gen(GenArgs const& a) {
  fl::Graph g;
  if (a.model == "gnp") {
    g = fl::gnp_graph(a.n, a.p, a.seed);
  } else if (a.model == "regular") {
    g = fl::random_regular_graph(a.n, a.d, a.seed);
  } else if (a.model == "cycle") {
    g = fl::cycle_graph(a.n);
  } else if (a.model == "grid") {
    g = fl::grid_graph(a.rows, a.cols);
  } else if (a.model == "path") {
    g = fl::path_graph(a.n);
  } else if (a.model == "complete") {
    g = fl::complete_graph(a.n);
  } else if (a.model == "empty") {
    g = fl::empty_graph(a.n);
  } else if (a.model == "petersen") {
    g = fl::petersen_graph();
  } else {
    throw fl::InvalidInput("unknown model '" + a.model + "'");
  }
  std::string text = fl::to_dimacs(g);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text(a.out, text);
  }
  std::cerr << "gen " << a.model << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
            << fl::content_hash(g) << '\n';
  return exit_pass;
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string input;
  std::string mode = "primitive";
  std::size_t b = 1;
  std::uint32_t d = 3;
  std::uint64_t seed = fl::default_seed;
  std::string prefix;
  std::string out;
};

int run_reduce(ReduceArgs const& a) {
  auto limits = fl::Limits::from_environment();
  fl::Graph g = load_graph(a.input).graph;
  fl::ReducedInstance inst;
  if (a.mode == "primitive") {
    inst = fl::reduce_primitive(g, limits);
  } else if (a.mode == "colored") {
    if (a.b == 0) throw fl::InvalidInput("--b must be positive");
    inst = fl::reduce_colored(g, a.b, fl::brooks_coloring(g, a.d), limits, a.d);
  } else {
    throw fl::InvalidInput("unknown mode '" + a.mode + "'");
  }
  fl::check_instance(inst, g);
  std::string const prefix = a.prefix.empty() ? a.input + "." + a.mode : a.prefix;
  fl::write_dimacs_file(prefix + ".dimacs", inst.graph);
  auto sidecar = fl::instance_sidecar(inst);
  write_text(prefix + ".json", sidecar.dump(2) + "\n");

  fl::RunReport report;
  report.command = "reduce";
  report.instance = fl::instance_descriptor(a.input, g);
  report.parameters = {{"mode", a.mode}, {"seed", a.seed}};
  if (a.mode == "colored") {
    report.parameters["b"] = a.b;
    report.parameters["d"] = a.d;
  }
  std::size_t const n = g.vertex_count();
  report.outputs = {{"graph_file", prefix + ".dimacs"},
                    {"sidecar_file", prefix + ".json"},
                    {"vertices", inst.graph.vertex_count()},
                    {"edges", inst.graph.edge_count()},
                    {"hash", fl::content_hash(inst.graph)},
                    {"q", inst.q},
                    {"coloring_fallback", inst.coloring_fallback}};
  if (inst.kind == fl::ReductionKind::primitive) {
    report.add(fl::check("|V(H)| = n^3 + n", inst.graph.vertex_count(), fl::Relation::equal, n * n * n + n));
  } else {
    report.add(fl::check("|V(H)| = (b q + 1) n", inst.graph.vertex_count(), fl::Relation::equal,
                         (inst.b * inst.q + 1) * n));
  }
  report.require("structural invariants", true);
  emit(report, a.out);
  std::cerr << "reduce " << a.mode << ": H has " << inst.graph.vertex_count() << " vertices, "
            << inst.graph.edge_count() << " edges -> " << prefix << ".dimacs\n";
  return verdict_code(report);
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  std::string input;
  std::optional<std::size_t> budget;
  std::string strategy = "min-fill";
  std::uint64_t node_budget = 0;
  unsigned workers = 1;
  bool timings = false;
  std::string out;
};

int run_solve(SolveArgs const& a) {
  auto const start = Clock::now();
  auto limits = fl::Limits::from_environment();
  fl::Graph g = load_graph(a.input).graph;
  fl::RunReport report;
  report.command = "solve " + a.problem;
  report.instance = fl::instance_descriptor(a.input, g);
  int code = exit_pass;

  auto fill_outputs = [&](fl::FillIn const& fill) {
    fl::Graph completed = fl::add_edges(g, fill);
    auto chordality = fl::is_chordal(completed);
    report.outputs["size"] = fill.size();
    report.outputs["fill"] = edges_json(fill);
    report.outputs["certificate"] = fl::certificate_to_json(chordality.certificate);
    report.require("fill-in valid", fl::verify_fillin(g, fill).valid());
    report.require("certificate checks", fl::check_certificate(completed, chordality));
  };

  if (a.problem == "vc") {
    fl::VertexCoverOptions opts;
    if (a.node_budget) opts.node_budget = a.node_budget;
    report.parameters = {{"node_budget", opts.node_budget}};
    auto r = fl::exact_vertex_cover(g, opts);
    report.outputs = {{"status", fl::to_string(r.status)}, {"nodes", r.nodes}};
    if (r.status == fl::SolveStatus::optimal) {
      report.outputs["size"] = r.cover.size();
      report.outputs["cover"] = r.cover.vertices;
      report.require("cover valid", fl::is_vertex_cover(g, r.cover));
    } else {
      code = exit_guardrail;
    }
  } else if (a.problem == "fillin") {
    if (a.budget) {
      fl::BranchOptions opts;
      if (a.node_budget) opts.node_budget = a.node_budget;
      opts.workers = a.workers;
      report.parameters = {{"solver", "branch"}, {"budget", *a.budget}, {"node_budget", opts.node_budget}};
      auto r = fl::exact_fillin_branch(g, *a.budget, opts);
      report.outputs = {{"status", fl::to_string(r.status)}, {"nodes", r.nodes}};
      if (r.status == fl::SolveStatus::optimal) {
        fill_outputs(r.fill);
      } else if (r.status == fl::SolveStatus::exhausted) {
        code = exit_guardrail;
      }
    } else {
      report.parameters = {{"solver", "ordering-oracle"}, {"limit", limits.ordering_oracle_max_n}};
      auto r = fl::exact_fillin_ordering_oracle(g, limits);
      report.outputs = {{"status", "optimal"}, {"states", r.states}, {"ordering", r.ordering.order}};
      fill_outputs(r.fill);
      report.require("ordering reproduces the fill", fl::elimination_fill(g, r.ordering) == r.fill);
    }
  } else if (a.problem == "fillin-heuristic") {
    auto strategy = fl::parse_strategy(a.strategy);
    report.parameters = {{"strategy", a.strategy}};
    auto r = fl::greedy_minfill_heuristic(g, strategy);
    report.outputs = {{"ordering", r.ordering.order}};
    fill_outputs(r.fill);
  } else {
    throw fl::InvalidInput("unknown problem '" + a.problem + "'");
  }
  add_timing(report, a.timings, start);
  emit(report, a.out);
  std::cerr << "solve " << a.problem << ": ";
  if (report.outputs.contains("size")) {
    std::cerr << "size " << report.outputs["size"].get<std::size_t>();
  } else {
    std::cerr << "status " << report.outputs["status"].get<std::string>();
  }
  std::cerr << " [" << (report.pass() ? "PASS" : "FAIL") << "]\n";
  return code != exit_pass ? code : verdict_code(report);
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::vector<std::string> inputs;
  std::size_t trials = 50;
  std::optional<std::size_t> nmin;
  std::optional<std::size_t> nmax;
  std::uint64_t seed = fl::default_seed;
  unsigned jobs = 1;
  std::vector<std::string> eps{"1/2"};
  std::uint32_t d = 3;
  std::size_t orderings = 100;
  std::size_t random_orderings = 4;
  bool no_heuristics = false;
  bool detail = false;
  bool timings = false;
  std::string out;
};

int run_verify(VerifyArgs const& a) {
  auto const start = Clock::now();
  fl::SuiteOptions o;
  o.seed = a.seed;
  o.trials = a.trials;
  o.nmin = a.nmin;
  o.nmax = a.nmax;
  o.jobs = a.jobs;
  o.limits = fl::Limits::from_environment();
  o.detail = a.detail;
  o.random_orderings = a.random_orderings;
  o.d = a.d;
  o.heuristics = !a.no_heuristics;
  o.orderings = a.orderings;
  o.epsilons.clear();
  for (auto const& e : a.eps) o.epsilons.push_back(fl::parse_rational(e));
  for (auto const& path : a.inputs) o.inputs.push_back({path, load_graph(path).graph});
  if (o.nmin && o.nmax && *o.nmin > *o.nmax) throw fl::InvalidInput("--nmin exceeds --nmax");

  fl::RunReport report = fl::run_suite(a.suite, o);
  add_timing(report, a.timings, start);
  emit(report, a.out);
  std::cerr << "verify " << a.suite << ": " << report.outputs["instances"].get<std::size_t>() << " instances, "
            << report.outputs["checks"].get<std::size_t>() << " checks, "
            << report.outputs["failing_instances"].get<std::size_t>() << " failing ["
            << (report.pass() ? "PASS" : "FAIL") << "]\n";
  return verdict_code(report);
}

// ---------------------------------------------------------------------------

struct EliminateArgs {
  std::string input;
  std::string order;
  std::string ordering_file;
  std::string strategy = "natural";
  std::uint64_t seed = fl::default_seed;
  std::string out;
};

std::vector<fl::Vertex> parse_order(std::string const& text) {
  std::vector<fl::Vertex> order;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    for (char& c : token) {
      if (c == ',') c = ' ';
    }
    std::istringstream parts(token);
    long long v = 0;
    while (parts >> v) {
      if (v < 0) throw fl::InvalidInput("negative vertex in ordering");
      order.push_back(static_cast<fl::Vertex>(v));
    }
    if (!parts.eof()) throw fl::InvalidInput("bad ordering token '" + token + "'");
  }
  return order;
}

int run_eliminate(EliminateArgs const& a) {
  LoadedGraph loaded = load_graph(a.input);
  fl::Graph const& g = loaded.graph;
  fl::SparsePattern pattern = fl::pattern_from_graph(g);
  fl::EliminationOrdering ordering;
  std::string source;
  if (!a.order.empty()) {
    ordering.order = parse_order(a.order);
    source = "explicit";
  } else if (!a.ordering_file.empty()) {
    std::ifstream in(a.ordering_file);
    if (!in) throw fl::InvalidInput("cannot open " + a.ordering_file);
    std::stringstream buf;
    buf << in.rdbuf();
    ordering.order = parse_order(buf.str());
    source = "file";
  } else if (a.strategy == "natural") {
    ordering.order = fl::all_vertices(g.vertex_count());
    source = a.strategy;
  } else if (a.strategy == "mcs") {
    ordering = fl::mcs_ordering(g).reversed();
    source = a.strategy;
  } else if (a.strategy == "random") {
    ordering.order = fl::all_vertices(g.vertex_count());
    fl::Rng rng(a.seed);
    rng.shuffle(ordering.order);
    source = a.strategy;
  } else {
    ordering = fl::greedy_minfill_heuristic(g, fl::parse_strategy(a.strategy)).ordering;
    source = a.strategy;
  }
  fl::validate_permutation(ordering.order, g.vertex_count());

  auto symbolic = fl::symbolic_factor(pattern, ordering);
  auto game = fl::elimination_fill(g, ordering);
  fl::RunReport report;
  report.command = "eliminate";
  report.instance = fl::instance_descriptor(a.input, g);
  report.parameters = {{"ordering_source", source}, {"seed", a.seed}};
  report.outputs = {{"ordering", ordering.order},
                    {"fill", edges_json(symbolic.fill)},
                    {"fill_size", symbolic.fill.size()},
                    {"nonzeros", symbolic.nonzeros},
                    {"warnings", loaded.warnings}};
  report.require("symbolic fill = elimination game fill", symbolic.fill == game);
  report.add(fl::check("nonzeros = 2 (|E| + |fill|) + n", symbolic.nonzeros, fl::Relation::equal,
                       2 * (g.edge_count() + game.size()) + g.vertex_count()));
  report.require("completed graph is chordal", fl::verify_fillin(g, game).valid());
  emit(report, a.out);
  for (auto const& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << "eliminate: fill " << symbolic.fill.size() << ", nonzeros " << symbolic.nonzeros << " ["
            << (report.pass() ? "PASS" : "FAIL") << "]\n";
  return verdict_code(report);
}

// ---------------------------------------------------------------------------

struct ReportArgs {
  std::string report;
  std::string instance;
  std::string out;
};

fl::Relation parse_relation(std::string const& text) {
  for (auto rel : {fl::Relation::less, fl::Relation::less_equal, fl::Relation::equal, fl::Relation::greater_equal,
                   fl::Relation::greater}) {
    if (fl::to_string(rel) == text) return rel;
  }
  throw fl::InvalidInput("unknown relation '" + text + "'");
}

// Re-evaluates every embedded inequality record found anywhere in j.
void recheck_records(nlohmann::json const& j, std::size_t& total, std::size_t& wrong) {
  if (j.is_object()) {
    if (j.contains("lhs") && j.contains("rhs") && j.contains("relation") && j.contains("pass")) {
      ++total;
      bool degenerate = j.value("degenerate", false);
      auto line = fl::check("", fl::parse_rational(j["lhs"].get<std::string>()),
                            parse_relation(j["relation"].get<std::string>()),
                            fl::parse_rational(j["rhs"].get<std::string>()));
      bool expected = degenerate ? true : line.pass;
      if (expected != j["pass"].get<bool>() || !expected) ++wrong;
    }
    for (auto const& [key, value] : j.items()) recheck_records(value, total, wrong);
  } else if (j.is_array()) {
    for (auto const& value : j) recheck_records(value, total, wrong);
  }
}

int run_report(ReportArgs const& a) {
  std::ifstream in(a.report);
  if (!in) throw fl::InvalidInput("cannot open " + a.report);
  nlohmann::json stored;
  try {
    in >> stored;
  } catch (nlohmann::json::exception const& e) {
    throw fl::InvalidInput("report is not valid JSON: " + std::string(e.what()));
  }
  if (!stored.is_object() || !stored.contains("command") || !stored.contains("verdict")) {
    throw fl::InvalidInput("not a fillin-lab report");
  }
  fl::RunReport report;
  report.command = "report";
  report.parameters = {{"report", a.report}};
  report.outputs = {{"command", stored["command"]}, {"stored_verdict", stored["verdict"]}};

  std::size_t total = 0;
  std::size_t wrong = 0;
  recheck_records(stored, total, wrong);
  report.outputs["records_rechecked"] = total;
  report.require("every embedded record re-evaluates to pass", wrong == 0);
  bool nested_pass = true;
  for (auto const& audit : stored.value("audits", nlohmann::json::array())) {
    if (audit.contains("pass") && !audit["pass"].get<bool>()) nested_pass = false;
  }
  report.require("every nested audit passes", nested_pass);
  report.require("stored verdict is PASS", stored["verdict"] == "PASS");

  if (!a.instance.empty()) {
    fl::Graph g = load_graph(a.instance).graph;
    report.instance = fl::instance_descriptor(a.instance, g);
    std::string stored_hash = stored.value("instance", nlohmann::json::object()).value("hash", "");
    report.require("instance hash matches", stored_hash == fl::content_hash(g));
    auto const& outputs = stored.value("outputs", nlohmann::json::object());
    if (outputs.contains("cover")) {
      auto cover = fl::VertexCover::from(outputs["cover"].get<std::vector<fl::Vertex>>());
      fl::check_vertex_range(g, cover.vertices);
      report.require("embedded cover is a vertex cover", fl::is_vertex_cover(g, cover));
      if (outputs.contains("size")) report.require("cover size matches", outputs["size"] == cover.size());
    }
    if (outputs.contains("fill")) {
      std::vector<fl::Edge> pairs;
      for (auto const& p : outputs["fill"]) pairs.push_back(fl::make_edge(p[0].get<fl::Vertex>(), p[1].get<fl::Vertex>()));
      fl::EdgeSet fill(std::move(pairs));
      bool is_fill = stored["command"].get<std::string>().rfind("solve", 0) == 0;
      if (is_fill) {
        report.require("embedded fill-in is valid", fl::verify_fillin(g, fill).valid());
        if (outputs.contains("certificate")) {
          fl::ChordalityResult result{true, fl::certificate_from_json(outputs["certificate"])};
          if (std::holds_alternative<fl::HoleCertificate>(result.certificate)) result.chordal = false;
          report.require("embedded certificate checks", fl::check_certificate(fl::add_edges(g, fill), result) &&
                                                            result.chordal);
        }
      } else if (outputs.contains("ordering")) {
        fl::EliminationOrdering ordering{outputs["ordering"].get<std::vector<fl::Vertex>>()};
        fl::validate_permutation(ordering.order, g.vertex_count());
        report.require("embedded fill matches the elimination game", fl::elimination_fill(g, ordering) == fill);
      }
    }
  }
  emit(report, a.out);
  std::cerr << "report " << stored["command"].get<std::string>() << ": " << total << " records rechecked ["
            << (report.pass() ? "PASS" : "FAIL") << "]\n";
  return verdict_code(report);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fillin-lab: minimum fill-in reductions, exact oracles and verification suites"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fillin-lab 0.1.0");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph (DIMACS)");
  gen_cmd->add_option("model", gen.model, "gnp | regular | cycle | grid | path | complete | empty | petersen")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--d", gen.d, "Degree (regular)");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the gadget graph H from G");
  reduce_cmd->add_option("input", reduce.input, "Input graph (DIMACS or .mtx)")->required();
  reduce_cmd->add_option("--mode", reduce.mode, "primitive | colored");
  reduce_cmd->add_option("--b", reduce.b, "Block factor (colored)");
  reduce_cmd->add_option("--d", reduce.d, "Degree bound / color count (colored)");
  reduce_cmd->add_option("--seed", reduce.seed, "64-bit seed (recorded)");
  reduce_cmd->add_option("--prefix", reduce.prefix, "Output prefix for <prefix>.dimacs and <prefix>.json");
  reduce_cmd->add_option("--out", reduce.out, "Report file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact and heuristic solvers");
  solve_cmd->add_option("problem", solve.problem, "vc | fillin | fillin-heuristic")->required();
  solve_cmd->add_option("input", solve.input, "Input graph")->required();
  solve_cmd->add_option("--budget", solve.budget, "Fill-in size budget (branch solver)");
  solve_cmd->add_option("--strategy", solve.strategy, "min-degree | min-fill");
  solve_cmd->add_option("--node-budget", solve.node_budget, "Search node budget");
  solve_cmd->add_option("--workers", solve.workers, "Branch solver workers");
  solve_cmd->add_flag("--timings", solve.timings, "Embed wall time (breaks byte-identical reports)");
  solve_cmd->add_option("--out", solve.out, "Report file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify.suite, "sandwich | theorem4 | transfer | matrix")->required();
  verify_cmd->add_option("--input", verify.inputs, "Graph files replacing the generated corpus");
  verify_cmd->add_option("--trials", verify.trials, "Generated instances");
  verify_cmd->add_option("--nmin", verify.nmin, "Smallest generated n");
  verify_cmd->add_option("--nmax", verify.nmax, "Largest generated n");
  verify_cmd->add_option("--seed", verify.seed, "64-bit seed");
  verify_cmd->add_option("--jobs", verify.jobs, "Parallel instances");
  verify_cmd->add_option("--eps", verify.eps, "Epsilon values (transfer), e.g. 1/2 0.25");
  verify_cmd->add_option("--d", verify.d, "Degree bound (transfer)");
  verify_cmd->add_option("--orderings", verify.orderings, "Orderings per pattern (matrix)");
  verify_cmd->add_option("--random-orderings", verify.random_orderings, "Random elimination orders per instance");
  verify_cmd->add_flag("--no-heuristics", verify.no_heuristics, "Skip heuristic-backed transfer runs");
  verify_cmd->add_flag("--detail", verify.detail, "Full per-instance records");
  verify_cmd->add_flag("--timings", verify.timings, "Embed wall time (breaks byte-identical reports)");
  verify_cmd->add_option("--out", verify.out, "Report file (default stdout)");

  EliminateArgs elim;
  auto* elim_cmd = app.add_subcommand("eliminate", "Fill of an ordering on a graph or matrix pattern");
  elim_cmd->add_option("input", elim.input, "DIMACS graph or Matrix Market (.mtx) pattern")->required();
  elim_cmd->add_option("--order", elim.order, "0-based elimination order, comma or space separated");
  elim_cmd->add_option("--ordering-file", elim.ordering_file, "File holding a 0-based elimination order");
  elim_cmd->add_option("--strategy", elim.strategy, "natural | mcs | min-degree | min-fill | random");
  elim_cmd->add_option("--seed", elim.seed, "64-bit seed (random strategy)");
  elim_cmd->add_option("--out", elim.out, "Report file (default stdout)");

  ReportArgs rep;
  auto* report_cmd = app.add_subcommand("report", "Re-check a saved report");
  report_cmd->add_option("report", rep.report, "Report JSON")->required();
  report_cmd->add_option("--instance", rep.instance, "Instance file to check hashes and certificates against");
  report_cmd->add_option("--out", rep.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*elim_cmd) return run_eliminate(elim);
    if (*report_cmd) return run_report(rep);
  } catch (fl::InvalidInput const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (fl::LimitExceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_guardrail;
  } catch (fl::ConsistencyFailure const& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return exit_check_failure;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return exit_invalid;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_check_failure;
  }
  return exit_invalid;
}
