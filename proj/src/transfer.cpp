#include <fillin_lab/transfer.hpp>

#include <algorithm>
#include <sstream>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/report.hpp>

namespace fillin_lab {

std::string to_string(TransferMode mode) { return mode == TransferMode::fillin ? "fill-in" : "completion"; }

void TransferConfig::validate() const {
  if (epsilon <= 0 || epsilon >= 1) throw InvalidInput("epsilon must lie in (0, 1), got " + rational_text(epsilon));
  if (d < 3) throw InvalidInput("d must be at least 3, got " + std::to_string(d));
  if (b && *b == 0) throw InvalidInput("b must be positive");
}

std::size_t TransferConfig::block_factor() const {
  if (b) return *b;
  Rational inverse = 1 / epsilon;
  boost::multiprecision::cpp_int whole = boost::multiprecision::numerator(inverse) / boost::multiprecision::denominator(inverse);
  if (Rational(whole) < inverse) whole += 1;
  return whole.convert_to<std::size_t>();
}

namespace {

Rational alpha_for(TransferMode mode, Rational const& eps, std::uint32_t d) {
  if (mode == TransferMode::fillin) return 1 + eps / 3;
  Rational d3 = Rational(d) * d * d;
  return 1 + eps * eps / (10 * d3);
}

Rational choose2(std::size_t k) { return k < 2 ? Rational(0) : Rational(k) * (k - 1) / 2; }

struct Normalized {
  Graph core;
  std::vector<Vertex> to_original;
  std::size_t isolated = 0;
};

Normalized drop_isolated(Graph const& g) {
  Normalized out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      out.to_original.push_back(v);
    } else {
      ++out.isolated;
    }
  }
  out.core = induced_subgraph(g, out.to_original).graph;
  return out;
}

// Shared state of one pipeline run, expressed in exact arithmetic.
struct RunNumbers {
  Rational n, b, d, eps, alpha;
  Rational bn;
  std::optional<Rational> tau;
  Rational cover;
  Rational fill;
  Rational surrogate;
};

class AuditBuilder {
public:
  explicit AuditBuilder(RatioAudit& audit) : audit_(audit) {}

  void add(std::string name, Rational const& lhs, Relation rel, Rational const& rhs, bool applicable = true) {
    audit_.records.push_back(applicable ? check(std::move(name), lhs, rel, rhs)
                                        : degenerate(std::move(name), lhs, rel, rhs));
  }
  void skip(std::string name) { audit_.skipped.push_back(std::move(name)); }

private:
  RatioAudit& audit_;
};

void common_records(AuditBuilder& out, RunNumbers const& r, std::size_t vertices_h, std::uint32_t q,
                    std::size_t b_int) {
  out.add("eps < 1", r.eps, Relation::less, 1);
  out.add("b >= 1/eps", r.b, Relation::greater_equal, 1 / r.eps);
  out.add("|V(H)| = (b q + 1) n", Rational(vertices_h), Relation::equal, (Rational(b_int) * q + 1) * r.n);
  out.add("|V(H)| <= c n, c = (1/eps + 1) d + 1", Rational(vertices_h), Relation::less_equal,
          ((1 / r.eps + 1) * r.d + 1) * r.n);
  bool const nonempty = r.n > 0;
  out.add("|C| <= |E+| / (b n)", r.cover, Relation::less_equal, nonempty ? r.fill / r.bn : Rational(0), nonempty);
}

void tau_records(AuditBuilder& out, RunNumbers const& r) {
  Rational const tau = *r.tau;
  bool const nonempty = r.n > 0;
  out.add("tau < n", tau, Relation::less, r.n, nonempty);
  out.add("tau >= n / (d + 1)", tau, Relation::greater_equal, r.n / (r.d + 1), nonempty);
  Rational const upper = r.bn * tau + choose2(tau.convert_to<std::size_t>());
  out.add("split completion of exact cover <= b n tau + C(tau, 2)", r.surrogate, Relation::less_equal, upper);
  out.add("b n tau + C(tau, 2) < b n tau + tau^2 / 2", upper, Relation::less, r.bn * tau + tau * tau / 2, tau > 0);
}

} // namespace

Rational TransferConfig::alpha() const { return alpha_for(mode, epsilon, d); }

Rational TransferConfig::size_constant() const { return (1 / epsilon + 1) * d + 1; }

bool RatioAudit::pass() const { return all_pass(records); }

std::optional<Rational> RatioAudit::ratio() const {
  if (!tau || *tau == 0) return std::nullopt;
  return Rational(cover_size) / *tau;
}

namespace {

struct Prepared {
  Normalized normal;
  ReducedInstance inst;
  RatioAudit audit;
  RunNumbers numbers;
  std::optional<VertexCover> exact;
};

Prepared prepare(Graph const& g, TransferConfig const& config) {
  config.validate();
  Prepared p;
  p.normal = drop_isolated(g);
  Coloring coloring = brooks_coloring(p.normal.core, config.d);
  std::size_t const b = config.block_factor();
  p.inst = reduce_colored(p.normal.core, b, coloring, config.limits, config.d);

  auto& a = p.audit;
  a.instance = content_hash(g);
  a.mode = config.mode;
  a.epsilon = config.epsilon;
  a.b = b;
  a.d = config.d;
  a.q = coloring.colors;
  a.alpha = alpha_for(config.mode, config.epsilon, coloring.colors);
  a.n = p.normal.core.vertex_count();
  a.isolated_removed = p.normal.isolated;
  a.notes.push_back("opt(H) is replaced by the split completion of an exact minimum cover, an upper bound on opt(H)");
  if (coloring.colors != config.d) {
    a.notes.push_back("coloring fell back to q = " + std::to_string(coloring.colors) +
                      " colors; bounds are evaluated with q in place of d");
  }
  if (p.normal.isolated > 0) {
    a.notes.push_back(std::to_string(p.normal.isolated) + " isolated vertices removed before the reduction");
  }

  auto& r = p.numbers;
  r.n = Rational(a.n);
  r.b = Rational(b);
  r.d = Rational(coloring.colors);
  r.eps = config.epsilon;
  r.alpha = a.alpha;
  r.bn = r.b * r.n;

  auto vc = exact_vertex_cover(p.normal.core, config.cover);
  if (vc.status == SolveStatus::optimal) {
    p.exact = vc.cover;
    a.tau = vc.cover.size();
    r.tau = Rational(vc.cover.size());
    a.surrogate_opt = split_completion_size(p.inst, vc.cover);
    r.surrogate = Rational(a.surrogate_opt);
  } else {
    a.notes.push_back("exact vertex cover exhausted its node budget; tau-dependent lines skipped");
  }
  return p;
}

VertexCover lift_cover(Normalized const& normal, VertexCover const& core_cover) {
  std::vector<Vertex> ids;
  ids.reserve(core_cover.size());
  for (Vertex v : core_cover.vertices) ids.push_back(normal.to_original[v]);
  return VertexCover::from(std::move(ids));
}

void finish_ratio(AuditBuilder& out, RatioAudit& a, RunNumbers const& r, std::string const& bound_name,
                  Rational const& bound) {
  if (!a.condition_met) {
    out.skip("|C| / tau < " + bound_name);
    out.skip("|C| / tau < 1 + eps");
    return;
  }
  bool const positive = r.tau && *r.tau > 0;
  Rational const ratio = positive ? r.cover / *r.tau : Rational(0);
  out.add("|C| / tau < " + bound_name, ratio, Relation::less, bound, positive);
  out.add("|C| / tau < 1 + eps", ratio, Relation::less, 1 + r.eps, positive);
}

} // namespace

TransferResult vc_via_fillin(Graph const& g, FillInProcedure const& procedure, TransferConfig config) {
  config.mode = TransferMode::fillin;
  Prepared p = prepare(g, config);
  FillIn fill = procedure(p.inst);
  auto verdict = verify_fillin(p.inst.graph, fill);
  if (!verdict.valid()) throw InvalidInput("fill-in procedure returned an invalid fill-in: " + verdict.describe());
  VertexCover core_cover = full_vertices_trusted(p.inst, fill);

  auto& a = p.audit;
  auto& r = p.numbers;
  a.cover_size = core_cover.size();
  a.fill_size = fill.size();
  r.cover = Rational(a.cover_size);
  r.fill = Rational(a.fill_size);

  AuditBuilder out(a);
  common_records(out, r, p.inst.graph.vertex_count(), a.q, a.b);
  out.add("(1 + eps/3)(1 + eps/2) < 1 + eps", (1 + r.eps / 3) * (1 + r.eps / 2), Relation::less, 1 + r.eps);
  if (r.tau) {
    tau_records(out, r);
    Rational const tau = *r.tau;
    bool const nonempty = r.n > 0;
    out.add("alpha (1 + tau / (2 b n)) <= alpha (1 + eps/2)",
            nonempty ? r.alpha * (1 + tau / (2 * r.bn)) : r.alpha, Relation::less_equal, r.alpha * (1 + r.eps / 2),
            nonempty);

    if (r.surrogate == 0) {
      a.measured_alpha = r.fill == 0 ? Rational(1) : Rational(-1);
      a.condition_met = r.fill == 0;
    } else {
      a.measured_alpha = r.fill / r.surrogate;
      a.condition_met = a.measured_alpha <= r.alpha;
    }
    if (a.condition_met) {
      Rational const scale = nonempty ? 1 / r.bn : Rational(0);
      out.add("|E+| / (b n) <= alpha opt / (b n)", r.fill * scale, Relation::less_equal, r.alpha * r.surrogate * scale,
              nonempty);
      out.add("alpha opt / (b n) < alpha (b n tau + tau^2/2) / (b n)", r.alpha * r.surrogate * scale, Relation::less,
              r.alpha * (r.bn * tau + tau * tau / 2) * scale, nonempty && tau > 0);
    } else {
      out.skip("|E+| / (b n) <= alpha opt / (b n)");
      out.skip("alpha opt / (b n) < alpha (b n tau + tau^2/2) / (b n)");
    }
    Rational const bound = nonempty ? r.alpha * (1 + tau / (2 * r.bn)) : r.alpha;
    finish_ratio(out, a, r, "alpha (1 + tau / (2 b n))", bound);
  }
  return {lift_cover(p.normal, core_cover), std::move(a)};
}

TransferResult vc_via_completion(Graph const& g, CompletionProcedure const& procedure, TransferConfig config) {
  config.mode = TransferMode::completion;
  Prepared p = prepare(g, config);
  Graph const& h = p.inst.graph;
  Graph completed = procedure(p.inst);
  if (completed.vertex_count() != h.vertex_count()) {
    throw InvalidInput("completion procedure changed the vertex count");
  }
  std::vector<Edge> extra;
  for (auto const& e : completed.edges()) {
    if (!h.has_edge(e.u, e.v)) extra.push_back(e);
  }
  for (auto const& e : h.edges()) {
    if (!completed.has_edge(e.u, e.v)) {
      throw InvalidInput("completion procedure dropped edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
  }
  FillIn fill(std::move(extra));
  if (!is_chordal(completed).chordal) throw InvalidInput("completion procedure returned a non-chordal graph");
  VertexCover core_cover = full_vertices_trusted(p.inst, fill);

  auto& a = p.audit;
  auto& r = p.numbers;
  a.cover_size = core_cover.size();
  a.fill_size = fill.size();
  r.cover = Rational(a.cover_size);
  r.fill = Rational(a.fill_size);

  AuditBuilder out(a);
  common_records(out, r, h.vertex_count(), a.q, a.b);
  bool const nonempty = r.n > 0;
  Rational const d = r.d;
  Rational const d2 = d * d;
  Rational const d3 = d2 * d;
  Rational const b = r.b;
  Rational const eps = r.eps;
  Rational const alpha = r.alpha;
  Rational const edges_g = Rational(p.normal.core.edge_count());
  Rational const edges_h = Rational(h.edge_count());
  Rational const uq = b * d * r.n;

  out.add("b < 2/eps", b, Relation::less, 2 / eps);
  out.add("d >= 3", d, Relation::greater_equal, 3);
  out.add("|E(H)| = |E(G)| + C(b q n, 2) + n (b q n - b n)", edges_h, Relation::equal,
          edges_g + uq * (uq - 1) / 2 + r.n * (uq - r.bn));
  out.add("|E(G)| <= d n / 2", edges_g, Relation::less_equal, d * r.n / 2);
  out.add("|E(H)| < b^2 d^2 n^2", edges_h, Relation::less, b * b * d2 * r.n * r.n, nonempty);

  if (!r.tau) return {lift_cover(p.normal, core_cover), std::move(a)};
  tau_records(out, r);
  Rational const tau = *r.tau;
  bool const positive = tau > 0;
  out.add("tau > n / (2 d)", tau, Relation::greater, r.n / (2 * d), nonempty);

  Rational const objective = edges_h + r.fill;
  Rational const surrogate_objective = edges_h + r.surrogate;
  a.measured_alpha = surrogate_objective == 0 ? Rational(1) : objective / surrogate_objective;
  a.condition_met = a.measured_alpha <= alpha;

  Rational const scale = nonempty ? 1 / r.bn : Rational(0);
  Rational const chain_top = ((alpha - 1) * b * b * d2 * r.n * r.n + alpha * (r.bn * tau + tau * tau / 2)) * scale;
  Rational const expanded = (alpha - 1) * b * d2 * r.n + alpha * tau + (nonempty ? Rational(alpha * tau * tau / (2 * r.bn)) : Rational(0));
  Rational const tau_free = (alpha - 1) * b * d2 * r.n + alpha * tau + alpha * tau / (2 * b);
  if (a.condition_met) {
    out.add("|E+| / (b n) <= (alpha (|E(H)| + opt) - |E(H)|) / (b n)", r.fill * scale, Relation::less_equal,
            (alpha * surrogate_objective - edges_h) * scale, nonempty);
    out.add("((alpha-1)|E(H)| + alpha opt) / (b n) < ((alpha-1) b^2 d^2 n^2 + alpha (b n tau + tau^2/2)) / (b n)",
            ((alpha - 1) * edges_h + alpha * r.surrogate) * scale, Relation::less, chain_top, nonempty);
  } else {
    out.skip("|E+| / (b n) <= (alpha (|E(H)| + opt) - |E(H)|) / (b n)");
    out.skip("((alpha-1)|E(H)| + alpha opt) / (b n) < ((alpha-1) b^2 d^2 n^2 + alpha (b n tau + tau^2/2)) / (b n)");
  }
  out.add("(...) / (b n) = (alpha-1) b d^2 n + alpha tau + alpha tau^2 / (2 b n)", chain_top, Relation::equal, expanded,
          nonempty);
  out.add("alpha tau^2 / (2 b n) < alpha tau / (2 b)", expanded, Relation::less, tau_free, nonempty && positive);

  Rational const step1 = positive ? (alpha - 1) * b * d2 * r.n / tau + alpha + alpha / (2 * b) : Rational(0);
  Rational const step2 = 2 * (alpha - 1) * b * d3 + alpha + alpha / (2 * b);
  Rational const step3 = 2 * (alpha - 1) * b * d3 + alpha + alpha * eps / 2;
  Rational const step4 = (alpha - 1) * (2 * b * d3 + 1 + eps / 2) + 1 + eps / 2;
  Rational const step5 = (alpha - 1) * (4 * d3 / eps + 1 + eps / 2) + 1 + eps / 2;
  Rational const step6 = (alpha - 1) * 5 * d3 / eps + 1 + eps / 2;
  out.add("(alpha-1) b d^2 n / tau + ... < 2 (alpha-1) b d^3 + ... [tau > n/(2d)]", step1, Relation::less, step2,
          positive);
  out.add("... <= 2 (alpha-1) b d^3 + alpha + alpha eps / 2 [b >= 1/eps]", step2, Relation::less_equal, step3);
  out.add("... = (alpha-1)(2 b d^3 + 1 + eps/2) + 1 + eps/2", step3, Relation::equal, step4);
  out.add("... < (alpha-1)(4 d^3 / eps + 1 + eps/2) + 1 + eps/2 [b < 2/eps]", step4, Relation::less, step5);
  out.add("... < (alpha-1) 5 d^3 / eps + 1 + eps/2 [d >= 3, eps < 1]", step5, Relation::less, step6);
  out.add("(alpha-1) 5 d^3 / eps + 1 + eps/2 = 1 + eps", step6, Relation::equal, 1 + eps);
  finish_ratio(out, a, r, "(alpha-1) b d^2 n / tau + alpha + alpha / (2 b)", step1);
  return {lift_cover(p.normal, core_cover), std::move(a)};
}

FillInProcedure exact_backed_fillin() {
  return [](ReducedInstance const& inst) {
    auto vc = exact_vertex_cover(inst.original());
    if (vc.status != SolveStatus::optimal) throw LimitExceeded("exact vertex cover exhausted its node budget");
    return split_completion(inst, vc.cover);
  };
}

FillInProcedure heuristic_fillin(GreedyStrategy strategy) {
  return [strategy](ReducedInstance const& inst) { return greedy_minfill_heuristic(inst.graph, strategy).fill; };
}

CompletionProcedure exact_backed_completion() {
  return [](ReducedInstance const& inst) { return add_edges(inst.graph, exact_backed_fillin()(inst)); };
}

CompletionProcedure heuristic_completion(GreedyStrategy strategy) {
  return [strategy](ReducedInstance const& inst) {
    return add_edges(inst.graph, greedy_minfill_heuristic(inst.graph, strategy).fill);
  };
}

std::string audit_text(RatioAudit const& audit) {
  std::ostringstream out;
  for (auto const& r : audit.records) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << rational_text(r.lhs) << ' ' << to_string(r.relation)
        << ' ' << rational_text(r.rhs) << " (slack " << rational_text(r.slack()) << ')';
    if (r.degenerate) out << " [degenerate]";
    out << '\n';
  }
  for (auto const& name : audit.skipped) out << "SKIP " << name << ": hypothesis not met by this run\n";
  return out.str();
}

nlohmann::json audit_json(RatioAudit const& audit) {
  nlohmann::json j;
  j["instance"] = audit.instance;
  j["mode"] = to_string(audit.mode);
  j["epsilon"] = rational_value(audit.epsilon);
  j["epsilon_exact"] = rational_text(audit.epsilon);
  j["b"] = audit.b;
  j["d"] = audit.d;
  j["q"] = audit.q;
  j["alpha"] = rational_text(audit.alpha);
  j["n"] = audit.n;
  j["isolated_removed"] = audit.isolated_removed;
  auto& lines = j["inequalities"] = nlohmann::json::array();
  for (auto const& r : audit.records) lines.push_back(r.to_json());
  j["cover_size"] = audit.cover_size;
  j["fill_size"] = audit.fill_size;
  j["tau"] = audit.tau ? nlohmann::json(*audit.tau) : nlohmann::json(nullptr);
  auto ratio = audit.ratio();
  j["ratio"] = ratio ? nlohmann::json(rational_value(*ratio)) : nlohmann::json(nullptr);
  j["surrogate_opt"] = audit.surrogate_opt;
  j["measured_alpha"] = rational_text(audit.measured_alpha);
  j["condition_met"] = audit.condition_met;
  j["skipped"] = audit.skipped;
  j["notes"] = audit.notes;
  j["pass"] = audit.pass();
  return j;
}

namespace {

// Decimal digits only; boost would read a leading zero as octal.
boost::multiprecision::cpp_int parse_digits(std::string const& digits, std::string const& text) {
  if (digits.empty()) throw InvalidInput("bad number '" + text + "'");
  boost::multiprecision::cpp_int value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidInput("bad number '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

} // namespace

Rational parse_rational(std::string const& text) {
  std::string body = text;
  bool negative = !body.empty() && body[0] == '-';
  if (negative) body.erase(0, 1);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    auto den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    value = Rational(parse_digits(body.substr(0, slash), text), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw InvalidInput("bad number '" + text + "'");
    boost::multiprecision::cpp_int denom = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
    value = Rational(parse_digits(whole.empty() ? "0" : whole, text)) +
            Rational(parse_digits(frac.empty() ? "0" : frac, text), denom);
  } else {
    value = Rational(parse_digits(body, text));
  }
  return negative ? Rational(-value) : value;
}

} // namespace fillin_lab
