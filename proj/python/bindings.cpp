#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
namespace fl = fillin_lab;

namespace {

using Pairs = std::vector<std::pair<fl::Vertex, fl::Vertex>>;

Pairs to_pairs(fl::EdgeSet const& edges) {
  Pairs out;
  for (auto const& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

fl::EdgeSet to_edge_set(Pairs const& pairs) { return fl::EdgeSet::from_pairs(pairs); }

py::object json_to_py(nlohmann::json const& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum fill-in reductions, exact oracles and verification suites";

  py::register_exception<fl::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<fl::LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<fl::ConsistencyFailure>(m, "ConsistencyFailure", PyExc_AssertionError);

  py::class_<fl::Graph>(m, "Graph")
      .def(py::init([](std::size_t n, Pairs const& edges) { return fl::Graph::build(n, edges); }), py::arg("n"),
           py::arg("edges") = Pairs{})
      .def_property_readonly("vertex_count", &fl::Graph::vertex_count)
      .def_property_readonly("edge_count", &fl::Graph::edge_count)
      .def("has_edge", &fl::Graph::has_edge)
      .def("degree", &fl::Graph::degree)
      .def("neighbors", &fl::Graph::neighbors)
      .def("edges", [](fl::Graph const& g) { return to_pairs(g.edges()); })
      .def("add_edges", [](fl::Graph const& g, Pairs const& extra) { return fl::add_edges(g, to_edge_set(extra)); })
      .def("to_dimacs", &fl::to_dimacs)
      .def("content_hash", &fl::content_hash)
      .def("__eq__", [](fl::Graph const& a, fl::Graph const& b) { return a == b; })
      .def("__repr__", [](fl::Graph const& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("from_dimacs", [](std::string const& text) {
    std::istringstream in(text);
    return fl::read_dimacs(in);
  });

  m.def("induced_subgraph", [](fl::Graph const& g, std::vector<fl::Vertex> const& vs) {
    auto sub = fl::induced_subgraph(g, vs);
    return py::make_tuple(sub.graph, sub.to_original);
  });
  m.def("non_edges_within",
        [](fl::Graph const& g, std::vector<fl::Vertex> const& vs) { return to_pairs(fl::non_edges_within(g, vs)); });

  // chordal engine
  m.def("is_chordal", [](fl::Graph const& g) {
    auto r = fl::is_chordal(g);
    return py::make_tuple(r.chordal, json_to_py(fl::certificate_to_json(r.certificate)));
  });
  m.def("mcs_ordering", [](fl::Graph const& g) { return fl::mcs_ordering(g).order; });
  m.def("is_split", [](fl::Graph const& g) -> py::object {
    auto p = fl::is_split(g);
    if (!p) return py::none();
    return py::make_tuple(p->clique, p->independent);
  });
  m.def("elimination_fill", [](fl::Graph const& g, std::vector<fl::Vertex> const& order) {
    return to_pairs(fl::elimination_fill(g, fl::EliminationOrdering{order}));
  });
  m.def("verify_fillin", [](fl::Graph const& g, Pairs const& fill) {
    auto v = fl::verify_fillin(g, to_edge_set(fill));
    return py::make_tuple(v.valid(), v.describe());
  });

  // exact solvers
  m.def("exact_vertex_cover", [](fl::Graph const& g) -> py::object {
    auto r = fl::exact_vertex_cover(g);
    if (r.status != fl::SolveStatus::optimal) return py::none();
    return py::cast(r.cover.vertices);
  });
  m.def("exact_fillin_ordering_oracle", [](fl::Graph const& g) {
    return to_pairs(fl::exact_fillin_ordering_oracle(g, fl::Limits::from_environment()).fill);
  });
  m.def(
      "exact_fillin_branch",
      [](fl::Graph const& g, std::size_t budget) -> py::object {
        auto r = fl::exact_fillin_branch(g, budget);
        if (r.status == fl::SolveStatus::exhausted) throw fl::LimitExceeded("branch solver exhausted its node budget");
        if (r.status == fl::SolveStatus::none) return py::none();
        return py::cast(to_pairs(r.fill));
      },
      py::arg("g"), py::arg("budget"));
  m.def(
      "greedy_fillin",
      [](fl::Graph const& g, std::string const& strategy) {
        return to_pairs(fl::greedy_minfill_heuristic(g, fl::parse_strategy(strategy)).fill);
      },
      py::arg("g"), py::arg("strategy") = "min-fill");

  // reductions
  py::class_<fl::ReducedInstance>(m, "ReducedInstance")
      .def_property_readonly("graph", [](fl::ReducedInstance const& i) { return i.graph; })
      .def_readonly("n", &fl::ReducedInstance::n)
      .def_readonly("b", &fl::ReducedInstance::b)
      .def_readonly("q", &fl::ReducedInstance::q)
      .def_readonly("blocks", &fl::ReducedInstance::blocks)
      .def("sidecar", [](fl::ReducedInstance const& i) { return json_to_py(fl::instance_sidecar(i)); });
  m.def("reduce_primitive", [](fl::Graph const& g) { return fl::reduce_primitive(g, fl::Limits::from_environment()); });
  m.def(
      "reduce_colored",
      [](fl::Graph const& g, std::size_t b, std::uint32_t d) {
        return fl::reduce_colored(g, b, fl::brooks_coloring(g, d), fl::Limits::from_environment(), d);
      },
      py::arg("g"), py::arg("b"), py::arg("d") = 3);
  m.def("brooks_coloring", [](fl::Graph const& g, std::uint32_t d) {
    auto c = fl::brooks_coloring(g, d);
    return py::make_tuple(c.color, c.colors, c.fallback);
  });
  m.def("full_vertices", [](fl::ReducedInstance const& inst, Pairs const& fill) {
    return fl::full_vertices(inst, to_edge_set(fill)).vertices;
  });
  m.def("split_completion", [](fl::ReducedInstance const& inst, std::vector<fl::Vertex> const& cover) {
    return to_pairs(fl::split_completion(inst, fl::VertexCover::from(cover)));
  });
  m.def("verify_sandwich", [](fl::Graph const& g, fl::ReducedInstance const& inst) {
    return json_to_py(fl::verify_sandwich(g, inst).to_json());
  });

  // transfer
  m.def(
      "vc_via_fillin",
      [](fl::Graph const& g, std::string const& epsilon, std::uint32_t d, std::string const& procedure) {
        fl::TransferConfig config;
        config.epsilon = fl::parse_rational(epsilon);
        config.d = d;
        config.limits = fl::Limits::from_environment();
        auto proc = procedure == "exact" ? fl::exact_backed_fillin() : fl::heuristic_fillin(fl::parse_strategy(procedure));
        auto r = fl::vc_via_fillin(g, proc, config);
        return py::make_tuple(r.cover.vertices, json_to_py(fl::audit_json(r.audit)));
      },
      py::arg("g"), py::arg("epsilon") = "1/2", py::arg("d") = 3, py::arg("procedure") = "exact");
  m.def(
      "vc_via_completion",
      [](fl::Graph const& g, std::string const& epsilon, std::uint32_t d, std::string const& procedure) {
        fl::TransferConfig config;
        config.epsilon = fl::parse_rational(epsilon);
        config.d = d;
        config.limits = fl::Limits::from_environment();
        auto proc = procedure == "exact" ? fl::exact_backed_completion()
                                         : fl::heuristic_completion(fl::parse_strategy(procedure));
        auto r = fl::vc_via_completion(g, proc, config);
        return py::make_tuple(r.cover.vertices, json_to_py(fl::audit_json(r.audit)));
      },
      py::arg("g"), py::arg("epsilon") = "1/2", py::arg("d") = 3, py::arg("procedure") = "exact");

  // matrix bridge
  m.def("symbolic_factor", [](std::size_t n, Pairs const& entries, std::vector<fl::Vertex> const& order) {
    auto r = fl::symbolic_factor(fl::SparsePattern::from_entries(n, entries), fl::EliminationOrdering{order});
    return py::make_tuple(to_pairs(r.fill), r.nonzeros);
  });
  m.def("fill_equivalence_check", [](std::size_t n, Pairs const& entries, std::vector<fl::Vertex> const& order) {
    return fl::fill_equivalence_check(fl::SparsePattern::from_entries(n, entries), fl::EliminationOrdering{order});
  });

  // generators and suites
  m.def("gnp", &fl::gnp_graph);
  m.def("random_regular", &fl::random_regular_graph);
  m.def("cycle", &fl::cycle_graph);
  m.def("petersen", &fl::petersen_graph);
  m.def(
      "run_suite",
      [](std::string const& suite, std::size_t trials, std::uint64_t seed, std::optional<std::size_t> nmax) {
        fl::SuiteOptions o;
        o.trials = trials;
        o.seed = seed;
        o.nmax = nmax;
        o.limits = fl::Limits::from_environment();
        return json_to_py(fl::run_suite(suite, o).to_json());
      },
      py::arg("suite"), py::arg("trials") = 10, py::arg("seed") = fl::default_seed, py::arg("nmax") = py::none());
}
