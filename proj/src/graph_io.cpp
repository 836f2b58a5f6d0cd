#include <fillin_lab/graph_io.hpp>

#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/limits.hpp>

namespace fillin_lab {

namespace {

bool is_skippable(std::string const& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == 'c';
}

std::size_t parse_count(std::istringstream& fields, std::size_t line_no, char const* what) {
  long long value = -1;
  if (!(fields >> value) || value < 0) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad " + what);
  }
  return static_cast<std::size_t>(value);
}

} // namespace

Limits Limits::lifted() {
  Limits l;
  l.primitive_max_n = std::numeric_limits<std::size_t>::max();
  l.colored_max_gadget = std::numeric_limits<std::size_t>::max();
  l.ordering_oracle_max_n = 20;
  return l;
}

Limits Limits::from_environment() {
  char const* value = std::getenv("FILLIN_LAB_LIMIT_OVERRIDE");
  if (value != nullptr && *value != '\0' && std::string(value) != "0") return lifted();
  return {};
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared_m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) throw InvalidInput("line " + std::to_string(line_no) + ": duplicate header");
      std::string kind;
      fields >> kind;
      if (kind != "edge" && kind != "col") {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      }
      n = parse_count(fields, line_no, "vertex count");
      declared_m = parse_count(fields, line_no, "edge count");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw InvalidInput("line " + std::to_string(line_no) + ": edge before header");
      std::size_t a = parse_count(fields, line_no, "endpoint");
      std::size_t b = parse_count(fields, line_no, "endpoint");
      if (a < 1 || b < 1 || a > n || b > n) {
        throw InvalidInput("line " + std::to_string(line_no) + ": endpoint out of range (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw InvalidInput("missing 'p edge' header");
  (void)declared_m; // the declared count may include duplicates
  return Graph::build(n, edges);
}

Graph read_dimacs_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, Graph const& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto const& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_dimacs(Graph const& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

void write_dimacs_file(std::filesystem::path const& path, Graph const& g) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  write_dimacs(out, g);
}

std::string to_canonical_text(EdgeSet const& edges) {
  std::ostringstream out;
  for (auto const& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeSet parse_canonical_text(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::size_t a = parse_count(fields, line_no, "vertex");
    std::size_t b = parse_count(fields, line_no, "vertex");
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return EdgeSet::from_pairs(pairs);
}

} // namespace fillin_lab
