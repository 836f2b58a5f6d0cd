#include <fillin_lab/matrix.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fillin_lab/errors.hpp>

namespace fillin_lab {

SparsePattern SparsePattern::from_entries(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const& entries) {
  SparsePattern p;
  p.n = n;
  for (auto [i, j] : entries) {
    if (i >= n || j >= n) {
      throw InvalidInput("pattern entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside dimension " +
                         std::to_string(n));
    }
    if (i != j) p.positions.push_back(make_edge(i, j));
  }
  std::sort(p.positions.begin(), p.positions.end());
  p.positions.erase(std::unique(p.positions.begin(), p.positions.end()), p.positions.end());
  return p;
}

SparsePattern SparsePattern::tridiagonal(std::size_t n) {
  SparsePattern p;
  p.n = n;
  for (std::size_t i = 0; i + 1 < n; ++i) p.positions.push_back({Vertex(i), Vertex(i + 1)});
  return p;
}

SparsePattern SparsePattern::arrow(std::size_t n) {
  SparsePattern p;
  p.n = n;
  for (std::size_t i = 1; i < n; ++i) p.positions.push_back({0, Vertex(i)});
  return p;
}

Graph graph_from_pattern(SparsePattern const& pattern) {
  return Graph::build(pattern.n, EdgeSet(pattern.positions));
}

SparsePattern pattern_from_graph(Graph const& g) {
  SparsePattern p;
  p.n = g.vertex_count();
  auto edges = g.edges();
  p.positions.assign(edges.begin(), edges.end());
  return p;
}

SymbolicFactor symbolic_factor(SparsePattern const& pattern, EliminationOrdering const& ordering) {
  std::size_t const n = pattern.n;
  validate_permutation(ordering.order, n);
  auto const pos = ordering.positions();

  // lower-triangular structure of the permuted matrix, by column
  std::vector<std::vector<std::size_t>> below(n);
  for (auto const& e : pattern.positions) {
    std::size_t a = pos[e.u];
    std::size_t b = pos[e.v];
    if (a > b) std::swap(a, b);
    below[a].push_back(b);
  }

  SymbolicFactor out;
  out.etree_parent.assign(n, n);
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::vector<std::size_t>> column(n);
  std::vector<std::size_t> mark(n, n);
  std::size_t lower_nonzeros = 0;
  std::vector<Edge> fill;
  for (std::size_t j = 0; j < n; ++j) {
    auto& col = column[j];
    mark[j] = j;
    for (std::size_t i : below[j]) {
      if (mark[i] != j) {
        mark[i] = j;
        col.push_back(i);
      }
    }
    std::size_t const original_count = col.size();
    for (std::size_t c : children[j]) {
      for (std::size_t i : column[c]) {
        if (mark[i] != j) {
          mark[i] = j;
          col.push_back(i);
        }
      }
    }
    for (std::size_t k = original_count; k < col.size(); ++k) {
      fill.push_back(make_edge(ordering.order[j], ordering.order[col[k]]));
    }
    lower_nonzeros += col.size();
    if (!col.empty()) {
      std::size_t parent = *std::min_element(col.begin(), col.end());
      out.etree_parent[j] = parent;
      children[parent].push_back(j);
    }
    // the child structures are no longer needed
    for (std::size_t c : children[j]) std::vector<std::size_t>().swap(column[c]);
    // entries above the parent are inherited by it; drop the parent itself
    if (!col.empty()) {
      std::size_t parent = out.etree_parent[j];
      col.erase(std::remove(col.begin(), col.end(), parent), col.end());
    }
  }
  out.fill = EdgeSet(std::move(fill));
  out.nonzeros = n + 2 * lower_nonzeros;
  return out;
}

bool fill_equivalence_check(SparsePattern const& pattern, EliminationOrdering const& ordering) {
  auto symbolic = symbolic_factor(pattern, ordering);
  Graph g = graph_from_pattern(pattern);
  FillIn game = elimination_fill(g, ordering);
  return symbolic.fill == game && symbolic.nonzeros == 2 * (g.edge_count() + game.size()) + pattern.n;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

} // namespace

MatrixMarketPattern read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](std::string const& what) {
    throw InvalidInput("Matrix Market line " + std::to_string(line_no) + ": " + what);
  };
  if (!std::getline(in, line)) throw InvalidInput("Matrix Market: empty input");
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") fail("missing %%MatrixMarket header");
  if (lower(object) != "matrix" || lower(format) != "coordinate") fail("expected 'matrix coordinate'");
  field = lower(field);
  if (field != "real" && field != "integer" && field != "pattern" && field != "complex") {
    fail("unknown field '" + field + "'");
  }
  if (lower(symmetry) != "symmetric") fail("only symmetric matrices are supported, got '" + symmetry + "'");

  MatrixMarketPattern out;
  std::size_t rows = 0, cols = 0, entries = 0;
  bool have_size = false;
  std::size_t seen = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    std::istringstream row(line);
    if (!have_size) {
      if (!(row >> rows >> cols >> entries)) fail("bad size line");
      if (rows != cols) fail("symmetric matrix must be square");
      have_size = true;
      continue;
    }
    long long i = 0, j = 0;
    if (!(row >> i >> j)) fail("bad entry");
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows || static_cast<std::size_t>(j) > rows) {
      fail("index out of range");
    }
    std::vector<double> values;
    double x = 0;
    while (row >> x) values.push_back(x);
    std::size_t const expected = field == "pattern" ? 0 : (field == "complex" ? 2 : 1);
    if (values.size() != expected) fail("expected " + std::to_string(expected) + " value(s) for field " + field);
    if (i == j) {
      bool zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
      if (!values.empty() && zero) {
        out.warnings.push_back("explicit zero on diagonal at " + std::to_string(i) +
                               "; treated as structurally nonzero");
      }
    }
    pairs.emplace_back(Vertex(i - 1), Vertex(j - 1));
    ++seen;
  }
  if (!have_size) throw InvalidInput("Matrix Market: missing size line");
  if (seen != entries) {
    throw InvalidInput("Matrix Market: header declares " + std::to_string(entries) + " entries, found " +
                       std::to_string(seen));
  }
  out.pattern = SparsePattern::from_entries(rows, pairs);
  return out;
}

MatrixMarketPattern read_matrix_market_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, SparsePattern const& pattern) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << pattern.n << ' ' << pattern.n << ' ' << pattern.n + pattern.positions.size() << '\n';
  for (std::size_t i = 0; i < pattern.n; ++i) out << i + 1 << ' ' << i + 1 << '\n';
  // lower triangle, as the format expects for symmetric storage
  for (auto const& e : pattern.positions) out << e.v + 1 << ' ' << e.u + 1 << '\n';
}

} // namespace fillin_lab
