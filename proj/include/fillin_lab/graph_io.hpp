#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <fillin_lab/graph.hpp>

namespace fillin_lab {

// DIMACS-like edge list: "p edge <n> <m>" then "e <u> <v>" lines with
// 1-based ids. Blank lines and lines starting with 'c' are ignored.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(std::filesystem::path const& path);
void write_dimacs(std::ostream& out, Graph const& g);
std::string to_dimacs(Graph const& g);
void write_dimacs_file(std::filesystem::path const& path, Graph const& g);

// Canonical edge set text: one "u v" line per pair, u < v, 0-based, sorted.
std::string to_canonical_text(EdgeSet const& edges);
EdgeSet parse_canonical_text(std::istream& in);

} // namespace fillin_lab
