#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <fillin_lab/graph.hpp>
#include <fillin_lab/inequality.hpp>

namespace fillin_lab {

std::string sha256_hex(std::string_view bytes);

/// "sha256:<hex>" of the graph's DIMACS text.
std::string content_hash(Graph const& g);

/// {name, vertices, edges, hash}
nlohmann::json instance_descriptor(std::string const& name, Graph const& g);

/// Machine-readable record of one command run. Serialization is stable: keys
/// are sorted and nothing time-dependent is included unless timings are set.
struct RunReport {
  std::string command;
  nlohmann::json instance = nlohmann::json::object();
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Inequality> checks;
  /// Nested reports or audits, each carrying its own "pass" field.
  nlohmann::json audits = nlohmann::json::array();
  std::optional<nlohmann::json> timings;

  void require(std::string name, bool ok);
  void add(Inequality line) { checks.push_back(std::move(line)); }
  void add(std::vector<Inequality> const& lines);

  bool pass() const;
  nlohmann::json to_json() const;
  std::string dump() const;
};

} // namespace fillin_lab
