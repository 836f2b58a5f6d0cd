#include <fillin_lab/report.hpp>

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include <fillin_lab/errors.hpp>
#include <fillin_lab/graph_io.hpp>

namespace fillin_lab {

std::string_view to_string(Relation rel) {
  switch (rel) {
  case Relation::less: return "<";
  case Relation::less_equal: return "<=";
  case Relation::equal: return "=";
  case Relation::greater_equal: return ">=";
  case Relation::greater: return ">";
  }
  return "?";
}

Rational Inequality::slack() const {
  switch (relation) {
  case Relation::less:
  case Relation::less_equal: return rhs - lhs;
  case Relation::greater:
  case Relation::greater_equal: return lhs - rhs;
  case Relation::equal: return lhs > rhs ? Rational(rhs - lhs) : Rational(lhs - rhs);
  }
  return 0;
}

nlohmann::json Inequality::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["lhs"] = rational_text(lhs);
  j["relation"] = std::string(to_string(relation));
  j["rhs"] = rational_text(rhs);
  j["slack"] = rational_text(slack());
  j["pass"] = pass;
  if (degenerate) j["degenerate"] = true;
  return j;
}

Inequality check(std::string name, Rational const& lhs, Relation rel, Rational const& rhs) {
  bool ok = false;
  switch (rel) {
  case Relation::less: ok = lhs < rhs; break;
  case Relation::less_equal: ok = lhs <= rhs; break;
  case Relation::equal: ok = lhs == rhs; break;
  case Relation::greater_equal: ok = lhs >= rhs; break;
  case Relation::greater: ok = lhs > rhs; break;
  }
  return Inequality{std::move(name), lhs, rel, rhs, ok, false};
}

Inequality degenerate(std::string name, Rational const& lhs, Relation rel, Rational const& rhs) {
  return Inequality{std::move(name), lhs, rel, rhs, true, true};
}

bool all_pass(std::vector<Inequality> const& records) {
  for (auto const& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

std::string rational_text(Rational const& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_value(Rational const& r) { return r.convert_to<double>(); }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

std::string content_hash(Graph const& g) { return "sha256:" + sha256_hex(to_dimacs(g)); }

nlohmann::json instance_descriptor(std::string const& name, Graph const& g) {
  return {{"name", name}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"hash", content_hash(g)}};
}

void RunReport::require(std::string name, bool ok) {
  checks.push_back(check(std::move(name), ok ? 1 : 0, Relation::equal, 1));
}

void RunReport::add(std::vector<Inequality> const& lines) { checks.insert(checks.end(), lines.begin(), lines.end()); }

bool RunReport::pass() const {
  if (!all_pass(checks)) return false;
  for (auto const& a : audits) {
    if (a.contains("pass") && !a["pass"].get<bool>()) return false;
  }
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["instance"] = instance;
  j["parameters"] = parameters;
  j["outputs"] = outputs;
  auto& lines = j["checks"] = nlohmann::json::array();
  for (auto const& c : checks) lines.push_back(c.to_json());
  j["audits"] = audits;
  if (timings) j["timings"] = *timings;
  j["verdict"] = pass() ? "PASS" : "FAIL";
  return j;
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

} // namespace fillin_lab
