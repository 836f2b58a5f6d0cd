#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace fillin_lab {

using Rational = boost::multiprecision::cpp_rational;

enum class Relation { less, less_equal, equal, greater_equal, greater };

std::string_view to_string(Relation rel);

/// One evaluated inequality of a proof chain, in exact arithmetic.
struct Inequality {
  std::string name;
  Rational lhs;
  Relation relation = Relation::less_equal;
  Rational rhs;
  bool pass = false;
  /// Vacuous because a premise (such as tau > 0) does not apply.
  bool degenerate = false;

  /// Distance to violation: rhs - lhs for < and <=, lhs - rhs for > and >=,
  /// -|lhs - rhs| for equality.
  Rational slack() const;
  nlohmann::json to_json() const;
};

Inequality check(std::string name, Rational const& lhs, Relation rel, Rational const& rhs);
/// Records the line as passing without evaluating it.
Inequality degenerate(std::string name, Rational const& lhs, Relation rel, Rational const& rhs);

bool all_pass(std::vector<Inequality> const& records);

std::string rational_text(Rational const& r);
double rational_value(Rational const& r);

} // namespace fillin_lab
