#pragma once

#include <cstddef>

namespace fillin_lab {

/// Resource guardrails shared by the reductions and exact solvers.
struct Limits {
  std::size_t primitive_max_n = 40;
  /// Upper bound on b * q * n for the colored reduction.
  std::size_t colored_max_gadget = 1'000'000;
  std::size_t ordering_oracle_max_n = 10;

  /// Defaults, or lifted limits when FILLIN_LAB_LIMIT_OVERRIDE is set to a
  /// non-empty value other than "0".
  static Limits from_environment();
  static Limits lifted();
};

} // namespace fillin_lab
