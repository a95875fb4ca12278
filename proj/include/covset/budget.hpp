#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace covset {

/// Caps for exhaustive search. All three must be positive.
struct SolverBudget {
  /// Maximum number of candidate subsets probed by one call.
  std::uint64_t max_subsets = std::uint64_t{1} << 30;
  /// Maximum wall time of one call.
  std::chrono::milliseconds max_time = std::chrono::minutes(30);
  /// Maximum number of non-mandatory alternatives a full enumeration may range over.
  std::size_t max_free_alternatives = 30;

  /// Defaults, overridden by COVERS_BUDGET_SUBSETS / COVERS_BUDGET_SECONDS when set.
  static SolverBudget from_environment();

  /// Throws InvalidArgument when a field is not positive.
  void validate() const;
};

}  // namespace covset
