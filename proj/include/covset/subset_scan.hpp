#pragma once

#include <chrono>
#include <cstdint>
#include <functional>

#include "covset/budget.hpp"
#include "covset/kernels.hpp"

namespace covset {

/// Probe accounting shared by all scans of one solver call.
class ScanContext {
 public:
  explicit ScanContext(const SolverBudget& budget);

  /// Records `n` probes; throws ResourceError when the subset or time budget is exhausted.
  void charge(std::uint64_t n);
  /// Throws ResourceError up front if scanning 2^free_bits candidates cannot fit the budget.
  void require_full_scan(std::size_t free_bits) const;

  std::uint64_t probes() const noexcept { return probes_; }
  double elapsed_seconds() const;
  const SolverBudget& budget() const noexcept { return budget_; }

 private:
  SolverBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t probes_ = 0;
};

/// Called for each covering set found; return false to stop the scan.
using CoveringVisitor = std::function<bool(std::uint64_t)>;

/// Probes every `fixed | s` with s ⊆ `free`, in ascending numeric order of s.
/// Returns false if the visitor stopped the scan.
bool scan_all(const kernels::CoverTable& table, std::uint64_t fixed, std::uint64_t free, ScanContext& ctx,
              const CoveringVisitor& visit);

/// Probes every `fixed | s` with s ⊆ `free` and |s| = count.
bool scan_level(const kernels::CoverTable& table, std::uint64_t fixed, std::uint64_t free, std::size_t count,
                ScanContext& ctx, const CoveringVisitor& visit);

}  // namespace covset
