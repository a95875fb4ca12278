#include "covset/subset_scan.hpp"

#include <array>
#include <bit>
#include <string>

#include "covset/error.hpp"

namespace covset {

namespace {
constexpr std::size_t kBatch = 512;
}

ScanContext::ScanContext(const SolverBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {
  budget_.validate();
}

void ScanContext::charge(std::uint64_t n) {
  if (n > budget_.max_subsets - std::min(probes_, budget_.max_subsets)) {
    throw ResourceError(BudgetDimension::Subsets,
                        "subset budget of " + std::to_string(budget_.max_subsets) + " probes exhausted");
  }
  probes_ += n;
  if (std::chrono::steady_clock::now() - start_ > budget_.max_time) {
    throw ResourceError(BudgetDimension::WallTime, "wall-time budget of " +
                                                       std::to_string(budget_.max_time.count() / 1000.0) +
                                                       " s exhausted");
  }
}

void ScanContext::require_full_scan(std::size_t free_bits) const {
  if (free_bits > budget_.max_free_alternatives) {
    throw ResourceError(BudgetDimension::Alternatives,
                        "full enumeration over " + std::to_string(free_bits) +
                            " non-mandatory alternatives exceeds the cap of " +
                            std::to_string(budget_.max_free_alternatives));
  }
  if (free_bits >= 64 || (std::uint64_t{1} << free_bits) > budget_.max_subsets - std::min(probes_, budget_.max_subsets)) {
    throw ResourceError(BudgetDimension::Subsets, "full enumeration needs 2^" + std::to_string(free_bits) +
                                                      " probes; budget is " + std::to_string(budget_.max_subsets));
  }
}

double ScanContext::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

namespace {

// Classifies buf[0..n) and reports hits in order. Returns false if stopped.
bool flush(const kernels::CoverTable& table, std::span<std::uint64_t> buf, std::span<std::uint8_t> verdicts,
           ScanContext& ctx, const CoveringVisitor& visit) {
  ctx.charge(buf.size());
  kernels::classify(table, buf, verdicts.first(buf.size()));
  for (std::size_t i = 0; i < buf.size(); ++i) {
    if (verdicts[i] != 0 && !visit(buf[i])) return false;
  }
  return true;
}

}  // namespace

bool scan_all(const kernels::CoverTable& table, std::uint64_t fixed, std::uint64_t free, ScanContext& ctx,
              const CoveringVisitor& visit) {
  ctx.require_full_scan(static_cast<std::size_t>(std::popcount(free)));
  std::array<std::uint64_t, kBatch> buf{};
  std::array<std::uint8_t, kBatch> verdicts{};
  std::size_t n = 0;
  std::uint64_t s = 0;
  do {
    buf[n++] = fixed | s;
    if (n == kBatch) {
      if (!flush(table, buf, verdicts, ctx, visit)) return false;
      n = 0;
    }
    s = (s - free) & free;  // next subset of `free` in numeric order
  } while (s != 0);
  if (n > 0) return flush(table, std::span(buf).first(n), verdicts, ctx, visit);
  return true;
}

bool scan_level(const kernels::CoverTable& table, std::uint64_t fixed, std::uint64_t free, std::size_t count,
                ScanContext& ctx, const CoveringVisitor& visit) {
  const auto width = static_cast<std::size_t>(std::popcount(free));
  if (count > width) return true;
  if (width >= 64) {
    throw ResourceError(BudgetDimension::Alternatives, "cardinality scan over 64 free alternatives is not supported");
  }
  if (count == 0) {
    std::uint64_t only = fixed;
    std::uint8_t verdict = 0;
    return flush(table, std::span(&only, 1), std::span(&verdict, 1), ctx, visit);
  }

  const kernels::DepositTable deposit_table(free);
  const std::uint64_t limit = std::uint64_t{1} << width;
  std::array<std::uint64_t, kBatch> patterns{};
  std::array<std::uint64_t, kBatch> buf{};
  std::array<std::uint8_t, kBatch> verdicts{};

  auto emit = [&](std::size_t n) {
    auto out = std::span(buf).first(n);
    kernels::deposit(deposit_table, free, std::span(patterns).first(n), out);
    for (auto& m : out) m |= fixed;
    return flush(table, out, verdicts, ctx, visit);
  };

  std::size_t n = 0;
  std::uint64_t x = (std::uint64_t{1} << count) - 1;
  while (x < limit) {
    patterns[n++] = x;
    if (n == kBatch) {
      if (!emit(n)) return false;
      n = 0;
    }
    // Gosper: next pattern with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
  }
  if (n > 0) return emit(n);
  return true;
}

}  // namespace covset
