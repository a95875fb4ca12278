#include "covset/covering.hpp"

#include <string>

#include "covset/error.hpp"
#include "covset/kernels.hpp"
#include "covset/subset_scan.hpp"

namespace covset {

const char* to_string(Direction dir) noexcept { return dir == Direction::Upward ? "upward" : "downward"; }

Direction parse_direction(std::string_view text) {
  if (text == "up" || text == "upward") return Direction::Upward;
  if (text == "down" || text == "downward") return Direction::Downward;
  throw Error(ErrorKind::InvalidArgument, "unknown direction '" + std::string(text) + "' (expected up or down)");
}

namespace {

// Definitional test, used where speed does not matter. The kernels module
// evaluates the same relation in bulk.
bool covers_unchecked(const DominanceGraph& g, std::uint64_t within, AltIndex x, AltIndex y, Direction dir) {
  if (!g.dominates(x, y)) return false;
  if (dir == Direction::Upward) {
    return (g.in_mask(x) & within & ~g.in_mask(y)) == 0;
  }
  return (g.out_mask(y) & within & ~g.out_mask(x)) == 0;
}

bool covered_in(const DominanceGraph& g, std::uint64_t within, AltIndex x, Direction dir) {
  for (std::uint64_t rest = within; rest != 0; rest &= rest - 1) {
    auto y = static_cast<AltIndex>(std::countr_zero(rest));
    if (y != x && covers_unchecked(g, within, y, x, dir)) return true;
  }
  return false;
}

}  // namespace

bool covers(const DominanceGraph& g, const AlternativeSet& within, AltIndex x, AltIndex y, Direction dir) {
  g.require_member_set(within);
  g.require_alternative(x);
  g.require_alternative(y);
  if (!within.contains(x) || !within.contains(y)) {
    throw Error(ErrorKind::InvalidArgument, "covers: '" + g.name(x) + "' and '" + g.name(y) + "' must both lie in B");
  }
  if (x == y) throw Error(ErrorKind::InvalidArgument, "covers: x and y must differ");
  return covers_unchecked(g, within.bits(), x, y, dir);
}

AlternativeSet uncovered_set(const DominanceGraph& g, const AlternativeSet& within, Direction dir) {
  g.require_member_set(within);
  std::uint64_t out = 0;
  within.for_each([&](AltIndex x) {
    if (!covered_in(g, within.bits(), x, dir)) out |= std::uint64_t{1} << x;
  });
  return AlternativeSet(g.size(), out);
}

bool is_covering_set(const DominanceGraph& g, const AlternativeSet& m, Direction dir) {
  g.require_member_set(m);
  if (uncovered_set(g, m, dir) != m) return false;
  for (AltIndex x = 0; x < g.size(); ++x) {
    if (m.contains(x)) continue;
    const AlternativeSet extended = m.with(x);
    if (!covered_in(g, extended.bits(), x, dir)) return false;
  }
  return true;
}

bool is_minimal_covering_set(const DominanceGraph& g, const AlternativeSet& m, Direction dir,
                             const SolverBudget& budget) {
  budget.validate();
  if (!is_covering_set(g, m, dir)) return false;

  const std::uint64_t fixed = m.bits() & g.undominated().bits();
  const std::uint64_t free = m.bits() & ~fixed;
  const auto free_count = static_cast<std::size_t>(std::popcount(free));
  if (free_count == 0) return true;

  ScanContext ctx(budget);
  // Every proper subset of free, i.e. 2^|free| - 1 probes.
  if (free_count >= 64 || (std::uint64_t{1} << free_count) - 1 > budget.max_subsets) {
    throw ResourceError(BudgetDimension::Subsets,
                        "minimality check needs 2^" + std::to_string(free_count) +
                            " subset probes; budget is " + std::to_string(budget.max_subsets));
  }
  const kernels::CoverTable table(g, dir);
  bool found = false;
  for (std::size_t level = free_count; level-- > 0;) {
    scan_level(table, fixed, free, level, ctx, [&](std::uint64_t) {
      found = true;
      return false;
    });
    if (found) return false;
  }
  return true;
}

}  // namespace covset
