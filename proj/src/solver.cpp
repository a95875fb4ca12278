#include "covset/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "covset/error.hpp"
#include "covset/kernels.hpp"
#include "covset/subset_scan.hpp"

namespace covset {

const char* to_string(Notion notion) noexcept {
  return notion == Notion::InclusionMinimal ? "minimal" : "minimum";
}

Notion parse_notion(std::string_view text) {
  if (text == "minimal") return Notion::InclusionMinimal;
  if (text == "minimum" || text == "minimum-size") return Notion::MinimumSize;
  throw Error(ErrorKind::InvalidArgument, "unknown notion '" + std::string(text) + "' (expected minimal or minimum)");
}

const char* problem_name(const ProblemKind& kind) noexcept {
  struct Name {
    const char* operator()(const problem::Size&) const { return "size"; }
    const char* operator()(const problem::Member&) const { return "member"; }
    const char* operator()(const problem::MemberAll&) const { return "member-all"; }
    const char* operator()(const problem::Unique&) const { return "unique"; }
    const char* operator()(const problem::Test&) const { return "test"; }
    const char* operator()(const problem::Find&) const { return "find"; }
    const char* operator()(const problem::Exists&) const { return "exists"; }
  };
  return std::visit(Name{}, kind);
}

AlternativeSet mandatory_alternatives(const DominanceGraph& g) { return g.undominated(); }

namespace {

struct Search {
  const DominanceGraph& g;
  kernels::CoverTable table;
  std::uint64_t fixed;
  std::uint64_t free;
  ScanContext ctx;

  Search(const DominanceGraph& graph, Direction dir, const SolverBudget& budget)
      : g(graph),
        table(graph, dir),
        fixed(graph.undominated().bits()),
        free(universe_mask(graph.size()) & ~fixed),
        ctx(budget) {}

  std::size_t free_count() const { return static_cast<std::size_t>(std::popcount(free)); }

  std::vector<AlternativeSet> wrap(std::vector<std::uint64_t> masks) const {
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    std::vector<AlternativeSet> out;
    out.reserve(masks.size());
    for (auto m : masks) out.emplace_back(g.size(), m);
    return out;
  }

  std::vector<std::uint64_t> all_covering() {
    std::vector<std::uint64_t> found;
    scan_all(table, fixed, free, ctx, [&](std::uint64_t m) {
      found.push_back(m);
      return true;
    });
    return found;
  }

  std::vector<AlternativeSet> minimal() {
    auto all = all_covering();
    std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    // Ascending size: a set is minimal iff no already-kept set lies inside it.
    std::vector<std::uint64_t> kept;
    for (auto m : all) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [m](std::uint64_t k) { return (k & ~m) == 0; });
      if (!dominated) kept.push_back(m);
    }
    return wrap(std::move(kept));
  }

  /// Covering sets of the first non-empty level among sizes |fixed| + [0, max_level].
  std::vector<AlternativeSet> first_level(std::size_t max_level, bool stop_at_first) {
    std::vector<std::uint64_t> found;
    const std::size_t top = std::min(max_level, free_count());
    for (std::size_t level = 0; level <= top; ++level) {
      scan_level(table, fixed, free, level, ctx, [&](std::uint64_t m) {
        found.push_back(m);
        return !stop_at_first;
      });
      if (!found.empty()) break;
    }
    return wrap(std::move(found));
  }

  std::vector<AlternativeSet> minimum() { return first_level(free_count(), false); }

  bool minimal_test(const AlternativeSet& m) {
    const std::uint64_t keep = m.bits() & fixed;
    const std::uint64_t rest = m.bits() & ~keep;
    const auto width = static_cast<std::size_t>(std::popcount(rest));
    if (width > 0 && (width >= 64 || (std::uint64_t{1} << width) - 1 > ctx.budget().max_subsets)) {
      throw ResourceError(BudgetDimension::Subsets, "minimality check needs 2^" + std::to_string(width) +
                                                        " subset probes; budget is " +
                                                        std::to_string(ctx.budget().max_subsets));
    }
    for (std::size_t level = width; level-- > 0;) {
      bool found = false;
      scan_level(table, keep, rest, level, ctx, [&](std::uint64_t) {
        found = true;
        return false;
      });
      if (found) return false;
    }
    return true;
  }
};

void check_problem(const DominanceGraph& g, const ProblemKind& kind) {
  if (const auto* s = std::get_if<problem::Size>(&kind); s != nullptr && s->k == 0) {
    throw Error(ErrorKind::InvalidArgument, "size bound k must be positive");
  }
  if (const auto* m = std::get_if<problem::Member>(&kind)) g.require_alternative(m->alt);
  if (const auto* m = std::get_if<problem::MemberAll>(&kind)) g.require_alternative(m->alt);
  if (const auto* t = std::get_if<problem::Test>(&kind)) g.require_member_set(t->set, "test set");
}

}  // namespace

std::vector<AlternativeSet> enumerate_covering_sets(const DominanceGraph& g, Direction dir,
                                                    const SolverBudget& budget) {
  Search s(g, dir, budget);
  return s.wrap(s.all_covering());
}

std::vector<AlternativeSet> minimal_covering_sets(const DominanceGraph& g, Direction dir,
                                                  const SolverBudget& budget) {
  Search s(g, dir, budget);
  return s.minimal();
}

std::vector<AlternativeSet> minimum_size_covering_sets(const DominanceGraph& g, Direction dir,
                                                       const SolverBudget& budget) {
  Search s(g, dir, budget);
  return s.minimum();
}

SolveAnswer decide(const DominanceGraph& g, Direction dir, Notion notion, const ProblemKind& kind,
                   const SolverBudget& budget) {
  check_problem(g, kind);
  Search s(g, dir, budget);
  SolveAnswer ans;

  auto family = [&]() { return notion == Notion::InclusionMinimal ? s.minimal() : s.minimum(); };

  if (const auto* p = std::get_if<problem::Size>(&kind)) {
    // Any covering set of size <= k contains a minimal one of size <= k, and
    // the smallest covering sets are minimum-size: both notions reduce to
    // "is the minimum cardinality at most k".
    const std::size_t mandatory = static_cast<std::size_t>(std::popcount(s.fixed));
    std::vector<AlternativeSet> first;
    if (p->k >= mandatory) first = s.first_level(p->k - mandatory, true);
    ans.verdict = !first.empty();
    if (!first.empty()) ans.witness = first.front();
  } else if (const auto* p = std::get_if<problem::Member>(&kind)) {
    auto sets = family();
    auto it = std::find_if(sets.begin(), sets.end(), [&](const AlternativeSet& m) { return m.contains(p->alt); });
    ans.verdict = it != sets.end();
    if (it != sets.end()) ans.witness = *it;
    ans.all_solutions = std::move(sets);
  } else if (const auto* p = std::get_if<problem::MemberAll>(&kind)) {
    auto sets = family();
    if (sets.empty()) {
      ans.verdict = false;
      ans.stats.vacuous = true;
    } else {
      auto it = std::find_if(sets.begin(), sets.end(), [&](const AlternativeSet& m) { return !m.contains(p->alt); });
      ans.verdict = it == sets.end();
      if (it != sets.end()) ans.witness = *it;  // a set missing the alternative
    }
    ans.all_solutions = std::move(sets);
  } else if (std::holds_alternative<problem::Unique>(kind)) {
    auto sets = family();
    ans.verdict = sets.size() == 1;
    if (sets.size() == 1) ans.witness = sets.front();
    ans.all_solutions = std::move(sets);
  } else if (const auto* p = std::get_if<problem::Test>(&kind)) {
    bool ok = is_covering_set(g, p->set, dir);
    if (ok) {
      if (notion == Notion::InclusionMinimal) {
        ok = s.minimal_test(p->set);
      } else {
        // Minimum-size iff no covering set is strictly smaller.
        const std::size_t mandatory = static_cast<std::size_t>(std::popcount(s.fixed));
        const std::size_t size = p->set.size();
        if (size > mandatory) ok = s.first_level(size - mandatory - 1, true).empty();
      }
    }
    ans.verdict = ok;
    if (ok) ans.witness = p->set;
  } else {
    // FIND and EXISTS. The first set of either notion in canonical order is the
    // first covering set of the smallest non-empty cardinality level.
    const bool is_find = std::holds_alternative<problem::Find>(kind);
    // Levels are scanned in numeric order, so FIND needs the whole level to
    // pick the lexicographically first set.
    auto first = s.first_level(s.free_count(), !is_find);
    if (!first.empty()) {
      ans.verdict = true;
      ans.witness = first.front();
    } else if (!is_find) {
      ans.verdict = false;
    }
  }

  ans.stats.subsets_examined = s.ctx.probes();
  ans.stats.seconds = s.ctx.elapsed_seconds();
  ans.stats.kernel = kernels::to_string(kernels::active_isa());
  return ans;
}

}  // namespace covset
