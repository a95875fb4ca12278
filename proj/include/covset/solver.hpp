#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "covset/alternative_set.hpp"
#include "covset/budget.hpp"
#include "covset/covering.hpp"
#include "covset/dominance_graph.hpp"

namespace covset {

enum class Notion { InclusionMinimal, MinimumSize };

const char* to_string(Notion notion) noexcept;
/// Accepts "minimal" or "minimum"; throws InvalidArgument otherwise.
Notion parse_notion(std::string_view text);

namespace problem {
struct Size { std::size_t k; };
struct Member { AltIndex alt; };
struct MemberAll { AltIndex alt; };
struct Unique {};
struct Test { AlternativeSet set; };
struct Find {};
struct Exists {};
}  // namespace problem

using ProblemKind = std::variant<problem::Size, problem::Member, problem::MemberAll, problem::Unique,
                                 problem::Test, problem::Find, problem::Exists>;

const char* problem_name(const ProblemKind& kind) noexcept;

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  double seconds = 0.0;
  /// MEMBER_ALL answered false only because no set of the notion exists.
  bool vacuous = false;
  const char* kernel = "";
};

struct SolveAnswer {
  /// Empty only for FIND when no set of the notion exists.
  std::optional<bool> verdict;
  std::optional<AlternativeSet> witness;
  /// The whole family of the notion, when the procedure had to compute it.
  std::optional<std::vector<AlternativeSet>> all_solutions;
  SolveStats stats;
};

/// Undominated alternatives. Every covering set, in either direction, contains
/// all of them: an undominated x outside B is never covered in B ∪ {x}.
AlternativeSet mandatory_alternatives(const DominanceGraph& g);

/// All covering sets, each a superset of mandatory_alternatives(g), in
/// canonical order (ascending size, then lexicographic).
std::vector<AlternativeSet> enumerate_covering_sets(const DominanceGraph& g, Direction dir,
                                                    const SolverBudget& budget = {});

/// Inclusion-minimal covering sets, canonical order.
std::vector<AlternativeSet> minimal_covering_sets(const DominanceGraph& g, Direction dir,
                                                  const SolverBudget& budget = {});

/// Covering sets of minimum cardinality, canonical order. Scans cardinality
/// levels upwards and stops at the first non-empty level.
std::vector<AlternativeSet> minimum_size_covering_sets(const DominanceGraph& g, Direction dir,
                                                       const SolverBudget& budget = {});

/// Exact answer to one of the decision/search problems. Throws
/// InvalidArgument for bad parameters (k = 0, foreign alternative or set) and
/// ResourceError when the budget runs out.
SolveAnswer decide(const DominanceGraph& g, Direction dir, Notion notion, const ProblemKind& kind,
                   const SolverBudget& budget = {});

}  // namespace covset
