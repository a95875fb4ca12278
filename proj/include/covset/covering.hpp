#pragma once

#include <cstdint>
#include <string_view>

#include "covset/alternative_set.hpp"
#include "covset/budget.hpp"
#include "covset/dominance_graph.hpp"

namespace covset {

enum class Direction { Upward, Downward };

const char* to_string(Direction dir) noexcept;
/// Accepts "up"/"upward"/"down"/"downward" (case-sensitive); throws InvalidArgument otherwise.
Direction parse_direction(std::string_view text);

/// Does x cover y within B?
///   Upward:   x ≻ y and every z ∈ B with z ≻ x also has z ≻ y.
///   Downward: x ≻ y and every z ∈ B with y ≻ z also has x ≻ z.
/// Requires x, y ∈ B and x ≠ y.
bool covers(const DominanceGraph& g, const AlternativeSet& within, AltIndex x, AltIndex y, Direction dir);

/// { x ∈ B : no y ∈ B covers x within B }.
AlternativeSet uncovered_set(const DominanceGraph& g, const AlternativeSet& within, Direction dir);

/// Internal stability (uncovered_set(M) = M) and external stability
/// (every x ∉ M is covered in M ∪ {x}). The empty set is legal input.
bool is_covering_set(const DominanceGraph& g, const AlternativeSet& m, Direction dir);

/// A covering set none of whose proper subsets is a covering set. Proper
/// subsets are probed in descending cardinality with the undominated members
/// of M held fixed, since no subset lacking them can be a covering set.
/// Throws ResourceError when 2^(|M| - |undominated ∩ M|) exceeds
/// budget.max_subsets, or when the wall-time budget runs out.
bool is_minimal_covering_set(const DominanceGraph& g, const AlternativeSet& m, Direction dir,
                             const SolverBudget& budget = {});

}  // namespace covset
