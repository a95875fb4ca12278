#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covset/alternative_set.hpp"

namespace covset {

using NamePair = std::pair<std::string, std::string>;

/// Index of an alternative within a graph's (lexicographic) alternative order.
using AltIndex = std::size_t;

struct GraphLimits {
  /// Largest graph `DominanceGraph::build` accepts. Never above kMaxAlternatives.
  std::size_t max_alternatives = kMaxAlternatives;
};

/// True iff `name` is a nonempty string over [A-Za-z0-9_].
bool is_valid_alternative_name(std::string_view name) noexcept;

/// An asymmetric, irreflexive dominance relation over named alternatives.
///
/// Alternatives are kept in lexicographic order of their names; that order
/// defines the bit positions of every AlternativeSet over the graph.
/// Instances are immutable once built.
class DominanceGraph {
 public:
  DominanceGraph() = default;

  /// Validates and builds a graph. Throws covset::Error (Validation) naming the
  /// offending alternative or edge on duplicate names, invalid names, unknown
  /// endpoints, self-loops, or symmetric pairs; ResourceError if the graph is
  /// larger than `limits.max_alternatives`.
  static DominanceGraph build(std::vector<std::string> alternatives, const std::vector<NamePair>& edges,
                              const GraphLimits& limits = {});

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(AltIndex alt) const { return names_.at(alt); }

  std::optional<AltIndex> find(std::string_view name) const;
  /// Like find(), but throws InvalidArgument for unknown names.
  AltIndex index(std::string_view name) const;

  bool dominates(AltIndex x, AltIndex y) const noexcept { return ((out_[x] >> y) & 1U) != 0; }

  /// { z : z ≻ x } and { z : x ≻ z } as raw masks over the whole graph.
  std::uint64_t in_mask(AltIndex x) const noexcept { return in_[x]; }
  std::uint64_t out_mask(AltIndex x) const noexcept { return out_[x]; }

  AlternativeSet all() const { return AlternativeSet::full(size()); }
  AlternativeSet empty_set() const { return AlternativeSet::empty(size()); }
  /// Set of the named alternatives; throws InvalidArgument for unknown names.
  AlternativeSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const AlternativeSet& set) const;

  /// Edges as (dominator, dominated) index pairs, sorted by source then target.
  std::vector<std::pair<AltIndex, AltIndex>> edges() const;
  std::vector<NamePair> named_edges() const;

  /// { z ∈ B : z ≻ x }. Throws InvalidArgument if x or B is not over this graph.
  AlternativeSet dominators(AltIndex x, const AlternativeSet& within) const;
  /// { z ∈ B : x ≻ z }.
  AlternativeSet dominated_by(AltIndex x, const AlternativeSet& within) const;

  /// Undominated alternatives: { x : no z ≻ x }.
  AlternativeSet undominated() const;

  /// Induced subgraph on `keep` (alternatives keep their names).
  DominanceGraph restricted_to(const AlternativeSet& keep) const;

  /// Throws InvalidArgument unless `set` is a set over this graph.
  void require_member_set(const AlternativeSet& set, std::string_view what = "set") const;
  void require_alternative(AltIndex alt) const;

  friend bool operator==(const DominanceGraph& a, const DominanceGraph& b) {
    return a.names_ == b.names_ && a.out_ == b.out_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> in_;
  std::vector<std::uint64_t> out_;
  std::size_t edge_count_ = 0;
};

/// Same alternatives, every edge flipped.
DominanceGraph reverse(const DominanceGraph& g);

}  // namespace covset
