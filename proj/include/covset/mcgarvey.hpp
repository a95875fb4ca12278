#pragma once

#include <string>
#include <vector>

#include "covset/dominance_graph.hpp"

namespace covset {

/// Voters' strict rankings, best first, each a permutation of the same names.
struct PreferenceProfile {
  std::vector<std::vector<std::string>> voters;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;
};

/// Profile of linear orders whose strict pairwise majority relation is g.
/// Two voters per edge x ≻ y: (x, y, rest...) and (reverse(rest)..., x, y).
/// An edgeless graph yields one ranking and its reverse.
PreferenceProfile mcgarvey_profile(const DominanceGraph& g);

/// x ≻ y iff strictly more voters rank x above y. Throws Validation when the
/// profile is empty or a voter is not a permutation of the first voter's names.
DominanceGraph majority_graph(const PreferenceProfile& profile);

}  // namespace covset
