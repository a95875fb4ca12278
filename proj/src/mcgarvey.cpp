#include "covset/mcgarvey.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covset/error.hpp"

namespace covset {

PreferenceProfile mcgarvey_profile(const DominanceGraph& g) {
  PreferenceProfile p;
  const auto& names = g.names();
  if (g.edge_count() == 0) {
    p.voters.push_back(names);
    p.voters.emplace_back(names.rbegin(), names.rend());
    return p;
  }
  for (const auto& [x, y] : g.edges()) {
    std::vector<std::string> rest;
    for (AltIndex z = 0; z < g.size(); ++z) {
      if (z != x && z != y) rest.push_back(names[z]);
    }
    std::vector<std::string> first{names[x], names[y]};
    first.insert(first.end(), rest.begin(), rest.end());
    std::vector<std::string> second(rest.rbegin(), rest.rend());
    second.push_back(names[x]);
    second.push_back(names[y]);
    p.voters.push_back(std::move(first));
    p.voters.push_back(std::move(second));
  }
  return p;
}

DominanceGraph majority_graph(const PreferenceProfile& profile) {
  if (profile.voters.empty()) throw Error(ErrorKind::Validation, "preference profile has no voters");
  const auto& reference = profile.voters.front();
  const std::set<std::string> universe(reference.begin(), reference.end());
  if (universe.size() != reference.size()) throw Error(ErrorKind::Validation, "voter 1 ranks an alternative twice");

  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < reference.size(); ++i) slot[reference[i]] = i;
  const std::size_t n = reference.size();
  // wins[a][b]: voters ranking a above b.
  std::vector<std::vector<long>> wins(n, std::vector<long>(n, 0));
  std::vector<std::size_t> pos(n);
  for (std::size_t v = 0; v < profile.voters.size(); ++v) {
    const auto& order = profile.voters[v];
    const std::set<std::string> seen(order.begin(), order.end());
    if (order.size() != n || seen != universe) {
      throw Error(ErrorKind::Validation, "voter " + std::to_string(v + 1) + " is not a permutation of voter 1's ranking");
    }
    for (std::size_t r = 0; r < n; ++r) pos[slot.at(order[r])] = r;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (pos[a] < pos[b]) ++wins[a][b];
      }
    }
  }
  std::vector<NamePair> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (wins[a][b] > wins[b][a]) edges.push_back({reference[a], reference[b]});
    }
  }
  return DominanceGraph::build(reference, edges);
}

}  // namespace covset
