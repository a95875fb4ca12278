#include "covset/dominance_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "covset/error.hpp"

namespace covset {

bool is_valid_alternative_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

DominanceGraph DominanceGraph::build(std::vector<std::string> alternatives, const std::vector<NamePair>& edges,
                                     const GraphLimits& limits) {
  const std::size_t cap = std::min(limits.max_alternatives, kMaxAlternatives);
  if (alternatives.size() > cap) {
    throw ResourceError(BudgetDimension::Alternatives, "graph has " + std::to_string(alternatives.size()) +
                                                           " alternatives; the limit is " + std::to_string(cap));
  }
  for (const auto& n : alternatives) {
    if (!is_valid_alternative_name(n)) throw Error(ErrorKind::Validation, "invalid alternative name '" + n + "'");
  }
  std::sort(alternatives.begin(), alternatives.end());
  if (auto dup = std::adjacent_find(alternatives.begin(), alternatives.end()); dup != alternatives.end()) {
    throw Error(ErrorKind::Validation, "duplicate alternative '" + *dup + "'");
  }

  DominanceGraph g;
  g.names_ = std::move(alternatives);
  g.in_.assign(g.names_.size(), 0);
  g.out_.assign(g.names_.size(), 0);

  std::unordered_map<std::string_view, AltIndex> index;
  for (AltIndex i = 0; i < g.names_.size(); ++i) index.emplace(g.names_[i], i);

  for (const auto& [from, to] : edges) {
    auto f = index.find(from);
    if (f == index.end()) throw Error(ErrorKind::Validation, "edge " + from + " " + to + ": unknown alternative '" + from + "'");
    auto t = index.find(to);
    if (t == index.end()) throw Error(ErrorKind::Validation, "edge " + from + " " + to + ": unknown alternative '" + to + "'");
    const AltIndex x = f->second;
    const AltIndex y = t->second;
    if (x == y) throw Error(ErrorKind::Validation, "self-loop on '" + from + "'");
    if (g.dominates(y, x)) throw Error(ErrorKind::Validation, "symmetric pair " + from + " " + to);
    if (g.dominates(x, y)) continue;
    g.out_[x] |= std::uint64_t{1} << y;
    g.in_[y] |= std::uint64_t{1} << x;
    ++g.edge_count_;
  }
  return g;
}

std::optional<AltIndex> DominanceGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<AltIndex>(it - names_.begin());
}

AltIndex DominanceGraph::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::InvalidArgument, "unknown alternative '" + std::string(name) + "'");
}

AlternativeSet DominanceGraph::set_of(const std::vector<std::string>& names) const {
  std::uint64_t bits = 0;
  for (const auto& n : names) bits |= std::uint64_t{1} << index(n);
  return AlternativeSet(size(), bits);
}

std::vector<std::string> DominanceGraph::names_of(const AlternativeSet& set) const {
  require_member_set(set);
  std::vector<std::string> out;
  set.for_each([&](AltIndex i) { out.push_back(names_[i]); });
  return out;
}

std::vector<std::pair<AltIndex, AltIndex>> DominanceGraph::edges() const {
  std::vector<std::pair<AltIndex, AltIndex>> out;
  out.reserve(edge_count_);
  for (AltIndex x = 0; x < size(); ++x) {
    AlternativeSet(size(), out_[x]).for_each([&](AltIndex y) { out.emplace_back(x, y); });
  }
  return out;
}

std::vector<NamePair> DominanceGraph::named_edges() const {
  std::vector<NamePair> out;
  for (auto [x, y] : edges()) out.emplace_back(names_[x], names_[y]);
  return out;
}

void DominanceGraph::require_member_set(const AlternativeSet& set, std::string_view what) const {
  if (set.universe() != size()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not a set over this graph (universe " +
                                                std::to_string(set.universe()) + ", graph has " +
                                                std::to_string(size()) + " alternatives)");
  }
}

void DominanceGraph::require_alternative(AltIndex alt) const {
  if (alt >= size()) {
    throw Error(ErrorKind::InvalidArgument, "alternative index " + std::to_string(alt) + " is not in the graph");
  }
}

AlternativeSet DominanceGraph::dominators(AltIndex x, const AlternativeSet& within) const {
  require_alternative(x);
  require_member_set(within);
  return AlternativeSet(size(), in_[x] & within.bits());
}

AlternativeSet DominanceGraph::dominated_by(AltIndex x, const AlternativeSet& within) const {
  require_alternative(x);
  require_member_set(within);
  return AlternativeSet(size(), out_[x] & within.bits());
}

AlternativeSet DominanceGraph::undominated() const {
  std::uint64_t bits = 0;
  for (AltIndex x = 0; x < size(); ++x) {
    if (in_[x] == 0) bits |= std::uint64_t{1} << x;
  }
  return AlternativeSet(size(), bits);
}

DominanceGraph DominanceGraph::restricted_to(const AlternativeSet& keep) const {
  require_member_set(keep);
  std::vector<std::string> names;
  std::vector<NamePair> edges;
  keep.for_each([&](AltIndex x) {
    names.push_back(names_[x]);
    AlternativeSet(size(), out_[x] & keep.bits()).for_each([&](AltIndex y) { edges.emplace_back(names_[x], names_[y]); });
  });
  return build(std::move(names), edges);
}

DominanceGraph reverse(const DominanceGraph& g) {
  std::vector<NamePair> flipped;
  for (auto [x, y] : g.edges()) flipped.emplace_back(g.name(y), g.name(x));
  return DominanceGraph::build(g.names(), flipped);
}

}  // namespace covset
