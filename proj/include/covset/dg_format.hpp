#pragma once

#include <string>
#include <string_view>

#include "covset/dominance_graph.hpp"

namespace covset {

// The `.dg` text format:
//
//   dg <n>
//   <name>          (n lines, one per alternative)
//   <u> <v>         (zero or more lines, meaning u ≻ v)
//
// `#` starts a comment that runs to the end of the line; blank lines are
// ignored. serialize_graph() writes the canonical form: names in graph order,
// edges sorted by source then target, no comments, LF line endings.

DominanceGraph parse_graph(std::string_view text, const GraphLimits& limits = {});
std::string serialize_graph(const DominanceGraph& g);

DominanceGraph read_graph_file(const std::string& path, const GraphLimits& limits = {});
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace covset
