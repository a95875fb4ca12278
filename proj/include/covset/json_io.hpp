#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "covset/harness.hpp"
#include "covset/mcgarvey.hpp"
#include "covset/solver.hpp"

namespace covset {

using ordered_json = nlohmann::ordered_json;

/// Members in graph order, comma-separated ("a,b,d").
std::string format_set(const DominanceGraph& g, const AlternativeSet& set);
/// Inverse of format_set; empty text is the empty set.
AlternativeSet parse_set(const DominanceGraph& g, const std::string& text);

ordered_json labels_to_json(const std::map<std::string, std::string>& labels);
std::map<std::string, std::string> labels_from_json(const ordered_json& j);

ordered_json profile_to_json(const PreferenceProfile& profile);
PreferenceProfile profile_from_json(const ordered_json& j);

/// {problem, direction, notion, answer, witness?, all?, stats}.
ordered_json answer_to_json(const DominanceGraph& g, Direction dir, Notion notion, const ProblemKind& kind,
                            const SolveAnswer& answer);

ordered_json report_to_json(const ClaimReport& report);

}  // namespace covset
