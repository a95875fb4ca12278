#include "covset/json_io.hpp"

#include <sstream>

#include "covset/error.hpp"
#include "covset/kernels.hpp"

namespace covset {

std::string format_set(const DominanceGraph& g, const AlternativeSet& set) {
  std::string out;
  for (const auto& name : g.names_of(set)) {
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

AlternativeSet parse_set(const DominanceGraph& g, const std::string& text) {
  std::vector<std::string> names;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw Error(ErrorKind::InvalidArgument, "empty name in set '" + text + "'");
    }
    names.push_back(item.substr(b, e - b + 1));
  }
  return g.set_of(names);
}

ordered_json labels_to_json(const std::map<std::string, std::string>& labels) {
  ordered_json j = ordered_json::object();
  for (const auto& [role, name] : labels) j[role] = name;
  return j;
}

std::map<std::string, std::string> labels_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Validation, "label map must be a JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [role, name] : j.items()) {
    if (!name.is_string()) throw Error(ErrorKind::Validation, "label '" + role + "' must map to a string");
    out[role] = name.get<std::string>();
  }
  return out;
}

ordered_json profile_to_json(const PreferenceProfile& profile) {
  ordered_json j = ordered_json::array();
  for (const auto& voter : profile.voters) j.push_back(voter);
  return j;
}

PreferenceProfile profile_from_json(const ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Validation, "profile must be a JSON array of rankings");
  PreferenceProfile p;
  for (const auto& voter : j) {
    if (!voter.is_array()) throw Error(ErrorKind::Validation, "each ranking must be a JSON array of names");
    std::vector<std::string> order;
    for (const auto& name : voter) {
      if (!name.is_string()) throw Error(ErrorKind::Validation, "ranking entries must be strings");
      order.push_back(name.get<std::string>());
    }
    p.voters.push_back(std::move(order));
  }
  return p;
}

namespace {

ordered_json set_json(const DominanceGraph& g, const AlternativeSet& s) { return g.names_of(s); }

}  // namespace

ordered_json answer_to_json(const DominanceGraph& g, Direction dir, Notion notion, const ProblemKind& kind,
                            const SolveAnswer& answer) {
  ordered_json j;
  j["problem"] = problem_name(kind);
  j["direction"] = to_string(dir);
  j["notion"] = to_string(notion);
  if (std::holds_alternative<problem::Find>(kind)) {
    j["answer"] = answer.witness ? set_json(g, *answer.witness) : ordered_json(nullptr);
  } else {
    j["answer"] = answer.verdict.value_or(false);
  }
  if (answer.witness && !std::holds_alternative<problem::Find>(kind)) j["witness"] = set_json(g, *answer.witness);
  if (answer.all_solutions) {
    ordered_json all = ordered_json::array();
    for (const auto& s : *answer.all_solutions) all.push_back(set_json(g, s));
    j["all"] = std::move(all);
  }
  j["stats"] = {{"subsets_examined", answer.stats.subsets_examined},
                {"seconds", answer.stats.seconds},
                {"vacuous", answer.stats.vacuous},
                {"kernel", answer.stats.kernel}};
  return j;
}

ordered_json report_to_json(const ClaimReport& report) {
  ordered_json j;
  j["claim"] = to_string(report.claim);
  j["verdict"] = to_string(report.verdict);
  j["detail"] = report.detail;
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : report.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  j["witness"] = report.witness ? ordered_json(*report.witness) : ordered_json(nullptr);
  j["counterexample"] = report.counterexample ? ordered_json(*report.counterexample) : ordered_json(nullptr);
  j["seconds"] = report.seconds;
  j["instance"] = report.instance;
  return j;
}

}  // namespace covset
