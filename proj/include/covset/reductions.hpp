#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "covset/cnf.hpp"
#include "covset/dominance_graph.hpp"

namespace covset {

enum class ConstructionId { Thm3, Cons1, Cons3, Thm9, Cons5, Cons6 };

const char* to_string(ConstructionId id) noexcept;
/// Accepts "thm3", "cons1", "cons3", "thm9", "cons5", "cons6".
ConstructionId parse_construction(std::string_view text);

/// A generated graph plus the role → alternative-name map tests use to
/// address gadget alternatives.
///
/// Role names spell the gadget symbol with an underscore before each index:
/// "d", "x_1", "xb_1", "xp_1", "xbp_1", "xpp_1", "xbpp_1", "y_2", "z_1",
/// "zp_1", "zpp_1", "u_1", "ub_1", "up_1", "ubp_1", "e_1", "ep_1", "a_1",
/// "b", "c", "hat_<role>" for hatted copies. In the chained constructions
/// every component role gets a trailing "_<position>" ("u_1_2", "d_1") and
/// the connectors are "r_i", "s_i", "t_i", "c_star", "d_star".
struct ReductionOutput {
  DominanceGraph graph;
  std::map<std::string, std::string> labels;
  ConstructionId construction;
  /// Chained constructions only: names of each component graph A_1, A_2, ... in position order.
  std::vector<std::vector<std::string>> components;

  /// Alternative index for a role; throws InvalidArgument for unknown roles.
  AltIndex at(std::string_view role) const;
  AlternativeSet set_of_roles(const std::vector<std::string>& roles) const;
};

struct ReductionOptions {
  /// Permit empty clauses (only the downward constructions accept them).
  bool allow_empty_clauses = false;
  GraphLimits limits{};
};

/// Alternative membership graph for upward covering: 4n + r + 1 alternatives.
ReductionOutput build_upward_member_graph(const Cnf& phi, const ReductionOptions& options = {});

/// coNP gadget for upward covering: 4k + 2l + 3 alternatives.
ReductionOutput build_upward_conp_graph(const Cnf& phi, const ReductionOptions& options = {});

/// Parity chain over 2m formulas for upward covering. Formulas must each have
/// a free first variable, two models when satisfiable and two falsified clauses
/// per assignment when unsatisfiable, and satisfiability must be monotone
/// (phi_j satisfiable implies phi_{j-1} satisfiable).
ReductionOutput build_upward_wagner_graph(const std::vector<Cnf>& formulas, const ReductionOptions& options = {});

/// Alternative membership graph for downward covering: 6n + 2r + 1 alternatives.
ReductionOutput build_downward_member_graph(const Cnf& phi, const ReductionOptions& options = {});

/// coNP gadget for downward covering: 18k + 2l + 3 alternatives.
ReductionOutput build_downward_conp_graph(const Cnf& phi, const ReductionOptions& options = {});

/// Parity chain over 2m formulas for downward covering:
/// sum |A_i| + 3m + 2 alternatives.
ReductionOutput build_downward_wagner_graph(const std::vector<Cnf>& formulas,
                                            const ReductionOptions& options = {});

/// Dispatch on construction id. Single-formula constructions require exactly one formula.
ReductionOutput build_construction(ConstructionId id, const std::vector<Cnf>& formulas,
                                   const ReductionOptions& options = {});

/// Precondition checks shared by the chained constructions (exposed for the harness).
void require_monotone_chain(const std::vector<Cnf>& formulas);
void require_upward_chain_properties(const std::vector<Cnf>& formulas);

}  // namespace covset
