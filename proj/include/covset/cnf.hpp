#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace covset {

/// A clause is a list of signed, 1-based variable indices.
using Clause = std::vector<int>;

struct Cnf {
  int variable_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Checks the CNF invariants: indices in [1, variable_count], no clause holding
/// both polarities of a variable, no repeated literal, and no empty clause
/// unless `allow_empty`. Throws Validation errors.
void validate(const Cnf& cnf, bool allow_empty = false);

/// Removes repeated literals within each clause (first occurrence wins).
Cnf dedupe_literals(Cnf cnf);

/// Parses DIMACS CNF (`p cnf <vars> <clauses>`, 0-terminated clauses, `c`
/// comment lines, optional trailing `%` marker). Repeated literals are
/// collapsed; tautologies, out-of-range indices, clause-count mismatches and
/// (unless allowed) empty clauses are errors.
Cnf parse_dimacs(std::string_view text, bool allow_empty = false);
std::string serialize_dimacs(const Cnf& cnf);
Cnf read_dimacs_file(const std::string& path, bool allow_empty = false);

/// Largest variable count the exhaustive scans accept.
inline constexpr int kMaxScanVariables = 24;

/// Result of one exhaustive scan over all 2^n assignments.
struct FormulaProperties {
  bool satisfiable = false;
  std::uint64_t model_count = 0;
  /// Unsatisfiable formulas leave at least two clauses falsified under every assignment.
  bool min_two_unsat = false;
  /// Satisfiable formulas have at least two models.
  bool min_two_models = false;
  /// Some clause does not mention the first variable.
  bool first_var_free = false;
  /// Fewest clauses falsified by any non-model (0 when every assignment is a model).
  std::size_t fewest_falsified_by_non_model = 0;
  /// Fewest clauses satisfied by any assignment.
  std::size_t fewest_satisfied = 0;
};

/// Throws InvalidArgument when the formula has more than kMaxScanVariables variables.
FormulaProperties check_formula_properties(const Cnf& cnf);

struct NormalizeRequest {
  bool min_two_unsat = false;
  bool min_two_models = false;
  bool first_var_free = false;
};

/// Satisfiability-preserving rewrite meeting the requested properties.
/// Requests that already hold leave the formula untouched:
///  - first_var_free: prepend a fresh variable (all indices shift by one);
///  - min_two_models: append a fresh variable used by no clause;
///  - min_two_unsat: repeat every clause once more.
Cnf normalize_formula(const Cnf& cnf, const NormalizeRequest& request);

}  // namespace covset
