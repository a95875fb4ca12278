#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covset/budget.hpp"
#include "covset/cnf.hpp"

namespace covset {

/// Truth values of w_1..w_n, in variable order.
using Assignment = std::vector<bool>;

/// "0110"-style rendering, first variable first.
std::string to_string(const Assignment& a);

/// Clause-by-clause evaluation of one assignment.
bool satisfies(const Cnf& cnf, const Assignment& a);
std::size_t satisfied_clause_count(const Cnf& cnf, const Assignment& a);

/// All models, in lexicographic order of their renderings. Throws
/// InvalidArgument above kMaxScanVariables variables.
std::vector<Assignment> brute_force_sat(const Cnf& cnf);

/// Deterministic random formula: `clauses` clauses of `width` distinct
/// variables each, random polarities, drawn from a 64-bit Mersenne Twister
/// seeded with `seed`. Throws InvalidArgument for non-positive parameters,
/// more than kMaxScanVariables variables, or width > vars.
Cnf random_cnf(int vars, int clauses, int width, std::uint64_t seed);

enum class ClaimId {
  Claim1,   // upward coNP gadget: a minimal set holding any e_j is all of A
  Claim2,   // upward coNP gadget: satisfiable <=> no minimal set holds an e_j
  Claim3,   // upward coNP gadget: unsatisfiable <=> unique minimal set
  Claim4,   // upward pair graph: d_1 in some minimal set <=> phi_1 sat and phi_2 unsat
  Claim5,   // upward chain: each component's minimal set sits inside every minimal set
  Claim6,   // same check as ParityUp
  Claim7,   // downward coNP gadget: A is a downward covering set
  Claim8,   // downward coNP gadget: a minimal set holding d is all of A
  Claim9,   // downward coNP gadget: satisfiable <=> no minimal set holds d
  Claim10,  // downward coNP gadget: unsatisfiable <=> unique minimal set
  Claim11,  // downward chain: each component's minimal set sits inside every minimal set
  Size2n1,  // upward member graph: satisfiable <=> every minimum set has 2n+1 members and holds d
  Size2k3,  // upward coNP gadget: assignment sets have 2k+3 members, none smaller
  Size5k2,  // downward coNP gadget: minimal sets have 5k+2 members and are the minimum ones
  Size3nrk, // downward member graph: minimum size is 3n + r + k_min (needs two or more clauses)
  ParityUp,   // upward chain: odd #satisfiable <=> d_1 in some minimal set
  ParityDown, // downward chain: odd #satisfiable <=> d* in some minimal set
};

const char* to_string(ClaimId id) noexcept;
/// Accepts the ids as printed by to_string ("CLAIM1", "SIZE_2N1", "PARITY_UP", ...).
ClaimId parse_claim_id(std::string_view text);
std::vector<ClaimId> all_claim_ids();

enum class ClaimVerdict { Pass, Fail, SkippedBudget };
const char* to_string(ClaimVerdict v) noexcept;

struct ClaimReport {
  ClaimId claim = ClaimId::Claim1;
  /// Formulas of the instance, DIMACS-serialized and joined by blank lines.
  std::string instance;
  ClaimVerdict verdict = ClaimVerdict::Pass;
  std::string detail;
  /// Ordered key/value evidence (counts, satisfiability, sizes).
  std::vector<std::pair<std::string, std::string>> facts;
  /// Supporting set, when the claim has one.
  std::optional<std::vector<std::string>> witness;
  /// Offending set on failure.
  std::optional<std::vector<std::string>> counterexample;
  double seconds = 0.0;
};

/// Formula count a claim's instance must have (1 or 2; 0 means "any even count >= 2").
std::size_t claim_formula_count(ClaimId id) noexcept;

/// Whether the instance satisfies the claim's provisos (nonempty clauses,
/// two models, two falsified clauses, monotone chain, ...). On false,
/// `reason` says which one failed.
bool claim_admissible(ClaimId id, const std::vector<Cnf>& formulas, std::string* reason = nullptr);

/// Decides one claim on one instance: the SAT side by brute_force_sat, the
/// covering side by the exact solver. Budget exhaustion yields SkippedBudget.
/// Throws InvalidArgument for malformed or inadmissible instances.
ClaimReport verify_claim(ClaimId id, const std::vector<Cnf>& formulas, const SolverBudget& budget = {});

struct RandomSuiteOptions {
  int instances = 50;
  int vars = 2;
  int max_clauses = 4;
  int width = 2;
  std::uint64_t seed = 1;
  /// Rejection-sampling attempts per accepted instance before giving up.
  int max_attempts = 1000;
  /// When a raw draw misses a proviso, try normalize_formula on it before drawing again.
  bool normalize = false;
};

/// Draws admissible random instances for `id` (clause counts cycle through
/// 1..max_clauses; chained claims get a monotone pair) and verifies each.
std::vector<ClaimReport> verify_random_claims(ClaimId id, const RandomSuiteOptions& options,
                                              const SolverBudget& budget = {});

/// 0 when everything passed, 1 when anything failed, 2 when nothing failed but something was skipped.
int claim_exit_code(const std::vector<ClaimReport>& reports) noexcept;

/// 3n + r + k_min for the downward member graph, by assignment scan: k_min is
/// the least number of satisfied clauses over non-models, and r + 1 for models.
std::size_t expected_min_downward_member_size(const Cnf& phi);

}  // namespace covset
