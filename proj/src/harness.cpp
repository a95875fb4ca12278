#include "covset/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "covset/error.hpp"
#include "covset/reductions.hpp"
#include "covset/solver.hpp"

namespace covset {

std::string to_string(const Assignment& a) {
  std::string s;
  for (bool b : a) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

bool literal_true(int lit, const Assignment& a) {
  const bool v = a.at(static_cast<std::size_t>(std::abs(lit) - 1));
  return lit > 0 ? v : !v;
}

void require_assignment(const Cnf& cnf, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(cnf.variable_count)) {
    throw Error(ErrorKind::InvalidArgument, "assignment has " + std::to_string(a.size()) + " values for " +
                                                std::to_string(cnf.variable_count) + " variables");
  }
}

}  // namespace

bool satisfies(const Cnf& cnf, const Assignment& a) {
  return satisfied_clause_count(cnf, a) == cnf.clauses.size();
}

std::size_t satisfied_clause_count(const Cnf& cnf, const Assignment& a) {
  require_assignment(cnf, a);
  std::size_t n = 0;
  for (const auto& clause : cnf.clauses) {
    if (std::any_of(clause.begin(), clause.end(), [&](int lit) { return literal_true(lit, a); })) ++n;
  }
  return n;
}

std::vector<Assignment> brute_force_sat(const Cnf& cnf) {
  validate(cnf, true);
  if (cnf.variable_count > kMaxScanVariables) {
    throw Error(ErrorKind::InvalidArgument, "brute force limited to " + std::to_string(kMaxScanVariables) +
                                                " variables, formula has " + std::to_string(cnf.variable_count));
  }
  const int n = cnf.variable_count;
  std::vector<Assignment> models;
  Assignment a(static_cast<std::size_t>(n));
  // w1 is the most significant position so counting upwards is lexicographic.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = ((code >> (n - 1 - i)) & 1U) != 0;
    if (satisfies(cnf, a)) models.push_back(a);
  }
  return models;
}

Cnf random_cnf(int vars, int clauses, int width, std::uint64_t seed) {
  if (vars <= 0 || clauses <= 0 || width <= 0) {
    throw Error(ErrorKind::InvalidArgument, "random_cnf parameters must be positive");
  }
  if (vars > kMaxScanVariables) {
    throw Error(ErrorKind::InvalidArgument, "random_cnf supports at most " + std::to_string(kMaxScanVariables) + " variables");
  }
  if (width > vars) {
    throw Error(ErrorKind::InvalidArgument, "clause width " + std::to_string(width) + " exceeds the " +
                                                std::to_string(vars) + "-variable pool; a clause would need a tautology");
  }
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps draws uniform and identical across standard libraries.
  const auto below = [&rng](std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do r = rng(); while (r >= limit);
    return r % n;
  };
  Cnf cnf;
  cnf.variable_count = vars;
  std::vector<int> pool(static_cast<std::size_t>(vars));
  for (int c = 0; c < clauses; ++c) {
    for (int i = 0; i < vars; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    Clause clause;
    for (int t = 0; t < width; ++t) {
      const auto pick = t + static_cast<std::size_t>(below(static_cast<std::uint64_t>(vars - t)));
      std::swap(pool[static_cast<std::size_t>(t)], pool[pick]);
      const int v = pool[static_cast<std::size_t>(t)];
      clause.push_back((rng() & 1U) != 0 ? v : -v);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

const char* to_string(ClaimId id) noexcept {
  switch (id) {
    case ClaimId::Claim1: return "CLAIM1";
    case ClaimId::Claim2: return "CLAIM2";
    case ClaimId::Claim3: return "CLAIM3";
    case ClaimId::Claim4: return "CLAIM4";
    case ClaimId::Claim5: return "CLAIM5";
    case ClaimId::Claim6: return "CLAIM6";
    case ClaimId::Claim7: return "CLAIM7";
    case ClaimId::Claim8: return "CLAIM8";
    case ClaimId::Claim9: return "CLAIM9";
    case ClaimId::Claim10: return "CLAIM10";
    case ClaimId::Claim11: return "CLAIM11";
    case ClaimId::Size2n1: return "SIZE_2N1";
    case ClaimId::Size2k3: return "SIZE_2K3";
    case ClaimId::Size5k2: return "SIZE_5K2";
    case ClaimId::Size3nrk: return "SIZE_3NRK";
    case ClaimId::ParityUp: return "PARITY_UP";
    case ClaimId::ParityDown: return "PARITY_DOWN";
  }
  return "?";
}

std::vector<ClaimId> all_claim_ids() {
  return {ClaimId::Claim1,  ClaimId::Claim2,  ClaimId::Claim3,  ClaimId::Claim4,   ClaimId::Claim5,  ClaimId::Claim6,
          ClaimId::Claim7,  ClaimId::Claim8,  ClaimId::Claim9,  ClaimId::Claim10,  ClaimId::Claim11, ClaimId::Size2n1,
          ClaimId::Size2k3, ClaimId::Size5k2, ClaimId::Size3nrk, ClaimId::ParityUp, ClaimId::ParityDown};
}

ClaimId parse_claim_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (auto id : all_claim_ids()) {
    if (upper == to_string(id)) return id;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown claim id '" + std::string(text) + "'");
}

const char* to_string(ClaimVerdict v) noexcept {
  switch (v) {
    case ClaimVerdict::Pass: return "pass";
    case ClaimVerdict::Fail: return "fail";
    case ClaimVerdict::SkippedBudget: return "skipped-budget";
  }
  return "?";
}

std::size_t claim_formula_count(ClaimId id) noexcept {
  switch (id) {
    case ClaimId::Claim4: return 2;
    case ClaimId::Claim5:
    case ClaimId::Claim6:
    case ClaimId::Claim11:
    case ClaimId::ParityUp:
    case ClaimId::ParityDown: return 0;
    default: return 1;
  }
}

namespace {

bool is_upward_chain(ClaimId id) {
  return id == ClaimId::Claim4 || id == ClaimId::Claim5 || id == ClaimId::Claim6 || id == ClaimId::ParityUp;
}

std::string check_admissible(ClaimId id, const std::vector<Cnf>& formulas) {
  const std::size_t want = claim_formula_count(id);
  if (want == 0 ? (formulas.size() < 2 || formulas.size() % 2 != 0) : formulas.size() != want) {
    return std::string(to_string(id)) + " needs " + (want == 0 ? "an even number (>= 2) of" : std::to_string(want)) +
           " formulas, got " + std::to_string(formulas.size());
  }
  for (std::size_t j = 0; j < formulas.size(); ++j) {
    const auto& phi = formulas[j];
    const std::string who = "formula " + std::to_string(j + 1);
    try {
      validate(phi, false);
    } catch (const Error& e) {
      return who + ": " + e.what();
    }
    if (phi.variable_count > kMaxScanVariables) return who + " has too many variables for the SAT oracle";
  }
  if (is_upward_chain(id)) {
    try {
      require_upward_chain_properties(formulas);
    } catch (const Error& e) {
      return e.what();
    }
    return {};
  }
  if (id == ClaimId::Claim11 || id == ClaimId::ParityDown) {
    try {
      require_monotone_chain(formulas);
    } catch (const Error& e) {
      return e.what();
    }
    return {};
  }
  const auto p = check_formula_properties(formulas[0]);
  if ((id == ClaimId::Claim3 || id == ClaimId::Claim10) && !p.min_two_models) {
    return "the formula has exactly one model (two are required)";
  }
  if (id == ClaimId::Size2n1 && p.model_count < (std::uint64_t{1} << formulas[0].variable_count) &&
      p.fewest_falsified_by_non_model < 2) {
    return "some assignment falsifies exactly one clause (every non-model must falsify at least two)";
  }
  if (id == ClaimId::Size3nrk && formulas[0].clauses.size() < 2) {
    return "a single clause leaves its clause alternative without a second coverer (two clauses are required)";
  }
  return {};
}

/// Shared state of one claim check.
struct Check {
  ClaimReport report;
  const SolverBudget& budget;

  Check(ClaimId id, const std::vector<Cnf>& formulas, const SolverBudget& b) : budget(b) {
    report.claim = id;
    std::string joined;
    for (const auto& f : formulas) {
      if (!joined.empty()) joined += '\n';
      joined += serialize_dimacs(f);
    }
    report.instance = std::move(joined);
  }

  void fact(const std::string& key, const std::string& value) { report.facts.emplace_back(key, value); }
  void fact(const std::string& key, std::size_t value) { fact(key, std::to_string(value)); }
  void fact_bool(const std::string& key, bool value) { fact(key, value ? std::string("true") : std::string("false")); }

  void pass(const std::string& detail) {
    report.verdict = ClaimVerdict::Pass;
    report.detail = detail;
  }
  void fail(const std::string& detail) {
    report.verdict = ClaimVerdict::Fail;
    report.detail = detail;
  }
  void fail(const std::string& detail, const DominanceGraph& g, const AlternativeSet& offending) {
    fail(detail);
    report.counterexample = g.names_of(offending);
  }
  void witness(const DominanceGraph& g, const AlternativeSet& set) { report.witness = g.names_of(set); }
  /// Pass/fail on a biconditional between the SAT side and the covering side.
  void iff(bool lhs, bool rhs, const std::string& lhs_text, const std::string& rhs_text) {
    fact_bool(lhs_text, lhs);
    fact_bool(rhs_text, rhs);
    const std::string text = lhs_text + " = " + (lhs ? "true" : "false") + ", " + rhs_text + " = " + (rhs ? "true" : "false");
    if (lhs == rhs) pass(text); else fail(text);
  }
};

bool is_sat(const Cnf& phi) { return !brute_force_sat(phi).empty(); }

std::size_t count_sat(const std::vector<Cnf>& formulas) {
  return static_cast<std::size_t>(std::count_if(formulas.begin(), formulas.end(), is_sat));
}

const AlternativeSet* first_containing(const std::vector<AlternativeSet>& family, const AlternativeSet& any_of) {
  for (const auto& m : family) {
    if (!(m & any_of).is_empty()) return &m;
  }
  return nullptr;
}

AlternativeSet role_family(const ReductionOutput& r, const char* base, std::size_t count) {
  AlternativeSet s = r.graph.empty_set();
  for (std::size_t j = 1; j <= count; ++j) s = s.with(r.at(std::string(base) + "_" + std::to_string(j)));
  return s;
}

/// Every minimal set of the whole graph contains a minimal covering set of each component.
void check_components_included(Check& chk, const ReductionOutput& r, Direction dir,
                               const std::vector<std::vector<std::string>>& components) {
  const auto& g = r.graph;
  const auto family = minimal_covering_sets(g, dir, chk.budget);
  chk.fact("minimal_sets", family.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const AlternativeSet part = g.set_of(components[i]);
    const DominanceGraph sub = g.restricted_to(part);
    std::vector<AlternativeSet> local;
    for (const auto& m : minimal_covering_sets(sub, dir, chk.budget)) local.push_back(g.set_of(sub.names_of(m)));
    chk.fact("component_" + std::to_string(i + 1) + "_minimal_sets", local.size());
    for (const auto& m : family) {
      const bool ok = std::any_of(local.begin(), local.end(), [&](const AlternativeSet& l) { return l.is_subset_of(m); });
      if (!ok) {
        chk.fail("a minimal set contains no minimal covering set of component " + std::to_string(i + 1), g, m);
        return;
      }
    }
  }
  chk.pass("every minimal set contains a minimal covering set of each of the " + std::to_string(components.size()) +
           " components");
}

void verify(ClaimId id, const std::vector<Cnf>& formulas, Check& chk) {
  const auto& budget = chk.budget;
  switch (id) {
    case ClaimId::Claim1:
    case ClaimId::Claim2:
    case ClaimId::Claim3:
    case ClaimId::Size2k3: {
      const auto& phi = formulas[0];
      const auto r = build_upward_conp_graph(phi);
      const auto& g = r.graph;
      const auto models = brute_force_sat(phi);
      const auto family = minimal_covering_sets(g, Direction::Upward, budget);
      const AlternativeSet es = role_family(r, "e", phi.clauses.size()) | role_family(r, "ep", phi.clauses.size());
      chk.fact("alternatives", g.size());
      chk.fact("models", models.size());
      chk.fact("minimal_sets", family.size());
      if (id == ClaimId::Claim1) {
        for (const auto& m : family) {
          if (!(m & es).is_empty() && m != g.all()) {
            chk.fail("a minimal set holds some e_j but is not all of A", g, m);
            return;
          }
        }
        chk.pass("every minimal set holding an e_j is all of A");
      } else if (id == ClaimId::Claim2) {
        const AlternativeSet e_only = role_family(r, "e", phi.clauses.size());
        const auto* hit = first_containing(family, e_only);
        chk.iff(!models.empty(), hit == nullptr, "satisfiable", "no_minimal_set_holds_e");
        if (hit != nullptr) chk.witness(g, *hit);
      } else if (id == ClaimId::Claim3) {
        chk.iff(models.empty(), family.size() == 1, "unsatisfiable", "unique_minimal_set");
      } else {
        const std::size_t k = static_cast<std::size_t>(phi.variable_count);
        const std::size_t expected = 2 * k + 3;
        chk.fact("expected_size", expected);
        for (const auto& alpha : models) {
          std::vector<std::string> roles{"a_1", "a_2", "a_3"};
          for (std::size_t i = 1; i <= k; ++i) {
            const bool v = alpha[i - 1];
            roles.push_back((v ? "u_" : "ub_") + std::to_string(i));
            roles.push_back((v ? "up_" : "ubp_") + std::to_string(i));
          }
          const auto b_alpha = r.set_of_roles(roles);
          const auto it = std::find(family.begin(), family.end(), b_alpha);
          if (it == family.end() || b_alpha.size() != expected) {
            chk.fail("assignment " + to_string(alpha) + " does not give a minimal set of size " + std::to_string(expected), g,
                     b_alpha);
            return;
          }
        }
        if (!models.empty()) {
          const auto smallest = minimum_size_covering_sets(g, Direction::Upward, budget);
          chk.fact("minimum_size", smallest.empty() ? 0 : smallest.front().size());
          if (smallest.empty() || smallest.front().size() != expected) {
            chk.fail("minimum covering size differs from 2k+3");
            return;
          }
          chk.witness(g, smallest.front());
        }
        chk.pass(models.empty() ? "unsatisfiable: no assignment sets to check"
                                : "every assignment set is minimal with 2k+3 members and none is smaller");
      }
      return;
    }
    case ClaimId::Size2n1: {
      const auto& phi = formulas[0];
      const auto r = build_upward_member_graph(phi);
      const auto& g = r.graph;
      const bool sat = is_sat(phi);
      const auto smallest = minimum_size_covering_sets(g, Direction::Upward, budget);
      const std::size_t target = 2 * static_cast<std::size_t>(phi.variable_count) + 1;
      const AltIndex d = r.at("d");
      const bool all_match = !smallest.empty() && std::all_of(smallest.begin(), smallest.end(), [&](const AlternativeSet& m) {
        return m.size() == target && m.contains(d);
      });
      chk.fact("alternatives", g.size());
      chk.fact("minimum_sets", smallest.size());
      chk.fact("minimum_size", smallest.empty() ? 0 : smallest.front().size());
      chk.iff(sat, all_match, "satisfiable", "every_minimum_set_has_2n+1_and_d");
      if (!smallest.empty()) {
        if (chk.report.verdict == ClaimVerdict::Fail) {
          chk.report.counterexample = g.names_of(smallest.front());
        } else {
          chk.witness(g, smallest.front());
        }
      }
      return;
    }
    case ClaimId::Claim4: {
      const auto r = build_upward_wagner_graph(formulas);
      const auto& g = r.graph;
      const bool lhs = is_sat(formulas[0]) && !is_sat(formulas[1]);
      const auto ans = decide(g, Direction::Upward, Notion::InclusionMinimal, problem::Member{r.at("d_1")}, budget);
      chk.fact("alternatives", g.size());
      chk.iff(lhs, *ans.verdict, "first_sat_and_second_unsat", "d1_in_some_minimal_set");
      if (ans.witness) chk.witness(g, *ans.witness);
      return;
    }
    case ClaimId::Claim5: {
      const auto r = build_upward_wagner_graph(formulas);
      std::vector<std::vector<std::string>> pairs;
      for (std::size_t i = 0; i + 1 < r.components.size(); i += 2) {
        auto b = r.components[i];
        b.insert(b.end(), r.components[i + 1].begin(), r.components[i + 1].end());
        pairs.push_back(std::move(b));
      }
      chk.fact("alternatives", r.graph.size());
      check_components_included(chk, r, Direction::Upward, pairs);
      return;
    }
    case ClaimId::Claim6:
    case ClaimId::ParityUp: {
      const auto r = build_upward_wagner_graph(formulas);
      const auto& g = r.graph;
      const std::size_t sat = count_sat(formulas);
      const auto ans = decide(g, Direction::Upward, Notion::InclusionMinimal, problem::Member{r.at("d_1")}, budget);
      chk.fact("alternatives", g.size());
      chk.fact("satisfiable_formulas", sat);
      chk.iff(sat % 2 == 1, *ans.verdict, "odd_satisfiable", "d1_in_some_minimal_set");
      if (ans.witness) chk.witness(g, *ans.witness);
      return;
    }
    case ClaimId::Claim7:
    case ClaimId::Claim8:
    case ClaimId::Claim9:
    case ClaimId::Claim10:
    case ClaimId::Size5k2: {
      const auto& phi = formulas[0];
      const auto r = build_downward_conp_graph(phi);
      const auto& g = r.graph;
      chk.fact("alternatives", g.size());
      if (id == ClaimId::Claim7) {
        const bool ok = is_covering_set(g, g.all(), Direction::Downward);
        chk.fact_bool("whole_set_is_covering", ok);
        if (ok) chk.pass("A is a downward covering set for itself"); else chk.fail("A is not a downward covering set");
        return;
      }
      const auto models = brute_force_sat(phi);
      const auto family = minimal_covering_sets(g, Direction::Downward, budget);
      const AltIndex d = r.at("d");
      chk.fact("models", models.size());
      chk.fact("minimal_sets", family.size());
      if (id == ClaimId::Claim8) {
        for (const auto& m : family) {
          if (m.contains(d) && m != g.all()) {
            chk.fail("a minimal set holds d but is not all of A", g, m);
            return;
          }
        }
        chk.pass("every minimal set holding d is all of A");
      } else if (id == ClaimId::Claim9) {
        const auto it = std::find_if(family.begin(), family.end(), [d](const AlternativeSet& m) { return m.contains(d); });
        chk.iff(!models.empty(), it == family.end(), "satisfiable", "no_minimal_set_holds_d");
        if (it != family.end()) chk.witness(g, *it);
      } else if (id == ClaimId::Claim10) {
        chk.iff(models.empty(), family.size() == 1, "unsatisfiable", "unique_minimal_set");
      } else {
        const auto smallest = minimum_size_covering_sets(g, Direction::Downward, budget);
        chk.fact("minimum_sets", smallest.size());
        if (smallest != family) {
          chk.fail("minimal and minimum-size families differ");
          return;
        }
        if (!models.empty()) {
          const std::size_t expected = 5 * static_cast<std::size_t>(phi.variable_count) + 2;
          chk.fact("expected_size", expected);
          for (const auto& m : family) {
            if (m.size() != expected) {
              chk.fail("a minimal set does not have 5k+2 members", g, m);
              return;
            }
          }
        }
        if (!family.empty()) chk.witness(g, family.front());
        chk.pass(models.empty() ? "unsatisfiable: the unique minimal set is also the minimum one"
                                : "minimal sets have 5k+2 members and coincide with the minimum-size ones");
      }
      return;
    }
    case ClaimId::Size3nrk: {
      const auto& phi = formulas[0];
      const auto r = build_downward_member_graph(phi);
      const auto& g = r.graph;
      const auto smallest = minimum_size_covering_sets(g, Direction::Downward, budget);
      const std::size_t expected = expected_min_downward_member_size(phi);
      const std::size_t got = smallest.empty() ? 0 : smallest.front().size();
      chk.fact("alternatives", g.size());
      chk.fact("expected_size", expected);
      chk.fact("minimum_size", got);
      if (got == expected) {
        chk.pass("minimum size equals 3n + r + k_min");
        chk.witness(g, smallest.front());
      } else {
        chk.fail("minimum size " + std::to_string(got) + " differs from 3n + r + k_min = " + std::to_string(expected));
        if (!smallest.empty()) chk.report.counterexample = g.names_of(smallest.front());
      }
      return;
    }
    case ClaimId::Claim11: {
      const auto r = build_downward_wagner_graph(formulas);
      chk.fact("alternatives", r.graph.size());
      check_components_included(chk, r, Direction::Downward, r.components);
      return;
    }
    case ClaimId::ParityDown: {
      const auto r = build_downward_wagner_graph(formulas);
      const auto& g = r.graph;
      const std::size_t sat = count_sat(formulas);
      const auto ans = decide(g, Direction::Downward, Notion::InclusionMinimal, problem::Member{r.at("d_star")}, budget);
      chk.fact("alternatives", g.size());
      chk.fact("satisfiable_formulas", sat);
      chk.iff(sat % 2 == 1, *ans.verdict, "odd_satisfiable", "dstar_in_some_minimal_set");
      if (ans.witness) chk.witness(g, *ans.witness);
      return;
    }
  }
  throw Error(ErrorKind::Internal, "unhandled claim");
}

}  // namespace

bool claim_admissible(ClaimId id, const std::vector<Cnf>& formulas, std::string* reason) {
  const auto why = check_admissible(id, formulas);
  if (reason != nullptr) *reason = why;
  return why.empty();
}

ClaimReport verify_claim(ClaimId id, const std::vector<Cnf>& formulas, const SolverBudget& budget) {
  budget.validate();
  const auto why = check_admissible(id, formulas);
  if (!why.empty()) throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + ": " + why);
  const auto start = std::chrono::steady_clock::now();
  Check chk(id, formulas, budget);
  try {
    verify(id, formulas, chk);
  } catch (const ResourceError& e) {
    chk.report.verdict = ClaimVerdict::SkippedBudget;
    chk.report.detail = std::string("budget exhausted (") + to_string(e.dimension()) + "): " + e.what();
    chk.report.witness.reset();
    chk.report.counterexample.reset();
  }
  chk.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return chk.report;
}

std::vector<ClaimReport> verify_random_claims(ClaimId id, const RandomSuiteOptions& options, const SolverBudget& budget) {
  if (options.instances < 0 || options.max_clauses <= 0 || options.max_attempts <= 0) {
    throw Error(ErrorKind::InvalidArgument, "random suite needs instances >= 0, max_clauses > 0 and max_attempts > 0");
  }
  const std::size_t want = claim_formula_count(id) == 0 ? 2 : claim_formula_count(id);
  std::mt19937_64 seeds(options.seed);
  std::vector<ClaimReport> reports;
  for (int t = 0; t < options.instances; ++t) {
    const int clauses = 1 + t % options.max_clauses;
    std::vector<Cnf> chosen;
    for (int attempt = 0; attempt < options.max_attempts && chosen.empty(); ++attempt) {
      std::vector<Cnf> draw;
      for (std::size_t f = 0; f < want; ++f) draw.push_back(random_cnf(options.vars, clauses, options.width, seeds()));
      if (want == 2 && is_sat(draw[1]) && !is_sat(draw[0])) std::swap(draw[0], draw[1]);
      if (claim_admissible(id, draw)) {
        chosen = std::move(draw);
      } else if (options.normalize) {
        NormalizeRequest req;
        req.min_two_models = id == ClaimId::Claim3 || id == ClaimId::Claim10 || is_upward_chain(id);
        req.min_two_unsat = id == ClaimId::Size2n1 || is_upward_chain(id);
        req.first_var_free = is_upward_chain(id);
        for (auto& f : draw) f = normalize_formula(f, req);
        if (id == ClaimId::Size2n1 || id == ClaimId::Size3nrk) {
          // Repeating every clause doubles each falsified count and the clause count.
          for (auto& f : draw) {
            const auto once = f.clauses;
            f.clauses.insert(f.clauses.end(), once.begin(), once.end());
          }
        }
        if (claim_admissible(id, draw)) chosen = std::move(draw);
      }
    }
    if (chosen.empty()) {
      throw Error(ErrorKind::InvalidArgument, std::string("no admissible instance for ") + to_string(id) + " after " +
                                                  std::to_string(options.max_attempts) + " attempts");
    }
    reports.push_back(verify_claim(id, chosen, budget));
  }
  return reports;
}

int claim_exit_code(const std::vector<ClaimReport>& reports) noexcept {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.verdict == ClaimVerdict::Fail) return 1;
    if (r.verdict == ClaimVerdict::SkippedBudget) skipped = true;
  }
  return skipped ? 2 : 0;
}

std::size_t expected_min_downward_member_size(const Cnf& phi) {
  validate(phi, true);
  const std::size_t n = static_cast<std::size_t>(phi.variable_count);
  const std::size_t r = phi.clauses.size();
  if (phi.variable_count > kMaxScanVariables) {
    throw Error(ErrorKind::InvalidArgument, "assignment scan limited to " + std::to_string(kMaxScanVariables) + " variables");
  }
  std::size_t k_min = r + 1;
  Assignment a(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (std::size_t i = 0; i < n; ++i) a[i] = ((code >> i) & 1U) != 0;
    const std::size_t sat = satisfied_clause_count(phi, a);
    k_min = std::min(k_min, sat == r ? r + 1 : sat);
  }
  return 3 * n + r + k_min;
}

}  // namespace covset
