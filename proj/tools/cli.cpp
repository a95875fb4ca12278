#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "covset/covering.hpp"
#include "covset/dg_format.hpp"
#include "covset/error.hpp"
#include "covset/harness.hpp"
#include "covset/json_io.hpp"
#include "covset/kernels.hpp"
#include "covset/mcgarvey.hpp"
#include "covset/reductions.hpp"
#include "covset/solver.hpp"

namespace covset::cli {
namespace {

struct BudgetFlags {
  std::optional<std::uint64_t> subsets;
  std::optional<double> seconds;
  std::optional<std::size_t> free;

  void attach(CLI::App* app) {
    app->add_option("--max-subsets", subsets, "Subset probe budget");
    app->add_option("--max-seconds", seconds, "Wall-time budget in seconds");
    app->add_option("--max-free", free, "Largest free-alternative count for full enumeration");
  }

  SolverBudget resolve() const {
    SolverBudget b = SolverBudget::from_environment();
    if (subsets) b.max_subsets = *subsets;
    if (seconds) b.max_time = std::chrono::milliseconds(static_cast<long long>(*seconds * 1000.0));
    if (free) b.max_free_alternatives = *free;
    b.validate();
    return b;
  }
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

ProblemKind make_problem(const DominanceGraph& g, const std::string& name, std::optional<std::size_t> k,
                         const std::string& alt, const std::string& set) {
  const auto need_alt = [&]() -> AltIndex {
    if (alt.empty()) throw Error(ErrorKind::InvalidArgument, "problem '" + name + "' needs --alt");
    return g.index(alt);
  };
  if (name == "size") {
    if (!k) throw Error(ErrorKind::InvalidArgument, "problem 'size' needs --k");
    return problem::Size{*k};
  }
  if (name == "member") return problem::Member{need_alt()};
  if (name == "member-all") return problem::MemberAll{need_alt()};
  if (name == "unique") return problem::Unique{};
  if (name == "test") return problem::Test{parse_set(g, set)};
  if (name == "find") return problem::Find{};
  if (name == "exists") return problem::Exists{};
  throw Error(ErrorKind::InvalidArgument, "unknown problem '" + name + "'");
}

std::vector<Cnf> read_formulas(const std::vector<std::string>& paths, bool allow_empty) {
  std::vector<Cnf> out;
  for (const auto& p : paths) out.push_back(read_dimacs_file(p, allow_empty));
  return out;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Syntax:
    case ErrorKind::Validation: return kExitValidation;
    case ErrorKind::InvalidArgument: return kExitUsage;
    case ErrorKind::Resource: return kExitResource;
    case ErrorKind::Internal: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimal and minimum-size covering sets in dominance graphs"};
  app.require_subcommand(1, 1);
  std::string kernel;
  app.add_option("--kernel", kernel, "Force the covering kernel (scalar or avx2)");

  // check
  auto* check = app.add_subcommand("check", "Check stability and minimality of a set");
  std::string graph_path, set_text, direction = "up";
  bool want_minimal = false, want_minimum = false, json_out = false;
  BudgetFlags check_budget;
  check->add_option("--graph", graph_path, "Graph file (.dg)")->required();
  check->add_option("--set", set_text, "Comma-separated alternatives")->required();
  check->add_option("--direction", direction, "up or down");
  check->add_flag("--minimal", want_minimal, "Also require inclusion-minimality");
  check->add_flag("--minimum", want_minimum, "Also require minimum size");
  check->add_flag("--json", json_out, "JSON output");
  check_budget.attach(check);

  // solve
  auto* solve = app.add_subcommand("solve", "Decide or search one covering-set problem");
  std::string notion = "minimal", problem_text, alt;
  std::optional<std::size_t> k;
  bool plain = false;
  BudgetFlags solve_budget;
  solve->add_option("--graph", graph_path, "Graph file (.dg)")->required();
  solve->add_option("--direction", direction, "up or down");
  solve->add_option("--notion", notion, "minimal or minimum");
  solve->add_option("--problem", problem_text, "size, member, member-all, unique, test, find, exists")->required();
  solve->add_option("--k", k, "Size bound for 'size'");
  solve->add_option("--alt", alt, "Alternative for 'member' and 'member-all'");
  solve->add_option("--set", set_text, "Set for 'test'");
  solve->add_flag("--plain", plain, "Print only the answer");
  solve_budget.attach(solve);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build a gadget graph from CNF formulas");
  std::string construction, out_path, labels_path;
  std::vector<std::string> cnf_paths;
  bool allow_empty = false;
  std::size_t max_alts = kMaxAlternatives;
  reduce->add_option("--construction", construction, "thm3, cons1, cons3, thm9, cons5, cons6")->required();
  reduce->add_option("--cnf", cnf_paths, "DIMACS file (repeat for chained constructions)")->required();
  reduce->add_option("--out", out_path, "Output .dg (default stdout)");
  reduce->add_option("--labels", labels_path, "Output label map JSON");
  reduce->add_flag("--allow-empty", allow_empty, "Accept empty clauses (downward constructions)");
  reduce->add_option("--max-alternatives", max_alts, "Alternative cap");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a claim on given or random instances");
  std::string claim_text;
  bool random = false;
  RandomSuiteOptions suite;
  BudgetFlags verify_budget;
  verify->add_option("--claim", claim_text, "Claim id (CLAIM1..CLAIM11, SIZE_2N1, ..., PARITY_DOWN)")->required();
  verify->add_option("--cnf", cnf_paths, "DIMACS instance file(s)");
  verify->add_flag("--random", random, "Use seeded random instances");
  verify->add_option("--instances", suite.instances, "Random instance count");
  verify->add_option("--vars", suite.vars, "Variables per random formula");
  verify->add_option("--max-clauses", suite.max_clauses, "Largest clause count");
  verify->add_option("--width", suite.width, "Literals per clause");
  verify->add_option("--seed", suite.seed, "Random seed");
  verify->add_flag("--normalize", suite.normalize, "Normalize rejected draws");
  verify_budget.attach(verify);

  // realize
  auto* realize = app.add_subcommand("realize", "McGarvey profile of a graph, or majority graph of a profile");
  std::string profile_path;
  realize->add_option("--graph", graph_path, "Graph file (.dg)");
  realize->add_option("--profile", profile_path, "Profile JSON to turn into its majority graph");
  realize->add_option("--out", out_path, "Output file (default stdout)");

  // random-cnf
  auto* rnd = app.add_subcommand("random-cnf", "Seeded random CNF in DIMACS");
  int vars = 3, clauses = 4, width = 2;
  std::uint64_t seed = 1;
  rnd->add_option("--vars", vars, "Variables");
  rnd->add_option("--clauses", clauses, "Clauses");
  rnd->add_option("--width", width, "Literals per clause");
  rnd->add_option("--seed", seed, "Seed");
  rnd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (!kernel.empty()) {
      if (kernel == "scalar") {
        kernels::force_isa(kernels::Isa::Scalar);
      } else if (kernel == "avx2") {
        kernels::force_isa(kernels::Isa::Avx2);
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown kernel '" + kernel + "'");
      }
    }

    if (check->parsed()) {
      const auto g = read_graph_file(graph_path);
      const auto dir = parse_direction(direction);
      const auto set = parse_set(g, set_text);
      const bool covering = is_covering_set(g, set, dir);
      std::optional<bool> minimal, minimum;
      if (want_minimal) minimal = covering && is_minimal_covering_set(g, set, dir, check_budget.resolve());
      if (want_minimum) {
        minimum = covering && *decide(g, dir, Notion::MinimumSize, problem::Test{set}, check_budget.resolve()).verdict;
      }
      bool ok = covering && minimal.value_or(true) && minimum.value_or(true);
      if (json_out) {
        ordered_json j;
        j["set"] = g.names_of(set);
        j["direction"] = to_string(dir);
        j["covering"] = covering;
        if (minimal) j["minimal"] = *minimal;
        if (minimum) j["minimum"] = *minimum;
        j["answer"] = ok;
        out << j.dump(2) << '\n';
      } else {
        out << (ok ? "true" : "false") << '\n';
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      const auto g = read_graph_file(graph_path);
      const auto dir = parse_direction(direction);
      const auto n = parse_notion(notion);
      const auto kind = make_problem(g, problem_text, k, alt, set_text);
      const auto ans = decide(g, dir, n, kind, solve_budget.resolve());
      const auto j = answer_to_json(g, dir, n, kind, ans);
      if (plain) {
        out << (j["answer"].is_array() ? format_set(g, *ans.witness) : j["answer"].dump()) << '\n';
      } else {
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }

    if (reduce->parsed()) {
      ReductionOptions opts;
      opts.allow_empty_clauses = allow_empty;
      opts.limits.max_alternatives = max_alts;
      const auto r = build_construction(parse_construction(construction), read_formulas(cnf_paths, allow_empty), opts);
      emit(out, out_path, serialize_graph(r.graph));
      if (!labels_path.empty()) emit(out, labels_path, labels_to_json(r.labels).dump(2) + "\n");
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto id = parse_claim_id(claim_text);
      const auto budget = verify_budget.resolve();
      std::vector<ClaimReport> reports;
      if (random) {
        if (!cnf_paths.empty()) throw Error(ErrorKind::InvalidArgument, "--random and --cnf are exclusive");
        reports = verify_random_claims(id, suite, budget);
      } else {
        if (cnf_paths.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs --cnf files or --random");
        reports.push_back(verify_claim(id, read_formulas(cnf_paths, false), budget));
      }
      ordered_json j = ordered_json::array();
      for (const auto& r : reports) j.push_back(report_to_json(r));
      out << j.dump(2) << '\n';
      return claim_exit_code(reports);
    }

    if (realize->parsed()) {
      if (graph_path.empty() == profile_path.empty()) {
        throw Error(ErrorKind::InvalidArgument, "realize needs exactly one of --graph and --profile");
      }
      if (!graph_path.empty()) {
        const auto p = mcgarvey_profile(read_graph_file(graph_path));
        emit(out, out_path, profile_to_json(p).dump(2) + "\n");
      } else {
        ordered_json j;
        try {
          j = ordered_json::parse(read_text_file(profile_path));
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorKind::Syntax, std::string("profile JSON: ") + e.what());
        }
        emit(out, out_path, serialize_graph(majority_graph(profile_from_json(j))));
      }
      return kExitOk;
    }

    if (rnd->parsed()) {
      emit(out, out_path, serialize_dimacs(random_cnf(vars, clauses, width, seed)));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace covset::cli
