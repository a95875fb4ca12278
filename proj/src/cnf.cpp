#include "covset/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "covset/error.hpp"

namespace covset {

void validate(const Cnf& cnf, bool allow_empty) {
  if (cnf.variable_count < 0) throw Error(ErrorKind::Validation, "negative variable count");
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    const auto& clause = cnf.clauses[c];
    const std::string where = "clause " + std::to_string(c + 1);
    if (clause.empty() && !allow_empty) throw Error(ErrorKind::Validation, where + " is empty");
    std::unordered_set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > cnf.variable_count) {
        throw Error(ErrorKind::Validation,
                    where + ": literal " + std::to_string(lit) + " out of range 1.." + std::to_string(cnf.variable_count));
      }
      if (seen.count(-lit) != 0) {
        throw Error(ErrorKind::Validation, where + " is tautological (variable " + std::to_string(std::abs(lit)) + ")");
      }
      if (!seen.insert(lit).second) {
        throw Error(ErrorKind::Validation, where + " repeats literal " + std::to_string(lit));
      }
    }
  }
}

Cnf dedupe_literals(Cnf cnf) {
  for (auto& clause : cnf.clauses) {
    Clause out;
    for (int lit : clause) {
      if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
    }
    clause = std::move(out);
  }
  return cnf;
}

namespace {

long parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw SyntaxError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Cnf parse_dimacs(std::string_view text, bool allow_empty) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  Cnf cnf;
  Clause current;
  bool open_clause = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (have_header) throw SyntaxError(line_no, "duplicate problem line");
      std::string fmt, v, c, extra;
      if (!(ls >> fmt >> v >> c) || fmt != "cnf") throw SyntaxError(line_no, "expected 'p cnf <vars> <clauses>'");
      if (ls >> extra) throw SyntaxError(line_no, "trailing text after problem line");
      declared_vars = parse_int(v, line_no);
      declared_clauses = parse_int(c, line_no);
      if (declared_vars < 0 || declared_clauses < 0) throw SyntaxError(line_no, "negative count in problem line");
      if (declared_vars > std::numeric_limits<int>::max() / 2) throw SyntaxError(line_no, "variable count too large");
      cnf.variable_count = static_cast<int>(declared_vars);
      have_header = true;
      continue;
    }
    if (!have_header) throw SyntaxError(line_no, "clause before problem line");
    do {
      const long lit = parse_int(tok, line_no);
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      if (lit > declared_vars || lit < -declared_vars) {
        throw Error(ErrorKind::Validation,
                    "line " + std::to_string(line_no) + ": literal " + std::to_string(lit) + " out of range 1.." +
                        std::to_string(declared_vars));
      }
      current.push_back(static_cast<int>(lit));
      open_clause = true;
    } while (ls >> tok);
  }
  if (!have_header) throw SyntaxError(line_no == 0 ? 1 : line_no, "missing problem line");
  if (open_clause) throw SyntaxError(line_no, "last clause is not terminated by 0");
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
    throw Error(ErrorKind::Validation, "problem line declares " + std::to_string(declared_clauses) +
                                           " clauses but " + std::to_string(cnf.clauses.size()) + " were given");
  }
  cnf = dedupe_literals(std::move(cnf));
  validate(cnf, allow_empty);
  return cnf;
}

std::string serialize_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf read_dimacs_file(const std::string& path, bool allow_empty) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str(), allow_empty);
}

FormulaProperties check_formula_properties(const Cnf& cnf) {
  validate(cnf, true);
  if (cnf.variable_count > kMaxScanVariables) {
    throw Error(ErrorKind::InvalidArgument, "exhaustive scan limited to " + std::to_string(kMaxScanVariables) +
                                                " variables, formula has " + std::to_string(cnf.variable_count));
  }
  // Clause c is falsified by assignment a iff a matches its "falsifying"
  // pattern on every mentioned variable.
  struct Pattern {
    std::uint32_t care = 0;
    std::uint32_t value = 0;
  };
  std::vector<Pattern> patterns;
  for (const auto& clause : cnf.clauses) {
    Pattern p;
    for (int lit : clause) {
      const std::uint32_t bit = std::uint32_t{1} << (std::abs(lit) - 1);
      p.care |= bit;
      if (lit < 0) p.value |= bit;
    }
    patterns.push_back(p);
  }

  FormulaProperties props;
  props.first_var_free = std::any_of(cnf.clauses.begin(), cnf.clauses.end(), [](const Clause& c) {
    return std::none_of(c.begin(), c.end(), [](int lit) { return std::abs(lit) == 1; });
  });
  const std::size_t m = cnf.clauses.size();
  std::size_t fewest_bad = std::numeric_limits<std::size_t>::max();
  std::size_t fewest_sat = m;
  const std::uint64_t total = std::uint64_t{1} << cnf.variable_count;
  for (std::uint64_t a = 0; a < total; ++a) {
    std::size_t falsified = 0;
    for (const auto& p : patterns) {
      if ((static_cast<std::uint32_t>(a) & p.care) == p.value) ++falsified;
    }
    if (falsified == 0) {
      ++props.model_count;
    } else {
      fewest_bad = std::min(fewest_bad, falsified);
    }
    fewest_sat = std::min(fewest_sat, m - falsified);
  }
  props.satisfiable = props.model_count > 0;
  props.fewest_falsified_by_non_model = fewest_bad == std::numeric_limits<std::size_t>::max() ? 0 : fewest_bad;
  props.fewest_satisfied = fewest_sat;
  props.min_two_models = !props.satisfiable || props.model_count >= 2;
  props.min_two_unsat = props.satisfiable || props.fewest_falsified_by_non_model >= 2;
  return props;
}

Cnf normalize_formula(const Cnf& cnf, const NormalizeRequest& request) {
  validate(cnf, true);
  const bool can_scan = cnf.variable_count <= kMaxScanVariables;
  Cnf out = cnf;

  if (request.first_var_free) {
    const bool holds = std::any_of(out.clauses.begin(), out.clauses.end(), [](const Clause& c) {
      return std::none_of(c.begin(), c.end(), [](int lit) { return std::abs(lit) == 1; });
    });
    if (!holds) {
      for (auto& clause : out.clauses) {
        for (int& lit : clause) lit += lit > 0 ? 1 : -1;
      }
      ++out.variable_count;
    }
  }
  if (request.min_two_models) {
    const bool holds = out.variable_count <= kMaxScanVariables && check_formula_properties(out).min_two_models;
    if (!holds) ++out.variable_count;
  }
  if (request.min_two_unsat) {
    const bool holds = can_scan && out.variable_count <= kMaxScanVariables && check_formula_properties(out).min_two_unsat;
    if (!holds) {
      const auto original = out.clauses;
      out.clauses.insert(out.clauses.end(), original.begin(), original.end());
    }
  }
  return out;
}

}  // namespace covset
