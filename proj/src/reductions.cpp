#include "covset/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "covset/error.hpp"

namespace covset {

const char* to_string(ConstructionId id) noexcept {
  switch (id) {
    case ConstructionId::Thm3: return "thm3";
    case ConstructionId::Cons1: return "cons1";
    case ConstructionId::Cons3: return "cons3";
    case ConstructionId::Thm9: return "thm9";
    case ConstructionId::Cons5: return "cons5";
    case ConstructionId::Cons6: return "cons6";
  }
  return "?";
}

ConstructionId parse_construction(std::string_view text) {
  for (auto id : {ConstructionId::Thm3, ConstructionId::Cons1, ConstructionId::Cons3, ConstructionId::Thm9,
                  ConstructionId::Cons5, ConstructionId::Cons6}) {
    if (text == to_string(id)) return id;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown construction '" + std::string(text) + "'");
}

AltIndex ReductionOutput::at(std::string_view role) const {
  auto it = labels.find(std::string(role));
  if (it == labels.end()) throw Error(ErrorKind::InvalidArgument, "no alternative has role '" + std::string(role) + "'");
  return graph.index(it->second);
}

AlternativeSet ReductionOutput::set_of_roles(const std::vector<std::string>& roles) const {
  AlternativeSet s = graph.empty_set();
  for (const auto& r : roles) s = s.with(at(r));
  return s;
}

namespace {

/// Accumulates alternatives, roles and edges for one output graph.
struct Builder {
  std::vector<std::string> names;
  std::vector<NamePair> edges;
  std::map<std::string, std::string> labels;
  std::vector<std::vector<std::string>> components;

  void edge(const std::string& a, const std::string& b) { edges.push_back({a, b}); }
};

/// Names and roles of one component. Standalone graphs use plain names; inside
/// a chain every name gets "_<pos>" except the distinguished "d", which becomes
/// "d<pos>".
struct Component {
  Builder& out;
  int pos = 0;  // 0 when standalone

  std::string add(const std::string& role, const std::string& name) {
    const std::string full = pos == 0 ? name : name + "_" + std::to_string(pos);
    out.names.push_back(full);
    out.labels[pos == 0 ? role : role + "_" + std::to_string(pos)] = full;
    return full;
  }
  std::string add_d() {
    const std::string full = pos == 0 ? "d" : "d" + std::to_string(pos);
    out.names.push_back(full);
    out.labels[pos == 0 ? "d" : "d_" + std::to_string(pos)] = full;
    return full;
  }
};

std::string idx(const char* base, int i) { return std::string(base) + std::to_string(i); }
std::string role(const char* base, int i) { return std::string(base) + "_" + std::to_string(i); }

void require_nonempty_clauses(const Cnf& phi, bool allow_empty, const std::string& what) {
  validate(phi, true);
  if (allow_empty) return;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    if (phi.clauses[j].empty()) {
      throw Error(ErrorKind::Validation, what + ": clause " + std::to_string(j + 1) + " is empty");
    }
  }
}

std::size_t count_or_throw(std::size_t n, const GraphLimits& limits) {
  const std::size_t cap = std::min(limits.max_alternatives, kMaxAlternatives);
  if (n > cap) {
    throw ResourceError(BudgetDimension::Alternatives,
                        "construction needs " + std::to_string(n) + " alternatives; the limit is " + std::to_string(cap));
  }
  return n;
}

/// Returns the name of d.
std::string upward_member(Component c, const Cnf& phi) {
  const int n = phi.variable_count;
  std::vector<std::string> x(n + 1), xb(n + 1);
  for (int i = 1; i <= n; ++i) {
    x[i] = c.add(role("x", i), idx("x", i));
    xb[i] = c.add(role("xb", i), idx("xb", i));
    const auto xp = c.add(role("xp", i), idx("xp", i));
    const auto xbp = c.add(role("xbp", i), idx("xbp", i));
    c.out.edge(x[i], xb[i]);
    c.out.edge(xb[i], xp);
    c.out.edge(xp, xbp);
    c.out.edge(xbp, x[i]);
  }
  const auto d = c.add_d();
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const int jj = static_cast<int>(j) + 1;
    const auto y = c.add(role("y", jj), idx("y", jj));
    for (int lit : phi.clauses[j]) c.out.edge(lit > 0 ? x[lit] : xb[-lit], y);
    c.out.edge(y, d);
  }
  return d;
}

void upward_conp(Component c, const Cnf& phi) {
  const int k = phi.variable_count;
  std::vector<std::string> u(k + 1), ub(k + 1), up(k + 1), ubp(k + 1);
  for (int i = 1; i <= k; ++i) {
    u[i] = c.add(role("u", i), idx("u", i));
    ub[i] = c.add(role("ub", i), idx("ub", i));
    up[i] = c.add(role("up", i), idx("up", i));
    ubp[i] = c.add(role("ubp", i), idx("ubp", i));
    c.out.edge(u[i], ub[i]);
    c.out.edge(ub[i], up[i]);
    c.out.edge(up[i], ubp[i]);
    c.out.edge(ubp[i], u[i]);
  }
  const auto a1 = c.add("a_1", "a1");
  const auto a2 = c.add("a_2", "a2");
  const auto a3 = c.add("a_3", "a3");
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const int jj = static_cast<int>(j) + 1;
    const auto& clause = phi.clauses[j];
    const auto e = c.add(role("e", jj), idx("e", jj));
    const auto ep = c.add(role("ep", jj), idx("ep", jj));
    for (int i = 1; i <= k; ++i) {
      if (std::find(clause.begin(), clause.end(), i) != clause.end()) {
        c.out.edge(u[i], e);
        c.out.edge(u[i], ep);
        c.out.edge(e, ub[i]);
        c.out.edge(ep, ub[i]);
      } else if (std::find(clause.begin(), clause.end(), -i) != clause.end()) {
        c.out.edge(ub[i], e);
        c.out.edge(ub[i], ep);
        c.out.edge(e, u[i]);
        c.out.edge(ep, u[i]);
      } else {
        c.out.edge(e, up[i]);
        c.out.edge(ep, ubp[i]);
      }
    }
    c.out.edge(a1, e);
    c.out.edge(a1, ep);
  }
  c.out.edge(a1, a2);
  c.out.edge(a2, a3);
  c.out.edge(a3, a1);
}

struct SixCycle {
  std::string x, xb;
};

SixCycle six_cycle(Component& c, int i) {
  const auto x = c.add(role("x", i), idx("x", i));
  const auto xb = c.add(role("xb", i), idx("xb", i));
  const auto xp = c.add(role("xp", i), idx("xp", i));
  const auto xbp = c.add(role("xbp", i), idx("xbp", i));
  const auto xpp = c.add(role("xpp", i), idx("xpp", i));
  const auto xbpp = c.add(role("xbpp", i), idx("xbpp", i));
  const std::string ring[] = {x, xb, xp, xbp, xpp, xbpp};
  for (int t = 0; t < 6; ++t) c.out.edge(ring[t], ring[(t + 1) % 6]);
  c.out.edge(x, xp);
  c.out.edge(xp, xpp);
  c.out.edge(xpp, x);
  c.out.edge(xb, xbp);
  c.out.edge(xbp, xbpp);
  c.out.edge(xbpp, xb);
  return {x, xb};
}

std::string downward_member(Component c, const Cnf& phi) {
  const int n = phi.variable_count;
  std::vector<SixCycle> v(n + 1);
  for (int i = 1; i <= n; ++i) v[i] = six_cycle(c, i);
  const auto d = c.add_d();
  const int r = static_cast<int>(phi.clauses.size());
  std::vector<std::string> y(r + 1), z(r + 1);
  for (int j = 1; j <= r; ++j) {
    y[j] = c.add(role("y", j), idx("y", j));
    z[j] = c.add(role("z", j), idx("z", j));
  }
  for (int j = 1; j <= r; ++j) {
    for (int lit : phi.clauses[j - 1]) c.out.edge(y[j], lit > 0 ? v[lit].x : v[-lit].xb);
    c.out.edge(d, y[j]);
    c.out.edge(z[j], d);
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      if (i != j) c.out.edge(z[i], y[j]);
    }
  }
  return d;
}

std::string downward_conp(Component c, const Cnf& phi) {
  const int k = phi.variable_count;
  // Roles and names of A1 ∪ A2, in insertion order, for the hatted copies.
  std::vector<std::pair<std::string, std::string>> base;
  const auto add_base = [&](const std::string& r, const std::string& n) {
    const auto full = c.add(r, n);
    base.emplace_back(r, n);
    return full;
  };
  const auto d = c.add_d();
  const auto b = c.add("b", "b");
  const auto cc = c.add("c", "c");
  std::vector<SixCycle> v(k + 1);
  for (int i = 1; i <= k; ++i) {
    v[i] = six_cycle(c, i);
    for (const char* s : {"x", "xb", "xp", "xbp", "xpp", "xbpp"}) base.emplace_back(role(s, i), idx(s, i));
    const auto z = add_base(role("z", i), idx("z", i));
    const auto zp = add_base(role("zp", i), idx("zp", i));
    const auto zpp = add_base(role("zpp", i), idx("zpp", i));
    c.out.edge(zp, z);
    c.out.edge(z, v[i].x);
    c.out.edge(zpp, z);
    c.out.edge(z, v[i].xb);
    c.out.edge(zp, v[i].x);
    c.out.edge(zpp, v[i].xb);
    c.out.edge(d, z);
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const int jj = static_cast<int>(j) + 1;
    const auto y = add_base(role("y", jj), idx("y", jj));
    for (int lit : phi.clauses[j]) c.out.edge(lit > 0 ? v[lit].x : v[-lit].xb, y);
    c.out.edge(d, y);
  }
  for (const auto& [r, n] : base) {
    const auto a = c.out.labels.at(c.pos == 0 ? r : r + "_" + std::to_string(c.pos));
    const auto hat = c.add("hat_" + r, "h" + n);
    c.out.edge(b, hat);
    c.out.edge(a, hat);
    c.out.edge(hat, d);
  }
  c.out.edge(cc, d);
  return d;
}

ReductionOutput finish(Builder&& b, ConstructionId id, const GraphLimits& limits) {
  auto g = DominanceGraph::build(std::move(b.names), b.edges, limits);
  return ReductionOutput{std::move(g), std::move(b.labels), id, std::move(b.components)};
}

std::string formula_label(std::size_t j) { return "formula " + std::to_string(j + 1); }

void require_even_chain(const std::vector<Cnf>& formulas) {
  if (formulas.size() < 2 || formulas.size() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "chained constructions need an even number (>= 2) of formulas, got " + std::to_string(formulas.size()));
  }
}

std::size_t upward_member_size(const Cnf& phi) { return 4 * static_cast<std::size_t>(phi.variable_count) + phi.clauses.size() + 1; }
std::size_t upward_conp_size(const Cnf& phi) { return 4 * static_cast<std::size_t>(phi.variable_count) + 2 * phi.clauses.size() + 3; }
std::size_t downward_member_size(const Cnf& phi) { return 6 * static_cast<std::size_t>(phi.variable_count) + 2 * phi.clauses.size() + 1; }
std::size_t downward_conp_size(const Cnf& phi) { return 18 * static_cast<std::size_t>(phi.variable_count) + 2 * phi.clauses.size() + 3; }

}  // namespace

void require_monotone_chain(const std::vector<Cnf>& formulas) {
  require_even_chain(formulas);
  std::vector<bool> sat;
  for (std::size_t j = 0; j < formulas.size(); ++j) {
    try {
      sat.push_back(check_formula_properties(formulas[j]).satisfiable);
    } catch (const Error& e) {
      throw Error(e.kind(), formula_label(j) + ": " + e.what());
    }
  }
  for (std::size_t j = 1; j < sat.size(); ++j) {
    if (sat[j] && !sat[j - 1]) {
      throw Error(ErrorKind::Validation, formula_label(j) + " is satisfiable but " + formula_label(j - 1) +
                                             " is not; satisfiability must be monotone along the chain");
    }
  }
}

void require_upward_chain_properties(const std::vector<Cnf>& formulas) {
  require_even_chain(formulas);
  for (std::size_t j = 0; j < formulas.size(); ++j) {
    const auto p = check_formula_properties(formulas[j]);
    const char* failed = nullptr;
    if (!p.first_var_free) failed = "first_var_free (the first variable occurs in every clause)";
    else if (!p.min_two_unsat) failed = "min_two_unsat (some assignment falsifies only one clause)";
    else if (!p.min_two_models) failed = "min_two_models (exactly one model)";
    if (failed != nullptr) throw Error(ErrorKind::Validation, formula_label(j) + " violates " + failed);
  }
  require_monotone_chain(formulas);
}

ReductionOutput build_upward_member_graph(const Cnf& phi, const ReductionOptions& options) {
  require_nonempty_clauses(phi, false, "upward member graph");
  count_or_throw(upward_member_size(phi), options.limits);
  Builder b;
  upward_member(Component{b}, phi);
  return finish(std::move(b), ConstructionId::Thm3, options.limits);
}

ReductionOutput build_upward_conp_graph(const Cnf& phi, const ReductionOptions& options) {
  require_nonempty_clauses(phi, false, "upward coNP graph");
  count_or_throw(upward_conp_size(phi), options.limits);
  Builder b;
  upward_conp(Component{b}, phi);
  return finish(std::move(b), ConstructionId::Cons1, options.limits);
}

ReductionOutput build_upward_wagner_graph(const std::vector<Cnf>& formulas, const ReductionOptions& options) {
  require_even_chain(formulas);
  std::size_t total = 0;
  for (std::size_t j = 0; j < formulas.size(); ++j) {
    require_nonempty_clauses(formulas[j], false, formula_label(j));
    total += j % 2 == 0 ? upward_member_size(formulas[j]) : upward_conp_size(formulas[j]);
  }
  count_or_throw(total, options.limits);
  require_upward_chain_properties(formulas);

  Builder b;
  const std::size_t m = formulas.size() / 2;
  std::vector<std::string> d(formulas.size() + 1);
  std::vector<std::vector<std::string>> members(formulas.size() + 1);
  for (std::size_t j = 1; j <= formulas.size(); ++j) {
    const auto first = b.names.size();
    Component c{b, static_cast<int>(j)};
    if (j % 2 == 1) {
      d[j] = upward_member(c, formulas[j - 1]);
    } else {
      upward_conp(c, formulas[j - 1]);
    }
    members[j].assign(b.names.begin() + static_cast<std::ptrdiff_t>(first), b.names.end());
  }
  b.components.assign(members.begin() + 1, members.end());
  for (std::size_t i = 1; i <= m; ++i) {
    const auto even = std::to_string(2 * i);
    b.edge("up1_" + even, d[2 * i - 1]);
    b.edge("ubp1_" + even, d[2 * i - 1]);
    if (i >= 2) {
      for (const auto& z : members[2 * i - 2]) b.edge(d[2 * i - 1], z);
    }
  }
  return finish(std::move(b), ConstructionId::Cons3, options.limits);
}

ReductionOutput build_downward_member_graph(const Cnf& phi, const ReductionOptions& options) {
  require_nonempty_clauses(phi, options.allow_empty_clauses, "downward member graph");
  count_or_throw(downward_member_size(phi), options.limits);
  Builder b;
  downward_member(Component{b}, phi);
  return finish(std::move(b), ConstructionId::Thm9, options.limits);
}

ReductionOutput build_downward_conp_graph(const Cnf& phi, const ReductionOptions& options) {
  require_nonempty_clauses(phi, options.allow_empty_clauses, "downward coNP graph");
  count_or_throw(downward_conp_size(phi), options.limits);
  Builder b;
  downward_conp(Component{b}, phi);
  return finish(std::move(b), ConstructionId::Cons5, options.limits);
}

ReductionOutput build_downward_wagner_graph(const std::vector<Cnf>& formulas, const ReductionOptions& options) {
  require_even_chain(formulas);
  const std::size_t m = formulas.size() / 2;
  std::size_t total = 3 * m + 2;
  for (std::size_t j = 0; j < formulas.size(); ++j) {
    require_nonempty_clauses(formulas[j], options.allow_empty_clauses, formula_label(j));
    total += j % 2 == 0 ? downward_member_size(formulas[j]) : downward_conp_size(formulas[j]);
  }
  count_or_throw(total, options.limits);
  require_monotone_chain(formulas);

  Builder b;
  std::vector<std::string> d(formulas.size() + 1);
  for (std::size_t j = 1; j <= formulas.size(); ++j) {
    const auto first = b.names.size();
    Component c{b, static_cast<int>(j)};
    d[j] = j % 2 == 1 ? downward_member(c, formulas[j - 1]) : downward_conp(c, formulas[j - 1]);
    b.components.emplace_back(b.names.begin() + static_cast<std::ptrdiff_t>(first), b.names.end());
  }
  const auto add = [&](const std::string& r, const std::string& n) {
    b.names.push_back(n);
    b.labels[r] = n;
    return n;
  };
  const auto cstar = add("c_star", "cstar");
  const auto dstar = add("d_star", "dstar");
  for (std::size_t i = 1; i <= m; ++i) {
    const int ii = static_cast<int>(i);
    const auto r = add(role("r", ii), idx("r", ii));
    const auto s = add(role("s", ii), idx("s", ii));
    const auto t = add(role("t", ii), idx("t", ii));
    b.edge(r, d[2 * i - 1]);
    b.edge(r, d[2 * i]);
    b.edge(s, r);
    b.edge(s, d[2 * i - 1]);
    b.edge(t, r);
    b.edge(t, d[2 * i]);
    b.edge(dstar, r);
  }
  b.edge(cstar, dstar);
  return finish(std::move(b), ConstructionId::Cons6, options.limits);
}

ReductionOutput build_construction(ConstructionId id, const std::vector<Cnf>& formulas,
                                   const ReductionOptions& options) {
  const bool chained = id == ConstructionId::Cons3 || id == ConstructionId::Cons6;
  if (!chained && formulas.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " takes exactly one formula, got " +
                                                std::to_string(formulas.size()));
  }
  switch (id) {
    case ConstructionId::Thm3: return build_upward_member_graph(formulas[0], options);
    case ConstructionId::Cons1: return build_upward_conp_graph(formulas[0], options);
    case ConstructionId::Cons3: return build_upward_wagner_graph(formulas, options);
    case ConstructionId::Thm9: return build_downward_member_graph(formulas[0], options);
    case ConstructionId::Cons5: return build_downward_conp_graph(formulas[0], options);
    case ConstructionId::Cons6: return build_downward_wagner_graph(formulas, options);
  }
  throw Error(ErrorKind::Internal, "unhandled construction");
}

}  // namespace covset
