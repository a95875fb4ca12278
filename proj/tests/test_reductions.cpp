#include <doctest.h>

#include <set>

#include "covset/covering.hpp"
#include "covset/dg_format.hpp"
#include "covset/error.hpp"
#include "covset/harness.hpp"
#include "covset/reductions.hpp"
#include "covset/solver.hpp"
#include "support.hpp"

using namespace covset;

namespace {

Cnf unsat_dup() { return Cnf{2, {{2}, {-2}, {2}, {-2}}}; }

AlternativeSet roles(const ReductionOutput& r, const std::vector<std::string>& rs) { return r.set_of_roles(rs); }

/// Edges whose endpoints sit in different recorded components, or touch a connector.
std::set<NamePair> cross_edges(const ReductionOutput& r) {
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    for (const auto& n : r.components[i]) owner[n] = i;
  }
  std::set<NamePair> out;
  for (const auto& e : r.graph.named_edges()) {
    const auto a = owner.find(e.first), b = owner.find(e.second);
    if (a == owner.end() || b == owner.end() || a->second != b->second) out.insert(e);
  }
  return out;
}

NamePair by_role(const ReductionOutput& r, const std::string& a, const std::string& b) {
  return {r.labels.at(a), r.labels.at(b)};
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("closed-form alternative counts") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
      const int n = 1 + static_cast<int>(seed % 4);
      const int l = 1 + static_cast<int>((seed / 4) % 4);
      const auto f = random_cnf(n, l, 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n)), seed);
      CHECK(build_upward_member_graph(f).graph.size() == static_cast<std::size_t>(4 * n + l + 1));
      CHECK(build_upward_conp_graph(f).graph.size() == static_cast<std::size_t>(4 * n + 2 * l + 3));
      CHECK(build_downward_member_graph(f).graph.size() == static_cast<std::size_t>(6 * n + 2 * l + 1));
      if (18 * n + 2 * l + 3 <= 64) {
        CHECK(build_downward_conp_graph(f).graph.size() == static_cast<std::size_t>(18 * n + 2 * l + 3));
      } else {
        CHECK_THROWS_AS(build_downward_conp_graph(f), ResourceError);
      }
    }
  }

  TEST_CASE("upward member graph matches the golden") {
    const auto r = build_upward_member_graph(testing::load_cnf("three_var.cnf"));
    CHECK(r.graph.size() == 15);
    CHECK(r.graph.edge_count() == 19);
    CHECK(r.graph == testing::load("up_member.dg"));
    CHECK(serialize_graph(r.graph) == read_text_file(testing::fixture("up_member.dg")));
    CHECK(r.labels.at("d") == "d");
    CHECK(r.labels.at("xbp_2") == "xbp2");
  }

  TEST_CASE("upward coNP gadget matches the golden and its assignment set is minimal") {
    const auto r = build_upward_conp_graph(testing::load_cnf("conp_example.cnf"));
    CHECK(r.graph.size() == 19);
    CHECK(r.graph == testing::load("up_conp.dg"));
    const auto m = roles(r, {"u_1", "up_1", "u_2", "up_2", "u_3", "up_3", "a_1", "a_2", "a_3"});
    CHECK(is_minimal_covering_set(r.graph, m, Direction::Upward));
    CHECK(r.graph.dominates(r.at("a_1"), r.at("e_1")));
    CHECK(r.graph.dominates(r.at("a_1"), r.at("ep_2")));
  }

  TEST_CASE("downward member graph matches the golden") {
    const auto r = build_downward_member_graph(testing::load_cnf("three_var.cnf"));
    CHECK(r.graph.size() == 23);
    CHECK(r.graph == testing::load("down_member.dg"));
    const auto w = roles(r, {"x_1", "xp_1", "xpp_1", "x_2", "xp_2", "xpp_2", "xb_3", "xbp_3", "xbpp_3", "y_1",
                             "y_2", "z_1", "z_2", "d"});
    CHECK(w.size() == 14);
    CHECK(is_minimal_covering_set(r.graph, w, Direction::Downward));
    CHECK(mandatory_alternatives(r.graph) == roles(r, {"z_1", "z_2"}));
    CHECK(r.graph.dominated_by(r.at("d"), r.graph.all()) == roles(r, {"y_1", "y_2"}));
  }

  TEST_CASE("downward coNP gadget") {
    const auto r = build_downward_conp_graph(testing::load_cnf("down_conp_example.cnf"));
    CHECK(r.graph.size() == 61);
    std::vector<std::string> rs{"b", "c"};
    for (int i = 1; i <= 3; ++i) {
      for (const char* s : {"xb_", "xbp_", "xbpp_", "zp_", "zpp_"}) rs.push_back(s + std::to_string(i));
    }
    const auto m = roles(r, rs);
    CHECK(m.size() == 17);
    CHECK(is_minimal_covering_set(r.graph, m, Direction::Downward));
    CHECK(is_covering_set(r.graph, r.graph.all(), Direction::Downward));
    CHECK(r.graph.dominates(r.at("c"), r.at("d")));
    CHECK(r.labels.count("hat_x_1") == 1);

    const auto small = build_downward_conp_graph(Cnf{1, {{1}}});
    CHECK(small.graph.size() == 23);
    CHECK(build_downward_conp_graph(Cnf{1, {{1}, {-1}}}).graph.size() == 25);
  }

  TEST_CASE("upward chain, one pair") {
    const auto r = build_upward_wagner_graph({Cnf{2, {{2}}}, unsat_dup()});
    CHECK(r.graph.size() == 29);
    REQUIRE(r.components.size() == 2);
    CHECK(r.components[0].size() == 10);
    CHECK(r.components[1].size() == 19);
    CHECK(cross_edges(r) == std::set<NamePair>{by_role(r, "up_1_2", "d_1"), by_role(r, "ubp_1_2", "d_1")});
  }

  TEST_CASE("upward chain, two pairs") {
    const Cnf sat2{2, {{2}, {2}}};
    const auto r = build_upward_wagner_graph({Cnf{2, {{2}}}, sat2, Cnf{2, {{2}}}, unsat_dup()}, {});
    REQUIRE(r.components.size() == 4);
    std::set<NamePair> expected{by_role(r, "up_1_2", "d_1"), by_role(r, "ubp_1_2", "d_1"),
                                by_role(r, "up_1_4", "d_3"), by_role(r, "ubp_1_4", "d_3")};
    for (const auto& n : r.components[1]) expected.insert({r.labels.at("d_3"), n});
    CHECK(cross_edges(r) == expected);
    CHECK_THROWS_AS(build_upward_wagner_graph({unsat_dup(), Cnf{2, {{2}}}}), Error);
    CHECK_THROWS_AS(build_upward_wagner_graph({Cnf{2, {{2}}}}), Error);
  }

  TEST_CASE("upward chain rejects formulas missing the properties") {
    try {
      build_upward_wagner_graph({Cnf{1, {{1}}}, unsat_dup()});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
    }
  }

  TEST_CASE("downward chain, one pair") {
    const auto r = build_downward_wagner_graph({Cnf{1, {{1}}}, Cnf{1, {{1}, {-1}}}});
    CHECK(r.graph.size() == 39);
    REQUIRE(r.components.size() == 2);
    CHECK(r.components[0].size() + r.components[1].size() + 3 * 1 + 2 == 39);
    const std::set<NamePair> expected{
        by_role(r, "r_1", "d_1"),  by_role(r, "r_1", "d_2"),     by_role(r, "s_1", "r_1"),
        by_role(r, "s_1", "d_1"),  by_role(r, "t_1", "r_1"),     by_role(r, "t_1", "d_2"),
        by_role(r, "d_star", "r_1"), by_role(r, "c_star", "d_star")};
    CHECK(cross_edges(r) == expected);

    std::vector<std::string> m{"s_1", "t_1", "r_1", "c_star", "d_star", "x_1_1", "xp_1_1", "xpp_1_1", "y_1_1",
                               "z_1_1", "d_1"};
    auto set = roles(r, m);
    for (const auto& n : r.components[1]) set = set.with(r.graph.index(n));
    CHECK(is_covering_set(r.graph, set, Direction::Downward));
    CHECK(set.contains(r.at("d_star")));
    CHECK_THROWS_AS(build_downward_wagner_graph({Cnf{1, {{1}, {-1}}}, Cnf{1, {{1}}}}), Error);
  }

  TEST_CASE("empty clauses") {
    const Cnf e{1, {{}}};
    CHECK_THROWS_AS(build_upward_member_graph(e), Error);
    CHECK_THROWS_AS(build_upward_conp_graph(e), Error);
    CHECK_THROWS_AS(build_downward_member_graph(e), Error);
    CHECK(build_downward_member_graph(e, {.allow_empty_clauses = true}).graph.size() == 9);
  }

  TEST_CASE("dispatch and determinism") {
    const auto f = testing::load_cnf("conp_example.cnf");
    for (auto id : {ConstructionId::Thm3, ConstructionId::Cons1, ConstructionId::Thm9}) {
      const auto a = serialize_graph(build_construction(id, {f}).graph);
      CHECK(a == serialize_graph(build_construction(id, {f}).graph));
      CHECK(parse_construction(to_string(id)) == id);
    }
    CHECK_THROWS_AS(build_construction(ConstructionId::Thm3, {f, f}), Error);
    CHECK_THROWS_AS(parse_construction("thm4"), Error);
    CHECK_THROWS_AS(build_upward_member_graph(f).at("no_such_role"), Error);
  }

  TEST_CASE("size cap") {
    ReductionOptions tight;
    tight.limits.max_alternatives = 10;
    CHECK_THROWS_AS(build_upward_member_graph(testing::load_cnf("three_var.cnf"), tight), ResourceError);
  }
}
