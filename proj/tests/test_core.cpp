#include <doctest.h>

#include "covset/dg_format.hpp"
#include "covset/dominance_graph.hpp"
#include "covset/error.hpp"
#include "support.hpp"

using namespace covset;
using testing::named;

TEST_SUITE("dominance-core") {
  TEST_CASE("smallest graph") {
    const auto g = named({"a", "b"}, {{"a", "b"}});
    CHECK(g.size() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.dominates(g.index("a"), g.index("b")));
    CHECK_FALSE(g.dominates(g.index("b"), g.index("a")));
  }

  TEST_CASE("construction errors name the offender") {
    auto fails_with = [](const std::vector<std::string>& names, const std::vector<NamePair>& edges, const char* text) {
      try {
        DominanceGraph::build(names, edges);
        FAIL("expected a validation error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(std::string(e.what()).find(text) != std::string::npos);
      }
    };
    fails_with({"a"}, {{"a", "a"}}, "a");
    fails_with({"a", "b"}, {{"a", "b"}, {"b", "a"}}, "b");
    fails_with({"a", "a"}, {}, "a");
    fails_with({"a", "b"}, {{"a", "zz"}}, "zz");
    fails_with({"a-b"}, {}, "a-b");
    fails_with({""}, {}, "");
  }

  TEST_CASE("self-loop and symmetric pair are distinguished") {
    try {
      named({"a"}, {{"a", "a"}});
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("self") != std::string::npos);
    }
    try {
      named({"a", "b"}, {{"a", "b"}, {"b", "a"}});
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("symmetric") != std::string::npos);
    }
  }

  TEST_CASE("alternatives are ordered lexicographically") {
    const auto g = named({"c", "a", "b"}, {{"c", "a"}});
    CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("size cap is a resource error") {
    std::vector<std::string> names;
    for (int i = 0; i < 65; ++i) names.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(DominanceGraph::build(names, {}), ResourceError);
    names.resize(10);
    GraphLimits small{5};
    CHECK_THROWS_AS(DominanceGraph::build(names, {}, small), ResourceError);
  }

  TEST_CASE("dominators and dominated_by") {
    const auto cyc = testing::cycle3();
    const auto a = cyc.index("a"), b = cyc.index("b"), c = cyc.index("c");
    CHECK(cyc.names_of(cyc.dominators(b, cyc.all())) == std::vector<std::string>{"a"});
    CHECK(cyc.dominators(b, cyc.set_of({"b", "c"})).is_empty());
    CHECK(cyc.names_of(cyc.dominated_by(a, cyc.all())) == std::vector<std::string>{"b"});
    (void)c;

    const auto tri = named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(tri.names_of(tri.dominated_by(tri.index("a"), tri.all())) == std::vector<std::string>{"b", "c"});

    const auto up_member = testing::load("up_member.dg");
    CHECK(up_member.names_of(up_member.dominators(up_member.index("d"), up_member.all())) == std::vector<std::string>{"y1", "y2"});
    const auto down_member = testing::load("down_member.dg");
    CHECK(down_member.names_of(down_member.dominated_by(down_member.index("d"), down_member.all())) == std::vector<std::string>{"y1", "y2"});
  }

  TEST_CASE("dominators and dominated_by are disjoint") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto g = testing::random_graph(9, 0.6, seed);
      for (AltIndex x = 0; x < g.size(); ++x) {
        CHECK((g.dominators(x, g.all()) & g.dominated_by(x, g.all())).is_empty());
      }
    }
  }

  TEST_CASE("foreign sets are rejected") {
    const auto g = testing::cycle3();
    CHECK_THROWS_AS(g.dominators(7, g.all()), Error);
    CHECK_THROWS_AS(g.dominators(0, AlternativeSet::full(4)), Error);
    CHECK_THROWS_AS(g.set_of({"zz"}), Error);
  }

  TEST_CASE("undominated and restriction") {
    const auto g = named({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"d", "c"}});
    CHECK(g.names_of(g.undominated()) == std::vector<std::string>{"a", "d"});
    const auto sub = g.restricted_to(g.set_of({"b", "c", "d"}));
    CHECK(sub.names() == std::vector<std::string>{"b", "c", "d"});
    CHECK(sub.edge_count() == 2);
  }

  TEST_CASE("reverse flips every edge") {
    const auto g = testing::chain2();
    const auto r = reverse(g);
    CHECK(r.dominates(r.index("b"), r.index("a")));
    CHECK(reverse(r) == g);
    const auto cyc = reverse(testing::cycle3());
    CHECK(cyc.dominates(cyc.index("a"), cyc.index("c")));
    CHECK(cyc.dominates(cyc.index("c"), cyc.index("b")));
    CHECK(cyc.dominates(cyc.index("b"), cyc.index("a")));
  }
}

TEST_SUITE("dg-format") {
  TEST_CASE("parse minimal file") {
    const auto g = parse_graph("dg 2\na\nb\na b\n");
    CHECK(g.size() == 2);
    CHECK(g.dominates(g.index("a"), g.index("b")));
  }

  TEST_CASE("comments and blank lines") {
    const auto g = parse_graph("# header\ndg 3\nc\n\nb # trailing\na\nc a\n# end\n");
    CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(serialize_graph(g) == "dg 3\na\nb\nc\nc a\n");
  }

  TEST_CASE("round trip on fixtures and random graphs") {
    for (const char* f : {"up_member.dg", "up_conp.dg", "down_member.dg"}) {
      const auto text = read_text_file(testing::fixture(f));
      const auto g = parse_graph(text);
      CHECK(serialize_graph(g) == text);
      CHECK(parse_graph(serialize_graph(g)) == g);
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto g = testing::random_graph(10, 0.5, seed);
      CHECK(parse_graph(serialize_graph(g)) == g);
    }
  }

  TEST_CASE("member graph fixture has 15 alternatives and 19 edges") {
    const auto g = testing::load("up_member.dg");
    CHECK(g.size() == 15);
    CHECK(g.edge_count() == 19);
  }

  TEST_CASE("syntax errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse_graph(text);
      } catch (const SyntaxError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("graph 2\na\nb\n") == 1);
    CHECK(line_of("dg x\n") == 1);
    CHECK(line_of("dg 2\na\n") >= 2);
    CHECK(line_of("dg 2\na\nb\na b c\n") == 4);
    CHECK(line_of("dg 2\na\nb\na\n") == 4);
    CHECK(line_of("dg 1\na b\n") == 2);
  }

  TEST_CASE("validation errors pass through") {
    CHECK_THROWS_AS(parse_graph("dg 1\na\na a\n"), Error);
    try {
      parse_graph("dg 2\na\nb\na b\nb a\n");
      FAIL("no error");
    } catch (const SyntaxError&) {
      FAIL("wrong kind");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
    }
  }

  TEST_CASE("declared size above the cap") {
    CHECK_THROWS_AS(parse_graph("dg 100\n"), ResourceError);
  }
}
