#include <doctest.h>

#include "covset/cnf.hpp"
#include "covset/error.hpp"
#include "covset/harness.hpp"
#include "support.hpp"

using namespace covset;

namespace {

Cnf make(int vars, std::vector<Clause> clauses) { return Cnf{vars, std::move(clauses)}; }

/// Falsified-clause counts of every assignment, by direct evaluation.
std::vector<std::size_t> falsified_counts(const Cnf& f) {
  std::vector<std::size_t> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << f.variable_count); ++code) {
    std::size_t bad = 0;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool v = ((code >> (std::abs(lit) - 1)) & 1U) != 0;
        sat = sat || (lit > 0 ? v : !v);
      }
      if (!sat) ++bad;
    }
    out.push_back(bad);
  }
  return out;
}

}  // namespace

TEST_SUITE("cnf") {
  TEST_CASE("parse basic") {
    const auto f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n");
    CHECK(f.variable_count == 2);
    CHECK(f.clauses == std::vector<Clause>{{1, 2}, {-1}});
  }

  TEST_CASE("comments, multi-line clauses, trailing percent") {
    const auto f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0 -3\n0\n%\n0\n");
    CHECK(f.clauses == std::vector<Clause>{{1, -2, 3}, {-3}});
  }

  TEST_CASE("repeated literals collapse") {
    CHECK(parse_dimacs("p cnf 2 1\n1 1 2 0\n").clauses == std::vector<Clause>{{1, 2}});
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 -1 0\n"), Error);
    try {
      parse_dimacs("p cnf 1 1\n1 -1 0\n");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("tautolog") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n0\n"), Error);
    CHECK(parse_dimacs("p cnf 1 1\n0\n", true).clauses == std::vector<Clause>{{}});
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 x 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs(""), SyntaxError);
  }

  TEST_CASE("round trip") {
    for (const char* f : {"three_var.cnf", "conp_example.cnf", "down_conp_example.cnf"}) {
      const auto cnf = testing::load_cnf(f);
      CHECK(parse_dimacs(serialize_dimacs(cnf)) == cnf);
    }
    for (std::uint64_t seed = 1; seed < 30; ++seed) {
      const auto cnf = random_cnf(5, 6, 3, seed);
      CHECK(parse_dimacs(serialize_dimacs(cnf)) == cnf);
    }
  }

  TEST_CASE("formula properties") {
    const auto contradiction = make(1, {{1}, {-1}});
    const auto p = check_formula_properties(contradiction);
    CHECK_FALSE(p.satisfiable);
    CHECK_FALSE(p.min_two_unsat);
    CHECK(p.fewest_falsified_by_non_model == 1);

    const auto q = check_formula_properties(make(2, {{1, 2}, {2}}));
    CHECK(q.satisfiable);
    CHECK(q.model_count == 2);
    CHECK(q.min_two_models);
    CHECK(q.first_var_free);

    const auto empty = check_formula_properties(make(2, {}));
    CHECK(empty.satisfiable);
    CHECK(empty.model_count == 4);

    CHECK_THROWS_AS(check_formula_properties(make(25, {{1}})), Error);
  }

  TEST_CASE("properties agree with direct evaluation") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto f = random_cnf(1 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 6), 1, seed);
      const auto counts = falsified_counts(f);
      const auto p = check_formula_properties(f);
      const auto models = static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), 0U));
      CHECK(p.model_count == models);
      CHECK(p.satisfiable == (models > 0));
      CHECK(p.model_count == brute_force_sat(f).size());
      std::size_t fewest = 0;
      for (auto c : counts) {
        if (c > 0 && (fewest == 0 || c < fewest)) fewest = c;
      }
      CHECK(p.fewest_falsified_by_non_model == fewest);
    }
  }

  TEST_CASE("normalize: duplicate clauses for two falsified") {
    const auto f = normalize_formula(make(1, {{1}, {-1}}), {.min_two_unsat = true});
    CHECK(f.clauses.size() == 4);
    for (auto c : falsified_counts(f)) CHECK(c == 2);
    CHECK(check_formula_properties(f).min_two_unsat);
  }

  TEST_CASE("normalize: fresh variable doubles models") {
    const auto f = normalize_formula(make(1, {{1}}), {.min_two_models = true});
    CHECK(f.variable_count == 2);
    CHECK(brute_force_sat(f).size() == 2);
  }

  TEST_CASE("normalize: free first variable") {
    const auto f = normalize_formula(make(2, {{1, 2}, {-1}}), {.first_var_free = true});
    CHECK(f.variable_count == 3);
    CHECK(f.clauses == std::vector<Clause>{{2, 3}, {-2}});
    CHECK(check_formula_properties(f).first_var_free);
  }

  TEST_CASE("normalize is the identity when requirements hold") {
    const auto f = make(2, {{1, 2}, {2}});
    CHECK(normalize_formula(f, {.min_two_unsat = true, .min_two_models = true, .first_var_free = true}) == f);
  }

  TEST_CASE("normalize preserves satisfiability") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto f = random_cnf(3, 1 + static_cast<int>(seed % 7), 2, seed);
      const auto g = normalize_formula(f, {.min_two_unsat = true, .min_two_models = true, .first_var_free = true});
      const auto p = check_formula_properties(g);
      CHECK(p.satisfiable == check_formula_properties(f).satisfiable);
      CHECK(p.min_two_unsat);
      CHECK(p.min_two_models);
      CHECK(p.first_var_free);
    }
  }
}

TEST_SUITE("sat-oracle") {
  TEST_CASE("brute force examples") {
    CHECK(brute_force_sat(make(1, {{1}, {-1}})).empty());
    const auto models = brute_force_sat(make(2, {{1, 2}}));
    std::vector<std::string> text;
    for (const auto& m : models) text.push_back(to_string(m));
    CHECK(text == std::vector<std::string>{"01", "10", "11"});
    const auto three_var_models = brute_force_sat(testing::load_cnf("three_var.cnf"));
    CHECK(std::find(three_var_models.begin(), three_var_models.end(), Assignment{false, false, false}) != three_var_models.end());
  }

  TEST_CASE("models and non-models are checked clause by clause") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto f = random_cnf(1 + static_cast<int>(seed % 8), 1 + static_cast<int>(seed % 9), 1, seed);
      const auto models = brute_force_sat(f);
      const int n = f.variable_count;
      std::size_t seen = 0;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        Assignment a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = ((code >> i) & 1U) != 0;
        bool all = true;
        for (const auto& c : f.clauses) {
          bool any = false;
          for (int lit : c) any = any || (lit > 0 ? a[lit - 1] : !a[-lit - 1]);
          all = all && any;
        }
        const bool listed = std::find(models.begin(), models.end(), a) != models.end();
        CHECK(all == listed);
        if (listed) ++seen;
      }
      CHECK(seen == models.size());
      CHECK(std::is_sorted(models.begin(), models.end(),
                           [](const Assignment& x, const Assignment& y) { return to_string(x) < to_string(y); }));
    }
    CHECK_THROWS_AS(brute_force_sat(make(25, {})), Error);
  }

  TEST_CASE("random_cnf") {
    CHECK(random_cnf(2, 2, 2, 7) == random_cnf(2, 2, 2, 7));
    CHECK_THROWS_AS(random_cnf(1, 1, 3, 1), Error);
    CHECK_THROWS_AS(random_cnf(0, 1, 1, 1), Error);
    for (std::uint64_t seed = 1; seed < 50; ++seed) CHECK_NOTHROW(validate(random_cnf(4, 5, 4, seed)));
    const auto golden = testing::load_cnf("random_3_4_2_seed1.cnf");
    CHECK(random_cnf(3, 4, 2, 1) == golden);
  }
}
