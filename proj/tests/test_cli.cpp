#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "covset/dg_format.hpp"
#include "covset/harness.hpp"
#include "covset/kernels.hpp"
#include "covset/json_io.hpp"
#include "covset/mcgarvey.hpp"
#include "covset/reductions.hpp"
#include "covset/solver.hpp"
#include "support.hpp"

using namespace covset;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "covset_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

const std::string up_member = testing::fixture("up_member.dg");

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve member") {
    const auto r = run({"solve", "--graph", up_member, "--direction", "up", "--notion", "minimal", "--problem", "member",
                        "--alt", "d"});
    REQUIRE(r.code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j["answer"] == true);
    CHECK(j["problem"] == "member");

    const auto g = testing::load("up_member.dg");
    const auto ans = decide(g, Direction::Upward, Notion::InclusionMinimal, problem::Member{g.index("d")});
    auto lib = answer_to_json(g, Direction::Upward, Notion::InclusionMinimal, problem::Member{g.index("d")}, ans);
    auto cli_j = j;
    lib["stats"].erase("seconds");
    cli_j["stats"].erase("seconds");
    CHECK(cli_j == lib);
  }

  TEST_CASE("solve plain outputs") {
    auto r = run({"solve", "--graph", up_member, "--problem", "find", "--plain"});
    CHECK(r.code == 0);
    const auto g = testing::load("up_member.dg");
    const auto ans = decide(g, Direction::Upward, Notion::InclusionMinimal, problem::Find{});
    CHECK(r.out == format_set(g, *ans.witness) + "\n");
    r = run({"solve", "--graph", up_member, "--notion", "minimum", "--problem", "size", "--k", "6", "--plain"});
    CHECK(r.out == "false\n");
    r = run({"solve", "--graph", up_member, "--notion", "minimum", "--problem", "size", "--k", "7", "--plain"});
    CHECK(r.out == "true\n");
  }

  TEST_CASE("find with no downward covering set prints null") {
    // Seeded graph with no downward covering set.
    std::optional<DominanceGraph> none;
    for (std::uint64_t seed = 1; seed < 3000 && !none; ++seed) {
      const auto g = testing::random_graph(6, 0.8, seed);
      if (!decide(g, Direction::Downward, Notion::InclusionMinimal, problem::Exists{}).verdict.value()) none = g;
    }
    REQUIRE(none);
    const auto path = scratch("none.dg");
    write_text_file(path, serialize_graph(*none));
    const auto r = run({"solve", "--graph", path, "--direction", "down", "--problem", "find"});
    CHECK(r.code == 0);
    CHECK(ordered_json::parse(r.out)["answer"].is_null());
  }

  TEST_CASE("check") {
    auto r = run({"check", "--graph", up_member, "--set", "xb1,xbp1,xb2,xbp2,xb3,xbp3,d", "--direction", "up",
                  "--minimal"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    r = run({"check", "--graph", up_member, "--set", "xb1,d", "--json"});
    const auto j = ordered_json::parse(r.out);
    CHECK(j["covering"] == false);
    CHECK(j["answer"] == false);
    r = run({"check", "--graph", up_member, "--set", "nope"});
    CHECK(r.code == cli::kExitUsage);
  }

  TEST_CASE("reduce writes the golden graph and labels") {
    const auto out = scratch("g.dg"), labels = scratch("l.json");
    const auto r = run({"reduce", "--construction", "cons1", "--cnf", testing::fixture("conp_example.cnf"), "--out", out,
                        "--labels", labels});
    REQUIRE(r.code == 0);
    CHECK(read_graph_file(out) == testing::load("up_conp.dg"));
    const auto lib = build_upward_conp_graph(testing::load_cnf("conp_example.cnf"));
    CHECK(labels_from_json(ordered_json::parse(read_text_file(labels))) == lib.labels);

    const auto s = run({"reduce", "--construction", "thm3", "--cnf", testing::fixture("three_var.cnf")});
    CHECK(s.out == serialize_graph(testing::load("up_member.dg")));
  }

  TEST_CASE("realize both ways") {
    const auto profile = scratch("p.json");
    REQUIRE(run({"realize", "--graph", up_member, "--out", profile}).code == 0);
    const auto p = profile_from_json(ordered_json::parse(read_text_file(profile)));
    CHECK(p == mcgarvey_profile(testing::load("up_member.dg")));
    const auto back = run({"realize", "--profile", profile});
    CHECK(back.code == 0);
    CHECK(back.out == serialize_graph(testing::load("up_member.dg")));
    CHECK(run({"realize"}).code == cli::kExitUsage);
  }

  TEST_CASE("random-cnf") {
    const auto r = run({"random-cnf", "--vars", "3", "--clauses", "4", "--width", "2", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == serialize_dimacs(random_cnf(3, 4, 2, 1)));
    CHECK(run({"random-cnf", "--vars", "1", "--clauses", "1", "--width", "3"}).code == cli::kExitUsage);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--claim", "CLAIM2", "--cnf", testing::fixture("conp_example.cnf")});
    CHECK(r.code == 0);
    const auto j = ordered_json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["verdict"] == "pass");
    r = run({"verify", "--claim", "CLAIM2", "--random", "--instances", "3", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(ordered_json::parse(r.out).size() == 3);
    r = run({"verify", "--claim", "CLAIM2", "--cnf", testing::fixture("conp_example.cnf"), "--max-subsets", "4"});
    CHECK(r.code == 2);
    CHECK(run({"verify", "--claim", "CLAIM99", "--random"}).code == cli::kExitUsage);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--graph", up_member}).code == cli::kExitUsage);
    const auto bad = scratch("bad.dg");
    write_text_file(bad, "dg 2\na\nb\na a\n");
    CHECK(run({"solve", "--graph", bad, "--problem", "exists"}).code == cli::kExitValidation);
    write_text_file(bad, "dg x\n");
    CHECK(run({"solve", "--graph", bad, "--problem", "exists"}).code == cli::kExitValidation);
    CHECK(run({"solve", "--graph", testing::fixture("down_member.dg"), "--direction", "down", "--problem", "unique",
               "--max-subsets", "16"})
              .code == cli::kExitResource);
    CHECK(run({"--kernel", "sse9", "solve", "--graph", up_member, "--problem", "exists"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--graph", up_member, "--problem", "size", "--k", "0"}).code == cli::kExitUsage);
  }

  TEST_CASE("forced kernels agree") {
    const auto a = run({"--kernel", "scalar", "solve", "--graph", up_member, "--problem", "find", "--plain"});
    const auto b = run({"solve", "--graph", up_member, "--problem", "find", "--plain"});
    CHECK(a.out == b.out);
    kernels::reset_isa();
  }
}
