// End-to-end tests driving the installed binary. The path comes in through
// the TREEBIJ_CLI_PATH compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "treebij/json_io.hpp"
#include "treebij/sample.hpp"

using testutil::run_command;

namespace {

std::string cli() { return std::string(TREEBIJ_CLI_PATH); }

} // namespace

TEST_CASE("help and usage errors")
{
    CHECK(run_command(cli() + " --help").exit_code == 0);
    CHECK(run_command(cli() + " 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " bogus 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " verify 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " table w --n 0 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " table w 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " sample tree --n 3 --bogus 2>/dev/null").exit_code == 2);
    CHECK(run_command("echo 'not json' | " + cli() + " map fn-to-tree 2>/dev/null")
              .exit_code == 2);
    CHECK(run_command("echo '{}' | " + cli() + " map split 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify subcommands emit a run report and exit 0")
{
    auto result = run_command(cli() + " verify lacasse --n-max 10 2>/dev/null");
    CHECK(result.exit_code == 0);
    treebij::Json report = treebij::parse_json(result.output);
    CHECK(report.at("status") == "pass");
    CHECK(report.at("checks_run") == 10);
    CHECK(report.at("command") == "verify lacasse");

    CHECK(run_command(cli() + " verify hurwitz --n-max 5 --trials 20 2>/dev/null")
              .exit_code == 0);
    CHECK(run_command(cli() + " verify counts --n-max 4 2>/dev/null").exit_code == 0);
    CHECK(run_command(cli() + " verify tables --n-max 4 2>/dev/null").exit_code == 0);
}

TEST_CASE("brute-force cap: flag beats env beats default")
{
    CHECK(run_command(cli() + " verify counts --n-max 7 2>/dev/null").exit_code == 2);
    CHECK(run_command("TREEBIJ_CAP=2 " + cli() + " verify tables --n-max 3 2>/dev/null")
              .exit_code == 2);
    CHECK(run_command("TREEBIJ_CAP=2 " + cli() +
                      " verify tables --n-max 3 --cap 3 2>/dev/null")
              .exit_code == 0);
    CHECK(run_command("TREEBIJ_CAP=junk " + cli() + " verify tables --n-max 2 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("table goldens")
{
    auto w2 = run_command(cli() + " table w --n 2");
    CHECK(w2.exit_code == 0);
    CHECK(w2.output == "i,j,count\n0,0,2\n0,1,2\n1,0,2\n1,1,2\n");

    auto f2 = run_command(cli() + " table f --n 2");
    CHECK(f2.exit_code == 0);
    CHECK(f2.output == "i,j,count\n2,1,2\n2,2,2\n3,1,2\n3,2,2\n");

    auto w2_json = run_command(cli() + " table w --n 2 --format json");
    CHECK(w2_json.exit_code == 0);
    treebij::Json parsed = treebij::parse_json(w2_json.output);
    CHECK(parsed.at("kind") == "w");
    CHECK(parsed.at("n") == 2);
    CHECK(parsed.at("entries").size() == 4);
    CHECK(parsed.at("entries")[0].at("count") == "2");

    // counts beyond 64 bits stay exact in the decimal strings
    auto w20 = run_command(cli() + " table w --n 20 --format json");
    CHECK(w20.exit_code == 0);
}

TEST_CASE("map fn-to-tree reproduces the worked 13 -> 12 image")
{
    auto dir = testutil::scratch_dir();
    auto input = testutil::write_file(
        dir / "f13.json",
        "{\"codomain_max\":12,\"domain_max\":13,\"values\":[8,6,8,5,4,12,4,6,12,2,4,2,3]}\n");

    auto result = run_command(cli() + " map fn-to-tree -i " + input.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "{\"edges\":[[1,8],[2,10],[2,12],[3,8],[4,5],[4,7],[4,11],[5,6],[6,8],[6,12],"
          "[9,12]],\"labels\":[1,2,3,4,5,6,7,8,9,10,11,12],\"roots\":[2,3,4]}\n");

    // the inverse direction restores the input bytes
    auto round = run_command(cli() + " map fn-to-tree -i " + input.string() + " | " + cli() +
                             " map tree-to-fn");
    CHECK(round.exit_code == 0);
    CHECK(round.output == testutil::read_file(input));
}

TEST_CASE("map merge and split are CLI inverses on the worked triple")
{
    const std::string triple =
        R"({"d":{"edges":[[1,8],[3,8],[6,8],[6,12],[9,12]],"labels":[1,3,6,8,9,12],"roots":[6,12]},)"
        R"("dp":{"edges":[[2,10]],"labels":[2,10],"roots":[2,2]},)"
        R"("dpp":{"edges":[[4,5],[4,7],[4,11]],"labels":[4,5,7,11],"roots":[5,4]}})";
    auto dir = testutil::scratch_dir();
    auto input = testutil::write_file(dir / "triple.json", triple + "\n");

    auto merged = run_command(cli() + " map merge -i " + input.string());
    CHECK(merged.exit_code == 0);
    treebij::Json t = treebij::parse_json(merged.output);
    CHECK(t.at("roots") == treebij::Json::array({6, 2, 4}));

    auto round = run_command(cli() + " map merge -i " + input.string() + " | " + cli() +
                             " map split");
    CHECK(round.exit_code == 0);
    CHECK(round.output == testutil::read_file(input));
}

TEST_CASE("map joyal and joyal-inv round trip")
{
    auto dir = testutil::scratch_dir();
    auto input = testutil::write_file(
        dir / "self_map.json",
        "{\"codomain_max\":4,\"domain_max\":4,\"values\":[2,1,1,2]}\n");
    auto forward = run_command(cli() + " map joyal -i " + input.string());
    CHECK(forward.exit_code == 0);
    auto round = run_command(cli() + " map joyal -i " + input.string() + " | " + cli() +
                             " map joyal-inv");
    CHECK(round.exit_code == 0);
    CHECK(round.output == testutil::read_file(input));

    // mismatched domain and codomain cannot feed the Joyal map
    auto bad = testutil::write_file(
        dir / "not_self_map.json",
        "{\"codomain_max\":3,\"domain_max\":4,\"values\":[2,1,1,2]}\n");
    CHECK(run_command(cli() + " map joyal -i " + bad.string() + " 2>/dev/null").exit_code ==
          2);
}

TEST_CASE("sample determinism and output files")
{
    auto a = run_command(cli() + " sample tree --n 9 --seed 17");
    auto b = run_command(cli() + " sample tree --n 9 --seed 17");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    treebij::Json t = treebij::parse_json(a.output);
    CHECK(t.at("labels").size() == 9);
    CHECK(t.at("roots").size() == 3);
    CHECK(a.output == treebij::canonical_dump(
                          treebij::to_json(treebij::sample_triply_rooted(9, 17))));

    auto fn = run_command(cli() + " sample fn --n 9 --seed 17");
    CHECK(fn.exit_code == 0);
    CHECK(fn.output ==
          treebij::canonical_dump(treebij::to_json(treebij::sample_function(9, 17))));

    auto dir = testutil::scratch_dir();
    auto out = dir / "sampled.json";
    CHECK(run_command(cli() + " sample fn --n 5 --seed 3 -o " + out.string()).exit_code == 0);
    CHECK(testutil::read_file(out) ==
          treebij::canonical_dump(treebij::to_json(treebij::sample_function(5, 3))));
}

TEST_CASE("round-trip pipeline over seeded corpus files")
{
    auto dir = testutil::scratch_dir();
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        int n = 1 + static_cast<int>(seed % 12);
        auto file = dir / ("fn_" + std::to_string(seed) + ".json");
        testutil::write_file(file, treebij::canonical_dump(treebij::to_json(
                                       treebij::sample_function(n, 100 + seed))));
        auto round = run_command(cli() + " map fn-to-tree -i " + file.string() + " | " +
                                 cli() + " map tree-to-fn");
        REQUIRE(round.exit_code == 0);
        REQUIRE(round.output == testutil::read_file(file));
    }
}
