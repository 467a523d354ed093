// Acceptance gate: runs each shipped guarantee end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails. The
// CLI binary path arrives through the TREEBIJ_CLI_PATH compile definition.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "treebij/identities.hpp"
#include "treebij/json_io.hpp"
#include "treebij/sample.hpp"
#include "treebij/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string description;
    long budget_ms;
};

int failures = 0;

void run(const Criterion& criterion, const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (ms >= criterion.budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("budget ") +
                  std::to_string(criterion.budget_ms) + " ms exceeded";
    }
    std::printf("%s  criterion %d: %s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.number, criterion.description.c_str(), ms,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool all_pass(const std::vector<treebij::CheckResult>& results, std::string& detail)
{
    for (const auto& r : results) {
        if (!r.pass) {
            detail = r.name + ": " + r.first_failure;
            return false;
        }
    }
    return true;
}

std::string cli() { return std::string(TREEBIJ_CLI_PATH); }

} // namespace

int main()
{
    using treebij::CheckResult;

    run({1, "Lacasse identity, exact integers, n <= 30", 1000}, [](std::string& detail) {
        auto result = testutil::run_command(cli() + " verify lacasse --n-max 30 2>/dev/null");
        if (result.exit_code != 0) {
            detail = "CLI exit code " + std::to_string(result.exit_code);
            return false;
        }
        treebij::LacasseWitness two = treebij::lacasse_check(2);
        if (two.xi_scaled != 10 || two.xi2_scaled != 18 || two.lhs_j_positive != 8) {
            detail = "n = 2 witness mismatch";
            return false;
        }
        return all_pass({treebij::verify_lacasse(30)}, detail);
    });

    run({2, "Hurwitz p = 0 identity, m <= 4, n <= 8, 100 seeded x-vectors", 5000},
        [](std::string& detail) {
            return all_pass({treebij::verify_hurwitz(8, 4, 100, 1)}, detail);
        });

    run({3, "merge/split bijection exhaustive to n = 5 plus worked merges", 30000},
        [](std::string& detail) {
            return all_pass({treebij::verify_merge_split(5, 12, 3, 2),
                             treebij::verify_goldens()},
                            detail);
        });

    run({4, "phi bijection exhaustive to n = 5 with orbit properties", 60000},
        [](std::string& detail) {
            return all_pass({treebij::verify_phi(5, 12, 3, 3), treebij::verify_goldens()},
                            detail);
        });

    run({5, "W and F tables equal brute force to n = 6 with totals and symmetry", 300000},
        [](std::string& detail) { return all_pass({treebij::verify_tables(6, 6)}, detail); });

    run({6, "cardinalities n^{n-1}, n^n, n^{n+1} and forest counts to n = 5", 60000},
        [](std::string& detail) { return all_pass({treebij::verify_counts(5, 6)}, detail); });

    run({7, "CLI round trip byte-identical over a 50-file seeded corpus", 5000},
        [](std::string& detail) {
            auto dir = testutil::scratch_dir() / "corpus";
            std::filesystem::create_directories(dir);
            for (int i = 0; i < 50; ++i) {
                int n = 1 + (i % 12);
                auto file = dir / ("fn_" + std::to_string(i) + ".json");
                testutil::write_file(
                    file, treebij::canonical_dump(treebij::to_json(
                              treebij::sample_function(n, 1000 + static_cast<std::uint64_t>(i)))));
                auto round = testutil::run_command(cli() + " map fn-to-tree -i " +
                                                   file.string() + " | " + cli() +
                                                   " map tree-to-fn");
                if (round.exit_code != 0) {
                    detail = "pipeline exit " + std::to_string(round.exit_code) + " on file " +
                             std::to_string(i);
                    return false;
                }
                if (round.output != testutil::read_file(file)) {
                    detail = "bytes differ on file " + std::to_string(i);
                    return false;
                }
            }
            return true;
        });

    if (failures == 0) {
        std::printf("acceptance: all 7 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
