// treebij — exact bijections and counting identities for triply rooted trees.
//
// Subcommands: verify {lacasse|hurwitz|counts|tables}, table {w|f},
// map {fn-to-tree|tree-to-fn|merge|split|joyal|joyal-inv}, sample {tree|fn},
// selftest. Machine-readable output goes to stdout, diagnostics to stderr.
// Exit codes: 0 = success/pass, 1 = verification failure, 2 = usage or input
// error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "treebij/identities.hpp"
#include "treebij/joyal.hpp"
#include "treebij/json_io.hpp"
#include "treebij/merge_split.hpp"
#include "treebij/oracles.hpp"
#include "treebij/phi.hpp"
#include "treebij/sample.hpp"
#include "treebij/verify.hpp"

namespace {

using treebij::CheckResult;
using treebij::Json;

struct RunReport {
    std::string command;
    bool pass = true;
    long checks_run = 0;
    Json first_failure; // null unless failed
    long elapsed_ms = 0;

    Json to_json() const
    {
        Json j{{"command", command},
               {"status", pass ? "pass" : "fail"},
               {"checks_run", checks_run},
               {"elapsed_ms", elapsed_ms}};
        if (!pass) j["first_failure"] = first_failure;
        return j;
    }
};

class Timer {
public:
    long elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw treebij::Error(treebij::Kind::BadInput, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw treebij::Error(treebij::Kind::BadInput, "cannot open " + path);
    out << text;
}

int report_results(const std::string& command, const std::vector<CheckResult>& results,
                   const Timer& timer)
{
    RunReport report;
    report.command = command;
    for (const CheckResult& r : results) {
        report.checks_run += r.checks_run;
        std::cerr << command << ": " << r.name << ": " << r.checks_run << " checks, "
                  << (r.pass ? "pass" : "FAIL") << "\n";
        if (!r.pass) {
            std::cerr << "  first counterexample: " << r.first_failure << "\n"
                      << "  witness: " << r.witness.dump() << "\n";
            if (report.pass) {
                report.pass = false;
                report.first_failure =
                    Json{{"suite", r.name}, {"message", r.first_failure}, {"witness", r.witness}};
            }
        }
    }
    report.elapsed_ms = timer.elapsed_ms();
    std::cout << treebij::canonical_dump(report.to_json());
    return report.pass ? 0 : 1;
}

std::string table_csv(const treebij::CountTable& table)
{
    std::ostringstream out;
    out << "i,j,count\n";
    for (const auto& [key, value] : table)
        out << key.first << ',' << key.second << ',' << treebij::to_string(value) << '\n';
    return out.str();
}

Json table_json(const std::string& kind, int n, const treebij::CountTable& table)
{
    Json entries = Json::array();
    for (const auto& [key, value] : table)
        entries.push_back(Json{{"i", key.first},
                               {"j", key.second},
                               {"count", treebij::to_string(value)}});
    return Json{{"kind", kind}, {"n", n}, {"entries", entries}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact bijections and counting identities for triply rooted trees"};
    app.require_subcommand(1);

    // default cap, overridable by TREEBIJ_CAP and then by --cap
    int cap = treebij::kDefaultBruteCap;
    if (const char* env = std::getenv("TREEBIJ_CAP")) {
        try {
            cap = std::stoi(env);
        } catch (...) {
            std::cerr << "invalid TREEBIJ_CAP: " << env << "\n";
            return 2;
        }
    }

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    verify->require_subcommand(1);
    int lacasse_n_max = 30;
    auto* v_lacasse = verify->add_subcommand("lacasse", "xi2(n) = xi(n) + n, exactly");
    v_lacasse->add_option("--n-max", lacasse_n_max)->check(CLI::PositiveNumber);

    int hur_n_max = 8, hur_m_max = 4, hur_trials = 100;
    std::uint64_t hur_seed = 1;
    auto* v_hurwitz = verify->add_subcommand("hurwitz", "Abel polynomial p = 0 reduction");
    v_hurwitz->add_option("--n-max", hur_n_max)->check(CLI::NonNegativeNumber);
    v_hurwitz->add_option("--m-max", hur_m_max)->check(CLI::PositiveNumber);
    v_hurwitz->add_option("--trials", hur_trials)->check(CLI::NonNegativeNumber);
    v_hurwitz->add_option("--seed", hur_seed);

    int counts_n_max = 5;
    auto* v_counts = verify->add_subcommand("counts", "|R_n|, |D_n|, |T_n| and forest counts");
    v_counts->add_option("--n-max", counts_n_max)->check(CLI::PositiveNumber);
    v_counts->add_option("--cap", cap)->check(CLI::PositiveNumber);

    int tables_n_max = 6;
    auto* v_tables = verify->add_subcommand("tables", "W and F tables against brute force");
    v_tables->add_option("--n-max", tables_n_max)->check(CLI::PositiveNumber);
    v_tables->add_option("--cap", cap)->check(CLI::PositiveNumber);

    // table
    auto* table = app.add_subcommand("table", "emit a W or F count table");
    table->require_subcommand(1);
    int table_n = 0;
    std::string table_format = "csv";
    std::string table_out;
    auto add_table_opts = [&](CLI::App* sub) {
        sub->add_option("--n", table_n, "table size")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", table_out);
    };
    auto* table_w = table->add_subcommand("w", "triply rooted trees by root depths");
    add_table_opts(table_w);
    auto* table_f = table->add_subcommand("f", "functions by orbit size and periodic points");
    add_table_opts(table_f);

    // map
    auto* map = app.add_subcommand("map", "apply a bijection to a JSON object");
    map->require_subcommand(1);
    std::string map_in, map_out;
    std::vector<CLI::App*> map_subs;
    for (const char* name : {"fn-to-tree", "tree-to-fn", "merge", "split", "joyal", "joyal-inv"}) {
        auto* sub = map->add_subcommand(name);
        sub->add_option("-i,--input", map_in, "input file (default stdin)");
        sub->add_option("-o,--output", map_out, "output file (default stdout)");
        map_subs.push_back(sub);
    }

    // sample
    auto* sample = app.add_subcommand("sample", "seeded uniform sampling");
    sample->require_subcommand(1);
    int sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    auto add_sample_opts = [&](CLI::App* sub) {
        sub->add_option("--n", sample_n)->required()->check(CLI::PositiveNumber);
        sub->add_option("--seed", sample_seed, "decimal 64-bit seed");
        sub->add_option("-o,--output", sample_out);
    };
    auto* sample_tree = sample->add_subcommand("tree", "uniform triply rooted tree on [n]");
    add_sample_opts(sample_tree);
    auto* sample_fn = sample->add_subcommand("fn", "uniform function [n+1] -> [n]");
    add_sample_opts(sample_fn);

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "full invariant suite");
    selftest_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Timer timer;
        if (v_lacasse->parsed())
            return report_results("verify lacasse", {treebij::verify_lacasse(lacasse_n_max)},
                                  timer);
        if (v_hurwitz->parsed())
            return report_results(
                "verify hurwitz",
                {treebij::verify_hurwitz(hur_n_max, hur_m_max, hur_trials, hur_seed)}, timer);
        if (v_counts->parsed())
            return report_results("verify counts",
                                  {treebij::verify_counts(counts_n_max, cap)}, timer);
        if (v_tables->parsed())
            return report_results("verify tables",
                                  {treebij::verify_tables(tables_n_max, cap)}, timer);
        if (selftest_cmd->parsed())
            return report_results("selftest", treebij::selftest(cap), timer);

        if (table_w->parsed() || table_f->parsed()) {
            treebij::CountTable t =
                table_w->parsed() ? treebij::w_table(table_n) : treebij::f_table(table_n);
            if (table_format == "csv")
                write_output(table_out, table_csv(t));
            else
                write_output(table_out, treebij::canonical_dump(table_json(
                                            table_w->parsed() ? "w" : "f", table_n, t)));
            return 0;
        }

        if (map->parsed()) {
            const Json in = treebij::parse_json(read_input(map_in));
            Json out;
            if (map_subs[0]->parsed())
                out = treebij::to_json(treebij::phi_forward(treebij::function_from_json(in)));
            else if (map_subs[1]->parsed())
                out = treebij::to_json(treebij::phi_inverse(treebij::triply_from_json(in)));
            else if (map_subs[2]->parsed())
                out = treebij::to_json(treebij::merge(treebij::triple_from_json(in)));
            else if (map_subs[3]->parsed())
                out = treebij::to_json(treebij::split(treebij::triply_from_json(in)));
            else if (map_subs[4]->parsed())
                out = treebij::to_json(treebij::joyal_forward(treebij::function_from_json(in)));
            else
                out = treebij::to_json(treebij::joyal_inverse(treebij::doubly_from_json(in)));
            write_output(map_out, treebij::canonical_dump(out));
            return 0;
        }

        if (sample_tree->parsed()) {
            write_output(sample_out, treebij::canonical_dump(treebij::to_json(
                                         treebij::sample_triply_rooted(sample_n, sample_seed))));
            return 0;
        }
        if (sample_fn->parsed()) {
            write_output(sample_out, treebij::canonical_dump(treebij::to_json(
                                         treebij::sample_function(sample_n, sample_seed))));
            return 0;
        }
    } catch (const treebij::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
