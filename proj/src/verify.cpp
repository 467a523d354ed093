#include "treebij/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "treebij/enumerate.hpp"
#include "treebij/identities.hpp"
#include "treebij/joyal.hpp"
#include "treebij/oracles.hpp"
#include "treebij/phi.hpp"
#include "treebij/prufer.hpp"
#include "treebij/sample.hpp"

namespace treebij {

namespace {

Json big_json(const BigCount& v) { return Json(to_string(v)); }

LabelSet set_of(std::vector<Label> v) { return LabelSet(std::move(v)); }

} // namespace

CheckResult verify_lacasse(int n_max)
{
    CheckResult result;
    result.name = "lacasse";
    for (int n = 1; n <= n_max; ++n) {
        LacasseWitness w = lacasse_check(n);
        ++result.checks_run;
        if (!w.ok) {
            result.fail("lacasse identity fails at n = " + std::to_string(n),
                        Json{{"n", n},
                             {"xi_scaled", big_json(w.xi_scaled)},
                             {"xi2_scaled", big_json(w.xi2_scaled)},
                             {"eq1_lhs", big_json(w.lhs_j_positive)},
                             {"n_pow_n_plus_1", big_json(w.n_pow_n_plus_1)}});
            return result;
        }
    }
    return result;
}

CheckResult verify_hurwitz(int n_max, int m_max, int trials, std::uint64_t seed)
{
    CheckResult result;
    result.name = "hurwitz";
    auto run_case = [&](const std::vector<long>& x, int n) {
        ++result.checks_run;
        if (!hurwitz_check(x, n)) {
            Json xs = Json::array();
            for (long v : x) xs.push_back(v);
            result.fail("hurwitz p=0 identity fails", Json{{"x", xs}, {"n", n}});
        }
    };

    for (int m = 1; m <= m_max && result.pass; ++m)
        for (int n = 0; n <= n_max && result.pass; ++n)
            run_case(std::vector<long>(static_cast<std::size_t>(m), 0), n);

    // Younsi's observations, in the n^n-scaled integer form.
    std::vector<long> zeros2(2, 0), zeros3(3, 0);
    for (int n = 1; n <= n_max && result.pass; ++n) {
        ++result.checks_run;
        if (abel_poly(zeros2, zeros2, n) != ExactRational(xi_scaled(n)))
            result.fail("A_n(0,0;0,0) != n^n xi(n)", Json{{"n", n}});
        ++result.checks_run;
        if (abel_poly(zeros3, zeros3, n) != ExactRational(xi2_scaled(n)))
            result.fail("A_n(0,0,0;0,0,0) != n^n xi2(n)", Json{{"n", n}});
    }

    SplitMix64 rng(seed);
    for (int t = 0; t < trials && result.pass; ++t) {
        int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m_max)));
        int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max + 1)));
        std::vector<long> x(static_cast<std::size_t>(m));
        for (long& v : x) v = static_cast<long>(rng.below(6));
        run_case(x, n);
    }
    return result;
}

CheckResult verify_counts(int n_max, int cap)
{
    CheckResult result;
    result.name = "counts";
    for (int n = 1; n <= n_max && result.pass; ++n) {
        BasicCounts counts = basic_counts_check(n, cap);
        result.checks_run += 3;
        if (!counts.ok) {
            result.fail("basic cardinalities mismatch at n = " + std::to_string(n),
                        Json{{"n", n},
                             {"rooted", big_json(counts.rooted)},
                             {"doubly_rooted", big_json(counts.doubly_rooted)},
                             {"triply_rooted", big_json(counts.triply_rooted)}});
            return result;
        }
        for (unsigned mask = 1; mask < (1u << n) && result.pass; ++mask) {
            std::vector<Label> roots;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) roots.push_back(b + 1);
            const int k = static_cast<int>(roots.size());
            LabelSet root_set(std::move(roots));
            BigCount got = forest_count_brute(n, root_set, cap);
            BigCount expected =
                (k == n) ? BigCount(1)
                         : BigCount(k) * int_pow(n, static_cast<unsigned long>(n - k - 1));
            ++result.checks_run;
            if (got != expected)
                result.fail("forest count mismatch",
                            Json{{"n", n},
                                 {"roots", Json(root_set.values())},
                                 {"got", big_json(got)},
                                 {"expected", big_json(expected)}});
        }
    }
    return result;
}

CheckResult verify_tables(int n_max, int cap)
{
    CheckResult result;
    result.name = "tables";
    for (int n = 1; n <= n_max && result.pass; ++n) {
        CountTable w_brute = w_count_brute(n, cap);
        CountTable f_brute = f_count_brute(n, cap);

        BigCount w_total = 0, f_total = 0;
        for (const auto& [key, value] : w_brute) w_total += value;
        for (const auto& [key, value] : f_brute) f_total += value;
        BigCount family = int_pow(n, static_cast<unsigned long>(n + 1));
        result.checks_run += 2;
        if (w_total != family || f_total != family) {
            result.fail("table totals are not n^{n+1}",
                        Json{{"n", n},
                             {"w_total", big_json(w_total)},
                             {"f_total", big_json(f_total)}});
            return result;
        }

        for (int i = 0; i < n && result.pass; ++i) {
            for (int j = 0; j < n; ++j) {
                BigCount closed = w_count(n, i, j);
                auto it = w_brute.find({i, j});
                BigCount brute = it == w_brute.end() ? BigCount(0) : it->second;
                ++result.checks_run;
                if (closed != brute) {
                    result.fail("w_count formula disagrees with enumeration",
                                Json{{"n", n},
                                     {"i", i},
                                     {"j", j},
                                     {"formula", big_json(closed)},
                                     {"brute", big_json(brute)}});
                    break;
                }
            }
        }
        for (int i = 2; i <= n + 1 && result.pass; ++i) {
            for (int j = 1; j <= n; ++j) {
                BigCount closed = f_count(n, i, j);
                auto it = f_brute.find({i, j});
                BigCount brute = it == f_brute.end() ? BigCount(0) : it->second;
                ++result.checks_run;
                if (closed != brute) {
                    result.fail("f_count formula disagrees with enumeration",
                                Json{{"n", n},
                                     {"i", i},
                                     {"j", j},
                                     {"formula", big_json(closed)},
                                     {"brute", big_json(brute)}});
                    break;
                }
                // index shift and the eq (7) symmetry, entrywise
                ++result.checks_run;
                if (closed != w_count(n, i - 2, j - 1)) {
                    result.fail("F/W index shift broken", Json{{"n", n}, {"i", i}, {"j", j}});
                    break;
                }
                if (i - 1 <= n) {
                    ++result.checks_run;
                    if (f_count(n, i, j) != f_count(n, j + 1, i - 1)) {
                        result.fail("|F_{n,i+1,j}| = |F_{n,j+1,i}| fails",
                                    Json{{"n", n}, {"i", i}, {"j", j}});
                        break;
                    }
                }
            }
        }
        // the brute tables must not hold entries off the expected rectangles
        for (const auto& [key, value] : w_brute) {
            if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n) {
                result.fail("w enumeration produced an out-of-range depth pair",
                            Json{{"n", n}, {"i", key.first}, {"j", key.second}});
                break;
            }
        }
        for (const auto& [key, value] : f_brute) {
            if (key.first < 2 || key.first > n + 1 || key.second < 1 || key.second > n) {
                result.fail("f enumeration produced an out-of-range pair",
                            Json{{"n", n}, {"i", key.first}, {"j", key.second}});
                break;
            }
        }
    }
    return result;
}

namespace {

std::vector<DoublyRootedTree> all_doubly_rooted_on(const LabelSet& labels)
{
    std::vector<DoublyRootedTree> out;
    DoublyRootedEnumerator cursor(labels);
    while (auto d = cursor.next()) out.push_back(std::move(*d));
    return out;
}

} // namespace

CheckResult verify_merge_split(int n_exhaustive, int n_random, int random_trials,
                               std::uint64_t seed)
{
    CheckResult result;
    result.name = "merge_split";
    for (int n = 1; n <= n_exhaustive && result.pass; ++n) {
        // T_n -> Q_n -> T_n
        TriplyRootedEnumerator triples(n);
        while (auto t = triples.next()) {
            ++result.checks_run;
            TriplyRootedTree back = merge(split(*t));
            if (!(back == *t)) {
                result.fail("merge(split(t)) != t",
                            Json{{"n", n}, {"tree", to_json(*t)}});
                break;
            }
        }
        if (!result.pass) break;

        // Q_n -> T_n -> Q_n, with injectivity and per-block-size counts
        std::unordered_set<std::string> images;
        std::map<std::pair<int, int>, BigCount> size_tally;
        BigCount q_total = 0;
        Composition3Enumerator comps(LabelSet::range(n));
        while (auto comp = comps.next()) {
            auto ds = all_doubly_rooted_on(comp->block_a);
            auto dps = all_doubly_rooted_on(comp->block_b);
            auto dpps = all_doubly_rooted_on(comp->block_c);
            for (const auto& d : ds) {
                for (const auto& dp : dps) {
                    for (const auto& dpp : dpps) {
                        RootedTriple q(d, dp, dpp);
                        TriplyRootedTree t = merge(q);
                        ++result.checks_run;
                        if (!(split(t) == q)) {
                            result.fail("split(merge(q)) != q",
                                        Json{{"n", n}, {"triple", to_json(q)}});
                            return result;
                        }
                        if (!images.insert(t.canonical_key()).second) {
                            result.fail("merge is not injective",
                                        Json{{"n", n}, {"triple", to_json(q)}});
                            return result;
                        }
                        size_tally[{static_cast<int>(comp->block_a.size()),
                                    static_cast<int>(comp->block_b.size())}] += 1;
                        q_total += 1;
                    }
                }
            }
        }
        ++result.checks_run;
        if (q_total != int_pow(n, static_cast<unsigned long>(n + 1))) {
            result.fail("|Q_n| != n^{n+1}", Json{{"n", n}, {"got", big_json(q_total)}});
            return result;
        }
        for (const auto& [sizes, tally] : size_tally) {
            ++result.checks_run;
            if (tally != lacasse_summand(n, sizes.first, sizes.second)) {
                result.fail("per-block-size count disagrees with the Lacasse summand",
                            Json{{"n", n}, {"j", sizes.first}, {"k", sizes.second}});
                return result;
            }
        }
    }

    SplitMix64 rng(seed);
    for (int n = 1; n <= n_random && result.pass; ++n) {
        for (int t = 0; t < random_trials && result.pass; ++t) {
            RootedTriple q = sample_rooted_triple(n, rng.next());
            ++result.checks_run;
            if (!(split(merge(q)) == q))
                result.fail("random split(merge(q)) != q", Json{{"n", n}});
            TriplyRootedTree tree = sample_triply_rooted(n, rng.next());
            ++result.checks_run;
            if (!(merge(split(tree)) == tree))
                result.fail("random merge(split(t)) != t", Json{{"n", n}});
        }
    }
    return result;
}

CheckResult verify_phi(int n_exhaustive, int n_random, int random_trials, std::uint64_t seed)
{
    CheckResult result;
    result.name = "phi";
    for (int n = 1; n <= n_exhaustive && result.pass; ++n) {
        std::unordered_set<std::string> images;
        FunctionEnumerator fns(LabelSet::range(n + 1), LabelSet::range(n));
        while (auto f = fns.next()) {
            TriplyRootedTree t = phi_forward(*f);
            ++result.checks_run;
            if (!(phi_inverse(t) == *f)) {
                result.fail("phi_inverse(phi_forward(f)) != f",
                            Json{{"n", n}, {"f", to_json(*f)}});
                return result;
            }
            if (!images.insert(t.canonical_key()).second) {
                result.fail("phi is not injective", Json{{"n", n}, {"f", to_json(*f)}});
                return result;
            }

            // Orbit of n+1 (sans n+1) = ancestors of r2; periodic points =
            // ancestors of r3, rooting at r1.
            OrbitReport report = orbit_report(*f);
            RootedTree rooted(t.tree(), t.r1());
            auto anc2 = rooted.ancestors(t.r2());
            auto anc3 = rooted.ancestors(t.r3());
            ++result.checks_run;
            if (set_of(report.orbit) != set_of(anc2)) {
                result.fail("orbit of n+1 != ancestors of second root",
                            Json{{"n", n}, {"f", to_json(*f)}});
                return result;
            }
            ++result.checks_run;
            if (report.periodic != set_of(anc3)) {
                result.fail("periodic points != ancestors of third root",
                            Json{{"n", n}, {"f", to_json(*f)}});
                return result;
            }
        }
        ++result.checks_run;
        if (images.size() !=
            static_cast<std::size_t>(int_pow(n, static_cast<unsigned long>(n + 1)).get_ui())) {
            result.fail("phi image does not exhaust T_n", Json{{"n", n}});
            return result;
        }

        TriplyRootedEnumerator triples(n);
        while (auto t = triples.next()) {
            ++result.checks_run;
            if (!(phi_forward(phi_inverse(*t)) == *t)) {
                result.fail("phi_forward(phi_inverse(t)) != t",
                            Json{{"n", n}, {"tree", to_json(*t)}});
                return result;
            }
        }
    }

    SplitMix64 rng(seed);
    for (int n = 1; n <= n_random && result.pass; ++n) {
        for (int t = 0; t < random_trials && result.pass; ++t) {
            FiniteFunction f = sample_function(n, rng.next());
            ++result.checks_run;
            if (!(phi_inverse(phi_forward(f)) == f))
                result.fail("random phi round trip failed", Json{{"n", n}});
            TriplyRootedTree tree = sample_triply_rooted(n, rng.next());
            ++result.checks_run;
            if (!(phi_forward(phi_inverse(tree)) == tree))
                result.fail("random inverse phi round trip failed", Json{{"n", n}});
        }
    }
    return result;
}

CheckResult verify_joyal(int n_max)
{
    CheckResult result;
    result.name = "joyal";
    for (int n = 1; n <= n_max && result.pass; ++n) {
        LabelSet labels = LabelSet::range(n);
        std::unordered_set<std::string> images;
        FunctionEnumerator fns(labels, labels);
        while (auto f = fns.next()) {
            DoublyRootedTree d = joyal_forward(*f);
            ++result.checks_run;
            if (!(joyal_inverse(d) == *f)) {
                result.fail("joyal_inverse(joyal_forward(f)) != f",
                            Json{{"n", n}, {"f", to_json(*f)}});
                return result;
            }
            images.insert(d.canonical_key());
        }
        if (n <= 4) {
            std::unordered_set<std::string> all_dn;
            DoublyRootedEnumerator doubles(labels);
            while (auto d = doubles.next()) all_dn.insert(d->canonical_key());
            ++result.checks_run;
            if (images != all_dn) {
                result.fail("joyal image is not all of D_n", Json{{"n", n}});
                return result;
            }
        }
    }
    return result;
}

CheckResult verify_streams(int n_max)
{
    CheckResult result;
    result.name = "streams";
    auto u = [](int v) { return static_cast<unsigned long>(v); };

    for (int n = 1; n <= n_max && result.pass; ++n) {
        LabelSet labels = LabelSet::range(n);

        BigCount trees = 0;
        std::unordered_set<std::string> tree_keys;
        TreeEnumerator tree_cursor(labels);
        while (auto t = tree_cursor.next()) {
            trees += 1;
            if (n <= 5) {
                tree_keys.insert(t->canonical_key());
                if (n >= 2) {
                    ++result.checks_run;
                    if (!(prufer_decode(prufer_encode(*t)) == *t)) {
                        result.fail("prufer decode(encode(t)) != t",
                                    Json{{"n", n}, {"tree", to_json(*t)}});
                        return result;
                    }
                }
            }
        }
        BigCount expected_trees = n == 1 ? BigCount(1) : int_pow(n, u(n - 2));
        ++result.checks_run;
        if (trees != expected_trees)
            result.fail("tree stream count != n^{n-2}",
                        Json{{"n", n}, {"got", big_json(trees)}});
        if (n <= 5) {
            ++result.checks_run;
            if (BigCount(static_cast<long>(tree_keys.size())) != expected_trees)
                result.fail("tree stream has duplicates", Json{{"n", n}});
        }

        // encode(decode(code)) = id over all codes
        if (n >= 2 && n <= 5) {
            std::vector<std::size_t> digits(u(n - 2), 0);
            bool more = true;
            while (more) {
                std::vector<Label> code;
                for (std::size_t d : digits) code.push_back(labels[d]);
                PruferCode pc(labels, code);
                ++result.checks_run;
                if (prufer_encode(prufer_decode(pc)).code != code) {
                    result.fail("prufer encode(decode(code)) != code", Json{{"n", n}});
                    return result;
                }
                more = odometer_step(digits, u(n));
            }
        }

        BigCount doubles = 0;
        std::unordered_set<std::string> double_keys;
        DoublyRootedEnumerator double_cursor(labels);
        while (auto d = double_cursor.next()) {
            doubles += 1;
            if (n <= 5) double_keys.insert(d->canonical_key());
        }
        ++result.checks_run;
        if (doubles != int_pow(n, u(n)))
            result.fail("doubly rooted stream count != n^n", Json{{"n", n}});
        if (n <= 5) {
            ++result.checks_run;
            if (BigCount(static_cast<long>(double_keys.size())) != int_pow(n, u(n)))
                result.fail("doubly rooted stream has duplicates", Json{{"n", n}});
        }

        BigCount triples = 0;
        std::unordered_set<std::string> triple_keys;
        TriplyRootedEnumerator triple_cursor(n);
        while (auto t = triple_cursor.next()) {
            triples += 1;
            if (n <= 5) triple_keys.insert(t->canonical_key());
        }
        ++result.checks_run;
        if (triples != int_pow(n, u(n + 1)))
            result.fail("triply rooted stream count != n^{n+1}", Json{{"n", n}});
        if (n <= 5) {
            ++result.checks_run;
            if (BigCount(static_cast<long>(triple_keys.size())) != int_pow(n, u(n + 1)))
                result.fail("triply rooted stream has duplicates", Json{{"n", n}});
        }

        BigCount fns = 0;
        std::unordered_set<std::string> fn_keys;
        FunctionEnumerator fn_cursor(LabelSet::range(n + 1), labels);
        while (auto f = fn_cursor.next()) {
            fns += 1;
            if (n <= 5) fn_keys.insert(f->canonical_key());
        }
        ++result.checks_run;
        if (fns != int_pow(n, u(n + 1)))
            result.fail("function stream count != n^{n+1}", Json{{"n", n}});
        if (n <= 5) {
            ++result.checks_run;
            if (BigCount(static_cast<long>(fn_keys.size())) != int_pow(n, u(n + 1)))
                result.fail("function stream has duplicates", Json{{"n", n}});
        }

        BigCount comps = 0;
        std::unordered_set<std::string> comp_keys;
        Composition3Enumerator comp_cursor(labels);
        while (auto c = comp_cursor.next()) {
            comps += 1;
            if (n <= 5) {
                std::string key;
                for (Label v : c->block_a) key += std::to_string(v) + ",";
                key += "|";
                for (Label v : c->block_b) key += std::to_string(v) + ",";
                key += "|";
                for (Label v : c->block_c) key += std::to_string(v) + ",";
                comp_keys.insert(key);
            }
        }
        BigCount expected_comps = int_pow(3, u(n)) - int_pow(2, u(n));
        ++result.checks_run;
        if (comps != expected_comps)
            result.fail("composition stream count != 3^n - 2^n",
                        Json{{"n", n}, {"got", big_json(comps)}});
        if (n <= 5) {
            ++result.checks_run;
            if (BigCount(static_cast<long>(comp_keys.size())) != expected_comps)
                result.fail("composition stream has duplicates", Json{{"n", n}});
        }
    }
    return result;
}

namespace {

LabeledTree figure1_tree()
{
    return LabeledTree(LabelSet::range(6),
                       {Edge(2, 4), Edge(4, 5), Edge(2, 6), Edge(3, 5), Edge(1, 5)});
}

DoublyRootedTree figure2_d()
{
    return DoublyRootedTree(
        LabeledTree(set_of({1, 3, 6, 8, 9, 12}),
                    {Edge(6, 12), Edge(6, 8), Edge(12, 9), Edge(8, 3), Edge(8, 1)}),
        6, 12);
}

DoublyRootedTree figure2_dp()
{
    return DoublyRootedTree(LabeledTree(set_of({2, 10}), {Edge(2, 10)}), 2, 2);
}

DoublyRootedTree figure2_dpp()
{
    return DoublyRootedTree(
        LabeledTree(set_of({4, 5, 7, 11}), {Edge(5, 4), Edge(4, 7), Edge(4, 11)}), 5, 4);
}

TriplyRootedTree figure2_merged()
{
    return TriplyRootedTree(
        LabeledTree(LabelSet::range(12),
                    {Edge(6, 12), Edge(6, 8), Edge(12, 9), Edge(8, 3), Edge(8, 1),
                     Edge(2, 10), Edge(5, 4), Edge(4, 7), Edge(4, 11), Edge(12, 2),
                     Edge(12, 5)}),
        6, 2, 4);
}

DoublyRootedTree figure3_d()
{
    return DoublyRootedTree(
        LabeledTree(set_of({1, 3, 6, 8, 9, 10}),
                    {Edge(6, 10), Edge(6, 8), Edge(10, 9), Edge(8, 3), Edge(8, 1)}),
        6, 10);
}

DoublyRootedTree figure3_dpp()
{
    return DoublyRootedTree(
        LabeledTree(set_of({2, 4, 5, 7}), {Edge(5, 4), Edge(4, 7), Edge(4, 2)}), 5, 4);
}

TriplyRootedTree figure3_merged()
{
    return TriplyRootedTree(
        LabeledTree(LabelSet::range(10),
                    {Edge(6, 10), Edge(6, 8), Edge(10, 9), Edge(8, 3), Edge(8, 1),
                     Edge(5, 4), Edge(4, 7), Edge(4, 2), Edge(10, 5)}),
        6, 10, 4);
}

FiniteFunction figure6_function()
{
    return FiniteFunction(LabelSet::range(13), LabelSet::range(12),
                          {8, 6, 8, 5, 4, 12, 4, 6, 12, 2, 4, 2, 3});
}

TriplyRootedTree figure6_tree()
{
    return TriplyRootedTree(
        LabeledTree(LabelSet::range(12),
                    {Edge(2, 10), Edge(2, 12), Edge(12, 6), Edge(12, 9), Edge(6, 8),
                     Edge(6, 5), Edge(8, 1), Edge(8, 3), Edge(5, 4), Edge(4, 7),
                     Edge(4, 11)}),
        2, 3, 4);
}

} // namespace

CheckResult verify_goldens()
{
    CheckResult result;
    result.name = "goldens";
    auto check = [&](bool ok, const std::string& what) {
        ++result.checks_run;
        if (!ok) result.fail(what, Json{{"case", what}});
    };

    // Figure 1 rooted-tree queries
    RootedTree fig1(figure1_tree(), 4);
    check(fig1.ancestors(1) == std::vector<Label>({4, 5, 1}), "fig1 ancestors(1)");
    check(fig1.ancestors(4) == std::vector<Label>({4}), "fig1 ancestors(root)");
    check(fig1.depth(3) == 2, "fig1 depth(3)");
    check(fig1.lca(1, 3) == 5, "fig1 lca(1,3)");
    check(fig1.lca(1, 6) == 4, "fig1 lca(1,6)");
    check(fig1.child_toward(4, 1) == 5, "fig1 child_toward(4,1)");

    // Figure 2: merge with both side blocks nonempty
    RootedTriple q2(figure2_d(), figure2_dp(), figure2_dpp());
    check(merge(q2) == figure2_merged(), "fig2 merge");
    check(split(figure2_merged()) == q2, "fig2 split");
    RootedTree fig2_rooted(figure2_merged().tree(), 6);
    check(fig2_rooted.child_toward(12, 4) == 5, "fig2 child_toward(12,4)");

    // Figure 3: merge with D' empty
    RootedTriple q3(figure3_d(), DoublyRootedTree::make_empty(), figure3_dpp());
    check(merge(q3) == figure3_merged(), "fig3 merge");
    check(split(figure3_merged()) == q3, "fig3 split");

    // Single-vertex degenerate merge
    DoublyRootedTree unit(LabeledTree(set_of({1}), {}), 1, 1);
    RootedTriple q1(unit, DoublyRootedTree::make_empty(), DoublyRootedTree::make_empty());
    TriplyRootedTree t1 = merge(q1);
    check(t1.r1() == 1 && t1.r2() == 1 && t1.r3() == 1 && t1.tree().size() == 1,
          "n=1 merge");
    check(split(t1) == q1, "n=1 split");

    // Figure 6: the embedded Joyal example on {4,5,7,11}
    FiniteFunction c2(set_of({4, 5, 7, 11}), set_of({4, 5, 7, 11}), {5, 4, 4, 4});
    DoublyRootedTree d6 = joyal_forward(c2);
    check(d6 == figure2_dpp(), "fig6 joyal forward");
    check(joyal_inverse(d6) == c2, "fig6 joyal inverse");

    // Figure 6: phi on the 13 -> 12 function
    FiniteFunction f6 = figure6_function();
    check(phi_forward(f6) == figure6_tree(), "fig6 phi forward");
    check(phi_inverse(figure6_tree()) == f6, "fig6 phi inverse");

    OrbitReport report = orbit_report(f6);
    check(report.orbit == std::vector<Label>({3, 8, 6, 12, 2}), "fig6 orbit of 13");
    check(report.periodic == set_of({2, 4, 5, 6, 12}), "fig6 periodic points");
    RootedTree fig6_rooted(figure6_tree().tree(), 2);
    check(fig6_rooted.ancestors(4) == std::vector<Label>({2, 12, 6, 5, 4}),
          "fig6 ancestors(4)");
    check(fig6_rooted.depth(4) == 4, "fig6 depth(4)");

    // n = 1 phi
    FiniteFunction f1(LabelSet::range(2), LabelSet::range(1), {1, 1});
    TriplyRootedTree t_f1 = phi_forward(f1);
    check(t_f1.tree().size() == 1 && t_f1.r1() == 1 && t_f1.r2() == 1 && t_f1.r3() == 1,
          "n=1 phi forward");
    check(phi_inverse(t_f1) == f1, "n=1 phi inverse");
    return result;
}

CheckResult verify_sampler()
{
    CheckResult result;
    result.name = "sampler";
    auto check = [&](bool ok, const std::string& what) {
        ++result.checks_run;
        if (!ok) result.fail(what, Json{{"case", what}});
    };

    check(sample_triply_rooted(5, 42) == sample_triply_rooted(5, 42),
          "tree sampler determinism");
    check(sample_function(5, 42) == sample_function(5, 42), "function sampler determinism");
    check(sample_triply_rooted(1, 7).tree().size() == 1, "n=1 tree sampler");
    check(sample_function(1, 7).values() == std::vector<Label>({1, 1}),
          "n=1 function sampler");

    std::unordered_set<std::string> distinct;
    for (std::uint64_t s = 0; s < 10; ++s)
        distinct.insert(sample_triply_rooted(5, s).canonical_key());
    check(distinct.size() >= 2, "distinct seeds vary");

    // 10 * 2^3 samples over the 8 elements of T_2; per-object counts must sit
    // within 5 sigma of the uniform mean 10 (sigma = sqrt(80 * 1/8 * 7/8)).
    std::map<std::string, int> tally;
    for (std::uint64_t s = 0; s < 80; ++s)
        tally[sample_triply_rooted(2, 1000 + s).canonical_key()] += 1;
    std::unordered_set<std::string> t2_keys;
    TriplyRootedEnumerator t2(2);
    while (auto t = t2.next()) t2_keys.insert(t->canonical_key());
    for (const auto& [key, count] : tally)
        check(t2_keys.count(key) == 1, "sampled object lies in T_2");
    for (const auto& key : t2_keys) {
        double deviation = tally[key] - 10.0;
        check(deviation * deviation <= 25.0 * 80.0 * (1.0 / 8.0) * (7.0 / 8.0),
              "T_2 frequency within 5 sigma");
    }
    return result;
}

std::vector<CheckResult> selftest(int cap)
{
    const int small = std::min(5, cap);
    std::vector<CheckResult> results;
    results.push_back(verify_lacasse(30));
    results.push_back(verify_hurwitz(8, 4, 100, 1));
    results.push_back(verify_counts(small, cap));
    results.push_back(verify_tables(std::min(6, cap), cap));
    results.push_back(verify_merge_split(small, 12, 3, 2));
    results.push_back(verify_phi(small, 12, 3, 3));
    results.push_back(verify_joyal(small));
    results.push_back(verify_streams(std::min(6, cap)));
    results.push_back(verify_goldens());
    results.push_back(verify_sampler());
    return results;
}

RootedTriple sample_rooted_triple(int n, std::uint64_t seed)
{
    if (n < 1) throw Error(Kind::EmptyGroundSet, "Q_n needs n >= 1");
    SplitMix64 rng(seed);
    // Rejection over block assignments keeps the composition uniform.
    std::vector<int> assign(static_cast<std::size_t>(n));
    while (true) {
        bool has_a = false;
        for (int& a : assign) {
            a = static_cast<int>(rng.below(3));
            if (a == 0) has_a = true;
        }
        if (has_a) break;
    }
    std::vector<Label> blocks[3];
    for (int i = 0; i < n; ++i) blocks[assign[static_cast<std::size_t>(i)]].push_back(i + 1);

    auto random_doubly_rooted = [&rng](std::vector<Label> members) {
        if (members.empty()) return DoublyRootedTree::make_empty();
        LabelSet labels(std::move(members));
        const auto size = static_cast<std::uint64_t>(labels.size());
        LabeledTree tree = [&] {
            if (labels.size() == 1) return LabeledTree(labels, {});
            std::vector<Label> code;
            for (std::size_t i = 0; i + 2 < labels.size(); ++i)
                code.push_back(labels[rng.below(size)]);
            return prufer_decode(PruferCode(labels, std::move(code)));
        }();
        Label r1 = labels[rng.below(size)];
        Label r2 = labels[rng.below(size)];
        return DoublyRootedTree(std::move(tree), r1, r2);
    };

    DoublyRootedTree d = random_doubly_rooted(std::move(blocks[0]));
    DoublyRootedTree dp = random_doubly_rooted(std::move(blocks[1]));
    DoublyRootedTree dpp = random_doubly_rooted(std::move(blocks[2]));
    return RootedTriple(std::move(d), std::move(dp), std::move(dpp));
}

} // namespace treebij
