#include "treebij/oracles.hpp"

#include <numeric>

#include "treebij/enumerate.hpp"
#include "treebij/phi.hpp"

namespace treebij {

void check_cap(int n, int cap)
{
    if (n > cap)
        throw Error(Kind::CapExceeded, "n = " + std::to_string(n) +
                                           " exceeds brute-force cap " + std::to_string(cap));
    if (n < 1) throw Error(Kind::BadInput, "n must be >= 1");
}

CountTable w_count_brute(int n, int cap)
{
    check_cap(n, cap);
    CountTable table;
    TreeEnumerator trees(LabelSet::range(n));
    while (auto tree = trees.next()) {
        for (Label r1 = 1; r1 <= n; ++r1) {
            RootedTree rooted(*tree, r1);
            for (Label r2 = 1; r2 <= n; ++r2)
                for (Label r3 = 1; r3 <= n; ++r3)
                    table[{rooted.depth(r2), rooted.depth(r3)}] += 1;
        }
    }
    return table;
}

CountTable f_count_brute(int n, int cap)
{
    check_cap(n, cap);
    CountTable table;
    FunctionEnumerator fns(LabelSet::range(n + 1), LabelSet::range(n));
    while (auto f = fns.next()) {
        OrbitReport report = orbit_report(*f);
        table[{static_cast<int>(report.orbit.size()) + 1,
               static_cast<int>(report.periodic.size())}] += 1;
    }
    return table;
}

namespace {

// Walks k-subsets of {0, ..., m-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int m)
{
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < m - (k - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

BigCount forest_count_brute(int n, const LabelSet& roots, int cap)
{
    check_cap(n, cap);
    if (roots.empty()) throw Error(Kind::EmptyLabelSet, "need at least one root");
    for (Label r : roots)
        if (r < 1 || r > n) throw Error(Kind::UnknownLabel, "root outside [n]");

    const int k = static_cast<int>(roots.size());
    std::vector<Edge> all_edges;
    for (Label a = 1; a <= n; ++a)
        for (Label b = a + 1; b <= n; ++b) all_edges.emplace_back(a, b);

    const int need = n - k;
    if (need == 0) return 1; // k = n: only the empty forest
    if (need < 0 || need > static_cast<int>(all_edges.size())) return 0;

    BigCount count = 0;
    std::vector<int> idx(static_cast<std::size_t>(need));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<int> parent(static_cast<std::size_t>(n + 1));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        bool acyclic = true;
        for (int e : idx) {
            const Edge& edge = all_edges[static_cast<std::size_t>(e)];
            int ra = find(edge.a), rb = find(edge.b);
            if (ra == rb) {
                acyclic = false;
                break;
            }
            parent[static_cast<std::size_t>(ra)] = rb;
        }
        if (!acyclic) continue;
        // n - k acyclic edges leave exactly k components; each must hold
        // exactly one designated root.
        std::vector<int> root_of_component;
        bool one_root_each = true;
        for (Label r : roots) {
            int c = find(r);
            if (std::find(root_of_component.begin(), root_of_component.end(), c) !=
                root_of_component.end()) {
                one_root_each = false;
                break;
            }
            root_of_component.push_back(c);
        }
        if (one_root_each) count += 1;
    } while (next_combination(idx, static_cast<int>(all_edges.size())));
    return count;
}

BasicCounts basic_counts_check(int n, int cap)
{
    check_cap(n, cap);
    BasicCounts out{0, 0, 0, false};

    TreeEnumerator trees(LabelSet::range(n));
    while (auto tree = trees.next()) {
        (void)*tree;
        out.rooted += n; // one rooted tree per (tree, root) choice
    }

    DoublyRootedEnumerator doubles(LabelSet::range(n));
    while (doubles.next()) out.doubly_rooted += 1;

    TriplyRootedEnumerator triples(n);
    while (triples.next()) out.triply_rooted += 1;

    auto u = [](int v) { return static_cast<unsigned long>(v); };
    out.ok = out.rooted == int_pow(n, u(n - 1)) && out.doubly_rooted == int_pow(n, u(n)) &&
             out.triply_rooted == int_pow(n, u(n + 1));
    return out;
}

} // namespace treebij
