#include "treebij/phi.hpp"

#include <algorithm>

#include "treebij/joyal.hpp"

namespace treebij {

namespace {

// Requires domain = [n+1], codomain = [n].
int checked_n(const FiniteFunction& f)
{
    const int n = static_cast<int>(f.codomain().size());
    if (n < 1 || f.codomain() != LabelSet::range(n) ||
        f.domain() != LabelSet::range(n + 1))
        throw Error(Kind::BadDomain, "expected a function [n+1] -> [n]");
    return n;
}

} // namespace

OrbitReport orbit_report(const FiniteFunction& f)
{
    const int n = checked_n(f);
    std::vector<bool> seen(static_cast<std::size_t>(n + 2), false);
    seen[static_cast<std::size_t>(n + 1)] = true;
    std::vector<Label> orbit;
    Label x = f.apply(n + 1);
    while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        orbit.push_back(x);
        x = f.apply(x);
    }

    // n+1 has indegree zero, so the periodic points of f are the periodic
    // points of the restriction to [n].
    std::vector<Label> values(f.values().begin(), f.values().end() - 1);
    FiniteFunction restricted(LabelSet::range(n), LabelSet::range(n), std::move(values));
    return OrbitReport{std::move(orbit), periodic_points(restricted)};
}

TriplyRootedTree phi_forward(const FiniteFunction& f)
{
    const int n = checked_n(f);

    // Longest path from n+1: stops when the image closes back onto the walk.
    std::vector<Label> walk{n + 1};
    std::vector<int> pos(static_cast<std::size_t>(n + 2), -1);
    pos[static_cast<std::size_t>(n + 1)] = 0;
    Label cur = f.apply(n + 1);
    while (pos[static_cast<std::size_t>(cur)] < 0) {
        pos[static_cast<std::size_t>(cur)] = static_cast<int>(walk.size());
        walk.push_back(cur);
        cur = f.apply(cur);
    }
    const Label u_k = walk.back();
    const Label u_1 = walk[1];
    const Label u_j = cur; // f(u_k), already on the walk

    // Component of n+1 in the functional digraph, via undirected reach.
    std::vector<std::vector<Label>> adj(static_cast<std::size_t>(n + 2));
    for (Label i = 1; i <= n + 1; ++i) {
        Label img = f.apply(i);
        adj[static_cast<std::size_t>(i)].push_back(img);
        adj[static_cast<std::size_t>(img)].push_back(i);
    }
    std::vector<bool> in_c1(static_cast<std::size_t>(n + 2), false);
    std::vector<Label> stack{n + 1};
    in_c1[static_cast<std::size_t>(n + 1)] = true;
    while (!stack.empty()) {
        Label v = stack.back();
        stack.pop_back();
        for (Label w : adj[static_cast<std::size_t>(v)]) {
            if (!in_c1[static_cast<std::size_t>(w)]) {
                in_c1[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }

    // H: arcs of C1 minus (u_k, u_j), minus the vertex n+1 and its arc.
    std::vector<Label> h_labels;
    std::vector<Edge> edges;
    for (Label i = 1; i <= n; ++i) {
        if (!in_c1[static_cast<std::size_t>(i)]) continue;
        h_labels.push_back(i);
        if (i != u_k) edges.emplace_back(i, f.apply(i));
    }

    // The rest maps through Joyal and hangs below u_j.
    std::vector<Label> rest;
    for (Label i = 1; i <= n; ++i)
        if (!in_c1[static_cast<std::size_t>(i)]) rest.push_back(i);

    if (rest.empty()) {
        LabeledTree tree(LabelSet(std::move(h_labels)), std::move(edges));
        return TriplyRootedTree(std::move(tree), u_k, u_1, u_j);
    }

    LabelSet rest_set(std::move(rest));
    std::vector<Label> rest_values;
    rest_values.reserve(rest_set.size());
    for (Label v : rest_set) rest_values.push_back(f.apply(v));
    DoublyRootedTree d =
        joyal_forward(FiniteFunction(rest_set, rest_set, std::move(rest_values)));

    const auto& d_edges = d.tree().edges();
    edges.insert(edges.end(), d_edges.begin(), d_edges.end());
    edges.emplace_back(u_j, d.r1());
    std::vector<Label> all_labels = h_labels;
    all_labels.insert(all_labels.end(), rest_set.begin(), rest_set.end());
    LabeledTree tree(LabelSet(std::move(all_labels)), std::move(edges));
    return TriplyRootedTree(std::move(tree), u_k, u_1, d.r2());
}

FiniteFunction phi_inverse(const TriplyRootedTree& t)
{
    const int n = static_cast<int>(t.labels().size());
    if (t.labels() != LabelSet::range(n))
        throw Error(Kind::BadDomain, "phi_inverse expects a tree on [n]");

    RootedTree rooted(t.tree(), t.r1());
    const Label u0 = rooted.lca(t.r2(), t.r3());

    std::vector<Label> values(static_cast<std::size_t>(n + 1), 0);
    auto set_value = [&](Label x, Label y) { values[static_cast<std::size_t>(x - 1)] = y; };

    if (u0 == t.r3()) {
        // No second component: every vertex points at its parent, the first
        // root closes the cycle through u0, and n+1 hangs below r2.
        for (Label v : t.labels()) {
            auto p = rooted.parent(v);
            set_value(v, p ? *p : u0);
        }
        set_value(n + 1, t.r2());
        return FiniteFunction(LabelSet::range(n + 1), LabelSet::range(n),
                              std::move(values));
    }

    const Label u1 = rooted.child_toward(u0, t.r3());
    std::vector<Label> t2_members = rooted.subtree_labels(u1);
    LabelSet t2_set(t2_members);

    std::vector<Edge> t2_edges;
    for (const Edge& e : t.tree().edges()) {
        if (e == Edge(u0, u1)) continue;
        if (t2_set.contains(e.a) && t2_set.contains(e.b)) t2_edges.push_back(e);
    }
    DoublyRootedTree d(LabeledTree(t2_set, std::move(t2_edges)), u1, t.r3());
    FiniteFunction c2 = joyal_inverse(d);
    for (std::size_t i = 0; i < t2_set.size(); ++i)
        set_value(t2_set[i], c2.values()[i]);

    for (Label v : t.labels()) {
        if (t2_set.contains(v)) continue;
        if (v == t.r1()) {
            set_value(v, u0);
        } else {
            set_value(v, *rooted.parent(v));
        }
    }
    set_value(n + 1, t.r2());
    return FiniteFunction(LabelSet::range(n + 1), LabelSet::range(n), std::move(values));
}

} // namespace treebij
