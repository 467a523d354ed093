#include "treebij/merge_split.hpp"

#include <algorithm>

namespace treebij {

RootedTriple::RootedTriple(DoublyRootedTree d, DoublyRootedTree dp, DoublyRootedTree dpp)
    : d_(std::move(d)), dp_(std::move(dp)), dpp_(std::move(dpp))
{
    if (d_.is_empty()) throw Error(Kind::EmptyTree, "D must be nonempty");
    if (!d_.labels().disjoint_from(dp_.labels()) ||
        !d_.labels().disjoint_from(dpp_.labels()) ||
        !dp_.labels().disjoint_from(dpp_.labels()))
        throw Error(Kind::OverlappingLabels, "blocks must be pairwise disjoint");
    ground_ = d_.labels().union_with(dp_.labels()).union_with(dpp_.labels());
}

std::string RootedTriple::canonical_key() const
{
    return d_.canonical_key() + "#" + dp_.canonical_key() + "#" + dpp_.canonical_key();
}

TriplyRootedTree merge(const RootedTriple& q)
{
    const auto& d = q.d();
    const auto& dp = q.dp();
    const auto& dpp = q.dpp();

    std::vector<Edge> edges = d.tree().edges();
    if (!dp.is_empty()) {
        const auto& e = dp.tree().edges();
        edges.insert(edges.end(), e.begin(), e.end());
        edges.emplace_back(d.r2(), dp.r1());
    }
    if (!dpp.is_empty()) {
        const auto& e = dpp.tree().edges();
        edges.insert(edges.end(), e.begin(), e.end());
        edges.emplace_back(d.r2(), dpp.r1());
    }

    Label r2 = dp.is_empty() ? d.r2() : dp.r2();
    Label r3 = dpp.is_empty() ? d.r2() : dpp.r2();
    return TriplyRootedTree(LabeledTree(q.ground(), std::move(edges)), d.r1(), r2, r3);
}

namespace {

// Component of `start` after deleting `cut` edges, as a doubly rooted tree.
DoublyRootedTree component_of(const LabeledTree& tree, Label start, Label other_root,
                              const std::vector<Edge>& cut)
{
    const auto& labels = tree.labels();
    auto adj = tree.adjacency();
    std::vector<bool> seen(labels.size(), false);
    std::vector<Label> stack{start};
    seen[labels.index_of(start)] = true;
    std::vector<Label> members;
    while (!stack.empty()) {
        Label v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (Label w : adj[labels.index_of(v)]) {
            if (std::find(cut.begin(), cut.end(), Edge(v, w)) != cut.end()) continue;
            std::size_t wi = labels.index_of(w);
            if (!seen[wi]) {
                seen[wi] = true;
                stack.push_back(w);
            }
        }
    }
    LabelSet member_set{members};
    std::vector<Edge> edges;
    for (const Edge& e : tree.edges()) {
        if (std::find(cut.begin(), cut.end(), e) != cut.end()) continue;
        if (member_set.contains(e.a) && member_set.contains(e.b)) edges.push_back(e);
    }
    return DoublyRootedTree(LabeledTree(std::move(member_set), std::move(edges)), start,
                            other_root);
}

} // namespace

RootedTriple split(const TriplyRootedTree& t)
{
    RootedTree rooted(t.tree(), t.r1());
    const Label r2 = t.r2();
    const Label r3 = t.r3();
    const Label w = rooted.lca(r2, r3);

    if (w == r2 && w == r3) {
        DoublyRootedTree d(t.tree(), t.r1(), w);
        return RootedTriple(std::move(d), DoublyRootedTree::make_empty(),
                            DoublyRootedTree::make_empty());
    }
    if (w == r2) { // w != r3
        Label y = rooted.child_toward(w, r3);
        std::vector<Edge> cut{Edge(w, y)};
        return RootedTriple(component_of(t.tree(), t.r1(), w, cut),
                            DoublyRootedTree::make_empty(),
                            component_of(t.tree(), y, r3, cut));
    }
    if (w == r3) { // w != r2
        Label x = rooted.child_toward(w, r2);
        std::vector<Edge> cut{Edge(w, x)};
        return RootedTriple(component_of(t.tree(), t.r1(), w, cut),
                            component_of(t.tree(), x, r2, cut),
                            DoublyRootedTree::make_empty());
    }
    Label x = rooted.child_toward(w, r2);
    Label y = rooted.child_toward(w, r3);
    std::vector<Edge> cut{Edge(w, x), Edge(w, y)};
    return RootedTriple(component_of(t.tree(), t.r1(), w, cut),
                        component_of(t.tree(), x, r2, cut),
                        component_of(t.tree(), y, r3, cut));
}

} // namespace treebij
