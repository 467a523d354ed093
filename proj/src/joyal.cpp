#include "treebij/joyal.hpp"

#include <algorithm>
#include <deque>

namespace treebij {

LabelSet periodic_points(const FiniteFunction& f)
{
    const auto& dom = f.domain();
    const std::size_t n = dom.size();
    // Peel vertices of indegree zero; whatever survives lies on a cycle.
    std::vector<int> indegree(n, 0);
    for (Label v : f.values()) ++indegree[dom.index_of(v)];
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) queue.push_back(i);
    std::vector<bool> removed(n, false);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        removed[i] = true;
        std::size_t img = dom.index_of(f.values()[i]);
        if (--indegree[img] == 0) queue.push_back(img);
    }
    std::vector<Label> cyclic;
    for (std::size_t i = 0; i < n; ++i)
        if (!removed[i]) cyclic.push_back(dom[i]);
    return LabelSet(std::move(cyclic));
}

DoublyRootedTree joyal_forward(const FiniteFunction& f)
{
    if (f.domain() != f.codomain())
        throw Error(Kind::DomainCodomainMismatch, "Joyal needs a self-map");
    if (f.domain().empty())
        throw Error(Kind::EmptyTree, "Joyal needs a nonempty label set");

    LabelSet cyclic = periodic_points(f);
    std::vector<Label> spine; // w_i = f(c_i), ascending c
    spine.reserve(cyclic.size());
    for (Label c : cyclic) spine.push_back(f.apply(c));

    std::vector<Edge> edges;
    edges.reserve(f.domain().size() - 1);
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        edges.emplace_back(spine[i], spine[i + 1]);
    for (Label x : f.domain())
        if (!cyclic.contains(x)) edges.emplace_back(x, f.apply(x));

    return DoublyRootedTree(LabeledTree(f.domain(), std::move(edges)), spine.front(),
                            spine.back());
}

FiniteFunction joyal_inverse(const DoublyRootedTree& d)
{
    if (d.is_empty()) throw Error(Kind::EmptyTree, "no function for the empty tree");
    const LabeledTree& tree = d.tree();
    const LabelSet& labels = tree.labels();

    // Spine: the unique r1..r2 path.
    RootedTree at_r1(tree, d.r1());
    std::vector<Label> spine = at_r1.ancestors(d.r2());

    std::vector<Label> sorted_spine = spine;
    std::sort(sorted_spine.begin(), sorted_spine.end());

    std::vector<Label> values(labels.size());
    for (std::size_t i = 0; i < spine.size(); ++i)
        values[labels.index_of(sorted_spine[i])] = spine[i];

    // Off the spine, f(x) is x's neighbor toward the spine. Rooting at r1
    // already points every off-spine vertex at its parent on that walk.
    std::vector<bool> on_spine(labels.size(), false);
    for (Label w : spine) on_spine[labels.index_of(w)] = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (on_spine[i]) continue;
        values[i] = *at_r1.parent(labels[i]);
    }
    return FiniteFunction(labels, labels, std::move(values));
}

} // namespace treebij
