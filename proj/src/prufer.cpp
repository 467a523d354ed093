#include "treebij/prufer.hpp"

#include <map>
#include <queue>
#include <set>

namespace treebij {

PruferCode::PruferCode(LabelSet labels_in, std::vector<Label> code_in)
    : labels(std::move(labels_in)), code(std::move(code_in))
{
    if (labels.size() < 2)
        throw Error(Kind::InvalidCode, "label set must have at least 2 elements");
    if (code.size() != labels.size() - 2)
        throw Error(Kind::InvalidCode, "code length must be n-2");
    for (Label c : code)
        if (!labels.contains(c))
            throw Error(Kind::InvalidCode, "code entry " + std::to_string(c) +
                                               " outside label set");
}

LabeledTree prufer_decode(const PruferCode& p)
{
    const auto& labels = p.labels;
    std::map<Label, int> degree;
    for (Label v : labels) degree[v] = 1;
    for (Label c : p.code) ++degree[c];

    std::priority_queue<Label, std::vector<Label>, std::greater<Label>> leaves;
    for (Label v : labels)
        if (degree[v] == 1) leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(labels.size() - 1);
    for (Label c : p.code) {
        Label leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.push(c);
    }
    Label u = leaves.top();
    leaves.pop();
    Label v = leaves.top();
    edges.emplace_back(u, v);
    return LabeledTree(labels, std::move(edges));
}

PruferCode prufer_encode(const LabeledTree& t)
{
    if (t.size() < 2) throw Error(Kind::TooSmall, "Prufer code needs at least 2 vertices");
    const auto& labels = t.labels();
    std::map<Label, std::set<Label>> adj;
    for (const Edge& e : t.edges()) {
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }
    std::priority_queue<Label, std::vector<Label>, std::greater<Label>> leaves;
    for (Label v : labels)
        if (adj[v].size() == 1) leaves.push(v);

    std::vector<Label> code;
    code.reserve(labels.size() - 2);
    for (std::size_t step = 0; step + 2 < labels.size(); ++step) {
        Label leaf = leaves.top();
        leaves.pop();
        Label nbr = *adj[leaf].begin();
        code.push_back(nbr);
        adj[nbr].erase(leaf);
        adj.erase(leaf);
        if (adj[nbr].size() == 1) leaves.push(nbr);
    }
    return PruferCode(labels, std::move(code));
}

} // namespace treebij
