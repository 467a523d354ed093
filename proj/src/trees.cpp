#include "treebij/trees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace treebij {

namespace {

// Union-find over label positions.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // false if already joined
    bool unite(int a, int b)
    {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

} // namespace

LabeledTree::LabeledTree(LabelSet labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges))
{
    for (const Edge& e : edges_) {
        if (!labels_.contains(e.a))
            throw Error(Kind::UnknownLabel, "edge endpoint " + std::to_string(e.a));
        if (!labels_.contains(e.b))
            throw Error(Kind::UnknownLabel, "edge endpoint " + std::to_string(e.b));
    }
    const std::size_t n = labels_.size();
    const std::size_t expected = n == 0 ? 0 : n - 1;
    if (edges_.size() != expected)
        throw Error(Kind::WrongEdgeCount, std::to_string(n) + " labels need " +
                                              std::to_string(expected) + " edges, got " +
                                              std::to_string(edges_.size()));
    DisjointSets ds(n);
    for (const Edge& e : edges_) {
        int ia = static_cast<int>(labels_.index_of(e.a));
        int ib = static_cast<int>(labels_.index_of(e.b));
        if (ia == ib || !ds.unite(ia, ib))
            throw Error(Kind::HasCycle, "edge {" + std::to_string(e.a) + "," +
                                            std::to_string(e.b) + "} closes a cycle");
    }
    // n-1 acyclic edges always connect, but the invariant is cheap to state.
    if (n > 0) {
        int rep = ds.find(0);
        for (std::size_t i = 1; i < n; ++i)
            if (ds.find(static_cast<int>(i)) != rep)
                throw Error(Kind::NotConnected, "tree is not connected");
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::vector<Label>> LabeledTree::adjacency() const
{
    std::vector<std::vector<Label>> adj(labels_.size());
    for (const Edge& e : edges_) {
        adj[labels_.index_of(e.a)].push_back(e.b);
        adj[labels_.index_of(e.b)].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::string LabeledTree::canonical_key() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out << ' ';
        out << labels_[i];
    }
    out << '|';
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ' ';
        out << edges_[i].a << '-' << edges_[i].b;
    }
    return out.str();
}

LabeledTree validate_tree(LabelSet labels, std::vector<Edge> edges)
{
    return LabeledTree(std::move(labels), std::move(edges));
}

RootedTree::RootedTree(LabeledTree tree, Label root) : tree_(std::move(tree)), root_(root)
{
    if (!tree_.labels().contains(root_))
        throw Error(Kind::UnknownLabel, "root " + std::to_string(root_) + " not in tree");
    const std::size_t n = tree_.size();
    parent_.assign(n, -1);
    depth_.assign(n, -1);
    auto adj = tree_.adjacency();
    const auto& labels = tree_.labels();
    std::vector<std::size_t> queue;
    queue.reserve(n);
    std::size_t ri = labels.index_of(root_);
    depth_[ri] = 0;
    queue.push_back(ri);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t vi = queue[head];
        for (Label w : adj[vi]) {
            std::size_t wi = labels.index_of(w);
            if (depth_[wi] < 0) {
                depth_[wi] = depth_[vi] + 1;
                parent_[wi] = static_cast<int>(vi);
                queue.push_back(wi);
            }
        }
    }
}

std::vector<Label> RootedTree::ancestors(Label v) const
{
    std::size_t vi = tree_.labels().index_of(v);
    std::vector<Label> path;
    int cur = static_cast<int>(vi);
    while (cur >= 0) {
        path.push_back(tree_.labels()[static_cast<std::size_t>(cur)]);
        cur = parent_[static_cast<std::size_t>(cur)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int RootedTree::depth(Label v) const
{
    return depth_[tree_.labels().index_of(v)];
}

Label RootedTree::lca(Label u, Label v) const
{
    auto pu = ancestors(u);
    auto pv = ancestors(v);
    std::size_t limit = std::min(pu.size(), pv.size());
    std::size_t i = 0;
    while (i < limit && pu[i] == pv[i]) ++i;
    return pu[i - 1];
}

std::optional<Label> RootedTree::parent(Label v) const
{
    int p = parent_[tree_.labels().index_of(v)];
    if (p < 0) return std::nullopt;
    return tree_.labels()[static_cast<std::size_t>(p)];
}

Label RootedTree::child_toward(Label w, Label v) const
{
    if (!tree_.labels().contains(w))
        throw Error(Kind::UnknownLabel, "vertex " + std::to_string(w));
    // Walk v's ancestor chain until the step out of w; fails unless v is a
    // strict descendant of w.
    if (v == w) throw Error(Kind::NotAStrictDescendant, std::to_string(v) + " equals " +
                                                            std::to_string(w));
    Label cur = v;
    while (true) {
        auto p = parent(cur);
        if (!p) throw Error(Kind::NotAStrictDescendant,
                            std::to_string(v) + " is not below " + std::to_string(w));
        if (*p == w) return cur;
        cur = *p;
    }
}

std::vector<Label> RootedTree::subtree_labels(Label v) const
{
    std::size_t vi = tree_.labels().index_of(v);
    auto adj = tree_.adjacency();
    const auto& labels = tree_.labels();
    std::vector<Label> out;
    std::vector<std::size_t> stack{vi};
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        out.push_back(labels[cur]);
        for (Label w : adj[cur]) {
            std::size_t wi = labels.index_of(w);
            if (parent_[wi] == static_cast<int>(cur)) stack.push_back(wi);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DoublyRootedTree::DoublyRootedTree(LabeledTree tree, Label r1, Label r2)
    : tree_(std::move(tree)), empty_(false), r1_(r1), r2_(r2)
{
    if (tree_.empty())
        throw Error(Kind::EmptyTree, "use make_empty() for the empty doubly rooted tree");
    if (!tree_.labels().contains(r1_))
        throw Error(Kind::UnknownLabel, "first root " + std::to_string(r1_));
    if (!tree_.labels().contains(r2_))
        throw Error(Kind::UnknownLabel, "second root " + std::to_string(r2_));
}

std::string DoublyRootedTree::canonical_key() const
{
    if (empty_) return "empty";
    return tree_.canonical_key() + "|" + std::to_string(r1_) + "," + std::to_string(r2_);
}

TriplyRootedTree::TriplyRootedTree(LabeledTree tree, Label r1, Label r2, Label r3)
    : tree_(std::move(tree)), r1_(r1), r2_(r2), r3_(r3)
{
    if (tree_.empty()) throw Error(Kind::EmptyTree, "triply rooted tree must be nonempty");
    for (Label r : {r1_, r2_, r3_})
        if (!tree_.labels().contains(r))
            throw Error(Kind::UnknownLabel, "root " + std::to_string(r));
}

std::string TriplyRootedTree::canonical_key() const
{
    return tree_.canonical_key() + "|" + std::to_string(r1_) + "," + std::to_string(r2_) +
           "," + std::to_string(r3_);
}

FiniteFunction::FiniteFunction(LabelSet domain, LabelSet codomain, std::vector<Label> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values))
{
    if (values_.size() != domain_.size())
        throw Error(Kind::BadInput, "value table size " + std::to_string(values_.size()) +
                                        " != domain size " + std::to_string(domain_.size()));
    for (Label v : values_)
        if (!codomain_.contains(v))
            throw Error(Kind::UnknownLabel, "value " + std::to_string(v) + " not in codomain");
}

std::string FiniteFunction::canonical_key() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < domain_.size(); ++i)
        out << domain_[i] << "->" << values_[i] << ';';
    return out.str();
}

} // namespace treebij
