#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treebij/labels.hpp"

namespace treebij {

// Unordered label pair, stored (min, max).
struct Edge {
    Label a;
    Label b;

    Edge(Label u, Label v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A free (unrooted) tree over an arbitrary finite set of positive labels.
// Connectivity and acyclicity are validated on construction; the edge list is
// kept canonical (each pair ascending, list sorted lexicographically).
class LabeledTree {
public:
    LabeledTree() = default; // empty tree

    // Throws UnknownLabel / WrongEdgeCount / HasCycle / NotConnected.
    LabeledTree(LabelSet labels, std::vector<Edge> edges);

    const LabelSet& labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    // Neighbor lists indexed by label position, ascending within each list.
    std::vector<std::vector<Label>> adjacency() const;

    // "labels|edge,edge,..." — stable key for hashing and golden comparisons.
    std::string canonical_key() const;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

private:
    LabelSet labels_;
    std::vector<Edge> edges_;
};

// A LabeledTree viewed from a root. Parent and depth tables are computed once
// at construction; the underlying tree is shared by value (trees here are
// desk-scale). Rooting the same tree elsewhere is just another RootedTree.
class RootedTree {
public:
    RootedTree(LabeledTree tree, Label root);

    const LabeledTree& tree() const { return tree_; }
    Label root() const { return root_; }

    // Path from the root to v, inclusive; every vertex is its own ancestor.
    std::vector<Label> ancestors(Label v) const;

    // Number of edges on the root-to-v path.
    int depth(Label v) const;

    // Deepest common ancestor, found by comparing ancestor paths.
    Label lca(Label u, Label v) const;

    // The unique child c of w with v in c's subtree; v must be a strict
    // descendant of w.
    Label child_toward(Label w, Label v) const;

    // Parent label, or nullopt for the root.
    std::optional<Label> parent(Label v) const;

    // All labels in v's subtree (v included).
    std::vector<Label> subtree_labels(Label v) const;

private:
    LabeledTree tree_;
    Label root_;
    std::vector<int> parent_;   // index into labels, -1 for root
    std::vector<int> depth_;
};

// Labeled tree plus an ordered pair of distinguished vertices (may coincide).
// The empty variant is a distinct state, not a sentinel-rooted tree.
class DoublyRootedTree {
public:
    DoublyRootedTree() : empty_(true), r1_(0), r2_(0) {}

    DoublyRootedTree(LabeledTree tree, Label r1, Label r2);

    static DoublyRootedTree make_empty() { return DoublyRootedTree(); }

    bool is_empty() const { return empty_; }
    const LabeledTree& tree() const { require_nonempty(); return tree_; }
    Label r1() const { require_nonempty(); return r1_; }
    Label r2() const { require_nonempty(); return r2_; }
    const LabelSet& labels() const { return tree_.labels(); }

    std::string canonical_key() const;

    friend bool operator==(const DoublyRootedTree&, const DoublyRootedTree&) = default;

private:
    void require_nonempty() const
    {
        if (empty_) throw Error(Kind::EmptyTree, "empty doubly rooted tree");
    }

    LabeledTree tree_;
    bool empty_;
    Label r1_;
    Label r2_;
};

// Labeled tree plus an ordered triple of distinguished vertices; all five
// coincidence patterns of (r1, r2, r3) are allowed. Never empty.
class TriplyRootedTree {
public:
    TriplyRootedTree(LabeledTree tree, Label r1, Label r2, Label r3);

    const LabeledTree& tree() const { return tree_; }
    Label r1() const { return r1_; }
    Label r2() const { return r2_; }
    Label r3() const { return r3_; }
    const LabelSet& labels() const { return tree_.labels(); }

    std::string canonical_key() const;

    friend bool operator==(const TriplyRootedTree&, const TriplyRootedTree&) = default;

private:
    LabeledTree tree_;
    Label r1_;
    Label r2_;
    Label r3_;
};

// Total map from a finite label set into a finite label set.
class FiniteFunction {
public:
    // values[i] = f(domain[i]); every value must lie in the codomain.
    FiniteFunction(LabelSet domain, LabelSet codomain, std::vector<Label> values);

    const LabelSet& domain() const { return domain_; }
    const LabelSet& codomain() const { return codomain_; }
    const std::vector<Label>& values() const { return values_; }

    Label apply(Label x) const { return values_[domain_.index_of(x)]; }

    std::string canonical_key() const;

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
    LabelSet domain_;
    LabelSet codomain_;
    std::vector<Label> values_;
};

// Convenience used by the core algorithms and errors alike.
LabeledTree validate_tree(LabelSet labels, std::vector<Edge> edges);

} // namespace treebij
