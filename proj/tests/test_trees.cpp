#include <doctest.h>

#include <algorithm>
#include <functional>

#include "treebij/enumerate.hpp"
#include "treebij/sample.hpp"
#include "treebij/trees.hpp"

using namespace treebij;

namespace {

LabelSet set_of(std::vector<Label> v) { return LabelSet(std::move(v)); }

// The rooted tree on [6] used for the ancestor/lca worked examples.
LabeledTree six_vertex_tree()
{
    return LabeledTree(LabelSet::range(6),
                       {Edge(2, 4), Edge(4, 5), Edge(2, 6), Edge(3, 5), Edge(1, 5)});
}

Kind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return Kind::BadInput;
}

} // namespace

TEST_CASE("LabelSet basics")
{
    LabelSet s({5, 1, 3});
    CHECK(s.size() == 3);
    CHECK(s[0] == 1);
    CHECK(s[2] == 5);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.index_of(5) == 2);
    CHECK(LabelSet().empty());
    CHECK(LabelSet::range(3) == LabelSet({1, 2, 3}));

    CHECK(kind_of([] { LabelSet({1, 1}); }) == Kind::InvalidLabelSet);
    CHECK(kind_of([] { LabelSet({0, 2}); }) == Kind::InvalidLabelSet);
    CHECK(kind_of([&] { s.index_of(2); }) == Kind::UnknownLabel);

    CHECK(set_of({1, 2}).disjoint_from(set_of({3, 4})));
    CHECK(!set_of({1, 3}).disjoint_from(set_of({3, 4})));
    CHECK(set_of({1, 4}).union_with(set_of({2, 3})) == LabelSet::range(4));
}

TEST_CASE("validate_tree accepts trees and names violations")
{
    CHECK(validate_tree(set_of({1, 2}), {Edge(1, 2)}).edges().size() == 1);

    CHECK(kind_of([] { validate_tree(set_of({1, 2, 3}), {Edge(1, 2)}); }) ==
          Kind::WrongEdgeCount);

    // Listing a spurious 7th label with the 5 edges of a 6-vertex tree is an
    // edge-count violation; the honest 6-label set is a valid tree.
    std::vector<Edge> d_edges{Edge(6, 12), Edge(6, 8), Edge(12, 9), Edge(8, 3), Edge(8, 1)};
    CHECK(kind_of([&] { validate_tree(set_of({1, 2, 3, 6, 8, 9, 12}), d_edges); }) ==
          Kind::WrongEdgeCount);
    CHECK(validate_tree(set_of({1, 3, 6, 8, 9, 12}), d_edges).size() == 6);

    CHECK(kind_of([] { validate_tree(set_of({1, 2}), {Edge(1, 3)}); }) == Kind::UnknownLabel);
    CHECK(kind_of([] {
              validate_tree(set_of({1, 2, 3, 4}), {Edge(1, 2), Edge(2, 3), Edge(1, 3)});
          }) == Kind::HasCycle);
    CHECK(kind_of([] { validate_tree(set_of({1, 2}), {Edge(1, 1)}); }) == Kind::HasCycle);

    // empty tree: zero labels, zero edges
    CHECK(LabeledTree().empty());

    // edge list is canonicalized regardless of input order
    LabeledTree a(set_of({1, 2, 3}), {Edge(3, 2), Edge(2, 1)});
    LabeledTree b(set_of({1, 2, 3}), {Edge(1, 2), Edge(2, 3)});
    CHECK(a == b);
}

TEST_CASE("rooted queries on the six-vertex example")
{
    RootedTree t(six_vertex_tree(), 4);
    CHECK(t.ancestors(1) == std::vector<Label>({4, 5, 1}));
    CHECK(t.ancestors(4) == std::vector<Label>({4}));
    CHECK(t.depth(4) == 0);
    CHECK(t.depth(3) == 2);
    CHECK(t.lca(1, 3) == 5);
    CHECK(t.lca(1, 6) == 4);
    CHECK(t.lca(2, 2) == 2);
    CHECK(t.child_toward(4, 1) == 5);
    CHECK(t.child_toward(4, 5) == 5);
    CHECK(t.parent(4) == std::nullopt);
    CHECK(t.parent(6) == 2);
    CHECK(t.subtree_labels(5) == std::vector<Label>({1, 3, 5}));

    CHECK(kind_of([&] { t.depth(9); }) == Kind::UnknownLabel);
    CHECK(kind_of([&] { t.child_toward(5, 5); }) == Kind::NotAStrictDescendant);
    CHECK(kind_of([&] { t.child_toward(5, 4); }) == Kind::NotAStrictDescendant);
    CHECK(kind_of([] { RootedTree(six_vertex_tree(), 9); }) == Kind::UnknownLabel);
}

TEST_CASE("rooted-tree invariants over every tree on [1..5] and every root")
{
    for (int n = 1; n <= 5; ++n) {
        TreeEnumerator trees(LabelSet::range(n));
        while (auto tree = trees.next()) {
            for (Label root = 1; root <= n; ++root) {
                RootedTree t(*tree, root);
                for (Label v = 1; v <= n; ++v) {
                    auto path = t.ancestors(v);
                    REQUIRE(path.front() == root);
                    REQUIRE(path.back() == v);
                    REQUIRE(t.depth(v) == static_cast<int>(path.size()) - 1);
                    // consecutive path elements are edges
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        Edge e(path[i], path[i + 1]);
                        REQUIRE(std::find(tree->edges().begin(), tree->edges().end(), e) !=
                                tree->edges().end());
                    }
                    REQUIRE(t.lca(root, v) == root);
                    REQUIRE(t.lca(v, v) == v);
                }
                for (Label u = 1; u <= n; ++u) {
                    for (Label v = 1; v <= n; ++v) {
                        Label w = t.lca(u, v);
                        REQUIRE(w == t.lca(v, u));
                        // ancestors(lca) is the longest common prefix
                        auto pu = t.ancestors(u), pv = t.ancestors(v), pw = t.ancestors(w);
                        REQUIRE(pw.size() <= pu.size());
                        REQUIRE(pw.size() <= pv.size());
                        for (std::size_t i = 0; i < pw.size(); ++i) {
                            REQUIRE(pu[i] == pw[i]);
                            REQUIRE(pv[i] == pw[i]);
                        }
                        if (pw.size() < pu.size() && pw.size() < pv.size())
                            REQUIRE(pu[pw.size()] != pv[pw.size()]);
                        if (u != w) REQUIRE(t.lca(t.child_toward(w, u), u) != w);
                    }
                }
            }
        }
    }
}

TEST_CASE("re-rooting never changes the edge set")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TriplyRootedTree t = sample_triply_rooted(2 + static_cast<int>(seed % 11), seed);
        const auto& edges = t.tree().edges();
        for (Label root : t.tree().labels()) {
            RootedTree rooted(t.tree(), root);
            CHECK(rooted.tree().edges() == edges);
        }
    }
}

TEST_CASE("doubly and triply rooted construction rules")
{
    DoublyRootedTree empty = DoublyRootedTree::make_empty();
    CHECK(empty.is_empty());
    CHECK(kind_of([&] { empty.r1(); }) == Kind::EmptyTree);

    DoublyRootedTree d(LabeledTree(set_of({3, 7}), {Edge(3, 7)}), 7, 7);
    CHECK(!d.is_empty());
    CHECK(d.r1() == 7);
    CHECK(d.r2() == 7);
    CHECK(!(d == empty));

    CHECK(kind_of([] { DoublyRootedTree(LabeledTree(), 1, 1); }) == Kind::EmptyTree);
    CHECK(kind_of([] {
              DoublyRootedTree(LabeledTree(LabelSet::range(2), {Edge(1, 2)}), 1, 3);
          }) == Kind::UnknownLabel);

    TriplyRootedTree t(LabeledTree(LabelSet::range(2), {Edge(1, 2)}), 1, 1, 2);
    CHECK(t.r2() == 1);
    CHECK(kind_of([] { TriplyRootedTree(LabeledTree(), 1, 1, 1); }) == Kind::EmptyTree);
    CHECK(kind_of([] {
              TriplyRootedTree(LabeledTree(LabelSet::range(2), {Edge(1, 2)}), 1, 2, 5);
          }) == Kind::UnknownLabel);
}

TEST_CASE("finite functions validate their value table")
{
    FiniteFunction f(set_of({2, 5}), set_of({1, 9}), {9, 1});
    CHECK(f.apply(2) == 9);
    CHECK(f.apply(5) == 1);
    CHECK(kind_of([] { FiniteFunction(set_of({1, 2}), set_of({1}), {1}); }) ==
          Kind::BadInput);
    CHECK(kind_of([] { FiniteFunction(set_of({1, 2}), set_of({1}), {1, 2}); }) ==
          Kind::UnknownLabel);
}
