#pragma once

#include <optional>
#include <vector>

#include "treebij/prufer.hpp"
#include "treebij/trees.hpp"

namespace treebij {

// Lazy single-consumer cursors. Nothing here materializes a family: the
// n = 7 function family already has 7^8 ~ 5.7M members. Orders are pinned for
// reproducible goldens: trees by lexicographic Prufer code, tuples by odometer
// over ascending labels with the rightmost position moving fastest.

// Every labeled tree on the given labels, n^{n-2} of them (1 for n = 1).
class TreeEnumerator {
public:
    explicit TreeEnumerator(LabelSet labels);

    std::optional<LabeledTree> next();

private:
    LabelSet labels_;
    std::vector<std::size_t> digits_; // Prufer code as label indices
    bool done_ = false;
    bool first_ = true;
};

// Every doubly rooted tree on the labels; on an empty label set yields the
// single empty doubly rooted tree.
class DoublyRootedEnumerator {
public:
    explicit DoublyRootedEnumerator(LabelSet labels);

    std::optional<DoublyRootedTree> next();

private:
    LabelSet labels_;
    std::optional<TreeEnumerator> trees_; // nullopt for the empty label set
    std::optional<LabeledTree> current_;
    std::size_t r1_ = 0, r2_ = 0; // label indices, r2 fastest
    bool empty_case_pending_ = false;
    bool done_ = false;
};

// Every element of T_n, n^{n+1} in total.
class TriplyRootedEnumerator {
public:
    explicit TriplyRootedEnumerator(int n);

    std::optional<TriplyRootedTree> next();

private:
    LabelSet labels_;
    TreeEnumerator trees_;
    std::optional<LabeledTree> current_;
    std::size_t r1_ = 0, r2_ = 0, r3_ = 0; // r3 fastest
    bool done_ = false;
};

// Every function domain -> codomain, |codomain|^|domain| in total.
class FunctionEnumerator {
public:
    FunctionEnumerator(LabelSet domain, LabelSet codomain);

    std::optional<FiniteFunction> next();

private:
    LabelSet domain_;
    LabelSet codomain_;
    std::vector<std::size_t> digits_; // value indices, last domain label fastest
    bool done_ = false;
    bool first_ = true;
};

// Ordered triple of disjoint blocks covering a ground set, first block
// nonempty: 3^n - 2^n of them.
struct Composition3 {
    LabelSet block_a;
    LabelSet block_b;
    LabelSet block_c;
};

class Composition3Enumerator {
public:
    explicit Composition3Enumerator(LabelSet ground);

    std::optional<Composition3> next();

private:
    LabelSet ground_;
    std::vector<int> assign_; // 0 = A, 1 = B, 2 = C; last element fastest
    bool done_ = false;
    bool first_ = true;
};

// Shared odometer step: increments a fixed-base counter, false on wraparound.
bool odometer_step(std::vector<std::size_t>& digits, std::size_t base);

} // namespace treebij
