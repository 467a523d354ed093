#pragma once

#include <vector>

#include "treebij/trees.hpp"

namespace treebij {

// Orbit data of the extra element n+1 under a function [n+1] -> [n]:
// the iteration sequence f(n+1), f^2(n+1), ... truncated at the first repeat
// (n+1 itself excluded), plus the set of periodic points.
struct OrbitReport {
    std::vector<Label> orbit;
    LabelSet periodic;
};

OrbitReport orbit_report(const FiniteFunction& f);

// Bijection between functions [n+1] -> [n] and triply rooted trees on [n].
// Forward: walk u_0 = n+1, u_{i+1} = f(u_i) until f(u_k) revisits the walk at
// u_j; drop the arc (u_k, u_j) and the vertex n+1 to get a tree H rooted at
// u_k; the rest of the functional digraph maps through Joyal to a doubly
// rooted tree D hung below u_j; roots are (u_k, u_1, w_2) — or (u_k, u_1, u_j)
// when there is no rest.
TriplyRootedTree phi_forward(const FiniteFunction& f);

// Inverse: root at r1, cut the first edge of the lca(r2, r3) -> r3 path, run
// Joyal backwards on the cut-off part, point the rest at its parent, close the
// cycle with f(r1) = lca(r2, r3), and attach n+1 below r2.
FiniteFunction phi_inverse(const TriplyRootedTree& t);

} // namespace treebij
