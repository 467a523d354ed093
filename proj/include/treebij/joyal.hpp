#pragma once

#include "treebij/trees.hpp"

namespace treebij {

// The classical correspondence between functions S -> S and doubly rooted
// trees on S. Convention (pinned so the worked examples come out exactly):
// let C = periodic points of f sorted ascending c_1 < ... < c_k and sigma = f
// restricted to C. The spine is w_i = sigma(c_i) with edges {w_i, w_{i+1}};
// every non-periodic x contributes edge {x, f(x)}; roots are r1 = w_1,
// r2 = w_k.

// Periodic points of f (domain = codomain), i.e. vertices on cycles of the
// functional digraph.
LabelSet periodic_points(const FiniteFunction& f);

// Requires domain = codomain as sets; throws DomainCodomainMismatch.
DoublyRootedTree joyal_forward(const FiniteFunction& f);

// Inverse of joyal_forward; throws EmptyTree on the empty doubly rooted tree.
FiniteFunction joyal_inverse(const DoublyRootedTree& d);

} // namespace treebij
