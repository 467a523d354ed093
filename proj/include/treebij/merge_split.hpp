#pragma once

#include "treebij/trees.hpp"

namespace treebij {

// An element of Q_n: an ordered triple (D, D', D'') of doubly rooted trees
// whose label sets are pairwise disjoint, D nonempty. The union of the label
// sets is the ground set.
class RootedTriple {
public:
    RootedTriple(DoublyRootedTree d, DoublyRootedTree dp, DoublyRootedTree dpp);

    const DoublyRootedTree& d() const { return d_; }
    const DoublyRootedTree& dp() const { return dp_; }
    const DoublyRootedTree& dpp() const { return dpp_; }
    const LabelSet& ground() const { return ground_; }

    std::string canonical_key() const;

    friend bool operator==(const RootedTriple&, const RootedTriple&) = default;

private:
    DoublyRootedTree d_;
    DoublyRootedTree dp_;
    DoublyRootedTree dpp_;
    LabelSet ground_;
};

// Merge: r1(D') becomes a child of r2(D), r1(D'') becomes a child of r2(D);
// roots of the result follow the four-case table on (D' empty?, D'' empty?).
TriplyRootedTree merge(const RootedTriple& q);

// Inverse of merge: root at r1, take w = lca(r2, r3), cut toward r2 and r3 as
// the case demands. Total on T_n.
RootedTriple split(const TriplyRootedTree& t);

} // namespace treebij
