#pragma once

#include <vector>

#include "treebij/trees.hpp"

namespace treebij {

// Length-(n-2) sequence over a label set of size n >= 2; the standard
// bijection with labeled trees, used as the enumeration and sampling backbone
// for the n^{n-2} trees on a given label set.
struct PruferCode {
    LabelSet labels;
    std::vector<Label> code;

    PruferCode(LabelSet labels_in, std::vector<Label> code_in);
};

// Unique tree with the given code; inverse of prufer_encode.
LabeledTree prufer_decode(const PruferCode& p);

// Throws TooSmall for trees with fewer than 2 vertices.
PruferCode prufer_encode(const LabeledTree& t);

} // namespace treebij
