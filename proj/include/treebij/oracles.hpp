#pragma once

#include "treebij/big.hpp"
#include "treebij/identities.hpp"
#include "treebij/trees.hpp"

namespace treebij {

// Brute-force oracles: independent enumerations the closed forms are checked
// against. Each takes an explicit cap; n = 7 sweeps reach ~5.7M objects, so
// exceeding the cap is an error rather than a silent stall.
inline constexpr int kDefaultBruteCap = 6;

void check_cap(int n, int cap);

// Tally of (depth of second root, depth of third root) over all of T_n,
// rooting each tree at its first root.
CountTable w_count_brute(int n, int cap = kDefaultBruteCap);

// Tally of (orbit size of n+1 including n+1, periodic point count) over all
// functions [n+1] -> [n].
CountTable f_count_brute(int n, int cap = kDefaultBruteCap);

// Spanning forests of [n] with |roots| components, one designated root in
// each; the closed form is k n^{n-k-1}, read as 1 when k = n.
BigCount forest_count_brute(int n, const LabelSet& roots, int cap = kDefaultBruteCap);

struct BasicCounts {
    BigCount rooted;        // |R_n| = n^{n-1}
    BigCount doubly_rooted; // |D_n| = n^n
    BigCount triply_rooted; // |T_n| = n^{n+1}
    bool ok;                // all three match their closed forms
};

// Counts the three families by walking the enumeration streams.
BasicCounts basic_counts_check(int n, int cap = kDefaultBruteCap);

} // namespace treebij
