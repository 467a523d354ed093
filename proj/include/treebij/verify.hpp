#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treebij/json_io.hpp"

namespace treebij {

// One verification sweep: how many individual checks ran and, on failure, the
// first counterexample both as text and as a structured witness.
struct CheckResult {
    std::string name;
    bool pass = true;
    long checks_run = 0;
    std::string first_failure;
    Json witness;

    void fail(const std::string& message, Json details)
    {
        if (!pass) return; // keep the first counterexample
        pass = false;
        first_failure = message;
        witness = std::move(details);
    }
};

// Lacasse identity, exact integers, n in [1, n_max].
CheckResult verify_lacasse(int n_max);

// Hurwitz p = 0 reduction: all-zero x over the (m, n) grid, the xi / xi2
// special cases, and seeded random x in [0,5]^m.
CheckResult verify_hurwitz(int n_max, int m_max, int trials, std::uint64_t seed);

// Basic cardinalities |R_n|, |D_n|, |T_n| plus the k n^{n-k-1} forest count
// over every nonempty root subset, n in [1, n_max].
CheckResult verify_counts(int n_max, int cap);

// w/f closed-form tables against their brute-force oracles, totals, symmetry
// and the W <-> F index shift, n in [1, n_max].
CheckResult verify_tables(int n_max, int cap);

// Theorem: Q_n <-> T_n. Exhaustive split(merge) = id and merge(split) = id up
// to n_exhaustive, per-block-size counts against the Lacasse summands, plus
// seeded random round trips up to n_random.
CheckResult verify_merge_split(int n_exhaustive, int n_random, int random_trials,
                               std::uint64_t seed);

// Functions [n+1] -> [n] <-> T_n: exhaustive round trips and the orbit /
// periodic ancestor properties up to n_exhaustive, seeded random round trips
// up to n_random.
CheckResult verify_phi(int n_exhaustive, int n_random, int random_trials,
                       std::uint64_t seed);

// Joyal round trips exhaustively for |S| <= n_max and surjectivity onto D_n
// for n <= min(n_max, 4).
CheckResult verify_joyal(int n_max);

// Prufer round trips, stream counts against closed forms (n <= n_max) and
// stream distinctness by canonical-key hashing (n <= 5).
CheckResult verify_streams(int n_max);

// The paper's worked figures: the Figure 1 rooted-tree queries, the Figure 2
// and Figure 3 merges, and the Figure 6 function <-> tree example.
CheckResult verify_goldens();

// Sampler determinism and a 5-sigma uniformity bound over T_2.
CheckResult verify_sampler();

// The full invariant suite at the given brute-force cap.
std::vector<CheckResult> selftest(int cap);

// Test and corpus helper: seeded uniform element of Q_n.
RootedTriple sample_rooted_triple(int n, std::uint64_t seed);

} // namespace treebij
