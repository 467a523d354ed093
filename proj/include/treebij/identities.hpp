#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treebij/big.hpp"

namespace treebij {

// Exact evaluation of the closed forms: the probability-weighted sums xi and
// xi2 are computed in their n^n-scaled integer forms and divided once at the
// end, so every identity check is a pure integer comparison.

// n^n * xi(n) = sum_k C(n,k) k^k (n-k)^{n-k}, with 0^0 = 1.
BigCount xi_scaled(int n);

// Same value through the single factorial sum: sum_j n^j n!/j!.
BigCount xi_scaled_factorial_form(int n);

ExactRational xi(int n);

// n^n * xi2(n) = sum_{j,k} C(n,j) C(n-j,k) j^j k^k (n-j-k)^{n-j-k}.
BigCount xi2_scaled(int n);

// Same value through the single sum: sum_j n^{n-j} C(n,j) (j+1)!.
BigCount xi2_scaled_single_form(int n);

ExactRational xi2(int n);

// The double sum restricted to j >= 1; equals n^{n+1}.
BigCount lacasse_lhs_scaled(int n);

// One summand C(n,j) C(n-j,k) j^j k^k (n-j-k)^{n-j-k}: the number of Q_n
// triples with block sizes (j, k, n-j-k).
BigCount lacasse_summand(int n, int j, int k);

struct LacasseWitness {
    bool ok;
    BigCount xi_scaled;
    BigCount xi2_scaled;
    BigCount lhs_j_positive; // double sum with j >= 1
    BigCount n_pow_n_plus_1;
};

// True iff xi2_scaled(n) = xi_scaled(n) + n*n^n and the j >= 1 double sum
// equals n^{n+1}; the witness carries all four integers.
LacasseWitness lacasse_check(int n);

// Multivariate Abel polynomial A_n(x; p): sum over compositions k_1+...+k_m=n
// of the multinomial times prod (x_j+k_j)^{k_j+p_j}. Exact; negative exponents
// produce rationals. A zero base with a negative exponent throws PoleAtZero;
// a zero base with exponent zero counts as 1.
ExactRational abel_poly(const std::vector<long>& x, const std::vector<long>& p, int n);

// Right side of the p = 0 reduction: sum_k C(n,k)(x_1+...+x_m+n)^{n-k} a_k(m-1)
// with a the rising factorial.
BigCount hurwitz_single_sum(const std::vector<long>& x, int n);

// Both sides of the p = 0 identity agree exactly.
bool hurwitz_check(const std::vector<long>& x, int n);

// |W_{n,i,j}|: triply rooted trees on [n] with the second root at depth i and
// the third at depth j. Summands with k = i+j-d+1 > n vanish (falling
// factorial); the k = n summand uses forest factor 1, absorbing the formal
// n^{-1} in the printed formula.
BigCount w_count(int n, int i, int j);

// |F_{n,i,j}|: functions [n+1] -> [n] whose orbit of n+1 has size i (counting
// n+1) and which have j periodic points. Equals w_count(n, i-2, j-1).
BigCount f_count(int n, int i, int j);

using CountTable = std::map<std::pair<int, int>, BigCount>;

// Full tables over the index rectangles where entries can be nonzero:
// w: 0 <= i, j <= n-1; f: 2 <= i <= n+1, 1 <= j <= n.
CountTable w_table(int n);
CountTable f_table(int n);

} // namespace treebij
