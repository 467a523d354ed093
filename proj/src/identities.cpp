#include "treebij/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "treebij/error.hpp"

namespace treebij {

namespace {

// C(n,j) C(n-j,k) j^j k^k (n-j-k)^{n-j-k}
BigCount double_sum_term(int n, int j, int k)
{
    auto u = [](int v) { return static_cast<unsigned long>(v); };
    return binomial(u(n), u(j)) * binomial(u(n - j), u(k)) * int_pow(j, u(j)) *
           int_pow(k, u(k)) * int_pow(n - j - k, u(n - j - k));
}

} // namespace

BigCount xi_scaled(int n)
{
    BigCount total = 0;
    for (int k = 0; k <= n; ++k)
        total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                 int_pow(k, static_cast<unsigned long>(k)) *
                 int_pow(n - k, static_cast<unsigned long>(n - k));
    return total;
}

BigCount xi_scaled_factorial_form(int n)
{
    // sum_j n^j n!/j!, with n!/j! as the product (j+1)(j+2)...n.
    BigCount total = 0;
    for (int j = 0; j <= n; ++j) {
        BigCount tail = 1;
        for (int t = j + 1; t <= n; ++t) tail *= t;
        total += int_pow(n, static_cast<unsigned long>(j)) * tail;
    }
    return total;
}

ExactRational xi(int n)
{
    return make_rational(xi_scaled(n), int_pow(n, static_cast<unsigned long>(n)));
}

BigCount xi2_scaled(int n)
{
    BigCount total = 0;
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n - j; ++k) total += double_sum_term(n, j, k);
    return total;
}

BigCount xi2_scaled_single_form(int n)
{
    BigCount total = 0;
    for (int j = 0; j <= n; ++j)
        total += int_pow(n, static_cast<unsigned long>(n - j)) *
                 binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                 factorial(static_cast<unsigned long>(j + 1));
    return total;
}

ExactRational xi2(int n)
{
    return make_rational(xi2_scaled(n), int_pow(n, static_cast<unsigned long>(n)));
}

BigCount lacasse_lhs_scaled(int n)
{
    BigCount total = 0;
    for (int j = 1; j <= n; ++j)
        for (int k = 0; k <= n - j; ++k) total += double_sum_term(n, j, k);
    return total;
}

BigCount lacasse_summand(int n, int j, int k) { return double_sum_term(n, j, k); }

LacasseWitness lacasse_check(int n)
{
    LacasseWitness w{};
    w.xi_scaled = xi_scaled(n);
    w.xi2_scaled = xi2_scaled(n);
    w.lhs_j_positive = lacasse_lhs_scaled(n);
    w.n_pow_n_plus_1 = int_pow(n, static_cast<unsigned long>(n + 1));
    w.ok = (w.xi2_scaled == w.xi_scaled + w.n_pow_n_plus_1) &&
           (w.lhs_j_positive == w.n_pow_n_plus_1);
    return w;
}

namespace {

// (base)^exp as an exact rational; negative exp inverts, 0^0 = 1.
ExactRational signed_power(long base, long exp)
{
    if (base == 0) {
        if (exp < 0) throw Error(Kind::PoleAtZero, "0 raised to a negative power");
        return exp == 0 ? ExactRational(1) : ExactRational(0);
    }
    BigCount mag = big_pow(BigCount(base), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp >= 0) return ExactRational(mag);
    return make_rational(1, mag);
}

// Walk all compositions k_1+...+k_m = n.
void for_each_composition(int n, int m, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& fn)
{
    if (static_cast<int>(parts.size()) == m - 1) {
        parts.push_back(n - std::accumulate(parts.begin(), parts.end(), 0));
        fn(parts);
        parts.pop_back();
        return;
    }
    int used = std::accumulate(parts.begin(), parts.end(), 0);
    for (int k = 0; k <= n - used; ++k) {
        parts.push_back(k);
        for_each_composition(n, m, parts, fn);
        parts.pop_back();
    }
}

} // namespace

ExactRational abel_poly(const std::vector<long>& x, const std::vector<long>& p, int n)
{
    if (x.empty() || x.size() != p.size())
        throw Error(Kind::BadInput, "x and p must be equal-length, m >= 1");
    if (n < 0) throw Error(Kind::BadInput, "n must be nonnegative");
    const int m = static_cast<int>(x.size());
    ExactRational total(0);
    std::vector<int> parts;
    for_each_composition(n, m, parts, [&](const std::vector<int>& ks) {
        BigCount mult = factorial(static_cast<unsigned long>(n));
        for (int k : ks) mult /= factorial(static_cast<unsigned long>(k));
        ExactRational term(mult);
        for (int j = 0; j < m; ++j)
            term *= signed_power(x[static_cast<std::size_t>(j)] + ks[static_cast<std::size_t>(j)],
                                 static_cast<long>(ks[static_cast<std::size_t>(j)]) +
                                     p[static_cast<std::size_t>(j)]);
        total += term;
    });
    total.canonicalize();
    return total;
}

BigCount hurwitz_single_sum(const std::vector<long>& x, int n)
{
    const long m = static_cast<long>(x.size());
    long xsum = std::accumulate(x.begin(), x.end(), 0L);
    BigCount total = 0;
    for (int k = 0; k <= n; ++k) {
        BigCount pw = big_pow(BigCount(xsum + n), static_cast<unsigned long>(n - k));
        total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                 pw * rising_factorial(m - 1, static_cast<unsigned long>(k));
    }
    return total;
}

bool hurwitz_check(const std::vector<long>& x, int n)
{
    std::vector<long> zeros(x.size(), 0);
    return abel_poly(x, zeros, n) == ExactRational(hurwitz_single_sum(x, n));
}

BigCount w_count(int n, int i, int j)
{
    if (n < 1 || i < 0 || j < 0) return 0;
    BigCount total = 0;
    for (int d = 0; d <= std::min(i, j); ++d) {
        const int k = i + j - d + 1; // vertices on the two root paths
        if (k > n) continue;
        BigCount paths = falling_factorial(n, static_cast<unsigned long>(k));
        BigCount forests =
            (k == n) ? BigCount(1)
                     : BigCount(k) * int_pow(n, static_cast<unsigned long>(n - k - 1));
        total += paths * forests;
    }
    return total;
}

BigCount f_count(int n, int i, int j)
{
    if (i < 2 || j < 1) return 0;
    return w_count(n, i - 2, j - 1);
}

CountTable w_table(int n)
{
    CountTable table;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[{i, j}] = w_count(n, i, j);
    return table;
}

CountTable f_table(int n)
{
    CountTable table;
    for (int i = 2; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j) table[{i, j}] = f_count(n, i, j);
    return table;
}

} // namespace treebij
