#pragma once

#include <gmpxx.h>

#include <string>

#include "treebij/error.hpp"

namespace treebij {

// All counts and identity checks run in exact integer arithmetic; rationals
// appear only where a closed form genuinely divides (xi, xi2, negative Abel
// exponents). No floating point anywhere in the counting layer.
using BigCount = mpz_class;
using ExactRational = mpq_class;

inline BigCount big_pow(const BigCount& base, unsigned long exp)
{
    BigCount out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// n^e with the 0^0 = 1 convention used throughout.
inline BigCount int_pow(long base, unsigned long exp)
{
    if (exp == 0) return 1;
    return big_pow(BigCount(base), exp);
}

inline BigCount factorial(unsigned long n)
{
    BigCount out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigCount binomial(unsigned long n, unsigned long k)
{
    if (k > n) return 0;
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// n(n-1)...(n-k+1); zero as soon as the product crosses zero (k > n).
inline BigCount falling_factorial(long n, unsigned long k)
{
    BigCount out = 1;
    for (unsigned long t = 0; t < k; ++t) out *= BigCount(n - static_cast<long>(t));
    return out;
}

// alpha_k(r) = r(r+1)...(r+k-1), empty product = 1.
inline BigCount rising_factorial(long r, unsigned long k)
{
    BigCount out = 1;
    for (unsigned long t = 0; t < k; ++t) out *= BigCount(r + static_cast<long>(t));
    return out;
}

// Reduced rational with positive denominator.
inline ExactRational make_rational(const BigCount& num, const BigCount& den)
{
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigCount& v) { return v.get_str(); }
inline std::string to_string(const ExactRational& v) { return v.get_str(); }

} // namespace treebij
