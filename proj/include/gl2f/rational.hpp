#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>

namespace gl2f {

// Exact rational scalar. GMP keeps the canonical form (gcd(num, den) = 1,
// den > 0); every constructor below canonicalizes explicitly since
// mpq_class(n, d) alone does not.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const mpz_class& num, const mpz_class& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// nearest rational with denominator 10^9; for user-facing decimal inputs
// (the exact binary value of a double like 0.4 is slightly off 2/5)
inline Rat rat_from_decimal(double x) {
    Rat q(static_cast<long>(std::llround(x * 1e9)), 1000000000L);
    q.canonicalize();
    return q;
}

inline Rat pow_rat(const Rat& q, unsigned e) {
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

// falling factorial n(n-1)...(n-k+1) and binomial, exact
inline Rat falling(long n, long k) {
    Rat r = 1;
    for (long i = 0; i < k; ++i) r *= rat(n - i);
    return r;
}

inline Rat binom(long n, long k) {
    if (k < 0 || k > n) return rat(0);
    Rat r = 1;
    for (long i = 1; i <= k; ++i) r *= rat(n - k + i, i);
    return r;
}

}  // namespace gl2f
