#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gl2f/rational_function.hpp"

namespace gl2f {

// Normal-order key of a monomial coeff * t^i s^j dt^p ds^q V1^k V2^l.
// Ordered (k, l, i, j, p, q) for deterministic printing.
struct FourierKey {
    int k = 0, l = 0;          // V1, V2 powers (any sign)
    int i = 0, j = 0;          // t, s powers (nonnegative)
    int p = 0, q = 0;          // dt, ds powers (nonnegative)
    auto operator<=>(const FourierKey&) const = default;
};

// Element of the Fourier-side algebra: finite sum of normal-ordered
// monomials with Q(mu1,mu2) coefficients. The unique normal form backs
// decidable equality. Multiplication rewrites with
//   dt t = t dt + 1,  ds s = s ds + 1,
//   V1^k V2^l f(mu1,mu2) = f(mu1+k, mu2+l) V1^k V2^l,
// V's commuting with t, s, dt, ds, and the two coordinate/derivative pairs
// commuting across variables.
class FourierOperator {
public:
    using MonoMap = std::map<FourierKey, RationalFunction>;

    FourierOperator() = default;  // zero
    static FourierOperator one();
    static FourierOperator constant(const RationalFunction& f);
    static FourierOperator t();
    static FourierOperator s();
    static FourierOperator dt();
    static FourierOperator ds();
    static FourierOperator shift(int k, int l);  // V1^k V2^l
    static FourierOperator monomial(const RationalFunction& coeff, const FourierKey& key);

    bool is_zero() const { return mono_.empty(); }
    bool is_one() const;
    const MonoMap& monomials() const { return mono_; }

    FourierOperator operator-() const;
    FourierOperator operator+(const FourierOperator& o) const;
    FourierOperator operator-(const FourierOperator& o) const;
    FourierOperator operator*(const FourierOperator& o) const;
    bool operator==(const FourierOperator& o) const { return mono_ == o.mono_; }

    // left multiplication by a coefficient
    FourierOperator scaled(const RationalFunction& f) const;
    FourierOperator scaled(const Rat& c) const { return scaled(RationalFunction::constant(c)); }

    FourierOperator pow(int n) const;  // n >= 0

    int max_ts_degree() const;     // max over monomials of i + j
    int max_deriv_degree() const;  // max over monomials of p + q

    std::string str() const;
    // rendering grouped by (k, l): one line per V1^k V2^l with its Q_{kl}
    std::string str_grouped() const;

    void add_monomial(const FourierKey& key, const RationalFunction& coeff);

private:
    MonoMap mono_;
};

inline FourierOperator commutator(const FourierOperator& x, const FourierOperator& y) {
    return x * y - y * x;
}

}  // namespace gl2f
