#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "gl2f/rational.hpp"

namespace gl2f {

// Exponent pair (power of mu1, power of mu2).
using ParamExp = std::array<int, 2>;

// Graded lexicographic order with mu1 > mu2; the leading term of a ParamPoly
// is the grlex-largest one.
struct GrlexLess {
    bool operator()(const ParamExp& a, const ParamExp& b) const {
        const int da = a[0] + a[1], db = b[0] + b[1];
        if (da != db) return da < db;
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    }
};

// Polynomial in Q[mu1, mu2]. No zero coefficients are stored.
class ParamPoly {
public:
    using TermMap = std::map<ParamExp, Rat, GrlexLess>;

    ParamPoly() = default;

    static ParamPoly constant(const Rat& c);
    static ParamPoly mu1();
    static ParamPoly mu2();
    // c * mu1^e1 * mu2^e2
    static ParamPoly term(const Rat& c, int e1, int e2);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (0 if absent)
    Rat constant_value() const;

    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_mu1() const;
    int degree_mu2() const;

    ParamExp leading_exponent() const;  // grlex; poly must be nonzero
    Rat leading_coeff() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const Rat& c) const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    // substitution mu1 -> mu1 + d1, mu2 -> mu2 + d2
    ParamPoly shifted(int d1, int d2) const;

    std::complex<double> eval(std::complex<double> m1, std::complex<double> m2) const;
    // sum of |coeff| * |m1|^e1 * |m2|^e2; the magnitude scale used for pole detection
    double eval_scale(std::complex<double> m1, std::complex<double> m2) const;

    std::string str() const;

    void add_term(const ParamExp& e, const Rat& c);  // accumulate, dropping zeros

private:
    TermMap terms_;
};

// gcd in Q[mu1,mu2], returned Z-primitive with positive grlex-leading
// coefficient; gcd(0,0) = 0. Primitive pseudo-remainder sequences.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

// exact division: p = q*d on success
bool try_divide_exact(const ParamPoly& p, const ParamPoly& d, ParamPoly& q);

// positive rational c such that p/c has coprime integer coefficients,
// multiplied by the sign of the grlex-leading coefficient; p must be nonzero
Rat signed_content(const ParamPoly& p);

}  // namespace gl2f
