#pragma once

#include <complex>
#include <string>

#include "gl2f/param_poly.hpp"

namespace gl2f {

// Element of the field Q(mu1, mu2) in canonical form: gcd(num, den) is a
// unit, den has coprime integer coefficients and positive grlex-leading
// coefficient. Equality of canonical forms is plain structural equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(ParamPoly::constant(rat(1))) {}  // zero
    RationalFunction(const ParamPoly& num, const ParamPoly& den);

    static RationalFunction constant(const Rat& c);
    static RationalFunction from_poly(const ParamPoly& p);
    static RationalFunction mu1();
    static RationalFunction mu2();

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;  // ZeroDenominator if o = 0
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // substitution mu1 -> mu1 + d1, mu2 -> mu2 + d2, canonicalized
    RationalFunction shifted(int d1, int d2) const;

    // PoleError when |den(m1,m2)| < 1e-12 * (magnitude scale of den at m)
    std::complex<double> eval(std::complex<double> m1, std::complex<double> m2) const;

    std::string str() const;

private:
    void normalize();

    ParamPoly num_, den_;
};

inline RationalFunction operator*(const Rat& c, const RationalFunction& f) {
    return RationalFunction::constant(c) * f;
}

}  // namespace gl2f
