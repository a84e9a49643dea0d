#include "gl2f/rational_function.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "gl2f/errors.hpp"

namespace gl2f {

RationalFunction::RationalFunction(const ParamPoly& num, const ParamPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(const Rat& c) {
    return from_poly(ParamPoly::constant(c));
}

RationalFunction RationalFunction::from_poly(const ParamPoly& p) {
    RationalFunction f;
    f.num_ = p;
    f.den_ = ParamPoly::constant(rat(1));
    return f;
}

RationalFunction RationalFunction::mu1() { return from_poly(ParamPoly::mu1()); }
RationalFunction RationalFunction::mu2() { return from_poly(ParamPoly::mu2()); }

bool RationalFunction::is_one() const {
    return num_ == ParamPoly::constant(rat(1)) && den_ == ParamPoly::constant(rat(1));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(rat(1));
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        ParamPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            ParamPoly qn, qd;
            if (!try_divide_exact(num_, g, qn) || !try_divide_exact(den_, g, qd))
                throw std::logic_error("gcd does not divide its arguments");
            num_ = qn;
            den_ = qd;
        }
    }
    // unique representative: den Z-primitive with positive leading coefficient
    const Rat c = signed_content(den_);
    const Rat inv = rat(1) / c;
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    // n1/d1 + n2/d2 = (n1*(d2/g) + n2*(d1/g)) / (d1*(d2/g)), g = gcd(d1, d2)
    ParamPoly g = poly_gcd(den_, o.den_);
    ParamPoly d2g = o.den_, d1g = den_;
    if (!g.is_constant()) {
        try_divide_exact(o.den_, g, d2g);
        try_divide_exact(den_, g, d1g);
    }
    return RationalFunction(num_ * d2g + o.num_ * d1g, den_ * d2g);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    if (is_constant()) {
        // scaling the numerator leaves the canonical denominator untouched
        const Rat c = num_.constant_value() / den_.constant_value();
        RationalFunction r = o;
        r.num_ = r.num_ * c;
        return r;
    }
    if (o.is_constant()) return o * (*this);
    // cross-reduce before multiplying to keep intermediates small
    ParamPoly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
    ParamPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
    if (!g1.is_constant()) {
        try_divide_exact(num_, g1, n1);
        try_divide_exact(o.den_, g1, d2);
    }
    if (!g2.is_constant()) {
        try_divide_exact(o.num_, g2, n2);
        try_divide_exact(den_, g2, d1);
    }
    return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::shifted(int d1, int d2) const {
    return RationalFunction(num_.shifted(d1, d2), den_.shifted(d1, d2));
}

std::complex<double> RationalFunction::eval(std::complex<double> m1,
                                            std::complex<double> m2) const {
    const std::complex<double> dv = den_.eval(m1, m2);
    const double scale = den_.eval_scale(m1, m2);
    if (std::abs(dv) < 1e-12 * scale)
        throw PoleError("denominator " + den_.str() + " vanishes at the sample point");
    return num_.eval(m1, m2) / dv;
}

namespace {

// denominators of the operator images factor into (mu1 - mu2 - m) lines;
// print them that way when they do
std::string factored_difference_product(const ParamPoly& den) {
    ParamPoly rest = den;
    std::map<int, int> mult;
    bool progress = true;
    while (!rest.is_constant() && progress) {
        progress = false;
        for (int m = -12; m <= 12 && !progress; ++m) {
            const ParamPoly lin =
                ParamPoly::mu1() - ParamPoly::mu2() - ParamPoly::constant(rat(m));
            ParamPoly q;
            if (try_divide_exact(rest, lin, q)) {
                rest = q;
                ++mult[m];
                progress = true;
            }
        }
    }
    if (!rest.is_constant() || mult.empty()) return "";
    std::ostringstream os;
    int nfactors = 0;
    if (rest.constant_value() != 1) {
        os << to_string(rest.constant_value());
        ++nfactors;
    }
    for (const auto& [m, e] : mult) {
        os << "(mu1 - mu2";
        if (m > 0) os << " - " << m;
        if (m < 0) os << " + " << -m;
        os << ")";
        if (e > 1) os << "^" << e;
        nfactors += e;
    }
    if (nfactors > 1) return "(" + os.str() + ")";
    return os.str();
}

}  // namespace

std::string RationalFunction::str() const {
    if (num_.is_zero()) return "0";
    if (den_ == ParamPoly::constant(rat(1))) {
        if (num_.is_constant() || num_.terms().size() == 1) return num_.str();
        return "(" + num_.str() + ")";
    }
    std::string ns = (num_.terms().size() == 1 && sgn(num_.leading_coeff()) > 0)
                         ? num_.str()
                         : "(" + num_.str() + ")";
    if (std::string f = factored_difference_product(den_); !f.empty()) return ns + "/" + f;
    std::string ds = den_.terms().size() == 1 ? den_.str() : "(" + den_.str() + ")";
    return ns + "/" + ds;
}

}  // namespace gl2f
