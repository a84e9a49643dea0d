#pragma once

#include <array>
#include <map>
#include <string>

#include "gl2f/rational.hpp"
#include "gl2f/sym_expr.hpp"

namespace gl2f {

// Exponent 4-tuple over (a, b, c, d).
using CoordExp = std::array<int, 4>;

// Polynomial in Q[a,b,c,d]; no zero coefficients stored.
class CoordPoly {
public:
    using TermMap = std::map<CoordExp, Rat>;

    CoordPoly() = default;
    static CoordPoly constant(const Rat& c);
    static CoordPoly coordinate(int v);  // v in {var::A..var::D}
    static CoordPoly det();              // ad - bc

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    CoordPoly operator-() const;
    CoordPoly operator+(const CoordPoly& o) const;
    CoordPoly operator-(const CoordPoly& o) const;
    CoordPoly operator*(const CoordPoly& o) const;
    CoordPoly operator*(const Rat& c) const;
    bool operator==(const CoordPoly& o) const { return terms_ == o.terms_; }

    CoordPoly diff(int v) const;

    void add_term(const CoordExp& e, const Rat& c);
    SymExpr to_sym() const;

private:
    TermMap terms_;
};

// num * det^{-detpow} with detpow minimal (num not divisible by det).
class LocalizedCoeff {
public:
    LocalizedCoeff() = default;  // zero
    LocalizedCoeff(CoordPoly num, int detpow);

    static LocalizedCoeff constant(const Rat& c) { return {CoordPoly::constant(c), 0}; }

    const CoordPoly& num() const { return num_; }
    int detpow() const { return detpow_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedCoeff operator-() const;
    LocalizedCoeff operator+(const LocalizedCoeff& o) const;
    LocalizedCoeff operator*(const LocalizedCoeff& o) const;
    LocalizedCoeff operator*(const Rat& c) const;
    bool operator==(const LocalizedCoeff& o) const {
        return num_ == o.num_ && detpow_ == o.detpow_;
    }

    // d/dv, with d(det^-N) = -N (d det/dv) det^{-N-1}
    LocalizedCoeff diff(int v) const;

    SymExpr to_sym() const;

private:
    void normalize();
    CoordPoly num_;
    int detpow_ = 0;
};

// Derivative multi-index (da, db, dc, dd).
using DerivExp = std::array<int, 4>;

// Normal-ordered differential operator on the group: sum of
// coeff(a,b,c,d,det^-1) * da^i db^j dc^k dd^l monomials keyed by the
// derivative multi-index.
class GroupOperator {
public:
    using MonoMap = std::map<DerivExp, LocalizedCoeff>;

    GroupOperator() = default;  // zero
    static GroupOperator identity();
    static GroupOperator constant(const Rat& c);
    static GroupOperator coordinate(int v);    // multiplication by a, b, c or d
    static GroupOperator derivative(int v);    // d/da .. d/dd
    static GroupOperator det_inverse();        // multiplication by (ad-bc)^-1
    static GroupOperator monomial(LocalizedCoeff coeff, DerivExp deriv);

    bool is_zero() const { return mono_.empty(); }
    const MonoMap& monomials() const { return mono_; }

    GroupOperator operator-() const;
    GroupOperator operator+(const GroupOperator& o) const;
    GroupOperator operator-(const GroupOperator& o) const;
    GroupOperator operator*(const GroupOperator& o) const;  // composition, normal form
    GroupOperator operator*(const Rat& c) const;
    bool operator==(const GroupOperator& o) const { return mono_ == o.mono_; }

    GroupOperator pow(int n) const;  // n >= 0

    bool is_det_localized() const;  // any monomial with detpow > 0

    // Apply to a symbolic function of (a,b,c,d). SupportError if the operator
    // is det-localized while the support box does not certify det > 0.
    SymExpr apply(const SymExpr& F, const SupportBox& box) const;

    // Printed in the operator-expression grammar (round-trips through the parser).
    std::string str() const;

    void add_monomial(const DerivExp& d, const LocalizedCoeff& c);

private:
    MonoMap mono_;
};

inline GroupOperator commutator(const GroupOperator& x, const GroupOperator& y) {
    return x * y - y * x;
}

}  // namespace gl2f
