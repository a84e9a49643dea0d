#include "gl2f/param_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gl2f {

ParamPoly ParamPoly::constant(const Rat& c) {
    ParamPoly p;
    p.add_term({0, 0}, c);
    return p;
}

ParamPoly ParamPoly::mu1() { return term(rat(1), 1, 0); }
ParamPoly ParamPoly::mu2() { return term(rat(1), 0, 1); }

ParamPoly ParamPoly::term(const Rat& c, int e1, int e2) {
    ParamPoly p;
    p.add_term({e1, e2}, c);
    return p;
}

void ParamPoly::add_term(const ParamExp& e, const Rat& c) {
    if (gl2f::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (gl2f::is_zero(it->second)) terms_.erase(it);
    }
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0});
}

Rat ParamPoly::constant_value() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? rat(0) : it->second;
}

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return e[0] + e[1];
}

int ParamPoly::degree_mu1() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
    return d;
}

int ParamPoly::degree_mu2() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[1]);
    return d;
}

ParamExp ParamPoly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("leading_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Rat ParamPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

ParamPoly ParamPoly::operator*(const Rat& c) const {
    ParamPoly r;
    if (gl2f::is_zero(c)) return r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
    return r;
}

ParamPoly ParamPoly::shifted(int d1, int d2) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        // (mu1+d1)^e1 (mu2+d2)^e2 expanded binomially
        for (int i = 0; i <= e[0]; ++i) {
            const Rat bi = binom(e[0], i) * pow_rat(rat(d1), e[0] - i);
            if (gl2f::is_zero(bi)) continue;
            for (int j = 0; j <= e[1]; ++j) {
                const Rat bj = binom(e[1], j) * pow_rat(rat(d2), e[1] - j);
                if (gl2f::is_zero(bj)) continue;
                r.add_term({i, j}, c * bi * bj);
            }
        }
    }
    return r;
}

std::complex<double> ParamPoly::eval(std::complex<double> m1, std::complex<double> m2) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = to_double(c);
        for (int i = 0; i < e[0]; ++i) t *= m1;
        for (int i = 0; i < e[1]; ++i) t *= m2;
        acc += t;
    }
    return acc;
}

double ParamPoly::eval_scale(std::complex<double> m1, std::complex<double> m2) const {
    double acc = 0.0;
    const double a1 = std::abs(m1), a2 = std::abs(m2);
    for (const auto& [e, c] : terms_)
        acc += std::abs(to_double(c)) * std::pow(a1, e[0]) * std::pow(a2, e[1]);
    return acc;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        const auto& e = it->first;
        if (first) {
            if (sgn(c) < 0) os << "-", c = -c;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        const bool have_vars = e[0] > 0 || e[1] > 0;
        if (!have_vars || c != 1) {
            os << to_string(c);
            if (have_vars) os << "*";
        }
        if (e[0] > 0) {
            os << "mu1";
            if (e[0] > 1) os << "^" << e[0];
            if (e[1] > 0) os << "*";
        }
        if (e[1] > 0) {
            os << "mu2";
            if (e[1] > 1) os << "^" << e[1];
        }
    }
    return os.str();
}

Rat signed_content(const ParamPoly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat c = rat(num_gcd, den_lcm);
    if (sgn(p.leading_coeff()) < 0) c = -c;
    return c;
}

bool try_divide_exact(const ParamPoly& p, const ParamPoly& d, ParamPoly& q) {
    if (d.is_zero()) return false;
    ParamPoly rem = p;
    ParamPoly quot;
    const ParamExp de = d.leading_exponent();
    const Rat dc = d.leading_coeff();
    while (!rem.is_zero()) {
        const ParamExp re = rem.leading_exponent();
        if (re[0] < de[0] || re[1] < de[1]) return false;
        const ParamExp qe{re[0] - de[0], re[1] - de[1]};
        const Rat qc = rem.leading_coeff() / dc;
        quot.add_term(qe, qc);
        rem = rem - d * ParamPoly::term(qc, qe[0], qe[1]);
    }
    q = quot;
    return true;
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences, recursing mu1 -> mu2 -> Z.
// ---------------------------------------------------------------------------
namespace {

using UPoly = std::map<int, mpz_class>;  // Z[mu2]
using BPoly = std::map<int, UPoly>;      // (Z[mu2])[mu1]

int deg(const UPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }
int deg(const BPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

void add_term(UPoly& p, int e, const mpz_class& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
    return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    for (const auto& [e, c] : b) add_term(r, e, -c);
    return r;
}

UPoly u_scale(const UPoly& a, const mpz_class& c) {
    UPoly r;
    if (c == 0) return r;
    for (const auto& [e, q] : a) r.emplace(e, q * c);
    return r;
}

mpz_class u_content(const UPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly u_divexact_scalar(const UPoly& p, const mpz_class& c) {
    UPoly r;
    for (const auto& [e, q] : p) {
        mpz_class x;
        mpz_divexact(x.get_mpz_t(), q.get_mpz_t(), c.get_mpz_t());
        r.emplace(e, x);
    }
    return r;
}

UPoly u_primitive(const UPoly& p) {
    if (p.empty()) return p;
    mpz_class c = u_content(p);
    if (sgn(p.rbegin()->second) < 0) c = -c;
    return u_divexact_scalar(p, c);
}

// divides exactly or throws; only used where exactness is guaranteed
UPoly u_divexact(const UPoly& a, const UPoly& d) {
    UPoly rem = a, quot;
    const int dd = deg(d);
    const mpz_class& dc = d.rbegin()->second;
    while (!rem.empty()) {
        const int rd = deg(rem);
        if (rd < dd) throw std::logic_error("u_divexact: not divisible");
        mpz_class qc, r0;
        mpz_tdiv_qr(qc.get_mpz_t(), r0.get_mpz_t(), rem.rbegin()->second.get_mpz_t(), dc.get_mpz_t());
        if (r0 != 0) throw std::logic_error("u_divexact: leading coeff not divisible");
        UPoly mono;
        mono.emplace(rd - dd, qc);
        add_term(quot, rd - dd, qc);
        rem = u_sub(rem, u_mul(d, mono));
    }
    return quot;
}

// pseudo-remainder of a by b (in Z[x]); lc(b)^(deg a - deg b + 1) * a mod b
UPoly u_prem(UPoly a, const UPoly& b) {
    const int db = deg(b);
    const mpz_class lb = b.rbegin()->second;
    while (deg(a) >= db) {
        const int da = deg(a);
        const mpz_class la = a.rbegin()->second;
        UPoly shift_b;
        for (const auto& [e, c] : b) shift_b.emplace(e + da - db, c * la);
        a = u_sub(u_scale(a, lb), shift_b);
        if (deg(a) == da) throw std::logic_error("u_prem: no degree drop");
    }
    return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
    if (a.empty()) {
        if (!b.empty() && sgn(b.rbegin()->second) < 0) return u_scale(b, -1);
        return b;
    }
    if (b.empty()) {
        if (sgn(a.rbegin()->second) < 0) return u_scale(a, -1);
        return a;
    }
    mpz_class ca = u_content(a), cb = u_content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = u_primitive(a);
    b = u_primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = u_prem(a, b);
        a = b;
        b = u_primitive(r);
    }
    return u_scale(u_primitive(a), cg);
}

UPoly b_content(const BPoly& p) {
    UPoly g;
    for (const auto& [e, c] : p) g = u_gcd(g, c);
    return g;
}

BPoly b_divexact_ucoef(const BPoly& p, const UPoly& d) {
    BPoly r;
    for (const auto& [e, c] : p) r.emplace(e, u_divexact(c, d));
    return r;
}

BPoly b_primitive(const BPoly& p) {
    if (p.empty()) return p;
    return b_divexact_ucoef(p, b_content(p));
}

BPoly b_mul_ucoef(const BPoly& p, const UPoly& c) {
    BPoly r;
    for (const auto& [e, q] : p) r.emplace(e, u_mul(q, c));
    return r;
}

BPoly b_sub(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end()) {
            UPoly n;
            for (const auto& [eu, cu] : c) n.emplace(eu, -cu);
            r.emplace(e, std::move(n));
        } else {
            it->second = u_sub(it->second, c);
            if (it->second.empty()) r.erase(it);
        }
    }
    return r;
}

BPoly b_prem(BPoly a, const BPoly& b) {
    const int db = deg(b);
    const UPoly lb = b.rbegin()->second;
    while (deg(a) >= db) {
        const int da = deg(a);
        const UPoly la = a.rbegin()->second;
        BPoly shifted;
        for (const auto& [e, c] : b) shifted.emplace(e + da - db, u_mul(c, la));
        a = b_sub(b_mul_ucoef(a, lb), shifted);
        if (deg(a) == da) throw std::logic_error("b_prem: no degree drop");
    }
    return a;
}

BPoly b_gcd(BPoly a, BPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly ca = b_content(a), cb = b_content(b);
    UPoly cg = u_gcd(ca, cb);
    a = b_divexact_ucoef(a, ca);
    b = b_divexact_ucoef(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = b_prem(a, b);
        a = b;
        b = b_primitive(r);
    }
    return b_mul_ucoef(b_primitive(a), cg);
}

BPoly to_bpoly(const ParamPoly& p) {
    // clear rational denominators; gcd is defined up to units so scale is free
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BPoly r;
    for (const auto& [e, c] : p.terms()) {
        mpz_class ic = c.get_num() * (den_lcm / c.get_den());
        add_term(r[e[0]], e[1], ic);
        if (r[e[0]].empty()) r.erase(e[0]);
    }
    return r;
}

ParamPoly from_bpoly(const BPoly& p) {
    ParamPoly r;
    for (const auto& [e1, up] : p)
        for (const auto& [e2, c] : up) r.add_term({e1, e2}, Rat(c));
    return r;
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() && b.is_zero()) return ParamPoly();
    if (a.is_zero()) return b * (rat(1) / signed_content(b));
    if (b.is_zero()) return a * (rat(1) / signed_content(a));
    // a nonzero constant is coprime to everything
    if (a.is_constant() || b.is_constant()) return ParamPoly::constant(rat(1));
    if (a == b) return a * (rat(1) / signed_content(a));
    BPoly g = b_gcd(to_bpoly(a), to_bpoly(b));
    ParamPoly r = from_bpoly(g);
    if (r.is_zero()) return r;
    return r * (rat(1) / signed_content(r));
}

}  // namespace gl2f
