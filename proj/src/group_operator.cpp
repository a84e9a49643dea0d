#include "gl2f/group_operator.hpp"

#include <sstream>
#include <stdexcept>

#include "gl2f/errors.hpp"

namespace gl2f {

// ---------------------------------------------------------------------------
// CoordPoly
// ---------------------------------------------------------------------------

CoordPoly CoordPoly::constant(const Rat& c) {
    CoordPoly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

CoordPoly CoordPoly::coordinate(int v) {
    if (v < var::A || v > var::D) throw std::logic_error("coordinate: bad variable");
    CoordPoly p;
    CoordExp e{0, 0, 0, 0};
    e[v] = 1;
    p.add_term(e, rat(1));
    return p;
}

CoordPoly CoordPoly::det() {
    CoordPoly p;
    p.add_term({1, 0, 0, 1}, rat(1));
    p.add_term({0, 1, 1, 0}, rat(-1));
    return p;
}

void CoordPoly::add_term(const CoordExp& e, const Rat& c) {
    if (gl2f::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (gl2f::is_zero(it->second)) terms_.erase(it);
    }
}

CoordPoly CoordPoly::operator-() const {
    CoordPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CoordPoly CoordPoly::operator+(const CoordPoly& o) const {
    CoordPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

CoordPoly CoordPoly::operator-(const CoordPoly& o) const {
    CoordPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

CoordPoly CoordPoly::operator*(const CoordPoly& o) const {
    CoordPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
}

CoordPoly CoordPoly::operator*(const Rat& c) const {
    CoordPoly r;
    if (gl2f::is_zero(c)) return r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
    return r;
}

CoordPoly CoordPoly::diff(int v) const {
    CoordPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        CoordExp d = e;
        d[v] -= 1;
        r.add_term(d, c * rat(e[v]));
    }
    return r;
}

SymExpr CoordPoly::to_sym() const {
    std::vector<SymExpr> terms;
    for (const auto& [e, c] : terms_) {
        std::vector<SymExpr> factors{SymExpr::constant(c)};
        for (int v = 0; v < 4; ++v)
            if (e[v] > 0) factors.push_back(SymExpr::ipow(SymExpr::variable(v), e[v]));
        terms.push_back(SymExpr::mul(std::move(factors)));
    }
    return SymExpr::add(std::move(terms));
}

// ---------------------------------------------------------------------------
// LocalizedCoeff
// ---------------------------------------------------------------------------

namespace {

// exact division of p by det = ad - bc, if possible
bool try_divide_by_det(const CoordPoly& p, CoordPoly& q) {
    // division by a single divisor with leading term a*d under the map's
    // lexicographic key order; remainder-free iff divisible
    const CoordPoly det = CoordPoly::det();
    CoordPoly rem = p, quot;
    while (!rem.is_zero()) {
        // leading term of rem under lex on (a,b,c,d): last in the map
        const auto& [re, rc] = *rem.terms().rbegin();
        if (re[0] < 1 || re[3] < 1) return false;  // not divisible by a*d
        CoordExp qe{re[0] - 1, re[1], re[2], re[3] - 1};
        CoordPoly mono;
        mono.add_term(qe, rc);
        quot = quot + mono;
        rem = rem - det * mono;
    }
    q = quot;
    return true;
}

}  // namespace

LocalizedCoeff::LocalizedCoeff(CoordPoly num, int detpow) : num_(std::move(num)), detpow_(detpow) {
    if (detpow_ < 0) throw std::logic_error("LocalizedCoeff: negative det power");
    normalize();
}

void LocalizedCoeff::normalize() {
    if (num_.is_zero()) {
        detpow_ = 0;
        return;
    }
    CoordPoly q;
    while (detpow_ > 0 && try_divide_by_det(num_, q)) {
        num_ = q;
        --detpow_;
    }
}

LocalizedCoeff LocalizedCoeff::operator-() const {
    LocalizedCoeff r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedCoeff LocalizedCoeff::operator+(const LocalizedCoeff& o) const {
    // align det powers
    const int n = std::max(detpow_, o.detpow_);
    CoordPoly a = num_, b = o.num_;
    const CoordPoly det = CoordPoly::det();
    for (int i = detpow_; i < n; ++i) a = a * det;
    for (int i = o.detpow_; i < n; ++i) b = b * det;
    return LocalizedCoeff(a + b, n);
}

LocalizedCoeff LocalizedCoeff::operator*(const LocalizedCoeff& o) const {
    return LocalizedCoeff(num_ * o.num_, detpow_ + o.detpow_);
}

LocalizedCoeff LocalizedCoeff::operator*(const Rat& c) const {
    if (gl2f::is_zero(c)) return LocalizedCoeff();
    LocalizedCoeff r = *this;
    r.num_ = r.num_ * c;
    return r;
}

LocalizedCoeff LocalizedCoeff::diff(int v) const {
    // (p det^-N)' = p' det^-N - N p (d det/dv) det^{-N-1}
    static const CoordPoly ddet_by[4] = {
        CoordPoly::coordinate(var::D), -CoordPoly::coordinate(var::C),
        -CoordPoly::coordinate(var::B), CoordPoly::coordinate(var::A)};
    CoordPoly p1 = num_.diff(v);
    if (detpow_ == 0) return LocalizedCoeff(p1, 0);
    CoordPoly top = p1 * CoordPoly::det() - num_ * ddet_by[v] * rat(detpow_);
    return LocalizedCoeff(top, detpow_ + 1);
}

SymExpr LocalizedCoeff::to_sym() const {
    SymExpr s = num_.to_sym();
    if (detpow_ > 0) {
        SymExpr dinv = SymExpr::det_inv(SymExpr::variable(var::A), SymExpr::variable(var::B),
                                        SymExpr::variable(var::C), SymExpr::variable(var::D));
        s = s * SymExpr::ipow(dinv, detpow_);
    }
    return s;
}

// ---------------------------------------------------------------------------
// GroupOperator
// ---------------------------------------------------------------------------

GroupOperator GroupOperator::identity() { return constant(rat(1)); }

GroupOperator GroupOperator::constant(const Rat& c) {
    GroupOperator g;
    g.add_monomial({0, 0, 0, 0}, LocalizedCoeff::constant(c));
    return g;
}

GroupOperator GroupOperator::coordinate(int v) {
    GroupOperator g;
    g.add_monomial({0, 0, 0, 0}, LocalizedCoeff(CoordPoly::coordinate(v), 0));
    return g;
}

GroupOperator GroupOperator::derivative(int v) {
    GroupOperator g;
    DerivExp d{0, 0, 0, 0};
    d[v] = 1;
    g.add_monomial(d, LocalizedCoeff::constant(rat(1)));
    return g;
}

GroupOperator GroupOperator::det_inverse() {
    GroupOperator g;
    g.add_monomial({0, 0, 0, 0}, LocalizedCoeff(CoordPoly::constant(rat(1)), 1));
    return g;
}

GroupOperator GroupOperator::monomial(LocalizedCoeff coeff, DerivExp deriv) {
    GroupOperator g;
    g.add_monomial(deriv, coeff);
    return g;
}

void GroupOperator::add_monomial(const DerivExp& d, const LocalizedCoeff& c) {
    if (c.is_zero()) return;
    auto it = mono_.find(d);
    if (it == mono_.end()) {
        mono_.emplace(d, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) mono_.erase(it);
    }
}

GroupOperator GroupOperator::operator-() const {
    GroupOperator r;
    for (const auto& [d, c] : mono_) r.mono_.emplace(d, -c);
    return r;
}

GroupOperator GroupOperator::operator+(const GroupOperator& o) const {
    GroupOperator r = *this;
    for (const auto& [d, c] : o.mono_) r.add_monomial(d, c);
    return r;
}

GroupOperator GroupOperator::operator-(const GroupOperator& o) const {
    return *this + (-o);
}

GroupOperator GroupOperator::operator*(const Rat& c) const {
    GroupOperator r;
    if (gl2f::is_zero(c)) return r;
    for (const auto& [d, q] : mono_) r.mono_.emplace(d, q * c);
    return r;
}

GroupOperator GroupOperator::operator*(const GroupOperator& o) const {
    // (f D1)(g D2) = f * sum_{m <= D1} prod_x C(D1_x, m_x) (d^m g) D1-m+D2
    GroupOperator result;
    for (const auto& [d1, f] : mono_) {
        for (const auto& [d2, g] : o.mono_) {
            // iterate multi-indices m <= d1
            DerivExp m{0, 0, 0, 0};
            while (true) {
                Rat coef = 1;
                for (int v = 0; v < 4; ++v) coef *= binom(d1[v], m[v]);
                // d^m g by iterated single derivatives
                LocalizedCoeff gm = g;
                for (int v = 0; v < 4 && !gm.is_zero(); ++v)
                    for (int k = 0; k < m[v]; ++k) gm = gm.diff(v);
                if (!gm.is_zero()) {
                    DerivExp dr;
                    for (int v = 0; v < 4; ++v) dr[v] = d1[v] - m[v] + d2[v];
                    result.add_monomial(dr, f * gm * coef);
                }
                // next multi-index
                int v = 0;
                while (v < 4) {
                    if (m[v] < d1[v]) {
                        ++m[v];
                        break;
                    }
                    m[v] = 0;
                    ++v;
                }
                if (v == 4) break;
            }
        }
    }
    return result;
}

GroupOperator GroupOperator::pow(int n) const {
    if (n < 0) throw std::logic_error("GroupOperator::pow: negative exponent");
    GroupOperator r = identity();
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

bool GroupOperator::is_det_localized() const {
    for (const auto& [d, c] : mono_)
        if (c.detpow() > 0) return true;
    return false;
}

SymExpr GroupOperator::apply(const SymExpr& F, const SupportBox& box) const {
    if (is_det_localized() && box.detmin <= 0.0)
        throw SupportError("det-localized operator applied to a function whose support "
                           "is not certified to avoid det = 0");
    std::vector<SymExpr> terms;
    for (const auto& [d, c] : mono_) {
        SymExpr dF = F;
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < d[v]; ++k) dF = dF.diff(v);
        terms.push_back(c.to_sym() * dF);
    }
    return SymExpr::add(std::move(terms));
}

std::string GroupOperator::str() const {
    if (mono_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    static const char* coord_names[4] = {"a", "b", "c", "d"};
    static const char* deriv_names[4] = {"da", "db", "dc", "dd"};
    for (const auto& [d, coeff] : mono_) {
        for (const auto& [e, q] : coeff.num().terms()) {
            Rat mag = q;
            const bool neg = sgn(q) < 0;
            if (neg) mag = -mag;
            if (first_term) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first_term = false;
            std::vector<std::string> factors;
            if (mag != 1) factors.push_back(to_string(mag));
            for (int v = 0; v < 4; ++v) {
                if (e[v] == 0) continue;
                factors.push_back(e[v] == 1 ? coord_names[v]
                                            : std::string(coord_names[v]) + "^" +
                                                  std::to_string(e[v]));
            }
            if (coeff.detpow() > 0)
                factors.push_back(coeff.detpow() == 1
                                      ? "Dinv"
                                      : "Dinv^" + std::to_string(coeff.detpow()));
            for (int v = 0; v < 4; ++v) {
                if (d[v] == 0) continue;
                factors.push_back(d[v] == 1 ? deriv_names[v]
                                            : std::string(deriv_names[v]) + "^" +
                                                  std::to_string(d[v]));
            }
            if (factors.empty()) factors.push_back(to_string(mag));
            for (std::size_t i = 0; i < factors.size(); ++i)
                os << (i ? "*" : "") << factors[i];
        }
    }
    return os.str();
}

}  // namespace gl2f
