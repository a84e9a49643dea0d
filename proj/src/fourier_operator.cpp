#include "gl2f/fourier_operator.hpp"

#include <sstream>

namespace gl2f {

FourierOperator FourierOperator::one() { return constant(RationalFunction::constant(rat(1))); }

FourierOperator FourierOperator::constant(const RationalFunction& f) {
    FourierOperator r;
    r.add_monomial({}, f);
    return r;
}

FourierOperator FourierOperator::t() { return monomial(RationalFunction::constant(rat(1)), {.i = 1}); }
FourierOperator FourierOperator::s() { return monomial(RationalFunction::constant(rat(1)), {.j = 1}); }
FourierOperator FourierOperator::dt() { return monomial(RationalFunction::constant(rat(1)), {.p = 1}); }
FourierOperator FourierOperator::ds() { return monomial(RationalFunction::constant(rat(1)), {.q = 1}); }

FourierOperator FourierOperator::shift(int k, int l) {
    return monomial(RationalFunction::constant(rat(1)), {.k = k, .l = l});
}

FourierOperator FourierOperator::monomial(const RationalFunction& coeff, const FourierKey& key) {
    FourierOperator r;
    r.add_monomial(key, coeff);
    return r;
}

bool FourierOperator::is_one() const {
    return mono_.size() == 1 && mono_.begin()->first == FourierKey{} &&
           mono_.begin()->second.is_one();
}

void FourierOperator::add_monomial(const FourierKey& key, const RationalFunction& coeff) {
    if (key.i < 0 || key.j < 0 || key.p < 0 || key.q < 0)
        throw std::invalid_argument("t, s, dt, ds powers must be nonnegative");
    if (coeff.is_zero()) return;
    auto it = mono_.find(key);
    if (it == mono_.end()) {
        mono_.emplace(key, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) mono_.erase(it);
    }
}

FourierOperator FourierOperator::operator-() const {
    FourierOperator r;
    for (const auto& [k, c] : mono_) r.mono_.emplace(k, -c);
    return r;
}

FourierOperator FourierOperator::operator+(const FourierOperator& o) const {
    FourierOperator r = *this;
    for (const auto& [k, c] : o.mono_) r.add_monomial(k, c);
    return r;
}

FourierOperator FourierOperator::operator-(const FourierOperator& o) const {
    return *this + (-o);
}

FourierOperator FourierOperator::operator*(const FourierOperator& o) const {
    FourierOperator r;
    for (const auto& [k1, c1] : mono_) {
        for (const auto& [k2, c2] : o.mono_) {
            // V1^k V2^l of the left factor shifts the right coefficient
            const RationalFunction c = c1 * c2.shifted(k1.k, k1.l);
            // reorder dt^p1 past t^i2 and ds^q1 past s^j2
            for (int m = 0; m <= std::min(k1.p, k2.i); ++m) {
                const Rat cm = binom(k1.p, m) * binom(k2.i, m) * falling(m, m);
                for (int n = 0; n <= std::min(k1.q, k2.j); ++n) {
                    const Rat cn = binom(k1.q, n) * binom(k2.j, n) * falling(n, n);
                    FourierKey key{k1.k + k2.k, k1.l + k2.l, k1.i + k2.i - m,
                                   k1.j + k2.j - n, k1.p + k2.p - m, k1.q + k2.q - n};
                    r.add_monomial(key, c * RationalFunction::constant(cm * cn));
                }
            }
        }
    }
    return r;
}

FourierOperator FourierOperator::scaled(const RationalFunction& f) const {
    FourierOperator r;
    if (f.is_zero()) return r;
    for (const auto& [k, c] : mono_) r.add_monomial(k, f * c);
    return r;
}

FourierOperator FourierOperator::pow(int n) const {
    if (n < 0) throw std::logic_error("FourierOperator::pow: negative exponent");
    FourierOperator r = one();
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

int FourierOperator::max_ts_degree() const {
    int d = 0;
    for (const auto& [k, c] : mono_) d = std::max(d, k.i + k.j);
    return d;
}

int FourierOperator::max_deriv_degree() const {
    int d = 0;
    for (const auto& [k, c] : mono_) d = std::max(d, k.p + k.q);
    return d;
}

namespace {

void append_powers(std::ostringstream& os, const FourierKey& k, bool& any) {
    const struct {
        const char* name;
        int e;
    } parts[] = {{"t", k.i}, {"s", k.j}, {"dt", k.p}, {"ds", k.q}, {"V1", k.k}, {"V2", k.l}};
    for (const auto& part : parts) {
        if (part.e == 0) continue;
        if (any) os << " ";
        any = true;
        os << part.name;
        if (part.e != 1) os << "^" << part.e;
    }
}

}  // namespace

std::string FourierOperator::str() const {
    if (mono_.empty()) return "0";
    // a lone scalar prints without the wrapping parentheses
    if (mono_.size() == 1 && mono_.begin()->first == FourierKey{}) {
        const RationalFunction& c = mono_.begin()->second;
        if (c.den() == ParamPoly::constant(rat(1))) return c.num().str();
        return c.str();
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : mono_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream term;
        bool any = false;
        const bool coeff_is_one = c.is_one();
        if (!coeff_is_one) {
            term << c.str();
            any = true;
        }
        append_powers(term, k, any);
        if (!any) term << "1";
        os << term.str();
    }
    return os.str();
}

std::string FourierOperator::str_grouped() const {
    if (mono_.empty()) return "0";
    std::ostringstream os;
    // monomial key order is (k, l) first, so groups are contiguous; each
    // summand renders as Q_{kl} V1^k V2^l
    auto it = mono_.begin();
    bool first_group = true;
    while (it != mono_.end()) {
        const int k = it->first.k, l = it->first.l;
        std::vector<std::string> terms;
        for (; it != mono_.end() && it->first.k == k && it->first.l == l; ++it) {
            std::ostringstream term;
            bool any = false;
            if (!it->second.is_one()) {
                term << it->second.str();
                any = true;
            }
            FourierKey bare = it->first;
            bare.k = bare.l = 0;
            append_powers(term, bare, any);
            if (!any) term << "1";
            terms.push_back(term.str());
        }
        std::ostringstream vs;
        bool vany = false;
        append_powers(vs, FourierKey{k, l, 0, 0, 0, 0}, vany);

        std::ostringstream line;
        if (!vany) {
            for (std::size_t i = 0; i < terms.size(); ++i) line << (i ? " + " : "") << terms[i];
        } else if (terms.size() == 1 && terms[0] == "1") {
            line << vs.str();
        } else if (terms.size() == 1) {
            line << terms[0] << " " << vs.str();
        } else {
            line << "(";
            for (std::size_t i = 0; i < terms.size(); ++i) line << (i ? " + " : "") << terms[i];
            line << ") " << vs.str();
        }
        os << (first_group ? "" : "\n+ ") << line.str();
        first_group = false;
    }
    return os.str();
}

}  // namespace gl2f
