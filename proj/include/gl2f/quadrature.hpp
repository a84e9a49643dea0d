#pragma once

#include <complex>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "gl2f/fourier_operator.hpp"
#include "gl2f/sym_expr.hpp"

namespace gl2f {

using Complex = std::complex<double>;

// Gauss-Legendre nodes and weights on [-1, 1]; rules are cached per order.
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_rule(int order);

// static parallel-for over [0, n) with exception propagation
void parallel_for(int n, const std::function<void(int)>& fn);

// x^{mu||eps} = |x|^mu sgn(x)^eps; ZeroBase at x = 0
Complex power_signed(double x, Complex mu, int eps);

// Representation parameters (mu1, eps1; mu2, eps2).
struct ParamPoint {
    Complex m1{}, m2{};
    int e1 = 0, e2 = 0;

    // V1^k V2^l shifts mu by (k, l) and flips the parities in lockstep
    ParamPoint shifted(int k, int l) const {
        return {m1 + static_cast<double>(k), m2 + static_cast<double>(l),
                ((e1 + k) % 2 + 2) % 2, ((e2 + l) % 2 + 2) % 2};
    }
};

// Integration box for (u, v, w); empty means the kernel integral is 0.
struct Box3 {
    double ulo = 0, uhi = 0, vlo = 0, vhi = 0, wlo = 0, whi = 0;
    bool empty = true;
};

// Bounds of the kernel integrand support for the substitution
//   (a,b,c,d) = (u - t v, s u - s t v - t w, v, s v + w),
// derived from the support box by interval arithmetic and clipped away from
// the planes u = 0, w = 0 using det = u*w >= detmin (positive-branch boxes).
Box3 kernel_bounds(const SupportBox& box, double t, double s);

// Per-run memo for kernel evaluations, keyed by the full configuration.
class KernelCache {
public:
    using Key = std::tuple<int, int, int, double, double, double, double, double, double, int,
                           int, int>;
    bool lookup(const Key& k, Complex& out) const {
        auto it = memo_.find(k);
        if (it == memo_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const Key& k, Complex v) { memo_.emplace(k, v); }

private:
    std::map<Key, Complex> memo_;
};

// K_F(t, s | mu, eps) by tensor Gauss-Legendre quadrature:
//   iiint F(u - tv, su - stv - tw, v, sv + w) u^{-3/2+mu1||eps1} w^{-3/2+mu2||eps2} du dv dw
Complex eval_kernel(const SymExpr& F, const SupportBox& box, double t, double s,
                    const ParamPoint& pt, int order);

// d^p/dt^p d^q/ds^q of the kernel, differentiating the integrand exactly
Complex eval_kernel_deriv(const SymExpr& F, const SupportBox& box, double t, double s,
                          const ParamPoint& pt, int p, int q, int order,
                          KernelCache* cache = nullptr);

// Action of a normal-form operator on the kernel: each monomial
// coeff t^i s^j dt^p ds^q V1^k V2^l contributes
// coeff(mu) t^i s^j (dt^p ds^q K)(t, s | mu + (k,l), eps + (k,l)).
Complex apply_fourier_operator(const FourierOperator& A, const SymExpr& F,
                               const SupportBox& box, double t, double s, const ParamPoint& pt,
                               int order, KernelCache* cache = nullptr);

// Both sides of the integral-operator identity at one point t:
//   lhs = int F(g) f((b+td)/(a+tc)) (a+tc)^{-1+mu1-mu2||e1-e2} det^{1/2+mu2||e2} det^-2 dg
//   rhs = int K_F(t, s) f(s) ds
// f is a function of var::S supported on [f_lo, f_hi].
std::pair<Complex, Complex> rep_action_check(const SymExpr& F, const SupportBox& box,
                                             const SymExpr& f, double f_lo, double f_hi,
                                             double t, const ParamPoint& pt, int order4d,
                                             int kernel_order, int s_order);

// The plane-model transform J phi(u, sigma, eps) = int phi(tau, tau u) tau^{-sigma||eps} dtau
// over tau in [x_lo, x_hi]; du_order differentiates under the integral in u.
Complex j_transform(const SymExpr& phi, double x_lo, double x_hi, double u, Complex sigma,
                    int eps, int order, int du_order = 0);

}  // namespace gl2f
