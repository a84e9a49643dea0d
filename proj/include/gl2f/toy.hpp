#pragma once

#include <array>
#include <string>
#include <vector>

#include "gl2f/quadrature.hpp"
#include "gl2f/report.hpp"
#include "gl2f/sym_expr.hpp"

namespace gl2f {

// Plane model: J phi(u, sigma, eps) = int phi(t, tu) t^{-sigma||eps} dt with
// the shift V F(u, sigma, eps) = F(u, sigma+1, eps+1).

enum class ToyGen { X, Y, Dx, Dy };

// One term c * sigma^se * u^a * (d/du)^b * V^k of a plane-model operator.
struct ToyTerm {
    Rat coeff;
    int sigma_pow = 0;
    int u_pow = 0;
    int du_pow = 0;
    int v_pow = 0;
};

struct ToyOperator {
    std::vector<ToyTerm> terms;
    std::string str() const;

    // apply to J phi at (u, sigma, eps); derivatives in u go under the integral
    Complex apply_to_transform(const SymExpr& phi, double x_lo, double x_hi, double u,
                               Complex sigma, int eps, int order) const;
};

// x -> V^-1; y -> u V^-1; dx -> sigma V - u du V; dy -> du V.
// The dy row is the computed-correct form; the printed display carries a
// spurious u factor, and toy_dy_display() preserves it for the comparison
// case in the verification suite.
ToyOperator toy_theta(ToyGen g);
ToyOperator toy_dy_display();

// default phi = psi_{1/2}(x - 2) psi_1(y), supported in x in [1.5, 2.5]
SymExpr toy_phi();
inline constexpr double kToyXLo = 1.5, kToyXHi = 2.5;

struct ToyConfig {
    int order = 128;     // 1-D quadrature order
    double tol = 1e-8;
};

// the four correspondences on a grid of (u, sigma, eps) samples, the
// dy-display decision case, parity independence and the [dx, x] commutator
VerificationReport toy_verify_correspondences(const ToyConfig& cfg);

// J(T(g) phi)(u, s, e) = J phi((b+ud)/(a+uc), s, e) (a+uc)^{-1+sigma||eps}
// for unimodular g; SingularSample at a + uc = 0
VerificationReport toy_intertwining_check(const std::array<double, 4>& g, const ToyConfig& cfg);

// identity, diag(2, 1/2) and the unit shear
VerificationReport toy_intertwining_suite(const ToyConfig& cfg);

}  // namespace gl2f
