#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "gl2f/errors.hpp"
#include "gl2f/group_operator.hpp"
#include "gl2f/quadrature.hpp"
#include "gl2f/theta.hpp"

using namespace gl2f;

namespace {

// regression constants, frozen from a 32/64/128 refinement run that agreed
// with an independent separable-product evaluation to 1e-14
constexpr double kKernelRef = 2.276592745548633e-03;
const Complex kJRef{7.853041738934578e-02, -2.217956416790683e-02};

const ParamPoint kGenericPt{{0.23, 0.31}, {-0.41, -0.17}, 0, 0};

}  // namespace

TEST_CASE("gauss rules integrate polynomials exactly") {
    // order n is exact through degree 2n-1
    const GaussRule& r6 = gauss_rule(6);
    double acc = 0;
    for (int i = 0; i < 6; ++i) acc += r6.w[i] * std::pow(r6.x[i], 10);
    CHECK(acc == doctest::Approx(2.0 / 11.0).epsilon(1e-13));

    const GaussRule& r64 = gauss_rule(64);
    double sum_w = 0;
    for (double w : r64.w) sum_w += w;
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    acc = 0;
    for (int i = 0; i < 64; ++i) acc += r64.w[i] * std::pow(r64.x[i], 100);
    CHECK(acc == doctest::Approx(2.0 / 101.0).epsilon(1e-12));
}

TEST_CASE("signed powers") {
    CHECK(power_signed(-1.0, 0.0, 1) == Complex(-1.0, 0.0));
    CHECK(power_signed(4.0, 0.5, 0).real() == doctest::Approx(2.0).epsilon(1e-15));
    const Complex v = power_signed(2.0, Complex(0, 1), 0);
    CHECK(v.real() == doctest::Approx(std::cos(std::log(2.0))).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(std::sin(std::log(2.0))).epsilon(1e-15));
    CHECK_THROWS_AS(power_signed(0.0, 1.0, 0), ZeroBase);
    // even parity ignores the sign, odd parity flips it
    CHECK(power_signed(-2.0, 2.0, 0).real() == doctest::Approx(4.0));
    CHECK(power_signed(-2.0, 2.0, 1).real() == doctest::Approx(-4.0));
}

TEST_CASE("kernel bounds") {
    auto [F, box] = std_bump_F(rat(2, 5));

    Box3 b = kernel_bounds(box, 0.0, 0.0);
    CHECK_FALSE(b.empty);
    CHECK(b.ulo == doctest::Approx(0.6));
    CHECK(b.uhi == doctest::Approx(1.4));
    CHECK(b.vlo == doctest::Approx(-0.4));
    CHECK(b.vhi == doctest::Approx(0.4));
    CHECK(b.wlo == doctest::Approx(0.6));
    CHECK(b.whi == doctest::Approx(1.4));

    b = kernel_bounds(box, 1.0, 0.0);
    CHECK_FALSE(b.empty);
    // u in [0.2, 1.8], already above the det clip 0.2/1.4
    CHECK(b.ulo == doctest::Approx(0.2));
    CHECK(b.uhi == doctest::Approx(1.8));
    CHECK(b.wlo == doctest::Approx(std::max(0.6, 0.2 / 1.8)));

    // box far from reachability: a support box around negative u
    SupportBox far = box;
    far.set(var::A, -2.0, -1.5);
    far.set(var::D, -2.0, -1.5);
    Box3 e = kernel_bounds(far, 0.0, 0.0);
    CHECK(e.empty);
    CHECK(eval_kernel(F, far, 0.0, 0.0, kGenericPt, 16) == Complex(0.0, 0.0));
}

TEST_CASE("determinant of the substituted matrix is u w exactly") {
    // expand both sides as integer polynomials in (t, s, u, v, w)
    using Mono = std::array<int, 5>;  // exponents of t, s, u, v, w
    using Poly = std::map<Mono, long>;
    auto mono = [](int t, int s, int u, int v, int w, long c) {
        Poly p;
        p[{t, s, u, v, w}] = c;
        return p;
    };
    auto add = [](Poly a, const Poly& b) {
        for (auto& [e, c] : b) {
            a[e] += c;
            if (a[e] == 0) a.erase(e);
        }
        return a;
    };
    auto mul = [](const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ea, ca] : a)
            for (auto& [eb, cb] : b) {
                Mono e;
                for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
                r[e] += ca * cb;
                if (r[e] == 0) r.erase(e);
            }
        return r;
    };
    Poly U = mono(0, 0, 1, 0, 0, 1), V = mono(0, 0, 0, 1, 0, 1), W = mono(0, 0, 0, 0, 1, 1);
    Poly T = mono(1, 0, 0, 0, 0, 1), S = mono(0, 1, 0, 0, 0, 1);
    Poly A = add(U, mul(mono(0, 0, 0, 0, 0, -1), mul(T, V)));
    Poly B = add(add(mul(S, U), mul(mono(0, 0, 0, 0, 0, -1), mul(S, mul(T, V)))),
                 mul(mono(0, 0, 0, 0, 0, -1), mul(T, W)));
    Poly C = V;
    Poly D = add(mul(S, V), W);
    Poly det = add(mul(A, D), mul(mono(0, 0, 0, 0, 0, -1), mul(B, C)));
    CHECK(det == mul(U, W));
}

TEST_CASE("kernel: zero input, linearity, frozen regression value") {
    auto [F, box] = std_bump_F(rat(2, 5));
    CHECK(eval_kernel(SymExpr::constant(0), box, 0.2, -0.3, kGenericPt, 16) == Complex(0, 0));

    const Complex k1 = eval_kernel(F, box, 0.2, -0.3, kGenericPt, 24);
    const Complex k2 = eval_kernel(SymExpr::constant(2) * F, box, 0.2, -0.3, kGenericPt, 24);
    CHECK(std::abs(k2 - 2.0 * k1) <= 1e-14 * std::abs(k1));

    const ParamPoint zero_pt{{0, 0}, {0, 0}, 0, 0};
    const Complex k = eval_kernel(F, box, 0.0, 0.0, zero_pt, 64);
    CHECK(std::abs(k.real() - kKernelRef) / kKernelRef < 1e-8);
    CHECK(k.imag() == 0.0);
}

TEST_CASE("kernel convergence under order doubling") {
    auto [F, box] = std_bump_F(rat(2, 5));
    const Complex k64 = eval_kernel(F, box, 0.7, 0.2, kGenericPt, 64);
    const Complex k128 = eval_kernel(F, box, 0.7, 0.2, kGenericPt, 128);
    CHECK(std::abs(k128 - k64) / std::abs(k128) < 1e-8);
}

TEST_CASE("kernel derivatives vs finite differences") {
    auto [F, box] = std_bump_F(rat(2, 5));
    const double t = 0.2, s = -0.3;

    const Complex d1 = eval_kernel_deriv(F, box, t, s, kGenericPt, 1, 0, 32);
    const double h = 1e-4;
    const Complex fd1 = (eval_kernel(F, box, t + h, s, kGenericPt, 32) -
                         eval_kernel(F, box, t - h, s, kGenericPt, 32)) /
                        (2 * h);
    CHECK(std::abs(d1 - fd1) / std::abs(d1) < 1e-5);

    const Complex d2 = eval_kernel_deriv(F, box, t, s, kGenericPt, 0, 2, 32);
    const Complex fd2 = (eval_kernel(F, box, t, s + h, kGenericPt, 32) -
                         2.0 * eval_kernel(F, box, t, s, kGenericPt, 32) +
                         eval_kernel(F, box, t, s - h, kGenericPt, 32)) /
                        (h * h);
    CHECK(std::abs(d2 - fd2) / std::abs(d2) < 1e-4);

    // p=q=0 falls back to the plain kernel
    CHECK(eval_kernel_deriv(F, box, t, s, kGenericPt, 0, 0, 24) ==
          eval_kernel(F, box, t, s, kGenericPt, 24));
}

TEST_CASE("operator action on the kernel") {
    auto [F, box] = std_bump_F(rat(2, 5));
    const double t = 0.2, s = 0.7;

    // identity
    CHECK(apply_fourier_operator(FourierOperator::one(), F, box, t, s, kGenericPt, 24) ==
          eval_kernel(F, box, t, s, kGenericPt, 24));

    // V1^-1 V2^-1 is evaluation at shifted parameters with both parities flipped
    const Complex via_op =
        apply_fourier_operator(FourierOperator::shift(-1, -1), F, box, t, s, kGenericPt, 24);
    const ParamPoint shifted{kGenericPt.m1 - 1.0, kGenericPt.m2 - 1.0, 1, 1};
    CHECK(via_op == eval_kernel(F, box, t, s, shifted, 24));

    // image of multiplication by c matches the kernel of c*F
    KernelCache cache;
    const SymExpr cF = SymExpr::variable(var::C) * F;
    for (auto [tt, ss] : {std::pair{0.2, 0.7}, std::pair{-0.8, -0.3}}) {
        const Complex lhs = eval_kernel(cF, box, tt, ss, kGenericPt, 64);
        const Complex rhs = apply_fourier_operator(theta_generator(Gen::C), F, box, tt, ss,
                                                   kGenericPt, 64, &cache);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-6);
    }
}

TEST_CASE("kernel cache returns identical values") {
    auto [F, box] = std_bump_F(rat(2, 5));
    KernelCache cache;
    const Complex a = eval_kernel_deriv(F, box, 0.2, 0.7, kGenericPt, 1, 0, 24, &cache);
    const Complex b = eval_kernel_deriv(F, box, 0.2, 0.7, kGenericPt, 1, 0, 24, &cache);
    const Complex c = eval_kernel_deriv(F, box, 0.2, 0.7, kGenericPt, 1, 0, 24);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("kernel is holomorphic in mu1 (discrete Cauchy-Riemann probe)") {
    auto [F, box] = std_bump_F(rat(2, 5));
    const double h = 1e-4;
    auto K = [&](Complex m1) {
        return eval_kernel(F, box, 0.2, -0.3, {m1, kGenericPt.m2, 0, 1}, 32);
    };
    const Complex kx = (K(kGenericPt.m1 + h) - K(kGenericPt.m1 - h)) / (2 * h);
    const Complex ky =
        (K(kGenericPt.m1 + Complex(0, h)) - K(kGenericPt.m1 - Complex(0, h))) / (2 * h);
    CHECK(std::abs(ky - Complex(0, 1) * kx) / std::abs(kx) < 1e-6);
}

TEST_CASE("plane-model transform") {
    const SymExpr phi = SymExpr::mul(
        {SymExpr::bump(SymExpr::variable(var::X) - SymExpr::constant(2), rat(1, 2)),
         SymExpr::bump(SymExpr::variable(var::Y), rat(1))});

    CHECK(j_transform(SymExpr::constant(0), 1.5, 2.5, 0.3, {0.2, 0.5}, 0, 16) == Complex(0, 0));

    // support in {x > 0} makes the parity irrelevant
    const Complex j0 = j_transform(phi, 1.5, 2.5, 0.3, {0.2, 0.5}, 0, 48);
    const Complex j1 = j_transform(phi, 1.5, 2.5, 0.3, {0.2, 0.5}, 1, 48);
    CHECK(j0 == j1);

    const Complex jref = j_transform(phi, 1.5, 2.5, 0.0, {0, 0.4}, 0, 64);
    CHECK(std::abs(jref - kJRef) / std::abs(kJRef) < 1e-10);
}

TEST_CASE("pole in a coefficient surfaces as PoleError") {
    auto [F, box] = std_bump_F(rat(2, 5));
    // mu1 = mu2 sits on the pole line of the c-image coefficient 1/(mu1-mu2)
    const ParamPoint bad{{0.2, 0.1}, {0.2, 0.1}, 0, 0};
    CHECK_THROWS_AS(
        apply_fourier_operator(theta_generator(Gen::C), F, box, 0.2, 0.7, bad, 16),
        PoleError);
}
