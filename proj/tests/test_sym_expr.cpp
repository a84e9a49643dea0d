#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gl2f/errors.hpp"
#include "gl2f/sym_expr.hpp"

using namespace gl2f;

namespace {

double eval4(const SymExpr& e, double a, double b, double c, double d) {
    double vals[var::COUNT] = {a, b, c, d, 0, 0, 0, 0, 0};
    return e.eval(vals);
}

// central finite difference in variable v
double fd(const SymExpr& e, int v, std::array<double, var::COUNT> p, double h) {
    auto hi = p, lo = p;
    hi[v] += h;
    lo[v] -= h;
    return (e.eval(hi) - e.eval(lo)) / (2 * h);
}

}  // namespace

TEST_CASE("bump values") {
    SymExpr psi = SymExpr::bump(SymExpr::variable(var::B), rat(2, 5));
    double vals[var::COUNT] = {};
    CHECK(psi.eval(vals) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    vals[var::B] = 0.4;  // boundary: zero, no exception
    CHECK(psi.eval(vals) == 0.0);
    vals[var::B] = 0.7;
    CHECK(psi.eval(vals) == 0.0);
}

TEST_CASE("standard test function") {
    auto [F, box] = std_bump_F(rat(2, 5));
    CHECK(box.detmin == doctest::Approx(0.2));
    CHECK(box.iv[var::A].lo == doctest::Approx(0.6));
    CHECK(box.iv[var::A].hi == doctest::Approx(1.4));
    CHECK(eval4(F, 1, 0, 0, 1) == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
    CHECK(eval4(F, 1.5, 0, 0, 1) == 0.0);

    CHECK_THROWS_AS(std_bump_F(rat(1, 2)), BadRadius);
    CHECK_THROWS_AS(std_bump_F(rat(0)), BadRadius);
    CHECK_THROWS_AS(std_bump_F(rat(-1, 4)), BadRadius);
}

TEST_CASE("derivative of a constant and of an even bump at 0") {
    CHECK(SymExpr::constant(7).diff(var::A).is_zero());
    SymExpr psi = SymExpr::bump(SymExpr::variable(var::B), rat(2, 5));
    double vals[var::COUNT] = {};
    CHECK(psi.diff(var::B).eval(vals) == 0.0);
}

TEST_CASE("exact derivative matches finite differences in-support") {
    auto [F, box] = std_bump_F(rat(2, 5));
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> off(-0.3, 0.3);
    for (int v : {var::A, var::B, var::C, var::D}) {
        SymExpr dF = F.diff(v);
        for (int i = 0; i < 5; ++i) {
            std::array<double, var::COUNT> p{};
            p[var::A] = 1.0 + off(rng);
            p[var::B] = off(rng);
            p[var::C] = off(rng);
            p[var::D] = 1.0 + off(rng);
            const double exact = dF.eval(p);
            const double approx = fd(F, v, p, 1e-5);
            const double scale = std::max(std::abs(exact), 1e-8);
            CHECK(std::abs(exact - approx) / scale < 1e-6);
        }
    }
}

TEST_CASE("mixed partials commute") {
    auto [F, box] = std_bump_F(rat(2, 5));
    SymExpr dab = F.diff(var::A).diff(var::B);
    SymExpr dba = F.diff(var::B).diff(var::A);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> off(-0.35, 0.35);
    for (int i = 0; i < 10; ++i) {
        std::array<double, var::COUNT> p{};
        p[var::A] = 1.0 + off(rng);
        p[var::B] = off(rng);
        p[var::C] = off(rng);
        p[var::D] = 1.0 + off(rng);
        const double x = dab.eval(p), y = dba.eval(p);
        CHECK(std::abs(x - y) <= 1e-10 * std::max(1.0, std::abs(x)));
    }
}

TEST_CASE("smooth seam: derivatives vanish approaching the bump boundary") {
    SymExpr psi = SymExpr::bump(SymExpr::variable(var::B), rat(2, 5));
    SymExpr d = psi;
    for (int k = 1; k <= 4; ++k) {
        d = d.diff(var::B);
        double prev = std::numeric_limits<double>::infinity();
        for (double delta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
            std::array<double, var::COUNT> p{};
            p[var::B] = 0.4 - delta;
            const double v = std::abs(d.eval(p));
            CHECK(v <= prev * (1 + 1e-12));
            prev = v;
        }
        CHECK(prev <= 1e-30);
    }
}

TEST_CASE("support soundness: zero outside the box") {
    auto [F, box] = std_bump_F(rat(1, 4));
    CHECK(eval4(F, 1.3, 0, 0, 1) == 0.0);     // a outside [0.75, 1.25]
    CHECK(eval4(F, 1, 0.26, 0, 1) == 0.0);    // b outside
    CHECK(eval4(F, 1, 0, -0.3, 1) == 0.0);    // c outside
    CHECK(eval4(F, 1, 0, 0, 2.0) == 0.0);     // d outside
}

TEST_CASE("product short-circuit keeps evaluation total at the seam") {
    // psi'(b) contains (1-(b/r)^2)^-2, singular exactly at |b| = r where the
    // bump factor is 0; the product must evaluate to 0, not NaN
    SymExpr psi = SymExpr::bump(SymExpr::variable(var::B), rat(2, 5));
    SymExpr dpsi = psi.diff(var::B);
    std::array<double, var::COUNT> p{};
    p[var::B] = 0.4;
    CHECK(dpsi.eval(p) == 0.0);
    p[var::B] = -0.4;
    CHECK(dpsi.eval(p) == 0.0);
}

TEST_CASE("det_inv node") {
    SymExpr dinv = SymExpr::det_inv(SymExpr::variable(var::A), SymExpr::variable(var::B),
                                    SymExpr::variable(var::C), SymExpr::variable(var::D));
    std::array<double, var::COUNT> p{2, 1, 1, 1};
    CHECK(dinv.eval(p) == doctest::Approx(1.0));
    p = {1, 1, 1, 1};
    CHECK_THROWS_AS(dinv.eval(p), DetZero);

    // d/da (1/det) = -d/det^2
    SymExpr dd = dinv.diff(var::A);
    p = {2, 1, 1, 1};
    CHECK(dd.eval(p) == doctest::Approx(-1.0));
}

TEST_CASE("substitution") {
    // psi(a-1) with a -> u - t*v
    SymExpr a = SymExpr::variable(var::A);
    SymExpr psi = SymExpr::bump(a - SymExpr::constant(1), rat(2, 5));
    SymExpr sub = psi.subst({{var::A, SymExpr::variable(var::U) -
                                          SymExpr::variable(var::T) * SymExpr::variable(var::V)}});
    std::array<double, var::COUNT> p{};
    p[var::U] = 1.1;
    p[var::T] = 0.5;
    p[var::V] = 0.2;  // u - t v = 1.0 -> psi(0) = e^-1
    CHECK(sub.eval(p) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("re-evaluation of a product tree is reproducible") {
    auto [F, box] = std_bump_F(rat(2, 5));
    std::array<double, var::COUNT> p{1.05, 0.1, -0.2, 0.93};
    const double v1 = F.eval(p);
    const double v2 = F.eval(p);
    CHECK(v1 == v2);
    CHECK(v1 > 0.0);
}
