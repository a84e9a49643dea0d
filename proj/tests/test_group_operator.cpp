#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2f/errors.hpp"
#include "gl2f/group_operator.hpp"

using namespace gl2f;
using GO = GroupOperator;

namespace {

GO A() { return GO::coordinate(var::A); }
GO B() { return GO::coordinate(var::B); }
GO C() { return GO::coordinate(var::C); }
GO D() { return GO::coordinate(var::D); }
GO Da() { return GO::derivative(var::A); }
GO Db() { return GO::derivative(var::B); }
GO Dc() { return GO::derivative(var::C); }
GO Dd() { return GO::derivative(var::D); }
GO Dinv() { return GO::det_inverse(); }

// right- and left-invariant vector fields
GO e_r(int i, int j) {
    switch (i * 10 + j) {
        case 11: return -(A() * Da()) - B() * Db();
        case 12: return -(C() * Da()) - D() * Db();
        case 21: return -(A() * Dc()) - B() * Dd();
        case 22: return -(C() * Dc()) - D() * Dd();
    }
    throw std::logic_error("bad index");
}

GO e_l(int i, int j) {
    switch (i * 10 + j) {
        case 11: return A() * Da() + C() * Dc();
        case 12: return A() * Db() + C() * Dd();
        case 21: return B() * Da() + D() * Dc();
        case 22: return B() * Db() + D() * Dd();
    }
    throw std::logic_error("bad index");
}

GO random_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nmono(1, 2), expo(0, 1), coef(-3, 3), dp(0, 1);
    GO g;
    for (int i = 0, n = nmono(rng); i < n; ++i) {
        CoordPoly p;
        p.add_term({expo(rng), expo(rng), expo(rng), expo(rng)}, rat(coef(rng) * 2 + 1));
        g.add_monomial({dp(rng), dp(rng), dp(rng), dp(rng)}, LocalizedCoeff(p, dp(rng)));
    }
    return g;
}

}  // namespace

TEST_CASE("Weyl relation da a = a da + 1") {
    CHECK(Da() * A() == A() * Da() + GO::identity());
    CHECK(commutator(Da(), B()) == GO());
    CHECK(commutator(Da(), Da()) == GO());
}

TEST_CASE("derivative of the localized coefficient") {
    // da Dinv = Dinv da - d Dinv^2  (chain rule on det)
    GO expected = Dinv() * Da() -
                  GO::monomial(LocalizedCoeff(CoordPoly::coordinate(var::D), 2), {0, 0, 0, 0});
    GO lhs = Da() * Dinv();
    GO rhs;
    rhs.add_monomial({1, 0, 0, 0}, LocalizedCoeff(CoordPoly::constant(rat(1)), 1));
    rhs.add_monomial({0, 0, 0, 0}, LocalizedCoeff(-CoordPoly::coordinate(var::D), 2));
    CHECK(lhs == rhs);
    CHECK(lhs == expected);
}

TEST_CASE("localization: Dinv * det = 1") {
    GO det = A() * D() - B() * C();
    CHECK(Dinv() * det == GO::identity());
    CHECK(det * Dinv() == GO::identity());
}

TEST_CASE("minimal det power normalization") {
    // (a d - b c) * Dinv^2 must normalize to detpow 1
    CoordPoly det = CoordPoly::det();
    LocalizedCoeff c(det * det * rat(3), 2);
    CHECK(c.detpow() == 0);
    CHECK(c == LocalizedCoeff::constant(rat(3)));
    LocalizedCoeff h(det, 2);
    CHECK(h.detpow() == 1);
}

TEST_CASE("gl(2) structure constants for both invariant families") {
    auto delta = [](int x, int y) { return x == y ? 1 : 0; };
    for (auto field : {&e_r, &e_l}) {
        for (int i : {1, 2})
            for (int j : {1, 2})
                for (int k : {1, 2})
                    for (int l : {1, 2}) {
                        GO lhs = commutator(field(i, j), field(k, l));
                        GO rhs = field(i, l) * rat(delta(j, k)) - field(k, j) * rat(delta(l, i));
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("right and left invariant fields commute") {
    for (int i : {1, 2})
        for (int j : {1, 2})
            for (int k : {1, 2})
                for (int l : {1, 2}) CHECK(commutator(e_r(i, j), e_l(k, l)) == GO());
}

TEST_CASE("associativity and distributivity on random operators") {
    std::mt19937_64 rng(5150);
    for (int it = 0; it < 20; ++it) {
        GO x = random_op(rng), y = random_op(rng), z = random_op(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("apply: identity, derivative vs finite differences, det at identity") {
    auto [F, box] = std_bump_F(rat(2, 5));
    CHECK(GO::identity().apply(F, box) == F);

    SymExpr dbF = Db().apply(F, box);
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> off(-0.3, 0.3);
    for (int i = 0; i < 5; ++i) {
        std::array<double, var::COUNT> pt{};
        pt[var::A] = 1 + off(rng);
        pt[var::B] = off(rng);
        pt[var::C] = off(rng);
        pt[var::D] = 1 + off(rng);
        auto up = pt, dn = pt;
        up[var::B] += 1e-5;
        dn[var::B] -= 1e-5;
        const double fdv = (F.eval(up) - F.eval(dn)) / 2e-5;
        const double ex = dbF.eval(pt);
        CHECK(std::abs(ex - fdv) / std::max(std::abs(ex), 1e-8) < 1e-6);
    }

    // det = 1 at the identity matrix
    SymExpr g = Dinv().apply(F, box);
    std::array<double, var::COUNT> id_pt{};
    id_pt[var::A] = 1;
    id_pt[var::D] = 1;
    CHECK(g.eval(id_pt) == doctest::Approx(F.eval(id_pt)));
}

TEST_CASE("apply is a module action") {
    auto [F, box] = std_bump_F(rat(2, 5));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> off(-0.25, 0.25);
    for (int it = 0; it < 6; ++it) {
        GO x = random_op(rng), y = random_op(rng);
        SymExpr lhs = (x * y).apply(F, box);
        SymExpr rhs = x.apply(y.apply(F, box), box);
        for (int i = 0; i < 5; ++i) {
            std::array<double, var::COUNT> pt{};
            pt[var::A] = 1 + off(rng);
            pt[var::B] = off(rng);
            pt[var::C] = off(rng);
            pt[var::D] = 1 + off(rng);
            const double a = lhs.eval(pt), b = rhs.eval(pt);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("SupportError when support box does not certify det > 0") {
    auto [F, box] = std_bump_F(rat(2, 5));
    SupportBox bad = box;
    bad.detmin = 0.0;
    CHECK_THROWS_AS(Dinv().apply(F, bad), SupportError);
    CHECK_NOTHROW(Da().apply(F, bad));  // not det-localized
}

TEST_CASE("printing round-trips basic shapes") {
    CHECK(GO().str() == "0");
    CHECK(GO::identity().str() == "1");
    CHECK((Da() * A()).str() == "1 + a*da");
    GO w = Db() + C() * Dinv();
    CHECK(w.str() == "c*Dinv + db");
}
