#include "gl2f/verify.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

#include "gl2f/errors.hpp"
#include "gl2f/quadrature.hpp"
#include "gl2f/theta.hpp"
#include "gl2f/toy.hpp"

namespace gl2f {

namespace {

using FO = FourierOperator;
using GO = GroupOperator;

// primary and secondary generic parameter pairs, off every line mu1-mu2 in Z
const Complex kMu1A{0.23, 0.31}, kMu2A{-0.41, -0.17};
const Complex kMu1B{-0.37, 0.52}, kMu2B{0.19, -0.23};

// (t, s) pairs drawn from {-0.8, -0.3, 0.2, 0.7}^2 for which the kernel
// support is nonempty (the b-argument interval s*a - t*d + t*s*c meets the
// b-interval of the standard box); ordered so that low point counts and
// loose quadrature orders use the best-conditioned samples first
const std::vector<std::pair<double, double>>& sample_pairs() {
    static const std::vector<std::pair<double, double>> pairs = {
        {0.2, 0.2},   {-0.3, -0.3}, {0.7, 0.7},  {-0.8, -0.8}, {-0.8, -0.3},
        {-0.3, -0.8}, {0.2, 0.7},   {0.7, 0.2},  {-0.3, 0.2},  {0.2, -0.3},
    };
    return pairs;
}

struct MuPair {
    Complex m1, m2;
    const char* tag;
};

const std::array<MuPair, 2> kMuPairs{{{kMu1A, kMu2A, "muA"}, {kMu1B, kMu2B, "muB"}}};

constexpr std::array<std::pair<int, int>, 4> kParityPairs{
    {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

std::string point_label(const char* mu_tag, double t, double s, int e1, int e2) {
    std::ostringstream os;
    os << mu_tag << " t=" << t << " s=" << s << " eps=(" << e1 << "," << e2 << ")";
    return os.str();
}

// residual protocol shared by theorem1 and composites: lhs integrates the
// group-side action, rhs applies the Fourier-side image to the kernel
void residual_cases(VerificationReport& rep, const std::string& suite, const std::string& name,
                    const GO& D, const FO& image, const SymExpr& F, const SupportBox& box,
                    int npoints, double tol, int order, KernelCache& cache) {
    const SymExpr DF = D.apply(F, box);
    const auto& pairs = sample_pairs();
    for (int ip = 0; ip < npoints; ++ip) {
        const auto [t, s] = pairs[ip % pairs.size()];
        for (const auto& mu : kMuPairs) {
            for (const auto& [e1, e2] : kParityPairs) {
                const ParamPoint pt{mu.m1, mu.m2, e1, e2};
                const Complex lhs = eval_kernel_deriv(DF, box, t, s, pt, 0, 0, order, &cache);
                const Complex rhs =
                    apply_fourier_operator(image, F, box, t, s, pt, order, &cache);
                rep.add(VerificationCase::numeric(
                            suite, name + " at " + point_label(mu.tag, t, s, e1, e2), lhs, rhs,
                            tol)
                            .at(t, s, e1, e2));
            }
        }
    }
}

GO euler_operator() {
    return GO::coordinate(var::A) * GO::derivative(var::A) +
           GO::coordinate(var::B) * GO::derivative(var::B) +
           GO::coordinate(var::C) * GO::derivative(var::C) +
           GO::coordinate(var::D) * GO::derivative(var::D);
}

// small random operators for the homomorphism property: at most two
// monomials, generator word length at most three
GO random_small_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nmono(1, 2), pick(0, 3), coef(-3, 3), extra(0, 2);
    GO g;
    for (int i = 0, n = nmono(rng); i < n; ++i) {
        CoordExp ce{0, 0, 0, 0};
        DerivExp de{0, 0, 0, 0};
        int detpow = 0;
        const int kind = extra(rng);
        if (kind == 0) ce[pick(rng)] += 1;
        if (kind == 1) detpow = 1;
        de[pick(rng)] += 1;
        if (extra(rng) == 0) ce[pick(rng)] += 1;
        CoordPoly p;
        p.add_term(ce, rat(2 * coef(rng) + 1));
        g.add_monomial(de, LocalizedCoeff(p, detpow));
    }
    return g;
}

}  // namespace

VerificationReport verify_theorem1(const VerifyConfig& cfg) {
    VerificationReport rep;
    auto [F, box] = std_bump_F(cfg.radius);
    KernelCache cache;
    const int npoints = cfg.points > 0 ? cfg.points : 8;
    static constexpr Gen gens[9] = {Gen::A,  Gen::B,  Gen::C,  Gen::D, Gen::DetInv,
                                    Gen::Da, Gen::Db, Gen::Dc, Gen::Dd};
    for (Gen g : gens) {
        residual_cases(rep, "theorem1", "K_{" + gen_name(g) + " F} = theta(" + gen_name(g) + ") K_F",
                       group_generator(g), theta_generator(g), F, box, npoints, cfg.tol3d(),
                       cfg.order, cache);
    }
    return rep;
}

VerificationReport verify_composites(const VerifyConfig& cfg) {
    VerificationReport rep;
    auto [F, box] = std_bump_F(cfg.radius);
    KernelCache cache;
    const int npoints = cfg.points > 0 ? cfg.points : 4;

    const GO c = GO::coordinate(var::C);
    const GO wa = weighted_derivation(var::A), wb = weighted_derivation(var::B);
    const GO wc = weighted_derivation(var::C), wd = weighted_derivation(var::D);

    struct Composite {
        const char* name;
        GO op;
        bool second_order;
    };
    const Composite composites[] = {
        {"c^2", c * c, true},
        {"c*wb", c * wb, true},
        {"wb^2", wb * wb, true},
        {"a da + b db + c dc + d dd", euler_operator(), false},
        {"wa*wd - wb*wc", wa * wd - wb * wc, true},
        {"e_r12", right_field(1, 2), false},
        {"e_l21", left_field(2, 1), false},
    };
    for (const auto& comp : composites) {
        residual_cases(rep, "composites",
                       std::string("K_{(") + comp.name + ") F} = theta(" + comp.name + ") K_F",
                       comp.op, theta(comp.op), F, box, npoints,
                       comp.second_order ? cfg.tol3d_second() : cfg.tol3d(), cfg.order, cache);
    }
    return rep;
}

VerificationReport verify_symbolic(const VerifyConfig& cfg) {
    VerificationReport rep;
    rep.append(theta_welldefined_suite());
    rep.append(check_mu_shift_claim());
    rep.append(check_sp8_samples());

    // generator images match the displayed field tables
    for (int i : {1, 2})
        for (int j : {1, 2}) {
            std::ostringstream lr, ll;
            lr << "theta(e_r" << i << j << ") equals the E_r" << i << j << " table";
            ll << "theta(e_l" << i << j << ") equals the E_l" << i << j << " table";
            rep.add(VerificationCase::symbolic(
                "fields", lr.str(), theta(right_field(i, j)) == right_field_image(i, j)));
            rep.add(VerificationCase::symbolic(
                "fields", ll.str(), theta(left_field(i, j)) == left_field_image(i, j)));
        }

    // gl(2) (+) gl(2) structure constants for the image tables and the
    // group-side fields, plus cross-commutation
    auto delta = [](int x, int y) { return x == y ? rat(1) : rat(0); };
    for (int i : {1, 2})
        for (int j : {1, 2})
            for (int k : {1, 2})
                for (int l : {1, 2}) {
                    std::ostringstream tag;
                    tag << i << j << "," << k << l;
                    rep.add(VerificationCase::symbolic(
                        "structure", "[E_r" + tag.str() + "] bracket",
                        commutator(right_field_image(i, j), right_field_image(k, l)) ==
                            right_field_image(i, l).scaled(delta(j, k)) -
                                right_field_image(k, j).scaled(delta(l, i))));
                    rep.add(VerificationCase::symbolic(
                        "structure", "[E_l" + tag.str() + "] bracket",
                        commutator(left_field_image(i, j), left_field_image(k, l)) ==
                            left_field_image(i, l).scaled(delta(j, k)) -
                                left_field_image(k, j).scaled(delta(l, i))));
                    rep.add(VerificationCase::symbolic(
                        "structure", "[E_r" + tag.str() + " x E_l] cross-commutation",
                        commutator(right_field_image(i, j), left_field_image(k, l)).is_zero()));
                    rep.add(VerificationCase::symbolic(
                        "structure", "[e_r" + tag.str() + "] bracket",
                        commutator(right_field(i, j), right_field(k, l)) ==
                            right_field(i, l) * delta(j, k) - right_field(k, j) * delta(l, i)));
                    rep.add(VerificationCase::symbolic(
                        "structure", "[e_l" + tag.str() + "] bracket",
                        commutator(left_field(i, j), left_field(k, l)) ==
                            left_field(i, l) * delta(j, k) - left_field(k, j) * delta(l, i)));
                    rep.add(VerificationCase::symbolic(
                        "structure", "[e_r" + tag.str() + " x e_l] cross-commutation",
                        commutator(right_field(i, j), left_field(k, l)).is_zero()));
                }

    // homomorphism property on random small pairs
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.homom_pairs; ++i) {
        const GO x = random_small_op(rng), y = random_small_op(rng);
        rep.add(VerificationCase::symbolic(
            "homomorphism", "theta(A*B) = theta(A)*theta(B), pair " + std::to_string(i + 1),
            theta(x * y) == theta(x) * theta(y)));
    }

    // image shape: denominators factor into mu1 - mu2 - m, V-parity uniform
    for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D, Gen::DetInv, Gen::Da, Gen::Db, Gen::Dc,
                  Gen::Dd}) {
        rep.add(VerificationCase::symbolic(
            "image_shape", "theta(" + gen_name(g) + ") denominators are (mu1-mu2-m) products",
            denominator_is_difference_product(theta_generator(g))));
        rep.add(VerificationCase::symbolic(
            "image_shape", "theta(" + gen_name(g) + ") V-degree parity is uniform",
            has_uniform_shift_parity(theta_generator(g), g == Gen::DetInv ? 0 : 1)));
    }
    return rep;
}

VerificationReport verify_toy_suite(const VerifyConfig& cfg) {
    ToyConfig tcfg;
    tcfg.order = std::max(32, std::min(192, 2 * cfg.order));
    tcfg.tol = cfg.tol_toy();
    VerificationReport rep = toy_verify_correspondences(tcfg);
    rep.append(toy_intertwining_suite(tcfg));
    return rep;
}

VerificationReport verify_transform(const VerifyConfig& cfg) {
    VerificationReport rep;
    auto [F, box] = std_bump_F(cfg.radius);
    const SymExpr f = SymExpr::bump(SymExpr::variable(var::S), rat(1, 2));
    const int order4d = std::min(24, cfg.order);
    const int kernel_order = std::min(48, cfg.order);
    const int s_order = 64;
    const double tol = cfg.tol_transform();

    struct Sample {
        double t;
        MuPair mu;
        int e1, e2;
    };
    const Sample samples[] = {
        {0.0, kMuPairs[0], 0, 0},
        {0.2, kMuPairs[0], 1, 1},
        {-0.5, kMuPairs[1], 0, 1},
    };
    for (const auto& smp : samples) {
        const ParamPoint pt{smp.mu.m1, smp.mu.m2, smp.e1, smp.e2};
        const auto [lhs, rhs] =
            rep_action_check(F, box, f, -0.5, 0.5, smp.t, pt, order4d, kernel_order, s_order);
        rep.add(VerificationCase::numeric(
                    "transform",
                    "T(F)f(t) via group integral vs kernel integral at " +
                        point_label(smp.mu.tag, smp.t, 0.0, smp.e1, smp.e2),
                    lhs, rhs, tol)
                    .at(smp.t, 0.0, smp.e1, smp.e2));
    }

    // scaling F by 3 scales both sides by 3 (same nodes, linear quadrature)
    {
        const ParamPoint pt{kMu1A, kMu2A, 0, 0};
        const auto [l1, r1] =
            rep_action_check(F, box, f, -0.5, 0.5, 0.2, pt, 16, 24, 32);
        const auto [l3, r3] = rep_action_check(SymExpr::constant(3) * F, box, f, -0.5, 0.5, 0.2,
                                               pt, 16, 24, 32);
        rep.add(VerificationCase::numeric("transform", "group-side linearity under F -> 3F", l3,
                                          3.0 * l1, 1e-12));
        rep.add(VerificationCase::numeric("transform", "kernel-side linearity under F -> 3F", r3,
                                          3.0 * r1, 1e-12));
    }
    return rep;
}

VerificationReport verify_all(const VerifyConfig& cfg) {
    VerificationReport rep;
    rep.append(verify_symbolic(cfg));
    rep.append(verify_theorem1(cfg));
    rep.append(verify_composites(cfg));
    rep.append(verify_transform(cfg));
    rep.append(verify_toy_suite(cfg));
    return rep;
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "theorem1") return verify_theorem1(cfg);
    if (name == "composites") return verify_composites(cfg);
    if (name == "symbolic") return verify_symbolic(cfg);
    if (name == "toy") return verify_toy_suite(cfg);
    if (name == "transform") return verify_transform(cfg);
    if (name == "all") return verify_all(cfg);
    throw UnknownSuite("unknown suite: " + name +
                       " (expected theorem1|composites|symbolic|toy|transform|all)");
}

std::string report_to_json(const VerificationReport& rep, const VerifyConfig& cfg) {
    nlohmann::ordered_json j;
    j["config"] = {{"order", cfg.order},
                   {"tol", cfg.tol3d()},
                   {"radius", to_double(cfg.radius)},
                   {"mu1", {kMu1A.real(), kMu1A.imag()}},
                   {"mu2", {kMu2A.real(), kMu2A.imag()}}};
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.cases) {
        nlohmann::ordered_json cj;
        cj["suite"] = c.suite;
        cj["label"] = c.label;
        cj["mode"] = c.mode == VerificationCase::Mode::Symbolic ? "symbolic" : "numeric";
        if (c.has_point) {
            cj["point"] = {{"t", c.t}, {"s", c.s}, {"eps1", c.eps1}, {"eps2", c.eps2}};
        } else {
            cj["point"] = nullptr;
        }
        if (c.has_values) {
            cj["lhs"] = {c.lhs.real(), c.lhs.imag()};
            cj["rhs"] = {c.rhs.real(), c.rhs.imag()};
            cj["abs_err"] = c.abs_err;
            cj["rel_err"] = c.rel_err;
            cj["tol"] = c.tol;
        } else {
            cj["lhs"] = nullptr;
            cj["rhs"] = nullptr;
            cj["abs_err"] = nullptr;
            cj["rel_err"] = nullptr;
            cj["tol"] = nullptr;
        }
        cj["pass"] = c.pass;
        j["cases"].push_back(std::move(cj));
    }
    j["summary"] = {{"total", rep.total()}, {"failures", rep.failures()}};
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& rep, const VerifyConfig& cfg) {
    std::ostringstream os;
    os << "config: order=" << cfg.order << " tol=" << cfg.tol3d()
       << " radius=" << to_double(cfg.radius) << " mu1=(" << kMu1A.real() << "," << kMu1A.imag()
       << ") mu2=(" << kMu2A.real() << "," << kMu2A.imag() << ")\n";
    for (const auto& c : rep.cases) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.label;
        if (c.has_values) {
            os << "  (rel_err=" << c.rel_err << ", abs_err=" << c.abs_err << ", tol=" << c.tol
               << ")";
        }
        os << "\n";
    }
    os << "summary: " << rep.total() - rep.failures() << "/" << rep.total() << " passed";
    if (rep.failures() > 0) os << ", " << rep.failures() << " FAILED";
    os << "\n";
    return os.str();
}

}  // namespace gl2f
