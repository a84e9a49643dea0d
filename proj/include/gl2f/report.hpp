#pragma once

#include <complex>
#include <string>
#include <vector>

namespace gl2f {

// One checked identity: either an exact symbolic equality or a numeric
// residual. Numeric cases pass when rel_err <= tol, falling back to
// abs_err <= tol when |lhs| < 1e-10 (relative error is meaningless at
// numerical zeros).
struct VerificationCase {
    enum class Mode { Symbolic, Numeric };

    std::string suite;
    std::string label;
    Mode mode = Mode::Symbolic;

    bool has_point = false;
    double t = 0.0, s = 0.0;
    int eps1 = 0, eps2 = 0;

    bool has_values = false;
    std::complex<double> lhs{}, rhs{};
    double abs_err = 0.0, rel_err = 0.0, tol = 0.0;

    bool pass = false;

    static VerificationCase symbolic(std::string suite, std::string label, bool pass) {
        VerificationCase c;
        c.suite = std::move(suite);
        c.label = std::move(label);
        c.mode = Mode::Symbolic;
        c.pass = pass;
        return c;
    }

    static VerificationCase numeric(std::string suite, std::string label,
                                    std::complex<double> lhs, std::complex<double> rhs,
                                    double tol) {
        VerificationCase c;
        c.suite = std::move(suite);
        c.label = std::move(label);
        c.mode = Mode::Numeric;
        c.has_values = true;
        c.lhs = lhs;
        c.rhs = rhs;
        c.abs_err = std::abs(lhs - rhs);
        c.rel_err = std::abs(lhs) > 0 ? c.abs_err / std::abs(lhs) : (c.abs_err > 0 ? 1e300 : 0.0);
        c.tol = tol;
        c.pass = std::abs(lhs) < 1e-10 ? c.abs_err <= tol : c.rel_err <= tol;
        return c;
    }

    VerificationCase& at(double t_, double s_, int e1, int e2) {
        has_point = true;
        t = t_;
        s = s_;
        eps1 = e1;
        eps2 = e2;
        return *this;
    }
};

struct VerificationReport {
    std::vector<VerificationCase> cases;

    int total() const { return static_cast<int>(cases.size()); }
    int failures() const {
        int n = 0;
        for (const auto& c : cases) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }

    void add(VerificationCase c) { cases.push_back(std::move(c)); }
    void append(const VerificationReport& o) {
        cases.insert(cases.end(), o.cases.begin(), o.cases.end());
    }
};

}  // namespace gl2f
