#pragma once

#include <cstdint>
#include <string>

#include "gl2f/report.hpp"
#include "gl2f/rational.hpp"

namespace gl2f {

struct VerifyConfig {
    int order = 64;        // points per axis for the 3-D kernel quadratures
    int points = 0;        // (t,s) sample pairs; 0 = suite default (8 / 4)
    double tol = 0.0;      // numeric tolerance override; 0 = suite defaults
    Rat radius = rat(2, 5);
    std::uint64_t seed = 20240817;  // randomized property cases only
    int homom_pairs = 50;

    // suite defaults: 1e-6 for 3-D residuals (1e-5 for second-derivative
    // composites), 1e-8 for the plane model, 1e-3 for the transform check
    double tol3d() const { return tol > 0 ? tol : 1e-6; }
    double tol3d_second() const { return tol > 0 ? tol : 1e-5; }
    double tol_toy() const { return tol > 0 ? tol : 1e-8; }
    double tol_transform() const { return tol > 0 ? tol : 1e-3; }
};

VerificationReport verify_theorem1(const VerifyConfig& cfg);
VerificationReport verify_composites(const VerifyConfig& cfg);
VerificationReport verify_symbolic(const VerifyConfig& cfg);
VerificationReport verify_toy_suite(const VerifyConfig& cfg);
VerificationReport verify_transform(const VerifyConfig& cfg);
VerificationReport verify_all(const VerifyConfig& cfg);

// UnknownSuite for names outside {theorem1, composites, symbolic, toy, transform, all}
VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg);

std::string report_to_json(const VerificationReport& rep, const VerifyConfig& cfg);
std::string report_to_text(const VerificationReport& rep, const VerifyConfig& cfg);

}  // namespace gl2f
