#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gl2f/errors.hpp"
#include "gl2f/op_parser.hpp"
#include "gl2f/quadrature.hpp"
#include "gl2f/theta.hpp"
#include "gl2f/toy.hpp"
#include "gl2f/verify.hpp"

namespace py = pybind11;
using namespace gl2f;

namespace {

VerifyConfig make_config(int order, int points, double tol, const std::string& radius,
                         std::uint64_t seed) {
    VerifyConfig cfg;
    cfg.order = order;
    cfg.points = points;
    cfg.tol = tol;
    cfg.seed = seed;
    const auto slash = radius.find('/');
    if (slash != std::string::npos) {
        cfg.radius = rat(std::stol(radius.substr(0, slash)), std::stol(radius.substr(slash + 1)));
    } else {
        cfg.radius = rat_from_decimal(std::stod(radius));
    }
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "operational calculus for the Fourier transform on GL(2,R)";

    py::register_exception<ParseError>(m, "OperatorParseError");
    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<UnknownSuite>(m, "UnknownSuiteError");

    m.def(
        "theta_image",
        [](const std::string& expr) { return theta(parse_operator(expr)).str(); },
        py::arg("expression"),
        "normal form of the Fourier image of an operator expression");

    m.def(
        "theta_image_grouped",
        [](const std::string& expr) { return theta(parse_operator(expr)).str_grouped(); },
        py::arg("expression"), "Fourier image grouped by V1/V2 shifts");

    m.def(
        "normal_form",
        [](const std::string& expr) { return parse_operator(expr).str(); },
        py::arg("expression"), "normal form of a group-side operator expression");

    m.def(
        "eval_kernel",
        [](double t, double s, Complex mu1, Complex mu2, int eps1, int eps2, double radius,
           int order) {
            auto [F, box] = std_bump_F(rat_from_decimal(radius));
            return eval_kernel(F, box, t, s, {mu1, mu2, eps1, eps2}, order);
        },
        py::arg("t"), py::arg("s"), py::arg("mu1"), py::arg("mu2"), py::arg("eps1") = 0,
        py::arg("eps2") = 0, py::arg("radius") = 0.4, py::arg("order") = 64,
        "kernel of the standard bump test function");

    m.def(
        "apply_image",
        [](const std::string& expr, double t, double s, Complex mu1, Complex mu2, int eps1,
           int eps2, double radius, int order) {
            auto [F, box] = std_bump_F(rat_from_decimal(radius));
            KernelCache cache;
            return apply_fourier_operator(theta(parse_operator(expr)), F, box, t, s,
                                          {mu1, mu2, eps1, eps2}, order, &cache);
        },
        py::arg("expression"), py::arg("t"), py::arg("s"), py::arg("mu1"), py::arg("mu2"),
        py::arg("eps1") = 0, py::arg("eps2") = 0, py::arg("radius") = 0.4, py::arg("order") = 64,
        "apply the Fourier image of an operator to the standard kernel");

    m.def(
        "kernel_of_operator",
        [](const std::string& expr, double t, double s, Complex mu1, Complex mu2, int eps1,
           int eps2, double radius, int order) {
            auto [F, box] = std_bump_F(rat_from_decimal(radius));
            const SymExpr DF = parse_operator(expr).apply(F, box);
            return eval_kernel(DF, box, t, s, {mu1, mu2, eps1, eps2}, order);
        },
        py::arg("expression"), py::arg("t"), py::arg("s"), py::arg("mu1"), py::arg("mu2"),
        py::arg("eps1") = 0, py::arg("eps2") = 0, py::arg("radius") = 0.4, py::arg("order") = 64,
        "kernel of (D F) for the standard bump, i.e. the left side of the identity");

    m.def(
        "j_transform",
        [](double u, Complex sigma, int eps, int order) {
            return j_transform(toy_phi(), kToyXLo, kToyXHi, u, sigma, eps, order);
        },
        py::arg("u"), py::arg("sigma"), py::arg("eps") = 0, py::arg("order") = 128,
        "plane-model transform of the default test function");

    m.def(
        "verify",
        [](const std::string& suite, int order, int points, double tol,
           const std::string& radius, std::uint64_t seed) {
            const VerifyConfig cfg = make_config(order, points, tol, radius, seed);
            const VerificationReport rep = run_suite(suite, cfg);
            return py::make_tuple(rep.failures() == 0, report_to_json(rep, cfg));
        },
        py::arg("suite"), py::arg("order") = 64, py::arg("points") = 0, py::arg("tol") = 0.0,
        py::arg("radius") = "2/5", py::arg("seed") = 20240817,
        "run a verification suite; returns (all_pass, json_report)");
}
