#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "gl2f/errors.hpp"
#include "gl2f/fourier_operator.hpp"
#include "gl2f/op_parser.hpp"
#include "gl2f/theta.hpp"
#include "gl2f/verify.hpp"

namespace {

// accepts "2/5" and decimal literals like "0.4"
gl2f::Rat parse_radius(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const long num = std::stol(text.substr(0, slash));
        const long den = std::stol(text.substr(slash + 1));
        if (den == 0) throw gl2f::ZeroDenominator("radius denominator is zero");
        return gl2f::rat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return gl2f::rat(std::stol(text));
    const std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
    long den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    const long num = std::stol(head.empty() ? "0" : head) * den + std::stol(tail);
    return gl2f::rat(num, den);
}

int run_theta(const std::string& expr, const std::string& format) {
    const gl2f::GroupOperator op = gl2f::parse_operator(expr);
    const gl2f::FourierOperator image = gl2f::theta(op);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["input"] = expr;
        j["operator"] = op.str();
        j["image"] = image.str();
        j["terms"] = nlohmann::ordered_json::array();
        // group monomials by the V-shift
        std::map<std::pair<int, int>, gl2f::FourierOperator> groups;
        for (const auto& [key, coeff] : image.monomials()) {
            gl2f::FourierKey bare = key;
            bare.k = bare.l = 0;
            groups[{key.k, key.l}].add_monomial(bare, coeff);
        }
        for (const auto& [kl, q] : groups)
            j["terms"].push_back(
                {{"k", kl.first}, {"l", kl.second}, {"Q", q.str()}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << image.str_grouped() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operational calculus for the Fourier transform on GL(2,R)"};
    app.require_subcommand(1);

    std::string theta_expr, theta_format = "text";
    CLI::App* theta_cmd =
        app.add_subcommand("theta", "print the Fourier image of an operator expression");
    theta_cmd->add_option("expression", theta_expr, "operator expression, e.g. \"c^2\"")
        ->required();
    theta_cmd->add_option("--format", theta_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string suite, verify_format = "text", radius_text = "2/5";
    gl2f::VerifyConfig cfg;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("suite", suite, "theorem1|composites|symbolic|toy|transform|all")
        ->required();
    verify_cmd->add_option("--points", cfg.points, "number of (t,s) sample pairs");
    verify_cmd->add_option("--order", cfg.order, "quadrature points per axis")
        ->check(CLI::Range(8, 256));
    verify_cmd->add_option("--tol", cfg.tol, "numeric tolerance override");
    verify_cmd->add_option("--radius", radius_text, "bump radius (rational or decimal)");
    verify_cmd->add_option("--seed", cfg.seed, "seed for randomized property cases");
    verify_cmd->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (theta_cmd->parsed()) return run_theta(theta_expr, theta_format);
        cfg.radius = parse_radius(radius_text);
        const gl2f::VerificationReport rep = gl2f::run_suite(suite, cfg);
        std::cout << (verify_format == "json" ? gl2f::report_to_json(rep, cfg)
                                              : gl2f::report_to_text(rep, cfg))
                  << "\n";
        return rep.failures() == 0 ? 0 : 1;
    } catch (const gl2f::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const gl2f::ZeroDenominator& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const gl2f::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
