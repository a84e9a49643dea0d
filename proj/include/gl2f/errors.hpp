#pragma once

#include <stdexcept>
#include <string>

namespace gl2f {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

// Evaluation of a rational function at a point on (or too close to) a pole line.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Signed power x^{mu||eps} at x = 0.
struct ZeroBase : std::domain_error {
    explicit ZeroBase(const std::string& what) : std::domain_error(what) {}
};

// Determinant-inverse node evaluated where ad - bc = 0.
struct DetZero : std::domain_error {
    explicit DetZero(const std::string& what) : std::domain_error(what) {}
};

// Det-localized operator applied to a function whose support touches {det = 0}.
struct SupportError : std::domain_error {
    explicit SupportError(const std::string& what) : std::domain_error(what) {}
};

// Bump radius for which the standard support box reaches {det <= 0}.
struct BadRadius : std::domain_error {
    explicit BadRadius(const std::string& what) : std::domain_error(what) {}
};

struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

// Intertwining sample with a + uc = 0.
struct SingularSample : std::domain_error {
    explicit SingularSample(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace gl2f
