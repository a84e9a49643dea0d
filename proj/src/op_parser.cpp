#include "gl2f/op_parser.hpp"

#include <cctype>

#include "gl2f/errors.hpp"
#include "gl2f/theta.hpp"

namespace gl2f {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GroupOperator parse() {
        GroupOperator e = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    GroupOperator expr() {
        GroupOperator acc = term();
        while (true) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    GroupOperator term() {
        skip_space();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        GroupOperator acc = factor();
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                break;
            }
        }
        return neg ? -acc : acc;
    }

    GroupOperator factor() {
        GroupOperator base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            long e = read_uint();
            if (e < 0) throw ParseError("expected a nonnegative integer exponent", start);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    GroupOperator atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GroupOperator e = expr();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    GroupOperator rational() {
        const long num = read_uint();
        skip_space();
        if (peek() == '/') {
            ++pos_;
            skip_space();
            const std::size_t dpos = pos_;
            const long den = read_uint();
            if (den == 0) throw ZeroDenominator("zero denominator at position " +
                                                std::to_string(dpos));
            return GroupOperator::constant(rat(num, den));
        }
        return GroupOperator::constant(rat(num));
    }

    GroupOperator symbol() {
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];
        if (name == "a") return GroupOperator::coordinate(var::A);
        if (name == "b") return GroupOperator::coordinate(var::B);
        if (name == "c") return GroupOperator::coordinate(var::C);
        if (name == "d") return GroupOperator::coordinate(var::D);
        if (name == "Dinv") return GroupOperator::det_inverse();
        if (name == "da") return GroupOperator::derivative(var::A);
        if (name == "db") return GroupOperator::derivative(var::B);
        if (name == "dc") return GroupOperator::derivative(var::C);
        if (name == "dd") return GroupOperator::derivative(var::D);
        if (name == "wa") return weighted_derivation(var::A);
        if (name == "wb") return weighted_derivation(var::B);
        if (name == "wc") return weighted_derivation(var::C);
        if (name == "wd") return weighted_derivation(var::D);
        throw ParseError("unknown symbol '" + name + "'", start);
    }

    long read_uint() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) throw ParseError("integer literal too large", start);
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupOperator parse_operator(const std::string& text) { return Parser(text).parse(); }

}  // namespace gl2f
