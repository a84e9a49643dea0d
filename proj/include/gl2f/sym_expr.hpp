#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gl2f/rational.hpp"

namespace gl2f {

// Variable slots shared across the project. The plane model reuses the low
// slots for (x, y).
namespace var {
inline constexpr int A = 0, B = 1, C = 2, D = 3;  // matrix entries
inline constexpr int T = 4, S = 5;                // kernel arguments
inline constexpr int U = 6, V = 7, W = 8;         // kernel integration variables
inline constexpr int X = 0, Y = 1;                // plane-model coordinates
inline constexpr int COUNT = 9;
}  // namespace var

enum class SymKind : std::uint8_t { Const, Var, Add, Mul, IPow, Bump, DetInv };

// Closed-form symbolic function: expression DAG over named variables with
// bump nodes psi_r(g) = exp(-1/(1-(g/r)^2)) for |g| < r, 0 otherwise.
// Nodes are interned; values are immutable handles. The tree is closed under
// exact differentiation (a bump derivative is the bump times an explicit
// rational factor). Evaluation is total: a product with a vanishing bump
// factor is 0 even where a companion rational factor is singular.
class SymExpr {
public:
    SymExpr() : id_(-1) {}

    static SymExpr constant(const Rat& c);
    static SymExpr constant(long c) { return constant(rat(c)); }
    static SymExpr variable(int v);
    static SymExpr add(std::vector<SymExpr> kids);
    static SymExpr mul(std::vector<SymExpr> kids);
    static SymExpr ipow(const SymExpr& base, int n);
    static SymExpr bump(const SymExpr& arg, const Rat& r);
    // 1/(k0*k3 - k1*k2)
    static SymExpr det_inv(const SymExpr& k0, const SymExpr& k1, const SymExpr& k2,
                           const SymExpr& k3);

    bool valid() const { return id_ >= 0; }
    int id() const { return id_; }
    bool operator==(const SymExpr& o) const { return id_ == o.id_; }

    SymKind kind() const;
    bool is_zero() const;

    SymExpr diff(int v) const;
    SymExpr subst(const std::map<int, SymExpr>& replacement) const;

    // one-off evaluation (compiles a throwaway program); vals indexed by var id
    double eval(std::span<const double> vals) const;

    std::string str() const;

private:
    explicit SymExpr(int id) : id_(id) {}
    int id_;
    friend class SymProgram;
    friend class SymPool;
};

inline SymExpr operator+(const SymExpr& a, const SymExpr& b) { return SymExpr::add({a, b}); }
inline SymExpr operator*(const SymExpr& a, const SymExpr& b) { return SymExpr::mul({a, b}); }
inline SymExpr operator-(const SymExpr& a, const SymExpr& b) {
    return SymExpr::add({a, SymExpr::mul({SymExpr::constant(-1), b})});
}

// Flat, self-contained evaluation program for one root expression. Safe to
// evaluate concurrently from many threads, each with its own scratch buffer.
class SymProgram {
public:
    explicit SymProgram(const SymExpr& root);

    std::size_t scratch_size() const { return code_.size(); }
    double eval(std::span<const double> vals, std::vector<double>& scratch) const;

private:
    struct Instr {
        SymKind kind;
        std::int32_t a = 0;       // var id / exponent / kid count
        std::int32_t kids = 0;    // offset into kid index buffer
        double c0 = 0.0;          // constant value / bump radius
        double c1 = 0.0;          // bump 1/r^2
    };
    std::vector<Instr> code_;
    std::vector<std::int32_t> kid_idx_;
};

// Product of per-variable closed intervals with a certified positive lower
// bound for the determinant on group-side boxes.
struct SupportBox {
    struct Interval {
        double lo = 0.0, hi = 0.0;
    };
    std::array<Interval, var::COUNT> iv{};
    std::array<bool, var::COUNT> used{};
    double detmin = 0.0;

    void set(int v, double lo, double hi) {
        iv[v] = {lo, hi};
        used[v] = true;
    }
};

// standard compactly supported test function
//   F(a,b,c,d) = psi_r(a-1) psi_r(b) psi_r(c) psi_r(d-1)
// with its support box; BadRadius unless 0 < r <= 2/5
std::pair<SymExpr, SupportBox> std_bump_F(const Rat& r);

}  // namespace gl2f
