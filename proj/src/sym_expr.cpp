#include "gl2f/sym_expr.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gl2f/errors.hpp"

namespace gl2f {

namespace {

struct Node {
    SymKind kind;
    int ivalue = 0;           // var id (Var) or exponent (IPow)
    Rat cvalue;               // constant value or bump radius
    std::vector<int> kids;
};

struct NodeKey {
    SymKind kind;
    int ivalue;
    std::string cstr;
    std::vector<int> kids;
    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = std::hash<int>()(static_cast<int>(k.kind)) * 31 +
                        std::hash<int>()(k.ivalue);
        h = h * 31 + std::hash<std::string>()(k.cstr);
        for (int kid : k.kids) h = h * 1000003 + std::hash<int>()(kid);
        return h;
    }
};

// Interned node pool. Construction is guarded by a mutex; reads of settled
// nodes are lock-free since nodes are never mutated or removed.
class SymPool {
public:
    static SymPool& instance() {
        static SymPool pool;
        return pool;
    }

    int intern(SymKind kind, int ivalue, const Rat& cvalue, std::vector<int> kids) {
        NodeKey key{kind, ivalue, kind == SymKind::Const || kind == SymKind::Bump
                                      ? to_string(cvalue)
                                      : std::string(),
                    kids};
        std::lock_guard<std::mutex> lock(mu_);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        nodes_.push_back(Node{kind, ivalue, cvalue, std::move(kids)});
        const int id = static_cast<int>(nodes_.size()) - 1;
        index_.emplace(std::move(key), id);
        return id;
    }

    const Node& node(int id) const { return nodes_[id]; }

private:
    std::mutex mu_;
    std::deque<Node> nodes_;
    std::unordered_map<NodeKey, int, NodeKeyHash> index_;
};

const Node& node(int id) { return SymPool::instance().node(id); }

int intern(SymKind kind, int ivalue, const Rat& cvalue, std::vector<int> kids) {
    return SymPool::instance().intern(kind, ivalue, cvalue, std::move(kids));
}

int const_node(const Rat& c) { return intern(SymKind::Const, 0, c, {}); }

bool is_const(int id, const Rat& v) {
    const Node& n = node(id);
    return n.kind == SymKind::Const && n.cvalue == v;
}

}  // namespace

SymExpr SymExpr::constant(const Rat& c) { return SymExpr(const_node(c)); }

SymExpr SymExpr::variable(int v) { return SymExpr(intern(SymKind::Var, v, rat(0), {})); }

SymExpr SymExpr::add(std::vector<SymExpr> kids) {
    std::vector<int> flat;
    Rat csum = 0;
    for (const SymExpr& k : kids) {
        if (!k.valid()) throw std::logic_error("add: invalid operand");
        const Node& n = node(k.id_);
        if (n.kind == SymKind::Const) {
            csum += n.cvalue;
        } else if (n.kind == SymKind::Add) {
            for (int kid : n.kids) {
                const Node& m = node(kid);
                if (m.kind == SymKind::Const)
                    csum += m.cvalue;
                else
                    flat.push_back(kid);
            }
        } else {
            flat.push_back(k.id_);
        }
    }
    if (!gl2f::is_zero(csum)) flat.push_back(const_node(csum));
    if (flat.empty()) return constant(rat(0));
    if (flat.size() == 1) return SymExpr(flat[0]);
    std::sort(flat.begin(), flat.end());
    return SymExpr(intern(SymKind::Add, 0, rat(0), std::move(flat)));
}

SymExpr SymExpr::mul(std::vector<SymExpr> kids) {
    std::vector<int> flat;
    Rat cprod = 1;
    for (const SymExpr& k : kids) {
        if (!k.valid()) throw std::logic_error("mul: invalid operand");
        const Node& n = node(k.id_);
        if (n.kind == SymKind::Const) {
            cprod *= n.cvalue;
        } else if (n.kind == SymKind::Mul) {
            for (int kid : n.kids) {
                const Node& m = node(kid);
                if (m.kind == SymKind::Const)
                    cprod *= m.cvalue;
                else
                    flat.push_back(kid);
            }
        } else {
            flat.push_back(k.id_);
        }
    }
    if (gl2f::is_zero(cprod)) return constant(rat(0));
    if (cprod != 1) flat.push_back(const_node(cprod));
    if (flat.empty()) return constant(rat(1));
    if (flat.size() == 1) return SymExpr(flat[0]);
    std::sort(flat.begin(), flat.end());
    return SymExpr(intern(SymKind::Mul, 0, rat(0), std::move(flat)));
}

SymExpr SymExpr::ipow(const SymExpr& base, int n) {
    if (!base.valid()) throw std::logic_error("ipow: invalid base");
    if (n == 1) return base;
    if (n == 0) return constant(rat(1));
    const Node& b = node(base.id_);
    if (b.kind == SymKind::Const) {
        if (gl2f::is_zero(b.cvalue)) {
            if (n < 0) throw std::domain_error("ipow: 0 to a negative power");
            return constant(rat(0));
        }
        Rat v = n > 0 ? pow_rat(b.cvalue, n) : rat(1) / pow_rat(b.cvalue, -n);
        return constant(v);
    }
    if (b.kind == SymKind::IPow)
        return SymExpr(intern(SymKind::IPow, n * b.ivalue, rat(0), b.kids));
    return SymExpr(intern(SymKind::IPow, n, rat(0), {base.id_}));
}

SymExpr SymExpr::bump(const SymExpr& arg, const Rat& r) {
    if (sgn(r) <= 0) throw std::domain_error("bump: radius must be positive");
    return SymExpr(intern(SymKind::Bump, 0, r, {arg.id_}));
}

SymExpr SymExpr::det_inv(const SymExpr& k0, const SymExpr& k1, const SymExpr& k2,
                         const SymExpr& k3) {
    return SymExpr(intern(SymKind::DetInv, 0, rat(0), {k0.id_, k1.id_, k2.id_, k3.id_}));
}

SymKind SymExpr::kind() const { return node(id_).kind; }

bool SymExpr::is_zero() const { return is_const(id_, rat(0)); }

SymExpr SymExpr::diff(int v) const {
    // iterative-free recursive differentiation with memoization on node ids
    std::unordered_map<int, SymExpr> memo;
    struct Rec {
        int v;
        std::unordered_map<int, SymExpr>& memo;
        SymExpr operator()(int id) {
            auto it = memo.find(id);
            if (it != memo.end()) return it->second;
            const Node& n = node(id);
            SymExpr r;
            switch (n.kind) {
                case SymKind::Const:
                    r = SymExpr::constant(0);
                    break;
                case SymKind::Var:
                    r = SymExpr::constant(n.ivalue == v ? 1 : 0);
                    break;
                case SymKind::Add: {
                    std::vector<SymExpr> parts;
                    for (int k : n.kids) parts.push_back((*this)(k));
                    r = SymExpr::add(std::move(parts));
                    break;
                }
                case SymKind::Mul: {
                    std::vector<SymExpr> terms;
                    for (std::size_t i = 0; i < n.kids.size(); ++i) {
                        SymExpr dk = (*this)(n.kids[i]);
                        if (dk.is_zero()) continue;
                        std::vector<SymExpr> factors{dk};
                        for (std::size_t j = 0; j < n.kids.size(); ++j)
                            if (j != i) factors.push_back(SymExpr(n.kids[j]));
                        terms.push_back(SymExpr::mul(std::move(factors)));
                    }
                    r = SymExpr::add(std::move(terms));
                    break;
                }
                case SymKind::IPow: {
                    SymExpr base(n.kids[0]);
                    SymExpr db = (*this)(n.kids[0]);
                    if (db.is_zero()) {
                        r = SymExpr::constant(0);
                    } else {
                        r = SymExpr::mul({SymExpr::constant(rat(n.ivalue)),
                                          SymExpr::ipow(base, n.ivalue - 1), db});
                    }
                    break;
                }
                case SymKind::Bump: {
                    // psi_r'(x) = psi_r(x) * (-2x/r^2) / (1-(x/r)^2)^2
                    SymExpr arg(n.kids[0]);
                    SymExpr darg = (*this)(n.kids[0]);
                    if (darg.is_zero()) {
                        r = SymExpr::constant(0);
                    } else {
                        const Rat inv_r2 = rat(1) / (n.cvalue * n.cvalue);
                        SymExpr seam = SymExpr::add(
                            {SymExpr::constant(1),
                             SymExpr::mul({SymExpr::constant(-inv_r2), arg, arg})});
                        r = SymExpr::mul({SymExpr(id), SymExpr::constant(rat(-2) * inv_r2),
                                          arg, SymExpr::ipow(seam, -2), darg});
                    }
                    break;
                }
                case SymKind::DetInv: {
                    SymExpr a(n.kids[0]), b(n.kids[1]), c(n.kids[2]), d(n.kids[3]);
                    SymExpr da = (*this)(n.kids[0]), db = (*this)(n.kids[1]);
                    SymExpr dc = (*this)(n.kids[2]), dd = (*this)(n.kids[3]);
                    SymExpr ddet = SymExpr::add(
                        {SymExpr::mul({da, d}), SymExpr::mul({a, dd}),
                         SymExpr::mul({SymExpr::constant(-1), db, c}),
                         SymExpr::mul({SymExpr::constant(-1), b, dc})});
                    if (ddet.is_zero())
                        r = SymExpr::constant(0);
                    else
                        r = SymExpr::mul({SymExpr::constant(-1), ddet, SymExpr(id), SymExpr(id)});
                    break;
                }
            }
            memo.emplace(id, r);
            return r;
        }
    } rec{v, memo};
    return rec(id_);
}

SymExpr SymExpr::subst(const std::map<int, SymExpr>& replacement) const {
    std::unordered_map<int, SymExpr> memo;
    struct Rec {
        const std::map<int, SymExpr>& rep;
        std::unordered_map<int, SymExpr>& memo;
        SymExpr operator()(int id) {
            auto it = memo.find(id);
            if (it != memo.end()) return it->second;
            const Node& n = node(id);
            SymExpr r;
            switch (n.kind) {
                case SymKind::Const:
                    r = SymExpr(id);
                    break;
                case SymKind::Var: {
                    auto rit = rep.find(n.ivalue);
                    r = rit == rep.end() ? SymExpr(id) : rit->second;
                    break;
                }
                case SymKind::Add: {
                    std::vector<SymExpr> parts;
                    for (int k : n.kids) parts.push_back((*this)(k));
                    r = SymExpr::add(std::move(parts));
                    break;
                }
                case SymKind::Mul: {
                    std::vector<SymExpr> parts;
                    for (int k : n.kids) parts.push_back((*this)(k));
                    r = SymExpr::mul(std::move(parts));
                    break;
                }
                case SymKind::IPow:
                    r = SymExpr::ipow((*this)(n.kids[0]), n.ivalue);
                    break;
                case SymKind::Bump:
                    r = SymExpr::bump((*this)(n.kids[0]), n.cvalue);
                    break;
                case SymKind::DetInv:
                    r = SymExpr::det_inv((*this)(n.kids[0]), (*this)(n.kids[1]),
                                         (*this)(n.kids[2]), (*this)(n.kids[3]));
                    break;
            }
            memo.emplace(id, r);
            return r;
        }
    } rec{replacement, memo};
    return rec(id_);
}

double SymExpr::eval(std::span<const double> vals) const {
    SymProgram prog(*this);
    std::vector<double> scratch;
    return prog.eval(vals, scratch);
}

std::string SymExpr::str() const {
    const Node& n = node(id_);
    std::ostringstream os;
    switch (n.kind) {
        case SymKind::Const:
            os << to_string(n.cvalue);
            break;
        case SymKind::Var: {
            static const char* names[var::COUNT] = {"a", "b", "c", "d", "t", "s", "u", "v", "w"};
            os << names[n.ivalue];
            break;
        }
        case SymKind::Add: {
            os << "(";
            for (std::size_t i = 0; i < n.kids.size(); ++i)
                os << (i ? " + " : "") << SymExpr(n.kids[i]).str();
            os << ")";
            break;
        }
        case SymKind::Mul: {
            for (std::size_t i = 0; i < n.kids.size(); ++i)
                os << (i ? "*" : "") << SymExpr(n.kids[i]).str();
            break;
        }
        case SymKind::IPow:
            os << SymExpr(n.kids[0]).str() << "^" << n.ivalue;
            break;
        case SymKind::Bump:
            os << "psi[" << to_string(n.cvalue) << "](" << SymExpr(n.kids[0]).str() << ")";
            break;
        case SymKind::DetInv:
            os << "detinv(" << SymExpr(n.kids[0]).str() << "," << SymExpr(n.kids[1]).str()
               << "," << SymExpr(n.kids[2]).str() << "," << SymExpr(n.kids[3]).str() << ")";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// compiled evaluation
// ---------------------------------------------------------------------------

SymProgram::SymProgram(const SymExpr& root) {
    if (!root.valid()) throw std::logic_error("SymProgram of invalid expression");
    // topological order by DFS; slot of node = position in code_
    std::unordered_map<int, std::int32_t> slot;
    std::vector<std::pair<int, bool>> stack{{root.id_, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (slot.count(id)) continue;
        const Node& n = node(id);
        if (!expanded) {
            stack.push_back({id, true});
            for (int k : n.kids)
                if (!slot.count(k)) stack.push_back({k, false});
            continue;
        }
        Instr ins;
        ins.kind = n.kind;
        switch (n.kind) {
            case SymKind::Const:
                ins.c0 = to_double(n.cvalue);
                break;
            case SymKind::Var:
                ins.a = n.ivalue;
                break;
            case SymKind::IPow:
                ins.a = n.ivalue;
                break;
            case SymKind::Bump:
                ins.c0 = to_double(n.cvalue);
                ins.c1 = 1.0 / (ins.c0 * ins.c0);
                break;
            default:
                break;
        }
        ins.kids = static_cast<std::int32_t>(kid_idx_.size());
        ins.a = n.kind == SymKind::Add || n.kind == SymKind::Mul
                    ? static_cast<std::int32_t>(n.kids.size())
                    : ins.a;
        for (int k : n.kids) kid_idx_.push_back(slot.at(k));
        slot.emplace(id, static_cast<std::int32_t>(code_.size()));
        code_.push_back(ins);
    }
}

double SymProgram::eval(std::span<const double> vals, std::vector<double>& scratch) const {
    if (scratch.size() < code_.size()) scratch.resize(code_.size());
    double* out = scratch.data();
    const std::int32_t* kid = kid_idx_.data();
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const Instr& ins = code_[i];
        switch (ins.kind) {
            case SymKind::Const:
                out[i] = ins.c0;
                break;
            case SymKind::Var:
                out[i] = vals[ins.a];
                break;
            case SymKind::Add: {
                double s = 0.0;
                for (std::int32_t k = 0; k < ins.a; ++k) s += out[kid[ins.kids + k]];
                out[i] = s;
                break;
            }
            case SymKind::Mul: {
                double p = 1.0;
                bool zero = false;
                for (std::int32_t k = 0; k < ins.a; ++k)
                    if (out[kid[ins.kids + k]] == 0.0) {
                        zero = true;
                        break;
                    }
                if (zero) {
                    out[i] = 0.0;
                } else {
                    for (std::int32_t k = 0; k < ins.a; ++k) p *= out[kid[ins.kids + k]];
                    out[i] = p;
                }
                break;
            }
            case SymKind::IPow: {
                const double b = out[kid[ins.kids]];
                int n = ins.a;
                const bool neg = n < 0;
                if (neg) n = -n;
                double p = 1.0, base = b;
                while (n) {
                    if (n & 1) p *= base;
                    base *= base;
                    n >>= 1;
                }
                out[i] = neg ? 1.0 / p : p;  // 0 base with neg exponent -> inf,
                break;                       // killed by the vanishing bump sibling
            }
            case SymKind::Bump: {
                const double x = out[kid[ins.kids]];
                if (std::abs(x) >= ins.c0) {
                    out[i] = 0.0;
                } else {
                    out[i] = std::exp(-1.0 / (1.0 - x * x * ins.c1));
                }
                break;
            }
            case SymKind::DetInv: {
                const double det = out[kid[ins.kids]] * out[kid[ins.kids + 3]] -
                                   out[kid[ins.kids + 1]] * out[kid[ins.kids + 2]];
                if (det == 0.0) throw DetZero("det_inv evaluated at det = 0");
                out[i] = 1.0 / det;
                break;
            }
        }
    }
    return out[code_.size() - 1];
}

std::pair<SymExpr, SupportBox> std_bump_F(const Rat& r) {
    if (sgn(r) <= 0 || r > rat(2, 5))
        throw BadRadius("bump radius must satisfy 0 < r <= 2/5, got " + to_string(r));
    const double rd = to_double(r);
    const double detmin = 1.0 - 2.0 * rd;  // (1-r)^2 - r^2
    if (detmin <= 0.0) throw BadRadius("support box reaches det <= 0");

    SymExpr a = SymExpr::variable(var::A), b = SymExpr::variable(var::B);
    SymExpr c = SymExpr::variable(var::C), d = SymExpr::variable(var::D);
    SymExpr one = SymExpr::constant(1);
    SymExpr F = SymExpr::mul({SymExpr::bump(a - one, r), SymExpr::bump(b, r),
                              SymExpr::bump(c, r), SymExpr::bump(d - one, r)});
    SupportBox box;
    box.set(var::A, 1.0 - rd, 1.0 + rd);
    box.set(var::B, -rd, rd);
    box.set(var::C, -rd, rd);
    box.set(var::D, 1.0 - rd, 1.0 + rd);
    box.detmin = detmin;
    return {F, box};
}

}  // namespace gl2f
