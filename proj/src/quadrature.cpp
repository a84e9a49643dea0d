#include "gl2f/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "gl2f/errors.hpp"

namespace gl2f {

const GaussRule& gauss_rule(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    if (order < 1) throw std::invalid_argument("gauss_rule: order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;

    auto rule = std::make_unique<GaussRule>();
    rule->x.resize(order);
    rule->w.resize(order);
    const int n = order;
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x)
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule->x[k] = -x;
        rule->x[n - 1 - k] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule->w[k] = w;
        rule->w[n - 1 - k] = w;
    }
    const GaussRule& ref = *rule;
    cache.emplace(order, std::move(rule));
    return ref;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int nthreads = std::max(1, std::min(n, hw));
    if (nthreads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

Complex power_signed(double x, Complex mu, int eps) {
    if (x == 0.0) throw ZeroBase("signed power of zero");
    const double ax = std::abs(x);
    const Complex mag = std::exp(mu * std::log(ax));
    const bool flip = x < 0.0 && (((eps % 2) + 2) % 2 == 1);
    return flip ? -mag : mag;
}

Box3 kernel_bounds(const SupportBox& box, double t, double s) {
    Box3 b;
    const auto& ia = box.iv[var::A];
    const auto& ic = box.iv[var::C];
    const auto& id = box.iv[var::D];
    // v = c
    b.vlo = ic.lo;
    b.vhi = ic.hi;
    // u = a + t v
    const double tv1 = t * ic.lo, tv2 = t * ic.hi;
    b.ulo = ia.lo + std::min(tv1, tv2);
    b.uhi = ia.hi + std::max(tv1, tv2);
    // w = d - s v
    const double sv1 = s * ic.lo, sv2 = s * ic.hi;
    b.wlo = id.lo - std::max(sv1, sv2);
    b.whi = id.hi - std::min(sv1, sv2);
    // keep away from u = 0 and w = 0 using det = u w >= detmin on the support
    if (box.detmin > 0.0) {
        if (b.uhi <= 0.0 || b.whi <= 0.0) return b;  // empty
        b.ulo = std::max(b.ulo, box.detmin / b.whi);
        b.wlo = std::max(b.wlo, box.detmin / b.uhi);
    }
    if (b.ulo >= b.uhi || b.vlo >= b.vhi || b.wlo >= b.whi) return b;
    b.empty = false;
    return b;
}

namespace {

// compiled integrand d^p/dt^p d^q/ds^q [ F(u-tv, su-stv-tw, v, sv+w) ],
// cached per (F, p, q)
std::shared_ptr<const SymProgram> kernel_integrand_program(const SymExpr& F, int p, int q) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const SymProgram>> cache;
    const std::tuple<int, int, int> key{F.id(), p, q};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const SymExpr t = SymExpr::variable(var::T), s = SymExpr::variable(var::S);
    const SymExpr u = SymExpr::variable(var::U), v = SymExpr::variable(var::V);
    const SymExpr w = SymExpr::variable(var::W);
    const SymExpr minus1 = SymExpr::constant(-1);
    std::map<int, SymExpr> sub{
        {var::A, u - t * v},
        {var::B, SymExpr::add({s * u, SymExpr::mul({minus1, s, t, v}), SymExpr::mul({minus1, t, w})})},
        {var::C, v},
        {var::D, s * v + w},
    };
    SymExpr g = F.subst(sub);
    for (int i = 0; i < p; ++i) g = g.diff(var::T);
    for (int i = 0; i < q; ++i) g = g.diff(var::S);
    auto prog = std::make_shared<const SymProgram>(g);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, prog);
    return prog;
}

// The tensor quadrature nests exact per-fiber bounds: v runs over the
// c-interval; for each v, u runs over the reachable a-interval shifted by
// t v; for each (u, v), w runs over the d-interval shifted by s v cut with
// the slab where the b-argument s(u - tv) - t w stays inside its interval
// and with the det = u w >= detmin clip. Aligning the nodes with the
// support seams is what makes plain Gauss-Legendre converge fast here.
Complex kernel_quadrature(const SymExpr& F, const SupportBox& box, double t, double s,
                          const ParamPoint& pt, int p, int q, int order) {
    if (order < 8) throw std::invalid_argument("kernel quadrature order must be >= 8");
    const Box3 b = kernel_bounds(box, t, s);
    if (b.empty) return {0.0, 0.0};

    const GaussRule& rule = gauss_rule(order);
    const int n = order;
    const auto& ia = box.iv[var::A];
    const auto& ib = box.iv[var::B];
    const auto& ic = box.iv[var::C];
    const auto& id = box.iv[var::D];
    const Complex a1 = pt.m1 - 1.5, a2 = pt.m2 - 1.5;
    const double jv = 0.5 * (ic.hi - ic.lo), cv = 0.5 * (ic.hi + ic.lo);
    const double u_clip = box.detmin > 0.0 ? box.detmin / b.whi : -1e300;

    auto prog = kernel_integrand_program(F, p, q);
    std::vector<Complex> slice(n);
    parallel_for(n, [&](int j) {
        std::vector<double> scratch(prog->scratch_size());
        double vals[var::COUNT] = {};
        vals[var::T] = t;
        vals[var::S] = s;
        const double v = cv + jv * rule.x[j];
        vals[var::V] = v;
        // u-range for this v
        const double u1f = std::max(ia.lo + t * v, u_clip);
        const double u2 = ia.hi + t * v;
        if (u1f >= u2) {
            slice[j] = 0.0;
            return;
        }
        const double juu = 0.5 * (u2 - u1f), cuu = 0.5 * (u2 + u1f);
        Complex acc_v = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = cuu + juu * rule.x[i];
            vals[var::U] = u;
            // w-range for this (u, v)
            double w1 = id.lo - s * v, w2 = id.hi - s * v;
            const double barg0 = s * (u - t * v);
            if (t > 0.0) {
                w1 = std::max(w1, (barg0 - ib.hi) / t);
                w2 = std::min(w2, (barg0 - ib.lo) / t);
            } else if (t < 0.0) {
                w1 = std::max(w1, (barg0 - ib.lo) / t);
                w2 = std::min(w2, (barg0 - ib.hi) / t);
            } else if (barg0 < ib.lo || barg0 > ib.hi) {
                continue;  // b-argument constant in w and outside the support
            }
            if (box.detmin > 0.0) {
                if (u <= 0.0) continue;
                w1 = std::max(w1, box.detmin / u);
            }
            if (w1 >= w2) continue;
            const double jww = 0.5 * (w2 - w1), cww = 0.5 * (w2 + w1);
            Complex acc_w = 0.0;
            for (int k = 0; k < n; ++k) {
                const double w = cww + jww * rule.x[k];
                vals[var::W] = w;
                const double f = prog->eval(vals, scratch);
                if (f != 0.0) acc_w += rule.w[k] * f * power_signed(w, a2, pt.e2);
            }
            acc_v += juu * rule.w[i] * jww * power_signed(u, a1, pt.e1) * acc_w;
        }
        slice[j] = jv * rule.w[j] * acc_v;
    });
    Complex total = 0.0;
    for (int j = 0; j < n; ++j) total += slice[j];
    return total;
}

}  // namespace

Complex eval_kernel(const SymExpr& F, const SupportBox& box, double t, double s,
                    const ParamPoint& pt, int order) {
    return kernel_quadrature(F, box, t, s, pt, 0, 0, order);
}

Complex eval_kernel_deriv(const SymExpr& F, const SupportBox& box, double t, double s,
                          const ParamPoint& pt, int p, int q, int order, KernelCache* cache) {
    if (p < 0 || q < 0) throw std::invalid_argument("derivative orders must be nonnegative");
    if (cache) {
        const KernelCache::Key key{F.id(),       p,
                                   q,            t,
                                   s,            pt.m1.real(),
                                   pt.m1.imag(), pt.m2.real(),
                                   pt.m2.imag(), pt.e1,
                                   pt.e2,        order};
        Complex out;
        if (cache->lookup(key, out)) return out;
        out = kernel_quadrature(F, box, t, s, pt, p, q, order);
        cache->store(key, out);
        return out;
    }
    return kernel_quadrature(F, box, t, s, pt, p, q, order);
}

Complex apply_fourier_operator(const FourierOperator& A, const SymExpr& F,
                               const SupportBox& box, double t, double s, const ParamPoint& pt,
                               int order, KernelCache* cache) {
    Complex acc = 0.0;
    for (const auto& [key, coeff] : A.monomials()) {
        const Complex cval = coeff.eval(pt.m1, pt.m2);
        const ParamPoint shifted = pt.shifted(key.k, key.l);
        const Complex kd = eval_kernel_deriv(F, box, t, s, shifted, key.p, key.q, order, cache);
        acc += cval * std::pow(t, key.i) * std::pow(s, key.j) * kd;
    }
    return acc;
}

std::pair<Complex, Complex> rep_action_check(const SymExpr& F, const SupportBox& box,
                                             const SymExpr& f, double f_lo, double f_hi,
                                             double t, const ParamPoint& pt, int order4d,
                                             int kernel_order, int s_order) {
    // lhs: 4-D quadrature over the support box of F
    const GaussRule& rule = gauss_rule(order4d);
    const int n = order4d;
    const auto& ia = box.iv[var::A];
    const auto& ib = box.iv[var::B];
    const auto& ic = box.iv[var::C];
    const auto& id = box.iv[var::D];
    const double ja = 0.5 * (ia.hi - ia.lo), ca = 0.5 * (ia.hi + ia.lo);
    const double jb = 0.5 * (ib.hi - ib.lo), cb = 0.5 * (ib.hi + ib.lo);
    const double jc = 0.5 * (ic.hi - ic.lo), cc = 0.5 * (ic.hi + ic.lo);
    const double jd = 0.5 * (id.hi - id.lo), cd = 0.5 * (id.hi + id.lo);

    const SymProgram progF(F);
    const SymProgram progf(f);
    const Complex pow1 = pt.m1 - pt.m2 - 1.0;
    const Complex pow2 = pt.m2 + 0.5;
    const int eps12 = ((pt.e1 - pt.e2) % 2 + 2) % 2;

    std::vector<Complex> slice(n);
    parallel_for(n, [&](int i) {
        std::vector<double> scratchF(progF.scratch_size()), scratchf(progf.scratch_size());
        double vals[var::COUNT] = {};
        double fvals[var::COUNT] = {};
        vals[var::A] = ca + ja * rule.x[i];
        Complex acc = 0.0;
        for (int jj = 0; jj < n; ++jj) {
            vals[var::B] = cb + jb * rule.x[jj];
            for (int kk = 0; kk < n; ++kk) {
                vals[var::C] = cc + jc * rule.x[kk];
                const double atc = vals[var::A] + t * vals[var::C];
                for (int ll = 0; ll < n; ++ll) {
                    vals[var::D] = cd + jd * rule.x[ll];
                    const double Fv = progF.eval(vals, scratchF);
                    if (Fv == 0.0) continue;
                    const double det =
                        vals[var::A] * vals[var::D] - vals[var::B] * vals[var::C];
                    fvals[var::S] = (vals[var::B] + t * vals[var::D]) / atc;
                    const double fv = progf.eval(fvals, scratchf);
                    if (fv == 0.0) continue;
                    const double wt = rule.w[jj] * rule.w[kk] * rule.w[ll];
                    acc += wt * Fv * fv * power_signed(atc, pow1, eps12) *
                           power_signed(det, pow2, pt.e2) / (det * det);
                }
            }
        }
        slice[i] = acc * rule.w[i];
    });
    Complex lhs = 0.0;
    for (int i = 0; i < n; ++i) lhs += slice[i];
    lhs *= ja * jb * jc * jd;

    // rhs: 1-D quadrature of K_F(t, s) f(s) over the support of f
    const GaussRule& srule = gauss_rule(s_order);
    const double js = 0.5 * (f_hi - f_lo), cs = 0.5 * (f_hi + f_lo);
    Complex rhs = 0.0;
    std::vector<double> scratchf(progf.scratch_size());
    for (int i = 0; i < s_order; ++i) {
        const double sv = cs + js * srule.x[i];
        double fvals[var::COUNT] = {};
        fvals[var::S] = sv;
        const double fv = progf.eval(fvals, scratchf);
        if (fv == 0.0) continue;
        rhs += js * srule.w[i] * fv * eval_kernel(F, box, t, sv, pt, kernel_order);
    }
    return {lhs, rhs};
}

Complex j_transform(const SymExpr& phi, double x_lo, double x_hi, double u, Complex sigma,
                    int eps, int order, int du_order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const SymProgram>> cache;
    std::shared_ptr<const SymProgram> prog;
    {
        const std::pair<int, int> key{phi.id(), du_order};
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) prog = it->second;
    }
    if (!prog) {
        const SymExpr tau = SymExpr::variable(var::T);
        const SymExpr uu = SymExpr::variable(var::U);
        SymExpr g = phi.subst({{var::X, tau}, {var::Y, tau * uu}});
        for (int i = 0; i < du_order; ++i) g = g.diff(var::U);
        prog = std::make_shared<const SymProgram>(g);
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::pair<int, int>{phi.id(), du_order}, prog);
    }
    const GaussRule& rule = gauss_rule(order);
    const double j = 0.5 * (x_hi - x_lo), c = 0.5 * (x_hi + x_lo);
    Complex acc = 0.0;
    std::vector<double> scratch(prog->scratch_size());
    double vals[var::COUNT] = {};
    vals[var::U] = u;
    for (int i = 0; i < order; ++i) {
        const double tau = c + j * rule.x[i];
        vals[var::T] = tau;
        const double fv = prog->eval(vals, scratch);
        if (fv == 0.0) continue;
        acc += j * rule.w[i] * fv * power_signed(tau, -sigma, eps);
    }
    return acc;
}

}  // namespace gl2f
