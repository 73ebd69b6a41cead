#include "hlkappa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace hlkappa {

Rational integrate_poly_exact(const PiecewisePolynomial& p, const Interval& iv) {
    return p.integral(iv.a, iv.b);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes

namespace {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Newton iteration on P_n with the three-term recurrence; standard
// construction, converges in a handful of steps from the Chebyshev guess
GaussRule build_rule(int n) {
    GaussRule r;
    r.nodes.resize(static_cast<size_t>(n));
    r.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[static_cast<size_t>(i)] = x;
        r.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule16() {
    static const GaussRule r = build_rule(16);
    return r;
}

const GaussRule& rule32() {
    static const GaussRule r = build_rule(32);
    return r;
}

double apply_rule(const GaussRule& r, const std::function<double(double)>& g, double lo,
                  double hi) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double acc = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * g(c + h * r.nodes[i]);
    return acc * h;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& g, const Interval& iv,
                                    const AdaptiveOptions& opts) {
    if (opts.tol <= 0) throw ParameterError("integrate_adaptive: tol must be positive");
    double a = to_double(iv.a), b = to_double(iv.b);

    // seed panels from the declared breakpoints so the integrand is smooth
    // inside every panel from the start
    std::vector<double> cuts{a, b};
    for (double x : opts.breakpoints)
        if (x > a && x < b) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    struct Panel {
        double lo, hi;
    };
    std::deque<Panel> work;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) work.push_back({cuts[i], cuts[i + 1]});

    const double total_len = b - a;
    double value = 0.0, err = 0.0;
    int panels_done = 0;
    while (!work.empty()) {
        if (panels_done + static_cast<int>(work.size()) > opts.max_panels) {
            for (const auto& p : work) value += apply_rule(rule32(), g, p.lo, p.hi);
            throw ConvergenceError("integrate_adaptive: panel budget exhausted", value,
                                   panels_done);
        }
        Panel p = work.front();
        work.pop_front();
        double coarse = apply_rule(rule16(), g, p.lo, p.hi);
        double fine = apply_rule(rule32(), g, p.lo, p.hi);
        double e = std::abs(fine - coarse);
        if (e <= opts.tol * (p.hi - p.lo) / total_len || (p.hi - p.lo) < 1e-14) {
            value += fine;
            err += e;
            ++panels_done;
        } else {
            double mid = 0.5 * (p.lo + p.hi);
            work.push_back({p.lo, mid});
            work.push_back({mid, p.hi});
        }
    }
    QuadratureResult res;
    res.value = value;
    res.abs_error_estimate = err;
    res.mode = QuadMode::Adaptive;
    res.subdivisions = panels_done;
    return res;
}

// ---------------------------------------------------------------------------
// weighted products

Evaluable Evaluable::from_pp(PiecewisePolynomial p) {
    Evaluable e;
    e.breakpoints = p.breakpoints_d();
    e.pp = std::make_shared<const PiecewisePolynomial>(std::move(p));
    auto sp = e.pp;
    e.fn = [sp](double x) { return sp->eval(x); };
    return e;
}

Evaluable Evaluable::from_fn(std::function<double(double)> f, std::vector<double> brks) {
    Evaluable e;
    e.fn = std::move(f);
    e.breakpoints = std::move(brks);
    return e;
}

QuadratureResult weighted_product_integral(const WeightSpec& w, const Evaluable& u,
                                           const Evaluable& v, const Interval& iv,
                                           double tol) {
    PiecewisePolynomial wpp = weight_as_pp(w);
    if (u.pp && v.pp) {
        PiecewisePolynomial prod = wpp * *u.pp * *v.pp;
        QuadratureResult res;
        res.exact = integrate_poly_exact(prod, iv);
        res.value = to_double(*res.exact);
        res.abs_error_estimate = 0.0;
        res.mode = QuadMode::Exact;
        res.subdivisions = static_cast<int>(prod.pieces().size());
        return res;
    }
    AdaptiveOptions opts;
    opts.tol = tol;
    opts.breakpoints = wpp.breakpoints_d();
    for (double x : u.breakpoints) opts.breakpoints.push_back(x);
    for (double x : v.breakpoints) opts.breakpoints.push_back(x);
    auto g = [&](double x) { return wpp.eval(x) * u.fn(x) * v.fn(x); };
    return integrate_adaptive(g, iv, opts);
}

// ---------------------------------------------------------------------------
// closed forms for polynomial * trig
//
// int p sin(wx + c) = [-p cos(wx + c)/w] + (1/w) int p' cos(wx + c)
// int p cos(wx + c) = [ p sin(wx + c)/w] - (1/w) int p' sin(wx + c)
// Unrolled into endpoint evaluations of the alternating derivative sums.

double integral_poly_sin(const Polynomial& p, double omega, double phi, double lo, double hi) {
    if (p.is_zero()) return 0.0;
    // shift to u = x - lo before anything touches doubles: pieces cut from
    // narrow cells (mollified kinks) carry huge cancelling global
    // coefficients, but about their own left endpoint they are conditioned
    // like a Taylor expansion, and the shift is exact (doubles are dyadic)
    const Polynomial q = p.compose_affine(Rational(lo), Rational(1));
    const double len = hi - lo;
    const double ph = omega * lo + phi;
    if (omega == 0.0) {
        Polynomial F = q.antiderivative();
        return (F.eval(len) - F.eval(0.0)) * std::sin(ph);
    }
    if (std::abs(omega) * len < 4.0) {
        // slow phase over the cell: the endpoint form below differences sums
        // dominated by q^(m)/omega^m terms, catastrophic for stiff narrow-cell
        // pieces; expanding the sine in u keeps every term on the scale of
        // the integral itself
        const auto& qc = q.coeffs();
        std::vector<double> qd(qc.size());
        for (size_t k = 0; k < qc.size(); ++k) qd[k] = to_double(qc[k]);
        const double s0 = std::sin(ph), c0 = std::cos(ph);
        const double cyc[4] = {s0, c0, -s0, -c0};
        double total = 0.0;
        double wfac = 1.0;  // omega^m / m!
        double lead = len;  // len^(m+1)
        for (int m = 0; m < 48; ++m) {
            double mom = 0.0;  // int_0^len q(u) u^m du
            double lp = lead;
            for (size_t k = 0; k < qd.size(); ++k) {
                mom += qd[k] * lp / static_cast<double>(k + m + 1);
                lp *= len;
            }
            total += cyc[m & 3] * wfac * mom;
            wfac *= omega / static_cast<double>(m + 1);
            lead *= len;
            if (std::abs(wfac) * lead == 0.0) break;
        }
        return total;
    }
    // F(u) = -cos(wu+ph) * A(u) + sin(wu+ph) * B(u), with
    // A = (q - q''/w^2 + q''''/w^4 - ...) / w, B = (q' - q'''/w^2 + ...) / w^2
    std::vector<Polynomial> derivs{q};
    while (!derivs.back().is_zero()) derivs.push_back(derivs.back().derivative());
    auto eval_sum = [&](size_t first, double u) {
        double acc = 0.0, sign = 1.0;
        double w2 = omega * omega;
        double scale = 1.0;
        for (size_t k = first; k < derivs.size(); k += 2) {
            acc += sign * derivs[k].eval(u) * scale;
            sign = -sign;
            scale /= w2;
        }
        return acc;
    };
    auto F = [&](double u) {
        double A = eval_sum(0, u) / omega;
        double B = eval_sum(1, u) / (omega * omega);
        return -std::cos(omega * u + ph) * A + std::sin(omega * u + ph) * B;
    };
    return F(len) - F(0.0);
}

double integral_poly_cos(const Polynomial& p, double omega, double phi, double lo, double hi) {
    // cos(t) = sin(t + pi/2)
    return integral_poly_sin(p, omega, phi + 1.5707963267948966, lo, hi);
}

double integral_poly_trig_pair(const Polynomial& p, const TrigAtom& s, const TrigAtom& t,
                               double lo, double hi) {
    // each atom is amp * trig(omega x - omega origin); convert to phase form
    auto phase = [](const TrigAtom& a) { return -a.omega * a.origin + (a.is_sin ? 0.0 : 1.5707963267948966); };
    double ps = phase(s), pt = phase(t);
    // sin(X) sin(Y) convention after converting both to sines:
    // sin X sin Y = (cos(X - Y) - cos(X + Y)) / 2
    double amp = 0.5 * s.amp * t.amp;
    double dw = s.omega - t.omega, dphi = ps - pt;
    double sw = s.omega + t.omega, sphi = ps + pt;
    return amp * (integral_poly_cos(p, dw, dphi, lo, hi) -
                  integral_poly_cos(p, sw, sphi, lo, hi));
}

double weighted_trig_pair_integral(const PiecewisePolynomial& w, const TrigAtom& s,
                                   const TrigAtom& t) {
    const auto& brk = w.breakpoints();
    double acc = 0.0;
    for (size_t i = 0; i < w.pieces().size(); ++i)
        acc += integral_poly_trig_pair(w.pieces()[i], s, t, to_double(brk[i]),
                                       to_double(brk[i + 1]));
    return acc;
}

}  // namespace hlkappa
