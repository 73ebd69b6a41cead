#include "hlkappa/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hlkappa/quadrature.hpp"
#include "hlkappa/rng.hpp"

namespace hlkappa {

namespace {

// clamped uniform cubic B-splines by Cox-de Boor in rational arithmetic;
// returns all m + 2 cubics as per-span polynomial tables
std::vector<std::vector<Polynomial>> cubic_bsplines(const std::vector<Rational>& grid) {
    const size_t nspans = grid.size() - 1;
    std::vector<Rational> t;  // knot vector with endpoint multiplicity 4
    for (int r = 0; r < 3; ++r) t.push_back(grid.front());
    for (const auto& g : grid) t.push_back(g);
    for (int r = 0; r < 3; ++r) t.push_back(grid.back());
    const size_t nk = t.size();

    // level[k][i][s]: B_{i,k} restricted to span s
    const auto zero_table = [&](size_t count) {
        return std::vector<std::vector<Polynomial>>(count, std::vector<Polynomial>(nspans));
    };
    auto prev = zero_table(nk - 1);
    for (size_t i = 0; i + 1 < nk; ++i) {
        if (t[i] == t[i + 1]) continue;
        // nondegenerate zero-degree functions sit exactly on the spans
        prev[i][i - 3] = Polynomial::constant(Rational(1));
    }
    for (int k = 1; k <= 3; ++k) {
        auto cur = zero_table(nk - 1 - static_cast<size_t>(k));
        for (size_t i = 0; i < cur.size(); ++i) {
            const Rational d1 = t[i + static_cast<size_t>(k)] - t[i];
            const Rational d2 = t[i + static_cast<size_t>(k) + 1] - t[i + 1];
            for (size_t s = 0; s < nspans; ++s) {
                Polynomial acc;
                if (d1 != 0 && !prev[i][s].is_zero())
                    acc = acc + Polynomial({-t[i] / d1, Rational(1) / d1}) * prev[i][s];
                if (d2 != 0 && !prev[i + 1][s].is_zero())
                    acc = acc +
                          Polynomial({t[i + static_cast<size_t>(k) + 1] / d2,
                                      Rational(-1) / d2}) *
                              prev[i + 1][s];
                cur[i][s] = std::move(acc);
            }
        }
        prev = std::move(cur);
    }
    return prev;  // m + 2 cubics
}

double quad_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& c) {
    return c.dot(A * c);
}

double log_kappa(const QuadraticForms& f, const Eigen::VectorXd& c, bool& ok) {
    const double s0 = quad_form(f.A0, c);
    const double s1 = quad_form(f.A1, c);
    const double s2 = quad_form(f.A2, c);
    ok = std::isfinite(s0) && std::isfinite(s1) && std::isfinite(s2) && s0 > 0 && s1 > 0 &&
         s2 > 0;
    if (!ok) return -std::numeric_limits<double>::infinity();
    return 2.0 * std::log(s1) - std::log(s0) - std::log(s2);
}

}  // namespace

QuadraticForms assemble_forms(const WeightSpec& w, const Interval& iv, int m) {
    if (m < 4) throw ParameterError("basis size must be at least 4");
    if (!(w.interval() == iv))
        throw ParameterError("weight interval does not match the requested interval");
    if (w.nonnegativity == Verdict::CertifiedNot)
        throw HypothesisError("weight is certified negative somewhere on the interval");

    const int nspans = m - 1;
    std::vector<Rational> grid(static_cast<size_t>(nspans) + 1);
    const Rational step = iv.length() / nspans;
    for (int i = 0; i <= nspans; ++i) grid[static_cast<size_t>(i)] = iv.a + step * i;

    const auto all = cubic_bsplines(grid);  // m + 2 functions

    QuadraticForms forms;
    forms.iv = iv;
    forms.m = m;
    forms.basis.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {  // drop the two endpoint splines
        std::vector<Polynomial> pieces = all[static_cast<size_t>(j)];
        forms.basis.emplace_back(grid, std::move(pieces));
    }

    std::vector<PiecewisePolynomial> d1, d2;
    d1.reserve(static_cast<size_t>(m));
    d2.reserve(static_cast<size_t>(m));
    for (const auto& b : forms.basis) {
        d1.push_back(b.derivative());
        d2.push_back(d1.back().derivative());
    }

    // rational accumulators; doubles only at the very end
    using RMat = std::vector<std::vector<Rational>>;
    const auto rzero = [&] {
        return RMat(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(m)));
    };
    RMat r0 = rzero(), r1 = rzero(), r2 = rzero(), rm = rzero();

    // cell-by-cell: intersect the weight's partition with the span grid,
    // then only the <= 4 splines alive on each span contribute
    const PiecewisePolynomial wpp = weight_as_pp(w);
    const std::vector<Rational> cells = merge_breakpoints(grid, wpp.breakpoints());
    for (size_t ci = 0; ci + 1 < cells.size(); ++ci) {
        const Rational& lo = cells[ci];
        const Rational& hi = cells[ci + 1];
        const Rational mid = (lo + hi) / 2;
        const size_t s = std::min<size_t>(
            static_cast<size_t>(nspans) - 1,
            forms.basis.front().piece_index(mid));
        const Polynomial& wpoly = wpp.pieces()[wpp.piece_index(mid)];

        // retained index j is alive on span s iff j in [s - 1, s + 2]
        const int jlo = std::max(0, static_cast<int>(s) - 1);
        const int jhi = std::min(m - 1, static_cast<int>(s) + 2);
        for (int i = jlo; i <= jhi; ++i) {
            const auto si = static_cast<size_t>(i);
            const Polynomial& pi0 = forms.basis[si].pieces()[s];
            const Polynomial& pi1 = d1[si].pieces()[s];
            const Polynomial& pi2 = d2[si].pieces()[s];
            for (int j = i; j <= jhi; ++j) {
                const auto sj = static_cast<size_t>(j);
                const Polynomial& pj0 = forms.basis[sj].pieces()[s];
                const Polynomial prod00 = pi0 * pj0;
                r0[si][sj] += (wpoly * prod00).integral(lo, hi);
                r1[si][sj] += (wpoly * pi1 * d1[sj].pieces()[s]).integral(lo, hi);
                r2[si][sj] += (wpoly * pi2 * d2[sj].pieces()[s]).integral(lo, hi);
                rm[si][sj] += prod00.integral(lo, hi);
            }
        }
    }

    const auto to_mat = [&](const RMat& r) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                const double v = to_double(r[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                a(i, j) = v;
                a(j, i) = v;
            }
        return a;
    };
    forms.A0 = to_mat(r0);
    forms.A1 = to_mat(r1);
    forms.A2 = to_mat(r2);
    forms.mass = to_mat(rm);
    return forms;
}

double kappa_of(const QuadraticForms& forms, const Eigen::VectorXd& c) {
    const double s0 = quad_form(forms.A0, c);
    const double s1 = quad_form(forms.A1, c);
    const double s2 = quad_form(forms.A2, c);
    if (!(s0 > 0.0) || !(s2 > 0.0))
        throw DegenerateError("coefficient vector leaves the feasible cone");
    return s1 * s1 / (s0 * s2);
}

Eigen::VectorXd project_sine(const QuadraticForms& forms, int mode) {
    if (mode < 1) throw ParameterError("sine mode must be at least 1");
    const double a = to_double(forms.iv.a);
    const double L = to_double(forms.iv.length());
    const double omega = mode * std::numbers::pi / L;
    Eigen::VectorXd b(forms.m);
    for (int i = 0; i < forms.m; ++i) {
        const auto& phi = forms.basis[static_cast<size_t>(i)];
        const auto& brk = phi.breakpoints();
        double acc = 0.0;
        for (size_t s = 0; s + 1 < brk.size(); ++s) {
            const auto& p = phi.pieces()[s];
            if (p.is_zero()) continue;
            acc += integral_poly_sin(p, omega, -omega * a, to_double(brk[s]),
                                     to_double(brk[s + 1]));
        }
        b(i) = acc;
    }
    return forms.mass.ldlt().solve(b);
}

Eigen::VectorXd project_pp(const QuadraticForms& forms, const PiecewisePolynomial& g) {
    if (!(g.interval() == forms.iv))
        throw ParameterError("projection target lives on a different interval");
    Eigen::VectorXd b(forms.m);
    for (int i = 0; i < forms.m; ++i)
        b(i) = to_double((forms.basis[static_cast<size_t>(i)] * g).integral());
    return forms.mass.ldlt().solve(b);
}

PiecewisePolynomial spline_combination(const QuadraticForms& forms, const Eigen::VectorXd& c) {
    if (c.size() != forms.m) throw ParameterError("coefficient count does not match the basis");
    PiecewisePolynomial acc = forms.basis.front().scaled(Rational(c(0)));
    for (int i = 1; i < forms.m; ++i)
        acc = acc + forms.basis[static_cast<size_t>(i)].scaled(Rational(c(i)));
    return acc;
}

double evaluate_spline(const QuadraticForms& forms, const Eigen::VectorXd& c, double x) {
    double acc = 0.0;
    for (int i = 0; i < forms.m; ++i) acc += c(i) * forms.basis[static_cast<size_t>(i)].eval(x);
    return acc;
}

double correlation(const QuadraticForms& forms, const Eigen::VectorXd& c,
                   const std::function<double(double)>& ref) {
    constexpr int kGrid = 1025;
    const double a = to_double(forms.iv.a);
    const double len = to_double(forms.iv.length());
    double ff = 0.0, gg = 0.0, fg = 0.0;
    for (int k = 0; k < kGrid; ++k) {
        const double x = a + len * k / (kGrid - 1);
        const double f = evaluate_spline(forms, c, x);
        const double g = ref(x);
        ff += f * f;
        gg += g * g;
        fg += f * g;
    }
    if (!(ff > 0.0) || !(gg > 0.0)) return 0.0;
    return std::abs(fg) / std::sqrt(ff * gg);
}

SearchResult maximize_kappa(const QuadraticForms& forms, std::uint64_t seed,
                            const SearchOptions& opts) {
    const int m = forms.m;
    if (m < 1 || forms.A0.rows() != m) throw ParameterError("forms are not assembled");

    Rng rng(seed);
    const auto fresh_start = [&] {
        Eigen::VectorXd c = project_sine(forms, 1);
        if (!(c.norm() > 0.0) || !c.allFinite()) c = Eigen::VectorXd::Ones(m);
        // smooth perturbation: a seeded mix of the next projected modes,
        // sized in the A0 norm; white coefficient noise would dump its
        // energy into the A2 form and start the ascent far below the ridge
        Eigen::VectorXd p = Eigen::VectorXd::Zero(m);
        for (int mode = 2; mode <= 4; ++mode)
            p += (2.0 * rng.uniform01() - 1.0) * project_sine(forms, mode);
        const double cn = std::sqrt(std::max(quad_form(forms.A0, c), 0.0));
        const double pn = std::sqrt(std::max(quad_form(forms.A0, p), 0.0));
        if (pn > 0.0 && cn > 0.0 && p.allFinite()) c += opts.perturb * (cn / pn) * p;
        return c;
    };

    Eigen::VectorXd c = opts.init ? *opts.init : fresh_start();
    int restarts = 0;
    SearchResult res;
    res.best_kappa = -std::numeric_limits<double>::infinity();
    res.best_coefficients = c;

    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        double s0 = quad_form(forms.A0, c);
        const bool feasible = std::isfinite(s0) && s0 > 0.0;
        if (!feasible) {
            if (++restarts > 3)
                throw ConvergenceError("ascent left the feasible cone repeatedly",
                                       res.best_kappa, iter);
            c = fresh_start();
            continue;
        }
        c /= std::sqrt(s0);  // c'A0c = 1; the objective does not move
        s0 = 1.0;
        const double s1 = quad_form(forms.A1, c);
        const double s2 = quad_form(forms.A2, c);
        if (!(std::isfinite(s1) && std::isfinite(s2) && s1 > 0.0 && s2 > 0.0)) {
            if (++restarts > 3)
                throw ConvergenceError("ascent left the feasible cone repeatedly",
                                       res.best_kappa, iter);
            c = fresh_start();
            continue;
        }

        const double kap = (s1 * s1) / (s0 * s2);
        if (kap > res.best_kappa) {
            res.best_kappa = kap;
            res.best_coefficients = c;
        }

        const Eigen::VectorXd g =
            4.0 * (forms.A1 * c) / s1 - 2.0 * (forms.A0 * c) / s0 - 2.0 * (forms.A2 * c) / s2;
        res.gradient_norm_final = g.norm();
        if (g.norm() <= opts.grad_tol) {
            res.converged = true;
            ++iter;
            break;
        }

        // damped Newton on log kappa; the exact Hessian costs three
        // rank-one updates and keeps the step correctly scaled where the
        // crude 2A0/s0 + 2A2/s2 preconditioner squashes it by the A2 scale
        const Eigen::VectorXd a0c = forms.A0 * c;
        const Eigen::VectorXd a1c = forms.A1 * c;
        const Eigen::VectorXd a2c = forms.A2 * c;
        Eigen::MatrixXd H =
            2.0 * forms.A0 / s0 + 2.0 * forms.A2 / s2 - 4.0 * forms.A1 / s1;
        H.noalias() += (8.0 / (s1 * s1)) * (a1c * a1c.transpose());
        H.noalias() -= (4.0 / (s0 * s0)) * (a0c * a0c.transpose());
        H.noalias() -= (4.0 / (s2 * s2)) * (a2c * a2c.transpose());

        const double hscale = H.diagonal().cwiseAbs().maxCoeff() + 1e-300;
        Eigen::VectorXd d;
        double slope = 0.0;
        for (double delta = 1e-12 * hscale; delta <= 1e7 * hscale; delta *= 100.0) {
            Eigen::LDLT<Eigen::MatrixXd> ldlt(
                H + delta * Eigen::MatrixXd::Identity(m, m));
            if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) continue;
            d = ldlt.solve(g);
            slope = g.dot(d);
            if (std::isfinite(slope) && slope > 0.0 && d.allFinite()) break;
            slope = 0.0;
        }
        if (!(slope > 0.0)) {
            d = g;
            slope = g.squaredNorm();
        }

        bool ok = false;
        const double f0 = log_kappa(forms, c, ok);

        // near stationarity the objective increments sink below double
        // resolution and an Armijo test only measures roundoff; switch to
        // steps that shrink the gradient norm itself
        if (slope <= 1e-13 * std::max(1.0, std::abs(f0))) {
            bool shrunk = false;
            double t = 1.0;
            for (int half = 0; half < 24; ++half, t *= 0.5) {
                Eigen::VectorXd cn = c + t * d;
                const double s0n = quad_form(forms.A0, cn);
                if (!(std::isfinite(s0n) && s0n > 0.0)) continue;
                cn /= std::sqrt(s0n);
                const double s1n = quad_form(forms.A1, cn);
                const double s2n = quad_form(forms.A2, cn);
                if (!(s1n > 0.0 && s2n > 0.0)) continue;
                const Eigen::VectorXd gn = 4.0 * (forms.A1 * cn) / s1n -
                                           2.0 * (forms.A0 * cn) - 2.0 * (forms.A2 * cn) / s2n;
                if (gn.norm() < res.gradient_norm_final) {
                    c = cn;
                    shrunk = true;
                    break;
                }
            }
            if (!shrunk) {
                ++iter;  // floor reached in both metrics
                break;
            }
            continue;
        }

        bool accepted = false;
        for (double t = 1.0; t >= 1e-16; t *= opts.backtrack) {
            const Eigen::VectorXd cn = c + t * d;
            bool okn = false;
            const double fn = log_kappa(forms, cn, okn);
            if (okn && fn >= f0 + opts.armijo * t * slope) {
                c = cn;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            ++iter;  // roundoff floor: no step improves the objective
            break;
        }
    }

    res.iterations = iter;
    // the final iterate is the best one (ascent is monotone), but guard
    // against a degenerate last restart
    bool ok = false;
    const double fl = log_kappa(forms, c, ok);
    if (ok && std::exp(fl) >= res.best_kappa) {
        res.best_kappa = std::exp(fl);
        const double s0 = quad_form(forms.A0, c);
        res.best_coefficients = c / std::sqrt(s0);
    }
    return res;
}

double gradient_check(const QuadraticForms& forms, const Eigen::VectorXd& c, double h) {
    if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
    const int m = forms.m;
    const double s0 = quad_form(forms.A0, c);
    const double s1 = quad_form(forms.A1, c);
    const double s2 = quad_form(forms.A2, c);
    if (!(s0 > 0.0 && s1 > 0.0 && s2 > 0.0))
        throw DegenerateError("gradient check needs all three forms positive");
    const Eigen::VectorXd g =
        4.0 * (forms.A1 * c) / s1 - 2.0 * (forms.A0 * c) / s0 - 2.0 * (forms.A2 * c) / s2;

    const double scale = std::max(g.lpNorm<Eigen::Infinity>(), 1e-12);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        Eigen::VectorXd cp = c, cm = c;
        cp(i) += h;
        cm(i) -= h;
        bool okp = false, okm = false;
        const double fp = log_kappa(forms, cp, okp);
        const double fm = log_kappa(forms, cm, okm);
        if (!okp || !okm) throw DegenerateError("finite-difference stencil left the cone");
        const double fd = (fp - fm) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - g(i)) / scale);
    }
    return worst;
}

}  // namespace hlkappa
