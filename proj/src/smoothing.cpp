#include "hlkappa/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace hlkappa {

namespace {

// 35/(32 h^7) (h^2 - t^2)^3 as a polynomial in t
Polynomial bump_kernel(const Rational& h) {
    const Rational h2 = h * h;
    const Rational norm = Rational(35) / (32 * rat_pow(h, 7));
    Polynomial q({h2 * h2 * h2, 0, -3 * h2 * h2, 0, 3 * h2, 0, Rational(-1)});
    return q.scaled(norm);
}

// target extended past [a, b] by its boundary support lines
PiecewisePolynomial extend_linearly(const PiecewisePolynomial& tgt, const Rational& h) {
    const Rational a = tgt.breakpoints().front();
    const Rational b = tgt.breakpoints().back();
    const Rational wa = tgt.eval(a);
    const Rational wb = tgt.eval(b);
    const Rational sa = tgt.pieces().front().coeff(1);
    const Rational sb = tgt.pieces().back().coeff(1);

    std::vector<Rational> brk;
    std::vector<Polynomial> pcs;
    brk.push_back(a - h);
    pcs.emplace_back(std::vector<Rational>{wa - sa * a, sa});
    for (const auto& x : tgt.breakpoints()) brk.push_back(x);
    for (const auto& p : tgt.pieces()) pcs.push_back(p);
    brk.push_back(b + h);
    pcs.emplace_back(std::vector<Rational>{wb - sb * b, sb});
    return PiecewisePolynomial(std::move(brk), std::move(pcs));
}

}  // namespace

Rational SmoothingSchedule::halfwidth(int n) const {
    if (n < 1) throw ParameterError("smoothing level must be at least 1");
    const Interval iv = target.interval();
    return iv.length() / (8 * rat_pow(Rational(2), n));
}

WeightSpec smooth_concave(const SmoothingSchedule& schedule, int n) {
    if (schedule.levels < 1) throw ParameterError("schedule needs at least one level");
    if (n < 1 || n > schedule.levels) throw ParameterError("level outside the schedule");
    const WeightSpec& tw = schedule.target;
    if (tw.concavity != Verdict::Certified)
        throw HypothesisError("smoothing target is not a certified concave weight");
    if (tw.nonnegativity != Verdict::Certified)
        throw HypothesisError("smoothing target is not certified nonnegative");
    if (!std::holds_alternative<PiecewiseLinearWeight>(tw.body) &&
        !std::holds_alternative<ConstantWeight>(tw.body))
        throw ModeError("smoothing schedules take piecewise-linear targets");

    const PiecewisePolynomial tgt = weight_as_pp(tw);
    const Rational a = tgt.breakpoints().front();
    const Rational b = tgt.breakpoints().back();
    const Rational h = schedule.halfwidth(n);

    const PiecewisePolynomial ext = extend_linearly(tgt, h);
    const Polynomial rho = bump_kernel(h);
    const Polynomial P0 = rho.antiderivative();
    const Polynomial P1 = (Polynomial::monomial(Rational(1), 1) * rho).antiderivative();

    // the convolution is polynomial on every x-cell over which the window
    // [x-h, x+h] meets a fixed set of extension segments
    std::vector<Rational> cuts{a, b};
    for (const auto& xi : tgt.breakpoints()) {
        const Rational lo = xi - h, hi = xi + h;
        if (a < lo && lo < b) cuts.push_back(lo);
        if (a < hi && hi < b) cuts.push_back(hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // (w * rho)(x) = int rho(t) w(x - t) dt; per segment [alpha, beta] of the
    // extension carrying w(y) = c0 + c1 y, with t = x - y,
    //   contribution = (c0 + c1 x)(P0(t_up) - P0(t_lo)) - c1 (P1(t_up) - P1(t_lo))
    // where t_up is h or x - alpha and t_lo is -h or x - beta
    std::vector<Polynomial> cells;
    for (size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
        const Rational xm = (cuts[ci] + cuts[ci + 1]) / 2;
        Polynomial cell;
        const auto& ebrk = ext.breakpoints();
        for (size_t j = 0; j + 1 < ebrk.size(); ++j) {
            const Rational& alpha = ebrk[j];
            const Rational& beta = ebrk[j + 1];
            if (!(xm - h < beta && alpha < xm + h)) continue;
            const Rational c0 = ext.pieces()[j].coeff(0);
            const Rational c1 = ext.pieces()[j].coeff(1);

            const bool up_window = xm - h > alpha;   // lower y-limit is x - h
            const bool lo_window = xm + h < beta;    // upper y-limit is x + h
            const Polynomial p0_up = up_window ? Polynomial::constant(P0.eval(h))
                                               : P0.compose_affine(-alpha, Rational(1));
            const Polynomial p0_lo = lo_window ? Polynomial::constant(P0.eval(-h))
                                               : P0.compose_affine(-beta, Rational(1));
            const Polynomial p1_up = up_window ? Polynomial::constant(P1.eval(h))
                                               : P1.compose_affine(-alpha, Rational(1));
            const Polynomial p1_lo = lo_window ? Polynomial::constant(P1.eval(-h))
                                               : P1.compose_affine(-beta, Rational(1));

            const Polynomial lin({c0, c1});
            cell = cell + lin * (p0_up - p0_lo) - (p1_up - p1_lo).scaled(c1);
        }
        cells.push_back(std::move(cell));
    }

    PiecewisePolynomial smoothed(cuts, cells);

    // concave, so the minimum over [a, b] sits at an endpoint; lift the
    // whole function when the boundary dipped negative
    const Rational m = std::min(smoothed.eval(a), smoothed.eval(b));
    if (m < 0) {
        std::vector<Polynomial> lifted;
        lifted.reserve(cells.size());
        for (const auto& p : smoothed.pieces())
            lifted.push_back(p + Polynomial::constant(-m));
        smoothed = PiecewisePolynomial(smoothed.breakpoints(), std::move(lifted));
    }
    return make_pp_weight(std::move(smoothed));
}

std::vector<ConvergenceEntry> smoothing_convergence(const SmoothingSchedule& schedule) {
    if (schedule.levels < 1) throw ParameterError("schedule needs at least one level");
    const PiecewisePolynomial tgt = weight_as_pp(schedule.target);
    const Interval iv = schedule.target.interval();
    const double a = to_double(iv.a);
    const double len = to_double(iv.length());
    constexpr int kGrid = 4097;

    double lip = 0.0;
    for (const auto& p : tgt.pieces()) lip = std::max(lip, std::abs(to_double(p.coeff(1))));

    std::vector<ConvergenceEntry> out;
    for (int n = 1; n <= schedule.levels; ++n) {
        const WeightSpec wn = smooth_concave(schedule, n);
        const PiecewisePolynomial& spp = std::get<PiecewisePolynomialWeight>(wn.body).pp;
        double sup = 0.0;
        for (int i = 0; i < kGrid; ++i) {
            const double x = a + len * i / (kGrid - 1);
            sup = std::max(sup, std::abs(spp.eval(x) - tgt.eval(x)));
        }
        out.push_back({n, sup, lip * len / (kGrid - 1)});
    }
    return out;
}

}  // namespace hlkappa
