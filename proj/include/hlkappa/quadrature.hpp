#ifndef HLKAPPA_QUADRATURE_HPP_
#define HLKAPPA_QUADRATURE_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hlkappa/funcspace.hpp"

namespace hlkappa {

enum class QuadMode { Exact, Adaptive };

struct QuadratureResult {
    double value = 0.0;
    std::optional<Rational> exact;  // set in Exact mode
    double abs_error_estimate = 0.0;
    QuadMode mode = QuadMode::Adaptive;
    int subdivisions = 0;
};

// sum of antiderivative differences in rational arithmetic, no rounding
Rational integrate_poly_exact(const PiecewisePolynomial& p, const Interval& iv);

struct AdaptiveOptions {
    double tol = 1e-11;         // absolute
    int max_panels = 4000;
    std::vector<double> breakpoints;  // split here before refining
};

// panel-splitting Gauss-Legendre, 16 nodes per panel with a 32-node
// comparison for the error estimate; throws ConvergenceError (carrying the
// best estimate) if the panel budget runs out
QuadratureResult integrate_adaptive(const std::function<double(double)>& g, const Interval& iv,
                                    const AdaptiveOptions& opts = {});

// integrand factor: either an exact piecewise polynomial or a callable
// with declared breakpoints
struct Evaluable {
    std::function<double(double)> fn;
    std::vector<double> breakpoints;
    std::shared_ptr<const PiecewisePolynomial> pp;  // non-null when exactly representable

    static Evaluable from_pp(PiecewisePolynomial p);
    static Evaluable from_fn(std::function<double(double)> f, std::vector<double> brks = {});
};

// integral of w * u * v over iv; exact over the merged partition when all
// three factors are rational piecewise polynomials, adaptive otherwise
QuadratureResult weighted_product_integral(const WeightSpec& w, const Evaluable& u,
                                           const Evaluable& v, const Interval& iv,
                                           double tol = 1e-11);

// closed form for int p(x) sin(omega x + phi) dx over [lo, hi], by the
// recursive integration-by-parts identity; exact up to double roundoff.
// With omega = 0 this degenerates to the polynomial integral of p sin(phi).
double integral_poly_sin(const Polynomial& p, double omega, double phi, double lo, double hi);
double integral_poly_cos(const Polynomial& p, double omega, double phi, double lo, double hi);

// one trig factor: amp * trig(omega (x - origin)), sin or cos
struct TrigAtom {
    double amp;
    double omega;
    bool is_sin;  // false = cos
    double origin;
};

// int over [lo, hi] of p(x) * s * t, expanded by the product-to-sum identity
double integral_poly_trig_pair(const Polynomial& p, const TrigAtom& s, const TrigAtom& t,
                               double lo, double hi);

// int over the weight's span of w * s * t via the closed forms, summed piece
// by piece; the workhorse behind the trig path of compute_kappa
double weighted_trig_pair_integral(const PiecewisePolynomial& w, const TrigAtom& s,
                                   const TrigAtom& t);

}  // namespace hlkappa

#endif  // HLKAPPA_QUADRATURE_HPP_
