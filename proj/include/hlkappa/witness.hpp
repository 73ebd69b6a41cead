#ifndef HLKAPPA_WITNESS_HPP_
#define HLKAPPA_WITNESS_HPP_

#include <array>
#include <vector>

#include "hlkappa/kappa.hpp"

namespace hlkappa {

// The convex-weight counterexample family: against w = x^4 on [0, 1],
// the three-piece function (linear ramp, quintic bridge, linear descent)
//
//   f = x / delta on [0, delta],
//   f = quintic on [delta, 2 delta],
//   f = (1 - x) / (1 - 2 delta) on [2 delta, 1]
//
// is C2 with f(0) = f(1) = 0 and drives kappa to infinity as delta -> 0,
// so no constant works once concavity is dropped.

// w = x^4 on [0, 1]: nonnegative, certified NOT concave
WeightSpec quartic_weight();

// solves the six Hermite conditions at delta and 2 delta exactly
// (values 1, 1; slopes 1/delta, -1/(1 - 2 delta); curvatures 0, 0)
TestFunctionSpec build_witness(const Rational& delta);

// the published closed forms for a0..a5, evaluated exactly; an independent
// check against the linear solve, never the primary source
std::array<Rational, 6> closed_form_coefficients(const Rational& delta);

// the published closed form for kappa(delta), exactly:
//   (3003 + 14474 d^3 - 53525 d^4 - 12344 d^5)^2
//   / [ 26 d (858 + 72450 d^5 - 531793 d^6 + 674178 d^7)
//       (2042 - 11999 d + 20182 d^2) ]
Rational kappa_closed_form(const Rational& delta);

// lim of delta * kappa(delta) as delta -> 0: 3003^2/(26*858*2042) = 1617/8168
Rational kappa_limit_constant();

struct WitnessResult {
    Rational delta;
    std::array<Rational, 6> coefficients;  // from the linear solve
    Rational kappa_exact;                  // end-to-end exact quadrature
    Rational kappa_closed;                 // closed form at the same delta
    bool match;                            // exact rational equality
    Rational delta_times_kappa;
};

std::vector<WitnessResult> witness_study(const std::vector<Rational>& deltas);

// default study grid {2/5, 1/4, 1/10, 1/20, 1/100, 1/1000}
std::vector<Rational> default_witness_deltas();

// w = 1 - x against f = sin(pi x / 2) on [0, 1] (Dirichlet-Neumann):
// kappa = ((pi^2 + 4)/(pi^2 - 4))^2, about 5.5835, showing the
// monotonicity hypothesis of the corollary cannot be dropped
KappaReport monotonicity_example();

}  // namespace hlkappa

#endif  // HLKAPPA_WITNESS_HPP_
