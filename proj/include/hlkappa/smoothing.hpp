#ifndef HLKAPPA_SMOOTHING_HPP_
#define HLKAPPA_SMOOTHING_HPP_

#include <vector>

#include "hlkappa/funcspace.hpp"

namespace hlkappa {

// C2 concave nonnegative approximants of a piecewise-linear concave
// weight, by mollification against a polynomial bump of shrinking width.

struct SmoothingSchedule {
    WeightSpec target;  // piecewise-linear (or constant), certified concave and nonnegative
    int levels = 1;

    // kernel half-width at level n: (b - a) / (8 * 2^n)
    Rational halfwidth(int n) const;
};

// Level-n smoothing: extend the target linearly past both endpoints by its
// one-sided boundary slopes, convolve with the bump
//     rho_h(t) = 35 / (32 h^7) * (h^2 - t^2)^3  on [-h, h]
// (the minimal-degree even polynomial that is C2 at the support ends with
// unit mass), and shift up by -min if the result dips below zero at an
// endpoint. Everything stays in rational arithmetic, so the result is a
// certified piecewise-polynomial weight of degree at most 8.
WeightSpec smooth_concave(const SmoothingSchedule& schedule, int n);

struct ConvergenceEntry {
    int level;
    double sup_distance;      // on a 4097-point uniform grid
    double grid_error_bound;  // Lipschitz bound on what the grid can miss
};

std::vector<ConvergenceEntry> smoothing_convergence(const SmoothingSchedule& schedule);

}  // namespace hlkappa

#endif  // HLKAPPA_SMOOTHING_HPP_
