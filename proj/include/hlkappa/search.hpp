#ifndef HLKAPPA_SEARCH_HPP_
#define HLKAPPA_SEARCH_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hlkappa/funcspace.hpp"

namespace hlkappa {

// Galerkin search for sup_f kappa(w, f) over a C2 cubic spline space with
// Dirichlet ends. For concave weights the continuum bound caps the
// discrete maximum at 1; for w = x^4 it grows without bound under
// refinement, matching the witness family's divergence.

// (A_k)_{ij} = int w phi_i^(k) phi_j^(k), k = 0, 1, 2. The basis holds the
// m retained clamped cubic B-splines on a uniform knot grid (the first and
// last of the m + 2 are dropped to pin f(a) = f(b) = 0), so every basis
// function is C2 and the assembly integrands are exact piecewise
// polynomials.
struct QuadraticForms {
    Interval iv{Rational(0), Rational(1)};
    int m = 0;
    std::vector<PiecewisePolynomial> basis;  // size m
    Eigen::MatrixXd A0, A1, A2;
    Eigen::MatrixXd mass;  // unweighted int phi_i phi_j, for projections
};

// m >= 4; exact rational assembly, banded (supports overlap iff |i-j| <= 3)
QuadraticForms assemble_forms(const WeightSpec& w, const Interval& iv, int m);

double kappa_of(const QuadraticForms& forms, const Eigen::VectorXd& c);

struct SearchOptions {
    int max_iter = 5000;
    double grad_tol = 1e-8;
    double armijo = 1e-4;      // sufficient-increase constant
    double backtrack = 0.5;    // step-halving factor
    double perturb = 0.1;      // relative size of the seeded start offset
    std::optional<Eigen::VectorXd> init;  // overrides the default start
};

struct SearchResult {
    double best_kappa = 0;
    Eigen::VectorXd best_coefficients;
    int iterations = 0;
    bool converged = false;
    double gradient_norm_final = 0;
};

// Ascent on log kappa(c) = 2 log(c'A1c) - log(c'A0c) - log(c'A2c):
// gradient 4A1c/s1 - 2A0c/s0 - 2A2c/s2, direction from a damped Newton
// solve against the exact Hessian (Tikhonov shift escalated until the
// LDLT factorization is positive), Armijo backtracking, iterates kept on
// c'A0c = 1, with a gradient-norm polish once the objective increments
// fall below double resolution. Default start: L2 projection of the first
// sine mode plus a seeded smooth perturbation (projected modes 2..4). A
// degenerate iterate restarts from a fresh start; repeated failure raises
// ConvergenceError.
SearchResult maximize_kappa(const QuadraticForms& forms, std::uint64_t seed,
                            const SearchOptions& opts = {});

// max_i |analytic - central difference| / max(||analytic||_inf, 1e-12)
double gradient_check(const QuadraticForms& forms, const Eigen::VectorXd& c, double h);

// L2 projections onto the spline space (mass-matrix solves)
Eigen::VectorXd project_sine(const QuadraticForms& forms, int mode);
Eigen::VectorXd project_pp(const QuadraticForms& forms, const PiecewisePolynomial& g);

// sum c_i phi_i as an exact piecewise polynomial (doubles are dyadic)
PiecewisePolynomial spline_combination(const QuadraticForms& forms, const Eigen::VectorXd& c);

double evaluate_spline(const QuadraticForms& forms, const Eigen::VectorXd& c, double x);

// normalized L2 inner product against a reference, on a 1025-point grid
double correlation(const QuadraticForms& forms, const Eigen::VectorXd& c,
                   const std::function<double(double)>& ref);

}  // namespace hlkappa

#endif  // HLKAPPA_SEARCH_HPP_
