#ifndef HLKAPPA_FUNCSPACE_HPP_
#define HLKAPPA_FUNCSPACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hlkappa/interval.hpp"
#include "hlkappa/polynomial.hpp"

namespace hlkappa {

enum class BoundaryCondition {
    DirichletDirichlet,  // f(a) = f(b) = 0
    DirichletNeumann,    // f(a) = f'(b) = 0
    NeumannDirichlet,    // f'(a) = f(b) = 0
};

std::string bc_name(BoundaryCondition bc);

// ---------------------------------------------------------------------------
// piecewise polynomial on [breakpoints.front(), breakpoints.back()]

class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    // breakpoints strictly increasing, pieces.size() + 1 == breakpoints.size()
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    const std::vector<Rational>& breakpoints() const { return brk_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    Interval interval() const { return Interval(brk_.front(), brk_.back()); }

    // at interior breakpoints the left piece wins (documented convention);
    // quadrature integrates piece by piece and never evaluates there
    size_t piece_index(const Rational& x) const;
    size_t piece_index_d(double x) const;
    Rational eval(const Rational& x) const;
    double eval(double x) const;
    double eval_d1(double x) const;
    double eval_d2(double x) const;

    PiecewisePolynomial derivative() const;
    Rational integral() const;                                  // over the whole span
    Rational integral(const Rational& lo, const Rational& hi) const;

    PiecewisePolynomial operator+(const PiecewisePolynomial& o) const;  // merged partition
    PiecewisePolynomial operator*(const PiecewisePolynomial& o) const;
    PiecewisePolynomial scaled(const Rational& s) const;

    // restriction to [lo, hi] (must be inside the span)
    PiecewisePolynomial restrict(const Rational& lo, const Rational& hi) const;

    // highest k in {0, 1, 2} with value and first k derivatives matching
    // exactly across every interior junction; -1 if discontinuous
    int smoothness_class() const;

    std::vector<double> breakpoints_d() const { return brk_d_; }

private:
    // double evaluation runs in piece-local coordinates u = x - left
    // breakpoint: pieces cut from narrow cells (mollification, spline
    // knots) can carry huge cancelling global coefficients, while their
    // local form is conditioned like a Taylor expansion
    void build_tables();

    std::vector<Rational> brk_;
    std::vector<Polynomial> pieces_;
    std::vector<double> brk_d_;
    std::vector<std::vector<double>> loc0_, loc1_, loc2_;
};

// common partition of two breakpoint lists over the same span
std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b);

// ---------------------------------------------------------------------------
// test functions

// sum of lambda_n sin(n pi (x - a) / (b - a)); satisfies f(a) = f(b) = 0
// identically
struct SineCombination {
    Interval iv;
    std::vector<std::pair<Rational, int>> terms;  // (lambda, mode n >= 1)
};

// sum of lambda_j sin((2j - 1) pi (x - a) / (2 (b - a))); each term has
// f(a) = 0 and f'(b) = 0 identically (the corollary's boundary shape)
struct HalfSineCombination {
    Interval iv;
    std::vector<std::pair<Rational, int>> terms;  // (lambda, index j >= 1)
};

struct TestFunctionSpec {
    std::variant<SineCombination, HalfSineCombination, PiecewisePolynomial> body;
    BoundaryCondition bc = BoundaryCondition::DirichletDirichlet;

    Interval interval() const;
    bool is_trig() const { return body.index() != 2; }
};

struct Derivatives {
    double f;
    double f1;
    double f2;
};

// f(x), f'(x), f''(x); throws DomainError outside [a, b]
Derivatives eval_derivatives(const TestFunctionSpec& fn, double x);

// exact evaluation for piecewise-polynomial bodies
Rational eval_exact(const PiecewisePolynomial& pp, const Rational& x, int deriv_order);

struct AdmissibilityReport {
    bool pass;
    std::string first_violation;  // empty when pass
};

// checks the declared boundary condition (exact for trig bodies, rational
// for piecewise bodies) and C2 junction continuity of piecewise bodies
AdmissibilityReport check_admissible(const TestFunctionSpec& fn, const Interval& iv);

// ---------------------------------------------------------------------------
// weights

enum class Verdict { Certified, CertifiedNot, Unknown };

std::string verdict_name(Verdict v, const std::string& property);

struct ConstantWeight {
    Interval iv;
    Rational value;
};

struct PiecewiseLinearWeight {
    std::vector<Rational> breakpoints;
    std::vector<Rational> values;  // same length as breakpoints

    Rational slope(size_t piece) const {
        return (values[piece + 1] - values[piece]) / (breakpoints[piece + 1] - breakpoints[piece]);
    }
};

struct PolynomialWeight {
    Interval iv;
    Polynomial p;
};

struct PiecewisePolynomialWeight {
    PiecewisePolynomial pp;
};

struct WeightSpec {
    std::variant<ConstantWeight, PiecewiseLinearWeight, PolynomialWeight,
                 PiecewisePolynomialWeight>
        body;
    Verdict concavity = Verdict::Unknown;
    Verdict nonnegativity = Verdict::Unknown;

    Interval interval() const;
    double eval(double x) const;
};

struct ConcavityCheck {
    Verdict verdict;
    std::string certificate;  // offending slope pair / sign point when CertifiedNot
};

// exact certification: slope monotonicity for piecewise-linear bodies,
// Sturm nonpositivity of w'' for polynomial bodies; Unknown is a legal
// outcome only for bodies outside the certified families (none here, but
// the enum keeps the door shut against silently certifying sampled data)
ConcavityCheck check_concave(const WeightSpec& w);
ConcavityCheck check_nonnegative(const WeightSpec& w);
// w non-decreasing on its interval (the corollary's monotonicity hypothesis)
ConcavityCheck check_nondecreasing(const WeightSpec& w);

// constructors run the certifications so the stored verdicts are never stale
WeightSpec make_constant_weight(const Interval& iv, const Rational& value);
WeightSpec make_pl_weight(std::vector<Rational> breakpoints, std::vector<Rational> values);
WeightSpec make_poly_weight(const Interval& iv, Polynomial p);
WeightSpec make_pp_weight(PiecewisePolynomial pp);

// every weight body converts to a piecewise polynomial exactly
PiecewisePolynomial weight_as_pp(const WeightSpec& w);

// ---------------------------------------------------------------------------
// randomized generators (deterministic in seed)

struct WeightGenOptions {
    bool nondecreasing = false;  // keep all slopes >= 0 (corollary sweeps)
    // smallest gap between consecutive slopes; also bounds the safe
    // perturbation size in the equality suite
    Rational min_slope_gap = Rational(1, 16);
};

// piecewise-linear weight with strictly decreasing slopes, shifted so the
// minimum is 0 or a random positive offset; CertifiedConcave + nonnegative
// by construction
WeightSpec random_concave_weight(std::uint64_t seed, const Interval& iv, int pieces,
                                 const WeightGenOptions& opts = {});

// sine combination, modes 1..max_mode, coefficients in [-1, 1], not all zero
TestFunctionSpec random_admissible_function(std::uint64_t seed, const Interval& iv, int max_mode);

// half-sine combination for the corollary sweeps (f(a) = f'(b) = 0)
TestFunctionSpec random_halfsine_function(std::uint64_t seed, const Interval& iv, int max_mode);

}  // namespace hlkappa

#endif  // HLKAPPA_FUNCSPACE_HPP_
