#ifndef HLKAPPA_KAPPA_HPP_
#define HLKAPPA_KAPPA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hlkappa/quadrature.hpp"

namespace hlkappa {

// I0 = int w f^2, I1 = int w f'^2, I2 = int w f''^2, kappa = I1^2/(I0 I2)
struct KappaReport {
    double I0 = 0, I1 = 0, I2 = 0;
    std::optional<Rational> I0_exact, I1_exact, I2_exact;  // set in exact mode
    double kappa = 0;
    std::optional<Rational> kappa_exact;
    QuadMode mode = QuadMode::Adaptive;
    double error_bound = 0;  // propagated relative bound on kappa
};

struct ComputeOptions {
    double tol = 1e-11;        // per-integral absolute tolerance (adaptive path)
    bool force_exact = false;  // ModeError when the exact route is unavailable
};

// All three integrals through weighted_product_integral (or the analytic
// trig route for sine bodies, which is exact up to double roundoff).
// Exact rationals are preserved when weight and function are both rational
// piecewise polynomials. Degenerate inputs (I0 * I2 = 0) throw.
KappaReport compute_kappa(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                          const ComputeOptions& opts = {});

struct TheoremVerdict {
    bool pass;
    KappaReport report;
    double slack;  // max(1e-9, 10x propagated error), 0 in exact mode
};

// kappa <= 1 + slack for certified-concave nonnegative w and
// Dirichlet-Dirichlet f; refuses uncertified weights
TheoremVerdict verify_theorem(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                              std::optional<double> slack = std::nullopt,
                              const ComputeOptions& opts = {});

// ---------------------------------------------------------------------------
// equality cases: f = lambda sin(n pi (x - a)/(b - a)), w piecewise linear
// with breakpoints on the n-subinterval grid

struct EqualityCase {
    Interval iv;
    int n;
    Rational lambda;
    WeightSpec weight;
    TestFunctionSpec function;
};

// node_values: n+1 nonnegative values on the grid a + k (b - a)/n whose
// interpolant has non-increasing slopes
EqualityCase make_equality_case(const Interval& iv, int n, const Rational& lambda,
                                const std::vector<Rational>& node_values);

// kappa on an equality case as an exact rational (literally 1): each
// integral is rational * pi^(2k) because the cos(2 theta) moments cancel
// exactly at the grid boundaries; the pi powers divide out
struct EqualityExact {
    Rational kappa;     // always 1
    Rational half_mass; // int w / 2, the shared rational factor
    PiScaled I0, I1, I2;
};
EqualityExact equality_kappa_exact(const EqualityCase& ec);

// Break linearity on subinterval k (0-based) while keeping concavity,
// continuity and nonnegativity: the slope on J_k splits into
// (m_k + eps, m_k - eps) around the midpoint. eps picked automatically
// from the neighboring slope gaps unless given.
WeightSpec perturb_equality_weight(const EqualityCase& ec, int k,
                                   std::optional<Rational> eps = std::nullopt);

// ---------------------------------------------------------------------------
// corollary path

struct Reflection {
    WeightSpec weight;
    TestFunctionSpec function;
    Interval iv;
};

// even extension about x = b: w(b + s) = w(b - s), f(b + s) = f(b - s);
// requires f(a) = f'(b) = 0 and w concave, nonnegative, non-decreasing.
// Half-sine bodies map symbolically to full sines with modes 2j - 1.
Reflection reflect_even(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv);

// ---------------------------------------------------------------------------
// proof-identity checks

// |int w'' f^2 - 2 int w (f f'' + f'^2)|, vanishes for C2 w and f(a)=f(b)=0;
// piecewise-linear w is rejected (w'' is distributional there)
double parts_identity_residual(const WeightSpec& w, const TestFunctionSpec& f,
                               const Interval& iv);

// |int w f' + int w_-' f| for piecewise-linear w and C1 f with f(a)=f(b)=0
double lemma4_residual(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv);

// B^2 <= AC against B <= eps A + C/(4 eps) on a grid; exact rational
// arithmetic internally, so the equivalence at eps* = B/(2A) is provable
struct EpsilonEquivalence {
    bool b2_le_ac;
    std::vector<std::pair<double, bool>> grid_results;
    bool consistent;  // grid verdicts (with eps* appended) match b2_le_ac
};
EpsilonEquivalence epsilon_equivalence_check(double A, double B, double C,
                                             const std::vector<double>& eps_grid);

// middle quantity of the proof chain: -int w f f''
double middle_integral(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                       double tol = 1e-11);

// ---------------------------------------------------------------------------
// randomized sweep

struct SweepEntry {
    int index;
    double kappa;
    double I0, I1, I2;
    bool pass;
    bool chain_ok;  // I1 <= -int w f f'' <= sqrt(I0 I2), within tolerance
    std::uint64_t weight_seed;
    std::uint64_t function_seed;
    std::uint64_t weight_hash;    // FNV-1a of the canonical serialization
    std::uint64_t function_hash;
};

// FNV-1a over a canonical text form (kind tags plus exact rationals), so
// equal specs hash equal across runs and platforms
std::uint64_t weight_hash(const WeightSpec& w);
std::uint64_t function_hash(const TestFunctionSpec& f);

struct SweepReport {
    int count = 0;
    int failures = 0;
    double max_kappa = 0;
    std::vector<SweepEntry> entries;        // all, in generation order
    std::vector<int> closest_to_one;        // indices of the 10 nearest kappa = 1
};

struct SweepOptions {
    int pieces_min = 2;
    int pieces_max = 6;
    int max_mode = 6;
    double chain_tol = 1e-9;
};

SweepReport sweep(std::uint64_t seed, int count, const Interval& iv,
                  const SweepOptions& opts = {});

}  // namespace hlkappa

#endif  // HLKAPPA_KAPPA_HPP_
