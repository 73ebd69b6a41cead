#include "hlkappa/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "hlkappa/rng.hpp"

namespace hlkappa {

namespace {

// relative accuracy budget of one closed-form trig integral (double
// roundoff through the antiderivative sums, measured in the unit tests
// at well under 1e-13 for the scales exercised here)
constexpr double kTrigRelError = 5e-13;

// atoms of the deriv-th derivative of a trig body
std::vector<TrigAtom> trig_atoms(const TestFunctionSpec& f, int deriv) {
    const Interval iv = f.interval();
    const double a = to_double(iv.a);
    const double L = to_double(iv.length());
    std::vector<std::pair<Rational, int>> const* terms = nullptr;
    bool half = false;
    if (std::holds_alternative<SineCombination>(f.body)) {
        terms = &std::get<SineCombination>(f.body).terms;
    } else {
        terms = &std::get<HalfSineCombination>(f.body).terms;
        half = true;
    }
    std::vector<TrigAtom> out;
    out.reserve(terms->size());
    for (const auto& [lam, idx] : *terms) {
        const double k = half ? (2.0 * idx - 1.0) / 2.0 : static_cast<double>(idx);
        const double omega = k * std::numbers::pi / L;
        double amp = to_double(lam);
        bool is_sin = true;
        if (deriv == 1) {
            amp *= omega;
            is_sin = false;
        } else if (deriv == 2) {
            amp *= -omega * omega;
        }
        out.push_back({amp, omega, is_sin, a});
    }
    return out;
}

double trig_weighted(const PiecewisePolynomial& wpp, const std::vector<TrigAtom>& u,
                     const std::vector<TrigAtom>& v) {
    double total = 0.0;
    for (const auto& s : u)
        for (const auto& t : v) total += weighted_trig_pair_integral(wpp, s, t);
    return total;
}

// int over [lo, hi] of p * atom
double poly_single_trig(const Polynomial& p, const TrigAtom& s, double lo, double hi) {
    const double phi = -s.omega * s.origin;
    const double base = s.is_sin ? integral_poly_sin(p, s.omega, phi, lo, hi)
                                 : integral_poly_cos(p, s.omega, phi, lo, hi);
    return s.amp * base;
}

// int over the weight's span of w * (sum of atoms)
double weighted_single_trig(const PiecewisePolynomial& wpp, const std::vector<TrigAtom>& atoms) {
    double total = 0.0;
    const auto& brk = wpp.breakpoints();
    for (size_t i = 0; i + 1 < brk.size(); ++i) {
        const double lo = to_double(brk[i]);
        const double hi = to_double(brk[i + 1]);
        for (const auto& s : atoms) total += poly_single_trig(wpp.pieces()[i], s, lo, hi);
    }
    return total;
}

double plain_trig_integral(const std::vector<TrigAtom>& atoms, double lo, double hi) {
    const Polynomial one = Polynomial::constant(Rational(1));
    double total = 0.0;
    for (const auto& s : atoms) total += poly_single_trig(one, s, lo, hi);
    return total;
}

const PiecewisePolynomial& pp_body(const TestFunctionSpec& f) {
    return std::get<PiecewisePolynomial>(f.body);
}

void require_same_interval(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv) {
    if (!(w.interval() == iv))
        throw ParameterError("weight interval does not match the requested interval");
    if (!(f.interval() == iv))
        throw ParameterError("function interval does not match the requested interval");
}

void require_admissible(const TestFunctionSpec& f, const Interval& iv) {
    const AdmissibilityReport ar = check_admissible(f, iv);
    if (!ar.pass) throw HypothesisError("function not admissible: " + ar.first_violation);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void append_interval(std::ostringstream& os, const Interval& iv) {
    os << '[' << rat_to_string(iv.a) << ',' << rat_to_string(iv.b) << ']';
}

void append_pp(std::ostringstream& os, const PiecewisePolynomial& pp) {
    os << "pp;";
    for (const auto& b : pp.breakpoints()) os << rat_to_string(b) << ';';
    for (const auto& p : pp.pieces()) {
        for (const auto& c : p.coeffs()) os << rat_to_string(c) << ',';
        os << '|';
    }
}

}  // namespace

std::uint64_t weight_hash(const WeightSpec& w) {
    std::ostringstream os;
    if (const auto* cw = std::get_if<ConstantWeight>(&w.body)) {
        os << "const;";
        append_interval(os, cw->iv);
        os << rat_to_string(cw->value);
    } else if (const auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        os << "pl;";
        for (size_t i = 0; i < pl->breakpoints.size(); ++i)
            os << rat_to_string(pl->breakpoints[i]) << ':' << rat_to_string(pl->values[i]) << ';';
    } else if (const auto* pw = std::get_if<PolynomialWeight>(&w.body)) {
        os << "poly;";
        append_interval(os, pw->iv);
        for (const auto& c : pw->p.coeffs()) os << rat_to_string(c) << ',';
    } else {
        append_pp(os, std::get<PiecewisePolynomialWeight>(w.body).pp);
    }
    return fnv1a(os.str());
}

std::uint64_t function_hash(const TestFunctionSpec& f) {
    std::ostringstream os;
    os << bc_name(f.bc) << ';';
    if (const auto* sc = std::get_if<SineCombination>(&f.body)) {
        os << "sine;";
        append_interval(os, sc->iv);
        for (const auto& [lam, n] : sc->terms) os << n << ':' << rat_to_string(lam) << ';';
    } else if (const auto* hs = std::get_if<HalfSineCombination>(&f.body)) {
        os << "halfsine;";
        append_interval(os, hs->iv);
        for (const auto& [lam, j] : hs->terms) os << j << ':' << rat_to_string(lam) << ';';
    } else {
        append_pp(os, pp_body(f));
    }
    return fnv1a(os.str());
}

KappaReport compute_kappa(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                          const ComputeOptions& opts) {
    require_same_interval(w, f, iv);
    require_admissible(f, iv);
    if (w.nonnegativity == Verdict::CertifiedNot)
        throw HypothesisError("weight is certified negative somewhere on the interval");

    KappaReport rep;
    if (!f.is_trig()) {
        // exact route: every integrand is a rational piecewise polynomial
        const PiecewisePolynomial wpp = weight_as_pp(w);
        const PiecewisePolynomial& f0 = pp_body(f);
        const PiecewisePolynomial f1 = f0.derivative();
        const PiecewisePolynomial f2 = f1.derivative();
        const Rational I0 = (wpp * f0 * f0).integral();
        const Rational I1 = (wpp * f1 * f1).integral();
        const Rational I2 = (wpp * f2 * f2).integral();
        if (I0 == 0 || I2 == 0)
            throw DegenerateError("I0 * I2 vanishes (weight or function effectively zero)");
        rep.I0_exact = I0;
        rep.I1_exact = I1;
        rep.I2_exact = I2;
        rep.kappa_exact = (I1 * I1) / (I0 * I2);
        rep.I0 = to_double(I0);
        rep.I1 = to_double(I1);
        rep.I2 = to_double(I2);
        rep.kappa = to_double(*rep.kappa_exact);
        rep.mode = QuadMode::Exact;
        rep.error_bound = 0.0;
        return rep;
    }

    if (opts.force_exact)
        throw ModeError("exact mode needs a piecewise-polynomial function body");

    // closed-form route: each integral is a finite sum of poly * trig
    // antiderivative differences, so the only error is double roundoff
    const PiecewisePolynomial wpp = weight_as_pp(w);
    const auto a0 = trig_atoms(f, 0);
    const auto a1 = trig_atoms(f, 1);
    const auto a2 = trig_atoms(f, 2);
    rep.I0 = trig_weighted(wpp, a0, a0);
    rep.I1 = trig_weighted(wpp, a1, a1);
    rep.I2 = trig_weighted(wpp, a2, a2);
    if (rep.I0 <= 0.0 || rep.I2 <= 0.0)
        throw DegenerateError("I0 * I2 vanishes (weight or function effectively zero)");
    rep.kappa = (rep.I1 * rep.I1) / (rep.I0 * rep.I2);
    rep.mode = QuadMode::Adaptive;
    rep.error_bound = rep.kappa * 4.0 * kTrigRelError;
    return rep;
}

TheoremVerdict verify_theorem(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                              std::optional<double> slack, const ComputeOptions& opts) {
    if (w.concavity != Verdict::Certified)
        throw HypothesisError("weight concavity is " +
                              verdict_name(w.concavity, "concave") +
                              "; the inequality is only asserted for certified weights");
    if (w.nonnegativity != Verdict::Certified)
        throw HypothesisError("weight nonnegativity is " +
                              verdict_name(w.nonnegativity, "nonnegative"));
    if (f.bc != BoundaryCondition::DirichletDirichlet)
        throw HypothesisError("theorem check needs f(a) = f(b) = 0 boundary conditions");

    const KappaReport rep = compute_kappa(w, f, iv, opts);
    TheoremVerdict v;
    v.report = rep;
    if (rep.kappa_exact) {
        v.slack = slack.value_or(0.0);
        v.pass = *rep.kappa_exact <= Rational(1) + Rational(v.slack);
    } else {
        v.slack = slack.value_or(std::max(1e-9, 10.0 * rep.error_bound));
        v.pass = rep.kappa <= 1.0 + v.slack;
    }
    return v;
}

EqualityCase make_equality_case(const Interval& iv, int n, const Rational& lambda,
                                const std::vector<Rational>& node_values) {
    if (n < 1) throw ParameterError("mode index n must be at least 1");
    if (lambda == 0) throw DegenerateError("lambda = 0 makes the test function vanish");
    if (node_values.size() != static_cast<size_t>(n) + 1)
        throw ParameterError("need n + 1 node values on the subinterval grid");
    bool all_zero = true;
    for (const auto& v : node_values) {
        if (v < 0) throw HypothesisError("node values must be nonnegative");
        if (v != 0) all_zero = false;
    }
    if (all_zero) throw DegenerateError("all node values zero: weight vanishes identically");

    const Rational h = iv.length() / n;
    std::vector<Rational> grid(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) grid[static_cast<size_t>(k)] = iv.a + h * k;

    for (int k = 0; k + 1 < n; ++k) {
        const Rational m0 = (node_values[k + 1] - node_values[k]) / h;
        const Rational m1 = (node_values[k + 2] - node_values[k + 1]) / h;
        if (m0 < m1) {
            std::ostringstream os;
            os << "slopes increase across the grid node at " << rat_to_string(grid[k + 1]);
            throw HypothesisError(os.str());
        }
    }

    EqualityCase ec;
    ec.iv = iv;
    ec.n = n;
    ec.lambda = lambda;
    ec.weight = make_pl_weight(grid, node_values);
    ec.function.body = SineCombination{iv, {{lambda, n}}};
    ec.function.bc = BoundaryCondition::DirichletDirichlet;
    return ec;
}

EqualityExact equality_kappa_exact(const EqualityCase& ec) {
    // On each grid cell the phase 2 n pi (x - a)/L runs through a full
    // period starting at a multiple of 2 pi, so the cos(2 theta) moment of
    // a linear piece is (slope / omega^2)(cos(top) - cos(bottom)) = 0
    // exactly. What survives of each squared integrand is its mean:
    //   I0 = lambda^2 S / 2,  I1 = I0 (n pi / L)^2,  I2 = I0 (n pi / L)^4,
    // with S = int w, all rational apart from the explicit pi powers.
    const PiecewisePolynomial wpp = weight_as_pp(ec.weight);
    const Rational S = wpp.integral();
    if (S == 0) throw DegenerateError("weight integrates to zero");
    const Rational L = ec.iv.length();
    const Rational base = ec.lambda * ec.lambda * S / 2;
    const Rational n2 = Rational(ec.n) * ec.n;

    EqualityExact out;
    out.half_mass = S / 2;
    out.I0 = PiScaled{base, 0};
    out.I1 = PiScaled{base * n2 / (L * L), 2};
    out.I2 = PiScaled{base * n2 * n2 / (L * L * L * L), 4};
    const PiScaled q = (out.I1 * out.I1) / (out.I0 * out.I2);
    if (q.pi_exp != 0) throw std::logic_error("pi powers failed to cancel in kappa");
    out.kappa = q.r;
    return out;
}

WeightSpec perturb_equality_weight(const EqualityCase& ec, int k, std::optional<Rational> eps) {
    const auto& pl = std::get<PiecewiseLinearWeight>(ec.weight.body);
    const int n = ec.n;
    if (k < 0 || k >= n) throw ParameterError("segment index out of range");

    const Rational mk = pl.slope(static_cast<size_t>(k));
    std::optional<Rational> cap;  // largest eps keeping the slope sequence non-increasing
    if (k > 0) cap = pl.slope(static_cast<size_t>(k) - 1) - mk;
    if (k + 1 < n) {
        const Rational gap = mk - pl.slope(static_cast<size_t>(k) + 1);
        cap = cap ? std::min(*cap, gap) : gap;
    }

    Rational e;
    if (eps) {
        e = *eps;
        if (e <= 0) throw ParameterError("perturbation size must be positive");
        if (cap && e > *cap)
            throw ParameterError("perturbation would break concavity against a neighbor slope");
    } else if (cap) {
        if (*cap == 0)
            throw ParameterError(
                "adjacent slopes are equal; no concavity-preserving perturbation exists here");
        e = *cap / 4;
    } else {
        e = Rational(1, 4);  // n = 1: no neighbor constraints
    }

    const Rational lo = pl.breakpoints[static_cast<size_t>(k)];
    const Rational hi = pl.breakpoints[static_cast<size_t>(k) + 1];
    const Rational mid = (lo + hi) / 2;

    std::vector<Rational> brk, val;
    for (size_t i = 0; i < pl.breakpoints.size(); ++i) {
        brk.push_back(pl.breakpoints[i]);
        val.push_back(pl.values[i]);
        if (static_cast<int>(i) == k) {
            brk.push_back(mid);
            // raised midpoint: slope mk + e then mk - e, same endpoints
            val.push_back(pl.values[i] + (mk + e) * (mid - lo));
        }
    }
    WeightSpec out = make_pl_weight(brk, val);
    if (out.concavity != Verdict::Certified)
        throw std::logic_error("perturbed weight lost its concavity certificate");
    return out;
}

Reflection reflect_even(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv) {
    require_same_interval(w, f, iv);
    if (f.bc != BoundaryCondition::DirichletNeumann)
        throw HypothesisError("even reflection needs f(a) = 0 and f'(b) = 0");
    require_admissible(f, iv);
    if (w.concavity != Verdict::Certified)
        throw HypothesisError("weight concavity is " + verdict_name(w.concavity, "concave"));
    if (w.nonnegativity != Verdict::Certified)
        throw HypothesisError("weight nonnegativity is " +
                              verdict_name(w.nonnegativity, "nonnegative"));
    const ConcavityCheck mono = check_nondecreasing(w);
    if (mono.verdict != Verdict::Certified)
        throw HypothesisError(
            "weight is not non-decreasing (" + mono.certificate +
            "); its even reflection would fail concavity at the fold");

    const Interval ext(iv.a, 2 * iv.b - iv.a);

    // mirror a piecewise polynomial about x = b
    const auto mirror_pp = [&](const PiecewisePolynomial& pp) {
        std::vector<Rational> brk = pp.breakpoints();
        std::vector<Polynomial> pcs = pp.pieces();
        const Rational two_b = 2 * iv.b;
        for (size_t i = pp.breakpoints().size() - 1; i-- > 0;)
            brk.push_back(two_b - pp.breakpoints()[i]);
        for (size_t i = pp.pieces().size(); i-- > 0;)
            pcs.push_back(pp.pieces()[i].compose_affine(two_b, Rational(-1)));
        return PiecewisePolynomial(std::move(brk), std::move(pcs));
    };

    Reflection out;
    out.iv = ext;

    if (const auto* cw = std::get_if<ConstantWeight>(&w.body)) {
        out.weight = make_constant_weight(ext, cw->value);
    } else if (const auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        std::vector<Rational> brk = pl->breakpoints;
        std::vector<Rational> val = pl->values;
        const Rational two_b = 2 * iv.b;
        for (size_t i = pl->breakpoints.size() - 1; i-- > 0;) {
            brk.push_back(two_b - pl->breakpoints[i]);
            val.push_back(pl->values[i]);
        }
        out.weight = make_pl_weight(brk, val);
    } else if (const auto* pw = std::get_if<PolynomialWeight>(&w.body)) {
        PiecewisePolynomial half({iv.a, iv.b}, {pw->p});
        out.weight = make_pp_weight(mirror_pp(half));
    } else {
        out.weight = make_pp_weight(mirror_pp(std::get<PiecewisePolynomialWeight>(w.body).pp));
    }

    if (const auto* hs = std::get_if<HalfSineCombination>(&f.body)) {
        // sin((2j-1) pi (x-a) / (2L)) continues evenly past b as the full
        // sine of mode 2j-1 on the doubled interval
        SineCombination sc;
        sc.iv = ext;
        for (const auto& [lam, j] : hs->terms) sc.terms.emplace_back(lam, 2 * j - 1);
        out.function.body = std::move(sc);
    } else {
        out.function.body = mirror_pp(pp_body(f));
    }
    out.function.bc = BoundaryCondition::DirichletDirichlet;

    if (out.weight.concavity != Verdict::Certified)
        throw std::logic_error("reflected weight lost its concavity certificate");
    const AdmissibilityReport ar = check_admissible(out.function, ext);
    if (!ar.pass)
        throw std::logic_error("reflected function inadmissible: " + ar.first_violation);
    return out;
}

double parts_identity_residual(const WeightSpec& w, const TestFunctionSpec& f,
                               const Interval& iv) {
    require_same_interval(w, f, iv);
    if (f.bc != BoundaryCondition::DirichletDirichlet)
        throw HypothesisError("the identity needs f(a) = f(b) = 0");
    require_admissible(f, iv);
    if (std::holds_alternative<PiecewiseLinearWeight>(w.body))
        throw ModeError(
            "piecewise-linear weight: w'' is a measure, use lemma4_residual instead");
    if (const auto* ppw = std::get_if<PiecewisePolynomialWeight>(&w.body)) {
        if (ppw->pp.smoothness_class() < 2)
            throw ModeError("weight body is not C2 across its junctions");
    }

    const PiecewisePolynomial wpp = weight_as_pp(w);
    const PiecewisePolynomial w2 = wpp.derivative().derivative();

    if (!f.is_trig()) {
        const PiecewisePolynomial& f0 = pp_body(f);
        const PiecewisePolynomial f1 = f0.derivative();
        const PiecewisePolynomial f2 = f1.derivative();
        const Rational lhs = (w2 * f0 * f0).integral();
        const Rational rhs = 2 * ((wpp * f0 * f2).integral() + (wpp * f1 * f1).integral());
        return std::abs(to_double(lhs - rhs));
    }
    const auto a0 = trig_atoms(f, 0);
    const auto a1 = trig_atoms(f, 1);
    const auto a2 = trig_atoms(f, 2);
    const double lhs = trig_weighted(w2, a0, a0);
    const double rhs = 2.0 * (trig_weighted(wpp, a0, a2) + trig_weighted(wpp, a1, a1));
    return std::abs(lhs - rhs);
}

double lemma4_residual(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv) {
    require_same_interval(w, f, iv);
    if (f.bc != BoundaryCondition::DirichletDirichlet)
        throw HypothesisError("the lemma needs f(a) = f(b) = 0");
    require_admissible(f, iv);
    if (!std::holds_alternative<PiecewiseLinearWeight>(w.body) &&
        !std::holds_alternative<ConstantWeight>(w.body))
        throw ModeError("the one-sided-derivative identity is stated for piecewise-linear w");

    const PiecewisePolynomial wpp = weight_as_pp(w);
    const auto& brk = wpp.breakpoints();

    if (!f.is_trig()) {
        const PiecewisePolynomial& f0 = pp_body(f);
        const Rational lhs = (wpp * f0.derivative()).integral();
        Rational rhs = 0;
        for (size_t i = 0; i + 1 < brk.size(); ++i) {
            const Rational slope = wpp.pieces()[i].coeff(1);
            rhs -= slope * f0.integral(brk[i], brk[i + 1]);
        }
        return std::abs(to_double(lhs - rhs));
    }
    const auto a0 = trig_atoms(f, 0);
    const auto a1 = trig_atoms(f, 1);
    const double lhs = weighted_single_trig(wpp, a1);
    double rhs = 0.0;
    for (size_t i = 0; i + 1 < brk.size(); ++i) {
        const double slope = to_double(wpp.pieces()[i].coeff(1));
        rhs -= slope * plain_trig_integral(a0, to_double(brk[i]), to_double(brk[i + 1]));
    }
    return std::abs(lhs - rhs);
}

EpsilonEquivalence epsilon_equivalence_check(double A, double B, double C,
                                             const std::vector<double>& eps_grid) {
    if (!(A > 0.0) || !(B > 0.0) || !(C > 0.0))
        throw ParameterError("A, B, C must all be positive");
    for (double e : eps_grid)
        if (!(e > 0.0)) throw ParameterError("every grid epsilon must be positive");

    // doubles are dyadic, so these conversions are exact and every verdict
    // below is a theorem about the given numbers, not about rounded ones
    const Rational ra(A), rb(B), rc(C);
    EpsilonEquivalence out;
    out.b2_le_ac = rb * rb <= ra * rc;

    bool all_hold = true;
    const auto check_at = [&](const Rational& re) {
        const bool holds = rb <= re * ra + rc / (4 * re);
        all_hold = all_hold && holds;
        return holds;
    };
    for (double e : eps_grid) {
        const Rational re(e);
        out.grid_results.emplace_back(e, check_at(re));
    }
    const Rational estar = rb / (2 * ra);  // minimizer of eps A + C/(4 eps)
    out.grid_results.emplace_back(to_double(estar), check_at(estar));
    out.consistent = (out.b2_le_ac == all_hold);
    return out;
}

double middle_integral(const WeightSpec& w, const TestFunctionSpec& f, const Interval& iv,
                       double tol) {
    (void)tol;  // both routes below are closed-form
    require_same_interval(w, f, iv);
    const PiecewisePolynomial wpp = weight_as_pp(w);
    if (!f.is_trig()) {
        const PiecewisePolynomial& f0 = pp_body(f);
        return -to_double((wpp * f0 * f0.derivative().derivative()).integral());
    }
    return -trig_weighted(wpp, trig_atoms(f, 0), trig_atoms(f, 2));
}

SweepReport sweep(std::uint64_t seed, int count, const Interval& iv, const SweepOptions& opts) {
    if (count < 1) throw ParameterError("sweep count must be at least 1");
    if (opts.pieces_min < 1 || opts.pieces_max < opts.pieces_min)
        throw ParameterError("piece-count range is empty");

    SweepReport rep;
    rep.count = count;
    rep.entries.reserve(static_cast<size_t>(count));

    for (int i = 0; i < count; ++i) {
        const std::uint64_t wseed = mix_seed(seed, 2 * static_cast<std::uint64_t>(i));
        const std::uint64_t fseed = mix_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1);

        Rng pick(mix_seed(wseed, 1));
        const int pieces =
            static_cast<int>(pick.uniform_int(opts.pieces_min, opts.pieces_max));
        const WeightSpec w = random_concave_weight(mix_seed(wseed, 2), iv, pieces);
        const TestFunctionSpec f = random_admissible_function(mix_seed(fseed, 3), iv,
                                                              opts.max_mode);

        const TheoremVerdict v = verify_theorem(w, f, iv);
        const double M = middle_integral(w, f, iv);

        SweepEntry e;
        e.index = i;
        e.kappa = v.report.kappa;
        e.I0 = v.report.I0;
        e.I1 = v.report.I1;
        e.I2 = v.report.I2;
        e.pass = v.pass;
        const double ctol =
            opts.chain_tol * std::max({1.0, std::abs(e.I1), std::abs(M)});
        e.chain_ok = (e.I1 <= M + ctol) && (M <= std::sqrt(e.I0 * e.I2) + ctol);
        e.weight_seed = wseed;
        e.function_seed = fseed;
        e.weight_hash = weight_hash(w);
        e.function_hash = function_hash(f);

        if (!e.pass) ++rep.failures;
        rep.max_kappa = std::max(rep.max_kappa, e.kappa);
        rep.entries.push_back(e);
    }

    std::vector<int> order(rep.entries.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const double dx = std::abs(rep.entries[static_cast<size_t>(x)].kappa - 1.0);
        const double dy = std::abs(rep.entries[static_cast<size_t>(y)].kappa - 1.0);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    const size_t keep = std::min<size_t>(10, order.size());
    rep.closest_to_one.assign(order.begin(), order.begin() + static_cast<long>(keep));
    return rep;
}

}  // namespace hlkappa
