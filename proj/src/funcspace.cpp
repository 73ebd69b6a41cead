#include "hlkappa/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hlkappa/rng.hpp"

namespace hlkappa {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string bc_name(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::DirichletDirichlet: return "dirichlet_dirichlet";
        case BoundaryCondition::DirichletNeumann: return "dirichlet_neumann";
        case BoundaryCondition::NeumannDirichlet: return "neumann_dirichlet";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// PiecewisePolynomial

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces)
    : brk_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (brk_.size() < 2 || pieces_.size() + 1 != brk_.size())
        throw ParameterError("piecewise polynomial: need k+1 breakpoints for k pieces");
    for (size_t i = 0; i + 1 < brk_.size(); ++i)
        if (!(brk_[i] < brk_[i + 1]))
            throw ParameterError("piecewise polynomial: breakpoints must increase strictly");
    build_tables();
}

void PiecewisePolynomial::build_tables() {
    brk_d_.resize(brk_.size());
    for (size_t i = 0; i < brk_.size(); ++i) brk_d_[i] = to_double(brk_[i]);
    loc0_.resize(pieces_.size());
    loc1_.resize(pieces_.size());
    loc2_.resize(pieces_.size());
    for (size_t s = 0; s < pieces_.size(); ++s) {
        const Polynomial q = pieces_[s].compose_affine(brk_[s], Rational(1));
        const auto& c = q.coeffs();
        auto& c0 = loc0_[s];
        c0.resize(c.size());
        for (size_t k = 0; k < c.size(); ++k) c0[k] = to_double(c[k]);
        auto& c1 = loc1_[s];
        c1.resize(c0.empty() ? 0 : c0.size() - 1);
        for (size_t k = 1; k < c0.size(); ++k) c1[k - 1] = static_cast<double>(k) * c0[k];
        auto& c2 = loc2_[s];
        c2.resize(c1.empty() ? 0 : c1.size() - 1);
        for (size_t k = 1; k < c1.size(); ++k) c2[k - 1] = static_cast<double>(k) * c1[k];
    }
}

namespace {
double horner(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
    return acc;
}
}  // namespace

size_t PiecewisePolynomial::piece_index(const Rational& x) const {
    if (x < brk_.front() || x > brk_.back())
        throw DomainError("evaluation outside the function's interval");
    if (x == brk_.front()) return 0;
    // left piece at interior breakpoints: largest i with brk[i] < x
    size_t lo = 0, hi = brk_.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (brk_[mid] < x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Rational PiecewisePolynomial::eval(const Rational& x) const {
    return pieces_[piece_index(x)].eval(x);
}

// numeric path: clamp instead of throwing, so quadrature nodes produced
// from rounded breakpoints cannot fall off the span by one ulp
size_t PiecewisePolynomial::piece_index_d(double x) const {
    Rational rx(x);
    if (rx <= brk_.front()) return 0;
    if (rx >= brk_.back()) return pieces_.size() - 1;
    return piece_index(rx);
}

double PiecewisePolynomial::eval(double x) const {
    const size_t s = piece_index_d(x);
    return horner(loc0_[s], x - brk_d_[s]);
}

double PiecewisePolynomial::eval_d1(double x) const {
    const size_t s = piece_index_d(x);
    return horner(loc1_[s], x - brk_d_[s]);
}

double PiecewisePolynomial::eval_d2(double x) const {
    const size_t s = piece_index_d(x);
    return horner(loc2_[s], x - brk_d_[s]);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Polynomial> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return PiecewisePolynomial(brk_, std::move(d));
}

Rational PiecewisePolynomial::integral() const {
    Rational acc(0);
    for (size_t i = 0; i < pieces_.size(); ++i) acc += pieces_[i].integral(brk_[i], brk_[i + 1]);
    return acc;
}

Rational PiecewisePolynomial::integral(const Rational& lo, const Rational& hi) const {
    if (lo > hi) return -integral(hi, lo);
    if (lo < brk_.front() || hi > brk_.back())
        throw DomainError("integration range outside the piecewise span");
    Rational acc(0);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Rational l = std::max(lo, brk_[i]);
        Rational h = std::min(hi, brk_[i + 1]);
        if (l < h) acc += pieces_[i].integral(l, h);
    }
    return acc;
}

std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    if (a.front() != b.front() || a.back() != b.back())
        throw ParameterError("merge_breakpoints: spans differ");
    std::vector<Rational> m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& o) const {
    auto m = merge_breakpoints(brk_, o.brk_);
    std::vector<Polynomial> ps;
    ps.reserve(m.size() - 1);
    for (size_t i = 0; i + 1 < m.size(); ++i) {
        Rational mid = (m[i] + m[i + 1]) / 2;
        ps.push_back(pieces_[piece_index(mid)] + o.pieces_[o.piece_index(mid)]);
    }
    return PiecewisePolynomial(std::move(m), std::move(ps));
}

PiecewisePolynomial PiecewisePolynomial::operator*(const PiecewisePolynomial& o) const {
    auto m = merge_breakpoints(brk_, o.brk_);
    std::vector<Polynomial> ps;
    ps.reserve(m.size() - 1);
    for (size_t i = 0; i + 1 < m.size(); ++i) {
        Rational mid = (m[i] + m[i + 1]) / 2;
        ps.push_back(pieces_[piece_index(mid)] * o.pieces_[o.piece_index(mid)]);
    }
    return PiecewisePolynomial(std::move(m), std::move(ps));
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rational& s) const {
    std::vector<Polynomial> ps;
    ps.reserve(pieces_.size());
    for (const auto& p : pieces_) ps.push_back(p.scaled(s));
    return PiecewisePolynomial(brk_, std::move(ps));
}

PiecewisePolynomial PiecewisePolynomial::restrict(const Rational& lo, const Rational& hi) const {
    if (lo < brk_.front() || hi > brk_.back() || !(lo < hi))
        throw DomainError("restrict: range outside the piecewise span");
    std::vector<Rational> nb{lo};
    std::vector<Polynomial> np;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Rational l = std::max(lo, brk_[i]);
        Rational h = std::min(hi, brk_[i + 1]);
        if (l < h) {
            np.push_back(pieces_[i]);
            nb.push_back(h);
        }
    }
    return PiecewisePolynomial(std::move(nb), std::move(np));
}

int PiecewisePolynomial::smoothness_class() const {
    int cls = 2;
    for (size_t j = 1; j + 1 < brk_.size(); ++j) {
        const Rational& x = brk_[j];
        Polynomial l = pieces_[j - 1], r = pieces_[j];
        for (int k = 0; k <= 2; ++k) {
            if (l.eval(x) != r.eval(x)) {
                cls = std::min(cls, k - 1);
                break;
            }
            l = l.derivative();
            r = r.derivative();
        }
        if (cls < 0) return -1;
    }
    return cls;
}

// ---------------------------------------------------------------------------
// test functions

Interval TestFunctionSpec::interval() const {
    if (auto* s = std::get_if<SineCombination>(&body)) return s->iv;
    if (auto* h = std::get_if<HalfSineCombination>(&body)) return h->iv;
    return std::get<PiecewisePolynomial>(body).interval();
}

namespace {

// omega of term: n pi / L for full sines, (2j-1) pi / (2L) for half sines
double term_omega(const Interval& iv, int mode, bool half) {
    double L = to_double(iv.length());
    return half ? (2.0 * mode - 1.0) * kPi / (2.0 * L) : mode * kPi / L;
}

Derivatives eval_trig(const Interval& iv, const std::vector<std::pair<Rational, int>>& terms,
                      bool half, double x) {
    double a = to_double(iv.a);
    Derivatives d{0, 0, 0};
    for (const auto& [lam, n] : terms) {
        double w = term_omega(iv, n, half);
        double c = to_double(lam);
        double s = std::sin(w * (x - a)), co = std::cos(w * (x - a));
        d.f += c * s;
        d.f1 += c * w * co;
        d.f2 -= c * w * w * s;
    }
    return d;
}

}  // namespace

Derivatives eval_derivatives(const TestFunctionSpec& fn, double x) {
    Interval iv = fn.interval();
    if (!iv.contains(x)) throw DomainError("eval_derivatives: x outside [a, b]");
    if (auto* s = std::get_if<SineCombination>(&fn.body))
        return eval_trig(s->iv, s->terms, false, x);
    if (auto* h = std::get_if<HalfSineCombination>(&fn.body))
        return eval_trig(h->iv, h->terms, true, x);
    const auto& pp = std::get<PiecewisePolynomial>(fn.body);
    return {pp.eval(x), pp.eval_d1(x), pp.eval_d2(x)};
}

Rational eval_exact(const PiecewisePolynomial& pp, const Rational& x, int deriv_order) {
    Polynomial p = pp.pieces()[pp.piece_index(x)];
    for (int k = 0; k < deriv_order; ++k) p = p.derivative();
    return p.eval(x);
}

AdmissibilityReport check_admissible(const TestFunctionSpec& fn, const Interval& iv) {
    if (!(fn.interval() == iv)) return {false, "function interval differs from the domain"};

    if (auto* s = std::get_if<SineCombination>(&fn.body)) {
        for (const auto& [lam, n] : s->terms) {
            (void)lam;
            if (n < 1) return {false, "sine mode < 1"};
        }
        // f(a) = f(b) = 0 identically; only the Dirichlet-Dirichlet claim
        // is symbolic, other declared conditions must be checked numerically
        if (fn.bc == BoundaryCondition::DirichletDirichlet) return {true, ""};
        Derivatives da = eval_derivatives(fn, to_double(iv.a));
        Derivatives db = eval_derivatives(fn, to_double(iv.b));
        double viol = fn.bc == BoundaryCondition::DirichletNeumann ? std::abs(db.f1)
                                                                   : std::abs(da.f1);
        if (viol > 1e-12) {
            std::ostringstream os;
            os << "declared " << bc_name(fn.bc) << " violated, |f'| = " << viol;
            return {false, os.str()};
        }
        return {true, ""};
    }

    if (auto* h = std::get_if<HalfSineCombination>(&fn.body)) {
        for (const auto& [lam, n] : h->terms) {
            (void)lam;
            if (n < 1) return {false, "half-sine index < 1"};
        }
        // every term has f(a) = 0 and f'(b) = 0 identically
        if (fn.bc == BoundaryCondition::DirichletNeumann) return {true, ""};
        return {false, "half-sine bodies satisfy dirichlet_neumann, not " + bc_name(fn.bc)};
    }

    const auto& pp = std::get<PiecewisePolynomial>(fn.body);
    if (pp.smoothness_class() < 2) return {false, "junction not C2"};
    auto value = [&](const Rational& x) { return eval_exact(pp, x, 0); };
    auto d1 = [&](const Rational& x) { return eval_exact(pp, x, 1); };
    switch (fn.bc) {
        case BoundaryCondition::DirichletDirichlet:
            if (value(iv.a) != 0) return {false, "f(a) != 0: " + rat_to_string(value(iv.a))};
            if (value(iv.b) != 0) return {false, "f(b) != 0: " + rat_to_string(value(iv.b))};
            break;
        case BoundaryCondition::DirichletNeumann:
            if (value(iv.a) != 0) return {false, "f(a) != 0: " + rat_to_string(value(iv.a))};
            if (d1(iv.b) != 0) return {false, "f'(b) != 0: " + rat_to_string(d1(iv.b))};
            break;
        case BoundaryCondition::NeumannDirichlet:
            if (d1(iv.a) != 0) return {false, "f'(a) != 0: " + rat_to_string(d1(iv.a))};
            if (value(iv.b) != 0) return {false, "f(b) != 0: " + rat_to_string(value(iv.b))};
            break;
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// weights

std::string verdict_name(Verdict v, const std::string& property) {
    switch (v) {
        case Verdict::Certified: return "certified_" + property;
        case Verdict::CertifiedNot: return "certified_not_" + property;
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

Interval WeightSpec::interval() const {
    if (auto* c = std::get_if<ConstantWeight>(&body)) return c->iv;
    if (auto* pl = std::get_if<PiecewiseLinearWeight>(&body))
        return Interval(pl->breakpoints.front(), pl->breakpoints.back());
    if (auto* p = std::get_if<PolynomialWeight>(&body)) return p->iv;
    return std::get<PiecewisePolynomialWeight>(body).pp.interval();
}

double WeightSpec::eval(double x) const {
    if (auto* c = std::get_if<ConstantWeight>(&body)) return to_double(c->value);
    if (auto* p = std::get_if<PolynomialWeight>(&body)) return p->p.eval(x);
    return weight_as_pp(*this).eval(x);
}

PiecewisePolynomial weight_as_pp(const WeightSpec& w) {
    if (auto* c = std::get_if<ConstantWeight>(&w.body))
        return PiecewisePolynomial({c->iv.a, c->iv.b}, {Polynomial::constant(c->value)});
    if (auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        std::vector<Polynomial> ps;
        for (size_t i = 0; i + 1 < pl->breakpoints.size(); ++i) {
            Rational m = pl->slope(i);
            // value + slope * (x - x_i), expanded
            ps.push_back(
                Polynomial({pl->values[i] - m * pl->breakpoints[i], m}));
        }
        return PiecewisePolynomial(pl->breakpoints, std::move(ps));
    }
    if (auto* p = std::get_if<PolynomialWeight>(&w.body))
        return PiecewisePolynomial({p->iv.a, p->iv.b}, {p->p});
    return std::get<PiecewisePolynomialWeight>(w.body).pp;
}

namespace {

// concavity of a piecewise-polynomial body: continuity, per-piece w'' <= 0
// (exact, Sturm), and non-increasing one-sided slopes across junctions
ConcavityCheck pp_concavity(const PiecewisePolynomial& pp) {
    const auto& brk = pp.breakpoints();
    const auto& ps = pp.pieces();
    for (size_t j = 1; j + 1 < brk.size(); ++j)
        if (ps[j - 1].eval(brk[j]) != ps[j].eval(brk[j]))
            return {Verdict::CertifiedNot, "discontinuous at x = " + rat_to_string(brk[j])};
    for (size_t i = 0; i < ps.size(); ++i) {
        auto cert = is_nonpositive_on(ps[i].derivative().derivative(), brk[i], brk[i + 1]);
        if (!cert.holds)
            return {Verdict::CertifiedNot,
                    "w'' > 0 at x = " + rat_to_string(*cert.witness)};
    }
    for (size_t j = 1; j + 1 < brk.size(); ++j) {
        Rational left = ps[j - 1].derivative().eval(brk[j]);
        Rational right = ps[j].derivative().eval(brk[j]);
        if (left < right)
            return {Verdict::CertifiedNot,
                    "slope increases across x = " + rat_to_string(brk[j]) + " (" +
                        rat_to_string(left) + " -> " + rat_to_string(right) + ")"};
    }
    return {Verdict::Certified, ""};
}

ConcavityCheck pp_nonneg(const PiecewisePolynomial& pp) {
    const auto& brk = pp.breakpoints();
    const auto& ps = pp.pieces();
    for (size_t i = 0; i < ps.size(); ++i) {
        auto cert = is_nonnegative_on(ps[i], brk[i], brk[i + 1]);
        if (!cert.holds)
            return {Verdict::CertifiedNot, "w < 0 at x = " + rat_to_string(*cert.witness)};
    }
    return {Verdict::Certified, ""};
}

ConcavityCheck pp_nondecreasing(const PiecewisePolynomial& pp) {
    const auto& brk = pp.breakpoints();
    const auto& ps = pp.pieces();
    for (size_t j = 1; j + 1 < brk.size(); ++j)
        if (ps[j - 1].eval(brk[j]) != ps[j].eval(brk[j]))
            return {Verdict::CertifiedNot, "discontinuous at x = " + rat_to_string(brk[j])};
    for (size_t i = 0; i < ps.size(); ++i) {
        auto cert = is_nonnegative_on(ps[i].derivative(), brk[i], brk[i + 1]);
        if (!cert.holds)
            return {Verdict::CertifiedNot, "w' < 0 at x = " + rat_to_string(*cert.witness)};
    }
    return {Verdict::Certified, ""};
}

}  // namespace

ConcavityCheck check_concave(const WeightSpec& w) {
    if (auto* c = std::get_if<ConstantWeight>(&w.body)) {
        (void)c;
        return {Verdict::Certified, ""};
    }
    if (auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        for (size_t i = 0; i + 1 < pl->breakpoints.size() - 1; ++i) {
            if (pl->slope(i) < pl->slope(i + 1)) {
                std::ostringstream os;
                os << "slopes increase between pieces " << i << " and " << i + 1 << " ("
                   << rat_to_string(pl->slope(i)) << " -> " << rat_to_string(pl->slope(i + 1))
                   << ")";
                return {Verdict::CertifiedNot, os.str()};
            }
        }
        return {Verdict::Certified, ""};
    }
    if (auto* p = std::get_if<PolynomialWeight>(&w.body)) {
        auto cert = is_nonpositive_on(p->p.derivative().derivative(), p->iv.a, p->iv.b);
        if (!cert.holds)
            return {Verdict::CertifiedNot, "w'' > 0 at x = " + rat_to_string(*cert.witness)};
        return {Verdict::Certified, ""};
    }
    return pp_concavity(std::get<PiecewisePolynomialWeight>(w.body).pp);
}

ConcavityCheck check_nonnegative(const WeightSpec& w) {
    if (auto* c = std::get_if<ConstantWeight>(&w.body)) {
        if (c->value < 0) return {Verdict::CertifiedNot, "negative constant"};
        return {Verdict::Certified, ""};
    }
    if (auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        for (size_t i = 0; i < pl->values.size(); ++i)
            if (pl->values[i] < 0)
                return {Verdict::CertifiedNot,
                        "negative node value at x = " + rat_to_string(pl->breakpoints[i])};
        return {Verdict::Certified, ""};
    }
    return pp_nonneg(weight_as_pp(w));
}

ConcavityCheck check_nondecreasing(const WeightSpec& w) {
    if (std::get_if<ConstantWeight>(&w.body)) return {Verdict::Certified, ""};
    if (auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        for (size_t i = 0; i + 1 < pl->breakpoints.size(); ++i)
            if (pl->slope(i) < 0)
                return {Verdict::CertifiedNot,
                        "decreasing on piece " + std::to_string(i) + " (slope " +
                            rat_to_string(pl->slope(i)) + ")"};
        return {Verdict::Certified, ""};
    }
    return pp_nondecreasing(weight_as_pp(w));
}

WeightSpec make_constant_weight(const Interval& iv, const Rational& value) {
    WeightSpec w{ConstantWeight{iv, value}, Verdict::Unknown, Verdict::Unknown};
    w.concavity = check_concave(w).verdict;
    w.nonnegativity = check_nonnegative(w).verdict;
    return w;
}

WeightSpec make_pl_weight(std::vector<Rational> breakpoints, std::vector<Rational> values) {
    if (breakpoints.size() != values.size() || breakpoints.size() < 2)
        throw ParameterError("piecewise-linear weight: need matching breakpoints and values");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw ParameterError("piecewise-linear weight: breakpoints must increase");
    WeightSpec w{PiecewiseLinearWeight{std::move(breakpoints), std::move(values)},
                 Verdict::Unknown, Verdict::Unknown};
    w.concavity = check_concave(w).verdict;
    w.nonnegativity = check_nonnegative(w).verdict;
    return w;
}

WeightSpec make_poly_weight(const Interval& iv, Polynomial p) {
    WeightSpec w{PolynomialWeight{iv, std::move(p)}, Verdict::Unknown, Verdict::Unknown};
    w.concavity = check_concave(w).verdict;
    w.nonnegativity = check_nonnegative(w).verdict;
    return w;
}

WeightSpec make_pp_weight(PiecewisePolynomial pp) {
    WeightSpec w{PiecewisePolynomialWeight{std::move(pp)}, Verdict::Unknown, Verdict::Unknown};
    w.concavity = check_concave(w).verdict;
    w.nonnegativity = check_nonnegative(w).verdict;
    return w;
}

// ---------------------------------------------------------------------------
// generators

WeightSpec random_concave_weight(std::uint64_t seed, const Interval& iv, int pieces,
                                 const WeightGenOptions& opts) {
    if (pieces < 1) throw ParameterError("random_concave_weight: pieces < 1");
    Rng rng(seed);

    // interior breakpoints: jittered uniform grid, strictly increasing
    std::vector<Rational> brk{iv.a};
    Rational L = iv.length();
    for (int i = 1; i < pieces; ++i) {
        Rational base = iv.a + L * Rational(i, pieces);
        Rational jitter = rng.uniform_rational(Rational(-1, 4), Rational(1, 4));
        brk.push_back(base + jitter * L / pieces);
    }
    brk.push_back(iv.b);

    // strictly decreasing slopes with a guaranteed gap
    std::vector<Rational> slopes(static_cast<size_t>(pieces));
    slopes[0] = rng.uniform_rational(Rational(1, 2), Rational(3, 2));
    for (int i = 1; i < pieces; ++i)
        slopes[static_cast<size_t>(i)] =
            slopes[static_cast<size_t>(i - 1)] -
            rng.uniform_rational(opts.min_slope_gap, Rational(1, 2));
    if (opts.nondecreasing) {
        // lift the whole profile so the last slope stays positive
        Rational lift = slopes.back() < opts.min_slope_gap
                            ? opts.min_slope_gap - slopes.back()
                            : Rational(0);
        for (auto& s : slopes) s += lift;
    }

    std::vector<Rational> vals{Rational(0)};
    for (int i = 0; i < pieces; ++i)
        vals.push_back(vals.back() +
                       slopes[static_cast<size_t>(i)] * (brk[static_cast<size_t>(i + 1)] -
                                                         brk[static_cast<size_t>(i)]));

    // shift so min = 0, then optionally add a positive offset; shifting by a
    // constant preserves concavity
    Rational mn = *std::min_element(vals.begin(), vals.end());
    Rational offset = rng.uniform01() < 0.5 ? Rational(0)
                                            : rng.uniform_rational(Rational(1, 100), Rational(1, 2));
    for (auto& v : vals) v = v - mn + offset;

    return make_pl_weight(std::move(brk), std::move(vals));
}

TestFunctionSpec random_admissible_function(std::uint64_t seed, const Interval& iv,
                                            int max_mode) {
    if (max_mode < 1) throw ParameterError("random_admissible_function: max_mode < 1");
    Rng rng(seed);
    SineCombination s{iv, {}};
    bool any = false;
    for (int n = 1; n <= max_mode; ++n) {
        Rational lam = rng.uniform_rational(Rational(-1), Rational(1));
        if (lam != 0) any = true;
        s.terms.emplace_back(lam, n);
    }
    if (!any) s.terms[0].first = Rational(1, 2);
    return {std::move(s), BoundaryCondition::DirichletDirichlet};
}

TestFunctionSpec random_halfsine_function(std::uint64_t seed, const Interval& iv, int max_mode) {
    if (max_mode < 1) throw ParameterError("random_halfsine_function: max_mode < 1");
    Rng rng(seed);
    HalfSineCombination h{iv, {}};
    bool any = false;
    for (int j = 1; j <= max_mode; ++j) {
        Rational lam = rng.uniform_rational(Rational(-1), Rational(1));
        if (lam != 0) any = true;
        h.terms.emplace_back(lam, j);
    }
    if (!any) h.terms[0].first = Rational(1, 2);
    return {std::move(h), BoundaryCondition::DirichletNeumann};
}

}  // namespace hlkappa
