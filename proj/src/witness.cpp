#include "hlkappa/witness.hpp"

#include <stdexcept>
#include <variant>

namespace hlkappa {

namespace {

void require_delta(const Rational& d) {
    if (!(d > 0 && d < Rational(1, 2)))
        throw ParameterError("delta must lie strictly between 0 and 1/2");
}

// solve M x = rhs by Gauss-Jordan with exact pivoting; M is 6x6
std::array<Rational, 6> solve6(std::array<std::array<Rational, 7>, 6> m) {
    for (int col = 0; col < 6; ++col) {
        int pivot = -1;
        for (int r = col; r < 6; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular Hermite system");
        std::swap(m[col], m[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (int c = col; c < 7; ++c) m[col][c] *= inv;
        for (int r = 0; r < 6; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < 7; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    std::array<Rational, 6> x;
    for (int r = 0; r < 6; ++r) x[r] = m[r][6];
    return x;
}

}  // namespace

WeightSpec quartic_weight() {
    return make_poly_weight(Interval(Rational(0), Rational(1)),
                            Polynomial::monomial(Rational(1), 4));
}

TestFunctionSpec build_witness(const Rational& delta) {
    require_delta(delta);
    const Rational d = delta;
    const Rational d2 = 2 * d;
    const Rational ramp_slope = Rational(1) / d;
    const Rational fall_slope = Rational(-1) / (1 - d2);

    // rows: value at d, value at 2d, slope at d, slope at 2d, curvature at
    // d, curvature at 2d, of sum a_k x^k
    std::array<std::array<Rational, 7>, 6> sys{};
    const auto fill_row = [&](int row, const Rational& x, int deriv, const Rational& rhs) {
        for (int k = 0; k < 6; ++k) {
            Rational c(0);
            if (deriv == 0) {
                c = rat_pow(x, k);
            } else if (deriv == 1 && k >= 1) {
                c = k * rat_pow(x, k - 1);
            } else if (deriv == 2 && k >= 2) {
                c = k * (k - 1) * rat_pow(x, k - 2);
            }
            sys[row][static_cast<size_t>(k)] = c;
        }
        sys[row][6] = rhs;
    };
    fill_row(0, d, 0, Rational(1));
    fill_row(1, d2, 0, Rational(1));
    fill_row(2, d, 1, ramp_slope);
    fill_row(3, d2, 1, fall_slope);
    fill_row(4, d, 2, Rational(0));
    fill_row(5, d2, 2, Rational(0));
    const std::array<Rational, 6> a = solve6(sys);

    const Polynomial ramp({Rational(0), ramp_slope});
    const Polynomial bridge(std::vector<Rational>(a.begin(), a.end()));
    const Polynomial fall({Rational(1) / (1 - d2), fall_slope});

    TestFunctionSpec f;
    f.body = PiecewisePolynomial({Rational(0), d, d2, Rational(1)}, {ramp, bridge, fall});
    f.bc = BoundaryCondition::DirichletDirichlet;
    return f;
}

std::array<Rational, 6> closed_form_coefficients(const Rational& delta) {
    require_delta(delta);
    const Rational d = delta;
    const Rational s = 2 * d - 1;
    return {
        (48 * d - 17) / s,
        -(183 * d - 64) / (d * s),
        12 * (23 * d - 8) / (d * d * s),
        -2 * (99 * d - 34) / (rat_pow(d, 3) * s),
        (68 * d - 23) / (rat_pow(d, 4) * s),
        -3 * (3 * d - 1) / (rat_pow(d, 5) * s),
    };
}

Rational kappa_closed_form(const Rational& delta) {
    require_delta(delta);
    const Rational d = delta;
    const Rational num =
        3003 + 14474 * rat_pow(d, 3) - 53525 * rat_pow(d, 4) - 12344 * rat_pow(d, 5);
    const Rational p1 =
        858 + 72450 * rat_pow(d, 5) - 531793 * rat_pow(d, 6) + 674178 * rat_pow(d, 7);
    const Rational p2 = 2042 - 11999 * d + 20182 * d * d;
    return num * num / (26 * d * p1 * p2);
}

Rational kappa_limit_constant() { return Rational(1617, 8168); }

std::vector<Rational> default_witness_deltas() {
    return {Rational(2, 5),  Rational(1, 4),   Rational(1, 10),
            Rational(1, 20), Rational(1, 100), Rational(1, 1000)};
}

std::vector<WitnessResult> witness_study(const std::vector<Rational>& deltas) {
    const Interval unit(Rational(0), Rational(1));
    const WeightSpec w = quartic_weight();
    std::vector<WitnessResult> out;
    out.reserve(deltas.size());
    for (const auto& d : deltas) {
        const TestFunctionSpec f = build_witness(d);
        const auto& pp = std::get<PiecewisePolynomial>(f.body);
        const auto& bridge = pp.pieces()[1].coeffs();

        WitnessResult r;
        r.delta = d;
        for (size_t k = 0; k < 6; ++k)
            r.coefficients[k] = k < bridge.size() ? bridge[k] : Rational(0);
        const KappaReport rep = compute_kappa(w, f, unit, {.force_exact = true});
        r.kappa_exact = *rep.kappa_exact;
        r.kappa_closed = kappa_closed_form(d);
        r.match = (r.kappa_exact == r.kappa_closed);
        r.delta_times_kappa = d * r.kappa_exact;
        out.push_back(std::move(r));
    }
    return out;
}

KappaReport monotonicity_example() {
    const Interval unit(Rational(0), Rational(1));
    const WeightSpec w = make_pl_weight({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    TestFunctionSpec f;
    f.body = HalfSineCombination{unit, {{Rational(1), 1}}};
    f.bc = BoundaryCondition::DirichletNeumann;
    return compute_kappa(w, f, unit);
}

}  // namespace hlkappa
