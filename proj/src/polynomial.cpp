#include "hlkappa/polynomial.hpp"

#include <sstream>

namespace hlkappa {

Rational rat_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw ParameterError("rat_pow: 0 to a negative power");
        return Rational(1) / rat_pow(base, -exp);
    }
    Rational acc(1), b(base);
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

namespace {

// cpp_int's string constructor reads a leading zero as base 8; everything
// here is decimal, so validate and trim the zeros before handing it over.
BigInt decimal_bigint(std::string s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("bad integer literal: " + s);
    auto nz = s.find_first_not_of('0');
    BigInt v(nz == std::string::npos ? "0" : s.substr(nz));
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p = decimal_bigint(text.substr(0, slash));
        BigInt q = decimal_bigint(text.substr(slash + 1));
        if (q == 0) throw ConfigError("rational with zero denominator: " + text);
        return Rational(p, q);
    }
    // decimal / scientific form, parsed exactly
    std::string s = text;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad rational literal: " + text);
        }
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("bad rational literal: " + text);
    auto nz = s.find_first_not_of('0');
    BigInt mant(nz == std::string::npos ? "0" : s.substr(nz));
    if (neg) mant = -mant;
    BigInt pow10(1);
    for (long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) pow10 *= 10;
    return exp10 >= 0 ? Rational(mant * pow10) : Rational(mant, pow10);
}

std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

double PiScaled::value() const {
    double v = to_double(r);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < pi_exp; ++i) v *= pi;
    for (int i = 0; i > pi_exp; --i) v /= pi;
    return v;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return Polynomial();
    std::vector<Rational> a(c_.size() + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Polynomial(std::move(a));
}

Rational Polynomial::integral(const Rational& lo, const Rational& hi) const {
    Polynomial F = antiderivative();
    return F.eval(hi) - F.eval(lo);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::compose_affine(const Rational& alpha, const Rational& beta) const {
    // Horner in the polynomial ring: p(alpha + beta x)
    Polynomial lin({alpha, beta});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + Polynomial::constant(*it);
    return acc;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (os.tellp() > 0) os << " + ";
        os << rat_to_string(c_[k]);
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

namespace {

// polynomial remainder, rational coefficients
Polynomial poly_rem(Polynomial a, const Polynomial& b) {
    int db = b.degree();
    while (a.degree() >= db && !a.is_zero()) {
        Rational q = a.leading() / b.leading();
        int shift = a.degree() - db;
        a = a - (b * Polynomial::monomial(q, shift));
    }
    return a;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_rem(a, b);
        a = b;
        b = r;
        // keep coefficients small: make monic
        if (!b.is_zero()) b = b.scaled(Rational(1) / b.leading());
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());
    return a;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        Polynomial r = -poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = rat_sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// square-free part p / gcd(p, p')
Polynomial square_free(const Polynomial& p) {
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    // exact division p / g
    Polynomial num = p, quot;
    std::vector<Rational> qc(static_cast<size_t>(p.degree() - g.degree()) + 1, Rational(0));
    while (num.degree() >= g.degree() && !num.is_zero()) {
        Rational q = num.leading() / g.leading();
        int shift = num.degree() - g.degree();
        qc[static_cast<size_t>(shift)] = q;
        num = num - (g * Polynomial::monomial(q, shift));
    }
    return Polynomial(std::move(qc));
}

// Sample points that separate all distinct real roots of p in [lo, hi]:
// lo, hi, and one rational point strictly inside every root-free gap.
// Obtained by Sturm bisection until every bracket holds at most one root.
// Sturm counts roots in half-open (l, r], so interior bracket boundaries
// (nudged midpoints) are never roots; the one blind spot is a root at lo
// itself, patched explicitly at the end.
std::vector<Rational> separating_points(const Polynomial& p, const Rational& lo,
                                        const Rational& hi) {
    std::vector<Rational> pts{lo, hi, (lo + hi) / 2};
    if (p.degree() <= 0) return pts;
    Polynomial q = square_free(p);
    auto chain = sturm_chain(q);
    auto roots_in = [&](const Rational& l, const Rational& r) {
        return sign_variations(chain, l) - sign_variations(chain, r);
    };
    struct Bracket {
        Rational l, r;
        int n;
    };
    std::vector<Bracket> work{{lo, hi, roots_in(lo, hi)}};
    std::vector<Bracket> isolated;
    while (!work.empty()) {
        Bracket b = work.back();
        work.pop_back();
        if (b.n == 0) continue;
        if (b.n == 1) {
            isolated.push_back(b);
            continue;
        }
        Rational m = (b.l + b.r) / 2;
        // nudge off a root so the two halves partition cleanly
        while (q.eval(m) == 0) m = (b.l + m) / 2;
        work.push_back({b.l, m, roots_in(b.l, m)});
        work.push_back({m, b.r, roots_in(m, b.r)});
    }
    for (const auto& b : isolated) {
        pts.push_back(b.l);
        pts.push_back(b.r);
    }
    if (q.eval(lo) == 0 && roots_in(lo, hi) > 0) {
        // sample strictly between the root at lo and the next root
        Rational t = (lo + hi) / 2;
        while (roots_in(lo, t) > 0) t = (lo + t) / 2;
        pts.push_back(t);
    }
    return pts;
}

}  // namespace

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    Polynomial q = square_free(p);
    auto chain = sturm_chain(q);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

SignCertificate is_nonpositive_on(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) return {true, std::nullopt};
    for (const auto& x : separating_points(p, lo, hi)) {
        if (x < lo || x > hi) continue;
        if (p.eval(x) > 0) return {false, x};
    }
    return {true, std::nullopt};
}

SignCertificate is_nonnegative_on(const Polynomial& p, const Rational& lo, const Rational& hi) {
    SignCertificate c = is_nonpositive_on(-p, lo, hi);
    return c;
}

}  // namespace hlkappa
