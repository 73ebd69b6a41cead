#ifndef HLKAPPA_POLYNOMIAL_HPP_
#define HLKAPPA_POLYNOMIAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hlkappa/rational.hpp"

namespace hlkappa {

// Dense univariate polynomial with exact rational coefficients,
// ascending powers. coeffs empty means the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(Rational c);
    // monomial c x^k
    static Polynomial monomial(Rational c, int k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Polynomial derivative() const;
    Polynomial antiderivative() const;  // constant term 0
    Rational integral(const Rational& lo, const Rational& hi) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& s) const;

    // p(alpha + beta x): re-parametrizes a piece onto another axis
    Polynomial compose_affine(const Rational& alpha, const Rational& beta) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Exact sign certification on [lo, hi] by Sturm root isolation.
// The verdict is proved, not sampled: distinct real roots of the
// square-free part are separated, and the polynomial is evaluated at a
// rational point inside every root-free gap.
struct SignCertificate {
    bool holds;
    // a point where the claimed sign fails, when holds is false
    std::optional<Rational> witness;
};

SignCertificate is_nonpositive_on(const Polynomial& p, const Rational& lo, const Rational& hi);
SignCertificate is_nonnegative_on(const Polynomial& p, const Rational& lo, const Rational& hi);

// Number of distinct real roots in (lo, hi], by Sturm sign variations.
int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace hlkappa

#endif  // HLKAPPA_POLYNOMIAL_HPP_
