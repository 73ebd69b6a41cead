#ifndef HLKAPPA_RATIONAL_HPP_
#define HLKAPPA_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hlkappa/errors.hpp"

namespace hlkappa {

// Arbitrary-precision rational. Every exact-mode quantity in the library
// is one of these; doubles convert in exactly (they are dyadic).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

Rational rat_pow(const Rational& base, int exp);

// Accepts "p/q", decimal strings ("0.25", "-3", "1e-3"), and plain integers.
// The decimal forms are parsed exactly (scaled by a power of ten), so a
// config round-trips without floating error.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" form.
std::string rat_to_string(const Rational& r);

// A rational scaled by an even power of pi. Equality-case integrals have
// this shape (I1 = I0 * (n pi / L)^2 and so on); keeping the pi exponent
// symbolic lets kappa = 1 come out as a literal rational.
struct PiScaled {
    Rational r;
    int pi_exp = 0;  // value = r * pi^pi_exp

    PiScaled operator*(const PiScaled& o) const { return {r * o.r, pi_exp + o.pi_exp}; }
    PiScaled operator/(const PiScaled& o) const { return {r / o.r, pi_exp - o.pi_exp}; }
    double value() const;
};

}  // namespace hlkappa

#endif  // HLKAPPA_RATIONAL_HPP_
