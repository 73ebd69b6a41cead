#ifndef HLKAPPA_INTERVAL_HPP_
#define HLKAPPA_INTERVAL_HPP_

#include "hlkappa/rational.hpp"

namespace hlkappa {

struct Interval {
    Rational a;
    Rational b;

    Interval() : a(0), b(1) {}
    Interval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
        if (!(a < b)) throw ParameterError("interval requires a < b");
    }

    Rational length() const { return b - a; }
    bool contains(const Rational& x) const { return a <= x && x <= b; }
    bool contains(double x) const { return to_double(a) <= x && x <= to_double(b); }

    bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

}  // namespace hlkappa

#endif  // HLKAPPA_INTERVAL_HPP_
