#ifndef HLKAPPA_ERRORS_HPP_
#define HLKAPPA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hlkappa {

// x outside the interval, evaluation undefined
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// bad argument value (pieces < 1, delta outside (0, 1/2), ...)
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

// a theorem-side precondition is not certified (non-concave weight,
// decreasing weight handed to the reflection, ...)
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// operation not available for this representation
// (exact integration of non-rational data, distributional w'')
class ModeError : public std::runtime_error {
public:
    explicit ModeError(const std::string& msg) : std::runtime_error(msg) {}
};

// input makes the quotient undefined (f == 0, w == 0 where it matters)
class DegenerateError : public std::runtime_error {
public:
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

// adaptive quadrature or the optimizer ran out of budget; carries the
// best estimate so the caller can still inspect it
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double best, int subdivisions)
        : std::runtime_error(msg), best_estimate(best), subdivisions(subdivisions) {}
    double best_estimate;
    int subdivisions;
};

// malformed config / schema violation (CLI exit code 2)
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hlkappa

#endif  // HLKAPPA_ERRORS_HPP_
