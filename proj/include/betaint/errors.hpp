#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace betaint {

// Base class for all library failures. Everything thrown on purpose derives
// from this, so callers can catch betaint::error and still see what() text
// specific enough to act on.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A gamma (or Pochhammer) argument landed on a nonpositive integer and the
// pole does not cancel. Carries the offending argument.
class pole_error : public error {
public:
    pole_error(const std::string& msg, std::complex<double> arg)
        : error(msg), argument(arg) {}
    std::complex<double> argument;
};

// Parameters outside the validity region of an identity or operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An iterative evaluation (series, quadrature, bilateral sum) failed to reach
// the requested tolerance, or the underlying integral/series diverges.
class nonconvergence_error : public error {
public:
    explicit nonconvergence_error(const std::string& msg) : error(msg) {}
};

// No vertical line separates the left and right pole series of a
// Mellin-Barnes integrand. Carries the colliding bounds.
class contour_collision_error : public error {
public:
    contour_collision_error(const std::string& msg, double left_bound,
                            double right_bound)
        : error(msg), left(left_bound), right(right_bound) {}
    double left;
    double right;
};

// A log-space gamma ratio left the representable exponent range.
class overflow_error : public error {
public:
    explicit overflow_error(const std::string& msg) : error(msg) {}
};

// Residue expansion refused: two poles on the chosen side coincide
// (parameters differing by an integer give higher-order poles).
class coincident_pole_error : public error {
public:
    explicit coincident_pole_error(const std::string& msg) : error(msg) {}
};

// CLI configuration problems: parse failures, unknown target ids.
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

} // namespace betaint
