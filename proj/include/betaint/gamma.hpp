#pragma once

#include <complex>
#include <vector>

#include "betaint/errors.hpp"

namespace betaint {

inline constexpr double kPi = 3.14159265358979323846;

using ComplexValue = std::complex<double>;

// Symbolic Gamma[u1,...,ul / v1,...,vm] bracket: a product of gamma values in
// the numerator divided by a product in the denominator, evaluated in log
// space with exact cancellation of matching arguments.
struct GammaRatioSpec {
    std::vector<ComplexValue> numerator_args;
    std::vector<ComplexValue> denominator_args;
};

// sin(pi x), cos(pi x) with exact argument splitting x = n + r, |r| <= 1/2.
// The zero set stays exactly on the integers, which matters whenever a
// reflection-formula factor is divided by another near-zero quantity.
double sin_pi(double x);
double cos_pi(double x);

// Principal-branch log Gamma. Lanczos approximation (g = 607/128, 15 terms)
// for Re z >= 1/2, reflection otherwise. Relative accuracy ~1e-14 for
// |z| <= 100 off the negative real axis. The imaginary part is a valid
// logarithm of Gamma(z) (exp recovers the value exactly); it is continuous
// on Re z >= 1/2 but may differ by 2 pi k from the principal branch deep in
// the reflected region, which no consumer of exp() or Re() can observe.
ComplexValue log_gamma(ComplexValue z);

// exp(log_gamma(z)).
ComplexValue gamma(ComplexValue z);

// Real-argument gamma, poles reported as pole_error.
double gamma_real(double x);

// 1/Gamma(x) for real x: entire, returns 0 at nonpositive integers, stable
// near them (reflection with sin_pi keeps the zeros exact).
double inv_gamma_real(double x);

// log |Gamma(x)| for real non-pole x; *sign receives the sign of Gamma(x).
double log_abs_gamma_real(double x, int* sign);

// Pochhammer symbol (a)_k = a(a+1)...(a+k-1), empty product = 1.
// Direct product for small k, gamma ratio for large k away from poles.
ComplexValue pochhammer(ComplexValue a, int k);
double pochhammer_real(double a, int k);

// Evaluate the gamma-ratio bracket. Identical numerator/denominator arguments
// (within 1e-12) cancel symbolically first. An uncancelled numerator pole is
// a pole_error naming the argument; a denominator pole makes the ratio 0.
// A log-sum magnitude beyond the representable range is an overflow_error.
ComplexValue gamma_ratio(const GammaRatioSpec& spec);

// |Gamma(a+is)|^2 for real a, s via exp(2 Re log_gamma).
double abs_sq_gamma(double a, double s);

// 1/|Gamma(2is)|^2 = 2 s sinh(2 pi s)/pi, regular and ~4s^2 at s = 0.
double inv_abs_sq_gamma_2is(double s);

namespace detail {
// True when x is within tol of a nonpositive integer; *which receives it.
bool near_nonpositive_integer(double x, double tol, int* which);
} // namespace detail

} // namespace betaint
