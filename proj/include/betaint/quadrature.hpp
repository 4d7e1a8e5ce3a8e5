#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace betaint {

// Marker value for decay_exponent when the integrand falls off faster than
// any power (gamma-weighted integrands whose exponential rates do not cancel).
inline constexpr double kSuperpolynomialDecay = 1e300;

struct PoleLattice {
    double spacing = 0.0;
    double offset = 0.0; // first positive pole; the lattice is offset + m*spacing
};

struct IntegrandHandle {
    std::function<double(double)> evaluator;
    bool even = false;
    // integrand ~ |s|^{-decay_exponent} as |s| grows; > 1 required for
    // convergent improper integrals
    double decay_exponent = 0.0;
    std::optional<PoleLattice> pole_lattice;
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int panels_used = 0;
    double truncation_point = 0.0;
};

struct DecayEstimate {
    bool exponential = false; // net exponential rate negative: superpolynomial
    double power = 0.0;       // |s| exponent of the algebraic part
};

// Large-s behaviour of prod |Gamma(a_j+is)|^2 / prod |Gamma(b_j+is)|^2,
// optionally times 1/|Gamma(2is)|^2. Each gamma pair contributes
// 2pi |s|^{2a-1} e^{-pi|s|}; the 1/|Gamma(2is)|^2 factor contributes
// (2/pi)|s| e^{2pi|s|}. A positive net exponential rate means divergence and
// is reported as power = -infinity-like via exponential=false, power file.
DecayEstimate gamma_weight_decay(const std::vector<double>& numerator_shifts,
                                 const std::vector<double>& denominator_shifts,
                                 bool inv_gamma_2is_factor);

// One Gauss-Kronrod 15 panel on [a, b]; returns (value, error estimate).
std::pair<double, double> gk15_panel(const std::function<double(double)>& f,
                                     double a, double b);

// Adaptive bisection on [a, b] until the summed panel error estimates drop
// below tol relative to the accumulated absolute panel values.
QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, double tol);

// Integral over [0, inf): adaptive on [0, T] with T doubled until the tail
// bound |f(T)| T / (p-1) clears tol/2, p taken as the more pessimistic of the
// declared decay exponent and a local two-point fit. The fitted tail is added
// back as a completion term.
QuadResult integrate_halfline(const IntegrandHandle& f, double tol);

// Principal value over the symmetric interval [-M-alpha, M+alpha] of an even
// integrand with simple poles on pole_lattice, M grown until two successive
// values agree to tol. Poles are handled by pairing the window around each
// pole with a symmetric excision of radius eps, Richardson-extrapolated
// eps -> 0 (the pole contributions of the pair cancel by symmetry).
QuadResult integrate_pv_lattice(const IntegrandHandle& f, double alpha,
                                double tol);

// Bilateral series sum_{n in Z} term(n) by symmetric partial sums with a
// power-law tail estimate fitted from the terms at +-N and +-N/2.
QuadResult bilateral_sum(const std::function<double(long long)>& term,
                         double tol);

} // namespace betaint
