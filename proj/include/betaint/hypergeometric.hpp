#pragma once

#include <vector>

#include "betaint/gamma.hpp"

namespace betaint {

// Parameter bundle for a generalized hypergeometric series
// pFq(num; den; argument).
struct SeriesSpec {
    std::vector<ComplexValue> numerator_params;
    std::vector<ComplexValue> denominator_params;
    ComplexValue argument;
};

struct EvalResult {
    ComplexValue value = 0.0;
    int terms_used = 0;
    bool converged = false;
    bool terminating = false;
};

// Sum the pFq series. Handles: terminating series (a numerator parameter
// within 1e-12 of a nonpositive integer) by exact finite summation; |z| < 1
// by direct summation with a ratio-test tail bound; z = 1 with
// Re(sum den - sum num) > 0 by Richardson-type extrapolation of partial sums
// against the known N^{-delta} tail power. Anything else is a
// nonconvergence_error. A denominator Pochhammer vanishing before the series
// terminates is a pole_error.
EvalResult pfq(const SeriesSpec& spec, double tol);

// Gauss evaluation at unit argument:
// 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)),
// requires Re(c-a-b) > 0.
ComplexValue gauss_2f1_unit(ComplexValue a, ComplexValue b, ComplexValue c);

// 2F1(a,b;c;-x) for real x >= 0 and complex parameters. Maps the argument to
// w = x/(1+x) in [0,1); sums the transformed series for w <= 3/4 and switches
// to the 1-w connection formulas beyond that, including the logarithmic
// degenerate case needed on the hypergeometric kernel's spectral axis.
ComplexValue f21_neg_axis(ComplexValue a, ComplexValue b, ComplexValue c,
                          double x);

// Real conjugate-parameter kernel 2F1(p+is, p-is; base; -x) for real
// p, base, s, x >= 0. Asserts the imaginary residue of the complex evaluation
// is negligible and returns the real part. Near s = 0 with large x (where the
// connection formulas degenerate) the value is interpolated in s^2 through
// the exact logarithmic-case evaluation at s = 0.
double f21_conjugate_kernel(double p, double base, double s, double x);

} // namespace betaint
