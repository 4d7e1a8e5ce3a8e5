#pragma once

#include <functional>
#include <vector>

#include "betaint/identity_catalog.hpp"

namespace betaint {

// Parameters of the index hypergeometric transform pair. Both must be
// positive; the kernel is 2F1(a+is, a-is; a+b; -x) and the x-side measure is
// x^{a+b-1} (1+x)^{a-b} dx on (0, inf).
struct JParams {
    double a = 0.0;
    double b = 0.0;
};

// A function together with its large-argument decay certificate. For a
// forward source, evaluator(x) ~ x^{-decay_exponent} as x -> inf; for an
// inverse image, evaluator(s) ~ s^{-decay_exponent}, with
// kSuperpolynomialDecay meaning faster than any power (the usual case for
// gamma-weight images). The certificate feeds the half-line quadrature's
// tail control and is required, not inferred.
struct JSource {
    std::function<double(double)> evaluator;
    double decay_exponent = 0.0;
};

// Stable tags for the catalog of explicitly invertible source/image pairs.
// The string forms never change; they are the CLI and test contract.
enum class PairId {
    L11A, // source (1+x)^{-a-c}: single conjugate gamma pair image
    L11B, // source (1+x)^{b-a} (x+z)^{-c-b}: image gains a kernel factor at 1-z
    L11C, // source x^{-u-a}: gamma-ratio image with algebraic decay
    L12A, // Gauss source with scale y: image gains a kernel factor at 1-y
    L12B, // Gauss source at unit scale: pure gamma-ratio image
    L12C, // balanced Gauss source: image free of s-dependent denominators
};

// One catalog entry: the x-side source with its decay certificate, and the
// closed-form s-side image. Built by make_image_pair for catalog ids; tests
// may aggregate ad-hoc pairs (the pairing functions only read the members).
struct ImagePair {
    PairId id = PairId::L11A;
    JParams params;
    ParamMap extra;
    JSource source;
    std::function<double(double)> image;
    double image_decay_exponent = 0.0;
};

// Construct a catalog pair. extra carries the named parameters each id needs:
// L11A {c}, L11B {c, z}, L11C {u}, L12A {p, q, y}, L12B {p, q}, L12C {c, d},
// all positive, and u < b for L11C (otherwise the source is not integrable
// against the measure). Unknown or missing names are a domain_error.
ImagePair make_image_pair(PairId id, const JParams& p, const ParamMap& extra);

// Forward transform at spectral point s >= 0:
//   (1/Gamma(a+b)) int_0^inf f(x) 2F1(a+is,a-is;a+b;-x) x^{a+b-1} (1+x)^{a-b} dx.
// Requires f.decay_exponent > a (the kernel contributes x^{-a}); integrated
// through x = sinh^2 t, which turns the algebraic tail into exponential decay
// at rate 2 (decay_exponent - a) and the kernel oscillation into a linear
// phase, so even slowly decaying sources settle in a few octaves.
double j_forward(const JParams& p, const JSource& f, double s, double tol);

// Inverse transform at x >= 0:
//   (1/(2 pi Gamma(a+b))) int_0^inf g(s) 2F1(a+is,a-is;a+b;-x)
//                                   |Gamma(a+is)Gamma(b+is)/Gamma(2is)|^2 ds.
// The weight grows like s^{2a+2b-1}, so g must decay faster than
// s^{-(2a+2b)}; images with algebraic certificates are checked against that
// and refused by the quadrature when the combined decay is too slow.
double j_inverse(const JParams& p, const JSource& g, double x, double tol);

struct PlancherelSides {
    double lhs = 0.0; // int f1 f2 x^{a+b-1} (1+x)^{a-b} dx
    double rhs = 0.0; // (1/2pi) int g1 g2 |Gamma(a+is)Gamma(b+is)/Gamma(2is)|^2 ds
};

// Both sides of the pairing identity for two catalog pairs. The s side uses
// the closed-form images; the numeric forward transform is never nested
// inside another integral. Both pairs must have been built with the same
// transform parameters as p.
PlancherelSides plancherel_pair(const JParams& p, const ImagePair& f1,
                                const ImagePair& f2, double tol);

// Worst relative disagreement between the numeric forward transform of the
// pair's source and its closed-form image over s_grid.
double image_residual(PairId id, const ParamMap& extra, const JParams& p,
                      const std::vector<double>& s_grid, double tol);

// Verification of the index-integral identities EQ_4_1, EQ_4_2, EQ_4_3,
// EQ_4_3_DIAG, EQ_4_4 (whose left sides integrate catalog kernels against
// the spectral weight); delegates to the identity catalog. Any other id is a
// domain_error.
VerificationReport section4_verify(IdentityId id, const ParamMap& params,
                                   double tol);

} // namespace betaint
