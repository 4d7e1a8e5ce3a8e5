#pragma once

#include <vector>

#include "betaint/gamma.hpp"
#include "betaint/hypergeometric.hpp"

namespace betaint {

// Integrand specification for
//   (1/2pi i) int prod Gamma(a_i+s) prod Gamma(b_j-s)
//             / (prod Gamma(c_k-s) prod Gamma(d_l+s)) z^{-s} ds
// along a vertical line separating the left pole series {-a_i - k} from the
// right series {b_j + k}.
struct MBSpec {
    std::vector<ComplexValue> a_list; // numerator, +s
    std::vector<ComplexValue> b_list; // numerator, -s
    std::vector<ComplexValue> c_list; // denominator, -s
    std::vector<ComplexValue> d_list; // denominator, +s
    ComplexValue z = 1.0;
};

struct ContourChoice {
    double sigma = 0.0;
    double margin = 0.0;
};

// Midpoint of the gap between the rightmost left pole and the leftmost right
// pole; collision error when the gap is empty, coincident-pole error when a
// left and a right pole series intersect exactly.
ContourChoice find_contour(const MBSpec& spec);

// Numeric value along the separating line. z must be real positive; the
// integrand must decay (net exponential rate > 0, or zero rate with algebraic
// decay faster than 1/|t|).
ComplexValue eval_mb(const MBSpec& spec, double tol);

// Same, along a caller-chosen vertical line inside the separating gap. The
// value is contour-independent there; exposed so tests can verify that.
ComplexValue eval_mb_at_sigma(const MBSpec& spec, double sigma, double tol);

// One residue-series term: coefficient carries the z power picked up at the
// pole series, prefactor the gamma ratio, series the resulting pFq.
struct MBExpansionTerm {
    ComplexValue coefficient = 1.0;
    GammaRatioSpec prefactor;
    SeriesSpec series;
};

enum class MBSide { left, right };

// Slater-type expansion over the simple poles of the chosen side, one term
// per gamma function on that side. Parameters on the chosen side differing by
// an integer make the poles non-simple; that is a typed refusal.
std::vector<MBExpansionTerm> mb_residue_expand(const MBSpec& spec, MBSide side);

// Numeric sum of an expansion: sum coefficient * gamma_ratio * pfq.
ComplexValue mb_expansion_value(const MBSpec& spec, MBSide side, double tol);

} // namespace betaint
