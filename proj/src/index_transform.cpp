#include "betaint/index_transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "betaint/errors.hpp"
#include "betaint/gamma.hpp"
#include "betaint/hypergeometric.hpp"
#include "betaint/quadrature.hpp"

namespace betaint {

namespace {

void require_params(const JParams& p) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw domain_error("transform parameters a, b must be positive");
}

double extra_param(const ParamMap& extra, const char* name) {
    auto it = extra.find(name);
    if (it == extra.end())
        throw domain_error(std::string("missing pair parameter ") + name);
    return it->second;
}

// log of |Gamma(a+is) Gamma(b+is) / Gamma(2is)|^2 for s > 0, assembled in
// log space; grows only algebraically (the exponential rates cancel).
double log_spectral_weight(const JParams& p, double s) {
    return std::log(s / kPi) + 2.0 * kPi * s +
           std::log1p(-std::exp(-4.0 * kPi * s)) +
           2.0 * log_gamma(ComplexValue(p.a, s)).real() +
           2.0 * log_gamma(ComplexValue(p.b, s)).real();
}

// Transform kernel 2F1(a+is, a-is; a+b; -x), real for real s and x >= 0.
double kern(const JParams& p, double s, double x) {
    if (x == 0.0) return 1.0;
    return f21_conjugate_kernel(p.a, p.a + p.b, s, x);
}

// Half-line weight x^{a+b-1} (1+x)^{a-b} dx rewritten through x = sinh^2 t.
// An algebraic tail x^{-(d-a)} of source times kernel becomes e^{-2(d-a)t}
// and the kernel oscillation cos(2s log x + phi) gains a linear phase, so the
// tail settles after a few octaves where a power substitution would have to
// chase the envelope out to unreachable truncation points.
struct SinhPoint {
    double x = 0.0;       // sinh^2 t
    double measure = 0.0; // 2 sinh^{2(a+b)-1} t cosh^{2(a-b)+1} t
};

constexpr double kLn2 = 0.69314718055994530942;

SinhPoint sinh_weight_point(double a, double b, double t) {
    SinhPoint pt;
    double log_sh = 0.0;
    double log_ch = 0.0;
    if (t < 20.0) {
        const double sh = std::sinh(t);
        const double ch = std::cosh(t);
        pt.x = sh * sh;
        log_sh = std::log(sh);
        log_ch = std::log(ch);
    } else {
        // e^{-2t} is below machine precision: sinh and cosh coincide with
        // e^t / 2, so the logs are exact and x is formed without overflow
        // surprises.
        log_sh = t - kLn2;
        log_ch = log_sh;
        pt.x = std::exp(2.0 * log_sh);
    }
    const double log_measure =
        kLn2 + (2.0 * (a + b) - 1.0) * log_sh + (2.0 * (a - b) + 1.0) * log_ch;
    if (!(pt.x < 1e300) || log_measure > 700.0)
        throw nonconvergence_error(
            "half-line tail failed to settle within the representable range");
    pt.measure = std::exp(log_measure);
    return pt;
}

// 2F1(p+is, p-is; base; w) for real w < 1. Nonpositive arguments go through
// the hardened negative-axis evaluator; 0 < w < 1 is mapped there by the
// Pfaff transformation, keeping the w -> 1 endpoint and the degenerate s = 0
// connection cases inside already-tested code paths. Every series term is
// positive for 0 < w < 1, so the value is >= 1 and the imaginary residue of
// the complex evaluation must be negligible against it.
double conjugate_f21_below_one(double p, double base, double s, double w) {
    if (w == 0.0) return 1.0;
    if (w < 0.0) return f21_conjugate_kernel(p, base, s, -w);
    const double x = w / (1.0 - w);
    if (!std::isfinite(x))
        throw domain_error("kernel argument too close to one");
    const ComplexValue prefactor =
        std::pow(ComplexValue(1.0 - w, 0.0), -ComplexValue(p, s));
    const ComplexValue tail = f21_neg_axis(
        ComplexValue(p, s), ComplexValue(base - p, s), ComplexValue(base, 0.0),
        x);
    const ComplexValue v = prefactor * tail;
    if (!(std::abs(v.imag()) <= 1e-10 * std::abs(v.real())))
        throw nonconvergence_error(
            "conjugate kernel lost realness at positive argument");
    return v.real();
}

} // namespace

double j_forward(const JParams& p, const JSource& f, double s, double tol) {
    require_params(p);
    if (!f.evaluator) throw domain_error("forward source has no evaluator");
    if (!(s >= 0.0)) throw domain_error("spectral point must be >= 0");
    if (!(f.decay_exponent > p.a))
        throw nonconvergence_error(
            "source must decay faster than x^{-a} against the kernel");
    const double a = p.a;
    const double b = p.b;
    const double norm = 1.0 / gamma_real(a + b);
    const auto source = f.evaluator;
    IntegrandHandle h;
    h.evaluator = [p, s, a, b, norm, source](double t) {
        if (!(t > 0.0)) return 0.0;
        const SinhPoint pt = sinh_weight_point(a, b, t);
        const double fx = source(pt.x);
        if (fx == 0.0) return 0.0;
        // Measure last: fx * kern may underflow harmlessly, while scaling by
        // the large measure factor first could overflow.
        return norm * fx * kern(p, s, pt.x) * pt.measure;
    };
    h.decay_exponent = kSuperpolynomialDecay;
    return integrate_halfline(h, tol).value;
}

double j_inverse(const JParams& p, const JSource& g, double x, double tol) {
    require_params(p);
    if (!g.evaluator) throw domain_error("inverse image has no evaluator");
    if (!(x >= 0.0)) throw domain_error("evaluation point must be >= 0");
    const double weight_growth = 2.0 * p.a + 2.0 * p.b - 1.0;
    double combined = kSuperpolynomialDecay;
    if (g.decay_exponent < kSuperpolynomialDecay)
        combined = g.decay_exponent - weight_growth;
    const double norm = 1.0 / (2.0 * kPi * gamma_real(p.a + p.b));
    const auto image = g.evaluator;
    IntegrandHandle h;
    h.evaluator = [p, x, norm, image](double s) {
        if (!(s > 0.0)) return 0.0;
        const double gs = image(s);
        if (gs == 0.0) return 0.0;
        return norm * gs * kern(p, s, x) * std::exp(log_spectral_weight(p, s));
    };
    h.even = true;
    h.decay_exponent = combined;
    return integrate_halfline(h, tol).value;
}

ImagePair make_image_pair(PairId id, const JParams& p, const ParamMap& extra) {
    require_params(p);
    const double a = p.a;
    const double b = p.b;
    ImagePair pair;
    pair.id = id;
    pair.params = p;
    pair.extra = extra;
    switch (id) {
    case PairId::L11A: {
        const double c = extra_param(extra, "c");
        if (!(c > 0.0)) throw domain_error("pair parameter c must be positive");
        pair.source.evaluator = [a, c](double x) {
            return std::pow(1.0 + x, -a - c);
        };
        pair.source.decay_exponent = a + c;
        const double norm = 1.0 / (gamma_real(c + a) * gamma_real(c + b));
        pair.image = [c, norm](double s) { return norm * abs_sq_gamma(c, s); };
        pair.image_decay_exponent = kSuperpolynomialDecay;
        break;
    }
    case PairId::L11B: {
        const double c = extra_param(extra, "c");
        const double z = extra_param(extra, "z");
        if (!(c > 0.0) || !(z > 0.0))
            throw domain_error("pair parameters c, z must be positive");
        pair.source.evaluator = [a, b, c, z](double x) {
            return std::pow(1.0 + x, b - a) * std::pow(x + z, -c - b);
        };
        pair.source.decay_exponent = a + c;
        const double norm = 1.0 / (gamma_real(c + a) * gamma_real(c + b));
        pair.image = [a, c, z, norm](double s) {
            return norm * abs_sq_gamma(c, s) *
                   conjugate_f21_below_one(c, c + a, s, 1.0 - z);
        };
        pair.image_decay_exponent = kSuperpolynomialDecay;
        break;
    }
    case PairId::L11C: {
        const double u = extra_param(extra, "u");
        if (!(u > 0.0)) throw domain_error("pair parameter u must be positive");
        if (!(u < b))
            throw domain_error(
                "u must stay below b or the source is not integrable");
        pair.source.evaluator = [a, u](double x) {
            return std::pow(x, -u - a);
        };
        pair.source.decay_exponent = u + a;
        const double norm = gamma_real(b - u) / gamma_real(a + u);
        pair.image = [b, u, norm](double s) {
            return norm * abs_sq_gamma(u, s) / abs_sq_gamma(b, s);
        };
        pair.image_decay_exponent = 2.0 * (b - u);
        break;
    }
    case PairId::L12A: {
        const double q1 = extra_param(extra, "p");
        const double q2 = extra_param(extra, "q");
        const double y = extra_param(extra, "y");
        if (!(q1 > 0.0) || !(q2 > 0.0) || !(y > 0.0))
            throw domain_error("pair parameters p, q, y must be positive");
        pair.source.evaluator = [a, b, q1, q2, y](double x) {
            return f21_neg_axis(q1 + b, q2 + b, a + b, x / y).real() *
                   std::pow(1.0 + x, b - a);
        };
        pair.source.decay_exponent = a + std::min(q1, q2);
        const double norm =
            std::pow(y, b + q1) * gamma_real(a + b) /
            (gamma_real(q1 + q2) * gamma_real(q1 + b) * gamma_real(q2 + b));
        pair.image = [a, q1, q2, y, norm](double s) {
            return norm * abs_sq_gamma(q1, s) * abs_sq_gamma(q2, s) /
                   abs_sq_gamma(a, s) *
                   conjugate_f21_below_one(q1, q1 + q2, s, 1.0 - y);
        };
        pair.image_decay_exponent = kSuperpolynomialDecay;
        break;
    }
    case PairId::L12B: {
        const double q1 = extra_param(extra, "p");
        const double q2 = extra_param(extra, "q");
        if (!(q1 > 0.0) || !(q2 > 0.0))
            throw domain_error("pair parameters p, q must be positive");
        pair.source.evaluator = [a, b, q1, q2](double x) {
            return f21_neg_axis(q1 + b, q2 + b, a + b, x).real() *
                   std::pow(1.0 + x, b - a);
        };
        pair.source.decay_exponent = a + std::min(q1, q2);
        const double norm =
            gamma_real(a + b) /
            (gamma_real(q1 + q2) * gamma_real(q1 + b) * gamma_real(q2 + b));
        pair.image = [a, q1, q2, norm](double s) {
            return norm * abs_sq_gamma(q1, s) * abs_sq_gamma(q2, s) /
                   abs_sq_gamma(a, s);
        };
        pair.image_decay_exponent = kSuperpolynomialDecay;
        break;
    }
    case PairId::L12C: {
        const double c = extra_param(extra, "c");
        const double d = extra_param(extra, "d");
        if (!(c > 0.0) || !(d > 0.0))
            throw domain_error("pair parameters c, d must be positive");
        pair.source.evaluator = [a, b, c, d](double x) {
            return f21_neg_axis(a + c, a + d, a + b + c + d, x).real();
        };
        pair.source.decay_exponent = a + std::min(c, d);
        const double norm =
            gamma_real(a + b + c + d) /
            (gamma_real(a + c) * gamma_real(a + d) * gamma_real(b + c) *
             gamma_real(b + d) * gamma_real(c + d));
        pair.image = [c, d, norm](double s) {
            return norm * abs_sq_gamma(c, s) * abs_sq_gamma(d, s);
        };
        pair.image_decay_exponent = kSuperpolynomialDecay;
        break;
    }
    }
    return pair;
}

PlancherelSides plancherel_pair(const JParams& p, const ImagePair& f1,
                                const ImagePair& f2, double tol) {
    require_params(p);
    if (f1.params.a != p.a || f1.params.b != p.b || f2.params.a != p.a ||
        f2.params.b != p.b)
        throw domain_error(
            "image pairs must carry the same transform parameters");
    if (!f1.source.evaluator || !f2.source.evaluator || !f1.image || !f2.image)
        throw domain_error("image pair is missing an evaluator");
    const double a = p.a;
    const double b = p.b;

    const double source_decay =
        f1.source.decay_exponent + f2.source.decay_exponent;
    if (!(source_decay > 2.0 * a))
        throw nonconvergence_error(
            "combined source decay too slow for the pairing integral");
    const auto s1 = f1.source.evaluator;
    const auto s2 = f2.source.evaluator;
    IntegrandHandle hx;
    hx.evaluator = [a, b, s1, s2](double t) {
        if (!(t > 0.0)) return 0.0;
        const SinhPoint pt = sinh_weight_point(a, b, t);
        const double v1 = s1(pt.x);
        if (v1 == 0.0) return 0.0;
        const double v2 = s2(pt.x);
        if (v2 == 0.0) return 0.0;
        return v1 * v2 * pt.measure;
    };
    hx.decay_exponent = kSuperpolynomialDecay;

    const double weight_growth = 2.0 * a + 2.0 * b - 1.0;
    double image_decay = kSuperpolynomialDecay;
    if (f1.image_decay_exponent < kSuperpolynomialDecay &&
        f2.image_decay_exponent < kSuperpolynomialDecay)
        image_decay = f1.image_decay_exponent + f2.image_decay_exponent -
                      weight_growth;
    const auto g1 = f1.image;
    const auto g2 = f2.image;
    IntegrandHandle hs;
    hs.evaluator = [p, g1, g2](double s) {
        if (!(s > 0.0)) return 0.0;
        const double v1 = g1(s);
        if (v1 == 0.0) return 0.0;
        const double v2 = g2(s);
        if (v2 == 0.0) return 0.0;
        return v1 * v2 * std::exp(log_spectral_weight(p, s)) / (2.0 * kPi);
    };
    hs.even = true;
    hs.decay_exponent = image_decay;

    PlancherelSides sides;
    sides.lhs = integrate_halfline(hx, tol).value;
    sides.rhs = integrate_halfline(hs, tol).value;
    return sides;
}

double image_residual(PairId id, const ParamMap& extra, const JParams& p,
                      const std::vector<double>& s_grid, double tol) {
    const ImagePair pair = make_image_pair(id, p, extra);
    double worst = 0.0;
    for (double s : s_grid) {
        const double numeric = j_forward(p, pair.source, s, tol);
        const double closed = pair.image(s);
        const double scale = std::max(std::abs(numeric), std::abs(closed));
        if (scale > 0.0)
            worst = std::max(worst, std::abs(numeric - closed) / scale);
    }
    return worst;
}

VerificationReport section4_verify(IdentityId id, const ParamMap& params,
                                   double tol) {
    switch (id) {
    case IdentityId::EQ_4_1:
    case IdentityId::EQ_4_2:
    case IdentityId::EQ_4_3:
    case IdentityId::EQ_4_3_DIAG:
    case IdentityId::EQ_4_4:
        return verify(id, params, tol);
    default:
        throw domain_error(std::string(identity_name(id)) +
                           " is not an index-integral identity");
    }
}

} // namespace betaint
