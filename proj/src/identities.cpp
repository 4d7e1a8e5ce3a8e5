#include "betaint/identity_catalog.hpp"

#include <chrono>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "betaint/errors.hpp"
#include "betaint/gamma.hpp"
#include "betaint/hypergeometric.hpp"

namespace betaint {

namespace {

double param(const ParamMap& params, const char* name) {
    auto it = params.find(name);
    if (it == params.end())
        throw domain_error(std::string("missing parameter ") + name);
    return it->second;
}

bool all_positive(const ParamMap& params, std::initializer_list<const char*> names) {
    for (const char* n : names) {
        auto it = params.find(n);
        if (it == params.end() || !(it->second > 0.0)) return false;
    }
    return true;
}

// Real gamma-ratio bracket prod Gamma(num) / prod Gamma(den), log-space.
double greal(std::initializer_list<double> num, std::initializer_list<double> den) {
    GammaRatioSpec spec;
    for (double x : num) spec.numerator_args.push_back(ComplexValue(x, 0.0));
    for (double x : den) spec.denominator_args.push_back(ComplexValue(x, 0.0));
    return gamma_ratio(spec).real();
}

// log(1/|Gamma(2is)|^2) = log(2 s sinh(2 pi s)/pi) for s > 0, overflow-free.
double log_inv_gamma2is_sq(double s) {
    return std::log(s / kPi) + 2.0 * kPi * s + std::log1p(-std::exp(-4.0 * kPi * s));
}

// log of prod |Gamma(n_j+is)|^2 / (|Gamma(2is)|^2 prod |Gamma(d_k+is)|^2),
// s > 0. Summed in log space so six-factor weights survive far out on the
// half-line where each factor alone would underflow.
double log_even_weight(double s, const std::vector<double>& num,
                       const std::vector<double>& den) {
    double acc = log_inv_gamma2is_sq(s);
    for (double a : num) acc += 2.0 * log_gamma(ComplexValue(a, s)).real();
    for (double b : den) acc -= 2.0 * log_gamma(ComplexValue(b, s)).real();
    return acc;
}

// (1/2pi) int_0^inf of the even gamma weight, the storage convention for
// every |prod Gamma / Gamma(2is)|^2 identity in the catalog.
QuadResult even_weight_integral(const std::vector<double>& num,
                                const std::vector<double>& den, double tol) {
    IntegrandHandle handle;
    handle.evaluator = [num, den](double s) {
        if (!(s > 0.0)) return 0.0;
        return std::exp(log_even_weight(s, num, den)) / (2.0 * kPi);
    };
    handle.even = true;
    const DecayEstimate est = gamma_weight_decay(num, den, true);
    handle.decay_exponent = est.exponential ? kSuperpolynomialDecay : -est.power;
    return integrate_halfline(handle, tol);
}

// Same integral with extra bounded kernel factors multiplied in; the decay
// class of the gamma weight is unchanged.
QuadResult kernel_weight_integral(const std::vector<double>& num,
                                  const std::function<double(double)>& kernel,
                                  double tol) {
    IntegrandHandle handle;
    handle.evaluator = [num, kernel](double s) {
        if (!(s > 0.0)) return 0.0;
        return std::exp(log_even_weight(s, num, {})) * kernel(s) / (2.0 * kPi);
    };
    handle.even = true;
    handle.decay_exponent = kSuperpolynomialDecay;
    return integrate_halfline(handle, tol);
}

// 2 pi s / sin(2 pi s) * prod_k 1/(Gamma(a_k+s) Gamma(a_k-s)): even, regular
// at s = 0, simple poles at the half-integers, algebraic decay of order
// 2 sum(a) - 5. Computed in log space with sign tracking; a gamma pole in the
// denominator is a zero of the weight.
double askey_weight(const std::vector<double>& a, double s) {
    const double head = s == 0.0 ? 1.0 : 2.0 * kPi * s / sin_pi(2.0 * s);
    double log_mag = 0.0;
    int sign = 1;
    for (double ak : a) {
        for (double arg : {ak + s, ak - s}) {
            int which;
            if (detail::near_nonpositive_integer(arg, 1e-12, &which)) return 0.0;
            int factor_sign;
            log_mag += log_abs_gamma_real(arg, &factor_sign);
            sign *= factor_sign;
        }
    }
    return head * sign * std::exp(-log_mag);
}

// Dougall lattice term (alpha+n) / prod_j Gamma(a_j+alpha+n) Gamma(a_j-alpha-n).
double dougall_term(const std::vector<double>& a, double alpha, long long n) {
    const double t = alpha + static_cast<double>(n);
    double log_mag = 0.0;
    int sign = 1;
    for (double aj : a) {
        for (double arg : {aj + t, aj - t}) {
            int which;
            if (detail::near_nonpositive_integer(arg, 1e-12, &which)) return 0.0;
            int factor_sign;
            log_mag += log_abs_gamma_real(arg, &factor_sign);
            sign *= factor_sign;
        }
    }
    return t * sign * std::exp(-log_mag);
}

// 2F1(p+is, p-is; base; -x), with the x = 0 shortcut the kernels hit when an
// auxiliary variable degenerates.
double kern(double p, double base, double s, double x) {
    if (x == 0.0) return 1.0;
    return f21_conjugate_kernel(p, base, s, x);
}

double mb_real(const MBSpec& spec, double tol) {
    return eval_mb(spec, tol).real();
}

// Fixed working tolerance for the contour-integral and auxiliary-integral
// factors inside closed forms; comfortably below every comparison tolerance.
constexpr double kRhsTol = 1e-10;

MBSpec spec_2_3(const ParamMap& v) {
    const double a = param(v, "a"), b = param(v, "b"), c = param(v, "c");
    const double d = param(v, "d"), e = param(v, "e"), f = param(v, "f");
    MBSpec spec;
    spec.a_list = {ComplexValue(a + b, 0.0), ComplexValue(a + e, 0.0),
                   ComplexValue(a + f, 0.0)};
    spec.b_list = {ComplexValue(d - a, 0.0), ComplexValue(c - a, 0.0),
                   ComplexValue(0.0, 0.0)};
    spec.c_list = {ComplexValue(c + d, 0.0)};
    spec.d_list = {ComplexValue(a + b + e + f, 0.0)};
    spec.z = 1.0;
    return spec;
}

MBSpec spec_2_4(const ParamMap& v) {
    const double a = param(v, "a"), b = param(v, "b"), p = param(v, "p");
    const double q = param(v, "q"), u = param(v, "u"), w = param(v, "v");
    MBSpec spec;
    spec.a_list = {ComplexValue(u + p, 0.0), ComplexValue(u + q, 0.0),
                   ComplexValue(b + u, 0.0), ComplexValue(a - w, 0.0)};
    spec.b_list = {ComplexValue(w - u, 0.0), ComplexValue(0.0, 0.0)};
    spec.d_list = {ComplexValue(u + a, 0.0), ComplexValue(u + b + p + q, 0.0)};
    spec.z = 1.0;
    return spec;
}

MBSpec spec_2_5(const ParamMap& v) {
    const double a = param(v, "a"), p = param(v, "p"), q = param(v, "q");
    const double u = param(v, "u"), w = param(v, "v");
    MBSpec spec;
    spec.a_list = {ComplexValue(u + p, 0.0), ComplexValue(u + q, 0.0),
                   ComplexValue(a - w, 0.0)};
    spec.b_list = {ComplexValue(w - u, 0.0), ComplexValue(0.0, 0.0)};
    spec.d_list = {ComplexValue(u + a, 0.0)};
    spec.z = 1.0;
    return spec;
}

MBSpec spec_4_4(const ParamMap& v) {
    const double a = param(v, "a"), b = param(v, "b"), c = param(v, "c");
    const double d = param(v, "d"), e = param(v, "e"), y = param(v, "y");
    MBSpec spec;
    spec.a_list = {ComplexValue(a + b, 0.0), ComplexValue(a + c, 0.0),
                   ComplexValue(a + d, 0.0)};
    spec.b_list = {ComplexValue(e - a, 0.0), ComplexValue(0.0, 0.0)};
    spec.d_list = {ComplexValue(a + b + c + d, 0.0)};
    spec.z = 1.0 / (1.0 + y);
    return spec;
}

std::vector<IdentityCase> make_catalog() {
    std::vector<IdentityCase> cat;

    // ---- EQ_0_1: three-parameter beta integral with a confluent denominator
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_1;
        c.name = "EQ_0_1";
        c.description = "three-gamma beta integral with denominator Gamma(b+is)";
        c.param_names = {"a1", "a2", "a3", "b"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a1", "a2", "a3", "b"})) return false;
            return param(v, "b") > param(v, "a1") + param(v, "a2") + param(v, "a3");
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral(
                {param(v, "a1"), param(v, "a2"), param(v, "a3")}, {param(v, "b")},
                tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a1 = param(v, "a1"), a2 = param(v, "a2");
            const double a3 = param(v, "a3"), b = param(v, "b");
            return greal({b - a1 - a2 - a3, a1 + a2, a1 + a3, a2 + a3},
                         {b - a1, b - a2, b - a3});
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_0_2: de Branges-Wilson integral
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_2;
        c.name = "EQ_0_2";
        c.description = "de Branges-Wilson integral";
        c.param_names = {"a1", "a2", "a3", "a4"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a1", "a2", "a3", "a4"});
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral({param(v, "a1"), param(v, "a2"),
                                         param(v, "a3"), param(v, "a4")},
                                        {}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a1 = param(v, "a1"), a2 = param(v, "a2");
            const double a3 = param(v, "a3"), a4 = param(v, "a4");
            return greal({a1 + a2, a1 + a3, a1 + a4, a2 + a3, a2 + a4, a3 + a4},
                         {a1 + a2 + a3 + a4});
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_0_3: Second Barnes lemma (real-axis form)
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_3;
        c.name = "EQ_0_3";
        c.description = "Second Barnes lemma on the real axis";
        c.param_names = {"a1", "a2", "b1", "b2", "b3"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a1", "a2", "b1", "b2", "b3"});
        };
        // The integrand is not a squared modulus; with real parameters it is
        // conjugate-symmetric in t, so the line integral folds to twice the
        // real part on [0, inf) and is real without being pointwise positive.
        c.lhs = [](const ParamMap& v, double tol) {
            const double a1 = param(v, "a1"), a2 = param(v, "a2");
            const double b1 = param(v, "b1"), b2 = param(v, "b2");
            const double b3 = param(v, "b3");
            const double total = a1 + a2 + b1 + b2 + b3;
            IntegrandHandle handle;
            handle.evaluator = [a1, a2, b1, b2, b3, total](double t) {
                const ComplexValue it(0.0, t);
                const ComplexValue log_val =
                    log_gamma(a1 - it) + log_gamma(a2 - it) + log_gamma(b1 + it) +
                    log_gamma(b2 + it) + log_gamma(b3 + it) - log_gamma(total + it);
                return std::exp(log_val).real() / kPi;
            };
            handle.even = true;
            handle.decay_exponent = kSuperpolynomialDecay;
            return integrate_halfline(handle, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a1 = param(v, "a1"), a2 = param(v, "a2");
            const double b1 = param(v, "b1"), b2 = param(v, "b2");
            const double b3 = param(v, "b3");
            const double s12 = a1 + a2;
            return greal({a1 + b1, a1 + b2, a1 + b3, a2 + b1, a2 + b2, a2 + b3},
                         {s12 + b1 + b2, s12 + b1 + b3, s12 + b2 + b3});
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_0_4: Nassrallah-Rahman integral
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_4;
        c.name = "EQ_0_4";
        c.description = "Nassrallah-Rahman integral";
        c.param_names = {"a1", "a2", "a3", "a4", "a5"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a1", "a2", "a3", "a4", "a5"});
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const std::vector<double> a = {param(v, "a1"), param(v, "a2"),
                                           param(v, "a3"), param(v, "a4"),
                                           param(v, "a5")};
            const double total = a[0] + a[1] + a[2] + a[3] + a[4];
            return even_weight_integral(a, {total}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const std::vector<double> a = {param(v, "a1"), param(v, "a2"),
                                           param(v, "a3"), param(v, "a4"),
                                           param(v, "a5")};
            const double total = a[0] + a[1] + a[2] + a[3] + a[4];
            GammaRatioSpec spec;
            for (std::size_t k = 0; k < 5; ++k) {
                for (std::size_t l = k + 1; l < 5; ++l)
                    spec.numerator_args.push_back(ComplexValue(a[k] + a[l], 0.0));
                spec.denominator_args.push_back(ComplexValue(total - a[k], 0.0));
            }
            return gamma_ratio(spec).real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_0_5: Askey integral, principal value over the half-integer lattice
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_5;
        c.name = "EQ_0_5";
        c.description = "Askey principal-value integral";
        c.param_names = {"a1", "a2", "a3", "a4"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a1", "a2", "a3", "a4"})) return false;
            return param(v, "a1") + param(v, "a2") + param(v, "a3") +
                       param(v, "a4") >
                   3.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return askey_pv_lhs(v, 0.37, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const std::vector<double> a = {param(v, "a1"), param(v, "a2"),
                                           param(v, "a3"), param(v, "a4")};
            GammaRatioSpec spec;
            spec.numerator_args.push_back(
                ComplexValue(a[0] + a[1] + a[2] + a[3] - 3.0, 0.0));
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = k + 1; l < 4; ++l)
                    spec.denominator_args.push_back(
                        ComplexValue(a[k] + a[l] - 1.0, 0.0));
            return gamma_ratio(spec).real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_0_6: Dougall bilateral sum
    {
        IdentityCase c;
        c.id = IdentityId::EQ_0_6;
        c.name = "EQ_0_6";
        c.description = "Dougall bilateral series";
        c.param_names = {"a1", "a2", "a3", "a4", "alpha"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a1", "a2", "a3", "a4"})) return false;
            const double alpha = param(v, "alpha");
            if (!(alpha > 0.0 && alpha < 1.0)) return false;
            if (std::abs(sin_pi(2.0 * alpha)) < 1e-12) return false;
            return param(v, "a1") + param(v, "a2") + param(v, "a3") +
                       param(v, "a4") >
                   3.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const std::vector<double> a = {param(v, "a1"), param(v, "a2"),
                                           param(v, "a3"), param(v, "a4")};
            const double alpha = param(v, "alpha");
            return bilateral_sum(
                [a, alpha](long long n) { return dougall_term(a, alpha, n); },
                tol);
        };
        c.rhs = [](const ParamMap& v) {
            const std::vector<double> a = {param(v, "a1"), param(v, "a2"),
                                           param(v, "a3"), param(v, "a4")};
            const double alpha = param(v, "alpha");
            GammaRatioSpec spec;
            spec.numerator_args.push_back(
                ComplexValue(a[0] + a[1] + a[2] + a[3] - 3.0, 0.0));
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = k + 1; l < 4; ++l)
                    spec.denominator_args.push_back(
                        ComplexValue(a[k] + a[l] - 1.0, 0.0));
            return sin_pi(2.0 * alpha) / (2.0 * kPi) * gamma_ratio(spec).real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_2_1: beta integral on the half-line
    {
        IdentityCase c;
        c.id = IdentityId::EQ_2_1;
        c.name = "EQ_2_1";
        c.description = "half-line beta integral";
        c.param_names = {"a", "b", "c", "d"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a", "b", "c", "d"});
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double ab = param(v, "a") + param(v, "b");
            const double cd = param(v, "c") + param(v, "d");
            IntegrandHandle handle;
            handle.evaluator = [ab, cd](double x) {
                if (!(x > 0.0)) return 0.0;
                return std::exp((ab - 1.0) * std::log(x) -
                                (ab + cd) * std::log1p(x));
            };
            handle.decay_exponent = cd + 1.0;
            return integrate_halfline(handle, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double ab = param(v, "a") + param(v, "b");
            const double cd = param(v, "c") + param(v, "d");
            return greal({ab, cd}, {ab + cd});
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_2_2: five-gamma weight vs 3F2(1)
    {
        IdentityCase c;
        c.id = IdentityId::EQ_2_2;
        c.name = "EQ_2_2";
        c.description = "five-parameter weight integral with 3F2(1) closed form";
        c.param_names = {"a", "b", "c", "d", "e"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a", "b", "c", "d", "e"});
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral({param(v, "a"), param(v, "b"),
                                         param(v, "c"), param(v, "d"),
                                         param(v, "e")},
                                        {}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), e = param(v, "e");
            const double pref = greal({a + b, a + cc, a + d, a + e, b + cc,
                                       b + d, b + e, cc + d, cc + e},
                                      {a + b + cc + d, a + b + cc + e});
            SeriesSpec series;
            series.numerator_params = {ComplexValue(a + cc, 0.0),
                                       ComplexValue(b + cc, 0.0),
                                       ComplexValue(a + b, 0.0)};
            series.denominator_params = {ComplexValue(a + b + cc + d, 0.0),
                                         ComplexValue(a + b + cc + e, 0.0)};
            series.argument = 1.0;
            return pref * pfq(series, 1e-12).value.real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_2_3: six-gamma weight vs contour integral
    {
        IdentityCase c;
        c.id = IdentityId::EQ_2_3;
        c.name = "EQ_2_3";
        c.description = "six-parameter weight integral with contour-integral form";
        c.param_names = {"a", "b", "c", "d", "e", "f"};
        c.domain_check = [](const ParamMap& v) {
            return all_positive(v, {"a", "b", "c", "d", "e", "f"});
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral(
                {param(v, "a"), param(v, "b"), param(v, "c"), param(v, "d"),
                 param(v, "e"), param(v, "f")},
                {}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), e = param(v, "e"), f = param(v, "f");
            const double pref = greal(
                {a + cc, a + d, cc + d, b + e, b + f, e + f}, {});
            return pref * mb_real(spec_2_3(v), kRhsTol);
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_2_4: six letters, denominator Gamma(a+is)
    {
        IdentityCase c;
        c.id = IdentityId::EQ_2_4;
        c.name = "EQ_2_4";
        c.description = "five-letter weight with spectral denominator, contour form";
        c.param_names = {"a", "b", "p", "q", "u", "v"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "p", "q", "u", "v"})) return false;
            return param(v, "a") > param(v, "u") && param(v, "a") > param(v, "v");
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral({param(v, "b"), param(v, "p"),
                                         param(v, "q"), param(v, "u"),
                                         param(v, "v")},
                                        {param(v, "a")}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), p = param(v, "p");
            const double q = param(v, "q"), u = param(v, "u"), w = param(v, "v");
            const double pref =
                greal({u + w, p + q, p + b, q + b}, {a - w, a - u});
            return pref * mb_real(spec_2_4(v), kRhsTol);
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_2_5: four letters, denominator Gamma(a+is)
    {
        IdentityCase c;
        c.id = IdentityId::EQ_2_5;
        c.name = "EQ_2_5";
        c.description = "four-letter weight with spectral denominator, contour form";
        c.param_names = {"a", "p", "q", "u", "v"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "p", "q", "u", "v"})) return false;
            return param(v, "a") > param(v, "u") && param(v, "a") > param(v, "v");
        };
        c.lhs = [](const ParamMap& v, double tol) {
            return even_weight_integral(
                {param(v, "p"), param(v, "q"), param(v, "u"), param(v, "v")},
                {param(v, "a")}, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), p = param(v, "p"), q = param(v, "q");
            const double u = param(v, "u"), w = param(v, "v");
            const double pref = greal({u + w, p + q}, {a - w, a - u});
            return pref * mb_real(spec_2_5(v), kRhsTol);
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_4_1: two spectral kernels, elementary closed form
    {
        IdentityCase c;
        c.id = IdentityId::EQ_4_1;
        c.name = "EQ_4_1";
        c.description = "double-kernel index integral with elementary closed form";
        c.param_names = {"a", "b", "c", "x", "y"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "c"})) return false;
            return param(v, "x") >= 0.0 && param(v, "y") >= 0.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double x = param(v, "x"), y = param(v, "y");
            return kernel_weight_integral(
                {a, b, cc},
                [a, b, cc, x, y](double s) {
                    return kern(cc, a + cc, s, y) * kern(b, a + b, s, x);
                },
                tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double x = param(v, "x"), y = param(v, "y");
            return greal({a + b, a + cc, b + cc}, {}) *
                   std::pow(1.0 + x + y, -(b + cc));
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_4_2: one spectral kernel, 2F1 closed form
    {
        IdentityCase c;
        c.id = IdentityId::EQ_4_2;
        c.name = "EQ_4_2";
        c.description = "single-kernel index integral with 2F1 closed form";
        c.param_names = {"a", "b", "c", "d", "y"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "c", "d"})) return false;
            return param(v, "y") >= 0.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y");
            return kernel_weight_integral(
                {a, b, cc, d},
                [a, cc, y](double s) { return kern(cc, a + cc, s, y); }, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y");
            const double pref = greal(
                {a + b, a + cc, a + d, b + cc, b + d, cc + d}, {a + b + cc + d});
            return pref * f21_neg_axis(ComplexValue(b + cc, 0.0),
                                       ComplexValue(cc + d, 0.0),
                                       ComplexValue(a + b + cc + d, 0.0), y)
                              .real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_4_3: two kernels with independent arguments, integral RHS
    {
        IdentityCase c;
        c.id = IdentityId::EQ_4_3;
        c.name = "EQ_4_3";
        c.description = "double-kernel index integral, auxiliary-integral form";
        c.param_names = {"a", "b", "c", "d", "y", "z"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "c", "d"})) return false;
            return param(v, "y") >= 0.0 && param(v, "z") >= 0.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y"), z = param(v, "z");
            return kernel_weight_integral(
                {a, b, cc, d},
                [a, cc, d, y, z](double s) {
                    return kern(cc, a + cc, s, y) * kern(d, a + d, s, z);
                },
                tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y"), z = param(v, "z");
            IntegrandHandle handle;
            handle.evaluator = [a, b, cc, d, y, z](double x) {
                if (!(x > 0.0)) return 0.0;
                return std::exp((a + b - 1.0) * std::log(x) +
                                (b - a) * std::log1p(x) -
                                (b + cc) * std::log(x + y + 1.0) -
                                (b + d) * std::log(x + z + 1.0));
            };
            handle.decay_exponent = cc + d + 1.0;
            const QuadResult q = integrate_halfline(handle, kRhsTol);
            return greal({cc + a, cc + b, d + a, d + b}, {}) * q.value;
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_4_3_DIAG: equal kernel arguments, 2F1 closed form
    {
        IdentityCase c;
        c.id = IdentityId::EQ_4_3_DIAG;
        c.name = "EQ_4_3_DIAG";
        c.description = "double-kernel index integral on the diagonal";
        c.param_names = {"a", "b", "c", "d", "y"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "c", "d"})) return false;
            return param(v, "y") >= 0.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y");
            return kernel_weight_integral(
                {a, b, cc, d},
                [a, cc, d, y](double s) {
                    return kern(cc, a + cc, s, y) * kern(d, a + d, s, y);
                },
                tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), y = param(v, "y");
            const double total = a + b + cc + d;
            const double pref = greal(
                {a + b, a + cc, a + d, b + cc, b + d, cc + d}, {total});
            return pref * f21_neg_axis(ComplexValue(2.0 * b + cc + d, 0.0),
                                       ComplexValue(cc + d, 0.0),
                                       ComplexValue(total, 0.0), y)
                              .real();
        };
        cat.push_back(std::move(c));
    }

    // ---- EQ_4_4: five-gamma weight with one kernel, contour-integral form
    {
        IdentityCase c;
        c.id = IdentityId::EQ_4_4;
        c.name = "EQ_4_4";
        c.description = "five-gamma single-kernel index integral, contour form";
        c.param_names = {"a", "b", "c", "d", "e", "y"};
        c.domain_check = [](const ParamMap& v) {
            if (!all_positive(v, {"a", "b", "c", "d", "e"})) return false;
            return param(v, "y") >= 0.0;
        };
        c.lhs = [](const ParamMap& v, double tol) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), e = param(v, "e"), y = param(v, "y");
            return kernel_weight_integral(
                {a, b, cc, d, e},
                [a, e, y](double s) { return kern(e, e + a, s, y); }, tol);
        };
        c.rhs = [](const ParamMap& v) {
            const double a = param(v, "a"), b = param(v, "b"), cc = param(v, "c");
            const double d = param(v, "d"), e = param(v, "e"), y = param(v, "y");
            const double pref =
                greal({e + a, b + cc, b + d, cc + d}, {}) *
                std::pow(1.0 + y, a - e);
            return pref * mb_real(spec_4_4(v), kRhsTol);
        };
        cat.push_back(std::move(c));
    }

    return cat;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

// True when x is farther than margin from every integer.
bool off_integer(double x, double margin) {
    return std::abs(x - std::round(x)) > margin;
}

} // namespace

const std::vector<IdentityCase>& identity_catalog() {
    static const std::vector<IdentityCase> catalog = make_catalog();
    return catalog;
}

const IdentityCase& identity_case(IdentityId id) {
    return identity_catalog()[static_cast<std::size_t>(id)];
}

const char* identity_name(IdentityId id) { return identity_case(id).name; }

IdentityId identity_from_name(const std::string& name) {
    for (const IdentityCase& c : identity_catalog()) {
        if (name == c.name) return c.id;
    }
    throw domain_error("unknown identity id: " + name);
}

double closed_form(IdentityId id, const ParamMap& params) {
    const IdentityCase& c = identity_case(id);
    if (!c.domain_check(params))
        throw domain_error(std::string(c.name) + ": parameters out of domain");
    return c.rhs(params);
}

QuadResult lhs_numeric(IdentityId id, const ParamMap& params, double tol) {
    const IdentityCase& c = identity_case(id);
    if (!c.domain_check(params))
        throw domain_error(std::string(c.name) + ": parameters out of domain");
    return c.lhs(params, tol);
}

QuadResult askey_pv_lhs(const ParamMap& params, double alpha, double tol) {
    const std::vector<double> a = {param(params, "a1"), param(params, "a2"),
                                   param(params, "a3"), param(params, "a4")};
    const double total = a[0] + a[1] + a[2] + a[3];
    IntegrandHandle handle;
    handle.evaluator = [a](double s) { return askey_weight(a, s); };
    handle.even = true;
    handle.decay_exponent = 2.0 * total - 5.0;
    handle.pole_lattice = PoleLattice{0.5, 0.5};
    return integrate_pv_lattice(handle, alpha, tol);
}

MBSpec rhs_mb_spec(IdentityId id, const ParamMap& params) {
    switch (id) {
    case IdentityId::EQ_2_3:
        return spec_2_3(params);
    case IdentityId::EQ_2_4:
        return spec_2_4(params);
    case IdentityId::EQ_2_5:
        return spec_2_5(params);
    case IdentityId::EQ_4_4:
        return spec_4_4(params);
    default:
        throw domain_error("identity has no contour-integral factor");
    }
}

VerificationReport verify(IdentityId id, const ParamMap& params, double tol) {
    const IdentityCase& c = identity_case(id);
    VerificationReport report;
    report.id = c.name;
    report.params = params;
    report.tolerance = tol;
    report.rel_error = std::numeric_limits<double>::infinity();
    const auto start = std::chrono::steady_clock::now();
    if (!c.domain_check(params)) {
        report.note = "parameters out of domain";
    } else {
        try {
            const QuadResult lhs = c.lhs(params, 0.25 * tol);
            const double rhs = c.rhs(params);
            report.lhs_value = lhs.value;
            report.rhs_value = rhs;
            report.lhs_error_estimate = lhs.abs_error_estimate;
            const double scale =
                std::max(std::abs(lhs.value), std::abs(rhs));
            report.rel_error =
                scale == 0.0 ? 0.0 : std::abs(lhs.value - rhs) / scale;
            report.passed = std::isfinite(lhs.value) && std::isfinite(rhs) &&
                            report.rel_error <= tol;
        } catch (const error& failure) {
            report.note = failure.what();
        }
    }
    const auto end = std::chrono::steady_clock::now();
    report.runtime_seconds =
        std::chrono::duration<double>(end - start).count();
    return report;
}

double symmetry_probe(IdentityId id, const std::string& first,
                      const std::string& second, const ParamMap& params) {
    static const std::vector<std::string> kSym22 = {"a", "b", "c", "d", "e"};
    static const std::vector<std::string> kSym24 = {"b", "p", "q", "u", "v"};
    const std::vector<std::string>* symmetric = nullptr;
    if (id == IdentityId::EQ_2_2) symmetric = &kSym22;
    else if (id == IdentityId::EQ_2_4) symmetric = &kSym24;
    else throw domain_error("symmetry probe defined only for EQ_2_2 and EQ_2_4");
    auto in_set = [symmetric](const std::string& n) {
        for (const std::string& s : *symmetric)
            if (s == n) return true;
        return false;
    };
    if (!in_set(first) || !in_set(second))
        throw domain_error("parameter is not in the symmetric set: " + first +
                           "," + second);
    const double base = closed_form(id, params);
    ParamMap swapped = params;
    std::swap(swapped.at(first), swapped.at(second));
    const double permuted = closed_form(id, swapped);
    const double scale = std::max(std::abs(base), std::abs(permuted));
    return scale == 0.0 ? 0.0 : std::abs(base - permuted) / scale;
}

ParamMap sample_params(IdentityId id, std::mt19937_64& rng) {
    const IdentityCase& c = identity_case(id);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ParamMap v;
        switch (id) {
        case IdentityId::EQ_0_1: {
            for (const char* n : {"a1", "a2", "a3"}) v[n] = uniform(rng, 0.3, 1.2);
            v["b"] = v["a1"] + v["a2"] + v["a3"] + uniform(rng, 1.5, 4.0);
            break;
        }
        case IdentityId::EQ_0_5: {
            for (const char* n : {"a1", "a2", "a3", "a4"})
                v[n] = uniform(rng, 0.3, 1.2);
            const double total = v["a1"] + v["a2"] + v["a3"] + v["a4"];
            // stay clear of the slow-convergence edge of the principal value
            if (total <= 3.8 || total >= 4.8) continue;
            break;
        }
        case IdentityId::EQ_0_6: {
            for (const char* n : {"a1", "a2", "a3", "a4"})
                v[n] = uniform(rng, 1.5, 2.5);
            v["alpha"] = uniform(rng, 0.1, 0.4);
            break;
        }
        case IdentityId::EQ_2_4: {
            for (const char* n : {"b", "p", "q", "u", "v"})
                v[n] = uniform(rng, 0.3, 1.2);
            if (!off_integer(v["v"] - v["u"], 1e-3)) continue;
            if (!off_integer(v["p"] - v["q"], 1e-3) ||
                !off_integer(v["p"] - v["b"], 1e-3) ||
                !off_integer(v["q"] - v["b"], 1e-3))
                continue;
            v["a"] = std::max(v["u"], v["v"]) + uniform(rng, 0.3, 1.2);
            const double av = v["a"] - v["v"];
            if (!off_integer(v["u"] + v["p"] - av, 1e-3) ||
                !off_integer(v["u"] + v["q"] - av, 1e-3) ||
                !off_integer(v["b"] + v["u"] - av, 1e-3))
                continue;
            break;
        }
        case IdentityId::EQ_2_5: {
            for (const char* n : {"p", "q", "u", "v"})
                v[n] = uniform(rng, 0.3, 1.2);
            if (!off_integer(v["v"] - v["u"], 1e-3) ||
                !off_integer(v["p"] - v["q"], 1e-3))
                continue;
            v["a"] = std::max(v["u"], v["v"]) + uniform(rng, 0.3, 1.2);
            const double av = v["a"] - v["v"];
            if (!off_integer(v["u"] + v["p"] - av, 1e-3) ||
                !off_integer(v["u"] + v["q"] - av, 1e-3))
                continue;
            break;
        }
        case IdentityId::EQ_2_3: {
            for (const char* n : {"a", "b", "c", "d", "e", "f"})
                v[n] = uniform(rng, 0.3, 1.2);
            // keep residue series on either side simple-pole only
            if (!off_integer(v["b"] - v["e"], 1e-3) ||
                !off_integer(v["b"] - v["f"], 1e-3) ||
                !off_integer(v["e"] - v["f"], 1e-3) ||
                !off_integer(v["d"] - v["c"], 1e-3) ||
                !off_integer(v["c"] - v["a"], 1e-3) ||
                !off_integer(v["d"] - v["a"], 1e-3))
                continue;
            break;
        }
        default: {
            for (const std::string& n : c.param_names)
                v[n] = uniform(rng, 0.3, 1.2);
            break;
        }
        }
        if (c.domain_check(v)) return v;
    }
    throw error(std::string("sampler failed to find an in-domain point for ") +
                c.name);
}

} // namespace betaint
