#include "betaint/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "betaint/errors.hpp"

namespace betaint {

namespace {

constexpr int kMaxSeriesTerms = 1000000;

// Digamma for real argument, asymptotic expansion after shifting to x >= 10.
double digamma_real(double x) {
    int which = 0;
    if (x <= 0.0 && detail::near_nonpositive_integer(x, 1e-12, &which)) {
        throw pole_error("digamma pole at nonpositive integer", ComplexValue(x, 0.0));
    }
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi*cot(pi*x)
        return digamma_real(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli tail B_2/(2x^2) + ... up to B_14 term, below 1e-16 for x >= 10.
    double series = inv2 * (1.0 / 12.0
                  - inv2 * (1.0 / 120.0
                  - inv2 * (1.0 / 252.0
                  - inv2 * (1.0 / 240.0
                  - inv2 * (1.0 / 132.0
                  - inv2 * (691.0 / 32760.0
                  - inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

bool is_real_integer(ComplexValue z, double tol, int* out) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > tol) return false;
    if (out) *out = static_cast<int>(r);
    return true;
}

// Smallest termination index among numerator parameters that sit within
// 1e-12 of a nonpositive integer, or -1 when the series does not terminate.
int termination_index(const std::vector<ComplexValue>& num) {
    int best = -1;
    for (const ComplexValue& a : num) {
        int m = 0;
        if (std::abs(a.imag()) <= 1e-12 &&
            detail::near_nonpositive_integer(a.real(), 1e-12, &m)) {
            const int n = -m;
            if (best < 0 || n < best) best = n;
        }
    }
    return best;
}

EvalResult sum_terminating(const SeriesSpec& spec, int n_last) {
    // Denominator parameter hitting a nonpositive integer before the series
    // ends would divide by zero.
    for (const ComplexValue& d : spec.denominator_params) {
        int m = 0;
        if (std::abs(d.imag()) <= 1e-12 &&
            detail::near_nonpositive_integer(d.real(), 1e-12, &m)) {
            if (-m < n_last) {
                throw pole_error("denominator parameter truncates before series ends", d);
            }
        }
    }
    ComplexValue term = 1.0;
    ComplexValue sum = 1.0;
    for (int k = 0; k < n_last; ++k) {
        ComplexValue ratio = spec.argument / static_cast<double>(k + 1);
        for (const ComplexValue& a : spec.numerator_params) ratio *= a + static_cast<double>(k);
        for (const ComplexValue& d : spec.denominator_params) {
            const ComplexValue df = d + static_cast<double>(k);
            if (std::abs(df) < 1e-280) {
                throw pole_error("denominator Pochhammer vanished", d);
            }
            ratio /= df;
        }
        term *= ratio;
        sum += term;
    }
    EvalResult res;
    res.value = sum;
    res.terms_used = n_last + 1;
    res.converged = true;
    res.terminating = true;
    return res;
}

EvalResult sum_direct(const SeriesSpec& spec, double tol) {
    ComplexValue term = 1.0;
    ComplexValue sum = 1.0;
    int streak = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        ComplexValue ratio = spec.argument / static_cast<double>(k + 1);
        for (const ComplexValue& a : spec.numerator_params) ratio *= a + static_cast<double>(k);
        for (const ComplexValue& d : spec.denominator_params) {
            const ComplexValue df = d + static_cast<double>(k);
            if (std::abs(df) < 1e-280) {
                throw pole_error("denominator Pochhammer vanished", d);
            }
            ratio /= df;
        }
        term *= ratio;
        sum += term;
        const double scale = std::max(std::abs(sum), 1e-300);
        if (std::abs(term) <= tol * scale) {
            ++streak;
        } else {
            streak = 0;
        }
        if (streak >= 3) {
            const double r = std::abs(ratio);
            if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= tol * scale) {
                EvalResult res;
                res.value = sum;
                res.terms_used = k + 2;
                res.converged = true;
                return res;
            }
        }
    }
    throw nonconvergence_error("hypergeometric series did not settle within term budget");
}

// Partial-sum extrapolation at unit argument. The tail of the partial sums
// obeys S(N) = S_inf - N^{-delta} (c0 + c1/N + c2/N^2 + ...) with
// delta = Re(sum den - sum num) > 0; two staggered four-point fits give the
// limit and a consistency estimate.
EvalResult sum_unit_ladder(const SeriesSpec& spec, double tol, double delta) {
    constexpr std::array<int, 5> kCheckpoints = {1000, 2000, 4000, 8000, 16000};
    std::array<ComplexValue, 5> partial{};
    ComplexValue term = 1.0;
    ComplexValue sum = 1.0;
    std::size_t next = 0;
    for (int k = 0; k < kCheckpoints.back(); ++k) {
        ComplexValue ratio = ComplexValue(1.0) / static_cast<double>(k + 1);
        for (const ComplexValue& a : spec.numerator_params) ratio *= a + static_cast<double>(k);
        for (const ComplexValue& d : spec.denominator_params) {
            const ComplexValue df = d + static_cast<double>(k);
            if (std::abs(df) < 1e-280) {
                throw pole_error("denominator Pochhammer vanished", d);
            }
            ratio /= df;
        }
        term *= ratio;
        sum += term;
        // after iteration k the sum holds k+2 terms (the leading 1 plus k+1 more)
        if (next < kCheckpoints.size() && k + 2 == kCheckpoints[next]) {
            partial[next] = sum;
            ++next;
        }
    }

    // Partial sums at N terms; if the tail is already below machine noise the
    // last checkpoint is the answer.
    if (std::pow(static_cast<double>(kCheckpoints[0]), -delta) < 1e-18) {
        EvalResult res;
        res.value = partial.back();
        res.terms_used = kCheckpoints.back();
        res.converged = true;
        return res;
    }

    auto fit4 = [&](int j0) -> ComplexValue {
        // rows: S_inf - x*c0 - (x/N)*c1 - (x/N^2)*c2 = S_j, x = N^{-delta}
        double m[4][4];
        ComplexValue rhs[4];
        for (int r = 0; r < 4; ++r) {
            const double n = static_cast<double>(kCheckpoints[j0 + r]);
            const double x = std::pow(n, -delta);
            m[r][0] = 1.0;
            m[r][1] = -x;
            m[r][2] = -x / n;
            m[r][3] = -x / (n * n);
            rhs[r] = partial[j0 + r];
        }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r = col + 1; r < 4; ++r) {
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            }
            std::swap(m[col], m[piv]);
            std::swap(rhs[col], rhs[piv]);
            if (std::abs(m[col][col]) < 1e-300) {
                throw nonconvergence_error("degenerate extrapolation system at unit argument");
            }
            for (int r = col + 1; r < 4; ++r) {
                const double f = m[r][col] / m[col][col];
                for (int c2 = col; c2 < 4; ++c2) m[r][c2] -= f * m[col][c2];
                rhs[r] -= f * rhs[col];
            }
        }
        ComplexValue sol[4];
        for (int r = 3; r >= 0; --r) {
            ComplexValue acc = rhs[r];
            for (int c2 = r + 1; c2 < 4; ++c2) acc -= m[r][c2] * sol[c2];
            sol[r] = acc / m[r][r];
        }
        return sol[0];
    };

    const ComplexValue coarse = fit4(0);
    const ComplexValue fine = fit4(1);
    EvalResult res;
    res.value = fine;
    res.terms_used = kCheckpoints.back();
    const double scale = std::max(std::abs(fine), 1e-300);
    res.converged = std::abs(fine - coarse) <= std::max(tol, 1e-11) * scale;
    return res;
}

} // namespace

EvalResult pfq(const SeriesSpec& spec, double tol) {
    const int n_last = termination_index(spec.numerator_params);
    if (n_last >= 0) {
        return sum_terminating(spec, n_last);
    }
    if (spec.argument == ComplexValue(0.0)) {
        EvalResult res;
        res.value = 1.0;
        res.terms_used = 1;
        res.converged = true;
        return res;
    }
    const double za = std::abs(spec.argument);
    if (za < 1.0) {
        return sum_direct(spec, tol);
    }
    if (std::abs(spec.argument - ComplexValue(1.0)) <= 1e-14) {
        double delta = 0.0;
        for (const ComplexValue& d : spec.denominator_params) delta += d.real();
        for (const ComplexValue& a : spec.numerator_params) delta -= a.real();
        if (delta <= 0.0) {
            throw nonconvergence_error("series diverges at unit argument");
        }
        return sum_unit_ladder(spec, tol, delta);
    }
    throw nonconvergence_error("series argument outside the unit disk");
}

ComplexValue gauss_2f1_unit(ComplexValue a, ComplexValue b, ComplexValue c) {
    const ComplexValue s = c - a - b;
    if (s.real() <= 0.0) {
        throw domain_error("Gauss evaluation needs Re(c-a-b) > 0");
    }
    GammaRatioSpec spec;
    spec.numerator_args = {c, s};
    spec.denominator_args = {c - a, c - b};
    return gamma_ratio(spec);
}

namespace {

// Logarithmic connection case: 2F1(A,B;A+B;w) for real A, B > 0 and
// u = 1 - w in (0, 1/4]:
//   Gamma(A+B)/(Gamma(A)Gamma(B)) * sum_k (A)_k (B)_k / (k!)^2
//     * (2 psi(k+1) - psi(A+k) - psi(B+k) - log u) * u^k.
double f21_log_case(double a, double b, double u) {
    const double log_u = std::log(u);
    double poch = 1.0;
    double psi_a = digamma_real(a);
    double psi_b = digamma_real(b);
    double psi_k = -0.57721566490153286061; // psi(1)
    double sum = 0.0;
    int streak = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const double term = poch * (2.0 * psi_k - psi_a - psi_b - log_u);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++streak >= 3) break;
        } else {
            streak = 0;
        }
        const double kk = static_cast<double>(k);
        poch *= (a + kk) * (b + kk) / ((kk + 1.0) * (kk + 1.0)) * u;
        psi_a += 1.0 / (a + kk);
        psi_b += 1.0 / (b + kk);
        psi_k += 1.0 / (kk + 1.0);
    }
    GammaRatioSpec ratio;
    ratio.numerator_args = {ComplexValue(a + b, 0.0)};
    ratio.denominator_args = {ComplexValue(a, 0.0), ComplexValue(b, 0.0)};
    return gamma_ratio(ratio).real() * sum;
}

// 2F1(A,B;C;w) for w in (3/4, 1) through the 1-w connection. u is 1-w
// computed without cancellation (the caller knows it exactly as 1/(1+x)),
// which keeps the u^{delta} phase and the log case accurate when w is within
// a few ulps of 1.
ComplexValue f21_connection(ComplexValue a, ComplexValue b, ComplexValue c,
                            double w, double u) {
    const ComplexValue delta = c - a - b;
    int m = 0;
    const bool integer_delta = is_real_integer(delta, 1e-12, &m);
    const double dist = std::abs(delta - ComplexValue(std::round(delta.real()), 0.0));
    const bool near_integer =
        std::abs(delta.imag()) < 1e-6 && dist < 1e-6;

    if (integer_delta && m == 0 &&
        std::abs(a.imag()) <= 1e-12 && std::abs(b.imag()) <= 1e-12) {
        return ComplexValue(f21_log_case(a.real(), b.real(), u), 0.0);
    }
    if (integer_delta || near_integer) {
        // Degenerate or nearly degenerate connection: fall back to the plain
        // series, which is still fast for the arguments reaching this path.
        if (w > 0.999) {
            throw nonconvergence_error("connection formula degenerates too close to unit argument");
        }
        SeriesSpec direct;
        direct.numerator_params = {a, b};
        direct.denominator_params = {c};
        direct.argument = w;
        return pfq(direct, 5e-16).value;
    }

    GammaRatioSpec g1;
    g1.numerator_args = {c, delta};
    g1.denominator_args = {c - a, c - b};
    GammaRatioSpec g2;
    g2.numerator_args = {c, -delta};
    g2.denominator_args = {a, b};

    SeriesSpec s1;
    s1.numerator_params = {a, b};
    s1.denominator_params = {ComplexValue(1.0) - delta};
    s1.argument = u;
    SeriesSpec s2;
    s2.numerator_params = {c - a, c - b};
    s2.denominator_params = {ComplexValue(1.0) + delta};
    s2.argument = u;

    return gamma_ratio(g1) * pfq(s1, 5e-16).value +
           std::pow(ComplexValue(u, 0.0), delta) * gamma_ratio(g2) * pfq(s2, 5e-16).value;
}

} // namespace

ComplexValue f21_neg_axis(ComplexValue a, ComplexValue b, ComplexValue c,
                          double x) {
    if (x < 0.0) {
        throw domain_error("f21_neg_axis requires x >= 0");
    }
    if (x == 0.0) {
        return ComplexValue(1.0, 0.0);
    }
    int m = 0;
    if (std::abs(c.imag()) <= 1e-12 &&
        detail::near_nonpositive_integer(c.real(), 1e-12, &m)) {
        throw pole_error("lower parameter at nonpositive integer", c);
    }

    // Pfaff map to w in (0,1): keep the parameter of smaller magnitude real
    // part in front.
    ComplexValue keep = a;
    ComplexValue swap = b;
    if (std::abs(b.real()) < std::abs(a.real())) {
        keep = b;
        swap = a;
    }
    const double w = x / (1.0 + x);
    // 1 - w without cancellation: w saturates to 1.0 for x beyond ~9e15 while
    // the reciprocal stays exact, and the connection needs the true gap.
    const double u = 1.0 / (1.0 + x);
    const ComplexValue prefactor = std::pow(ComplexValue(1.0 + x, 0.0), -keep);
    const ComplexValue first = keep;
    const ComplexValue second = c - swap;

    // A terminating transformed series is exact at any w.
    SeriesSpec transformed;
    transformed.numerator_params = {first, second};
    transformed.denominator_params = {c};
    transformed.argument = w;
    if (termination_index(transformed.numerator_params) >= 0 || w <= 0.75) {
        return prefactor * pfq(transformed, 5e-16).value;
    }
    return prefactor * f21_connection(first, second, c, w, u);
}

double f21_conjugate_kernel(double p, double base, double s, double x) {
    s = std::abs(s);
    const double w = x / (1.0 + x);
    if (w > 0.75 && s < 0.02) {
        // The connection formula loses accuracy as c-a-b = -2is approaches 0;
        // the kernel is analytic and even in s, so interpolate in s^2 through
        // the exact logarithmic evaluation at s = 0.
        constexpr std::array<double, 4> kNodes = {0.0, 0.02, 0.04, 0.06};
        std::array<double, 4> u{};
        std::array<double, 4> f{};
        for (std::size_t j = 0; j < kNodes.size(); ++j) {
            u[j] = kNodes[j] * kNodes[j];
            f[j] = f21_neg_axis(ComplexValue(p, kNodes[j]),
                                ComplexValue(p, -kNodes[j]),
                                ComplexValue(base, 0.0), x)
                       .real();
        }
        const double t = s * s;
        double acc = 0.0;
        for (std::size_t j = 0; j < kNodes.size(); ++j) {
            double basis = 1.0;
            for (std::size_t l = 0; l < kNodes.size(); ++l) {
                if (l != j) basis *= (t - u[l]) / (u[j] - u[l]);
            }
            acc += f[j] * basis;
        }
        return acc;
    }
    const ComplexValue v = f21_neg_axis(ComplexValue(p, s), ComplexValue(p, -s),
                                        ComplexValue(base, 0.0), x);
    return v.real();
}

} // namespace betaint
