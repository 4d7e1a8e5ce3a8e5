#include "betaint/mellin_convolutions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "betaint/errors.hpp"
#include "betaint/gamma.hpp"
#include "betaint/hypergeometric.hpp"
#include "betaint/mellin_barnes.hpp"
#include "betaint/quadrature.hpp"

namespace betaint {

namespace {

// 2F1(a,b;c;w) for real parameters and real w < 1. Nonpositive arguments go
// straight to the negative-axis evaluator; 0 < w < 1 is mapped onto it by
// the Pfaff transformation, so the w -> 1 connection (including logarithmic
// cases) reuses its hardened code path.
double f21_below_one(double a, double b, double c, double w) {
    if (w == 0.0) return 1.0;
    if (w < 0.0) return f21_neg_axis(a, b, c, -w).real();
    const double x = w / (1.0 - w);
    if (!std::isfinite(x)) return gauss_2f1_unit(a, b, c).real();
    return std::pow(1.0 - w, -a) * f21_neg_axis(a, c - b, c, x).real();
}

// int_0^inf f(x) dx with f ~ x^{-tail_exponent} at infinity, integrated as
// x = t^3. The cubic map steepens slow algebraic tails enough that the
// half-line truncation settles well before its cap, and origin powers
// x^{mu-1} stay integrable as t^{3mu-1}.
QuadResult mellin_halfline(const std::function<double(double)>& f,
                           double tail_exponent, double tol) {
    IntegrandHandle h;
    h.evaluator = [f](double t) {
        if (!(t > 0.0)) return 0.0;
        const double v = f(t * t * t);
        return v == 0.0 ? 0.0 : 3.0 * t * t * v;
    };
    h.decay_exponent = 3.0 * tail_exponent - 2.0;
    return integrate_halfline(h, tol);
}

TwoSidedCheck make_check(double lhs, double rhs) {
    TwoSidedCheck out;
    out.lhs = lhs;
    out.rhs = rhs;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    out.rel_error = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
    return out;
}

} // namespace

TwoSidedCheck power_gauss_mellin_check(double alpha, double rho, double p,
                                       double q, double r, double z,
                                       double tol) {
    for (double v : {alpha, rho, p, q, r, z})
        if (!(v > 0.0)) throw domain_error("parameters must be positive");
    if (!(alpha < rho + std::min(p, q)))
        throw domain_error("alpha must stay below rho + min(p, q)");

    const double tail = 1.0 - alpha + rho + std::min(p, q);
    const QuadResult lhs = mellin_halfline(
        [alpha, rho, p, q, r, z](double x) {
            return std::pow(x, alpha - 1.0) * std::pow(x + z, -rho) *
                   f21_neg_axis(p, q, r, x).real();
        },
        tail, tol);

    MBSpec spec;
    spec.a_list = {alpha, p, q};
    spec.b_list = {rho - alpha, 0.0};
    spec.d_list = {r};
    spec.z = 1.0 / z;
    const double prefactor = std::pow(z, alpha - rho) * gamma_real(r) /
                             (gamma_real(p) * gamma_real(q) * gamma_real(rho));
    return make_check(lhs.value, prefactor * eval_mb(spec, tol).real());
}

TwoSidedCheck gauss_product_mellin_check(double alpha, double p, double q,
                                         double r, double u, double v,
                                         double w, double omega,
                                         double omega_tilde, double tol) {
    for (double x : {alpha, p, q, r, u, v, w, omega, omega_tilde})
        if (!(x > 0.0)) throw domain_error("parameters must be positive");
    if (!(alpha < std::min(p, q) + std::min(u, v)))
        throw domain_error("alpha must stay below min(p, q) + min(u, v)");

    const double tail = 1.0 - alpha + std::min(p, q) + std::min(u, v);
    const QuadResult lhs = mellin_halfline(
        [alpha, p, q, r, u, v, w, omega, omega_tilde](double x) {
            return std::pow(x, alpha - 1.0) *
                   f21_neg_axis(p, q, r, omega * x).real() *
                   f21_neg_axis(u, v, w, omega_tilde * x).real();
        },
        tail, tol);

    MBSpec spec;
    spec.a_list = {alpha, u, v};
    spec.b_list = {p - alpha, q - alpha, 0.0};
    spec.c_list = {r - alpha};
    spec.d_list = {w};
    spec.z = omega / omega_tilde;
    const double prefactor =
        std::pow(omega, -alpha) * gamma_real(r) * gamma_real(w) /
        (gamma_real(u) * gamma_real(v) * gamma_real(p) * gamma_real(q));
    return make_check(lhs.value, prefactor * eval_mb(spec, tol).real());
}

TwoSidedCheck matched_gauss_product_check(double p, double q, double r,
                                          double u, double v, double omega,
                                          double omega_tilde, double tol) {
    for (double x : {p, q, r, u, v, omega, omega_tilde})
        if (!(x > 0.0)) throw domain_error("parameters must be positive");
    if (!(r < std::min(p, q) + std::min(u, v)))
        throw domain_error("r must stay below min(p, q) + min(u, v)");

    const double tail = 1.0 - r + std::min(p, q) + std::min(u, v);
    const QuadResult lhs = mellin_halfline(
        [p, q, r, u, v, omega, omega_tilde](double x) {
            return std::pow(x, r - 1.0) *
                   f21_neg_axis(p, q, r, omega * x).real() *
                   f21_neg_axis(u, v, r, omega_tilde * x).real();
        },
        tail, tol);

    const double s2 = p + q + u + v - 2.0 * r;
    const double prefactor =
        std::pow(omega, u - r) * std::pow(omega_tilde, -u) *
        gamma_real(r) * gamma_real(r) * gamma_real(p - r + u) *
        gamma_real(q - r + u) * gamma_real(p - r + v) * gamma_real(q - r + v) /
        (gamma_real(u) * gamma_real(v) * gamma_real(p) * gamma_real(q) *
         gamma_real(s2));
    const double rhs =
        prefactor *
        f21_below_one(p - r + u, q - r + u, s2, 1.0 - omega / omega_tilde);
    return make_check(lhs.value, rhs);
}

TwoSidedCheck jacobi_weight_product_check(double mu, double nu, double alpha,
                                          double beta, double phi, double psi,
                                          double xi, double tol) {
    for (double x : {mu, nu, phi, psi, xi - phi, xi - psi, mu + nu - alpha,
                     mu + nu - beta})
        if (!(x > 0.0))
            throw domain_error(
                "mu, nu, phi, psi, xi-phi, xi-psi, mu+nu-alpha, mu+nu-beta "
                "must be positive");
    const double gap1 = nu - alpha - beta;
    const double gap2 = xi - phi - psi;
    if (!(mu + std::min(0.0, gap1) + std::min(0.0, gap2) > 0.0))
        throw domain_error("integrand not integrable at the lower endpoint");
    if (!(gap2 > -std::min({mu, mu + gap1, phi, psi})))
        throw domain_error("contour gap of the right side is empty");

    auto integrand = [mu, nu, alpha, beta, phi, psi, xi](double z) {
        return std::pow(z, mu - 1.0) * std::pow(1.0 - z, nu - 1.0) *
               f21_below_one(alpha, beta, nu, 1.0 - z) *
               f21_below_one(phi, psi, xi, 1.0 - z);
    };
    // split at 1/2 and fold each half through a square-root map, so both
    // endpoint powers z^{mu-1} and (1-z)^{nu-1} turn into odd powers of the
    // new variable and the panels converge at full order
    const double half = std::sqrt(0.5);
    const QuadResult low = integrate_finite(
        [integrand](double t) {
            return t > 0.0 ? 2.0 * t * integrand(t * t) : 0.0;
        },
        0.0, half, 0.5 * tol);
    const QuadResult high = integrate_finite(
        [integrand](double t) {
            return t > 0.0 ? 2.0 * t * integrand(1.0 - t * t) : 0.0;
        },
        0.0, half, 0.5 * tol);
    const double lhs = low.value + high.value;

    MBSpec spec;
    spec.a_list = {mu, mu + gap1, phi, psi};
    spec.b_list = {0.0, gap2};
    spec.d_list = {nu + mu - alpha, mu + nu - beta};
    spec.z = 1.0;
    const double prefactor = gamma_real(nu) * gamma_real(xi) /
                             (gamma_real(phi) * gamma_real(psi) *
                              gamma_real(xi - phi) * gamma_real(xi - psi));
    return make_check(lhs, prefactor * eval_mb(spec, tol).real());
}

} // namespace betaint
