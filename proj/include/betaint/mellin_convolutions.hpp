#pragma once

namespace betaint {

// Two-sided verification of the classical Mellin-type integrals of Gauss
// hypergeometric functions: each check evaluates the left side by direct
// quadrature and the right side by its contour-integral or closed form, and
// reports both values with their relative disagreement. Out-of-domain
// parameters are a domain_error, not a failed check.
struct TwoSidedCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_error = 0.0;
};

// int_0^inf x^{alpha-1} (x+z)^{-rho} 2F1(p,q;r;-x) dx
//   = z^{alpha-rho} Gamma(r)/(Gamma(p)Gamma(q)Gamma(rho))
//     * (1/2pi i) int Gamma(alpha+s)Gamma(p+s)Gamma(q+s)
//                     Gamma(rho-alpha-s)Gamma(-s)/Gamma(r+s) z^{s} ds.
// Requires all parameters positive and alpha < rho + min(p, q).
TwoSidedCheck power_gauss_mellin_check(double alpha, double rho, double p,
                                       double q, double r, double z,
                                       double tol);

// int_0^inf x^{alpha-1} 2F1(p,q;r;-omega x) 2F1(u,v;w;-omega_tilde x) dx
// against the contour form with argument omega/omega_tilde. Requires all
// parameters positive and alpha < min(p,q) + min(u,v), which also guarantees
// a straight separating contour for the right side.
TwoSidedCheck gauss_product_mellin_check(double alpha, double p, double q,
                                         double r, double u, double v,
                                         double w, double omega,
                                         double omega_tilde, double tol);

// The matched case alpha = r of the product integral, whose right side
// collapses to gamma factors times 2F1(p-r+u, q-r+u; p+q+u+v-2r;
// 1-omega/omega_tilde). Requires all parameters positive and
// r < min(p,q) + min(u,v).
TwoSidedCheck matched_gauss_product_check(double p, double q, double r,
                                          double u, double v, double omega,
                                          double omega_tilde, double tol);

// int_0^1 z^{mu-1} (1-z)^{nu-1} 2F1(alpha,beta;nu;1-z) 2F1(phi,psi;xi;1-z) dz
// against its contour form. Requires mu, nu, phi, psi, xi-phi, xi-psi,
// mu+nu-alpha, mu+nu-beta positive, integrability of the z -> 0 endpoint,
// and a nonempty contour gap when xi-phi-psi < 0.
TwoSidedCheck jacobi_weight_product_check(double mu, double nu, double alpha,
                                          double beta, double phi, double psi,
                                          double xi, double tol);

} // namespace betaint
