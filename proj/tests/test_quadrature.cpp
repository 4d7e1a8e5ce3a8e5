#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "betaint/errors.hpp"
#include "betaint/gamma.hpp"
#include "betaint/quadrature.hpp"

using namespace betaint;

namespace {
double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_CASE("finite adaptive panels") {
    const QuadResult q1 = integrate_finite([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(rel(q1.value, 1.0 / 3.0) < 1e-14);
    const QuadResult q2 = integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(rel(q2.value, 2.0) < 1e-12);
    // integrable endpoint singularity
    const QuadResult q3 = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9);
    CHECK(rel(q3.value, 2.0) < 1e-7);
}

TEST_CASE("half-line with superpolynomial decay") {
    IntegrandHandle h;
    h.evaluator = [](double x) { return std::exp(-x); };
    h.decay_exponent = kSuperpolynomialDecay;
    const QuadResult q = integrate_halfline(h, 1e-10);
    CHECK(rel(q.value, 1.0) < 1e-10);
    CHECK(q.abs_error_estimate >= std::abs(q.value - 1.0));
}

TEST_CASE("half-line beta integrand") {
    // x^{a+b-1}(1+x)^{-a-b-c-d} at a=b=c=d=1/2: integral B(1,1) = 1
    IntegrandHandle h;
    h.evaluator = [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); };
    h.decay_exponent = 2.0;
    const QuadResult q = integrate_halfline(h, 1e-8);
    CHECK(rel(q.value, 1.0) < 1e-8);
}

TEST_CASE("half-line rejects non-integrable decay") {
    IntegrandHandle h;
    h.evaluator = [](double x) { return x / ((1.0 + x) * (1.0 + x)); };
    h.decay_exponent = 1.0;
    CHECK_THROWS_AS(integrate_halfline(h, 1e-8), nonconvergence_error);
}

TEST_CASE("even full line equals twice the half line") {
    IntegrandHandle h;
    h.evaluator = [](double x) { return std::exp(-x * x); };
    h.even = true;
    h.decay_exponent = kSuperpolynomialDecay;
    const QuadResult q = integrate_halfline(h, 1e-11);
    CHECK(rel(2.0 * q.value, std::sqrt(kPi)) < 1e-10);
}

TEST_CASE("principal value of an odd integrand vanishes") {
    IntegrandHandle h;
    h.evaluator = [](double s) { return s / (s * s - 0.25); };
    h.even = false;
    h.pole_lattice = PoleLattice{0.5, 0.5};
    const QuadResult q = integrate_pv_lattice(h, 0.2, 1e-6);
    CHECK(q.value == 0.0);
}

TEST_CASE("principal value reduces to the plain integral for regular integrands") {
    IntegrandHandle h;
    h.evaluator = [](double s) { const double u = 1.0 + s * s; return 1.0 / (u * u * u * u); };
    h.even = true;
    h.pole_lattice = PoleLattice{0.5, 0.5};
    const double want = 5.0 * kPi / 16.0;
    const QuadResult qa = integrate_pv_lattice(h, 0.2, 1e-7);
    CHECK(rel(qa.value, want) < 1e-6);
    const QuadResult qb = integrate_pv_lattice(h, 0.37, 1e-7);
    CHECK(std::abs(qa.value - qb.value) < 3e-7 * std::abs(want));
    const QuadResult qc = integrate_pv_lattice(h, 0.5 - 1e-3, 1e-7);
    CHECK(std::abs(qa.value - qc.value) < 3e-7 * std::abs(want));
}

TEST_CASE("principal value with real simple poles") {
    // f(s) = sin(pi s)^2 / ((s^2 - 1/4)(1 + s^2)^2): simple poles at +-1/2,
    // the other lattice points are regular. No tidy closed form; two alpha
    // readings must agree for an even integrand.
    IntegrandHandle h;
    h.evaluator = [](double s) {
        const double c = std::sin(kPi * s);
        const double u = 1.0 + s * s;
        return c * c / ((s * s - 0.25) * u * u);
    };
    h.even = true;
    h.pole_lattice = PoleLattice{0.5, 0.5};
    const QuadResult qa = integrate_pv_lattice(h, 0.2, 1e-7);
    const QuadResult qb = integrate_pv_lattice(h, 0.37, 1e-7);
    CHECK(std::abs(qa.value - qb.value) <=
          3e-7 * std::max(std::abs(qa.value), 1.0));
}

TEST_CASE("bilateral sums") {
    const QuadResult q1 = bilateral_sum(
        [](long long n) { return n == 0 ? 1.0 : 0.0; }, 1e-12);
    CHECK(q1.value == 1.0);

    const QuadResult q2 = bilateral_sum(
        [](long long n) {
            const double x = static_cast<double>(n);
            return x * std::exp(-x * x);
        },
        1e-12);
    CHECK(std::abs(q2.value) < 1e-15);

    // sum over Z of 1/(1+n^2) = pi coth(pi)
    const QuadResult q3 = bilateral_sum(
        [](long long n) {
            const double x = static_cast<double>(n);
            return 1.0 / (1.0 + x * x);
        },
        1e-6);
    CHECK(rel(q3.value, kPi / std::tanh(kPi)) < 1e-5);
}

TEST_CASE("bilateral sum rejects slow decay") {
    CHECK_THROWS_AS(bilateral_sum(
                        [](long long n) {
                            return 1.0 / (1.0 + std::abs(static_cast<double>(n)));
                        },
                        1e-10),
                    nonconvergence_error);
}

TEST_CASE("gamma weight decay bookkeeping") {
    // |Gamma(a+is)|^2 alone: exponential
    CHECK(gamma_weight_decay({0.5}, {}, false).exponential);
    // three numerator pairs, one denominator pair, one 1/|Gamma(2is)|^2:
    // rates cancel, polynomial power 2(sum a - b) - 1... net algebraic
    const DecayEstimate d = gamma_weight_decay({0.5, 0.5, 0.5}, {3.0}, true);
    CHECK_FALSE(d.exponential);
    CHECK(d.power == doctest::Approx(2.0 * (1.5 - 3.0) - 1.0));
}
