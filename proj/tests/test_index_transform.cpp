#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "betaint/errors.hpp"
#include "betaint/gamma.hpp"
#include "betaint/hypergeometric.hpp"
#include "betaint/index_transform.hpp"
#include "betaint/mellin_convolutions.hpp"
#include "betaint/quadrature.hpp"

using namespace betaint;

namespace {

double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

const std::vector<double> kSpectralGrid = {0.0, 0.5, 1.0, 2.0};

ImagePair zero_pair(const JParams& p) {
    ImagePair zero;
    zero.params = p;
    zero.source.evaluator = [](double) { return 0.0; };
    zero.source.decay_exponent = 1e3;
    zero.image = [](double) { return 0.0; };
    zero.image_decay_exponent = kSuperpolynomialDecay;
    return zero;
}

} // namespace

TEST_CASE("forward transform reproduces hand values") {
    const JParams p{1.0, 1.0};
    JSource f;
    f.evaluator = [](double x) { return std::pow(1.0 + x, -2.0); };
    f.decay_exponent = 2.0;
    CHECK(rel(j_forward(p, f, 0.0, 1e-9), 1.0) < 1e-8);

    JSource g;
    g.evaluator = [](double x) { return std::pow(1.0 + x, -3.0); };
    g.decay_exponent = 3.0;
    CHECK(rel(j_forward(p, g, 0.0, 1e-9), 0.25) < 1e-8);

    JSource zero;
    zero.evaluator = [](double) { return 0.0; };
    zero.decay_exponent = 5.0;
    CHECK(j_forward(p, zero, 1.3, 1e-9) == 0.0);
}

TEST_CASE("forward transform guards") {
    JSource f;
    f.evaluator = [](double x) { return std::pow(1.0 + x, -2.0); };
    f.decay_exponent = 2.0;
    CHECK_THROWS_AS(j_forward(JParams{-1.0, 1.0}, f, 0.0, 1e-8), domain_error);
    CHECK_THROWS_AS(j_forward(JParams{1.0, 1.0}, f, -0.5, 1e-8), domain_error);
    JSource slow;
    slow.evaluator = [](double x) { return std::pow(1.0 + x, -0.5); };
    slow.decay_exponent = 0.5;
    CHECK_THROWS_AS(j_forward(JParams{1.0, 1.0}, slow, 0.0, 1e-8),
                    nonconvergence_error);
    JSource empty;
    empty.decay_exponent = 3.0;
    CHECK_THROWS_AS(j_forward(JParams{1.0, 1.0}, empty, 0.0, 1e-8),
                    domain_error);
}

TEST_CASE("image catalog matches the numeric transform on a spectral grid") {
    struct Fixture {
        PairId id;
        JParams p;
        ParamMap extra;
    };
    const std::vector<Fixture> fixtures = {
        {PairId::L11A, {0.7, 0.9}, {{"c", 0.6}}},
        {PairId::L11A, {1.1, 0.5}, {{"c", 1.3}}},
        {PairId::L11B, {0.7, 0.9}, {{"c", 0.6}, {"z", 0.5}}},
        {PairId::L11B, {0.8, 1.0}, {{"c", 1.2}, {"z", 2.0}}},
        {PairId::L11C, {0.9, 1.1}, {{"u", 0.4}}},
        {PairId::L11C, {0.6, 1.3}, {{"u", 0.7}}},
        {PairId::L12A, {0.9, 0.8}, {{"p", 0.55}, {"q", 0.65}, {"y", 0.7}}},
        {PairId::L12A, {0.7, 1.1}, {{"p", 0.8}, {"q", 0.5}, {"y", 1.6}}},
        {PairId::L12B, {1.0, 1.0}, {{"p", 0.5}, {"q", 0.5}}},
        {PairId::L12B, {0.9, 0.8}, {{"p", 0.55}, {"q", 0.65}}},
        {PairId::L12C, {0.7, 0.9}, {{"c", 0.6}, {"d", 0.8}}},
        {PairId::L12C, {0.5, 0.5}, {{"c", 1.1}, {"d", 0.4}}},
    };
    for (const Fixture& fx : fixtures) {
        const double worst =
            image_residual(fx.id, fx.extra, fx.p, kSpectralGrid, 1e-8);
        CAPTURE(static_cast<int>(fx.id));
        CAPTURE(fx.p.a);
        CAPTURE(fx.p.b);
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("scale-free Gauss pair image at the pinned point") {
    const ImagePair pair =
        make_image_pair(PairId::L12B, JParams{1.0, 1.0}, {{"p", 0.5}, {"q", 0.5}});
    CHECK(rel(pair.image(0.0), 4.0 * kPi) < 1e-12);
}

TEST_CASE("pure power source image from gamma arithmetic") {
    // source x^{-3/2} with a = b = 1, u = 1/2
    const ImagePair pair =
        make_image_pair(PairId::L11C, JParams{1.0, 1.0}, {{"u", 0.5}});
    const double want =
        gamma_real(0.5) / gamma_real(1.5) * abs_sq_gamma(0.5, 1.0) /
        abs_sq_gamma(1.0, 1.0);
    CHECK(rel(pair.image(1.0), want) < 1e-13);
    CHECK(image_residual(PairId::L11C, {{"u", 0.5}}, JParams{1.0, 1.0},
                         {0.0, 1.0}, 1e-8) <= 1e-6);
}

TEST_CASE("image pair construction guards") {
    CHECK_THROWS_AS(make_image_pair(PairId::L11A, JParams{1.0, 1.0}, {}),
                    domain_error);
    CHECK_THROWS_AS(
        make_image_pair(PairId::L11C, JParams{1.0, 0.5}, {{"u", 0.7}}),
        domain_error);
    CHECK_THROWS_AS(
        make_image_pair(PairId::L12A, JParams{1.0, 1.0},
                        {{"p", 0.5}, {"q", 0.5}, {"y", -1.0}}),
        domain_error);
}

TEST_CASE("inverse transform recovers power sources") {
    struct Triple {
        double a, b, c;
    };
    for (const Triple& t :
         {Triple{0.7, 0.9, 0.6}, Triple{1.1, 0.5, 1.3}, Triple{1.0, 1.0, 1.0}}) {
        const JParams p{t.a, t.b};
        const ImagePair pair = make_image_pair(PairId::L11A, p, {{"c", t.c}});
        JSource g{pair.image, pair.image_decay_exponent};
        for (double x : {0.1, 1.0, 10.0}) {
            const double got = j_inverse(p, g, x, 1e-8);
            const double want = std::pow(1.0 + x, -t.a - t.c);
            CAPTURE(t.a);
            CAPTURE(t.c);
            CAPTURE(x);
            CHECK(rel(got, want) < 1e-5);
        }
    }
    // at x = 0 the kernel is 1 and the all-unit case has source value 1
    const JParams unit{1.0, 1.0};
    const ImagePair pair = make_image_pair(PairId::L11A, unit, {{"c", 1.0}});
    JSource g{pair.image, pair.image_decay_exponent};
    CHECK(rel(j_inverse(unit, g, 0.0, 1e-9), 1.0) < 1e-7);

    JSource zero;
    zero.evaluator = [](double) { return 0.0; };
    zero.decay_exponent = kSuperpolynomialDecay;
    CHECK(j_inverse(unit, zero, 1.0, 1e-9) == 0.0);
}

TEST_CASE("balanced Gauss image inverts back to its hypergeometric source") {
    const JParams p{0.7, 0.9};
    const ImagePair pair =
        make_image_pair(PairId::L12C, p, {{"c", 0.6}, {"d", 0.8}});
    JSource g{pair.image, pair.image_decay_exponent};
    for (double x : {0.0, 1.0}) {
        const double got = j_inverse(p, g, x, 1e-8);
        const double want = pair.source.evaluator(x);
        CHECK(rel(got, want) < 1e-6);
    }
}

TEST_CASE("pairing identity agrees on both sides") {
    // all-unit power pair: the x side is int x (1+x)^{-4} dx = 1/6
    const JParams unit{1.0, 1.0};
    const ImagePair f1 = make_image_pair(PairId::L11A, unit, {{"c", 1.0}});
    const PlancherelSides sides = plancherel_pair(unit, f1, f1, 1e-9);
    CHECK(rel(sides.lhs, 1.0 / 6.0) < 1e-8);
    CHECK(rel(sides.rhs, 1.0 / 6.0) < 1e-7);

    CHECK(plancherel_pair(unit, f1, zero_pair(unit), 1e-9).lhs == 0.0);
    CHECK(plancherel_pair(unit, f1, zero_pair(unit), 1e-9).rhs == 0.0);

    // both sides equal 1 at the fully symmetric half-integer point
    const JParams half{0.5, 0.5};
    const ImagePair g1 = make_image_pair(PairId::L11A, half, {{"c", 0.5}});
    const ImagePair g2 = make_image_pair(PairId::L11A, half, {{"c", 0.5}});
    const PlancherelSides ones = plancherel_pair(half, g1, g2, 1e-9);
    CHECK(rel(ones.lhs, 1.0) < 1e-8);
    CHECK(rel(ones.rhs, 1.0) < 1e-7);

    // positivity and two-sided agreement at a generic point
    const JParams p{0.7, 0.9};
    const ImagePair h1 = make_image_pair(PairId::L11A, p, {{"c", 0.6}});
    const PlancherelSides pos = plancherel_pair(p, h1, h1, 1e-8);
    CHECK(pos.lhs > 0.0);
    CHECK(pos.rhs > 0.0);
    CHECK(rel(pos.lhs, pos.rhs) < 1e-6);

    CHECK_THROWS_AS(plancherel_pair(unit, h1, h1, 1e-8), domain_error);
}

TEST_CASE("mixed pair types pair correctly") {
    // power source against the gamma-ratio source, algebraic image decay
    const JParams p{0.9, 1.1};
    const ImagePair f1 = make_image_pair(PairId::L11A, p, {{"c", 0.8}});
    const ImagePair f2 = make_image_pair(PairId::L11C, p, {{"u", 0.4}});
    const PlancherelSides sides = plancherel_pair(p, f1, f2, 1e-8);
    CHECK(rel(sides.lhs, sides.rhs) < 1e-6);
}

TEST_CASE("section-four delegation") {
    const ParamMap half = {{"a", 0.5}, {"b", 0.5}, {"c", 0.5}, {"d", 0.5},
                           {"y", 1.0}};
    const VerificationReport r = section4_verify(IdentityId::EQ_4_2, half, 1e-6);
    CHECK(r.passed);
    CHECK(r.id == "EQ_4_2");

    const ParamMap diag = {{"a", 0.5}, {"b", 0.5}, {"c", 0.5}, {"d", 0.5},
                           {"y", 0.5}};
    CHECK(section4_verify(IdentityId::EQ_4_3_DIAG, diag, 1e-6).passed);

    // the kernel factor drops out at x = y = 0
    const ParamMap degenerate = {{"a", 0.7}, {"b", 0.6}, {"c", 0.8},
                                 {"x", 0.0}, {"y", 0.0}};
    CHECK(section4_verify(IdentityId::EQ_4_1, degenerate, 1e-6).passed);

    CHECK_THROWS_AS(section4_verify(IdentityId::EQ_0_1, {}, 1e-6),
                    domain_error);
}

TEST_CASE("power-weighted Gauss integral matches its contour form") {
    struct Point {
        double alpha, rho, p, q, r, z;
    };
    for (const Point& pt : {Point{0.6, 1.3, 0.6, 1.3, 0.6, 0.5},
                            Point{1.3, 1.3, 1.3, 0.6, 1.3, 2.0},
                            Point{0.6, 0.6, 1.3, 1.3, 0.6, 1.0}}) {
        const TwoSidedCheck c = power_gauss_mellin_check(pt.alpha, pt.rho, pt.p,
                                                         pt.q, pt.r, pt.z, 1e-8);
        CAPTURE(pt.alpha);
        CAPTURE(pt.z);
        CHECK(c.rel_error <= 1e-7);
    }
    CHECK_THROWS_AS(power_gauss_mellin_check(1.3, 0.6, 0.6, 0.6, 1.0, 1.0, 1e-8),
                    domain_error);
    CHECK_THROWS_AS(power_gauss_mellin_check(0.6, -1.0, 0.6, 0.6, 1.0, 1.0, 1e-8),
                    domain_error);
}

TEST_CASE("product of two Gauss functions matches its contour form") {
    const TwoSidedCheck c1 = gauss_product_mellin_check(
        0.8, 1.1, 1.2, 1.5, 0.9, 1.4, 1.3, 1.0, 2.0, 1e-8);
    CHECK(c1.rel_error <= 1e-7);
    const TwoSidedCheck c2 = gauss_product_mellin_check(
        0.5, 0.7, 1.0, 0.9, 0.8, 1.1, 1.2, 3.0, 2.0, 1e-8);
    CHECK(c2.rel_error <= 1e-7);
    CHECK_THROWS_AS(gauss_product_mellin_check(2.0, 0.5, 0.6, 1.0, 0.5, 0.6,
                                               1.0, 1.0, 1.0, 1e-8),
                    domain_error);
}

TEST_CASE("matched product integral collapses to a closed form") {
    struct Point {
        double p, q, r, u, v, omega, omega_tilde;
    };
    for (const Point& pt : {Point{1.1, 1.2, 0.8, 0.5, 0.7, 1.0, 2.0},
                            Point{1.1, 1.2, 0.8, 0.5, 0.7, 1.0, 1.0},
                            Point{0.9, 1.3, 0.7, 0.6, 0.95, 0.5, 1.5}}) {
        const TwoSidedCheck c = matched_gauss_product_check(
            pt.p, pt.q, pt.r, pt.u, pt.v, pt.omega, pt.omega_tilde, 1e-8);
        CAPTURE(pt.omega);
        CAPTURE(pt.omega_tilde);
        CHECK(c.rel_error <= 1e-7);
    }
}

TEST_CASE("interval product with a beta weight matches its contour form") {
    const TwoSidedCheck c1 = jacobi_weight_product_check(
        0.9, 1.5, 0.6, 0.7, 0.5, 0.6, 1.8, 1e-8);
    CHECK(c1.rel_error <= 1e-7);
    const TwoSidedCheck c2 = jacobi_weight_product_check(
        1.2, 1.1, 0.4, 0.5, 0.7, 0.45, 1.6, 1e-8);
    CHECK(c2.rel_error <= 1e-7);
    CHECK_THROWS_AS(
        jacobi_weight_product_check(0.9, 1.5, 0.6, 0.7, 0.5, 0.6, 0.4, 1e-8),
        domain_error);
}
