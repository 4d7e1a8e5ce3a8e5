#include "betaint/mellin_barnes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "betaint/errors.hpp"
#include "betaint/quadrature.hpp"

namespace betaint {

namespace {

void validate(const MBSpec& spec) {
    if (spec.a_list.size() + spec.b_list.size() <
        spec.c_list.size() + spec.d_list.size()) {
        throw domain_error("more denominator than numerator gamma factors");
    }
    // A left pole -a_i - k meeting a right pole b_j + k' forces a_i + b_j to
    // be a nonpositive integer.
    for (const ComplexValue& a : spec.a_list) {
        for (const ComplexValue& b : spec.b_list) {
            const ComplexValue s = a + b;
            int m = 0;
            if (std::abs(s.imag()) <= 1e-9 &&
                detail::near_nonpositive_integer(s.real(), 1e-9, &m)) {
                throw coincident_pole_error("left and right pole series intersect");
            }
        }
    }
}

} // namespace

ContourChoice find_contour(const MBSpec& spec) {
    validate(spec);
    double left = -std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    for (const ComplexValue& a : spec.a_list) left = std::max(left, -a.real());
    for (const ComplexValue& b : spec.b_list) right = std::min(right, b.real());
    if (left >= right) {
        throw contour_collision_error("no separating gap between pole series",
                                      left, right);
    }
    ContourChoice choice;
    if (std::isinf(left) && std::isinf(right)) {
        choice.sigma = 0.0;
        choice.margin = std::numeric_limits<double>::infinity();
    } else if (std::isinf(left)) {
        choice.sigma = right - 2.0;
        choice.margin = 2.0;
    } else if (std::isinf(right)) {
        choice.sigma = left + 2.0;
        choice.margin = 2.0;
    } else {
        choice.sigma = 0.5 * (left + right);
        choice.margin = 0.5 * (right - left);
    }
    return choice;
}

namespace {

bool spec_is_real(const MBSpec& spec) {
    auto all_real = [](const std::vector<ComplexValue>& v) {
        for (const ComplexValue& z : v) {
            if (std::abs(z.imag()) > 1e-14) return false;
        }
        return true;
    };
    return all_real(spec.a_list) && all_real(spec.b_list) &&
           all_real(spec.c_list) && all_real(spec.d_list);
}

} // namespace

ComplexValue eval_mb(const MBSpec& spec, double tol) {
    return eval_mb_at_sigma(spec, find_contour(spec).sigma, tol);
}

ComplexValue eval_mb_at_sigma(const MBSpec& spec, double sigma, double tol) {
    if (std::abs(spec.z.imag()) > 0.0 || !(spec.z.real() > 0.0)) {
        throw domain_error("Mellin-Barnes argument must be real positive");
    }
    find_contour(spec); // validates separability
    const double log_z = std::log(spec.z.real());

    auto log_integrand = [&spec, sigma, log_z](double t) -> ComplexValue {
        const ComplexValue s(sigma, t);
        ComplexValue acc = -s * log_z;
        for (const ComplexValue& a : spec.a_list) acc += log_gamma(a + s);
        for (const ComplexValue& b : spec.b_list) acc += log_gamma(b - s);
        for (const ComplexValue& c : spec.c_list) acc -= log_gamma(c - s);
        for (const ComplexValue& d : spec.d_list) acc -= log_gamma(d + s);
        return acc;
    };

    // Net large-|t| behaviour: each numerator gamma contributes
    // e^{-pi|t|/2} |t|^{Re(arg)+Re(s-part)-1/2}; denominators invert it.
    const int count = static_cast<int>(spec.a_list.size()) +
                      static_cast<int>(spec.b_list.size()) -
                      static_cast<int>(spec.c_list.size()) -
                      static_cast<int>(spec.d_list.size());
    double power = 0.0;
    for (const ComplexValue& a : spec.a_list) power += a.real() + sigma - 0.5;
    for (const ComplexValue& b : spec.b_list) power += b.real() - sigma - 0.5;
    for (const ComplexValue& c : spec.c_list) power -= c.real() - sigma - 0.5;
    for (const ComplexValue& d : spec.d_list) power -= d.real() + sigma - 0.5;

    double decay = 0.0;
    if (count > 0) {
        decay = kSuperpolynomialDecay;
    } else if (count == 0) {
        if (power >= -1.0) {
            throw nonconvergence_error("integrand decays too slowly on the contour");
        }
        decay = -power;
    } else {
        throw nonconvergence_error("integrand grows along the contour");
    }

    const bool fold = spec_is_real(spec);
    if (fold) {
        // conjugate symmetry: value = (1/pi) int_0^inf Re F(sigma+it) dt
        IntegrandHandle handle;
        handle.evaluator = [log_integrand](double t) {
            return std::exp(log_integrand(t)).real();
        };
        handle.decay_exponent = decay;
        const QuadResult q = integrate_halfline(handle, tol);
        return ComplexValue(q.value / kPi, 0.0);
    }

    ComplexValue total = 0.0;
    for (int dir = 0; dir < 2; ++dir) {
        const double sign = dir == 0 ? 1.0 : -1.0;
        for (int part = 0; part < 2; ++part) {
            IntegrandHandle handle;
            handle.evaluator = [log_integrand, sign, part](double t) {
                const ComplexValue v = std::exp(log_integrand(sign * t));
                return part == 0 ? v.real() : v.imag();
            };
            handle.decay_exponent = decay;
            const QuadResult q = integrate_halfline(handle, 0.5 * tol);
            total += (part == 0 ? ComplexValue(q.value, 0.0)
                                : ComplexValue(0.0, q.value));
        }
        // each direction covers (0, inf); t = 0 has measure zero
    }
    return total / (2.0 * kPi);
}

std::vector<MBExpansionTerm> mb_residue_expand(const MBSpec& spec,
                                               MBSide side) {
    validate(spec);
    const std::vector<ComplexValue>& own =
        side == MBSide::left ? spec.a_list : spec.b_list;
    for (std::size_t i = 0; i < own.size(); ++i) {
        for (std::size_t j = i + 1; j < own.size(); ++j) {
            const ComplexValue diff = own[i] - own[j];
            if (std::abs(diff.imag()) <= 1e-9 &&
                std::abs(diff.real() - std::round(diff.real())) <= 1e-9) {
                throw coincident_pole_error(
                    "pole series on the chosen side differ by an integer");
            }
        }
    }
    const int p = static_cast<int>(spec.a_list.size());
    const int q = static_cast<int>(spec.b_list.size());
    const int r = static_cast<int>(spec.c_list.size());
    const int t = static_cast<int>(spec.d_list.size());

    std::vector<MBExpansionTerm> terms;
    if (side == MBSide::left) {
        const double zeta_sign = ((p + t) % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < spec.a_list.size(); ++i) {
            const ComplexValue ai = spec.a_list[i];
            MBExpansionTerm term;
            term.coefficient = std::pow(spec.z, ai);
            for (std::size_t i2 = 0; i2 < spec.a_list.size(); ++i2) {
                if (i2 == i) continue;
                term.prefactor.numerator_args.push_back(spec.a_list[i2] - ai);
                term.series.denominator_params.push_back(1.0 + ai - spec.a_list[i2]);
            }
            for (const ComplexValue& b : spec.b_list) {
                term.prefactor.numerator_args.push_back(b + ai);
                term.series.numerator_params.push_back(b + ai);
            }
            for (const ComplexValue& c : spec.c_list) {
                term.prefactor.denominator_args.push_back(c + ai);
                term.series.denominator_params.push_back(c + ai);
            }
            for (const ComplexValue& d : spec.d_list) {
                term.prefactor.denominator_args.push_back(d - ai);
                term.series.numerator_params.push_back(1.0 + ai - d);
            }
            term.series.argument = zeta_sign * spec.z;
            terms.push_back(std::move(term));
        }
    } else {
        const double zeta_sign = ((q + r) % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t j = 0; j < spec.b_list.size(); ++j) {
            const ComplexValue bj = spec.b_list[j];
            MBExpansionTerm term;
            term.coefficient = std::pow(spec.z, -bj);
            for (std::size_t j2 = 0; j2 < spec.b_list.size(); ++j2) {
                if (j2 == j) continue;
                term.prefactor.numerator_args.push_back(spec.b_list[j2] - bj);
                term.series.denominator_params.push_back(1.0 + bj - spec.b_list[j2]);
            }
            for (const ComplexValue& a : spec.a_list) {
                term.prefactor.numerator_args.push_back(a + bj);
                term.series.numerator_params.push_back(a + bj);
            }
            for (const ComplexValue& c : spec.c_list) {
                term.prefactor.denominator_args.push_back(c - bj);
                term.series.numerator_params.push_back(1.0 + bj - c);
            }
            for (const ComplexValue& d : spec.d_list) {
                term.prefactor.denominator_args.push_back(d + bj);
                term.series.denominator_params.push_back(d + bj);
            }
            term.series.argument = zeta_sign / spec.z;
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

ComplexValue mb_expansion_value(const MBSpec& spec, MBSide side, double tol) {
    const std::vector<MBExpansionTerm> terms = mb_residue_expand(spec, side);
    ComplexValue total = 0.0;
    for (const MBExpansionTerm& term : terms) {
        total += term.coefficient * gamma_ratio(term.prefactor) *
                 pfq(term.series, tol).value;
    }
    return total;
}

} // namespace betaint
