#include "betaint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "betaint/errors.hpp"

namespace betaint {

namespace {

// Gauss-Kronrod 15/7 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// 7-point Gauss weights, matching the odd-index Kronrod nodes.
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const {
        return x.error < y.error;
    }
};

Segment gk15_segment(const std::function<double(double)>& f, double a,
                     double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double fsum = f(c + h * kXgk[i]) + f(c - h * kXgk[i]);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    Segment seg;
    seg.a = a;
    seg.b = b;
    seg.value = h * kron;
    seg.error = h * std::abs(kron - gauss);
    return seg;
}

constexpr int kMaxSplits = 4000;

QuadResult adaptive_finite(const std::function<double(double)>& f, double a,
                           double b, double tol) {
    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> active;
    Segment first = gk15_segment(f, a, b);
    double total = first.value;
    double total_abs = std::abs(first.value);
    double total_err = first.error;
    double frozen_err = 0.0;
    active.push(first);
    int splits = 0;
    while (splits < kMaxSplits && !active.empty()) {
        if (total_err + frozen_err <= tol * std::max(total_abs, 1e-300)) break;
        Segment worst = active.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a <= 1e-14 * std::max(1.0, std::abs(mid))) {
            // cannot be refined further; its error estimate stays
            active.pop();
            total_err -= worst.error;
            frozen_err += worst.error;
            continue;
        }
        active.pop();
        total -= worst.value;
        total_abs -= std::abs(worst.value);
        total_err -= worst.error;
        Segment left = gk15_segment(f, worst.a, mid);
        Segment right = gk15_segment(f, mid, worst.b);
        total += left.value + right.value;
        total_abs += std::abs(left.value) + std::abs(right.value);
        total_err += left.error + right.error;
        active.push(left);
        active.push(right);
        ++splits;
    }
    QuadResult res;
    res.value = total;
    res.abs_error_estimate = total_err + frozen_err;
    res.panels_used = splits + 1;
    res.truncation_point = b;
    return res;
}

} // namespace

std::pair<double, double> gk15_panel(const std::function<double(double)>& f,
                                     double a, double b) {
    const Segment seg = gk15_segment(f, a, b);
    return {seg.value, seg.error};
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, double tol) {
    return adaptive_finite(f, a, b, tol);
}

DecayEstimate gamma_weight_decay(const std::vector<double>& numerator_shifts,
                                 const std::vector<double>& denominator_shifts,
                                 bool inv_gamma_2is_factor) {
    // |Gamma(a+is)|^2 ~ 2pi |s|^{2a-1} e^{-pi|s|};
    // 1/|Gamma(2is)|^2 = 2s sinh(2 pi s)/pi ~ (|s|/pi) e^{2 pi |s|}.
    int rate = -static_cast<int>(numerator_shifts.size()) +
               static_cast<int>(denominator_shifts.size());
    double power = 0.0;
    for (double a : numerator_shifts) power += 2.0 * a - 1.0;
    for (double b : denominator_shifts) power -= 2.0 * b - 1.0;
    if (inv_gamma_2is_factor) {
        rate += 2;
        power += 1.0;
    }
    DecayEstimate est;
    est.exponential = rate < 0;
    est.power = power;
    return est;
}

QuadResult integrate_halfline(const IntegrandHandle& f, double tol) {
    if (!(f.decay_exponent > 1.0)) {
        throw nonconvergence_error("half-line integral needs decay exponent > 1");
    }
    const double declared = f.decay_exponent;
    double T = 16.0;
    QuadResult head = adaptive_finite(f.evaluator, 0.0, T, 0.05 * tol);
    double value = head.value;
    double abs_scale = std::abs(head.value);
    double err = head.abs_error_estimate;
    int panels = head.panels_used;

    double tail = 0.0;
    double tail_signed = 0.0;
    bool settled = false;
    constexpr double kTCap = 1e13;
    while (true) {
        const double f_half = f.evaluator(0.5 * T);
        const double f_mid = f.evaluator(0.71 * T);
        const double f_end = f.evaluator(T);
        const double a_half = std::abs(f_half);
        const double a_mid = std::abs(f_mid);
        const double a_end = std::abs(f_end);
        if (a_end == 0.0 && a_half == 0.0 && a_mid == 0.0) {
            tail = 0.0;
            tail_signed = 0.0;
            settled = true;
            break;
        }
        double p = declared;
        if (a_end > 0.0 && a_half > a_end) {
            p = std::min(declared, std::log2(a_half / a_end));
        }
        const double tol_abs = tol * std::max(abs_scale, 1e-300);
        if (p > 1.2) {
            // guard against probing an oscillation node at T itself
            const double a_eff = std::max(a_end, a_mid);
            tail = a_eff * T / (p - 1.0);
            const bool monotone = f_half * f_end > 0.0 && f_mid * f_end > 0.0 &&
                                  a_half >= a_mid && a_mid >= a_end;
            tail_signed = monotone ? f_end * T / (p - 1.0) : 0.0;
            if (tail <= 0.5 * tol_abs) {
                settled = true;
                break;
            }
        }
        if (2.0 * T > kTCap) break;
        QuadResult next = adaptive_finite(f.evaluator, T, 2.0 * T, 0.05 * tol);
        value += next.value;
        abs_scale += std::abs(next.value);
        err += next.abs_error_estimate;
        panels += next.panels_used;
        T *= 2.0;
    }
    if (!settled) {
        throw nonconvergence_error("half-line tail did not clear tolerance before truncation cap");
    }
    QuadResult res;
    // completion: treat the tail as exactly power-law with the fitted decay
    res.value = value + tail_signed;
    res.abs_error_estimate = err + 0.3 * tail;
    res.panels_used = panels;
    res.truncation_point = T;
    return res;
}

namespace {

// PV window around pole c: pair f(c+d) + f(c-d) so the simple pole cancels,
// excise [0, eps) and remove the O(eps) remainder with one Richardson step.
struct WindowResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

WindowResult pv_paired_piece(const std::function<double(double)>& f, double c,
                             double d_max, double spacing, double tol) {
    auto pair = [&f, c](double d) { return f(c + d) + f(c - d); };
    // The excised remainder of the even paired integrand is
    // E(eps) = a*eps + b*eps^3 + O(eps^5); two Richardson levels on
    // I(eps) = W - E(eps) remove both terms.
    const double eps = 0.5 * std::min(0.1 * spacing, d_max);
    QuadResult i1 = adaptive_finite(pair, eps, d_max, tol);
    QuadResult i2 = adaptive_finite(pair, 0.5 * eps, d_max, tol);
    QuadResult i3 = adaptive_finite(pair, 0.25 * eps, d_max, tol);
    const double d1 = i2.value - i1.value;
    const double d2 = i3.value - i2.value;
    const double b_eps3 = (32.0 / 21.0) * (d1 - 2.0 * d2);
    WindowResult w;
    w.value = i3.value + 0.5 * d1 - (27.0 / 64.0) * b_eps3;
    w.error = i1.abs_error_estimate + i2.abs_error_estimate +
              i3.abs_error_estimate + 0.05 * std::abs(b_eps3);
    w.panels = i1.panels_used + i2.panels_used + i3.panels_used;
    return w;
}

} // namespace

QuadResult integrate_pv_lattice(const IntegrandHandle& f, double alpha,
                                double tol) {
    if (!f.pole_lattice) {
        throw domain_error("principal value integration needs a pole lattice");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw domain_error("principal value endpoint shift must lie in (0,1)");
    }
    const double spacing = f.pole_lattice->spacing;
    const double offset = f.pole_lattice->offset;
    if (!(spacing > 0.0) || !(offset > 0.0)) {
        throw domain_error("pole lattice needs positive spacing and first pole");
    }
    const double half = 0.5 * spacing;

    // Parity spot-check; a PV over a symmetric interval of an odd integrand
    // vanishes identically.
    {
        const double s0 = offset + 0.37 * spacing;
        const double plus = f.evaluator(s0);
        const double minus = f.evaluator(-s0);
        const double scale = std::abs(plus) + std::abs(minus) + 1e-300;
        const bool even_ok = std::abs(plus - minus) <= 1e-8 * scale;
        const bool odd_ok = std::abs(plus + minus) <= 1e-8 * scale;
        if (!even_ok && odd_ok) {
            return QuadResult{0.0, 0.0, 0, 0.0};
        }
        if (!even_ok) {
            throw domain_error("principal value integrand is not even");
        }
    }

    QuadResult head = adaptive_finite(f.evaluator, 0.0, offset - half,
                                      0.05 * tol);
    std::vector<WindowResult> windows; // full window around pole m, cached

    auto ensure_windows = [&](std::size_t count) {
        while (windows.size() < count) {
            const double c = offset + static_cast<double>(windows.size()) * spacing;
            windows.push_back(
                pv_paired_piece(f.evaluator, c, half, spacing, 0.05 * tol));
        }
    };

    auto value_at = [&](long long m_end) -> QuadResult {
        const double b = static_cast<double>(m_end) + alpha;
        // full windows have pole + half <= b
        long long full = static_cast<long long>(
            std::floor((b - half - offset) / spacing)) + 1;
        if (full < 0) full = 0;
        ensure_windows(static_cast<std::size_t>(full));
        double acc = head.value;
        double err = head.abs_error_estimate;
        int panels = head.panels_used;
        for (long long m = 0; m < full; ++m) {
            acc += windows[static_cast<std::size_t>(m)].value;
            err += windows[static_cast<std::size_t>(m)].error;
            panels += windows[static_cast<std::size_t>(m)].panels;
        }
        const double edge = offset + (static_cast<double>(full) - 1.0) * spacing + half;
        const double next_pole = offset + static_cast<double>(full) * spacing;
        if (b > edge + 1e-12) {
            if (std::abs(b - next_pole) < 1e-9 * spacing) {
                throw domain_error("principal value endpoint sits on a lattice pole");
            }
            if (b < next_pole) {
                QuadResult rem = adaptive_finite(f.evaluator, edge, b, 0.05 * tol);
                acc += rem.value;
                err += rem.abs_error_estimate;
                panels += rem.panels_used;
            } else {
                const double d_max = b - next_pole;
                WindowResult paired =
                    pv_paired_piece(f.evaluator, next_pole, d_max, spacing, 0.05 * tol);
                QuadResult left_only = adaptive_finite(
                    [&](double d) { return f.evaluator(next_pole - d); }, d_max,
                    half, 0.05 * tol);
                acc += paired.value + left_only.value;
                err += paired.error + left_only.abs_error_estimate;
                panels += paired.panels + left_only.panels_used;
            }
        }
        QuadResult res;
        res.value = 2.0 * acc; // even integrand: double the half-line value
        res.abs_error_estimate = 2.0 * err;
        res.panels_used = panels;
        res.truncation_point = b;
        return res;
    };

    long long m_end = std::max<long long>(
        4, static_cast<long long>(std::ceil(offset + 2.0 * spacing)));
    QuadResult prev = value_at(m_end);
    for (int iter = 0; iter < 12; ++iter) {
        m_end *= 2;
        QuadResult cur = value_at(m_end);
        const double diff = std::abs(cur.value - prev.value);
        if (diff <= tol * std::max(std::abs(cur.value), 1e-300)) {
            cur.abs_error_estimate += diff;
            return cur;
        }
        prev = cur;
    }
    throw nonconvergence_error("principal value did not settle while growing the interval");
}

QuadResult bilateral_sum(const std::function<double(long long)>& term,
                         double tol) {
    double sum = term(0);
    double abs_acc = std::abs(sum);
    long long n = 0;
    double mag_half = 0.0; // |term(N/2)| + |term(-N/2)| at the previous checkpoint
    constexpr long long kCap = 1LL << 22;
    double last_p = 0.0;
    for (long long target = 8; target <= kCap; target *= 2) {
        while (n < target) {
            ++n;
            const double t = term(n) + term(-n);
            sum += t;
            abs_acc += std::abs(term(n)) + std::abs(term(-n));
        }
        const double mag_end = std::abs(term(n)) + std::abs(term(-n));
        if (mag_end == 0.0) {
            QuadResult res;
            res.value = sum;
            res.abs_error_estimate = 0.0;
            res.panels_used = static_cast<int>(n);
            res.truncation_point = static_cast<double>(n);
            return res;
        }
        if (mag_half > mag_end) {
            const double p = std::log2(mag_half / mag_end);
            last_p = p;
            if (p > 1.0) {
                const double tail =
                    mag_end * static_cast<double>(n) / (p - 1.0);
                if (tail <= tol * std::max(abs_acc, 1e-300)) {
                    QuadResult res;
                    res.value = sum;
                    res.abs_error_estimate = tail;
                    res.panels_used = static_cast<int>(n);
                    res.truncation_point = static_cast<double>(n);
                    return res;
                }
            }
        }
        mag_half = mag_end;
    }
    if (last_p <= 1.0) {
        throw nonconvergence_error("bilateral terms decay too slowly (fitted exponent <= 1)");
    }
    throw nonconvergence_error("bilateral sum did not clear tolerance within term budget");
}

} // namespace betaint
