#include "swipt/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace swipt {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;

// lower series: P(a,x) = x^a e^-x / Gamma(a) * sum x^n / (a)_(n+1)
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), x > a + 1
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_cdf_regularized(double shape, double x) {
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < shape + 1.0) return gamma_p_series(shape, x);
    return 1.0 - gamma_q_contfrac(shape, x);
}

double gamma_pdf(double shape, double scale, double x) {
    if (x <= 0.0) return 0.0;
    return std::exp((shape - 1.0) * std::log(x) - x / scale - std::lgamma(shape) -
                    shape * std::log(scale));
}

namespace {

struct SimpsonState {
    int subdivisions_left;
};

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, SimpsonState& st) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double diff = left + right - whole;
    if (std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    if (--st.subdivisions_left <= 0)
        throw QuadratureError("outage_virtual_quadrature: subdivision budget exhausted");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, st) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, st);
}

// Geometric initial panels: the integrand bulk can sit orders of magnitude
// below the interval midpoint, which a single Simpson seed walks right past.
template <typename F>
double integrate(const F& f, double a, double b, double tol, int max_subdivisions) {
    if (b <= a) return 0.0;
    constexpr int kPanels = 64;
    double lo = a > 0.0 ? a : b * 1e-15;
    SimpsonState st{max_subdivisions};
    double total = 0.0;
    double ratio = std::pow(b / lo, 1.0 / kPanels);
    double x0 = lo;
    for (int k = 0; k < kPanels; ++k) {
        double x1 = k + 1 == kPanels ? b : x0 * ratio;
        double m = 0.5 * (x0 + x1);
        double fa = f(x0), fm = f(m), fb = f(x1);
        double whole = (x1 - x0) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson(f, x0, x1, fa, fm, fb, whole, tol / kPanels, st);
        x0 = x1;
    }
    return total;
}

} // namespace

QuadratureResult outage_virtual_quadrature(const SystemConfig& cfg, const QuadratureSpec& spec) {
    if (!cfg.validated) throw std::invalid_argument("outage_virtual_quadrature: unvalidated config");
    if (spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0)
        throw std::invalid_argument("outage_virtual_quadrature: tolerances must be positive");

    const double c = cfg.eta * cfg.rho * cfg.p_s / (1.0 - cfg.eta * cfg.rho * cfg.g_a);
    if (c <= 0.0) return {1.0, 0.0}; // rho = 0: nothing harvested, every block fails

    // sensitivity gate: incident rho*g1*(p_s + c*g_a) >= eps_min
    const double g_gate = cfg.eps_min / (cfg.rho * (cfg.p_s + c * cfg.g_a));

    // first hop: gamma_r(g1) rises to the saturation p_s/(c*g_b); below
    // gamma_th it never decodes regardless of g2
    const SinrMode mode = cfg.sinr_mode_for(PolicyKind::Virtual);
    const double one_minus_rho = 1.0 - cfg.rho;
    const double slope = one_minus_rho * (cfg.p_s - cfg.gamma_th * c * cfg.g_b);
    if (slope <= 0.0) return {1.0, 0.0}; // saturation below gamma_th: outage everywhere
    const double g_r_min = cfg.gamma_th * cfg.sigma_r2 / slope;

    const double g_lo = std::max(g_gate, g_r_min);
    double outage = gamma_cdf(cfg.m1, cfg.theta1, g_lo);

    // truncate the upper tail where its gamma mass is negligible vs. the budget
    const double tail_tol = std::max(spec.abs_tol * 1e-12, 1e-300);
    double upper = std::max(g_lo, cfg.m1 * cfg.theta1);
    while (1.0 - gamma_cdf(cfg.m1, cfg.theta1, upper) > tail_tol) upper *= 2.0;
    const double tail_mass = 1.0 - gamma_cdf(cfg.m1, cfg.theta1, upper);

    auto g2_threshold = [&](double g1) {
        if (mode == SinrMode::MinApprox) return cfg.gamma_th * cfg.sigma_d2 / (c * g1);
        double gamma_r = one_minus_rho * cfg.p_s * g1 /
                         (one_minus_rho * c * g1 * cfg.g_b + cfg.sigma_r2);
        return cfg.gamma_th * (gamma_r + 1.0) / (gamma_r - cfg.gamma_th) * cfg.sigma_d2 /
               (c * g1);
    };
    auto integrand = [&](double g1) {
        if (g1 <= g_lo) return 0.0;
        return gamma_pdf(cfg.m1, cfg.theta1, g1) *
               gamma_cdf(cfg.m2, cfg.theta2, g2_threshold(g1));
    };

    double tol = std::max(spec.abs_tol, spec.rel_tol * std::max(outage, 1e-12));
    outage += integrate(integrand, g_lo, upper, tol, spec.max_subdivisions);

    double value = std::clamp(outage, 0.0, 1.0);
    return {value, tol + tail_mass};
}

} // namespace swipt
