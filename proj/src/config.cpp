#include "swipt/config.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

const char* to_string(ThresholdMode m) {
    return m == ThresholdMode::PaperLiteral ? "paper-literal" : "self-consistent";
}

const char* to_string(SinrMode m) {
    return m == SinrMode::Exact ? "exact" : "min-approx";
}

const char* to_string(PolicyKind p) {
    return p == PolicyKind::Virtual ? "virtual" : "gs";
}

SystemConfig SystemConfig::at_ps(double ps) const {
    SystemConfig c = *this;
    c.p_s = ps;
    c.validated = false;
    auto errs = validate(c);
    if (!errs.empty()) throw std::invalid_argument("at_ps: " + errs.front());
    return c;
}

std::vector<std::string> validate(SystemConfig& cfg) {
    std::vector<std::string> errs;
    auto check = [&](bool ok, const char* msg) {
        if (!ok) errs.emplace_back(msg);
    };

    check(std::isfinite(cfg.p_s) && cfg.p_s > 0, "p_s must be positive");
    check(std::isfinite(cfg.eta) && cfg.eta > 0 && cfg.eta < 1, "eta out of range");
    check(std::isfinite(cfg.rho) && cfg.rho >= 0 && cfg.rho <= 1, "rho out of range");
    check(std::isfinite(cfg.gamma_th) && cfg.gamma_th > 0, "gamma_th must be positive");
    check(cfg.sigma_a2 > 0, "sigma_a2 must be positive");
    check(cfg.sigma_p2 > 0, "sigma_p2 must be positive");
    check(cfg.sigma_d2 > 0, "sigma_d2 must be positive");
    check(cfg.path_loss_1 > 0, "path_loss_1 must be positive");
    check(cfg.path_loss_2 > 0, "path_loss_2 must be positive");
    check(cfg.m1 >= 0.5, "m1 below 0.5");
    check(cfg.m2 >= 0.5, "m2 below 0.5");
    check(cfg.g_a >= 0, "g_a must be nonnegative");
    check(cfg.g_b >= 0, "g_b must be nonnegative");
    check(cfg.eps_min >= 0, "eps_min must be nonnegative");
    check(cfg.battery_alpha > 0, "battery_alpha must be positive");
    check(cfg.level_count_L >= 0, "level_count_L must be nonnegative");
    check(cfg.n_blocks >= 0, "n_blocks must be nonnegative");
    check(cfg.warmup_blocks >= 0, "warmup_blocks must be nonnegative");

    if (cfg.eta > 0 && cfg.eta < 1 && cfg.rho >= 0 && cfg.rho <= 1 && cfg.g_a >= 0) {
        // denominator of the self-sustained relay power must stay positive
        if (cfg.eta * cfg.rho * cfg.g_a >= 1.0) errs.emplace_back("self-energy instability");
    }

    if (!errs.empty()) return errs;

    cfg.p_b = cfg.battery_alpha * cfg.p_s;
    cfg.theta1 = cfg.path_loss_1 / cfg.m1;
    cfg.theta2 = cfg.path_loss_2 / cfg.m2;
    cfg.sigma_r2 = cfg.exact_sigma_r2 ? (1.0 - cfg.rho) * cfg.sigma_a2 + cfg.sigma_p2
                                      : cfg.sigma_p2;

    int max_level = cfg.level_count_L + 1; // grid top index before the eps_min cap
    if (cfg.initial_energy_level < 0 || cfg.initial_energy_level > max_level)
        errs.emplace_back("initial_energy_level out of range");

    if (errs.empty()) cfg.validated = true;
    return errs;
}

SystemConfig validate_or_throw(SystemConfig cfg) {
    auto errs = validate(cfg);
    if (!errs.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errs) msg += " [" + e + "]";
        throw std::invalid_argument(msg);
    }
    return cfg;
}

} // namespace swipt
