#include "swipt/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Harvest: return "mu_h";
        case Mode::Relay: return "mu_r";
        case Mode::HarvestRelay: return "mu_hr";
        case Mode::Idle: return "mu_phi";
    }
    return "?";
}

EnergyGrid EnergyGrid::make(const SystemConfig& cfg) {
    int l_eff = cfg.level_count_L;
    if (cfg.eps_min > 0.0) {
        double cap = std::floor(cfg.p_b / cfg.eps_min);
        if (cap < static_cast<double>(l_eff)) l_eff = static_cast<int>(cap);
    }
    if (l_eff < 0) l_eff = 0;
    return EnergyGrid{cfg.p_b, l_eff};
}

double relay_power_virtual(double g1, const SystemConfig& cfg) {
    double denom = 1.0 - cfg.eta * cfg.rho * cfg.g_a;
    if (denom <= 0.0) throw std::domain_error("relay_power_virtual: self-energy instability");
    return cfg.eta * cfg.rho * cfg.p_s * g1 / denom;
}

double harvest_incident_power(Mode mode, double g1, double p_r, const SystemConfig& cfg) {
    switch (mode) {
        case Mode::Harvest:
            return cfg.p_s * g1; // relay silent, whole signal to EH, no split
        case Mode::HarvestRelay:
            return cfg.rho * (cfg.p_s * g1 + p_r * cfg.g_a);
        case Mode::Relay:
        case Mode::Idle:
            return 0.0;
    }
    return 0.0;
}

double harvested_power(double incident, const SystemConfig& cfg) {
    if (incident < cfg.eps_min) return 0.0; // EH outage
    return cfg.eta * incident;
}

int quantize_harvest(double harvested, const EnergyGrid& grid) {
    if (harvested <= 0.0) return 0;
    int idx = static_cast<int>(std::floor(harvested / grid.step()));
    if (idx > grid.top()) idx = grid.top();
    // strict inequality: an exact grid multiple rounds down one level
    while (idx > 0 && grid.level(idx) >= harvested) --idx;
    return idx;
}

std::optional<int> required_level(double p_r, const EnergyGrid& grid) {
    if (p_r > grid.p_b) return std::nullopt;
    int idx = static_cast<int>(std::ceil(p_r / grid.step()));
    if (idx < 1) idx = 1;
    while (idx > 1 && grid.level(idx - 1) >= p_r) --idx;
    while (idx <= grid.top() && grid.level(idx) < p_r) ++idx;
    if (idx > grid.top()) return std::nullopt; // rounding pushed past full
    return idx;
}

BatteryGroup apply_update(BatteryGroup battery, int spent_index, int gained_index,
                          const EnergyGrid& grid) {
    if (spent_index < 0 || gained_index < 0)
        throw std::logic_error("apply_update: negative level index");
    if (battery.level_index < spent_index)
        throw std::logic_error("apply_update: battery overdraw");
    int next = battery.level_index - spent_index + gained_index;
    if (next > grid.top()) next = grid.top(); // saturation at p_b
    return BatteryGroup{next};
}

} // namespace swipt
