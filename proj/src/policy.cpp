#include "swipt/policy.hpp"

#include <stdexcept>

namespace swipt {

double c1_threshold(double g2, const SystemConfig& cfg) {
    if (g2 <= 0.0) throw std::invalid_argument("c1_threshold: g2 must be positive");
    if (cfg.rho >= 1.0) throw std::invalid_argument("c1_threshold: undefined at rho = 1");
    double one_minus_rho = 1.0 - cfg.rho;
    double num = cfg.gamma_th *
                 (one_minus_rho * cfg.g_b * cfg.gamma_th * cfg.sigma_d2 + g2 * cfg.sigma_r2);
    double denom = one_minus_rho * cfg.sigma_r2;
    if (cfg.threshold_mode == ThresholdMode::SelfConsistent) denom *= g2;
    return num / denom;
}

namespace {

// first-hop feasibility of the harvest-relay mode (split active)
bool hr_first_hop_ok(const ChannelDraw& draw, const SystemConfig& cfg) {
    return cfg.p_s * draw.g1 / cfg.sigma_r2 > c1_threshold(draw.g2, cfg);
}

// first-hop feasibility of the relay-only mode (no split this block)
bool r_first_hop_ok(const ChannelDraw& draw, double p_r, const SystemConfig& cfg) {
    if (cfg.threshold_mode == ThresholdMode::PaperLiteral)
        return cfg.p_s * draw.g1 / cfg.sigma_r2 > cfg.gamma_th;
    // gamma_r with rho = 0, digital-domain RSI included
    return cfg.p_s * draw.g1 / (p_r * cfg.g_b + cfg.sigma_r2) >= cfg.gamma_th;
}

int gated_quantized_harvest(Mode mode, const ChannelDraw& draw, double p_r,
                            const EnergyGrid& grid, const SystemConfig& cfg) {
    double incident = harvest_incident_power(mode, draw.g1, p_r, cfg);
    return quantize_harvest(harvested_power(incident, cfg), grid);
}

} // namespace

Decision gs_decide(const ChannelDraw& draw, int residual_index, const EnergyGrid& grid,
                   const SystemConfig& cfg) {
    Decision d;
    const double p_r_cand = cfg.gamma_th * cfg.sigma_d2 / draw.g2; // channel inversion
    d.required_level_index = required_level(p_r_cand, grid);

    const bool hr_ok = hr_first_hop_ok(draw, cfg);
    const bool r_ok = r_first_hop_ok(draw, p_r_cand, cfg);
    const bool can_pay =
        d.required_level_index.has_value() && residual_index >= *d.required_level_index;

    const int eps_hr = gated_quantized_harvest(Mode::HarvestRelay, draw, p_r_cand, grid, cfg);
    const int eps_h = gated_quantized_harvest(Mode::Harvest, draw, 0.0, grid, cfg);

    if (can_pay && hr_ok && eps_hr >= 1) {
        d.mode = Mode::HarvestRelay;
        d.p_r = p_r_cand;
        d.rho_eff = cfg.rho;
        d.harvested_level = eps_hr;
        d.transmitted = true;
        d.harvested = true;
    } else if (can_pay && (hr_ok || r_ok)) {
        d.mode = Mode::Relay;
        d.p_r = p_r_cand;
        d.rho_eff = 0.0; // whole received signal to information this block
        d.harvested_level = 0;
        d.transmitted = true;
    } else if (eps_h >= 1) {
        d.mode = Mode::Harvest;
        d.harvested_level = eps_h;
        d.harvested = true;
    } else {
        d.mode = Mode::Idle;
    }
    return d;
}

Decision virtual_decide(const ChannelDraw& draw, const SystemConfig& cfg) {
    Decision d;
    double p_r = relay_power_virtual(draw.g1, cfg);
    double incident = harvest_incident_power(Mode::HarvestRelay, draw.g1, p_r, cfg);
    if (harvested_power(incident, cfg) <= 0.0 || p_r <= 0.0) {
        d.mode = Mode::Idle; // EH outage: nothing harvested, nothing to transmit
        return d;
    }
    d.mode = Mode::HarvestRelay;
    d.p_r = p_r;
    d.rho_eff = cfg.rho;
    d.transmitted = true;
    d.harvested = true;
    return d;
}

} // namespace swipt
