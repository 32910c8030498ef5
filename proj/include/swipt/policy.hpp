#pragma once

#include <optional>

#include "swipt/channel.hpp"
#include "swipt/config.hpp"
#include "swipt/energy.hpp"

namespace swipt {

/// Per-block policy outcome. transmitted/harvested mirror the w1/w2
/// indicator variables of the battery update.
struct Decision {
    Mode mode = Mode::Idle;
    double p_r = 0.0;     // radiated power, watts
    double rho_eff = 0.0; // effective split for the information branch this block
    int harvested_level = 0;                 // epsilon, grid index
    std::optional<int> required_level_index; // epsilon', empty = infeasible
    bool transmitted = false;                // w1
    bool harvested = false;                  // w2
};

/// First-hop admission threshold C1 for the harvest-relay mode.
/// paper-literal evaluates the printed expression; self-consistent divides
/// by g2, which is the form that actually solves gamma_r = gamma_th at
/// p_r = gamma_th*sigma_d^2/g2.
double c1_threshold(double g2, const SystemConfig& cfg);

/// Greedy switching: transmit (preferring harvest-relay) whenever the stored
/// energy covers the channel-inversion quantum, otherwise harvest if at
/// least one quantum is available, else idle.
Decision gs_decide(const ChannelDraw& draw, int residual_index, const EnergyGrid& grid,
                   const SystemConfig& cfg);

/// Virtual harvest-transmit: always harvest-relay with the self-sustained
/// power, except when sensitivity gating makes the block an EH outage.
Decision virtual_decide(const ChannelDraw& draw, const SystemConfig& cfg);

} // namespace swipt
