#pragma once

#include <optional>

#include "swipt/config.hpp"

namespace swipt {

enum class Mode { Harvest, Relay, HarvestRelay, Idle };

const char* to_string(Mode m);

/// Uniform battery quantization grid. The nominal level parameter L is
/// capped by the EH sensitivity: L_eff = min(L, floor(p_b / eps_min)), so
/// the grid spacing is never finer than what the rectifier can register.
/// Levels are 0 = empty .. L_eff + 1 = full (p_b).
struct EnergyGrid {
    double p_b;
    int l_eff;

    double step() const { return p_b / (l_eff + 1); }
    int top() const { return l_eff + 1; }
    int num_levels() const { return l_eff + 2; }
    double level(int i) const { return i == top() ? p_b : i * step(); }

    static EnergyGrid make(const SystemConfig& cfg);
};

/// Two mirrored batteries sharing one residual level; tracked by grid index
/// so the residual is on-grid by construction.
struct BatteryGroup {
    int level_index = 0;

    double residual(const EnergyGrid& grid) const { return grid.level(level_index); }
};

/// Self-sustained relay power of the virtual harvest-transmit model:
/// p_r = eta*rho*p_s*g1 / (1 - eta*rho*g_a).
double relay_power_virtual(double g1, const SystemConfig& cfg);

/// Pre-conversion power at the EH receiver input for the given mode:
/// p_s*g1 when harvesting the whole signal (Harvest), the rho-split share
/// of signal plus loopback when also transmitting (HarvestRelay), 0 else.
double harvest_incident_power(Mode mode, double g1, double p_r, const SystemConfig& cfg);

/// Sensitivity-gated conversion: 0 below eps_min, eta * incident above.
double harvested_power(double incident, const SystemConfig& cfg);

/// Largest grid level strictly below the harvested amount (level 0 when no
/// positive level qualifies; capped at the full level).
int quantize_harvest(double harvested, const EnergyGrid& grid);

/// Smallest grid level >= p_r; empty when p_r exceeds the battery size.
std::optional<int> required_level(double p_r, const EnergyGrid& grid);

/// Battery update E0(t) = min(p_b, E0(t-1) - spent + gained), in level indices.
/// Overdraw is a policy bug and asserts.
BatteryGroup apply_update(BatteryGroup battery, int spent_index, int gained_index,
                          const EnergyGrid& grid);

} // namespace swipt
