#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swipt {

enum class ThresholdMode { PaperLiteral, SelfConsistent };
enum class SinrMode { Exact, MinApprox };
enum class PolicyKind { Virtual, GreedySwitching };

const char* to_string(ThresholdMode m);
const char* to_string(SinrMode m);
const char* to_string(PolicyKind p);

/// All physical and policy parameters for one simulation. Linear units
/// throughout (watts / dimensionless power gains); dB/dBm conversion happens
/// at the config-file boundary.
struct SystemConfig {
    // source power (one sweep point; the sweep grid lives in the CLI layer)
    double p_s = 1.0; // watts

    double eta = 0.3;      // energy conversion efficiency, (0,1)
    double rho = 0.5;      // power splitting ratio, [0,1]
    double gamma_th = 7.0; // target SINR, linear

    // noise powers, watts
    double sigma_a2 = 1e-13; // antenna, -100 dBm
    double sigma_p2 = 1e-12; // processing, -90 dBm
    double sigma_d2 = 1e-12; // destination, -90 dBm
    bool exact_sigma_r2 = false; // use (1-rho)*sigma_a2 + sigma_p2 instead of sigma_p2

    // large-scale path loss coefficients
    double path_loss_1 = 3.49e-4;
    double path_loss_2 = 4.59e-6;

    // Nakagami shape factors (gamma shape of the power gains)
    double m1 = 4.0;
    double m2 = 2.0;

    // residual self-interference power gains, linear
    double g_a = 0.1;  // -10 dB, analog domain
    double g_b = 0.01; // -20 dB, after digital cancellation

    double eps_min = 1.9952623149688787e-6; // EH sensitivity, watts (-27 dBm)

    double battery_alpha = 3.49e-4; // p_b = alpha * p_s
    int level_count_L = 100;        // nominal L; grid has L+2 levels before the eps_min cap
    int initial_energy_level = 0;

    ThresholdMode threshold_mode = ThresholdMode::SelfConsistent;
    // SinrMode::Exact for the virtual model, MinApprox for GS unless overridden
    bool sinr_mode_overridden = false;
    SinrMode sinr_mode = SinrMode::Exact;

    // simulation controls
    std::int64_t n_blocks = 1'000'000;
    std::int64_t warmup_blocks = 1'000;
    std::uint64_t seed = 12345;

    // derived, populated by validate()
    double p_b = 0.0;      // battery size, watts
    double theta1 = 0.0;   // gamma scale of g1
    double theta2 = 0.0;   // gamma scale of g2
    double sigma_r2 = 0.0; // effective relay processing noise
    bool validated = false;

    SinrMode sinr_mode_for(PolicyKind p) const {
        if (sinr_mode_overridden) return sinr_mode;
        return p == PolicyKind::Virtual ? SinrMode::Exact : SinrMode::MinApprox;
    }

    /// Copy of this config at a different source power, revalidated.
    SystemConfig at_ps(double ps) const;
};

/// Checks every invariant and fills the derived fields. Returns the list of
/// violated invariants, empty on success. Idempotent.
std::vector<std::string> validate(SystemConfig& cfg);

/// Throwing wrapper around validate().
SystemConfig validate_or_throw(SystemConfig cfg);

} // namespace swipt
