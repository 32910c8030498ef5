#pragma once

#include <cstdint>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/config.hpp"
#include "swipt/energy.hpp"
#include "swipt/policy.hpp"

namespace swipt {

struct OutageEstimate {
    bool defined = false; // false when n_blocks == 0
    double p_outage = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::int64_t n_blocks = 0;
    double frac_mu_h = 0.0;
    double frac_mu_r = 0.0;
    double frac_mu_hr = 0.0;
    double frac_mu_phi = 0.0;
    double mean_residual = 0.0; // watts; 0 for the (battery-free) virtual model
};

/// Empirical battery-state transition counts over grid level indices.
/// Rows with no visits stay flagged as unvisited; nothing is fabricated.
struct TransitionMatrix {
    int num_states = 0;
    std::vector<std::int64_t> counts; // row-major num_states x num_states

    std::int64_t count(int from, int to) const { return counts[from * num_states + to]; }
    std::int64_t row_total(int from) const;
    bool row_visited(int from) const { return row_total(from) > 0; }
    /// Row-normalized probability; only meaningful for visited rows.
    double prob(int from, int to) const;
};

struct TrialResult {
    OutageEstimate estimate;
    TransitionMatrix transitions;
};

/// 95% Wilson score interval. n == 0 yields the degenerate (0, 1) interval.
void wilson_interval(std::int64_t successes, std::int64_t n, double& low, double& high);

/// One long trial at cfg.p_s: warmup_blocks discarded, then n_blocks counted.
/// GS carries the battery across blocks; the virtual model is stateless.
TrialResult run_trial(PolicyKind policy, const SystemConfig& cfg, RandomStream& stream);

/// Test hook: same loop with externally supplied per-block gains.
TrialResult run_trial_with_draws(PolicyKind policy, const SystemConfig& cfg,
                                 const std::vector<ChannelDraw>& draws,
                                 std::vector<Decision>* decisions_out = nullptr,
                                 std::vector<int>* battery_out = nullptr);

struct SweepRow {
    PolicyKind policy;
    int level_count_L; // grid parameter used for this row
    double p_s_dbm;
    double rho;
    OutageEstimate estimate;
};

/// Full sweep: the virtual model once per p_s, GS once per (L-preset, p_s).
/// Each row owns a stream derived from (policy, preset, grid index), so the
/// result is identical for any worker count.
std::vector<SweepRow> run_sweep(const std::vector<PolicyKind>& policies,
                                const std::vector<double>& p_s_grid_dbm,
                                const std::vector<int>& level_presets,
                                const SystemConfig& base_cfg, int workers);

} // namespace swipt
