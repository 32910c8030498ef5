#pragma once

#include <map>
#include <string>
#include <vector>

#include "swipt/config.hpp"
#include "swipt/engine.hpp"

namespace swipt {

/// 0..46 dBm in 2 dB steps.
std::vector<double> default_ps_grid_dbm();

/// Everything the CLI resolves beyond the physics: sweep grid, policies,
/// level presets, worker count.
struct RunSpec {
    SystemConfig cfg;
    std::vector<double> p_s_grid_dbm = default_ps_grid_dbm();
    std::vector<PolicyKind> policies = {PolicyKind::Virtual, PolicyKind::GreedySwitching};
    std::vector<int> level_presets = {10, 50, 100};
    int workers = 0; // 0 = hardware concurrency
};

/// Flat key-value config text: one "key = value" per line, '#' comments.
/// Keys mirror the SystemConfig fields; dB/dBm quantities carry _db/_dbm
/// suffixes. Unknown keys are errors.
std::map<std::string, std::string> parse_key_value_text(const std::string& text,
                                                        std::vector<std::string>& errors);

/// Applies parsed keys onto a RunSpec; each violation is reported by name.
void apply_keys(const std::map<std::string, std::string>& keys, RunSpec& spec,
                std::vector<std::string>& errors);

/// "a:b:step" range or comma-separated list of dBm values.
std::vector<double> parse_dbm_grid(const std::string& text, std::vector<std::string>& errors);

/// Pinned CSV schema: policy, L, p_s_dbm, rho, outage, ci_low, ci_high,
/// n_blocks, frac_mu_h, frac_mu_r, frac_mu_hr, frac_mu_phi, mean_residual.
/// Probabilities at 9 significant digits, LF line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Resolved-config snapshot: the canonical serialization that both the
/// manifest and the config hash are computed from.
std::string serialize_run_spec(const RunSpec& spec);

std::string manifest_text(const RunSpec& spec, const std::string& timestamp);

/// Minimal log-y SVG of outage vs p_s, one polyline per (policy, L) series.
std::string sweep_svg(const std::vector<SweepRow>& rows);

} // namespace swipt
