#include "swipt/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "swipt/link.hpp"
#include "swipt/policy.hpp"
#include "swipt/units.hpp"

namespace swipt {

std::int64_t TransitionMatrix::row_total(int from) const {
    std::int64_t total = 0;
    for (int j = 0; j < num_states; ++j) total += count(from, j);
    return total;
}

double TransitionMatrix::prob(int from, int to) const {
    std::int64_t total = row_total(from);
    if (total == 0) return 0.0;
    return static_cast<double>(count(from, to)) / static_cast<double>(total);
}

void wilson_interval(std::int64_t successes, std::int64_t n, double& low, double& high) {
    if (n == 0) {
        low = 0.0;
        high = 1.0;
        return;
    }
    const double z = 1.959963984540054; // 95%
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = phat + z2 / (2.0 * nn);
    double margin = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    // at the boundaries center == margin analytically; pin to avoid rounding dust
    low = successes == 0 ? 0.0 : (center - margin) / denom;
    high = successes == n ? 1.0 : (center + margin) / denom;
    if (low < 0.0) low = 0.0;
    if (high > 1.0) high = 1.0;
}

namespace {

struct Accumulator {
    std::int64_t outages = 0;
    std::int64_t non_transmit = 0;
    std::int64_t mode_count[4] = {0, 0, 0, 0};
    double residual_sum = 0.0;
    std::int64_t n = 0;
};

int mode_index(Mode m) {
    switch (m) {
        case Mode::Harvest: return 0;
        case Mode::Relay: return 1;
        case Mode::HarvestRelay: return 2;
        case Mode::Idle: return 3;
    }
    return 3;
}

OutageEstimate finalize(const Accumulator& acc) {
    OutageEstimate e;
    e.n_blocks = acc.n;
    if (acc.n == 0) return e; // defined stays false, no NaN propagation
    e.defined = true;
    double n = static_cast<double>(acc.n);
    e.p_outage = static_cast<double>(acc.outages) / n;
    wilson_interval(acc.outages, acc.n, e.ci_low, e.ci_high);
    e.frac_mu_h = static_cast<double>(acc.mode_count[0]) / n;
    e.frac_mu_r = static_cast<double>(acc.mode_count[1]) / n;
    e.frac_mu_hr = static_cast<double>(acc.mode_count[2]) / n;
    e.frac_mu_phi = static_cast<double>(acc.mode_count[3]) / n;
    e.mean_residual = acc.residual_sum / n;
    return e;
}

// Per-block GS invariants that must hold by construction.
void check_gs_block(const Decision& d, const BatteryGroup& before, const BatteryGroup& after,
                    const EnergyGrid& grid, bool outage, const SystemConfig& cfg) {
    int spent = d.transmitted ? *d.required_level_index : 0;
    int gained = d.harvested ? d.harvested_level : 0;
    int unclipped = before.level_index - spent + gained;
    if (after.level_index != std::min(unclipped, grid.top()))
        throw std::logic_error("engine: per-block energy conservation violated");
    if (cfg.threshold_mode == ThresholdMode::SelfConsistent &&
        cfg.sinr_mode_for(PolicyKind::GreedySwitching) == SinrMode::MinApprox) {
        // under the default decoding rule an outage is exactly a non-transmit block
        if (outage != !d.transmitted)
            throw std::logic_error("engine: transmitting block decoded as outage");
    }
}

template <typename DrawFn>
TrialResult run_loop(PolicyKind policy, const SystemConfig& cfg, DrawFn&& next_draw,
                     std::int64_t total_blocks, std::vector<Decision>* decisions_out,
                     std::vector<int>* battery_out) {
    if (!cfg.validated) throw std::invalid_argument("run_trial: unvalidated config");

    EnergyGrid grid = EnergyGrid::make(cfg);
    BatteryGroup battery{std::min(cfg.initial_energy_level, grid.top())};
    const SinrMode sinr_mode = cfg.sinr_mode_for(policy);
    const bool is_gs = policy == PolicyKind::GreedySwitching;

    Accumulator acc;
    TransitionMatrix tm;
    if (is_gs) {
        tm.num_states = grid.num_levels();
        tm.counts.assign(static_cast<size_t>(tm.num_states) * tm.num_states, 0);
    }

    for (std::int64_t t = 0; t < total_blocks; ++t) {
        ChannelDraw draw = next_draw();
        Decision d = is_gs ? gs_decide(draw, battery.level_index, grid, cfg)
                           : virtual_decide(draw, cfg);
        SinrPair pair = sinr_pair(draw, d.p_r, d.rho_eff, cfg);
        bool outage = is_outage(d, pair, sinr_mode, cfg);

        BatteryGroup next = battery;
        if (is_gs) {
            int spent = d.transmitted ? *d.required_level_index : 0;
            int gained = d.harvested ? d.harvested_level : 0;
            next = apply_update(battery, spent, gained, grid);
            check_gs_block(d, battery, next, grid, outage, cfg);
        }

        bool counted = t >= cfg.warmup_blocks;
        if (counted) {
            acc.n += 1;
            acc.outages += outage ? 1 : 0;
            acc.non_transmit += d.transmitted ? 0 : 1;
            acc.mode_count[mode_index(d.mode)] += 1;
            acc.residual_sum += is_gs ? battery.residual(grid) : 0.0;
            if (is_gs)
                tm.counts[static_cast<size_t>(battery.level_index) * tm.num_states +
                          next.level_index] += 1;
        }
        if (decisions_out) decisions_out->push_back(d);
        battery = next;
        if (battery_out) battery_out->push_back(battery.level_index);
    }

    TrialResult result{finalize(acc), std::move(tm)};
    return result;
}

} // namespace

TrialResult run_trial(PolicyKind policy, const SystemConfig& cfg, RandomStream& stream) {
    auto draw_fn = [&]() { return sample_block(stream, cfg); };
    return run_loop(policy, cfg, draw_fn, cfg.warmup_blocks + cfg.n_blocks, nullptr, nullptr);
}

TrialResult run_trial_with_draws(PolicyKind policy, const SystemConfig& cfg,
                                 const std::vector<ChannelDraw>& draws,
                                 std::vector<Decision>* decisions_out,
                                 std::vector<int>* battery_out) {
    size_t i = 0;
    auto draw_fn = [&]() { return draws[i++]; };
    std::int64_t total = static_cast<std::int64_t>(draws.size());
    return run_loop(policy, cfg, draw_fn, total, decisions_out, battery_out);
}

namespace {

struct SweepTask {
    PolicyKind policy;
    int level_preset; // grid L for this row
    size_t ps_index;
    double p_s_dbm;
    std::uint64_t stream_index;
};

} // namespace

std::vector<SweepRow> run_sweep(const std::vector<PolicyKind>& policies,
                                const std::vector<double>& p_s_grid_dbm,
                                const std::vector<int>& level_presets,
                                const SystemConfig& base_cfg, int workers) {
    if (p_s_grid_dbm.empty()) throw std::invalid_argument("run_sweep: empty p_s grid");

    // Stream indices depend only on (policy, preset slot, grid slot), never
    // on execution order, so worker count cannot change the results.
    std::vector<SweepTask> tasks;
    for (size_t pi = 0; pi < policies.size(); ++pi) {
        PolicyKind policy = policies[pi];
        std::vector<int> presets = policy == PolicyKind::GreedySwitching
                                       ? level_presets
                                       : std::vector<int>{base_cfg.level_count_L};
        std::uint64_t policy_tag = policy == PolicyKind::Virtual ? 0 : 1;
        for (size_t li = 0; li < presets.size(); ++li) {
            for (size_t gi = 0; gi < p_s_grid_dbm.size(); ++gi) {
                std::uint64_t sidx = (policy_tag << 40) | (static_cast<std::uint64_t>(li) << 20) |
                                     static_cast<std::uint64_t>(gi);
                tasks.push_back({policy, presets[li], gi, p_s_grid_dbm[gi], sidx});
            }
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    std::atomic<size_t> next{0};
    auto worker_fn = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const SweepTask& task = tasks[i];
            SystemConfig cfg = base_cfg;
            cfg.level_count_L = task.level_preset;
            cfg = cfg.at_ps(dbm_to_watts(task.p_s_dbm));
            RandomStream stream = derive_stream(base_cfg.seed, task.stream_index);
            TrialResult trial = run_trial(task.policy, cfg, stream);
            rows[i] = SweepRow{task.policy, task.level_preset, task.p_s_dbm, cfg.rho,
                               trial.estimate};
        }
    };

    if (workers <= 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace swipt
