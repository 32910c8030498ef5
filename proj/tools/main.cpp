#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swipt/analysis.hpp"
#include "swipt/engine.hpp"
#include "swipt/io.hpp"
#include "swipt/link.hpp"
#include "swipt/policy.hpp"
#include "swipt/units.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

const std::vector<std::string> kConfigKeys = {
    "eta", "rho", "gamma_th", "sigma_a2_dbm", "sigma_p2_dbm", "sigma_d2_dbm",
    "exact_sigma_r2", "path_loss_1", "path_loss_2", "m1", "m2", "g_a_db", "g_b_db",
    "eps_min_dbm", "battery_alpha", "level_count_L", "initial_energy_level",
    "threshold_mode", "sinr_mode", "n_blocks", "warmup_blocks", "seed", "p_s_dbm",
    "policies", "levels", "workers"};

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::map<std::string, std::string> overrides;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "key-value config file");
    cmd->add_option("--out", args.out_dir, "output directory");
    for (const auto& key : kConfigKeys) {
        std::string dashed = key;
        for (auto& ch : dashed)
            if (ch == '_') ch = '-';
        std::string names = "--" + key;
        if (dashed != key) names += ",--" + dashed;
        cmd->add_option_function<std::string>(
            names, [&args, key](const std::string& v) { args.overrides[key] = v; },
            "config key " + key);
    }
}

int load_run_spec(const CommonArgs& args, swipt::RunSpec& spec) {
    std::vector<std::string> errors;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) {
            std::cerr << "error: cannot read config file: " << args.config_path << "\n";
            return kExitConfig;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto keys = swipt::parse_key_value_text(text, errors);
        swipt::apply_keys(keys, spec, errors);
    }
    swipt::apply_keys(args.overrides, spec, errors);

    // validation needs a concrete p_s; use the first grid point
    if (spec.p_s_grid_dbm.empty()) errors.push_back("p_s_dbm: empty grid");
    if (errors.empty()) {
        spec.cfg.p_s = swipt::dbm_to_watts(spec.p_s_grid_dbm.front());
        spec.cfg.validated = false;
        auto verrs = swipt::validate(spec.cfg);
        errors.insert(errors.end(), verrs.begin(), verrs.end());
    }
    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
        return kExitConfig;
    }
    if (spec.workers <= 0)
        spec.workers = std::max(1u, std::thread::hardware_concurrency());
    return kExitOk;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return out.good();
}

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

int cmd_sweep(const CommonArgs& args, bool emit_plot) {
    swipt::RunSpec spec;
    int rc = load_run_spec(args, spec);
    if (rc != kExitOk) return rc;

    auto rows = swipt::run_sweep(spec.policies, spec.p_s_grid_dbm, spec.level_presets,
                                 spec.cfg, spec.workers);

    std::string base = args.out_dir + "/results";
    if (!write_file(base + ".csv", swipt::sweep_csv(rows))) return kExitConfig;
    if (!write_file(base + ".manifest.txt", swipt::manifest_text(spec, now_utc())))
        return kExitConfig;
    if (emit_plot && !write_file(base + ".svg", swipt::sweep_svg(rows))) return kExitConfig;
    std::cout << "wrote " << base << ".csv (" << rows.size() << " rows)\n";
    return kExitOk;
}

int cmd_oracle(const CommonArgs& args, const swipt::QuadratureSpec& qspec) {
    swipt::RunSpec spec;
    int rc = load_run_spec(args, spec);
    if (rc != kExitOk) return rc;

    std::string csv = "p_s_dbm,outage_quadrature,error_bound\n";
    try {
        for (double dbm : spec.p_s_grid_dbm) {
            auto cfg = spec.cfg.at_ps(swipt::dbm_to_watts(dbm));
            auto r = swipt::outage_virtual_quadrature(cfg, qspec);
            csv += fmt9(dbm) + "," + fmt9(r.value) + "," + fmt9(r.error_bound) + "\n";
        }
    } catch (const swipt::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }

    std::string base = args.out_dir + "/oracle";
    if (!write_file(base + ".csv", csv)) return kExitConfig;
    if (!write_file(base + ".manifest.txt", swipt::manifest_text(spec, now_utc())))
        return kExitConfig;
    std::cout << "wrote " << base << ".csv\n";
    return kExitOk;
}

int cmd_trace(const CommonArgs& args, std::int64_t n) {
    swipt::RunSpec spec;
    int rc = load_run_spec(args, spec);
    if (rc != kExitOk) return rc;

    auto cfg = spec.cfg; // already validated at the first grid point
    swipt::EnergyGrid grid = swipt::EnergyGrid::make(cfg);
    swipt::RandomStream stream = swipt::derive_stream(cfg.seed, /*trace stream*/ 0xD0);
    std::string csv = "t,g1,g2,mode,p_r,eps,eps_prime,E0,outage\n";
    swipt::BatteryGroup battery{std::min(cfg.initial_energy_level, grid.top())};
    for (std::int64_t t = 0; t < n; ++t) {
        swipt::ChannelDraw draw = swipt::sample_block(stream, cfg);
        swipt::Decision d = swipt::gs_decide(draw, battery.level_index, grid, cfg);
        swipt::SinrPair pair = swipt::sinr_pair(draw, d.p_r, d.rho_eff, cfg);
        bool outage = swipt::is_outage(d, pair,
                                       cfg.sinr_mode_for(swipt::PolicyKind::GreedySwitching), cfg);
        int spent = d.transmitted ? *d.required_level_index : 0;
        int gained = d.harvested ? d.harvested_level : 0;
        battery = swipt::apply_update(battery, spent, gained, grid);
        csv += std::to_string(t) + "," + fmt9(draw.g1) + "," + fmt9(draw.g2) + "," +
               swipt::to_string(d.mode) + "," + fmt9(d.p_r) + "," +
               fmt9(grid.level(gained)) + "," +
               (d.required_level_index ? fmt9(grid.level(*d.required_level_index))
                                       : std::string("inf")) +
               "," + fmt9(battery.residual(grid)) + "," + (outage ? "1" : "0") + "\n";
    }

    std::string base = args.out_dir + "/trace";
    if (!write_file(base + ".csv", csv)) return kExitConfig;
    if (!write_file(base + ".manifest.txt", swipt::manifest_text(spec, now_utc())))
        return kExitConfig;
    std::cout << "wrote " << base << ".csv\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo outage simulator for a SWIPT-powered full-duplex AF relay"};
    app.require_subcommand(1);

    CommonArgs sweep_args, oracle_args, trace_args;
    bool plot = false;
    swipt::QuadratureSpec qspec;
    std::int64_t trace_n = 20;

    auto* sweep = app.add_subcommand("sweep", "Monte Carlo outage sweep over p_s");
    add_common_options(sweep, sweep_args);
    sweep->add_flag("--plot", plot, "also emit results.svg");

    auto* oracle = app.add_subcommand("oracle", "quadrature outage curve (virtual model)");
    add_common_options(oracle, oracle_args);
    oracle->add_option("--abs-tol", qspec.abs_tol, "absolute tolerance");
    oracle->add_option("--rel-tol", qspec.rel_tol, "relative tolerance");
    oracle->add_option("--max-subdivisions", qspec.max_subdivisions, "subdivision budget");

    auto* trace = app.add_subcommand("trace", "per-block GS trajectory log");
    add_common_options(trace, trace_args);
    trace->add_option("-n,--blocks", trace_n, "number of blocks to trace");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_args, plot);
        if (oracle->parsed()) return cmd_oracle(oracle_args, qspec);
        if (trace->parsed()) return cmd_trace(trace_args, trace_n);
    } catch (const swipt::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
