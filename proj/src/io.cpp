#include "swipt/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "swipt/units.hpp"

namespace swipt {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& v, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(v, &pos);
        return pos == v.size() && std::isfinite(out);
    } catch (...) {
        return false;
    }
}

bool parse_int64(const std::string& v, std::int64_t& out) {
    try {
        size_t pos = 0;
        out = std::stoll(v, &pos);
        return pos == v.size();
    } catch (...) {
        return false;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

} // namespace

std::vector<double> default_ps_grid_dbm() {
    std::vector<double> grid;
    for (int dbm = 0; dbm <= 46; dbm += 2) grid.push_back(dbm);
    return grid;
}

std::map<std::string, std::string> parse_key_value_text(const std::string& text,
                                                        std::vector<std::string>& errors) {
    std::map<std::string, std::string> keys;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            errors.push_back("line " + std::to_string(lineno) + ": empty key or value");
            continue;
        }
        keys[key] = value;
    }
    return keys;
}

std::vector<double> parse_dbm_grid(const std::string& text, std::vector<std::string>& errors) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        double a = 0, b = 0, step = 0;
        if (parts.size() != 3 || !parse_double(parts[0], a) || !parse_double(parts[1], b) ||
            !parse_double(parts[2], step) || step <= 0) {
            errors.push_back("p_s_dbm: range must be a:b:step with positive step");
            return grid;
        }
        for (double x = a; x <= b + 1e-9; x += step) grid.push_back(x);
        return grid;
    }
    for (const auto& part : split(text, ',')) {
        double x = 0;
        if (!parse_double(part, x)) {
            errors.push_back("p_s_dbm: bad value '" + part + "'");
            continue;
        }
        grid.push_back(x);
    }
    if (grid.empty()) errors.push_back("p_s_dbm: empty grid");
    return grid;
}

void apply_keys(const std::map<std::string, std::string>& keys, RunSpec& spec,
                std::vector<std::string>& errors) {
    SystemConfig& c = spec.cfg;
    for (const auto& [key, value] : keys) {
        auto bad = [&](const char* why) { errors.push_back(key + ": " + why); };
        auto set_d = [&](double& field) {
            double x;
            parse_double(value, x) ? void(field = x) : bad("expected a number");
        };
        auto set_db = [&](double& field) {
            double x;
            parse_double(value, x) ? void(field = db_to_linear(x)) : bad("expected dB value");
        };
        auto set_dbm = [&](double& field) {
            double x;
            parse_double(value, x) ? void(field = dbm_to_watts(x)) : bad("expected dBm value");
        };
        auto set_i64 = [&](std::int64_t& field) {
            std::int64_t x;
            parse_int64(value, x) ? void(field = x) : bad("expected an integer");
        };

        if (key == "eta") set_d(c.eta);
        else if (key == "rho") set_d(c.rho);
        else if (key == "gamma_th") set_d(c.gamma_th);
        else if (key == "sigma_a2_dbm") set_dbm(c.sigma_a2);
        else if (key == "sigma_p2_dbm") set_dbm(c.sigma_p2);
        else if (key == "sigma_d2_dbm") set_dbm(c.sigma_d2);
        else if (key == "exact_sigma_r2") c.exact_sigma_r2 = (value == "true" || value == "1");
        else if (key == "path_loss_1") set_d(c.path_loss_1);
        else if (key == "path_loss_2") set_d(c.path_loss_2);
        else if (key == "m1") set_d(c.m1);
        else if (key == "m2") set_d(c.m2);
        else if (key == "g_a_db") set_db(c.g_a);
        else if (key == "g_b_db") set_db(c.g_b);
        else if (key == "eps_min_dbm") set_dbm(c.eps_min);
        else if (key == "battery_alpha") set_d(c.battery_alpha);
        else if (key == "level_count_L") {
            std::int64_t x;
            parse_int64(value, x) ? void(c.level_count_L = static_cast<int>(x))
                                  : bad("expected an integer");
        } else if (key == "initial_energy_level") {
            std::int64_t x;
            parse_int64(value, x) ? void(c.initial_energy_level = static_cast<int>(x))
                                  : bad("expected an integer");
        } else if (key == "threshold_mode") {
            if (value == "paper-literal") c.threshold_mode = ThresholdMode::PaperLiteral;
            else if (value == "self-consistent") c.threshold_mode = ThresholdMode::SelfConsistent;
            else bad("expected paper-literal or self-consistent");
        } else if (key == "sinr_mode") {
            if (value == "auto") c.sinr_mode_overridden = false;
            else if (value == "exact") {
                c.sinr_mode_overridden = true;
                c.sinr_mode = SinrMode::Exact;
            } else if (value == "min-approx") {
                c.sinr_mode_overridden = true;
                c.sinr_mode = SinrMode::MinApprox;
            } else bad("expected auto, exact or min-approx");
        } else if (key == "n_blocks") set_i64(c.n_blocks);
        else if (key == "warmup_blocks") set_i64(c.warmup_blocks);
        else if (key == "seed") {
            std::int64_t x;
            parse_int64(value, x) ? void(c.seed = static_cast<std::uint64_t>(x))
                                  : bad("expected an integer");
        } else if (key == "p_s_dbm") {
            spec.p_s_grid_dbm = parse_dbm_grid(value, errors);
        } else if (key == "policies") {
            spec.policies.clear();
            for (const auto& p : split(value, ',')) {
                if (p == "virtual") spec.policies.push_back(PolicyKind::Virtual);
                else if (p == "gs") spec.policies.push_back(PolicyKind::GreedySwitching);
                else bad("unknown policy (want virtual or gs)");
            }
        } else if (key == "levels") {
            spec.level_presets.clear();
            for (const auto& p : split(value, ',')) {
                std::int64_t x;
                if (parse_int64(p, x) && x >= 0)
                    spec.level_presets.push_back(static_cast<int>(x));
                else bad("levels must be nonnegative integers");
            }
        } else if (key == "workers") {
            std::int64_t x;
            parse_int64(value, x) ? void(spec.workers = static_cast<int>(x))
                                  : bad("expected an integer");
        } else {
            errors.push_back("unknown key: " + key);
        }
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "policy,L,p_s_dbm,rho,outage,ci_low,ci_high,n_blocks,"
        "frac_mu_h,frac_mu_r,frac_mu_hr,frac_mu_phi,mean_residual\n";
    for (const auto& r : rows) {
        const OutageEstimate& e = r.estimate;
        out += to_string(r.policy);
        out += "," + std::to_string(r.level_count_L);
        out += "," + fmt9(r.p_s_dbm);
        out += "," + fmt9(r.rho);
        if (e.defined) {
            out += "," + fmt9(e.p_outage) + "," + fmt9(e.ci_low) + "," + fmt9(e.ci_high);
        } else {
            out += ",undefined,undefined,undefined";
        }
        out += "," + std::to_string(e.n_blocks);
        out += "," + fmt9(e.frac_mu_h) + "," + fmt9(e.frac_mu_r) + "," + fmt9(e.frac_mu_hr) +
               "," + fmt9(e.frac_mu_phi);
        out += "," + fmt9(e.mean_residual);
        out += "\n";
    }
    return out;
}

std::string serialize_run_spec(const RunSpec& spec) {
    const SystemConfig& c = spec.cfg;
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    kv("eta", fmt9(c.eta));
    kv("rho", fmt9(c.rho));
    kv("gamma_th", fmt9(c.gamma_th));
    kv("sigma_a2_dbm", fmt9(watts_to_dbm(c.sigma_a2)));
    kv("sigma_p2_dbm", fmt9(watts_to_dbm(c.sigma_p2)));
    kv("sigma_d2_dbm", fmt9(watts_to_dbm(c.sigma_d2)));
    kv("exact_sigma_r2", c.exact_sigma_r2 ? "true" : "false");
    kv("path_loss_1", fmt9(c.path_loss_1));
    kv("path_loss_2", fmt9(c.path_loss_2));
    kv("m1", fmt9(c.m1));
    kv("m2", fmt9(c.m2));
    kv("g_a_db", fmt9(linear_to_db(c.g_a)));
    kv("g_b_db", fmt9(linear_to_db(c.g_b)));
    kv("eps_min_dbm", fmt9(watts_to_dbm(c.eps_min)));
    kv("battery_alpha", fmt9(c.battery_alpha));
    kv("level_count_L", std::to_string(c.level_count_L));
    kv("initial_energy_level", std::to_string(c.initial_energy_level));
    kv("threshold_mode", to_string(c.threshold_mode));
    kv("sinr_mode", c.sinr_mode_overridden ? to_string(c.sinr_mode) : "auto");
    kv("n_blocks", std::to_string(c.n_blocks));
    kv("warmup_blocks", std::to_string(c.warmup_blocks));
    kv("seed", std::to_string(c.seed));
    std::string grid;
    for (size_t i = 0; i < spec.p_s_grid_dbm.size(); ++i)
        grid += (i ? "," : "") + fmt9(spec.p_s_grid_dbm[i]);
    kv("p_s_dbm", grid);
    std::string pol;
    for (size_t i = 0; i < spec.policies.size(); ++i)
        pol += std::string(i ? "," : "") + to_string(spec.policies[i]);
    kv("policies", pol);
    std::string lv;
    for (size_t i = 0; i < spec.level_presets.size(); ++i)
        lv += (i ? "," : "") + std::to_string(spec.level_presets[i]);
    kv("levels", lv);
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string manifest_text(const RunSpec& spec, const std::string& timestamp) {
    std::string body = serialize_run_spec(spec);
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a(body)));
    std::string out;
    out += "tool = swipt-fdr-sim 1.0.0\n";
    out += "timestamp = " + timestamp + "\n";
    out += "config_hash = " + std::string(hash) + "\n";
    out += "seed = " + std::to_string(spec.cfg.seed) + "\n";
    out += "# resolved configuration\n";
    out += body;
    return out;
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
    const double width = 640, height = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    double x_min = 1e300, x_max = -1e300;
    double floor_p = 1e-7;
    for (const auto& r : rows) {
        x_min = std::min(x_min, r.p_s_dbm);
        x_max = std::max(x_max, r.p_s_dbm);
    }
    if (x_max <= x_min) x_max = x_min + 1;
    double ly_min = std::log10(floor_p), ly_max = 0.0;
    auto xm = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
    auto ym = [&](double p) {
        double ly = std::log10(std::max(p, floor_p));
        return mt + (ly_max - ly) / (ly_max - ly_min) * (height - mt - mb);
    };

    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int d = 0; d >= -7; --d) {
        double y = mt + (ly_max - d) / (ly_max - ly_min) * (height - mt - mb);
        svg << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << width - mr << "\" y2=\""
            << y << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"5\" y=\"" << y + 4 << "\" font-size=\"11\">1e" << d << "</text>\n";
    }
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">p_s (dBm)</text>\n";

    // group rows into (policy, L) series, preserving order
    std::vector<std::pair<std::string, std::vector<const SweepRow*>>> series;
    for (const auto& r : rows) {
        std::string name = std::string(to_string(r.policy)) +
                           (r.policy == PolicyKind::GreedySwitching
                                ? " L=" + std::to_string(r.level_count_L)
                                : "");
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const auto& s) { return s.first == name; });
        if (it == series.end()) {
            series.push_back({name, {}});
            it = series.end() - 1;
        }
        it->second.push_back(&r);
    }
    int ci = 0;
    for (const auto& [name, pts] : series) {
        const char* color = colors[ci % 6];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto* r : pts)
            if (r->estimate.defined) svg << xm(r->p_s_dbm) << "," << ym(r->estimate.p_outage) << " ";
        svg << "\"/>\n";
        svg << "<text x=\"" << width - mr - 150 << "\" y=\"" << mt + 16 * (ci + 1)
            << "\" font-size=\"12\" fill=\"" << color << "\">" << name << "</text>\n";
        ++ci;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace swipt
