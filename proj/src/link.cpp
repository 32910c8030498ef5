#include "swipt/link.hpp"

#include <algorithm>

namespace swipt {

SinrPair sinr_pair(const ChannelDraw& draw, double p_r, double rho_eff,
                   const SystemConfig& cfg) {
    double one_minus_rho = 1.0 - rho_eff;
    double gamma_r = one_minus_rho * cfg.p_s * draw.g1 /
                     (one_minus_rho * p_r * cfg.g_b + cfg.sigma_r2);
    double gamma_d = p_r * draw.g2 / cfg.sigma_d2;
    return SinrPair{gamma_r, gamma_d};
}

double e2e_sinr(const SinrPair& pair, SinrMode mode) {
    if (mode == SinrMode::MinApprox) return std::min(pair.gamma_r, pair.gamma_d);
    return pair.gamma_r * pair.gamma_d / (pair.gamma_r + pair.gamma_d + 1.0);
}

bool is_outage(const Decision& decision, const SinrPair& pair, SinrMode mode,
               const SystemConfig& cfg) {
    if (!decision.transmitted) return true;
    // channel inversion sets gamma_d = gamma_th up to rounding; a few ulps
    // below threshold is not a decoding failure
    return e2e_sinr(pair, mode) < cfg.gamma_th * (1.0 - 1e-12);
}

} // namespace swipt
