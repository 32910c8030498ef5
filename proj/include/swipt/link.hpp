#pragma once

#include "swipt/channel.hpp"
#include "swipt/config.hpp"
#include "swipt/policy.hpp"

namespace swipt {

struct SinrPair {
    double gamma_r; // first hop, SINR
    double gamma_d; // second hop, SNR
};

/// gamma_r = (1-rho_eff)*p_s*g1 / ((1-rho_eff)*p_r*g_b + sigma_r2),
/// gamma_d = p_r*g2 / sigma_d2.
SinrPair sinr_pair(const ChannelDraw& draw, double p_r, double rho_eff,
                   const SystemConfig& cfg);

/// Exact: gr*gd/(gr+gd+1). MinApprox: min(gr, gd).
double e2e_sinr(const SinrPair& pair, SinrMode mode);

/// Outage when the relay did not transmit or the e2e SINR misses gamma_th.
bool is_outage(const Decision& decision, const SinrPair& pair, SinrMode mode,
               const SystemConfig& cfg);

} // namespace swipt
