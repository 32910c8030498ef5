#pragma once

#include <cstdint>

#include "swipt/config.hpp"

namespace swipt {

/// Gamma parameters of a squared Nakagami-m channel gain.
struct FadingParams {
    double shape; // m_i
    double scale; // theta_i = pathloss_i / m_i
};

/// One block's realized channel gains.
struct ChannelDraw {
    double g1; // source -> relay
    double g2; // relay -> destination
};

/// Deterministic, platform-independent random stream (splitmix64 core with
/// fixed uniform/normal recipes), so the same (seed, index) reproduces the
/// same draws everywhere.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    /// Uniform on the open interval (0, 1).
    double next_uniform();

    /// Standard normal via Marsaglia polar rejection.
    double next_normal();

    std::uint64_t next_u64();

  private:
    std::uint64_t state_;
};

/// Stream for (master_seed, stream_index); documented derivation:
/// seed = splitmix64(master_seed ^ (index + 1) * 0x9E3779B97F4A7C15).
RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_index);

/// Exact gamma draw (Marsaglia-Tsang squeeze rejection), valid for any
/// shape >= 0.5. Strictly positive.
double gamma_sample(RandomStream& stream, const FadingParams& params);

/// Independent per-block gains g1 ~ Gamma(m1, L1/m1), g2 ~ Gamma(m2, L2/m2).
ChannelDraw sample_block(RandomStream& stream, const SystemConfig& cfg);

} // namespace swipt
