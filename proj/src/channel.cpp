#include "swipt/channel.hpp"

#include <cmath>

namespace swipt {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t RandomStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double RandomStream::next_uniform() {
    // 53-bit mantissa, shifted into (0,1): never returns 0 or 1
    for (;;) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

double RandomStream::next_normal() {
    for (;;) {
        double v1 = 2.0 * next_uniform() - 1.0;
        double v2 = 2.0 * next_uniform() - 1.0;
        double s = v1 * v1 + v2 * v2;
        if (s > 0.0 && s < 1.0) return v1 * std::sqrt(-2.0 * std::log(s) / s);
    }
}

RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t seed = mix64(master_seed ^ ((stream_index + 1) * 0x9E3779B97F4A7C15ULL));
    return RandomStream(seed);
}

double gamma_sample(RandomStream& stream, const FadingParams& params) {
    double shape = params.shape;
    double boost = 1.0;
    if (shape < 1.0) {
        // shift to shape+1 and scale back by u^(1/shape)
        double u = stream.next_uniform();
        boost = std::pow(u, 1.0 / shape);
        shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = stream.next_normal();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = stream.next_uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v * boost * params.scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v * boost * params.scale;
    }
}

ChannelDraw sample_block(RandomStream& stream, const SystemConfig& cfg) {
    FadingParams f1{cfg.m1, cfg.theta1};
    FadingParams f2{cfg.m2, cfg.theta2};
    double g1 = gamma_sample(stream, f1);
    double g2 = gamma_sample(stream, f2);
    return ChannelDraw{g1, g2};
}

} // namespace swipt
