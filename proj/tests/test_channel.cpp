#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "swipt/analysis.hpp"
#include "swipt/channel.hpp"

using namespace swipt;

TEST_CASE("gamma sample mean matches m*theta (section-IV first hop)") {
    RandomStream s(101);
    FadingParams p{4.0, 3.49e-4 / 4.0};
    const int n = 1'000'000;
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += gamma_sample(s, p);
    CHECK(sum / n == doctest::Approx(3.49e-4).epsilon(0.01));
}

TEST_CASE("gamma sample variance matches m*theta^2") {
    RandomStream s(102);
    FadingParams p{2.0, 0.5};
    const int n = 1'000'000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
        double x = gamma_sample(s, p);
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double var = sq / n - mean * mean;
    CHECK(var == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("m = 1 reduces to exponential") {
    RandomStream s(103);
    FadingParams p{1.0, 2.3};
    const int n = 1'000'000;
    int below = 0;
    for (int i = 0; i < n; ++i)
        if (gamma_sample(s, p) <= p.scale) ++below;
    CHECK(static_cast<double>(below) / n == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(0.005));
}

TEST_CASE("draws strictly positive and finite down to m = 0.5") {
    for (double m : {0.5, 0.7, 1.0, 2.0, 4.0}) {
        RandomStream s(104);
        FadingParams p{m, 1e-6};
        for (int i = 0; i < 20'000; ++i) {
            double x = gamma_sample(s, p);
            CHECK(x > 0.0);
            CHECK(std::isfinite(x));
        }
    }
}

TEST_CASE("sample_block means and independence at section-IV parameters") {
    SystemConfig cfg = validate_or_throw(SystemConfig{});
    RandomStream s(105);
    const int n = 1'000'000;
    double s1 = 0, s2 = 0, s11 = 0, s22 = 0, s12 = 0;
    for (int i = 0; i < n; ++i) {
        ChannelDraw d = sample_block(s, cfg);
        s1 += d.g1;
        s2 += d.g2;
        s11 += d.g1 * d.g1;
        s22 += d.g2 * d.g2;
        s12 += d.g1 * d.g2;
    }
    double m1 = s1 / n, m2 = s2 / n;
    CHECK(m1 == doctest::Approx(3.49e-4).epsilon(0.01));
    CHECK(m2 == doctest::Approx(4.59e-6).epsilon(0.01));
    double corr = (s12 / n - m1 * m2) /
                  std::sqrt((s11 / n - m1 * m1) * (s22 / n - m2 * m2));
    CHECK(std::fabs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("fixed seed replays the identical sequence") {
    SystemConfig cfg = validate_or_throw(SystemConfig{});
    RandomStream a = derive_stream(42, 7);
    RandomStream b = derive_stream(42, 7);
    for (int i = 0; i < 1000; ++i) {
        ChannelDraw da = sample_block(a, cfg);
        ChannelDraw db = sample_block(b, cfg);
        CHECK(da.g1 == db.g1);
        CHECK(da.g2 == db.g2);
    }
    // distinct stream indices diverge
    RandomStream c = derive_stream(42, 8);
    CHECK(sample_block(c, cfg).g1 != sample_block(a, cfg).g1);
}

TEST_CASE("Kolmogorov-Smirnov vs analytical gamma CDF at the 1% level") {
    const int n = 100'000;
    const double crit = 1.628 / std::sqrt(static_cast<double>(n));
    for (auto [m, scale] : {std::pair{4.0, 3.49e-4 / 4.0}, std::pair{2.0, 4.59e-6 / 2.0}}) {
        RandomStream s(106);
        FadingParams p{m, scale};
        std::vector<double> xs(n);
        for (auto& x : xs) x = gamma_sample(s, p);
        std::sort(xs.begin(), xs.end());
        double d_stat = 0;
        for (int i = 0; i < n; ++i) {
            double f = gamma_cdf(m, scale, xs[i]);
            d_stat = std::max(d_stat, std::fabs(f - static_cast<double>(i) / n));
            d_stat = std::max(d_stat, std::fabs(static_cast<double>(i + 1) / n - f));
        }
        CHECK(d_stat < crit);
    }
}
