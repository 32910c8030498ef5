#include <doctest.h>

#include <cmath>
#include <vector>

#include "swipt/analysis.hpp"
#include "swipt/engine.hpp"

using namespace swipt;

TEST_CASE("wilson interval boundaries and the 50/100 value") {
    double lo, hi;
    wilson_interval(0, 1000, lo, hi);
    CHECK(lo == 0.0);
    wilson_interval(1000, 1000, lo, hi);
    CHECK(hi == 1.0);
    wilson_interval(50, 100, lo, hi);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
    wilson_interval(0, 0, lo, hi);
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
}

TEST_CASE("zero-length trial is flagged undefined, not NaN") {
    SystemConfig cfg;
    cfg.n_blocks = 0;
    cfg.warmup_blocks = 0;
    REQUIRE(validate(cfg).empty());
    RandomStream s(1);
    TrialResult r = run_trial(PolicyKind::Virtual, cfg, s);
    CHECK(!r.estimate.defined);
    CHECK(r.estimate.n_blocks == 0);
    CHECK(!std::isnan(r.estimate.p_outage));
}

TEST_CASE("20-block GS trajectory matches the hand-computed oracle") {
    SystemConfig cfg;
    cfg.level_count_L = 3;
    cfg.warmup_blocks = 0;
    REQUIRE(validate(cfg).empty()); // p_s = 1 W

    const double gA = 3.49e-4, gB = 2e-3, gC = 1e-6, gD = 1e-8;
    const double hM = 4.59e-6, hT = 1e-9, hX = 4e-8;
    std::vector<ChannelDraw> draws = {
        {gA, hM}, {gA, hM}, {gB, hM}, {gB, hM}, {gA, hM}, {gC, hM}, {gD, hM},
        {gA, hT}, {gC, hT}, {gB, hX}, {gA, hX}, {gA, hM}, {gC, hM}, {gC, hM},
        {gA, hX}, {gB, hM}, {gD, hT}, {gA, hM}, {gC, hX}, {gB, hM}};

    // frozen from a separate step-by-step application of the mode-selection
    // and battery-update rules (see modes mu_h/mu_r/mu_hr/mu_phi)
    std::vector<Mode> want_modes = {
        Mode::Harvest, Mode::Relay, Mode::Harvest, Mode::HarvestRelay, Mode::Relay,
        Mode::Relay,   Mode::Idle,  Mode::Harvest, Mode::Idle,         Mode::HarvestRelay,
        Mode::Relay,   Mode::Harvest, Mode::Relay, Mode::Idle,         Mode::Harvest,
        Mode::HarvestRelay, Mode::Idle, Mode::Relay, Mode::Idle,       Mode::HarvestRelay};
    std::vector<int> want_levels = {1, 0, 4, 4, 3, 2, 2, 3, 3, 3, 0, 1, 0, 0, 1, 3, 3, 2, 2, 4};
    std::vector<int> want_outage = {1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0};

    std::vector<Decision> decisions;
    std::vector<int> battery;
    TrialResult r = run_trial_with_draws(PolicyKind::GreedySwitching, cfg, draws, &decisions,
                                         &battery);
    REQUIRE(decisions.size() == 20);
    int outages = 0;
    for (size_t t = 0; t < 20; ++t) {
        CAPTURE(t);
        CHECK(decisions[t].mode == want_modes[t]);
        CHECK(battery[t] == want_levels[t]);
        outages += want_outage[t];
    }
    CHECK(r.estimate.p_outage == doctest::Approx(outages / 20.0));
}

TEST_CASE("virtual-model Monte Carlo agrees with the quadrature oracle") {
    SystemConfig cfg;
    REQUIRE(validate(cfg).empty());
    cfg = cfg.at_ps(std::pow(10.0, (24.0 - 30) / 10.0));
    RandomStream s(81);
    TrialResult r = run_trial(PolicyKind::Virtual, cfg, s);
    double quad = outage_virtual_quadrature(cfg, {}).value;
    double se = std::sqrt(quad * (1 - quad) / static_cast<double>(r.estimate.n_blocks));
    CHECK(std::fabs(r.estimate.p_outage - quad) < 3 * se + 1e-9);
}

TEST_CASE("GS outage equals the non-transmit occupancy; fractions sum to one") {
    SystemConfig cfg;
    cfg.n_blocks = 100'000;
    REQUIRE(validate(cfg).empty());
    RandomStream s(82);
    TrialResult r = run_trial(PolicyKind::GreedySwitching, cfg, s);
    CHECK(r.estimate.p_outage ==
          doctest::Approx(r.estimate.frac_mu_h + r.estimate.frac_mu_phi).epsilon(1e-12));
    CHECK(r.estimate.frac_mu_h + r.estimate.frac_mu_r + r.estimate.frac_mu_hr +
              r.estimate.frac_mu_phi ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.estimate.ci_low <= r.estimate.p_outage);
    CHECK(r.estimate.p_outage <= r.estimate.ci_high);
}

TEST_CASE("transition matrix rows are distributions over valid states") {
    SystemConfig cfg;
    cfg.level_count_L = 8;
    cfg.n_blocks = 50'000;
    REQUIRE(validate(cfg).empty());
    RandomStream s(83);
    TrialResult r = run_trial(PolicyKind::GreedySwitching, cfg, s);
    EnergyGrid grid = EnergyGrid::make(cfg);
    REQUIRE(r.transitions.num_states == grid.num_levels());
    int visited_rows = 0;
    for (int i = 0; i < r.transitions.num_states; ++i) {
        if (!r.transitions.row_visited(i)) continue; // unvisited rows stay flagged
        ++visited_rows;
        double row_sum = 0;
        for (int j = 0; j < r.transitions.num_states; ++j) row_sum += r.transitions.prob(i, j);
        CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(visited_rows > 0);
}

TEST_CASE("sweep deterministic across worker counts; single point equals run_trial") {
    SystemConfig cfg;
    cfg.n_blocks = 20'000;
    cfg.warmup_blocks = 100;
    REQUIRE(validate(cfg).empty());
    std::vector<double> grid = {20, 24, 28};
    std::vector<PolicyKind> policies = {PolicyKind::Virtual, PolicyKind::GreedySwitching};
    std::vector<int> presets = {10, 100};

    auto rows1 = run_sweep(policies, grid, presets, cfg, 1);
    auto rows8 = run_sweep(policies, grid, presets, cfg, 8);
    REQUIRE(rows1.size() == rows8.size());
    for (size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].estimate.p_outage == rows8[i].estimate.p_outage);
        CHECK(rows1[i].estimate.frac_mu_hr == rows8[i].estimate.frac_mu_hr);
        CHECK(rows1[i].estimate.mean_residual == rows8[i].estimate.mean_residual);
    }

    auto one = run_sweep({PolicyKind::Virtual}, {24.0}, presets, cfg, 1);
    REQUIRE(one.size() == 1);
    RandomStream s = derive_stream(cfg.seed, 0);
    TrialResult direct = run_trial(PolicyKind::Virtual, cfg.at_ps(std::pow(10.0, -0.6)), s);
    CHECK(one[0].estimate.p_outage == direct.estimate.p_outage);
}

TEST_CASE("empty sweep grid rejected") {
    SystemConfig cfg;
    REQUIRE(validate(cfg).empty());
    CHECK_THROWS_AS(run_sweep({PolicyKind::Virtual}, {}, {10}, cfg, 1), std::invalid_argument);
}
