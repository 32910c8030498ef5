#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "swipt/config.hpp"
#include "swipt/units.hpp"

using namespace swipt;

TEST_CASE("db_to_linear definitional values") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
    CHECK(db_to_linear(-20.0) == doctest::Approx(0.01));
    CHECK_THROWS_AS(db_to_linear(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(db_to_linear(INFINITY), std::invalid_argument);
}

TEST_CASE("dbm_to_watts definitional values") {
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3));
    CHECK(dbm_to_watts(-90.0) == doctest::Approx(1e-12));
    CHECK(dbm_to_watts(-27.0) == doctest::Approx(1.9952623e-6).epsilon(1e-6));
    CHECK_THROWS_AS(dbm_to_watts(std::nan("")), std::invalid_argument);
}

TEST_CASE("db round trip over 18 decades") {
    for (double x = 1e-15; x <= 1e3; x *= 3.7) {
        CHECK(db_to_linear(linear_to_db(x)) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("default config validates; self-energy product small") {
    SystemConfig cfg;
    auto errs = validate(cfg);
    CHECK(errs.empty());
    CHECK(cfg.validated);
    CHECK(cfg.eta * cfg.rho * cfg.g_a == doctest::Approx(0.015));
    CHECK(cfg.p_b == doctest::Approx(3.49e-4 * cfg.p_s));
    CHECK(cfg.theta1 == doctest::Approx(3.49e-4 / 4.0));
    CHECK(cfg.theta2 == doctest::Approx(4.59e-6 / 2.0));
    CHECK(cfg.sigma_r2 == cfg.sigma_p2);
}

TEST_CASE("exact sigma_r2 form available behind the flag") {
    SystemConfig cfg;
    cfg.exact_sigma_r2 = true;
    REQUIRE(validate(cfg).empty());
    CHECK(cfg.sigma_r2 == doctest::Approx((1 - cfg.rho) * cfg.sigma_a2 + cfg.sigma_p2));
}

TEST_CASE("invariant violations reported by name") {
    SystemConfig cfg;
    cfg.eta = 1.5;
    auto errs = validate(cfg);
    REQUIRE(!errs.empty());
    CHECK(std::find(errs.begin(), errs.end(), "eta out of range") != errs.end());

    SystemConfig cfg2;
    cfg2.eta = 0.9;
    cfg2.rho = 1.0;
    cfg2.g_a = 1.2;
    auto errs2 = validate(cfg2);
    CHECK(std::find(errs2.begin(), errs2.end(), "self-energy instability") != errs2.end());

    SystemConfig cfg3;
    cfg3.m1 = 0.3;
    cfg3.sigma_d2 = 0.0;
    auto errs3 = validate(cfg3);
    CHECK(errs3.size() == 2); // every violation listed, not just the first
}

TEST_CASE("validate is idempotent") {
    SystemConfig cfg;
    REQUIRE(validate(cfg).empty());
    SystemConfig twice = cfg;
    REQUIRE(validate(twice).empty());
    CHECK(twice.p_b == cfg.p_b);
    CHECK(twice.theta1 == cfg.theta1);
    CHECK(twice.theta2 == cfg.theta2);
    CHECK(twice.sigma_r2 == cfg.sigma_r2);
}
