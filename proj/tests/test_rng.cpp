#include <cmath>
#include <vector>

#include "doctest.h"
#include "risklab/rng.hpp"
#include "test_util.hpp"

using namespace risklab;

TEST_CASE("shocks are deterministic in (seed, path, step)") {
    const double a = rng::normal_shock(42, 7, 3);
    const double b = rng::normal_shock(42, 7, 3);
    CHECK_EQ(a, b);
    CHECK(rng::normal_shock(42, 7, 4) != a);
    CHECK(rng::normal_shock(42, 8, 3) != a);
    CHECK(rng::normal_shock(43, 7, 3) != a);
}

TEST_CASE("uniform mapping stays strictly inside (0, 1)") {
    CHECK(rng::to_unit(0) > 0.0);
    CHECK(rng::to_unit(~0ull) < 1.0);
}

TEST_CASE("shock sample moments match a standard normal") {
    const std::size_t n = 1000000;
    double sum = 0.0, sum2 = 0.0, sum3 = 0.0, sum4 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = rng::normal_shock(2024, i, 0);
        sum += z;
        sum2 += z * z;
        sum3 += z * z * z;
        sum4 += z * z * z * z;
    }
    const double nd = static_cast<double>(n);
    // 4-sigma bands around the exact normal moments.
    CHECK_NEAR(sum / nd, 0.0, 4.0 / std::sqrt(nd));
    CHECK_NEAR(sum2 / nd, 1.0, 4.0 * std::sqrt(2.0 / nd));
    CHECK_NEAR(sum3 / nd, 0.0, 4.0 * std::sqrt(15.0 / nd));
    CHECK_NEAR(sum4 / nd, 3.0, 4.0 * std::sqrt(96.0 / nd));
}

TEST_CASE("shocks at different steps of one path are uncorrelated") {
    const std::size_t n = 200000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += rng::normal_shock(9, i, 0) * rng::normal_shock(9, i, 1);
    CHECK_NEAR(acc / static_cast<double>(n), 0.0, 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("golden draws pin the generator") {
    // Frozen outputs: a change here silently reshuffles every simulation and
    // breaks the checked-in CLI goldens.
    CHECK_NEAR(rng::normal_shock(1, 0, 0), 0.089494117980181032, 1e-15);
    CHECK_NEAR(rng::normal_shock(1, 1, 0), -2.6481540280328923, 1e-15);
    CHECK_NEAR(rng::normal_shock(123456789, 1000000, 250), -1.1931469585880559, 1e-15);
}
