#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "risklab/errors.hpp"
#include "risklab/pricing.hpp"
#include "test_util.hpp"

using namespace risklab;

namespace {

MarketModel make_market(double sigma, double nu) {
    return MarketModel(100.0, TermStructure(0.08), TermStructure(sigma),
                       TermStructure(nu));
}

} // namespace

TEST_CASE("mc matches closed form within four standard errors") {
    const MarketModel m = make_market(0.2, 0.05);
    const auto z = IntrinsicRiskModel::constant(0.02);
    for (const auto& claim :
         {ClaimSpec::call(100.0, 1.0), ClaimSpec::put(110.0, 0.5),
          ClaimSpec::digital_call(100.0, 1.0)}) {
        const double exact = closed_form_price(m, z, claim).value;
        const PricingResult mc = mc_price(m, z, claim, 200000, 1, 42);
        CHECK(mc.std_error > 0.0);
        CHECK_NEAR(mc.value, exact, 4.0 * mc.std_error);
    }
}

TEST_CASE("forward claims price exactly up to sampling noise") {
    const MarketModel m = make_market(0.3, 0.04);
    const auto z = IntrinsicRiskModel::constant(0.01);
    const double exact =
        closed_form_price(m, z, ClaimSpec::forward(95.0, 1.5)).value;
    const PricingResult mc = mc_price(m, z, ClaimSpec::forward(95.0, 1.5), 100000, 4, 7);
    CHECK_NEAR(mc.value, exact, 4.0 * mc.std_error);
}

TEST_CASE("custom payoff tables are supported") {
    const MarketModel m = make_market(0.2, 0.0);
    const auto z0 = IntrinsicRiskModel::zero();
    // Straddle built from a table wide enough that clamping is harmless.
    std::vector<double> xs, ys;
    for (int i = 0; i <= 160; ++i) {
        const double x = 2.5 * i;
        xs.push_back(x);
        ys.push_back(std::abs(x - 100.0));
    }
    const ClaimSpec straddle = ClaimSpec::custom(PiecewiseLinear(xs, ys), 1.0);
    const double exact =
        closed_form_price(m, z0, ClaimSpec::call(100.0, 1.0)).value +
        closed_form_price(m, z0, ClaimSpec::put(100.0, 1.0)).value;
    const PricingResult mc = mc_price(m, z0, straddle, 200000, 1, 11);
    CHECK_NEAR(mc.value, exact, 4.0 * mc.std_error);
}

TEST_CASE("same seed reproduces the estimate bitwise") {
    const MarketModel m = make_market(0.2, 0.05);
    const auto z = IntrinsicRiskModel::constant(0.02);
    const ClaimSpec c = ClaimSpec::call(100.0, 1.0);
    const PricingResult a = mc_price(m, z, c, 50000, 8, 99);
    const PricingResult b = mc_price(m, z, c, 50000, 8, 99);
    CHECK_EQ(a.value, b.value);
    CHECK_EQ(a.std_error, b.std_error);
    const PricingResult other = mc_price(m, z, c, 50000, 8, 100);
    CHECK(a.value != other.value);
}

TEST_CASE("worker count does not change the estimate") {
    const MarketModel m = make_market(0.2, 0.05);
    const auto z = IntrinsicRiskModel::constant(0.02);
    const ClaimSpec c = ClaimSpec::call(100.0, 1.0);
    setenv("RISKLAB_THREADS", "1", 1);
    const PricingResult serial = mc_price(m, z, c, 40000, 4, 5);
    setenv("RISKLAB_THREADS", "7", 1);
    const PricingResult threaded = mc_price(m, z, c, 40000, 4, 5);
    unsetenv("RISKLAB_THREADS");
    CHECK_EQ(serial.value, threaded.value);
    CHECK_EQ(serial.std_error, threaded.std_error);
}

TEST_CASE("step count is irrelevant in law for constant coefficients") {
    const MarketModel m = make_market(0.2, 0.05);
    const auto z = IntrinsicRiskModel::constant(0.02);
    const ClaimSpec c = ClaimSpec::call(100.0, 1.0);
    const PricingResult coarse = mc_price(m, z, c, 150000, 1, 21);
    const PricingResult fine = mc_price(m, z, c, 150000, 64, 22);
    const double band =
        4.0 * std::sqrt(coarse.std_error * coarse.std_error +
                        fine.std_error * fine.std_error);
    CHECK_NEAR(coarse.value, fine.value, band);
}

TEST_CASE("invalid sampling parameters are rejected") {
    const MarketModel m = make_market(0.2, 0.05);
    const auto z0 = IntrinsicRiskModel::zero();
    const ClaimSpec c = ClaimSpec::call(100.0, 1.0);
    CHECK_THROWS_AS(mc_price(m, z0, c, 0, 1, 0), ConfigError);
    CHECK_THROWS_AS(mc_price(m, z0, c, 1000, 0, 0), ConfigError);
}
