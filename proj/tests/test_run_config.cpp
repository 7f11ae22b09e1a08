#include <string>

#include "doctest.h"
#include "risklab/errors.hpp"
#include "risklab/run_config.hpp"
#include "test_util.hpp"

using namespace risklab;

namespace {

const char* kMarket = R"("market": {"spot": 100.0, "mu": 0.08, "sigma": 0.2, "nu": 0.05})";
const char* kZeta = R"("intrinsic_risk": {"model": "constant", "params": {"zeta0": 0.02}})";
const char* kCall = R"("claim": {"kind": "call", "strike": 100.0, "maturity": 1.0})";

std::string price_cfg(const std::string& engine) {
    return std::string("{") + kMarket + "," + kZeta + "," + kCall + "," + engine + "}";
}

} // namespace

TEST_CASE("price config parses each engine") {
    const RunConfig closed = parse_run_config(
        price_cfg(R"("engine": {"method": "closed"})"), Subcommand::Price);
    REQUIRE(closed.market.has_value());
    REQUIRE(closed.claim.has_value());
    REQUIRE(closed.engine.has_value());
    CHECK_EQ(closed.engine->method, EngineKind::ClosedForm);
    CHECK_EQ(closed.market->spot, 100.0);
    CHECK_EQ(closed.claim->kind, ClaimKind::Call);
    CHECK_EQ(*closed.claim->strike, 100.0);

    const RunConfig mc = parse_run_config(
        price_cfg(R"("engine": {"method": "mc", "n_paths": 1000, "n_steps": 8})"),
        Subcommand::Price);
    CHECK_EQ(mc.engine->method, EngineKind::MonteCarlo);
    CHECK_EQ(mc.engine->mc.n_paths, 1000);
    CHECK_EQ(mc.engine->mc.n_steps, 8);

    const RunConfig pde = parse_run_config(
        price_cfg(R"("engine": {"method": "pde", "grid": {"n_space": 128, "n_time": 64}})"),
        Subcommand::Price);
    CHECK_EQ(pde.engine->method, EngineKind::Pde);
    CHECK_EQ(pde.engine->grid.n_space, 128);
    CHECK_EQ(pde.engine->grid.n_time, 64);
}

TEST_CASE("term structures accept knot arrays") {
    const std::string cfg = std::string("{\"market\": {\"spot\": 100.0, ") +
        R"("mu": 0.08, "sigma": [[0.0, 0.2], [0.5, 0.3]], "nu": 0.05},)" + kZeta + "," +
        kCall + R"(, "engine": {"method": "closed"}})";
    const RunConfig c = parse_run_config(cfg, Subcommand::Price);
    CHECK_EQ(c.market->sigma(0.25), 0.2);
    CHECK_EQ(c.market->sigma(0.75), 0.3);
}

TEST_CASE("every intrinsic risk model round-trips through json") {
    const auto parse_z = [&](const std::string& z) {
        const std::string cfg = std::string("{") + kMarket + ",\"intrinsic_risk\": " +
                                z + "," + kCall +
                                R"(, "engine": {"method": "closed"}})";
        return *parse_run_config(cfg, Subcommand::Price).intrinsic_risk;
    };
    const MarketModel m(100.0, TermStructure(0.08), TermStructure(0.2),
                        TermStructure(0.05));
    CHECK_EQ(parse_z(R"({"model": "constant", "params": {"zeta0": 0.03}})")
                 .rate(m, 0.0, 100.0, 1.0),
             0.03);
    CHECK_NEAR(parse_z(R"({"model": "vol_spread",
                           "params": {"gamma": 1.0, "sigma_bar": 0.3}})")
                   .rate(m, 0.0, 100.0, 1.0),
               0.09 - 0.04, 1e-15);
    CHECK_NEAR(parse_z(R"({"model": "time_change", "params": {"sigma_bar": 0.3}})")
                   .rate(m, 0.0, 100.0, 1.0),
               0.05 * (0.09 - 0.04) / 0.09, 1e-15);
    const auto ef = parse_z(
        R"({"model": "exp_family",
            "params": {"xi": [[50.0, -4.0], [150.0, -4.0]],
                       "eta_phi": [[50.0, 0.0], [150.0, 0.0]], "psi": 0.0}})");
    CHECK(ef.is_state_dependent());
    const auto comp = parse_z(
        R"({"model": "composite",
            "params": {"foreign_rate": 0.01,
                       "inner": {"model": "constant", "params": {"zeta0": 0.02}}}})");
    CHECK_NEAR(comp.rate(m, 0.0, 100.0, 1.0), 0.03, 1e-15);
}

TEST_CASE("unknown fields are rejected at every level") {
    CHECK_THROWS_WITH_AS(
        parse_run_config(price_cfg(R"("engine": {"method": "closed"}, "extra": 1)"),
                         Subcommand::Price),
        doctest::Contains("unknown field 'extra'"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_run_config(
            std::string("{\"market\": {\"spot\": 100.0, \"mu\": 0.08, \"sigma\": 0.2, "
                        "\"nu\": 0.05, \"oops\": 3},") +
                kZeta + "," + kCall + R"(, "engine": {"method": "closed"}})",
            Subcommand::Price),
        doctest::Contains("unknown field 'oops'"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_run_config(
            price_cfg(R"("engine": {"method": "closed", "n_paths": 100})"),
            Subcommand::Price),
        doctest::Contains("unknown field 'n_paths'"), ConfigError);
    // Claim section with a stray field.
    CHECK_THROWS_WITH_AS(
        parse_run_config(
            std::string("{") + kMarket + "," + kZeta +
                R"(, "claim": {"kind": "call", "strike": 100.0, "maturity": 1.0,
                    "notional": 5}, "engine": {"method": "closed"}})",
            Subcommand::Price),
        doctest::Contains("unknown field 'notional'"), ConfigError);
    // A smile section is not valid for the price subcommand.
    CHECK_THROWS_AS(
        parse_run_config(
            std::string("{") + kMarket + "," + kZeta + "," + kCall +
                R"(, "engine": {"method": "closed"},
                    "smile": {"strikes": [100.0], "maturities": [1.0]}})",
            Subcommand::Price),
        ConfigError);
}

TEST_CASE("missing sections are named in the error") {
    CHECK_THROWS_WITH_AS(
        parse_run_config(std::string("{") + kMarket + "," + kZeta +
                             R"(, "engine": {"method": "closed"}})",
                         Subcommand::Price),
        doctest::Contains("claim"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_run_config(std::string("{") + kMarket + "," + kCall +
                             R"(, "engine": {"method": "closed"}})",
                         Subcommand::Price),
        doctest::Contains("intrinsic_risk"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_run_config(price_cfg(R"("engine": {"method": "mc", "n_paths": 100})"),
                         Subcommand::Price),
        doctest::Contains("n_steps"), ConfigError);
}

TEST_CASE("claim kinds enforce their own field rules") {
    const auto with_claim = [&](const std::string& claim) {
        return std::string("{") + kMarket + "," + kZeta + ",\"claim\": " + claim +
               R"(, "engine": {"method": "closed"}})";
    };
    CHECK_THROWS_WITH_AS(
        parse_run_config(with_claim(R"({"kind": "custom", "strike": 100.0,
            "payoff_table": [[0.0, 0.0], [200.0, 100.0]], "maturity": 1.0})"),
                         Subcommand::Price),
        doctest::Contains("strike"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_run_config(with_claim(R"({"kind": "call", "strike": 100.0,
            "payoff_table": [[0.0, 0.0], [200.0, 100.0]], "maturity": 1.0})"),
                         Subcommand::Price),
        doctest::Contains("payoff_table"), ConfigError);
    CHECK_THROWS_AS(
        parse_run_config(with_claim(R"({"kind": "straddle", "strike": 100.0,
            "maturity": 1.0})"),
                         Subcommand::Price),
        ConfigError);
    const RunConfig custom = parse_run_config(
        with_claim(R"({"kind": "custom",
            "payoff_table": [[0.0, 0.0], [200.0, 100.0]], "maturity": 1.0})"),
        Subcommand::Price);
    CHECK_EQ(custom.claim->kind, ClaimKind::Custom);
    CHECK(!custom.claim->strike.has_value());
}

TEST_CASE("hedge config wires seed and optional zeta") {
    const std::string cfg = std::string("{") + kMarket + "," + kZeta + "," + kCall +
        R"(, "hedge": {"strategy": "intrinsic_adjusted", "rebalance_steps": 100,
            "pricing_vol": 0.25, "n_paths": 50, "epsilon": 0.4}, "seed": 9})";
    const RunConfig c = parse_run_config(cfg, Subcommand::Hedge);
    REQUIRE(c.hedge.has_value());
    CHECK_EQ(c.hedge->config.strategy, HedgeStrategy::IntrinsicAdjusted);
    CHECK_EQ(c.hedge->config.rebalance_steps, 100);
    CHECK_EQ(c.hedge->config.pricing_vol(0.0), 0.25);
    CHECK_EQ(c.hedge->n_paths, 50);
    CHECK_EQ(c.hedge->config.epsilon, 0.4);
    CHECK_EQ(c.hedge->config.seed, 9u);
    REQUIRE(c.hedge->config.zeta.has_value());

    // Without intrinsic_risk the hedge section still parses (standard strategy).
    const std::string no_z = std::string("{") + kMarket + "," + kCall +
        R"(, "hedge": {"strategy": "standard", "rebalance_steps": 10,
            "pricing_vol": 0.2, "n_paths": 5}})";
    const RunConfig plain = parse_run_config(no_z, Subcommand::Hedge);
    CHECK(!plain.hedge->config.zeta.has_value());

    CHECK_THROWS_WITH_AS(
        parse_run_config(
            std::string("{") + kMarket + "," + kCall +
                R"(, "hedge": {"strategy": "standard", "rebalance_steps": 10,
                    "pricing_vol": 0.2, "n_paths": 5, "epsilon": -0.5}})",
            Subcommand::Hedge),
        doctest::Contains("epsilon"), ConfigError);
}

TEST_CASE("seed override beats the config value") {
    const std::string cfg =
        price_cfg(R"("engine": {"method": "mc", "n_paths": 100, "n_steps": 1})") ;
    const RunConfig from_file = parse_run_config(
        std::string("{") + kMarket + "," + kZeta + "," + kCall +
            R"(, "engine": {"method": "mc", "n_paths": 100, "n_steps": 1}, "seed": 5})",
        Subcommand::Price);
    CHECK_EQ(from_file.seed, 5u);
    CHECK_EQ(from_file.engine->mc.seed, 5u);
    const RunConfig overridden = parse_run_config(
        std::string("{") + kMarket + "," + kZeta + "," + kCall +
            R"(, "engine": {"method": "mc", "n_paths": 100, "n_steps": 1}, "seed": 5})",
        Subcommand::Price, 42);
    CHECK_EQ(overridden.seed, 42u);
    CHECK_EQ(overridden.engine->mc.seed, 42u);
    CHECK_THROWS_AS(parse_run_config(std::string("{") + kMarket + "," + kZeta + "," +
                                         kCall +
                                         R"(, "engine": {"method": "mc",
                                             "n_paths": 100, "n_steps": 1},
                                             "seed": -3})",
                                     Subcommand::Price),
                    ConfigError);
    (void)cfg;
}

TEST_CASE("remaining subcommands parse their sections") {
    const RunConfig smile = parse_run_config(
        std::string("{") + kMarket + "," + kZeta +
            R"(, "smile": {"strikes": [90.0, 100.0], "maturities": [1.0]},
                "engine": {"method": "closed"}})",
        Subcommand::Smile);
    REQUIRE(smile.smile.has_value());
    CHECK_EQ(smile.smile->strikes.size(), 2u);

    const RunConfig conv = parse_run_config(
        std::string("{") + kMarket + "," + kZeta +
            R"(, "convexity": {"maturity": 2.0}, "engine": {"method": "closed"}})",
        Subcommand::Convexity);
    CHECK_EQ(conv.convexity->maturity, 2.0);

    const RunConfig chk = parse_run_config(
        std::string("{") + kMarket + "," + kZeta +
            R"(, "check_measure": {"horizon": 1.0, "n_grid": 16}})",
        Subcommand::CheckMeasure);
    CHECK_EQ(chk.check_measure->n_grid, 16);

    CHECK_THROWS_AS(parse_run_config(std::string("{") + kMarket + "," + kZeta +
                                         R"(, "convexity": {"maturity": 0.0},
                                             "engine": {"method": "closed"}})",
                                     Subcommand::Convexity),
                    ConfigError);
}

TEST_CASE("malformed json reports a config error") {
    CHECK_THROWS_WITH_AS(parse_run_config("{not json", Subcommand::Price),
                         doctest::Contains("invalid JSON"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("[1, 2]", Subcommand::Price), ConfigError);
    CHECK_THROWS_AS(parse_run_config("", Subcommand::Price), ConfigError);
}

TEST_CASE("run_subcommand emits the pinned csv shapes") {
    const RunConfig price = parse_run_config(
        price_cfg(R"("engine": {"method": "closed"})"), Subcommand::Price);
    const std::string out = run_subcommand(Subcommand::Price, price);
    CHECK(out.rfind("engine,claim,strike,maturity,value,std_error\n", 0) == 0);
    CHECK(out.find("closed,call,100,1,") != std::string::npos);
    CHECK(out.back() == '\n');

    const RunConfig chk = parse_run_config(
        std::string("{") + kMarket + "," + kZeta +
            R"(, "check_measure": {"horizon": 1.0, "n_grid": 4}})",
        Subcommand::CheckMeasure);
    const std::string chk_out = run_subcommand(Subcommand::CheckMeasure, chk);
    CHECK(chk_out.rfind("t,lambda,intrinsic_price,theta_total\n", 0) == 0);
    CHECK(chk_out.find("# novikov_value=") != std::string::npos);
    CHECK(chk_out.find("finite=true") != std::string::npos);
}
