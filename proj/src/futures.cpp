#include <cmath>

#include "risklab/errors.hpp"
#include "risklab/pricing.hpp"
#include "risklab/stats.hpp"

namespace risklab {

PricingResult futures_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                            double maturity, const EngineSettings& engine) {
    if (!(maturity > 0.0) || !std::isfinite(maturity))
        throw ConfigError("futures maturity must be > 0");
    PricingResult r;
    r.engine = engine.method;
    switch (engine.method) {
        case EngineKind::ClosedForm: {
            const auto curve = zeta.deterministic_curve(market, maturity);
            if (!curve)
                throw UnsupportedError(
                    "state-dependent intrinsic-risk rate has no closed-form futures "
                    "value; use mc or pde");
            r.value = market.spot * std::exp(market.nu.integral(0.0, maturity) -
                                             curve->integral(0.0, maturity));
            r.diagnostics = "analytic";
            return r;
        }
        case EngineKind::MonteCarlo: {
            const auto terminals =
                simulate_terminals(market, MeasureTag::RiskSubjective, &zeta, maturity,
                                   engine.mc.n_steps, engine.mc.n_paths, engine.mc.seed);
            const MeanStdErr ms = mean_std_error(terminals);
            r.value = ms.mean;
            r.std_error = ms.std_error;
            r.diagnostics = "n_paths=" + std::to_string(engine.mc.n_paths) +
                            ";n_steps=" + std::to_string(engine.mc.n_steps);
            return r;
        }
        case EngineKind::Pde: {
            // E[X(T) - K] + K with K = spot keeps the linear payoff small.
            const ClaimSpec claim = ClaimSpec::forward(market.spot, maturity);
            const PdeSolution sol = pde_solve(market, zeta, claim, engine.grid, false);
            r.value = sol.value(0.0, market.spot) + market.spot;
            r.diagnostics = "grid=" + std::to_string(engine.grid.n_space) + "x" +
                            std::to_string(engine.grid.n_time);
            return r;
        }
    }
    throw ConfigError("unknown engine");
}

PricingResult convexity_adjustment(const MarketModel& market,
                                   const IntrinsicRiskModel& zeta, double maturity,
                                   const EngineSettings& engine) {
    PricingResult fut = futures_price(market, zeta, maturity, engine);
    const double forward = market.spot * discount_factor(market.nu, 0.0, maturity);
    fut.value = forward - fut.value;
    return fut;
}

} // namespace risklab
