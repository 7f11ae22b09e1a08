#include <cmath>

#include "risklab/errors.hpp"
#include "risklab/parallel.hpp"
#include "risklab/pricing.hpp"
#include "risklab/stats.hpp"

namespace risklab {

PricingResult mc_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                       const ClaimSpec& claim, std::int64_t n_paths, int n_steps,
                       std::uint64_t seed) {
    if (n_paths < 1) throw ConfigError("mc_price needs n_paths >= 1");
    const double T = claim.maturity;
    const double pv = 1.0 / discount_factor(market.nu, 0.0, T);

    std::vector<double> terminals = simulate_terminals(
        market, MeasureTag::RiskSubjective, &zeta, T, n_steps, n_paths, seed);
    std::vector<double> discounted(terminals.size());
    parallel_for(static_cast<std::int64_t>(terminals.size()), [&](std::int64_t i) {
        discounted[i] = pv * claim.payoff(terminals[i]);
    });

    const MeanStdErr ms = mean_std_error(discounted);
    PricingResult r;
    r.value = ms.mean;
    r.std_error = ms.std_error;
    r.engine = EngineKind::MonteCarlo;
    r.diagnostics = "n_paths=" + std::to_string(n_paths) +
                    ";n_steps=" + std::to_string(n_steps);
    return r;
}

} // namespace risklab
