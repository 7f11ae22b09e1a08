#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "risklab/claims.hpp"
#include "risklab/intrinsic_risk.hpp"
#include "risklab/market_model.hpp"
#include "risklab/term_structure.hpp"

namespace risklab {

enum class HedgeStrategy { Standard, IntrinsicAdjusted };

// The hedger's model: deltas come from a valuation built with pricing_vol (the
// hedger's sigma, possibly wrong) and the hedger's zeta model. True dynamics
// come from the MarketModel passed to delta_hedge_simulate.
struct HedgeConfig {
    HedgeStrategy strategy = HedgeStrategy::Standard;
    int rebalance_steps = 250;
    TermStructure pricing_vol{0.2};
    std::optional<IntrinsicRiskModel> zeta;  // required for IntrinsicAdjusted
    std::uint64_t seed = 0;
    double epsilon = -1.0;  // |pnl| <= epsilon bucket; < 0 means 5% of premium
};

struct HedgePathResult {
    std::int64_t path_id;
    double terminal_portfolio;
    double payoff;
    double realized_pnl;     // terminal_portfolio - payoff
    double predicted_error;  // NaN when nu != 0 (identity needs zero rates)
};

struct PnlStats {
    double mean;
    double std;
    double skewness;
    double fraction_within;  // fraction of |pnl| <= epsilon
    double epsilon;
};

struct HedgeReport {
    std::vector<HedgePathResult> per_path;
    PnlStats stats;
    double initial_value = 0.0;  // premium at t = 0 under the hedger's model
    bool predicted_valid = false;
};

// Discrete self-financing delta hedge along real-world paths:
//   V(i+1) = V(i) + alpha(i) dX + (V(i) - alpha(i) X(i)) (e^{int nu dt} - 1)
// plus, for IntrinsicAdjusted, the carry credit alpha(i) zeta X(i) dt.
// Rebalance grid = simulation grid.
HedgeReport delta_hedge_simulate(const MarketModel& market, const ClaimSpec& claim,
                                 const HedgeConfig& config, std::int64_t n_paths);

// Mis-specification identity at zero rates: 0.5 * sum X_i^2 Gamma(t_i, X_i)
// (pricing_vol^2 - sigma^2) dt with Gamma from the pricing_vol model. Throws
// UnsupportedError when nu is not identically zero.
double predicted_hedge_error(const SamplePath& path, const ClaimSpec& claim,
                             const TermStructure& pricing_vol,
                             const MarketModel& market);

PnlStats pnl_statistics(const HedgeReport& report, double epsilon);

} // namespace risklab
