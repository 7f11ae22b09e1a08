#include "risklab/hedging.hpp"

#include <cmath>
#include <limits>

#include "risklab/errors.hpp"
#include "risklab/parallel.hpp"
#include "risklab/pricing.hpp"
#include "risklab/stats.hpp"

namespace risklab {
namespace {

bool is_zero_curve(const TermStructure& ts) {
    for (const auto& k : ts.knots())
        if (k.value != 0.0) return false;
    return true;
}

double predicted_error_sum(const SamplePath& path, const ClaimValuer& valuer,
                           const TermStructure& pricing_vol, const MarketModel& market) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
        const double t = path.times[i];
        const double x = path.values[i];
        const double dt = path.times[i + 1] - t;
        const double sb = pricing_vol(t);
        const double s = market.sigma(t);
        acc += 0.5 * x * x * valuer.gamma(t, x) * (sb * sb - s * s) * dt;
    }
    return acc;
}

} // namespace

HedgeReport delta_hedge_simulate(const MarketModel& market, const ClaimSpec& claim,
                                 const HedgeConfig& config, std::int64_t n_paths) {
    if (config.rebalance_steps < 1)
        throw ConfigError("hedge needs rebalance_steps >= 1");
    if (n_paths < 1) throw ConfigError("hedge needs n_paths >= 1");
    if (config.strategy == HedgeStrategy::IntrinsicAdjusted && !config.zeta)
        throw ConfigError("intrinsic_adjusted strategy needs an intrinsic-risk model");

    const double T = claim.maturity;
    const MarketModel pricing_market(market.spot, market.mu, config.pricing_vol,
                                     market.nu);
    const IntrinsicRiskModel zeta = config.zeta.value_or(IntrinsicRiskModel::zero());
    const auto valuer = make_valuer(pricing_market, zeta, claim);
    const double v0 = valuer->value(0.0, market.spot);
    const bool credit = config.strategy == HedgeStrategy::IntrinsicAdjusted;
    const bool nu_zero = is_zero_curve(market.nu);

    HedgeReport report;
    report.initial_value = v0;
    report.predicted_valid = nu_zero;
    report.per_path.resize(static_cast<std::size_t>(n_paths));

    parallel_for(n_paths, [&](std::int64_t p) {
        const SamplePath path =
            simulate_single_path(market, MeasureTag::RealWorld, nullptr, T,
                                 config.rebalance_steps, config.seed, p);
        double v = v0;
        for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
            const double t = path.times[i];
            const double x = path.values[i];
            const double dt = path.times[i + 1] - t;
            const double alpha = valuer->delta(t, x);
            const double growth = discount_factor(market.nu, t, path.times[i + 1]) - 1.0;
            v += alpha * (path.values[i + 1] - x) + (v - alpha * x) * growth;
            if (credit) v += alpha * zeta.rate(pricing_market, t, x, T) * x * dt;
        }
        const double payoff = claim.payoff(path.values.back());
        HedgePathResult row;
        row.path_id = p;
        row.terminal_portfolio = v;
        row.payoff = payoff;
        row.realized_pnl = v - payoff;
        row.predicted_error =
            nu_zero ? predicted_error_sum(path, *valuer, config.pricing_vol, market)
                    : std::numeric_limits<double>::quiet_NaN();
        report.per_path[static_cast<std::size_t>(p)] = row;
    });

    double eps = config.epsilon;
    if (eps < 0.0) {
        eps = 0.05 * std::abs(v0);
        if (eps == 0.0) eps = 1e-12;
    }
    report.stats = pnl_statistics(report, eps);
    return report;
}

double predicted_hedge_error(const SamplePath& path, const ClaimSpec& claim,
                             const TermStructure& pricing_vol,
                             const MarketModel& market) {
    if (!is_zero_curve(market.nu))
        throw UnsupportedError(
            "predicted hedge error assumes a zero risk-free rate (nu must be 0)");
    const MarketModel pricing_market(market.spot, market.mu, pricing_vol, market.nu);
    const auto valuer =
        make_valuer(pricing_market, IntrinsicRiskModel::zero(), claim);
    return predicted_error_sum(path, *valuer, pricing_vol, market);
}

PnlStats pnl_statistics(const HedgeReport& report, double epsilon) {
    if (report.per_path.empty()) throw DomainError("pnl statistics need a non-empty report");
    std::vector<double> pnl(report.per_path.size());
    for (std::size_t i = 0; i < pnl.size(); ++i) pnl[i] = report.per_path[i].realized_pnl;
    const Moments m = sample_moments(pnl);
    std::size_t within = 0;
    for (double v : pnl)
        if (std::abs(v) <= epsilon) ++within;
    return {m.mean, m.std, m.skewness,
            static_cast<double>(within) / static_cast<double>(pnl.size()), epsilon};
}

} // namespace risklab
