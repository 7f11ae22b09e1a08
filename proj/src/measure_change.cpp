#include "risklab/measure_change.hpp"

#include <cmath>
#include <limits>

#include "risklab/errors.hpp"

namespace risklab {

double market_price_of_risk(const MarketModel& model, double t) {
    const double s = model.sigma(t);
    if (s < kSigmaMin) throw DomainError("sigma below floor in market price of risk");
    return (model.mu(t) - model.nu(t)) / s;
}

double intrinsic_price_of_risk(const IntrinsicRiskModel& zeta, const MarketModel& model,
                               double t, double x, double horizon) {
    const double s = model.sigma(t);
    if (s < kSigmaMin) throw DomainError("sigma below floor in intrinsic price of risk");
    return zeta.rate(model, t, x, horizon) / s;
}

RiskPrices risk_prices(const MarketModel& model, const IntrinsicRiskModel& zeta,
                       double t, double x, double horizon) {
    return {market_price_of_risk(model, t),
            intrinsic_price_of_risk(zeta, model, t, x, horizon)};
}

ThetaProcess theta_to_risk_neutral(const MarketModel& model) {
    return [model](double t, double) { return market_price_of_risk(model, t); };
}

ThetaProcess theta_to_risk_subjective(const MarketModel& model,
                                      const IntrinsicRiskModel& zeta, double horizon) {
    return [model, zeta, horizon](double t, double x) {
        return market_price_of_risk(model, t) +
               intrinsic_price_of_risk(zeta, model, t, x, horizon);
    };
}

double radon_nikodym_density(const SamplePath& path, const ThetaProcess& theta) {
    double log_density = 0.0;
    for (std::size_t i = 0; i < path.shocks.size(); ++i) {
        const double dt = path.times[i + 1] - path.times[i];
        const double th = theta(path.times[i], path.values[i]);
        log_density += -th * std::sqrt(dt) * path.shocks[i] - 0.5 * th * th * dt;
    }
    return std::exp(log_density);
}

NovikovResult novikov_check(const ThetaProcess& theta, const MarketModel& model,
                            double horizon, int n_grid) {
    if (n_grid < 1) throw ConfigError("novikov_check needs n_grid >= 1");
    if (!(horizon > 0.0)) throw ConfigError("novikov_check needs horizon > 0");
    const double dt = horizon / n_grid;
    double sum_sq = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double t = i * dt;
        double th;
        try {
            th = theta(t, model.spot);
        } catch (const std::exception&) {
            return {std::numeric_limits<double>::quiet_NaN(), false, t};
        }
        if (!std::isfinite(th))
            return {std::numeric_limits<double>::quiet_NaN(), false, t};
        sum_sq += th * th * dt;
    }
    const double value = std::exp(0.5 * sum_sq);
    if (!std::isfinite(value))
        return {value, false, std::nullopt};
    return {value, true, std::nullopt};
}

} // namespace risklab
