#pragma once

#include <functional>
#include <optional>

#include "risklab/intrinsic_risk.hpp"
#include "risklab/market_model.hpp"

namespace risklab {

// Per-step drift adjustment theta(t, x) entering dB_new = theta dt + dB.
using ThetaProcess = std::function<double(double t, double x)>;

struct RiskPrices {
    double lambda;     // (mu - nu) / sigma
    double intrinsic;  // zeta / sigma
    double total() const { return lambda + intrinsic; }
};

// lambda(t) = (mu(t) - nu(t)) / sigma(t).
double market_price_of_risk(const MarketModel& model, double t);

// zeta(t, x, T) / sigma(t).
double intrinsic_price_of_risk(const IntrinsicRiskModel& zeta, const MarketModel& model,
                               double t, double x, double horizon);

RiskPrices risk_prices(const MarketModel& model, const IntrinsicRiskModel& zeta,
                       double t, double x, double horizon);

// Girsanov kernels for the two measure changes off the real-world measure.
ThetaProcess theta_to_risk_neutral(const MarketModel& model);
ThetaProcess theta_to_risk_subjective(const MarketModel& model,
                                      const IntrinsicRiskModel& zeta, double horizon);

// Pathwise density Lambda(T) = exp(sum_i -theta_i sqrt(dt) Z_i - 0.5 theta_i^2 dt)
// with theta evaluated at each step's left endpoint. With theta = lambda this is
// dQ/dP on the path's filtration; with theta = lambda + zeta/sigma it is dS/dP.
double radon_nikodym_density(const SamplePath& path, const ThetaProcess& theta);

struct NovikovResult {
    double value;  // exp(0.5 * integral of theta^2 dt), grid approximation
    bool finite;
    std::optional<double> offending_t;  // first grid time where theta failed
};

// Numeric Novikov diagnostic for deterministic theta: evaluates theta on a
// uniform grid of n_grid left endpoints over [0, T] at x = spot and reports
// exp(0.5 * sum theta_i^2 dt). Fails (finite = false) if theta throws or
// returns a non-finite value anywhere on the grid.
NovikovResult novikov_check(const ThetaProcess& theta, const MarketModel& model,
                            double horizon, int n_grid = 1000);

} // namespace risklab
