#pragma once

#include <vector>

#include "risklab/claims.hpp"
#include "risklab/intrinsic_risk.hpp"
#include "risklab/market_model.hpp"

namespace risklab {

// Crank-Nicolson grid in log-price. Defaults follow the 6-sigma rule
// x_min/max = spot * exp(-/+ 6 sqrt(total variance)), widened if needed so the
// strike lies strictly inside, then shifted so ln(strike) falls midway between
// two nodes (best behaviour for kinked payoffs).
struct PdeGrid {
    int n_space = 400;  // space intervals
    int n_time = 200;   // time steps
    double x_min = 0.0; // <= 0 means auto
    double x_max = 0.0;

    void validate() const;
};

// Backward solution of V_t + 0.5 sigma^2 x^2 V_xx + (nu - zeta) x V_x = r V
// with r = nu (discounted = true) or r = 0 (expectations, futures). Stores all
// time slices so hedging can read value/delta/gamma anywhere on [0, T] x grid.
class PdeSolution {
public:
    PdeSolution(std::vector<double> log_nodes, std::vector<double> times,
                std::vector<std::vector<double>> slices);

    double value(double t, double x) const;
    double delta(double t, double x) const;
    double gamma(double t, double x) const;

    const std::vector<double>& log_nodes() const { return ys_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& slice(std::size_t i) const { return slices_[i]; }
    std::size_t n_slices() const { return slices_.size(); }

private:
    double eval(double t, double x, int deriv) const;

    std::vector<double> ys_;
    std::vector<double> times_;
    std::vector<std::vector<double>> slices_; // slices_[i] at times_[i], i=0 is t=0
};

PdeSolution pde_solve(const MarketModel& market, const IntrinsicRiskModel& zeta,
                      const ClaimSpec& claim, const PdeGrid& grid,
                      bool discounted = true);

} // namespace risklab
