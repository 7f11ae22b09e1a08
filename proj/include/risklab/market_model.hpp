#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "risklab/term_structure.hpp"

namespace risklab {

class IntrinsicRiskModel;

// Volatility floor: lambda = (mu - nu)/sigma and zeta/sigma must stay finite.
inline constexpr double kSigmaMin = 1e-8;

enum class MeasureTag { RealWorld, RiskNeutral, RiskSubjective };

// Market primitives: spot, real-world drift mu, volatility sigma and the
// risk-free rate nu, all piecewise-constant in time.
struct MarketModel {
    double spot;
    TermStructure mu;
    TermStructure sigma;
    TermStructure nu;

    MarketModel(double spot_, TermStructure mu_, TermStructure sigma_, TermStructure nu_);
};

// One discretized trajectory. values[0] is the spot; shocks holds the n
// standard-normal draws that produced the n increments.
struct SamplePath {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> shocks;
};

// Asset drift at (t, x) under the requested measure:
//   RealWorld -> mu(t), RiskNeutral -> nu(t), RiskSubjective -> nu(t) - zeta(t, x, horizon).
double drift_under_measure(const MarketModel& model, MeasureTag tag,
                           const IntrinsicRiskModel* zeta, double t, double x,
                           double horizon);

// Money account growth exp(integral of nu over [t0, t1]); exact for the
// piecewise-constant curve.
double discount_factor(const TermStructure& nu, double t0, double t1);

// Log increment of one simulation step; shared by every path-based engine so
// paths are bitwise identical across them.
double log_step(const MarketModel& model, MeasureTag tag, const IntrinsicRiskModel* zeta,
                double horizon, double t, double x, double dt, double shock);

// Log-Euler path on the uniform grid 0 = t_0 < ... < t_n = horizon, exact in
// distribution for constant coefficients. Deterministic in
// (seed, path_index, step), independent of scheduling.
SamplePath simulate_single_path(const MarketModel& model, MeasureTag tag,
                                const IntrinsicRiskModel* zeta, double horizon,
                                int n_steps, std::uint64_t seed, std::int64_t path_index);

std::vector<SamplePath> simulate_paths(const MarketModel& model, MeasureTag tag,
                                       const IntrinsicRiskModel* zeta, double horizon,
                                       int n_steps, std::int64_t n_paths,
                                       std::uint64_t seed);

// Terminal values only, parallel across paths; path p equals the last value
// of simulate_single_path(..., p).
std::vector<double> simulate_terminals(const MarketModel& model, MeasureTag tag,
                                       const IntrinsicRiskModel* zeta, double horizon,
                                       int n_steps, std::int64_t n_paths,
                                       std::uint64_t seed);

// Debug dump, columns: path_id, step, time, value.
std::string paths_to_csv(const std::vector<SamplePath>& paths);

} // namespace risklab
