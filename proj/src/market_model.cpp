#include "risklab/market_model.hpp"

#include <cmath>
#include <string>

#include "risklab/csv.hpp"
#include "risklab/errors.hpp"
#include "risklab/intrinsic_risk.hpp"
#include "risklab/parallel.hpp"
#include "risklab/rng.hpp"

namespace risklab {

MarketModel::MarketModel(double spot_, TermStructure mu_, TermStructure sigma_,
                         TermStructure nu_)
    : spot(spot_), mu(std::move(mu_)), sigma(std::move(sigma_)), nu(std::move(nu_)) {
    if (!(spot > 0.0) || !std::isfinite(spot)) {
        throw ConfigError("spot must be positive and finite");
    }
    for (const auto& k : sigma.knots()) {
        if (k.value < kSigmaMin) {
            throw ConfigError("sigma must be >= " + std::to_string(kSigmaMin) +
                              " everywhere, got " + std::to_string(k.value) + " at t = " +
                              std::to_string(k.time));
        }
    }
}

double drift_under_measure(const MarketModel& model, MeasureTag tag,
                           const IntrinsicRiskModel* zeta, double t, double x,
                           double horizon) {
    switch (tag) {
        case MeasureTag::RealWorld:
            return model.mu(t);
        case MeasureTag::RiskNeutral:
            return model.nu(t);
        case MeasureTag::RiskSubjective:
            if (zeta == nullptr) {
                throw ConfigError("risk-subjective drift needs an intrinsic risk model");
            }
            return model.nu(t) - zeta->rate(model, t, x, horizon);
    }
    throw ConfigError("unknown measure tag");
}

double discount_factor(const TermStructure& nu, double t0, double t1) {
    if (t0 < 0.0 || t1 < t0) {
        throw DomainError("discount factor needs 0 <= t0 <= t1");
    }
    return std::exp(nu.integral(t0, t1));
}

double log_step(const MarketModel& model, MeasureTag tag, const IntrinsicRiskModel* zeta,
                double horizon, double t, double x, double dt, double shock) {
    const double drift = drift_under_measure(model, tag, zeta, t, x, horizon);
    const double s = model.sigma(t);
    return (drift - 0.5 * s * s) * dt + s * std::sqrt(dt) * shock;
}

SamplePath simulate_single_path(const MarketModel& model, MeasureTag tag,
                                const IntrinsicRiskModel* zeta, double horizon,
                                int n_steps, std::uint64_t seed,
                                std::int64_t path_index) {
    if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
    if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");

    const auto n = static_cast<std::size_t>(n_steps);
    const double dt = horizon / n_steps;

    SamplePath path;
    path.times.resize(n + 1);
    path.values.resize(n + 1);
    path.shocks.resize(n);

    path.times[0] = 0.0;
    path.values[0] = model.spot;
    double logx = std::log(model.spot);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double z = rng::normal_shock(seed, static_cast<std::uint64_t>(path_index), i);
        logx += log_step(model, tag, zeta, horizon, t, path.values[i], dt, z);
        path.shocks[i] = z;
        path.times[i + 1] = (i + 1 == n) ? horizon : static_cast<double>(i + 1) * dt;
        path.values[i + 1] = std::exp(logx);
    }
    return path;
}

std::vector<SamplePath> simulate_paths(const MarketModel& model, MeasureTag tag,
                                       const IntrinsicRiskModel* zeta, double horizon,
                                       int n_steps, std::int64_t n_paths,
                                       std::uint64_t seed) {
    if (n_paths < 1) throw ConfigError("n_paths must be >= 1");
    std::vector<SamplePath> paths(static_cast<std::size_t>(n_paths));
    parallel_for(n_paths, [&](std::int64_t p) {
        paths[static_cast<std::size_t>(p)] =
            simulate_single_path(model, tag, zeta, horizon, n_steps, seed, p);
    });
    return paths;
}

std::vector<double> simulate_terminals(const MarketModel& model, MeasureTag tag,
                                       const IntrinsicRiskModel* zeta, double horizon,
                                       int n_steps, std::int64_t n_paths,
                                       std::uint64_t seed) {
    if (n_paths < 1) throw ConfigError("n_paths must be >= 1");
    if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
    if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");

    const double dt = horizon / n_steps;
    std::vector<double> terminals(static_cast<std::size_t>(n_paths));
    parallel_for(n_paths, [&](std::int64_t p) {
        double logx = std::log(model.spot);
        double x = model.spot;
        for (int i = 0; i < n_steps; ++i) {
            const double t = static_cast<double>(i) * dt;
            const double z = rng::normal_shock(seed, static_cast<std::uint64_t>(p),
                                               static_cast<std::uint64_t>(i));
            logx += log_step(model, tag, zeta, horizon, t, x, dt, z);
            x = std::exp(logx);
        }
        terminals[static_cast<std::size_t>(p)] = x;
    });
    return terminals;
}

std::string paths_to_csv(const std::vector<SamplePath>& paths) {
    std::string out = "path_id,step,time,value\n";
    for (std::size_t p = 0; p < paths.size(); ++p) {
        for (std::size_t i = 0; i < paths[p].values.size(); ++i) {
            out += std::to_string(p);
            out += ',';
            out += std::to_string(i);
            out += ',';
            out += format_double(paths[p].times[i]);
            out += ',';
            out += format_double(paths[p].values[i]);
            out += '\n';
        }
    }
    return out;
}

} // namespace risklab
