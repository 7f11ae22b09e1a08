#include "risklab/intrinsic_risk.hpp"

#include <cmath>
#include <utility>

#include "risklab/errors.hpp"

namespace risklab {
namespace {

void check_sigma_bar(const TermStructure& sigma_bar) {
    for (const auto& k : sigma_bar.knots()) {
        if (k.value < kSigmaMin) {
            throw ConfigError("sigma_bar must be >= " + std::to_string(kSigmaMin) +
                              " on every segment");
        }
    }
}

double spread_sq(const MarketModel& market, const TermStructure& sigma_bar, double t) {
    const double sb = sigma_bar(t);
    const double s = market.sigma(t);
    return sb * sb - s * s;
}

} // namespace

IntrinsicRiskModel IntrinsicRiskModel::constant(double zeta0) {
    if (!std::isfinite(zeta0)) throw ConfigError("constant zeta must be finite");
    return IntrinsicRiskModel(Constant{zeta0});
}

IntrinsicRiskModel IntrinsicRiskModel::vol_spread(TermStructure gamma,
                                                  TermStructure sigma_bar) {
    check_sigma_bar(sigma_bar);
    return IntrinsicRiskModel(VolSpread{std::move(gamma), std::move(sigma_bar)});
}

IntrinsicRiskModel IntrinsicRiskModel::time_change(TermStructure sigma_bar) {
    check_sigma_bar(sigma_bar);
    return IntrinsicRiskModel(TimeChange{std::move(sigma_bar)});
}

IntrinsicRiskModel IntrinsicRiskModel::exp_family(PiecewiseLinear xi,
                                                  PiecewiseLinear eta_phi, double psi) {
    if (!std::isfinite(psi)) throw ConfigError("psi must be finite");
    return IntrinsicRiskModel(ExponentialFamily{std::move(xi), std::move(eta_phi), psi});
}

IntrinsicRiskModel IntrinsicRiskModel::composite(TermStructure foreign_rate,
                                                 IntrinsicRiskModel inner) {
    return IntrinsicRiskModel(Composite{
        std::move(foreign_rate),
        std::make_shared<const IntrinsicRiskModel>(std::move(inner))});
}

double IntrinsicRiskModel::rate(const MarketModel& market, double t, double x,
                                double horizon) const {
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Constant>) {
                return f.zeta0;
            } else if constexpr (std::is_same_v<F, VolSpread>) {
                return f.gamma(t) * spread_sq(market, f.sigma_bar, t);
            } else if constexpr (std::is_same_v<F, TimeChange>) {
                const double sb = f.sigma_bar(t);
                return market.nu(t) * spread_sq(market, f.sigma_bar, t) / (sb * sb);
            } else if constexpr (std::is_same_v<F, ExponentialFamily>) {
                if (!(x > 0.0) || !std::isfinite(x))
                    throw DomainError("exponential-family rate needs x > 0");
                const double e = f.xi(x) + f.eta_phi(x) - f.psi;
                return std::exp(e);
            } else {
                return f.foreign_rate(t) + f.inner->rate(market, t, x, horizon);
            }
        },
        form_);
}

bool IntrinsicRiskModel::is_state_dependent() const {
    return std::visit(
        [](const auto& f) -> bool {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ExponentialFamily>) {
                return true;
            } else if constexpr (std::is_same_v<F, Composite>) {
                return f.inner->is_state_dependent();
            } else {
                return false;
            }
        },
        form_);
}

std::optional<TermStructure> IntrinsicRiskModel::deterministic_curve(
    const MarketModel& market, double horizon) const {
    if (is_state_dependent()) return std::nullopt;
    return std::visit(
        [&](const auto& f) -> std::optional<TermStructure> {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Constant>) {
                return TermStructure(f.zeta0);
            } else if constexpr (std::is_same_v<F, VolSpread>) {
                auto spread = TermStructure::merge(
                    f.sigma_bar, market.sigma,
                    [](double sb, double s) { return sb * sb - s * s; });
                return TermStructure::merge(f.gamma, spread,
                                            [](double g, double sp) { return g * sp; });
            } else if constexpr (std::is_same_v<F, TimeChange>) {
                auto ratio = TermStructure::merge(
                    f.sigma_bar, market.sigma, [](double sb, double s) {
                        return (sb * sb - s * s) / (sb * sb);
                    });
                return TermStructure::merge(market.nu, ratio,
                                            [](double n, double r) { return n * r; });
            } else if constexpr (std::is_same_v<F, Composite>) {
                auto inner = f.inner->deterministic_curve(market, horizon);
                return TermStructure::merge(f.foreign_rate, *inner,
                                            [](double a, double b) { return a + b; });
            } else {
                return std::nullopt;  // unreachable: ExponentialFamily is state-dependent
            }
        },
        form_);
}

double accumulated_g(const IntrinsicRiskModel& model, const MarketModel& market,
                     const SamplePath& path, double horizon) {
    double g = 0.0;
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
        const double dt = path.times[i + 1] - path.times[i];
        g += model.rate(market, path.times[i], path.values[i], horizon) *
             path.values[i] * dt;
    }
    return g;
}

} // namespace risklab
