#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "risklab/market_model.hpp"
#include "risklab/term_structure.hpp"

namespace risklab {

// The intrinsic-risk rate zeta(t, x, T): an extra carry rate attached to a
// claim. It shifts the asset drift to nu - zeta under the risk-subjective
// measure and accrues dG = zeta * X dt against the hedge portfolio.
//
// Forms:
//   Constant            zeta0
//   VolSpread           gamma(t) * (sigma_bar(t)^2 - sigma(t)^2)
//   TimeChange          nu(t) * (sigma_bar(t)^2 - sigma(t)^2) / sigma_bar(t)^2
//   ExponentialFamily   exp(xi(x) + eta_phi(x) - psi)      (state-dependent)
//   Composite           r_f(t) + inner rate
class IntrinsicRiskModel {
public:
    struct Constant {
        double zeta0;
    };
    struct VolSpread {
        TermStructure gamma;
        TermStructure sigma_bar;
    };
    struct TimeChange {
        TermStructure sigma_bar;
    };
    struct ExponentialFamily {
        PiecewiseLinear xi;
        PiecewiseLinear eta_phi;  // eta(theta) * phi(x), pre-multiplied
        double psi;
    };
    struct Composite {
        TermStructure foreign_rate;
        std::shared_ptr<const IntrinsicRiskModel> inner;
    };

    static IntrinsicRiskModel constant(double zeta0);
    static IntrinsicRiskModel vol_spread(TermStructure gamma, TermStructure sigma_bar);
    static IntrinsicRiskModel time_change(TermStructure sigma_bar);
    static IntrinsicRiskModel exp_family(PiecewiseLinear xi, PiecewiseLinear eta_phi,
                                         double psi);
    static IntrinsicRiskModel composite(TermStructure foreign_rate,
                                        IntrinsicRiskModel inner);
    static IntrinsicRiskModel zero() { return constant(0.0); }

    // Rate in 1/year at (t, x) for a claim maturing at `horizon`. None of the
    // implemented forms uses the horizon beyond curve lookup; the parameter
    // keeps the zeta(t, T) signature.
    double rate(const MarketModel& market, double t, double x, double horizon) const;

    bool is_state_dependent() const;

    // For state-independent models: the rate as an exact piecewise-constant
    // curve on the union of the knot grids involved. nullopt when the rate
    // depends on x.
    std::optional<TermStructure> deterministic_curve(const MarketModel& market,
                                                     double horizon) const;

    const std::variant<Constant, VolSpread, TimeChange, ExponentialFamily, Composite>&
    form() const {
        return form_;
    }

private:
    template <class F>
    explicit IntrinsicRiskModel(F&& f) : form_(std::forward<F>(f)) {}

    std::variant<Constant, VolSpread, TimeChange, ExponentialFamily, Composite> form_;
};

// Left-endpoint Riemann sum of dG = zeta * X dt along a path:
// sum_i zeta(t_i, X_i, horizon) * X_i * dt_i.
double accumulated_g(const IntrinsicRiskModel& model, const MarketModel& market,
                     const SamplePath& path, double horizon);

} // namespace risklab
