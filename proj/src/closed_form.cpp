#include <cmath>

#include "risklab/errors.hpp"
#include "risklab/pricing.hpp"

namespace risklab {

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779399;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

namespace {

// Remaining integrals over [t, T].
struct Carry {
    double i_nu;    // int nu
    double i_zeta;  // int zeta
    double i_var;   // int sigma^2
    double tau;     // T - t
};

Carry remaining(const MarketModel& market, const IntrinsicRiskModel& zeta,
                const ClaimSpec& claim, double t) {
    const double T = claim.maturity;
    if (t < 0.0 || t > T) throw DomainError("valuation time outside [0, maturity]");
    auto curve = zeta.deterministic_curve(market, T);
    if (!curve)
        throw UnsupportedError(
            "state-dependent intrinsic-risk rate has no closed form; use mc or pde");
    auto var_curve = market.sigma.map([](double s) { return s * s; });
    return {market.nu.integral(t, T), curve->integral(t, T), var_curve.integral(t, T),
            T - t};
}

enum class Greek { Value, Delta, Gamma, Vega };

double closed_form(const MarketModel& market, const IntrinsicRiskModel& zeta,
                   const ClaimSpec& claim, double t, double x, Greek greek) {
    if (claim.kind == ClaimKind::Custom)
        throw UnsupportedError("custom payoff has no closed form; use mc or pde");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("spot must be > 0");

    const Carry c = remaining(market, zeta, claim, t);
    const double K = *claim.strike;
    const double df_nu = std::exp(-c.i_nu);
    const double df_z = std::exp(-c.i_zeta);
    const double s = std::sqrt(c.i_var);

    if (s < 1e-7) {
        // Deterministic limit: X(T) = x * exp(i_nu - i_zeta) exactly.
        const double fwd = x * std::exp(c.i_nu - c.i_zeta);
        switch (greek) {
            case Greek::Value: return df_nu * claim.payoff(fwd);
            case Greek::Delta:
                switch (claim.kind) {
                    case ClaimKind::Call: return fwd > K ? df_z : 0.0;
                    case ClaimKind::Put: return fwd < K ? -df_z : 0.0;
                    case ClaimKind::Forward: return df_z;
                    default: return 0.0;
                }
            default: return 0.0;
        }
    }

    const double d1 = (std::log(x / K) + c.i_nu - c.i_zeta + 0.5 * c.i_var) / s;
    const double d2 = d1 - s;

    switch (claim.kind) {
        case ClaimKind::Call:
            switch (greek) {
                case Greek::Value: return x * df_z * norm_cdf(d1) - K * df_nu * norm_cdf(d2);
                case Greek::Delta: return df_z * norm_cdf(d1);
                case Greek::Gamma: return df_z * norm_pdf(d1) / (x * s);
                case Greek::Vega: return x * df_z * norm_pdf(d1) * std::sqrt(c.tau);
            }
            break;
        case ClaimKind::Put:
            switch (greek) {
                case Greek::Value:
                    return K * df_nu * norm_cdf(-d2) - x * df_z * norm_cdf(-d1);
                case Greek::Delta: return -df_z * norm_cdf(-d1);
                case Greek::Gamma: return df_z * norm_pdf(d1) / (x * s);
                case Greek::Vega: return x * df_z * norm_pdf(d1) * std::sqrt(c.tau);
            }
            break;
        case ClaimKind::Forward:
            switch (greek) {
                case Greek::Value: return x * df_z - K * df_nu;
                case Greek::Delta: return df_z;
                default: return 0.0;
            }
        case ClaimKind::DigitalCall:
            switch (greek) {
                case Greek::Value: return df_nu * norm_cdf(d2);
                case Greek::Delta: return df_nu * norm_pdf(d2) / (x * s);
                case Greek::Gamma: return -df_nu * norm_pdf(d2) * d1 / (x * x * c.i_var);
                case Greek::Vega:
                    return df_nu * norm_pdf(d2) * (-d1 / s) * std::sqrt(c.tau);
            }
            break;
        case ClaimKind::Custom: break;  // handled above
    }
    throw ConfigError("unknown claim kind");
}

} // namespace

double closed_form_value(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x) {
    return closed_form(market, zeta, claim, t, x, Greek::Value);
}

double closed_form_delta(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x) {
    return closed_form(market, zeta, claim, t, x, Greek::Delta);
}

double closed_form_gamma(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x) {
    return closed_form(market, zeta, claim, t, x, Greek::Gamma);
}

double closed_form_vega(const MarketModel& market, const IntrinsicRiskModel& zeta,
                        const ClaimSpec& claim, double t, double x) {
    return closed_form(market, zeta, claim, t, x, Greek::Vega);
}

PricingResult closed_form_price(const MarketModel& market,
                                const IntrinsicRiskModel& zeta, const ClaimSpec& claim) {
    PricingResult r;
    r.value = closed_form_value(market, zeta, claim, 0.0, market.spot);
    r.std_error = 0.0;
    r.engine = EngineKind::ClosedForm;
    r.diagnostics = "analytic";
    return r;
}

std::string to_string(EngineKind engine) {
    switch (engine) {
        case EngineKind::ClosedForm: return "closed";
        case EngineKind::MonteCarlo: return "mc";
        case EngineKind::Pde: return "pde";
    }
    return "unknown";
}

} // namespace risklab
