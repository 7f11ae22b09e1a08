#include <string>

#include "risklab/csv.hpp"
#include "risklab/errors.hpp"
#include "risklab/measure_change.hpp"
#include "risklab/run_config.hpp"

namespace risklab {
namespace {

PricingResult price_with(const EngineSettings& engine, const MarketModel& market,
                         const IntrinsicRiskModel& zeta, const ClaimSpec& claim) {
    switch (engine.method) {
        case EngineKind::ClosedForm: return closed_form_price(market, zeta, claim);
        case EngineKind::MonteCarlo:
            return mc_price(market, zeta, claim, engine.mc.n_paths, engine.mc.n_steps,
                            engine.mc.seed);
        case EngineKind::Pde: return pde_price(market, zeta, claim, engine.grid);
    }
    throw ConfigError("unknown engine");
}

std::string run_price(const RunConfig& cfg) {
    const PricingResult r =
        price_with(*cfg.engine, *cfg.market, *cfg.intrinsic_risk, *cfg.claim);
    std::string out = "engine,claim,strike,maturity,value,std_error\n";
    out += to_string(r.engine);
    out += ',';
    out += to_string(cfg.claim->kind);
    out += ',';
    if (cfg.claim->strike) out += format_double(*cfg.claim->strike);
    out += ',';
    out += format_double(cfg.claim->maturity);
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += format_double(r.std_error);
    out += '\n';
    return out;
}

std::string run_smile(const RunConfig& cfg) {
    const auto rows = smile_surface(*cfg.market, *cfg.intrinsic_risk,
                                    cfg.smile->strikes, cfg.smile->maturities,
                                    *cfg.engine);
    std::string out = "strike,maturity,implied_vol\n";
    for (const auto& p : rows) {
        out += format_double(p.strike);
        out += ',';
        out += format_double(p.maturity);
        out += ',';
        out += format_double(p.implied_vol);
        out += '\n';
    }
    return out;
}

std::string run_hedge(const RunConfig& cfg) {
    const HedgeReport report = delta_hedge_simulate(*cfg.market, *cfg.claim,
                                                    cfg.hedge->config,
                                                    cfg.hedge->n_paths);
    std::string out =
        "path_id,terminal_portfolio,payoff,realized_pnl,predicted_error\n";
    for (const auto& row : report.per_path) {
        out += std::to_string(row.path_id);
        out += ',';
        out += format_double(row.terminal_portfolio);
        out += ',';
        out += format_double(row.payoff);
        out += ',';
        out += format_double(row.realized_pnl);
        out += ',';
        out += format_double(row.predicted_error);
        out += '\n';
    }
    const PnlStats& s = report.stats;
    out += "# mean=" + format_double(s.mean) + " std=" + format_double(s.std) +
           " skewness=" + format_double(s.skewness) +
           " fraction_within_epsilon=" + format_double(s.fraction_within) +
           " epsilon=" + format_double(s.epsilon) +
           " initial_value=" + format_double(report.initial_value) + '\n';
    return out;
}

std::string run_convexity(const RunConfig& cfg) {
    const double T = cfg.convexity->maturity;
    const double forward = cfg.market->spot * discount_factor(cfg.market->nu, 0.0, T);
    const PricingResult fut =
        futures_price(*cfg.market, *cfg.intrinsic_risk, T, *cfg.engine);
    std::string out = "maturity,forward,futures,adjustment,std_error\n";
    out += format_double(T);
    out += ',';
    out += format_double(forward);
    out += ',';
    out += format_double(fut.value);
    out += ',';
    out += format_double(forward - fut.value);
    out += ',';
    out += format_double(fut.std_error);
    out += '\n';
    return out;
}

std::string run_check_measure(const RunConfig& cfg) {
    const MarketModel& market = *cfg.market;
    const IntrinsicRiskModel& zeta = *cfg.intrinsic_risk;
    const double T = cfg.check_measure->horizon;
    const int n = cfg.check_measure->n_grid;
    std::string out = "t,lambda,intrinsic_price,theta_total\n";
    const double dt = T / n;
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        const RiskPrices rp = risk_prices(market, zeta, t, market.spot, T);
        out += format_double(t);
        out += ',';
        out += format_double(rp.lambda);
        out += ',';
        out += format_double(rp.intrinsic);
        out += ',';
        out += format_double(rp.total());
        out += '\n';
    }
    const NovikovResult nv =
        novikov_check(theta_to_risk_subjective(market, zeta, T), market, T, n);
    out += "# novikov_value=" + format_double(nv.value) +
           " finite=" + (nv.finite ? std::string("true") : std::string("false"));
    if (nv.offending_t) out += " offending_t=" + format_double(*nv.offending_t);
    out += '\n';
    return out;
}

} // namespace

std::string run_subcommand(Subcommand sub, const RunConfig& config) {
    switch (sub) {
        case Subcommand::Price: return run_price(config);
        case Subcommand::Smile: return run_smile(config);
        case Subcommand::Hedge: return run_hedge(config);
        case Subcommand::Convexity: return run_convexity(config);
        case Subcommand::CheckMeasure: return run_check_measure(config);
    }
    throw ConfigError("unknown subcommand");
}

} // namespace risklab
