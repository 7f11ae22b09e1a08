#include "risklab/run_config.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "risklab/errors.hpp"

namespace risklab {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void reject_unknown(const json& j, const std::vector<std::string_view>& allowed,
                    const std::string& ctx) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto a : allowed)
            if (item.key() == a) {
                known = true;
                break;
            }
        if (!known) fail("unknown field '" + item.key() + "' in " + ctx);
    }
}

const json& require_field(const json& j, const char* key, const std::string& ctx) {
    const auto it = j.find(key);
    if (it == j.end()) fail("missing field '" + std::string(key) + "' in " + ctx);
    return *it;
}

const json* optional_field(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void require_object(const json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ctx + " must be a JSON object");
}

double as_number(const json& v, const std::string& ctx) {
    if (!v.is_number()) fail(ctx + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(ctx + " must be finite");
    return x;
}

std::int64_t as_count(const json& v, const std::string& ctx) {
    if (!v.is_number_integer()) fail(ctx + " must be an integer");
    const auto n = v.get<std::int64_t>();
    if (n < 1) fail(ctx + " must be >= 1");
    return n;
}

std::uint64_t as_seed(const json& v, const std::string& ctx) {
    if (!v.is_number_integer() || v.is_number_float())
        fail(ctx + " must be a non-negative integer");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const auto n = v.get<std::int64_t>();
    if (n < 0) fail(ctx + " must be a non-negative integer");
    return static_cast<std::uint64_t>(n);
}

std::string as_string(const json& v, const std::string& ctx) {
    if (!v.is_string()) fail(ctx + " must be a string");
    return v.get<std::string>();
}

// A term structure is either a flat number or an array of [time, value] knots.
TermStructure parse_term_structure(const json& v, const std::string& ctx) {
    if (v.is_number()) return TermStructure(as_number(v, ctx));
    if (!v.is_array()) fail(ctx + " must be a number or an array of [time, value]");
    std::vector<Knot> knots;
    knots.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2)
            fail(ctx + " knots must be [time, value] pairs");
        knots.push_back({as_number(e[0], ctx + " knot time"),
                         as_number(e[1], ctx + " knot value")});
    }
    return TermStructure(knots);
}

PiecewiseLinear parse_table(const json& v, const std::string& ctx) {
    if (!v.is_array() || v.size() < 2)
        fail(ctx + " must be an array of at least 2 [x, y] pairs");
    std::vector<double> xs, ys;
    xs.reserve(v.size());
    ys.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2) fail(ctx + " entries must be [x, y] pairs");
        xs.push_back(as_number(e[0], ctx + " x"));
        ys.push_back(as_number(e[1], ctx + " y"));
    }
    return PiecewiseLinear(xs, ys);
}

IntrinsicRiskModel parse_zeta(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    reject_unknown(j, {"model", "params"}, ctx);
    const std::string model = as_string(require_field(j, "model", ctx), ctx + ".model");
    const json& p = require_field(j, "params", ctx);
    require_object(p, ctx + ".params");
    const std::string pctx = ctx + ".params";
    if (model == "constant") {
        reject_unknown(p, {"zeta0"}, pctx);
        return IntrinsicRiskModel::constant(
            as_number(require_field(p, "zeta0", pctx), pctx + ".zeta0"));
    }
    if (model == "vol_spread") {
        reject_unknown(p, {"gamma", "sigma_bar"}, pctx);
        return IntrinsicRiskModel::vol_spread(
            parse_term_structure(require_field(p, "gamma", pctx), pctx + ".gamma"),
            parse_term_structure(require_field(p, "sigma_bar", pctx),
                                 pctx + ".sigma_bar"));
    }
    if (model == "time_change") {
        reject_unknown(p, {"sigma_bar"}, pctx);
        return IntrinsicRiskModel::time_change(parse_term_structure(
            require_field(p, "sigma_bar", pctx), pctx + ".sigma_bar"));
    }
    if (model == "exp_family") {
        reject_unknown(p, {"xi", "eta_phi", "psi"}, pctx);
        return IntrinsicRiskModel::exp_family(
            parse_table(require_field(p, "xi", pctx), pctx + ".xi"),
            parse_table(require_field(p, "eta_phi", pctx), pctx + ".eta_phi"),
            as_number(require_field(p, "psi", pctx), pctx + ".psi"));
    }
    if (model == "composite") {
        reject_unknown(p, {"foreign_rate", "inner"}, pctx);
        return IntrinsicRiskModel::composite(
            parse_term_structure(require_field(p, "foreign_rate", pctx),
                                 pctx + ".foreign_rate"),
            parse_zeta(require_field(p, "inner", pctx), pctx + ".inner"));
    }
    fail(ctx + ".model must be one of constant, vol_spread, time_change, exp_family, "
               "composite");
}

MarketModel parse_market(const json& j) {
    require_object(j, "market");
    reject_unknown(j, {"spot", "mu", "sigma", "nu"}, "market");
    return MarketModel(
        as_number(require_field(j, "spot", "market"), "market.spot"),
        parse_term_structure(require_field(j, "mu", "market"), "market.mu"),
        parse_term_structure(require_field(j, "sigma", "market"), "market.sigma"),
        parse_term_structure(require_field(j, "nu", "market"), "market.nu"));
}

ClaimSpec parse_claim(const json& j) {
    require_object(j, "claim");
    reject_unknown(j, {"kind", "strike", "maturity", "payoff_table"}, "claim");
    const std::string kind = as_string(require_field(j, "kind", "claim"), "claim.kind");
    const double maturity =
        as_number(require_field(j, "maturity", "claim"), "claim.maturity");
    if (kind == "custom") {
        if (optional_field(j, "strike")) fail("claim.strike not allowed for custom");
        return ClaimSpec::custom(
            parse_table(require_field(j, "payoff_table", "claim"), "claim.payoff_table"),
            maturity);
    }
    if (optional_field(j, "payoff_table"))
        fail("claim.payoff_table only allowed for custom");
    const double strike =
        as_number(require_field(j, "strike", "claim"), "claim.strike");
    if (kind == "call") return ClaimSpec::call(strike, maturity);
    if (kind == "put") return ClaimSpec::put(strike, maturity);
    if (kind == "forward") return ClaimSpec::forward(strike, maturity);
    if (kind == "digital_call") return ClaimSpec::digital_call(strike, maturity);
    fail("claim.kind must be one of call, put, forward, digital_call, custom");
}

PdeGrid parse_grid(const json& j) {
    require_object(j, "engine.grid");
    reject_unknown(j, {"n_space", "n_time", "x_min", "x_max"}, "engine.grid");
    PdeGrid g;
    g.n_space = static_cast<int>(
        as_count(require_field(j, "n_space", "engine.grid"), "engine.grid.n_space"));
    g.n_time = static_cast<int>(
        as_count(require_field(j, "n_time", "engine.grid"), "engine.grid.n_time"));
    if (const json* v = optional_field(j, "x_min"))
        g.x_min = as_number(*v, "engine.grid.x_min");
    if (const json* v = optional_field(j, "x_max"))
        g.x_max = as_number(*v, "engine.grid.x_max");
    g.validate();
    return g;
}

EngineSettings parse_engine(const json& j, std::uint64_t seed) {
    require_object(j, "engine");
    const std::string method =
        as_string(require_field(j, "method", "engine"), "engine.method");
    EngineSettings e;
    if (method == "closed") {
        reject_unknown(j, {"method"}, "engine");
        e.method = EngineKind::ClosedForm;
    } else if (method == "mc") {
        reject_unknown(j, {"method", "n_paths", "n_steps"}, "engine");
        e.method = EngineKind::MonteCarlo;
        e.mc.n_paths = as_count(require_field(j, "n_paths", "engine"), "engine.n_paths");
        e.mc.n_steps = static_cast<int>(
            as_count(require_field(j, "n_steps", "engine"), "engine.n_steps"));
        e.mc.seed = seed;
    } else if (method == "pde") {
        reject_unknown(j, {"method", "grid"}, "engine");
        e.method = EngineKind::Pde;
        e.grid = parse_grid(require_field(j, "grid", "engine"));
    } else {
        fail("engine.method must be one of closed, mc, pde");
    }
    return e;
}

HedgeRequest parse_hedge(const json& j, const std::optional<IntrinsicRiskModel>& zeta,
                         std::uint64_t seed) {
    require_object(j, "hedge");
    reject_unknown(j, {"strategy", "rebalance_steps", "pricing_vol", "n_paths",
                       "epsilon"},
                   "hedge");
    HedgeRequest req;
    const std::string strat =
        as_string(require_field(j, "strategy", "hedge"), "hedge.strategy");
    if (strat == "standard")
        req.config.strategy = HedgeStrategy::Standard;
    else if (strat == "intrinsic_adjusted")
        req.config.strategy = HedgeStrategy::IntrinsicAdjusted;
    else
        fail("hedge.strategy must be standard or intrinsic_adjusted");
    req.config.rebalance_steps = static_cast<int>(as_count(
        require_field(j, "rebalance_steps", "hedge"), "hedge.rebalance_steps"));
    req.config.pricing_vol = parse_term_structure(
        require_field(j, "pricing_vol", "hedge"), "hedge.pricing_vol");
    if (const json* v = optional_field(j, "epsilon")) {
        req.config.epsilon = as_number(*v, "hedge.epsilon");
        if (req.config.epsilon < 0.0) fail("hedge.epsilon must be >= 0");
    }
    req.config.zeta = zeta;
    req.config.seed = seed;
    req.n_paths = as_count(require_field(j, "n_paths", "hedge"), "hedge.n_paths");
    return req;
}

SmileRequest parse_smile(const json& j) {
    require_object(j, "smile");
    reject_unknown(j, {"strikes", "maturities"}, "smile");
    SmileRequest req;
    const json& ks = require_field(j, "strikes", "smile");
    const json& ts = require_field(j, "maturities", "smile");
    if (!ks.is_array() || ks.empty()) fail("smile.strikes must be a non-empty array");
    if (!ts.is_array() || ts.empty()) fail("smile.maturities must be a non-empty array");
    for (const auto& v : ks) req.strikes.push_back(as_number(v, "smile.strikes"));
    for (const auto& v : ts) req.maturities.push_back(as_number(v, "smile.maturities"));
    return req;
}

ConvexityRequest parse_convexity(const json& j) {
    require_object(j, "convexity");
    reject_unknown(j, {"maturity"}, "convexity");
    const double T =
        as_number(require_field(j, "maturity", "convexity"), "convexity.maturity");
    if (!(T > 0.0)) fail("convexity.maturity must be > 0");
    return {T};
}

CheckMeasureRequest parse_check_measure(const json& j) {
    require_object(j, "check_measure");
    reject_unknown(j, {"horizon", "n_grid"}, "check_measure");
    CheckMeasureRequest req;
    req.horizon =
        as_number(require_field(j, "horizon", "check_measure"), "check_measure.horizon");
    if (!(req.horizon > 0.0)) fail("check_measure.horizon must be > 0");
    req.n_grid = static_cast<int>(
        as_count(require_field(j, "n_grid", "check_measure"), "check_measure.n_grid"));
    return req;
}

} // namespace

RunConfig parse_run_config(const std::string& json_text, Subcommand sub,
                           std::optional<std::uint64_t> seed_override) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    require_object(j, "config");

    std::vector<std::string_view> allowed;
    switch (sub) {
        case Subcommand::Price:
            allowed = {"market", "intrinsic_risk", "claim", "engine", "seed", "output"};
            break;
        case Subcommand::Smile:
            allowed = {"market", "intrinsic_risk", "smile", "engine", "seed", "output"};
            break;
        case Subcommand::Hedge:
            allowed = {"market", "intrinsic_risk", "claim", "hedge", "seed", "output"};
            break;
        case Subcommand::Convexity:
            allowed = {"market", "intrinsic_risk", "convexity", "engine", "seed",
                       "output"};
            break;
        case Subcommand::CheckMeasure:
            allowed = {"market", "intrinsic_risk", "check_measure", "seed", "output"};
            break;
    }
    reject_unknown(j, allowed, "config");

    RunConfig cfg;
    if (const json* v = optional_field(j, "seed")) cfg.seed = as_seed(*v, "seed");
    if (seed_override) cfg.seed = *seed_override;
    if (const json* v = optional_field(j, "output"))
        cfg.output = as_string(*v, "output");

    cfg.market = parse_market(require_field(j, "market", "config"));
    if (const json* v = optional_field(j, "intrinsic_risk"))
        cfg.intrinsic_risk = parse_zeta(*v, "intrinsic_risk");

    const bool zeta_required = sub != Subcommand::Hedge;
    if (zeta_required && !cfg.intrinsic_risk)
        fail("missing field 'intrinsic_risk' in config");

    switch (sub) {
        case Subcommand::Price:
            cfg.claim = parse_claim(require_field(j, "claim", "config"));
            cfg.engine = parse_engine(require_field(j, "engine", "config"), cfg.seed);
            break;
        case Subcommand::Smile:
            cfg.smile = parse_smile(require_field(j, "smile", "config"));
            cfg.engine = parse_engine(require_field(j, "engine", "config"), cfg.seed);
            break;
        case Subcommand::Hedge:
            cfg.claim = parse_claim(require_field(j, "claim", "config"));
            cfg.hedge = parse_hedge(require_field(j, "hedge", "config"),
                                    cfg.intrinsic_risk, cfg.seed);
            break;
        case Subcommand::Convexity:
            cfg.convexity = parse_convexity(require_field(j, "convexity", "config"));
            cfg.engine = parse_engine(require_field(j, "engine", "config"), cfg.seed);
            break;
        case Subcommand::CheckMeasure:
            cfg.check_measure =
                parse_check_measure(require_field(j, "check_measure", "config"));
            break;
    }
    return cfg;
}

} // namespace risklab
