#include "risklab/claims.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "risklab/errors.hpp"

namespace risklab {
namespace {

void check_maturity(double maturity) {
    if (!(maturity > 0.0) || !std::isfinite(maturity))
        throw ConfigError("claim maturity must be > 0");
}

void check_strike(double strike) {
    if (!(strike > 0.0) || !std::isfinite(strike))
        throw ConfigError("claim strike must be > 0");
}

} // namespace

std::string to_string(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::Call: return "call";
        case ClaimKind::Put: return "put";
        case ClaimKind::Forward: return "forward";
        case ClaimKind::DigitalCall: return "digital_call";
        case ClaimKind::Custom: return "custom";
    }
    return "unknown";
}

ClaimSpec ClaimSpec::call(double strike, double maturity) {
    check_strike(strike);
    check_maturity(maturity);
    return {ClaimKind::Call, maturity, strike, std::nullopt};
}

ClaimSpec ClaimSpec::put(double strike, double maturity) {
    check_strike(strike);
    check_maturity(maturity);
    return {ClaimKind::Put, maturity, strike, std::nullopt};
}

ClaimSpec ClaimSpec::forward(double strike, double maturity) {
    check_strike(strike);
    check_maturity(maturity);
    return {ClaimKind::Forward, maturity, strike, std::nullopt};
}

ClaimSpec ClaimSpec::digital_call(double strike, double maturity) {
    check_strike(strike);
    check_maturity(maturity);
    return {ClaimKind::DigitalCall, maturity, strike, std::nullopt};
}

ClaimSpec ClaimSpec::custom(PiecewiseLinear table, double maturity) {
    check_maturity(maturity);
    if (table.xs().size() < 2)
        throw ConfigError("custom payoff table needs at least 2 points");
    return {ClaimKind::Custom, maturity, std::nullopt, std::move(table)};
}

double ClaimSpec::payoff(double x) const {
    switch (kind) {
        case ClaimKind::Call: return std::max(x - *strike, 0.0);
        case ClaimKind::Put: return std::max(*strike - x, 0.0);
        case ClaimKind::Forward: return x - *strike;
        case ClaimKind::DigitalCall:
            if (x > *strike) return 1.0;
            if (x < *strike) return 0.0;
            return 0.5;
        case ClaimKind::Custom: return (*payoff_table)(x);
    }
    throw ConfigError("unknown claim kind");
}

} // namespace risklab
