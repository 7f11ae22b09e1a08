#pragma once

#include <optional>
#include <string>

#include "risklab/term_structure.hpp"

namespace risklab {

enum class ClaimKind { Call, Put, Forward, DigitalCall, Custom };

std::string to_string(ClaimKind kind);

// European claim paying h(X(T)) at maturity.
struct ClaimSpec {
    ClaimKind kind;
    double maturity;
    std::optional<double> strike;               // absent for Custom
    std::optional<PiecewiseLinear> payoff_table;  // Custom only

    static ClaimSpec call(double strike, double maturity);
    static ClaimSpec put(double strike, double maturity);
    static ClaimSpec forward(double strike, double maturity);
    static ClaimSpec digital_call(double strike, double maturity);
    static ClaimSpec custom(PiecewiseLinear table, double maturity);

    // h(x). Digital pays 1/2 exactly at the strike.
    double payoff(double x) const;
};

} // namespace risklab
