#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "risklab/claims.hpp"
#include "risklab/hedging.hpp"
#include "risklab/intrinsic_risk.hpp"
#include "risklab/market_model.hpp"
#include "risklab/pricing.hpp"

namespace risklab {

enum class Subcommand { Price, Smile, Hedge, Convexity, CheckMeasure };

struct SmileRequest {
    std::vector<double> strikes;
    std::vector<double> maturities;
};

struct ConvexityRequest {
    double maturity;
};

struct CheckMeasureRequest {
    double horizon;
    int n_grid;
};

struct HedgeRequest {
    HedgeConfig config;
    std::int64_t n_paths;
};

// One JSON document per run. Each subcommand admits exactly the sections it
// needs; unknown fields anywhere are rejected.
struct RunConfig {
    std::optional<MarketModel> market;
    std::optional<IntrinsicRiskModel> intrinsic_risk;
    std::optional<ClaimSpec> claim;
    std::optional<EngineSettings> engine;
    std::optional<HedgeRequest> hedge;
    std::optional<SmileRequest> smile;
    std::optional<ConvexityRequest> convexity;
    std::optional<CheckMeasureRequest> check_measure;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
};

// Parses and validates against the chosen subcommand. seed_override (from the
// command line) replaces the config seed before it is wired into engines.
RunConfig parse_run_config(const std::string& json_text, Subcommand sub,
                           std::optional<std::uint64_t> seed_override = std::nullopt);

// Executes the subcommand and returns the complete CSV report (header line
// first, '\n' separators, trailing newline).
std::string run_subcommand(Subcommand sub, const RunConfig& config);

} // namespace risklab
