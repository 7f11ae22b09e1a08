#pragma once

#include <memory>
#include <string>
#include <vector>

#include "risklab/claims.hpp"
#include "risklab/intrinsic_risk.hpp"
#include "risklab/market_model.hpp"
#include "risklab/pde.hpp"

namespace risklab {

enum class EngineKind { ClosedForm, MonteCarlo, Pde };

std::string to_string(EngineKind engine);

struct PricingResult {
    double value = 0.0;
    double std_error = 0.0;  // 0 for deterministic engines
    EngineKind engine = EngineKind::ClosedForm;
    std::string diagnostics;  // n_paths / grid dims / iterations
};

struct McSettings {
    std::int64_t n_paths = 100000;
    int n_steps = 1;
    std::uint64_t seed = 0;
};

// Engine selector for operations that can run on any engine.
struct EngineSettings {
    EngineKind method = EngineKind::ClosedForm;
    McSettings mc;
    PdeGrid grid;
};

double norm_cdf(double x);
double norm_pdf(double x);

// --- closed form (deterministic sigma, nu, zeta; lognormal terminal law) ---
// Black-Scholes with carry: discount at nu, asset grows at nu - zeta, i.e.
// zeta acts as a dividend yield. Values at time t for a claim maturing at
// claim.maturity; throws UnsupportedError for state-dependent zeta or Custom
// payoffs.
double closed_form_value(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x);
double closed_form_delta(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x);
double closed_form_gamma(const MarketModel& market, const IntrinsicRiskModel& zeta,
                         const ClaimSpec& claim, double t, double x);
double closed_form_vega(const MarketModel& market, const IntrinsicRiskModel& zeta,
                        const ClaimSpec& claim, double t, double x);

PricingResult closed_form_price(const MarketModel& market,
                                const IntrinsicRiskModel& zeta, const ClaimSpec& claim);

// --- Monte Carlo under the risk-subjective measure ---
PricingResult mc_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                       const ClaimSpec& claim, std::int64_t n_paths, int n_steps,
                       std::uint64_t seed);

// --- PDE engine ---
PricingResult pde_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                        const ClaimSpec& claim, const PdeGrid& grid);

// --- implied volatility (flat-vol, zeta = 0 inversion) ---
// Returns sigma_bar such that the zeta-free closed form reproduces `price` to
// |dprice| <= 1e-10. Bisection on [1e-4, 5] plus Newton polish, <= 100 rounds.
double implied_vol(double price, const MarketModel& market, const ClaimSpec& claim);

struct SmilePoint {
    double strike;
    double maturity;
    double implied_vol;
};

std::vector<SmilePoint> smile_surface(const MarketModel& market,
                                      const IntrinsicRiskModel& zeta,
                                      const std::vector<double>& strikes,
                                      const std::vector<double>& maturities,
                                      const EngineSettings& engine);

// --- futures / convexity ---
// Futures value = undiscounted expectation of X(T) under the risk-subjective
// measure; forward value = spot * exp(int nu). The convexity adjustment is
// forward - futures = spot * exp(int nu) * (1 - exp(-int zeta)) for
// deterministic zeta.
PricingResult futures_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                            double maturity, const EngineSettings& engine);

PricingResult convexity_adjustment(const MarketModel& market,
                                   const IntrinsicRiskModel& zeta, double maturity,
                                   const EngineSettings& engine);

// --- valuation surface for hedging ---
// value/delta/gamma at (t, x); closed form when the claim and zeta admit it,
// PDE otherwise.
class ClaimValuer {
public:
    virtual ~ClaimValuer() = default;
    virtual double value(double t, double x) const = 0;
    virtual double delta(double t, double x) const = 0;
    virtual double gamma(double t, double x) const = 0;
};

std::unique_ptr<ClaimValuer> make_valuer(const MarketModel& market,
                                         const IntrinsicRiskModel& zeta,
                                         const ClaimSpec& claim,
                                         const PdeGrid& grid_if_needed = {});

} // namespace risklab
