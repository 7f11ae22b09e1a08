#include <utility>

#include "risklab/pricing.hpp"

namespace risklab {
namespace {

class ClosedFormValuer final : public ClaimValuer {
public:
    ClosedFormValuer(MarketModel market, IntrinsicRiskModel zeta, ClaimSpec claim)
        : market_(std::move(market)), zeta_(std::move(zeta)), claim_(std::move(claim)) {}

    double value(double t, double x) const override {
        return closed_form_value(market_, zeta_, claim_, t, x);
    }
    double delta(double t, double x) const override {
        return closed_form_delta(market_, zeta_, claim_, t, x);
    }
    double gamma(double t, double x) const override {
        return closed_form_gamma(market_, zeta_, claim_, t, x);
    }

private:
    MarketModel market_;
    IntrinsicRiskModel zeta_;
    ClaimSpec claim_;
};

class PdeValuer final : public ClaimValuer {
public:
    explicit PdeValuer(PdeSolution sol) : sol_(std::move(sol)) {}

    double value(double t, double x) const override { return sol_.value(t, x); }
    double delta(double t, double x) const override { return sol_.delta(t, x); }
    double gamma(double t, double x) const override { return sol_.gamma(t, x); }

private:
    PdeSolution sol_;
};

} // namespace

std::unique_ptr<ClaimValuer> make_valuer(const MarketModel& market,
                                         const IntrinsicRiskModel& zeta,
                                         const ClaimSpec& claim,
                                         const PdeGrid& grid_if_needed) {
    const bool analytic = claim.kind != ClaimKind::Custom && !zeta.is_state_dependent();
    if (analytic)
        return std::make_unique<ClosedFormValuer>(market, zeta, claim);
    return std::make_unique<PdeValuer>(pde_solve(market, zeta, claim, grid_if_needed));
}

} // namespace risklab
