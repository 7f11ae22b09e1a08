#include <cmath>
#include <sstream>

#include "risklab/errors.hpp"
#include "risklab/pricing.hpp"

namespace risklab {
namespace {

constexpr double kVolLo = 1e-4;
constexpr double kVolHi = 5.0;
constexpr double kPriceTol = 1e-10;

MarketModel flat_vol_market(const MarketModel& market, double sigma) {
    return MarketModel(market.spot, market.mu, TermStructure(sigma), market.nu);
}

} // namespace

double implied_vol(double price, const MarketModel& market, const ClaimSpec& claim) {
    if (claim.kind != ClaimKind::Call && claim.kind != ClaimKind::Put)
        throw UnsupportedError("implied vol is defined for calls and puts only");
    if (!std::isfinite(price)) throw DomainError("implied vol needs a finite price");

    const double K = *claim.strike;
    const double pv = 1.0 / discount_factor(market.nu, 0.0, claim.maturity);
    const double lower = claim.kind == ClaimKind::Call
                             ? std::max(market.spot - K * pv, 0.0)
                             : std::max(K * pv - market.spot, 0.0);
    const double upper = claim.kind == ClaimKind::Call ? market.spot : K * pv;
    if (!(price > lower) || !(price < upper)) {
        std::ostringstream os;
        os << "price " << price << " outside no-arbitrage bounds (" << lower << ", "
           << upper << ")";
        throw DomainError(os.str());
    }

    const auto zero = IntrinsicRiskModel::zero();
    auto residual = [&](double sigma) {
        const MarketModel m = flat_vol_market(market, sigma);
        return closed_form_value(m, zero, claim, 0.0, market.spot) - price;
    };

    double lo = kVolLo, hi = kVolHi;
    double flo = residual(lo);
    if (flo >= 0.0) {
        if (std::abs(flo) <= kPriceTol) return lo;
        throw DomainError("implied vol below bracket floor 1e-4");
    }
    if (residual(hi) <= -kPriceTol) throw DomainError("implied vol above bracket cap 5.0");

    int iters = 0;
    for (; iters < 60 && hi - lo > 1e-12; ++iters) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }

    // Newton polish with the flat-vol vega; bracket maintained as safeguard.
    double sigma = 0.5 * (lo + hi);
    double f = residual(sigma);
    while (std::abs(f) > kPriceTol && iters < 100) {
        if (f >= 0.0)
            hi = sigma;
        else
            lo = sigma;
        const MarketModel m = flat_vol_market(market, sigma);
        const double vega = closed_form_vega(m, zero, claim, 0.0, market.spot);
        double next = vega > 1e-14 ? sigma - f / vega : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        sigma = next;
        f = residual(sigma);
        ++iters;
    }
    if (std::abs(f) > kPriceTol) {
        std::ostringstream os;
        os << "implied vol did not converge: residual " << f << " after " << iters
           << " iterations";
        throw NumericError(os.str());
    }
    return sigma;
}

std::vector<SmilePoint> smile_surface(const MarketModel& market,
                                      const IntrinsicRiskModel& zeta,
                                      const std::vector<double>& strikes,
                                      const std::vector<double>& maturities,
                                      const EngineSettings& engine) {
    if (strikes.empty() || maturities.empty())
        throw ConfigError("smile needs at least one strike and one maturity");
    std::vector<SmilePoint> rows;
    rows.reserve(strikes.size() * maturities.size());
    for (double T : maturities) {
        for (double K : strikes) {
            const ClaimSpec claim = ClaimSpec::call(K, T);
            double price;
            switch (engine.method) {
                case EngineKind::ClosedForm:
                    price = closed_form_price(market, zeta, claim).value;
                    break;
                case EngineKind::MonteCarlo:
                    price = mc_price(market, zeta, claim, engine.mc.n_paths,
                                     engine.mc.n_steps, engine.mc.seed)
                                .value;
                    break;
                case EngineKind::Pde:
                    price = pde_price(market, zeta, claim, engine.grid).value;
                    break;
                default:
                    throw ConfigError("unknown engine");
            }
            rows.push_back({K, T, implied_vol(price, market, claim)});
        }
    }
    return rows;
}

} // namespace risklab
