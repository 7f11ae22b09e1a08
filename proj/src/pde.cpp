#include "risklab/pde.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "risklab/errors.hpp"
#include "risklab/pricing.hpp"

namespace risklab {
namespace {

// Cubic Lagrange on 4 consecutive uniform nodes; u in node units from the
// stencil's first node. Returns f, df/du, d2f/du2.
struct CubicEval {
    double f;
    double fu;
    double fuu;
};

CubicEval cubic_lagrange(const double* v, double u) {
    static const double offs[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    static const double den[4] = {-6.0, 2.0, -2.0, 6.0};
    CubicEval out{0.0, 0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const double a = u - offs[k][0];
        const double b = u - offs[k][1];
        const double c = u - offs[k][2];
        const double p = a * b * c;
        const double p1 = a * b + a * c + b * c;
        const double p2 = 2.0 * (a + b + c);
        out.f += v[k] * p / den[k];
        out.fu += v[k] * p1 / den[k];
        out.fuu += v[k] * p2 / den[k];
    }
    return out;
}

struct BoundaryState {
    double i_nu = 0.0;       // int_t^T nu (kept exact via curve integral)
    double i_zeta_bot = 0.0; // int_t^T zeta(s, x_min) ds
    double i_zeta_top = 0.0; // int_t^T zeta(s, x_max) ds
};

double boundary_value(const ClaimSpec& claim, double x_b, bool top, double i_nu,
                      double i_zeta, bool discounted) {
    // Asymptotic value with the state frozen at the boundary: the terminal
    // price is x_b * exp(i_nu - i_zeta) and discounting contributes
    // exp(-i_nu) when requested.
    const double fwd = x_b * std::exp(i_nu - i_zeta);
    const double pv = discounted ? std::exp(-i_nu) : 1.0;
    switch (claim.kind) {
        case ClaimKind::Call: return top ? pv * (fwd - *claim.strike) : 0.0;
        case ClaimKind::Put: return top ? 0.0 : pv * (*claim.strike - fwd);
        case ClaimKind::Forward: return pv * (fwd - *claim.strike);
        case ClaimKind::DigitalCall: return top ? pv : 0.0;
        case ClaimKind::Custom: return pv * claim.payoff(fwd);
    }
    return 0.0;
}

} // namespace

void PdeGrid::validate() const {
    if (n_space < 50) throw ConfigError("pde grid needs n_space >= 50");
    if (n_time < 20) throw ConfigError("pde grid needs n_time >= 20");
    const bool has_min = x_min > 0.0;
    const bool has_max = x_max > 0.0;
    if (has_min != has_max)
        throw ConfigError("pde grid: set both x_min and x_max or neither");
    if (has_min && !(x_min < x_max))
        throw ConfigError("pde grid needs x_min < x_max");
}

PdeSolution::PdeSolution(std::vector<double> log_nodes, std::vector<double> times,
                         std::vector<std::vector<double>> slices)
    : ys_(std::move(log_nodes)), times_(std::move(times)), slices_(std::move(slices)) {}

double PdeSolution::eval(double t, double x, int deriv) const {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("pde evaluation needs x > 0");
    const double T = times_.back();
    if (t < -1e-12 || t > T + 1e-12)
        throw DomainError("pde evaluation time outside [0, T]");
    t = std::clamp(t, 0.0, T);

    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - times_.begin());
    hi = std::clamp<std::size_t>(hi, 1, times_.size() - 1);
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);

    const double dy = ys_[1] - ys_[0];
    const double y = std::clamp(std::log(x), ys_.front(), ys_.back());
    auto j0 = static_cast<std::int64_t>(std::floor((y - ys_.front()) / dy)) - 1;
    j0 = std::clamp<std::int64_t>(j0, 0, static_cast<std::int64_t>(ys_.size()) - 4);
    const double u = (y - ys_[static_cast<std::size_t>(j0)]) / dy;

    const CubicEval a = cubic_lagrange(&slices_[lo][static_cast<std::size_t>(j0)], u);
    const CubicEval b = cubic_lagrange(&slices_[hi][static_cast<std::size_t>(j0)], u);
    const double f = (1.0 - w) * a.f + w * b.f;
    if (deriv == 0) return f;
    const double fy = ((1.0 - w) * a.fu + w * b.fu) / dy;
    if (deriv == 1) return fy / x;
    const double fyy = ((1.0 - w) * a.fuu + w * b.fuu) / (dy * dy);
    return (fyy - fy) / (x * x);
}

double PdeSolution::value(double t, double x) const { return eval(t, x, 0); }
double PdeSolution::delta(double t, double x) const { return eval(t, x, 1); }
double PdeSolution::gamma(double t, double x) const { return eval(t, x, 2); }

PdeSolution pde_solve(const MarketModel& market, const IntrinsicRiskModel& zeta,
                      const ClaimSpec& claim, const PdeGrid& grid, bool discounted) {
    grid.validate();
    const double T = claim.maturity;
    const int m = grid.n_space;
    const int n = grid.n_time;

    // Domain in log-price.
    double y_min, y_max;
    const double y0 = std::log(market.spot);
    if (grid.x_min > 0.0) {
        if (!(grid.x_min < market.spot && market.spot < grid.x_max))
            throw ConfigError("pde grid needs x_min < spot < x_max");
        y_min = std::log(grid.x_min);
        y_max = std::log(grid.x_max);
    } else {
        const auto var_curve = market.sigma.map([](double s) { return s * s; });
        const double width = std::max(6.0 * std::sqrt(var_curve.integral(0.0, T)), 0.25);
        y_min = y0 - width;
        y_max = y0 + width;
    }
    if (claim.strike) {
        const double yk = std::log(*claim.strike);
        y_min = std::min(y_min, yk - 0.25);
        y_max = std::max(y_max, yk + 0.25);
    }
    double dy = (y_max - y_min) / m;
    if (claim.strike) {
        // Shift the grid (by at most dy/2) so ln(strike) sits midway between
        // two nodes: halves the payoff-sampling error for kinked payoffs.
        const double yk = std::log(*claim.strike);
        const double k = std::round((yk - y_min) / dy - 0.5);
        y_min += yk - (y_min + (k + 0.5) * dy);
    }

    std::vector<double> ys(static_cast<std::size_t>(m) + 1);
    std::vector<double> xs(ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j) {
        ys[j] = y_min + static_cast<double>(j) * dy;
        xs[j] = std::exp(ys[j]);
    }

    const double dt = T / n;
    std::vector<double> times(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < times.size(); ++i) times[i] = static_cast<double>(i) * dt;
    times.back() = T;

    std::vector<std::vector<double>> slices(times.size());
    auto& terminal = slices.back();
    terminal.resize(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) terminal[j] = claim.payoff(xs[j]);

    const auto det_curve = zeta.deterministic_curve(market, T);

    // Scratch for the theta-scheme step.
    std::vector<double> rhs(xs.size()), diag(xs.size()), lower(xs.size()),
        upper(xs.size()), cp(xs.size());
    BoundaryState bstate;

    // One theta-step from t_hi (src) to t_lo, writing dst. Coefficients at the
    // interval midpoint. Updates the boundary zeta integrals.
    auto step = [&](const std::vector<double>& src, std::vector<double>& dst,
                    double t_lo, double t_hi, double theta) {
        const double h = t_hi - t_lo;
        const double tm = 0.5 * (t_lo + t_hi);
        const double sig = market.sigma(tm);
        const double b = 0.5 * sig * sig;
        const double nu_m = market.nu(tm);
        const double r = discounted ? nu_m : 0.0;

        bstate.i_nu = market.nu.integral(t_lo, T);
        if (det_curve) {
            bstate.i_zeta_bot = det_curve->integral(t_lo, T);
            bstate.i_zeta_top = bstate.i_zeta_bot;
        } else {
            bstate.i_zeta_bot += zeta.rate(market, tm, xs.front(), T) * h;
            bstate.i_zeta_top += zeta.rate(market, tm, xs.back(), T) * h;
        }
        const double v_bot = boundary_value(claim, xs.front(), false, bstate.i_nu,
                                            bstate.i_zeta_bot, discounted);
        const double v_top = boundary_value(claim, xs.back(), true, bstate.i_nu,
                                            bstate.i_zeta_top, discounted);

        const std::size_t last = xs.size() - 1;
        for (std::size_t j = 1; j < last; ++j) {
            const double a = nu_m - zeta.rate(market, tm, xs[j], T) - b;
            const double alpha = b / (dy * dy) - a / (2.0 * dy);
            const double beta = -2.0 * b / (dy * dy) - r;
            const double gamma = b / (dy * dy) + a / (2.0 * dy);
            lower[j] = -theta * h * alpha;
            diag[j] = 1.0 - theta * h * beta;
            upper[j] = -theta * h * gamma;
            double v = src[j];
            if (theta < 1.0) {
                const double ex = (1.0 - theta) * h;
                v += ex * (alpha * src[j - 1] + beta * src[j] + gamma * src[j + 1]);
            }
            rhs[j] = v;
        }
        rhs[1] -= lower[1] * v_bot;
        rhs[last - 1] -= upper[last - 1] * v_top;

        // Thomas solve over interior nodes.
        cp[1] = upper[1] / diag[1];
        rhs[1] /= diag[1];
        for (std::size_t j = 2; j < last; ++j) {
            const double den = diag[j] - lower[j] * cp[j - 1];
            cp[j] = upper[j] / den;
            rhs[j] = (rhs[j] - lower[j] * rhs[j - 1]) / den;
        }
        dst.resize(xs.size());
        dst[last] = v_top;
        dst[0] = v_bot;
        double next = v_top;
        for (std::size_t j = last - 1; j >= 1; --j) {
            next = rhs[j] - cp[j] * next;
            dst[j] = next;
        }
    };

    std::vector<double> half(xs.size());
    for (int i = n - 1; i >= 0; --i) {
        const double t_lo = times[static_cast<std::size_t>(i)];
        const double t_hi = times[static_cast<std::size_t>(i) + 1];
        const auto& src = slices[static_cast<std::size_t>(i) + 1];
        auto& dst = slices[static_cast<std::size_t>(i)];
        if (i >= n - 2) {
            // Rannacher startup: the two steps next to maturity run as four
            // fully implicit half-steps to damp the payoff kink.
            const double t_mid = 0.5 * (t_lo + t_hi);
            step(src, half, t_mid, t_hi, 1.0);
            step(half, dst, t_lo, t_mid, 1.0);
        } else {
            step(src, dst, t_lo, t_hi, 0.5);
        }
    }

    return PdeSolution(std::move(ys), std::move(times), std::move(slices));
}

PricingResult pde_price(const MarketModel& market, const IntrinsicRiskModel& zeta,
                        const ClaimSpec& claim, const PdeGrid& grid) {
    const PdeSolution sol = pde_solve(market, zeta, claim, grid, true);
    PricingResult r;
    r.value = sol.value(0.0, market.spot);
    r.std_error = 0.0;
    r.engine = EngineKind::Pde;
    r.diagnostics = "grid=" + std::to_string(grid.n_space) + "x" +
                    std::to_string(grid.n_time);
    return r;
}

} // namespace risklab
