#include "risklab/term_structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risklab/errors.hpp"

namespace risklab {

TermStructure::TermStructure(double constant_value)
    : knots_{{0.0, constant_value}} {}

TermStructure::TermStructure(std::vector<Knot> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) {
        throw ConfigError("term structure needs at least one knot");
    }
    if (knots_.front().time != 0.0) {
        throw ConfigError("term structure must start at t = 0, got t = " +
                          std::to_string(knots_.front().time));
    }
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (!(knots_[i].time < knots_[i + 1].time)) {
            throw ConfigError("term structure knot times must be strictly increasing");
        }
    }
    for (const auto& k : knots_) {
        if (!std::isfinite(k.time) || !std::isfinite(k.value)) {
            throw ConfigError("term structure knots must be finite");
        }
    }
}

double TermStructure::operator()(double t) const {
    if (t < 0.0) {
        throw DomainError("term structure evaluated at t = " + std::to_string(t) +
                          " before curve start");
    }
    // last knot with time <= t
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double lhs, const Knot& k) { return lhs < k.time; });
    return std::prev(it)->value;
}

double TermStructure::integral(double t0, double t1) const {
    if (t0 < 0.0 || t1 < t0) {
        throw DomainError("term structure integral needs 0 <= t0 <= t1");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        const double seg_lo = knots_[i].time;
        const double seg_hi = (i + 1 < knots_.size()) ? knots_[i + 1].time : t1;
        const double lo = std::max(seg_lo, t0);
        const double hi = std::min(seg_hi, t1);
        if (hi > lo) acc += knots_[i].value * (hi - lo);
    }
    return acc;
}

bool TermStructure::is_zero() const {
    return std::all_of(knots_.begin(), knots_.end(),
                       [](const Knot& k) { return k.value == 0.0; });
}

TermStructure TermStructure::map(const std::function<double(double)>& f) const {
    std::vector<Knot> out = knots_;
    for (auto& k : out) k.value = f(k.value);
    return TermStructure(std::move(out));
}

TermStructure TermStructure::merge(const TermStructure& a, const TermStructure& b,
                                   const std::function<double(double, double)>& f) {
    std::vector<double> times;
    times.reserve(a.knots_.size() + b.knots_.size());
    for (const auto& k : a.knots_) times.push_back(k.time);
    for (const auto& k : b.knots_) times.push_back(k.time);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<Knot> out;
    out.reserve(times.size());
    for (double t : times) out.push_back({t, f(a(t), b(t))});
    return TermStructure(std::move(out));
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size()) {
        throw ConfigError("tabulated function needs as many x as y values");
    }
    if (xs_.size() < 2) {
        throw ConfigError("tabulated function needs at least 2 points");
    }
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (!(xs_[i] < xs_[i + 1])) {
            throw ConfigError("tabulated function x values must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
            throw ConfigError("tabulated function points must be finite");
        }
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
    return ys_[lo] + w * (ys_[hi] - ys_[lo]);
}

} // namespace risklab
