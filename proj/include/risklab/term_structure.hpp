#pragma once

#include <functional>
#include <vector>

namespace risklab {

struct Knot {
    double time;  // years
    double value;
};

// Piecewise-constant, right-continuous curve of time. Knot times are strictly
// increasing and the first knot sits at t = 0; the value at t is the value of
// the last knot <= t. Integrals over [t0, t1] are exact.
class TermStructure {
public:
    explicit TermStructure(double constant_value);
    explicit TermStructure(std::vector<Knot> knots);

    double operator()(double t) const;
    double integral(double t0, double t1) const;

    const std::vector<Knot>& knots() const { return knots_; }
    bool is_zero() const;

    // New curve with the same knots and f applied to each value.
    TermStructure map(const std::function<double(double)>& f) const;

    // Pointwise combination on the union of both knot grids.
    static TermStructure merge(const TermStructure& a, const TermStructure& b,
                               const std::function<double(double, double)>& f);

private:
    std::vector<Knot> knots_;
};

// Tabulated function of price with linear interpolation between points and
// flat extrapolation outside the table. Needs >= 2 points, x strictly
// increasing.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

} // namespace risklab
