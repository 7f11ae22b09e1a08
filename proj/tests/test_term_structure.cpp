#include <cmath>

#include "doctest.h"
#include "risklab/errors.hpp"
#include "risklab/term_structure.hpp"
#include "test_util.hpp"

using namespace risklab;

TEST_CASE("flat curve evaluates and integrates exactly") {
    const TermStructure ts(0.05);
    CHECK_EQ(ts(0.0), 0.05);
    CHECK_EQ(ts(3.7), 0.05);
    CHECK_EQ(ts.integral(0.0, 1.0), 0.05);
    CHECK_EQ(ts.integral(0.5, 0.5), 0.0);
    CHECK_NEAR(ts.integral(0.25, 2.25), 0.1, 1e-15);
}

TEST_CASE("piecewise curve is right-continuous with exact integrals") {
    const TermStructure ts(std::vector<Knot>{{0.0, 0.02}, {0.5, 0.04}});
    CHECK_EQ(ts(0.0), 0.02);
    CHECK_EQ(ts(0.499999), 0.02);
    CHECK_EQ(ts(0.5), 0.04);
    CHECK_EQ(ts(10.0), 0.04);
    CHECK_NEAR(ts.integral(0.0, 1.0), 0.03, 1e-16);
    CHECK_NEAR(ts.integral(0.25, 0.75), 0.25 * 0.02 + 0.25 * 0.04, 1e-16);
    CHECK_NEAR(ts.integral(0.6, 0.9), 0.3 * 0.04, 1e-16);
}

TEST_CASE("map and merge operate on the union grid") {
    const TermStructure a(std::vector<Knot>{{0.0, 0.1}, {1.0, 0.3}});
    const TermStructure b(std::vector<Knot>{{0.0, 2.0}, {0.5, 4.0}});
    const TermStructure sq = a.map([](double v) { return v * v; });
    CHECK_EQ(sq(0.2), 0.1 * 0.1);
    CHECK_EQ(sq(1.5), 0.3 * 0.3);
    const TermStructure prod =
        TermStructure::merge(a, b, [](double x, double y) { return x * y; });
    CHECK_EQ(prod(0.25), 0.1 * 2.0);
    CHECK_EQ(prod(0.75), 0.1 * 4.0);
    CHECK_EQ(prod(1.25), 0.3 * 4.0);
    CHECK_EQ(prod.knots().size(), 3u);
}

TEST_CASE("is_zero detects the zero curve") {
    CHECK(TermStructure(0.0).is_zero());
    CHECK_FALSE(TermStructure(1e-9).is_zero());
    CHECK_FALSE(TermStructure(std::vector<Knot>{{0.0, 0.0}, {1.0, 0.1}}).is_zero());
}

TEST_CASE("curve validation rejects malformed knots") {
    CHECK_THROWS_AS(TermStructure(std::vector<Knot>{}), ConfigError);
    CHECK_THROWS_AS(TermStructure(std::vector<Knot>{{0.5, 1.0}}), ConfigError);
    CHECK_THROWS_AS(TermStructure(std::vector<Knot>{{0.0, 1.0}, {0.0, 2.0}}),
                    ConfigError);
    CHECK_THROWS_AS(TermStructure(std::vector<Knot>{{0.0, 1.0}, {-1.0, 2.0}}),
                    ConfigError);
    CHECK_THROWS_AS(TermStructure(std::vector<Knot>{{0.0, std::nan("")}}), ConfigError);
}

TEST_CASE("evaluation and integral domain errors") {
    const TermStructure ts(0.05);
    CHECK_THROWS_AS(ts(-0.1), DomainError);
    CHECK_THROWS_AS(ts.integral(0.5, 0.2), DomainError);
    CHECK_THROWS_AS(ts.integral(-0.1, 0.2), DomainError);
}

TEST_CASE("tabulated function interpolates linearly and clamps") {
    const PiecewiseLinear f({1.0, 2.0, 4.0}, {10.0, 20.0, 0.0});
    CHECK_EQ(f(1.0), 10.0);
    CHECK_EQ(f(1.5), 15.0);
    CHECK_EQ(f(3.0), 10.0);
    CHECK_EQ(f(0.5), 10.0);   // clamp below
    CHECK_EQ(f(9.0), 0.0);    // clamp above
    CHECK_THROWS_AS(PiecewiseLinear({1.0}, {2.0}), ConfigError);
    CHECK_THROWS_AS(PiecewiseLinear({1.0, 1.0}, {2.0, 3.0}), ConfigError);
    CHECK_THROWS_AS(PiecewiseLinear({1.0, 2.0}, {2.0}), ConfigError);
}
