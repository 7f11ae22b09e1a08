#!/usr/bin/env python3
"""Reference values for the closed-form engine tests.

Prices European claims by composite-Simpson quadrature of the lognormal
terminal density, splitting the integration domain at the payoff kink so the
integrand is smooth on each piece. Independent of the N(d1)/N(d2) algebra
under test: only the aggregate integrals (drift, variance) are shared.

Terminal law: X(T) = spot * exp(m + s*Z), Z ~ N(0,1), with
  m = int(nu - zeta) - 0.5 * int(sigma^2),   s^2 = int(sigma^2)
value = exp(-int(nu)) * E[h(X(T))].
"""

import math


def piecewise_integral(knots, t0, t1):
    """Integral of a right-continuous piecewise-constant curve."""
    total = 0.0
    for i, (t, v) in enumerate(knots):
        seg_lo = max(t, t0)
        seg_hi = t1 if i + 1 == len(knots) else min(knots[i + 1][0], t1)
        if seg_hi > seg_lo:
            total += v * (seg_hi - seg_lo)
    return total


def simpson(f, a, b, n=200000):
    if b <= a:
        return 0.0
    h = (b - a) / n
    acc = f(a) + f(b)
    for i in range(1, n):
        acc += f(a + i * h) * (4 if i % 2 else 2)
    return acc * h / 3.0


def phi(z):
    return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


def price(kind, spot, strike, T, sigma, nu, zeta):
    to_knots = lambda c: [(0.0, c)] if isinstance(c, (int, float)) else c
    i_nu = piecewise_integral(to_knots(nu), 0.0, T)
    i_zeta = piecewise_integral(to_knots(zeta), 0.0, T)
    var_knots = [(t, v * v) for t, v in to_knots(sigma)]
    i_var = piecewise_integral(var_knots, 0.0, T)
    m = i_nu - i_zeta - 0.5 * i_var
    s = math.sqrt(i_var)
    zk = (math.log(strike / spot) - m) / s
    if kind == "call":
        f = lambda z: (spot * math.exp(m + s * z) - strike) * phi(z)
        e = simpson(f, zk, max(zk + 1.0, 14.0))
    elif kind == "put":
        f = lambda z: (strike - spot * math.exp(m + s * z)) * phi(z)
        e = simpson(f, min(zk - 1.0, -14.0), zk)
    elif kind == "digital_call":
        e = 0.5 * math.erfc(zk / math.sqrt(2.0))
    else:
        raise ValueError(kind)
    return math.exp(-i_nu) * e


CASES = [
    ("call",         100.0, 100.0, 1.0, 0.2, 0.05, 0.0),
    ("call",         100.0, 100.0, 1.0, 0.2, 0.05, 0.02),
    ("put",          100.0, 100.0, 1.0, 0.2, 0.05, 0.02),
    ("digital_call", 100.0, 100.0, 1.0, 0.2, 0.05, 0.0),
    ("put",          100.0, 110.0, 2.0, 0.4, 0.0, -0.01),
    ("call",         100.0, 95.0,  1.0,
     [(0.0, 0.15), (0.5, 0.25)], [(0.0, 0.02), (0.75, 0.04)],
     [(0.0, 0.01), (0.3, 0.03)]),
]

if __name__ == "__main__":
    for case in CASES:
        print(f"{case!r}: {price(*case):.15f}")
