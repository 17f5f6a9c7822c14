#!/usr/bin/env python3
"""Exact-rational reference values for the projection anchors.

Evaluates (1 + k*s)^a * (1 - k*s)^(n - a) * 100 with fractions.Fraction, so
the only rounding is the final conversion for printing. Shares no code
with the package.

    python3 scripts/oracle_anchors.py
"""

from fractions import Fraction

PUBLISHED_S_AV = "0.706059344"
PUBLISHED_Q_AV = "1.57655549"


def exact_projection(spread, alpha: int, horizon: int = 30, margin="100") -> Fraction:
    ks = Fraction(str(spread)) / 100 * Fraction(str(margin)) / 100
    return (1 + ks) ** alpha * (1 - ks) ** (horizon - alpha) * 100


def exact_break_even(spread, horizon: int = 30, margin="100"):
    for a in range(horizon + 1):
        if exact_projection(spread, a, horizon, margin) >= 100:
            return a
    return None


ANCHORS = {
    "s_av_alpha30_m100": (PUBLISHED_S_AV, 30, 30, "100"),
    "s_av_alpha15_m100": (PUBLISHED_S_AV, 15, 30, "100"),
    "s_av_alpha30_m200": (PUBLISHED_S_AV, 30, 30, "200"),
}


def anchor_values() -> dict[str, float]:
    return {name: float(exact_projection(*args)) for name, args in ANCHORS.items()}


if __name__ == "__main__":
    for name, value in anchor_values().items():
        print(f"{name}={value:.12f}")
    print(f"break_even_s_av_m100={exact_break_even(PUBLISHED_S_AV)}")
    print(f"break_even_q_av_m100={exact_break_even(PUBLISHED_Q_AV)}")
