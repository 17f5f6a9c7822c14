"""Compounded return projections over a horizon of winning and losing days.

A winning day multiplies equity by ``1 + k*s`` and a losing day by
``1 - k*s``, where ``s`` is the average daily spread as a fraction and
``k = margin / 100`` the leverage multiple. With ``alpha`` wins out of
``horizon`` days the terminal value, in percent of starting capital, is::

    (1 + k*s) ** alpha * (1 - k*s) ** (horizon - alpha) * 100

Order of wins and losses does not matter. ``margin=100`` is unleveraged,
``margin=200`` is 2:1 buying power and the 4:1 intraday buying power of a
pattern day trader account is ``margin=400``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import RuinError

DEFAULT_HORIZON = 30


@dataclass(frozen=True)
class ProjectionParams:
    spread: float
    alpha: int
    horizon: int = DEFAULT_HORIZON
    margin: float = 100.0

    def __post_init__(self):
        if not self.horizon >= 1 or int(self.horizon) != self.horizon:
            raise ValueError(f"horizon must be a positive integer, got {self.horizon}")
        if isinstance(self.alpha, float) and not self.alpha.is_integer():
            raise ValueError(f"alpha must be a whole number of days, got {self.alpha}")
        if not 0 <= self.alpha <= self.horizon:
            raise ValueError(f"alpha must lie in [0, {self.horizon}], got {self.alpha}")
        if not self.spread >= 0:
            raise ValueError(f"spread must be >= 0, got {self.spread}")
        if not self.margin >= 0:
            raise ValueError(f"margin must be >= 0, got {self.margin}")
        check_ruin(self.spread, self.margin)

    @property
    def daily_move(self) -> float:
        """Leveraged per-day move as a fraction, ``k*s``."""
        return leveraged_move(self.spread, self.margin)


@dataclass(frozen=True)
class ProjectionResult:
    value: float
    params: ProjectionParams


def leveraged_move(spread: float, margin: float) -> float:
    return spread / 100 * (margin / 100)


def check_ruin(spread: float, margin: float) -> None:
    if leveraged_move(spread, margin) >= 1:
        raise RuinError(
            f"margin {margin:g}% on spread {spread:g}% loses the whole stake on a single losing day"
        )


def _closed_form(ks: float, alpha: float, horizon: int) -> float:
    return (1 + ks) ** alpha * (1 - ks) ** (horizon - alpha) * 100


def project(params: ProjectionParams) -> ProjectionResult:
    return ProjectionResult(_closed_form(params.daily_move, params.alpha, params.horizon), params)


def project_value(spread: float, alpha: int, horizon: int = DEFAULT_HORIZON, margin: float = 100.0) -> float:
    return project(ProjectionParams(spread, alpha, horizon, margin)).value


def break_even_alpha(spread: float, horizon: int = DEFAULT_HORIZON, margin: float = 100.0) -> int | None:
    """Smallest integer number of winning days that ends at or above 100.

    Returns None when even ``alpha == horizon`` stays below 100.
    """
    if not spread > 0:
        raise ValueError(f"spread must be > 0, got {spread}")
    ProjectionParams(spread, 0, horizon, margin)
    ks = leveraged_move(spread, margin)
    if ks == 0:
        return 0
    # solve (1+ks)^a (1-ks)^(n-a) = 1 for a, then settle the integer with project()
    guess = -horizon * math.log1p(-ks) / (math.log1p(ks) - math.log1p(-ks))
    a = min(max(math.ceil(guess), 0), horizon)
    while a > 0 and project_value(spread, a - 1, horizon, margin) >= 100:
        a -= 1
    while a <= horizon and project_value(spread, a, horizon, margin) < 100:
        a += 1
    return a if a <= horizon else None


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    margin: float
    value: float

    @property
    def interpolated(self) -> bool:
        return self.alpha != int(self.alpha)


def alpha_sweep(
    spread: float,
    horizon: int = DEFAULT_HORIZON,
    margins: Iterable[float] = (100.0,),
    step: float = 1.0,
) -> list[SweepRow]:
    """Projection values for every alpha in ``0..horizon`` and every margin.

    Rows are ordered by alpha, then by margin as given. A ``step`` below 1
    adds fractional alpha points for smooth plotting; those rows report
    ``interpolated``.
    """
    margins = list(margins)
    for m in margins:
        check_ruin(spread, m)
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    count = int(round(horizon / step))
    if not math.isclose(count * step, horizon):
        raise ValueError(f"step {step} does not divide horizon {horizon}")
    alphas = [i if step == 1 else (horizon if i == count else i * step) for i in range(count + 1)]
    rows = []
    for a in alphas:
        for m in margins:
            if float(a).is_integer():
                value = project_value(spread, int(a), horizon, m)
            else:
                value = _closed_form(leveraged_move(spread, m), a, horizon)
            rows.append(SweepRow(a, m, value))
    return rows
