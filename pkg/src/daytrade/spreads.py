"""Per-day open/close and low/high spreads and their averages.

``oc_spread`` is the absolute open-to-close move and ``range_spread`` the
low-to-high range, both as a percentage of the first price. Price
differences are taken in exact decimal arithmetic before converting to
float, so a quote and any rescaled copy of it give the same spread to a few
ulps.
"""

from __future__ import annotations

import datetime as dt
import statistics
from dataclasses import dataclass
from typing import Sequence

from .quotes import DailyQuote, QuoteSeries


def oc_spread(quote: DailyQuote) -> float:
    return float(abs(quote.close - quote.open)) / float(quote.open) * 100


def range_spread(quote: DailyQuote) -> float:
    # high >= low by invariant, so no absolute value is needed
    return float(quote.high - quote.low) / float(quote.low) * 100


def pairwise_sum(values: Sequence[float]) -> float:
    """Tree summation; rounding error grows as O(log n) instead of O(n)."""
    n = len(values)
    if n <= 8:
        total = 0.0
        for v in values:
            total += v
        return total
    mid = n // 2
    return pairwise_sum(values[:mid]) + pairwise_sum(values[mid:])


def mean(values: Sequence[float]) -> float:
    if not values:
        raise ValueError("mean of an empty sequence")
    return pairwise_sum(values) / len(values)


@dataclass(frozen=True)
class SpreadSeries:
    dates: tuple[dt.date, ...]
    oc_spread: tuple[float, ...]
    range_spread: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.dates)

    def rows(self):
        return zip(self.dates, self.oc_spread, self.range_spread)


@dataclass(frozen=True)
class SpreadStats:
    n: int
    s_av: float
    q_av: float
    s_min: float
    s_max: float
    s_median: float
    q_min: float
    q_max: float
    q_median: float


def spread_series(series: QuoteSeries) -> SpreadSeries:
    return SpreadSeries(
        dates=tuple(q.date for q in series),
        oc_spread=tuple(oc_spread(q) for q in series),
        range_spread=tuple(range_spread(q) for q in series),
    )


def spread_stats(series: QuoteSeries) -> tuple[SpreadStats, SpreadSeries]:
    """Averages of both spread series, plus the per-day series they came from.

    Raises ValueError for an empty series.
    """
    if len(series) == 0:
        raise ValueError("spread statistics need at least one quote")
    ss = spread_series(series)
    s, q = ss.oc_spread, ss.range_spread
    stats = SpreadStats(
        n=len(ss),
        s_av=mean(s),
        q_av=mean(q),
        s_min=min(s),
        s_max=max(s),
        s_median=statistics.median(s),
        q_min=min(q),
        q_max=max(q),
        q_median=statistics.median(q),
    )
    return stats, ss
