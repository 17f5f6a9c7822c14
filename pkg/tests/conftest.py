import datetime as dt
from decimal import Decimal
from pathlib import Path

import pytest
from hypothesis import strategies as st

from daytrade.quotes import DailyQuote, QuoteSeries, read_csv

DATA = Path(__file__).parent / "data"
MSFT_CSV = DATA / "msft_2003-07-18_2006-07-18.csv"


@pytest.fixture(scope="session")
def msft():
    return read_csv(MSFT_CSV, "MSFT")


def cents(n: int) -> Decimal:
    return Decimal(n).scaleb(-2)


@st.composite
def valid_quotes(draw, day=dt.date(2004, 1, 2)):
    """Valid OHLC quotes on a cent grid, including flat and boundary days."""
    low = draw(st.integers(1, 1_000_000))
    width = draw(st.integers(0, 50_000))
    o = draw(st.integers(low, low + width))
    c = draw(st.integers(low, low + width))
    return DailyQuote(day, cents(o), cents(low + width), cents(low), cents(c))


@st.composite
def quote_series(draw, min_size=1, max_size=40):
    n = draw(st.integers(min_size, max_size))
    start = dt.date(2003, 7, 18)
    quotes = []
    for i in range(n):
        q = draw(valid_quotes())
        quotes.append(DailyQuote(start + dt.timedelta(days=i), q.open, q.high, q.low, q.close))
    return QuoteSeries("TEST", quotes)


# criterion number -> (passed, description), filled by test_acceptance
RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, text = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
