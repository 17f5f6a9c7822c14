import datetime as dt
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daytrade.errors import ParseError, StoreFormatError, ValidationError
from daytrade.quotes import (
    DailyQuote,
    QuoteSeries,
    dump_store,
    load_store,
    loads_store,
    parse_csv,
    save_store,
    slice_by_date,
)

from conftest import MSFT_CSV, quote_series

HEADER = "date,open,high,low,close\n"


def test_single_row():
    s = parse_csv(HEADER + "2003-07-18,26.00,26.50,25.80,26.31\n", "MSFT")
    assert len(s) == 1
    q = s[0]
    assert q.date == dt.date(2003, 7, 18)
    assert (q.open, q.high, q.low, q.close) == (
        Decimal("26.00"),
        Decimal("26.50"),
        Decimal("25.80"),
        Decimal("26.31"),
    )
    assert str(q.open) == "26.00"


def test_low_above_high_names_date():
    with pytest.raises(ValidationError, match="2003-07-18"):
        parse_csv(HEADER + "2003-07-18,26.00,26.50,27.00,26.31\n", "X")


@pytest.mark.parametrize(
    "row, match",
    [
        ("2003-07-18,26.00,26.50,25.80", "line 2: expected 5 columns"),
        ("2003-07-18,26.00,26.50,25.80,26.31,1", "line 2: expected 5 columns"),
        ("2003-13-18,26.00,26.50,25.80,26.31", "line 2: unparseable date"),
        ("2003-07-18,abc,26.50,25.80,26.31", "line 2: unparseable open"),
        ("2003-07-18,26.00,26.50,25.80,inf", "line 2: non-finite close"),
    ],
)
def test_malformed_rows(row, match):
    with pytest.raises(ParseError, match=match):
        parse_csv(HEADER + row + "\n", "X")


def test_error_line_number_counts_header():
    text = HEADER + "2003-07-18,26,26.5,25.8,26.3\n2003-07-21,26,26.5,25.8,x\n"
    with pytest.raises(ParseError) as e:
        parse_csv(text, "X")
    assert e.value.line == 3


def test_bad_header():
    with pytest.raises(ParseError, match="header"):
        parse_csv("day,o,h,l,c\n2003-07-18,1,1,1,1\n", "X")
    with pytest.raises(ParseError, match="empty"):
        parse_csv("", "X")


def test_vendor_extras_and_descending_order():
    text = (
        "Date,Open,High,Low,Close,Volume,Adj Close\r\n"
        "2003-07-22,26.5,26.9,26.3,26.8,100,19.9\r\n"
        "2003-07-21,26.9,27.0,26.4,26.5,200,19.7\r\n"
        "2003-07-18,27.11,27.23,26.75,26.89,300,20.01\r\n"
    )
    s = parse_csv(text, "MSFT")
    assert s.dates == [dt.date(2003, 7, 18), dt.date(2003, 7, 21), dt.date(2003, 7, 22)]
    assert s[0].close == Decimal("26.89")


def test_duplicate_date_rejected():
    text = HEADER + "2003-07-18,1,2,1,2\n2003-07-18,1,2,1,2\n"
    with pytest.raises(ValidationError, match="duplicate"):
        parse_csv(text, "X")


def test_decimal_comma():
    s = parse_csv("date;open;high;low;close\n2003-07-18;26,00;26,50;25,80;26,31\n", "X", decimal_comma=True)
    assert s[0].high == Decimal("26.50")


def test_zero_range_day_is_valid():
    q = DailyQuote(dt.date(2004, 1, 2), 10, 10, 10, 10)
    assert q.low == q.high


@pytest.mark.parametrize("prices", [(0, 1, 0, 1), (-1, 1, -2, 0), (1, 2, 1, 3), (2.5, 2, 1, 1.5)])
def test_invalid_quotes(prices):
    with pytest.raises(ValidationError):
        DailyQuote(dt.date(2004, 1, 2), *prices)


def test_series_must_increase():
    a = DailyQuote(dt.date(2004, 1, 5), 1, 1, 1, 1)
    b = DailyQuote(dt.date(2004, 1, 2), 1, 1, 1, 1)
    with pytest.raises(ValidationError):
        QuoteSeries("X", [a, b])


@given(
    low=st.integers(1, 10_000),
    high=st.integers(1, 10_000),
    o=st.integers(1, 10_000),
    c=st.integers(1, 10_000),
)
def test_parse_accepts_exactly_the_valid_rows(low, high, o, c):
    row = f"2004-01-02,{o},{high},{low},{c}\n"
    valid = low <= min(o, c) and max(o, c) <= high
    if valid:
        q = parse_csv(HEADER + row, "X")[0]
        assert q.low <= min(q.open, q.close) and max(q.open, q.close) <= q.high
    else:
        with pytest.raises(ValidationError, match="2004-01-02"):
            parse_csv(HEADER + row, "X")


def test_msft_fixture_length(msft):
    assert len(msft) == 756
    assert msft.first_date == dt.date(2003, 7, 18)
    assert msft.last_date == dt.date(2006, 7, 18)


def test_slice_identity_and_empty(msft):
    assert slice_by_date(msft, msft.first_date, msft.last_date) == msft
    assert len(slice_by_date(msft, dt.date(2001, 1, 1), dt.date(2003, 7, 17))) == 0
    with pytest.raises(ValueError):
        slice_by_date(msft, dt.date(2004, 1, 2), dt.date(2004, 1, 1))


def test_slice_first_month(msft):
    # rows dated 2003-07 counted in the fixture file with grep: 18,21-25,28-31
    july = slice_by_date(msft, dt.date(2003, 7, 1), dt.date(2003, 7, 31))
    assert len(july) == 10
    assert july.dates[-1] == dt.date(2003, 7, 31)


def test_store_round_trip_single(tmp_path):
    s = parse_csv(HEADER + "2003-07-18,26.00,26.50,25.80,26.31\n", "MSFT")
    save_store(s, tmp_path / "one.store")
    back = load_store(tmp_path / "one.store")
    assert back == s
    assert [str(x) for x in (back[0].open, back[0].high)] == ["26.00", "26.50"]


def test_store_round_trip_fixture(msft, tmp_path):
    path = tmp_path / "msft.store"
    save_store(msft, path)
    back = load_store(path)
    assert back == msft
    assert dump_store(back) == path.read_bytes()


def test_empty_series_store(tmp_path):
    s = QuoteSeries("X", [])
    save_store(s, tmp_path / "e.store")
    assert load_store(tmp_path / "e.store") == s


def test_truncated_store(msft, tmp_path):
    data = dump_store(msft)
    with pytest.raises(StoreFormatError):
        loads_store(data[: len(data) // 2])


def test_tampered_and_versioned_store(msft):
    data = dump_store(msft[:3])
    with pytest.raises(StoreFormatError, match="checksum"):
        loads_store(data.replace(b'"27.11"', b'"27.12"'))
    with pytest.raises(StoreFormatError, match="version"):
        loads_store(data.replace(b'"format_version": 1', b'"format_version": 2'))
    with pytest.raises(StoreFormatError):
        loads_store(b"{}")


def test_missing_store_is_io_error(tmp_path):
    with pytest.raises(OSError):
        load_store(tmp_path / "nope.store")


@settings(max_examples=50)
@given(series=quote_series(min_size=0))
def test_store_round_trip_property(series):
    assert loads_store(dump_store(series)) == series
    assert dump_store(loads_store(dump_store(series))) == dump_store(series)


def test_fixture_csv_parses_exactly():
    # no silent row dropping: every data line becomes a quote
    lines = [l for l in MSFT_CSV.read_text().splitlines()[1:] if l.strip()]
    assert len(lines) == 756
