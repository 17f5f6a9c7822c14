"""Daily OHLC quotes: parsing, validation, slicing and persistence.

Prices are held as :class:`decimal.Decimal` so that a series survives a
save/load cycle unchanged, including trailing zeros. Conversion to float
happens only where spreads and returns are computed.
"""

from __future__ import annotations

import csv
import datetime as dt
import hashlib
import io
import json
import os
import tempfile
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, StoreFormatError, ValidationError

CANONICAL_COLUMNS = ("date", "open", "high", "low", "close")

STORE_FORMAT = "daytrade-quote-store"
STORE_VERSION = 1


def _to_decimal(value) -> Decimal:
    if isinstance(value, Decimal):
        return value
    if isinstance(value, float):
        # repr gives the shortest string that round-trips the float
        return Decimal(repr(value))
    return Decimal(value)


@dataclass(frozen=True)
class DailyQuote:
    date: dt.date
    open: Decimal
    high: Decimal
    low: Decimal
    close: Decimal

    def __post_init__(self):
        for name in ("open", "high", "low", "close"):
            object.__setattr__(self, name, _to_decimal(getattr(self, name)))
        if isinstance(self.date, str):
            object.__setattr__(self, "date", dt.date.fromisoformat(self.date))
        self.validate()

    def validate(self) -> None:
        o, h, l, c = self.open, self.high, self.low, self.close
        for name, v in (("open", o), ("high", h), ("low", l), ("close", c)):
            if not v.is_finite() or v <= 0:
                raise ValidationError(f"{self.date}: {name} must be a positive price, got {v}")
        if l > h:
            raise ValidationError(f"{self.date}: low {l} above high {h}")
        if not l <= o <= h:
            raise ValidationError(f"{self.date}: open {o} outside [{l}, {h}]")
        if not l <= c <= h:
            raise ValidationError(f"{self.date}: close {c} outside [{l}, {h}]")

    def scaled(self, k) -> DailyQuote:
        """Return the same day with every price multiplied by ``k``."""
        k = _to_decimal(k)
        return DailyQuote(self.date, self.open * k, self.high * k, self.low * k, self.close * k)


@dataclass(frozen=True)
class QuoteSeries(Sequence[DailyQuote]):
    symbol: str
    quotes: tuple[DailyQuote, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "quotes", tuple(self.quotes))
        prev = None
        for q in self.quotes:
            if not isinstance(q, DailyQuote):
                raise ValidationError(f"expected DailyQuote, got {type(q).__name__}")
            if prev is not None:
                if q.date == prev:
                    raise ValidationError(f"{q.date}: duplicate date")
                if q.date < prev:
                    raise ValidationError(f"{q.date}: dates not strictly increasing (after {prev})")
            prev = q.date

    def __len__(self) -> int:
        return len(self.quotes)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return QuoteSeries(self.symbol, self.quotes[i])
        return self.quotes[i]

    def __iter__(self) -> Iterator[DailyQuote]:
        return iter(self.quotes)

    @property
    def dates(self) -> list[dt.date]:
        return [q.date for q in self.quotes]

    @property
    def first_date(self) -> dt.date | None:
        return self.quotes[0].date if self.quotes else None

    @property
    def last_date(self) -> dt.date | None:
        return self.quotes[-1].date if self.quotes else None


def parse_csv(text: str | Iterable[str], symbol: str, *, decimal_comma: bool = False) -> QuoteSeries:
    """Parse canonical OHLC CSV into a validated series.

    The header must start with ``date,open,high,low,close`` (case-insensitive);
    trailing columns such as volume or adjusted close are ignored. Files
    listed newest-first are re-sorted ascending. With ``decimal_comma`` the
    field separator is ``;`` and ``,`` is read as the decimal point.
    """
    if isinstance(text, str):
        text = io.StringIO(text, newline="")
    delimiter = ";" if decimal_comma else ","
    reader = csv.reader(text, delimiter=delimiter)

    header = None
    for header in reader:
        if header and any(cell.strip() for cell in header):
            break
    else:
        header = None
    if header is None:
        raise ParseError("empty input, expected a header line", line=1)
    header_names = tuple(h.strip().lstrip("﻿").lower() for h in header[: len(CANONICAL_COLUMNS)])
    if header_names != CANONICAL_COLUMNS:
        raise ParseError(
            f"header must begin with {','.join(CANONICAL_COLUMNS)}, got {','.join(header)}",
            line=reader.line_num,
        )

    quotes: list[DailyQuote] = []
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} columns, got {len(row)}", line=line)
        try:
            day = dt.date.fromisoformat(row[0].strip())
        except ValueError:
            raise ParseError(f"unparseable date {row[0]!r}", line=line) from None
        prices = []
        for name, cell in zip(CANONICAL_COLUMNS[1:], row[1:5]):
            raw = cell.strip()
            if decimal_comma:
                raw = raw.replace(",", ".")
            try:
                value = Decimal(raw)
            except InvalidOperation:
                raise ParseError(f"unparseable {name} {cell!r}", line=line) from None
            if not value.is_finite():
                raise ParseError(f"non-finite {name} {cell!r}", line=line)
            prices.append(value)
        quotes.append(DailyQuote(day, *prices))

    quotes.sort(key=lambda q: q.date)
    return QuoteSeries(symbol, quotes)


def read_csv(path: str | os.PathLike, symbol: str, *, decimal_comma: bool = False) -> QuoteSeries:
    with open(path, encoding="utf-8", newline="") as f:
        return parse_csv(f, symbol, decimal_comma=decimal_comma)


def slice_by_date(series: QuoteSeries, start: dt.date, end: dt.date) -> QuoteSeries:
    """Quotes with ``start <= date <= end``; possibly empty."""
    if start > end:
        raise ValueError(f"start {start} is after end {end}")
    return QuoteSeries(series.symbol, [q for q in series if start <= q.date <= end])


def _row(q: DailyQuote) -> list[str]:
    return [q.date.isoformat(), str(q.open), str(q.high), str(q.low), str(q.close)]


def _checksum(symbol: str, rows: list[list[str]]) -> str:
    payload = json.dumps([symbol, rows], separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def dump_store(series: QuoteSeries) -> bytes:
    rows = [_row(q) for q in series]
    head = {
        "format": STORE_FORMAT,
        "format_version": STORE_VERSION,
        "symbol": series.symbol,
        "columns": list(CANONICAL_COLUMNS),
        "sha256": _checksum(series.symbol, rows),
    }
    lines = ["{"]
    lines += [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()]
    # one row per line keeps stores diffable
    body = ",\n".join("    " + json.dumps(r) for r in rows)
    lines.append('  "rows": [' + (f"\n{body}\n  " if rows else "") + "]")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def loads_store(data: bytes) -> QuoteSeries:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise StoreFormatError(f"store is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or doc.get("format") != STORE_FORMAT:
        raise StoreFormatError("not a quote store")
    if doc.get("format_version") != STORE_VERSION:
        raise StoreFormatError(
            f"unsupported store version {doc.get('format_version')!r}, expected {STORE_VERSION}"
        )
    if doc.get("columns") != list(CANONICAL_COLUMNS):
        raise StoreFormatError(f"unexpected columns {doc.get('columns')!r}")
    symbol, rows = doc.get("symbol"), doc.get("rows")
    if not isinstance(symbol, str) or not isinstance(rows, list):
        raise StoreFormatError("store is missing symbol or rows")
    if doc.get("sha256") != _checksum(symbol, rows):
        raise StoreFormatError("store checksum mismatch")
    try:
        quotes = [DailyQuote(dt.date.fromisoformat(r[0]), *(Decimal(x) for x in r[1:5])) for r in rows]
    except (TypeError, ValueError, IndexError, InvalidOperation) as e:
        raise StoreFormatError(f"bad store row: {e}") from None
    return QuoteSeries(symbol, quotes)


def atomic_write(path: str | os.PathLike, data: bytes | str) -> None:
    """Write via a temp file in the target directory, then rename over ``path``."""
    path = Path(path)
    if isinstance(data, str):
        data = data.encode("utf-8")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def save_store(series: QuoteSeries, path: str | os.PathLike) -> None:
    atomic_write(path, dump_store(series))


def load_store(path: str | os.PathLike) -> QuoteSeries:
    with open(path, "rb") as f:
        return loads_store(f.read())
