#!/usr/bin/env python3
"""
records.py - Benchmark Rows, Step-Size Grids and the CSV Contract

Every measurement is one BenchRecord and one CSV line:

    scheme,order,cycles,arrangement,L,seed,t,h,cost_raw,cost_scaled,error,conj_alt

cost_raw is q/h, cost_scaled multiplies it by the stage cost factor (s-1)/s of the
arrangement. Floats are written with 17 significant digits and '.' decimals, so the
same run always produces the same bytes.
"""

import csv
import dataclasses
import io
import math
import os
from typing import IO, Iterable, List, Optional, Tuple

import numpy as np

from ..heisenberg.frobenius import adjust_step

CSV_HEADER = (
    "scheme",
    "order",
    "cycles",
    "arrangement",
    "L",
    "seed",
    "t",
    "h",
    "cost_raw",
    "cost_scaled",
    "error",
    "conj_alt",
)

DEFAULT_T = 10.0
DEFAULT_H_MIN = 5e-4
DEFAULT_H_MAX = 2.0
DEFAULT_POINTS_PER_DECADE = 24

THREADS_ENV = "TROTTERKIT_THREADS"


@dataclasses.dataclass(frozen=True)
class BenchRecord:
    """One (scheme, arrangement, h, t) error measurement."""

    scheme: str
    order: int
    cycles: int
    arrangement: str
    L: int
    seed: int
    t: float
    h: float
    cost_raw: float
    cost_scaled: float
    error: float
    conj_alt: bool

    def __post_init__(self):
        if self.cost_raw <= 0 or self.cost_scaled <= 0:
            raise ValueError(f"Cost must be positive, got {self.cost_raw}, {self.cost_scaled}")
        if not self.error >= 0:
            raise ValueError(f"Error must be non-negative, got {self.error}")

    def to_row(self) -> List[str]:
        return [
            self.scheme,
            str(self.order),
            str(self.cycles),
            self.arrangement,
            str(self.L),
            str(self.seed),
            format_float(self.t),
            format_float(self.h),
            format_float(self.cost_raw),
            format_float(self.cost_scaled),
            format_float(self.error),
            "1" if self.conj_alt else "0",
        ]

    @classmethod
    def from_row(cls, row: dict) -> "BenchRecord":
        try:
            return cls(
                scheme=row["scheme"],
                order=int(row["order"]),
                cycles=int(row["cycles"]),
                arrangement=row["arrangement"],
                L=int(row["L"]),
                seed=int(row["seed"]),
                t=float(row["t"]),
                h=float(row["h"]),
                cost_raw=float(row["cost_raw"]),
                cost_scaled=float(row["cost_scaled"]),
                error=float(row["error"]),
                conj_alt=row["conj_alt"] == "1",
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed benchmark row: {row!r}") from e


def format_float(x: float) -> str:
    return format(x, ".17g")


def write_records(records: Iterable[BenchRecord], stream: IO[str]) -> int:
    """Write header plus rows; returns the number of rows."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for record in records:
        writer.writerow(record.to_row())
        count += 1
    return count


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buffer = io.StringIO()
    write_records(records, buffer)
    return buffer.getvalue()


def read_records(stream: IO[str]) -> List[BenchRecord]:
    """
    Parse benchmark CSV.

    Raises:
        ValueError: If the header does not match CSV_HEADER or a row is malformed
    """
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(
            f"Unexpected CSV header {reader.fieldnames!r}; expected {','.join(CSV_HEADER)}"
        )
    return [BenchRecord.from_row(row) for row in reader]


def h_grid(
    t: float,
    h_min: float = DEFAULT_H_MIN,
    h_max: float = DEFAULT_H_MAX,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> List[Tuple[float, int]]:
    """
    Log-spaced step sizes adjusted so that t/h is an integer.

    Points that round to the same step count are kept once.

    Returns:
        (h, steps) pairs sorted by increasing h

    Raises:
        ValueError: For a non-positive or inverted range or points_per_decade < 1
    """
    if not 0 < h_min <= h_max:
        raise ValueError(f"Invalid h range [{h_min}, {h_max}]")
    if points_per_decade < 1:
        raise ValueError(f"points_per_decade must be positive, got {points_per_decade}")
    decades = math.log10(h_max / h_min)
    num = max(1, int(round(decades * points_per_decade))) + 1
    seen = {}
    for h in np.logspace(math.log10(h_min), math.log10(h_max), num=num):
        adjusted, steps = adjust_step(t, float(h))
        seen.setdefault(steps, adjusted)
    return sorted(((h, steps) for steps, h in seen.items()), key=lambda p: p[0])


def parse_float_list(text: str) -> List[float]:
    """'1,2.5,10' -> [1.0, 2.5, 10.0]."""
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise ValueError(f"Invalid number list {text!r}") from e
    if not values:
        raise ValueError("Empty number list")
    return values


def resolve_workers(workers: Optional[int] = None) -> int:
    """
    Worker pool size: explicit value, else TROTTERKIT_THREADS, else os.cpu_count().

    Raises:
        ValueError: If the value is not a positive integer
    """
    source = "--workers"
    if workers is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None or raw.strip() == "":
            return os.cpu_count() or 1
        source = THREADS_ENV
        try:
            workers = int(raw)
        except ValueError as e:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from e
    if workers < 1:
        raise ValueError(f"{source} must be a positive integer, got {workers}")
    return workers
