#!/usr/bin/env python3
"""
Test suite for benchmark records and grids.

Test Coverage:
--------------
1. BenchRecord validation and row formatting
2. CSV writing and reading (header contract)
3. Log-spaced step-size grids adjusted to integer step counts
4. Number lists and worker counts from flags and environment
5. Edge cases and error handling

"""

import os
import unittest
from io import StringIO
from unittest.mock import patch

from trotterkit.bench.records import (
    CSV_HEADER,
    DEFAULT_T,
    THREADS_ENV,
    BenchRecord,
    format_float,
    h_grid,
    parse_float_list,
    read_records,
    records_to_csv,
    resolve_workers,
    write_records,
)


def make_record(**overrides):
    fields = dict(
        scheme="verlet",
        order=2,
        cycles=1,
        arrangement="s2",
        L=6,
        seed=20221006,
        t=10.0,
        h=0.1,
        cost_raw=10.0,
        cost_scaled=5.0,
        error=1.25e-3,
        conj_alt=False,
    )
    fields.update(overrides)
    return BenchRecord(**fields)


class TestBenchRecord(unittest.TestCase):
    """Test record validation and formatting."""

    def test_row(self):
        row = make_record(h=1 / 3, conj_alt=True).to_row()
        self.assertEqual(len(row), len(CSV_HEADER))
        self.assertEqual(row[0], "verlet")
        self.assertEqual(row[7], "0.33333333333333331")
        self.assertEqual(row[-1], "1")

    def test_format_float(self):
        self.assertEqual(format_float(10.0), "10")
        self.assertEqual(format_float(0.1), "0.10000000000000001")

    def test_non_positive_cost(self):
        with self.assertRaises(ValueError):
            make_record(cost_raw=0.0)

    def test_negative_error(self):
        with self.assertRaises(ValueError):
            make_record(error=-1.0)

    def test_nan_error(self):
        with self.assertRaises(ValueError):
            make_record(error=float("nan"))


class TestCsv(unittest.TestCase):
    """Test the CSV contract."""

    def test_header_line(self):
        text = records_to_csv([])
        self.assertEqual(
            text, "scheme,order,cycles,arrangement,L,seed,t,h,cost_raw,cost_scaled,error,conj_alt\n"
        )

    def test_write_and_read(self):
        records = [make_record(), make_record(scheme="non-unitary-q4", order=4, conj_alt=True)]
        buffer = StringIO()
        self.assertEqual(write_records(records, buffer), 2)
        buffer.seek(0)
        self.assertEqual(read_records(buffer), records)

    def test_unix_line_endings(self):
        self.assertNotIn("\r", records_to_csv([make_record()]))

    def test_bad_header(self):
        with self.assertRaises(ValueError) as ctx:
            read_records(StringIO("scheme,order\nverlet,2\n"))
        self.assertIn("Unexpected CSV header", str(ctx.exception))

    def test_malformed_row(self):
        text = records_to_csv([make_record()]).replace("verlet,2", "verlet,x")
        with self.assertRaises(ValueError):
            read_records(StringIO(text))


class TestStepGrid(unittest.TestCase):
    """Test log-spaced step sizes."""

    def test_integer_steps(self):
        for h, steps in h_grid(10.0):
            self.assertEqual(h, 10.0 / steps)

    def test_sorted_and_unique(self):
        grid = h_grid(10.0)
        hs = [h for h, _ in grid]
        self.assertEqual(hs, sorted(hs))
        self.assertEqual(len({steps for _, steps in grid}), len(grid))

    def test_range(self):
        grid = h_grid(10.0, 5e-4, 2.0)
        self.assertEqual(grid[-1], (2.0, 5))
        self.assertEqual(grid[0][1], 20000)

    def test_range_up_to_t(self):
        """h_max = t ends the grid at a single step, where every unitary scheme plateaus."""
        grid = h_grid(DEFAULT_T, h_max=DEFAULT_T)
        self.assertEqual(grid[-1], (DEFAULT_T, 1))
        self.assertEqual(grid[0][1], 20000)

    def test_coarse_end_deduplicated(self):
        """At t=1 the largest steps all round to one step."""
        grid = h_grid(1.0, 0.1, 10.0, points_per_decade=4)
        self.assertEqual(grid[-1], (1.0, 1))
        self.assertEqual(sum(1 for _, steps in grid if steps == 1), 1)

    def test_invalid_range(self):
        with self.assertRaises(ValueError):
            h_grid(10.0, 1.0, 0.1)
        with self.assertRaises(ValueError):
            h_grid(10.0, 0.0, 1.0)
        with self.assertRaises(ValueError):
            h_grid(10.0, 0.1, 1.0, points_per_decade=0)


class TestParsing(unittest.TestCase):
    """Test number lists and worker counts."""

    def test_float_list(self):
        self.assertEqual(parse_float_list("1,2.5, 10"), [1.0, 2.5, 10.0])

    def test_float_list_invalid(self):
        with self.assertRaises(ValueError):
            parse_float_list("1,abc")
        with self.assertRaises(ValueError):
            parse_float_list(" , ")

    def test_explicit_workers(self):
        self.assertEqual(resolve_workers(3), 3)
        with self.assertRaises(ValueError):
            resolve_workers(0)

    def test_environment(self):
        with patch.dict(os.environ, {THREADS_ENV: "5"}):
            self.assertEqual(resolve_workers(), 5)
            self.assertEqual(resolve_workers(2), 2)

    def test_environment_invalid(self):
        with patch.dict(os.environ, {THREADS_ENV: "many"}):
            with self.assertRaises(ValueError) as ctx:
                resolve_workers()
            self.assertIn(THREADS_ENV, str(ctx.exception))

    def test_cpu_count_default(self):
        with patch.dict(os.environ, {THREADS_ENV: ""}):
            with patch("os.cpu_count", return_value=7):
                self.assertEqual(resolve_workers(), 7)


if __name__ == "__main__":
    unittest.main()
