# Benchmark harness and command-line interface
from .bench_cli import (
    bench_cost_records,
    bench_time_records,
    cmd_bench_cost,
    cmd_bench_time,
    cmd_convert,
    cmd_efficiency,
    cmd_list_schemes,
    cmd_slopes,
    cmd_taylor,
    main,
    slope_table,
)
from .records import CSV_HEADER, BenchRecord, h_grid, read_records, resolve_workers, write_records

__all__ = [
    "BenchRecord",
    "CSV_HEADER",
    "bench_cost_records",
    "bench_time_records",
    "cmd_bench_cost",
    "cmd_bench_time",
    "cmd_convert",
    "cmd_efficiency",
    "cmd_list_schemes",
    "cmd_slopes",
    "cmd_taylor",
    "h_grid",
    "main",
    "read_records",
    "resolve_workers",
    "slope_table",
    "write_records",
]
