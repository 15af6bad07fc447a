#!/usr/bin/env python3
"""
bench_cli.py - Splitting Scheme Catalog, Analysis and Benchmark Harness

Query the scheme catalog, compute BCH error coefficients and efficiencies, convert
schemes to multi-stage coefficients, and run the two Heisenberg-chain experiments:
error against cost at fixed t (bench-cost) and error per unit time against t at
matched cost (bench-time). Benchmarks write CSV (see trotterkit.bench.records).

COMMAND-LINE USAGE
==================

Catalog and analysis:

    trotterkit list-schemes
    trotterkit list-schemes --order 4 --unitary
    trotterkit efficiency forest-ruth
    trotterkit convert omelyan-2 --export omelyan-2.json
    trotterkit convert my-scheme.json

Error against cost at t=10 (L=6, XZ model, two stages):

    trotterkit bench-cost --schemes verlet,forest-ruth,blanes-moan-4 -o cost.csv
    trotterkit bench-cost --model xxz --arrangement s3l --schemes all,taylor -o cost.csv -v
    trotterkit slopes cost.csv

Error per unit time at matched cost:

    trotterkit bench-time --schemes blanes-moan-4,optimised-4 --matched-cost 60 \\
        --t-grid 1,2,5,10,20,50 -o time.csv

Taylor propagator check:

    trotterkit taylor --model xxz --t 10

ENVIRONMENT
===========

    TROTTERKIT_THREADS   Worker threads for benchmark grids (default: CPU count;
                         --workers overrides it)

EXIT CODES
==========

    0    success
    1    internal numerical failure
    2    usage or validation error
    130  interrupted
"""

import argparse
import dataclasses
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..bch.error_terms import (
    DEFAULT_DEGREE,
    NumericalFailure,
    certify_order,
    efficiency,
    efficiency_from_coefficients,
    error_coefficients,
)
from ..heisenberg.frobenius import (
    adjust_step,
    asymptotic_window,
    fit_loglog_slope,
    frobenius_error,
    trotter_error,
)
from ..heisenberg.gates import Arrangement
from ..heisenberg.spin_chain import (
    DEFAULT_L,
    DEFAULT_SEED,
    SpinChainConfig,
    build_hamiltonian,
    exact_propagator,
    xxz_config,
    xz_config,
)
from ..schemes.scheme_catalog import (
    SCHEME_NAMES,
    SplittingScheme,
    get_scheme,
    list_schemes,
    reconstruct_two_stage,
    stage_cost_factor,
    to_stage_coefficients,
)
from ..schemes.scheme_file import resolve_scheme, save_scheme, scheme_from_json, scheme_to_json
from ..taylor.taylor_evolver import (
    MACHINE_EPSILON,
    TAYLOR_COST_CYCLES,
    make_plan,
    taylor_evolve,
    taylor_steps,
)
from .records import (
    DEFAULT_H_MAX,
    DEFAULT_H_MIN,
    DEFAULT_POINTS_PER_DECADE,
    DEFAULT_T,
    BenchRecord,
    h_grid,
    parse_float_list,
    read_records,
    resolve_workers,
    write_records,
)

logger = logging.getLogger(__name__)

TAYLOR = "taylor"
MODELS = ("xz", "xxz")

DEFAULT_T_GRID = "1,2,5,10,20,50,100"
DEFAULT_MATCHED_COST = 50.0

# Telescope reconstruction tolerance per coefficient
TELESCOPE_TOLERANCE = 1e-13


def log_progress(message, verbose=False):
    """
    Log progress message to stderr if verbose is enabled.

    Args:
        message: Message to log
        verbose: Whether to output the message
    """
    if verbose:
        print(message, file=sys.stderr)


def model_config(model: str, L: int = DEFAULT_L, seed: int = DEFAULT_SEED) -> SpinChainConfig:
    if model == "xz":
        return xz_config(L, seed)
    if model == "xxz":
        return xxz_config(L, seed)
    raise ValueError(f"Invalid model {model!r}; choose one of {', '.join(MODELS)}")


def parse_scheme_list(text: str) -> List[str]:
    """
    Comma-separated scheme identifiers; 'all' expands to the catalog, 'taylor' is kept.

    Raises:
        UnknownSchemeError: For an unregistered identifier
    """
    names: List[str] = []
    for item in (x.strip() for x in text.split(",")):
        if not item:
            continue
        expanded = list(SCHEME_NAMES) if item == "all" else [item]
        for name in expanded:
            if name != TAYLOR:
                get_scheme(name)
            if name not in names:
                names.append(name)
    if not names:
        raise ValueError("No schemes requested")
    return names


def parse_conjugate_flag(value: Optional[str]) -> Optional[bool]:
    if value is None:
        return None
    return value == "on"


def _fmt(x) -> str:
    return format(x, ".17g")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return _fmt(z.real)
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j"


# ---------------------------------------------------------------------------
# Catalog and analysis commands
# ---------------------------------------------------------------------------


def cmd_list_schemes(order: Optional[int] = None, unitary: Optional[bool] = None) -> int:
    """
    Print the catalog table with the computed efficiency; returns the number of rows.

    Orders 6 and above have no efficiency and show "-".
    """
    schemes = list_schemes(order=order, unitary=unitary)
    print(f"{'name':<22}{'n':>3}{'q':>6}  {'unitary':<8}{'Eff':>8}")
    for scheme in schemes:
        eff = f"{efficiency(scheme):.3g}" if scheme.order in (2, 4) else "-"
        unitary_flag = "yes" if scheme.unitary() else "no"
        print(f"{scheme.name:<22}{scheme.order:>3}{scheme.cycles:>6}  {unitary_flag:<8}{eff:>8}")
    return len(schemes)


def cmd_efficiency(name_or_path: str, degree: int = DEFAULT_DEGREE) -> Optional[float]:
    """
    Print error coefficients, projection residuals, order certificate and efficiency.

    Returns:
        Computed efficiency, or None for orders without an efficiency figure
    """
    scheme = resolve_scheme(name_or_path)
    coeffs = error_coefficients(scheme, degree)
    certificate = certify_order(scheme, degree)

    kind = "unitary" if scheme.unitary() else "non-unitary"
    print(f"scheme: {scheme.name} (order {scheme.order}, q={scheme.cycles}, {kind})")
    print(f"{'coefficient':<10}{'real':>26}{'imag':>26}{'|value|':>12}")
    for label, value in coeffs.rows():
        print(f"{label:<10}{_fmt(value.real):>26}{_fmt(value.imag):>26}{abs(value):>12.3e}")
    residuals = ", ".join(f"degree {d}: {r:.3e}" for d, r in sorted(coeffs.residuals.items()))
    print(f"residuals: {residuals}")

    parts = " ".join(f"{m:.1e}" for m in certificate.max_abs)
    status = "OK" if certificate.verified else "MISMATCH"
    print(f"max |coefficient| per degree 1..{degree}: {parts}")
    print(f"certified order: {certificate.certified_order} (claimed {scheme.order}) {status}")

    if scheme.order not in (2, 4):
        print(f"Eff: undefined for order {scheme.order} (defined for orders 2 and 4)")
        return None
    eff = efficiency_from_coefficients(coeffs, scheme.order, scheme.cycles)
    published = "" if scheme.published_eff is None else f" (published {scheme.published_eff:g})"
    print(f"Eff_{scheme.order} = {eff:.3g}{published}")
    return eff


def cmd_convert(name_or_path: str, export: Optional[str] = None) -> None:
    """
    Print the multi-stage coefficients and the JSON form of a scheme.

    Raises:
        NumericalFailure: If the telescope identities or the JSON round trip do not hold
    """
    scheme = resolve_scheme(name_or_path)
    stage = to_stage_coefficients(scheme)
    print(f"scheme: {scheme.name} (order {scheme.order}, q={scheme.cycles})")
    print("c = [" + ", ".join(_fmt_complex(x) for x in stage.c) + "]")
    print("d = [" + ", ".join(_fmt_complex(x) for x in stage.d) + "]")

    a, b = reconstruct_two_stage(stage)
    deviation = max(
        max(abs(x - y) for x, y in zip(a, scheme.a)), max(abs(x - y) for x, y in zip(b, scheme.b))
    )
    if deviation > TELESCOPE_TOLERANCE:
        raise NumericalFailure(f"Telescope identities violated by {deviation:.3e}")
    print(f"telescope identities: OK (max deviation {deviation:.1e})")

    text = scheme_to_json(scheme)
    echoed = scheme_from_json(text)
    if echoed.a != scheme.a or echoed.b != scheme.b:
        raise NumericalFailure("JSON round trip changed the coefficients")
    print("json round trip: OK")
    print(text, end="")

    if export:
        save_scheme(scheme, export)
        print(f"# Exported {scheme.name} to {export}", file=sys.stderr)


def cmd_taylor(
    model: str = "xxz",
    L: int = DEFAULT_L,
    seed: int = DEFAULT_SEED,
    t: float = DEFAULT_T,
    epsilon: float = MACHINE_EPSILON,
    verbose: bool = False,
) -> float:
    """Print the Taylor plan and its Frobenius error against exact diagonalisation."""
    config = model_config(model, L, seed)
    plan = make_plan(config, epsilon)
    steps = taylor_steps(t, plan)
    log_progress(f"[TAYLOR] {model} L={L} gamma={plan.gamma:.6g} k={plan.k} steps={steps}", verbose)

    exact = exact_propagator(build_hamiltonian(config), t)
    error = frobenius_error(exact, taylor_evolve(config, t, plan))
    print(f"model: {model} (L={L}, seed={seed})")
    print(f"gamma: {_fmt(plan.gamma)}")
    print(f"h: {_fmt(plan.h)}")
    print(f"k: {plan.k}")
    print(f"epsilon: {plan.epsilon:.6g}")
    print(f"steps: {steps} (h_used = {_fmt(t / steps)})")
    print(f"error: {error:.6e}")
    return error


# ---------------------------------------------------------------------------
# Benchmarks
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class GridTask:
    """One grid point of a benchmark; `rank` is the scheme's request position."""

    rank: int
    name: str
    scheme: Optional[SplittingScheme]
    h: float
    t: float
    per_time: bool
    conjugate: Optional[bool]


@dataclasses.dataclass(frozen=True)
class BenchSetup:
    config: SpinChainConfig
    arrangement: Arrangement
    cost_factor: float


def _prepare(model: str, arrangement: str, L: int, seed: int) -> BenchSetup:
    config = model_config(model, L, seed)
    layout = Arrangement.parse(arrangement)
    if layout.requires_xz() and model != "xz":
        raise ValueError(
            f"Arrangement {layout.value.upper()} is only valid for the xz model (got {model})"
        )
    layout.check_compatible(config)
    factor = float(stage_cost_factor(layout.num_stages(config.L)))
    return BenchSetup(config, layout, factor)


def _measure(setup: BenchSetup, task: GridTask, exact: np.ndarray, verbose: bool) -> BenchRecord:
    config = setup.config
    if task.scheme is None:
        plan = make_plan(config)
        approx = taylor_evolve(config, task.t, plan)
        error = frobenius_error(exact, approx)
        order, cycles, conj_alt = 0, TAYLOR_COST_CYCLES, False
    else:
        complex_scheme = not task.scheme.unitary()
        enabled = complex_scheme if task.conjugate is None else task.conjugate
        conj_alt = enabled and complex_scheme
        error = trotter_error(
            config, task.scheme, setup.arrangement, task.h, task.t, conj_alt, exact=exact
        )
        order, cycles = task.scheme.order, task.scheme.cycles

    cost_raw = cycles / task.h
    record = BenchRecord(
        scheme=task.name,
        order=order,
        cycles=cycles,
        arrangement=setup.arrangement.value,
        L=config.L,
        seed=config.seed,
        t=task.t,
        h=task.h,
        cost_raw=cost_raw,
        cost_scaled=cost_raw * setup.cost_factor,
        error=error / task.t if task.per_time else error,
        conj_alt=conj_alt,
    )
    log_progress(
        f"[BENCH] {task.name} t={task.t:g} h={task.h:.6g} cost={record.cost_scaled:.4g} "
        f"error={record.error:.3e}",
        verbose,
    )
    return record


def _run_grid(
    setup: BenchSetup, tasks: Sequence[GridTask], workers: Optional[int], verbose: bool
) -> List[BenchRecord]:
    max_workers = resolve_workers(workers)
    exact = {}
    for t in sorted({task.t for task in tasks}):
        exact[t] = exact_propagator(build_hamiltonian(setup.config), t)

    log_progress(f"[BENCH] {len(tasks)} grid points on {max_workers} worker(s)", verbose)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        records = list(
            executor.map(lambda task: _measure(setup, task, exact[task.t], verbose), tasks)
        )
    # Completion order is irrelevant; output order is (request order, t, h)
    ranked = sorted(zip(tasks, records), key=lambda p: (p[0].rank, p[0].t, p[0].h))
    return [record for _, record in ranked]


def bench_cost_records(
    model: str = "xz",
    arrangement: str = "s2",
    schemes: Sequence[str] = SCHEME_NAMES,
    t: float = DEFAULT_T,
    h_min: float = DEFAULT_H_MIN,
    h_max: float = DEFAULT_H_MAX,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
    L: int = DEFAULT_L,
    seed: int = DEFAULT_SEED,
    conjugate_alternating: Optional[bool] = None,
    workers: Optional[int] = None,
    verbose: bool = False,
) -> List[BenchRecord]:
    """
    Error against cost at fixed t: one record per (scheme, h) on the log-spaced grid.

    The Taylor pseudo-scheme contributes a single record at its planned step.
    """
    setup = _prepare(model, arrangement, L, seed)
    grid = h_grid(t, h_min, h_max, points_per_decade)
    tasks: List[GridTask] = []
    for rank, name in enumerate(schemes):
        if name == TAYLOR:
            h_taylor = t / taylor_steps(t, make_plan(setup.config))
            tasks.append(GridTask(rank, name, None, h_taylor, t, False, None))
            continue
        scheme = get_scheme(name)
        for h, _ in grid:
            tasks.append(GridTask(rank, name, scheme, h, t, False, conjugate_alternating))
    log_progress(
        f"[BENCH] bench-cost {model}/{setup.arrangement.value} t={t:g} "
        f"{len(grid)} step sizes x {len(schemes)} scheme(s)",
        verbose,
    )
    return _run_grid(setup, tasks, workers, verbose)


def bench_time_records(
    model: str = "xz",
    arrangement: str = "s2",
    schemes: Sequence[str] = SCHEME_NAMES,
    t_grid: Sequence[float] = tuple(parse_float_list(DEFAULT_T_GRID)),
    matched_cost: float = DEFAULT_MATCHED_COST,
    L: int = DEFAULT_L,
    seed: int = DEFAULT_SEED,
    conjugate_alternating: Optional[bool] = None,
    workers: Optional[int] = None,
    verbose: bool = False,
) -> List[BenchRecord]:
    """
    Error per unit time at matched cost: h = q * factor / matched_cost per scheme,
    adjusted to each t; the error column holds error / t.
    """
    if matched_cost <= 0:
        raise ValueError(f"--matched-cost must be positive, got {matched_cost}")
    if any(t <= 0 for t in t_grid):
        raise ValueError("Evolution times must be positive")
    setup = _prepare(model, arrangement, L, seed)
    tasks: List[GridTask] = []
    for rank, name in enumerate(schemes):
        for t in t_grid:
            if name == TAYLOR:
                h = t / taylor_steps(t, make_plan(setup.config))
                tasks.append(GridTask(rank, name, None, h, t, True, None))
                continue
            scheme = get_scheme(name)
            h, _ = adjust_step(t, scheme.cycles * setup.cost_factor / matched_cost)
            tasks.append(GridTask(rank, name, scheme, h, t, True, conjugate_alternating))
    log_progress(
        f"[BENCH] bench-time {model}/{setup.arrangement.value} matched cost {matched_cost:g} "
        f"{len(t_grid)} time(s) x {len(schemes)} scheme(s)",
        verbose,
    )
    return _run_grid(setup, tasks, workers, verbose)


def emit_records(records: Sequence[BenchRecord], out_path: str) -> int:
    """Write CSV to a file, or stdout when out_path is '-'."""
    if out_path == "-":
        return write_records(records, sys.stdout)
    with open(out_path, "w", encoding="utf-8", newline="") as f:
        return write_records(records, f)


def cmd_bench_cost(out_path: str = "-", verbose: bool = False, **options) -> int:
    """
    Error-vs-cost benchmark written as CSV.

    Args:
        out_path: Output file, or '-' for stdout
        **options: Keyword arguments of bench_cost_records

    Returns:
        Number of rows written
    """
    count = emit_records(bench_cost_records(verbose=verbose, **options), out_path)
    log_progress(f"[SUMMARY] Wrote {count} rows to {out_path}", verbose)
    return count


def cmd_bench_time(out_path: str = "-", verbose: bool = False, **options) -> int:
    """Error-per-time benchmark at matched cost written as CSV; see bench_time_records."""
    count = emit_records(bench_time_records(verbose=verbose, **options), out_path)
    log_progress(f"[SUMMARY] Wrote {count} rows to {out_path}", verbose)
    return count


def slope_table(
    records: Sequence[BenchRecord], floor: float = 1e-12, plateau: float = 1e-1
) -> List[Tuple[str, str, int, Optional[float]]]:
    """(scheme, arrangement, points in window, fitted slope or None) per group, in file order."""
    groups = {}
    for record in records:
        groups.setdefault((record.scheme, record.arrangement), []).append(record)
    table = []
    for (scheme, arrangement), rows in groups.items():
        cost = [r.cost_scaled for r in rows]
        error = [r.error for r in rows]
        window = asymptotic_window(cost, error, floor, plateau)
        slope = None
        if len(window) >= 2:
            slope = fit_loglog_slope([cost[i] for i in window], [error[i] for i in window])
        table.append((scheme, arrangement, len(window), slope))
    return table


def cmd_slopes(csv_path: str, floor: float = 1e-12, plateau: float = 1e-1) -> int:
    """Print fitted log-log slopes of error against scaled cost; returns the group count."""
    if csv_path == "-":
        records = read_records(sys.stdin)
    else:
        with open(csv_path, "r", encoding="utf-8", newline="") as f:
            records = read_records(f)
    table = slope_table(records, floor, plateau)
    print(f"{'scheme':<22}{'arrangement':<13}{'points':>7}{'slope':>9}")
    for scheme, arrangement, points, slope in table:
        shown = "n/a" if slope is None else f"{slope:.3f}"
        print(f"{scheme:<22}{arrangement:<13}{points:>7}{shown:>9}")
    return len(table)


# ---------------------------------------------------------------------------
# Command line
# ---------------------------------------------------------------------------


def _add_model_arguments(parser: argparse.ArgumentParser, default_model: str = "xz"):
    parser.add_argument(
        "--model",
        choices=MODELS,
        default=default_model,
        help=f"Chain model: xz (Jy=0) or xxz (Jx=Jy=Jz) (default: {default_model})",
    )
    parser.add_argument(
        "--L", type=int, default=DEFAULT_L, help=f"Number of sites (default: {DEFAULT_L})"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Seed of the random fields (default: {DEFAULT_SEED})",
    )


def _add_bench_arguments(parser: argparse.ArgumentParser):
    _add_model_arguments(parser)
    parser.add_argument(
        "--arrangement",
        choices=[a.value for a in Arrangement],
        default="s2",
        help="Stage arrangement; s2/s2l need the xz model (default: s2)",
    )
    parser.add_argument(
        "--schemes",
        default="all",
        help="Comma-separated scheme names, 'all' for the catalog, 'taylor' for the "
        "Taylor propagator (default: all)",
    )
    parser.add_argument(
        "--conjugate-alternating",
        choices=["on", "off"],
        default=None,
        help="Conjugate coefficients on every second step (default: on for complex schemes)",
    )
    parser.add_argument(
        "-o", "--out", default="-", help="Output CSV file, or - for stdout (default: stdout)"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker threads (default: $TROTTERKIT_THREADS or CPU count)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Print progress to stderr")
    common.add_argument(
        "-q", "--quiet", action="store_true", help="Suppress progress output (overrides -v)"
    )

    parser = argparse.ArgumentParser(
        prog="trotterkit",
        description="Splitting scheme catalog, BCH error analysis and Heisenberg-chain benchmarks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s list-schemes --order 4
  %(prog)s efficiency blanes-moan-4
  %(prog)s convert suzuki-4 --export suzuki-4.json

  # Error vs cost at t=10, written to cost.csv
  %(prog)s bench-cost --schemes verlet,forest-ruth -o cost.csv -v
  %(prog)s slopes cost.csv

  # Error per unit time at matched cost
  %(prog)s bench-time --schemes blanes-moan-4,optimised-4 --matched-cost 60 -o time.csv

  # Taylor propagator against exact diagonalisation
  %(prog)s taylor --model xxz --t 10
        """,
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    list_parser = subparsers.add_parser(
        "list-schemes", parents=[common], help="List the scheme catalog"
    )
    list_parser.add_argument("--order", type=int, default=None, help="Only schemes of this order")
    list_parser.add_argument(
        "--unitary", action="store_true", help="Only real-coefficient (unitary) schemes"
    )

    eff_parser = subparsers.add_parser(
        "efficiency",
        parents=[common],
        help="BCH error coefficients and efficiency of a scheme",
    )
    eff_parser.add_argument("scheme", help="Catalog name or scheme JSON file")
    eff_parser.add_argument(
        "--degree",
        type=int,
        default=DEFAULT_DEGREE,
        help=f"Truncation degree of the BCH expansion (default: {DEFAULT_DEGREE})",
    )

    convert_parser = subparsers.add_parser(
        "convert", parents=[common], help="Multi-stage coefficients c/d of a scheme"
    )
    convert_parser.add_argument("scheme", help="Catalog name or scheme JSON file")
    convert_parser.add_argument(
        "--export", default=None, help="Write the scheme JSON to this path (- for stdout)"
    )

    cost_parser = subparsers.add_parser(
        "bench-cost", parents=[common], help="Error against cost at fixed t"
    )
    _add_bench_arguments(cost_parser)
    cost_parser.add_argument(
        "--t", type=float, default=DEFAULT_T, help=f"Evolution time (default: {DEFAULT_T:g})"
    )
    cost_parser.add_argument(
        "--h-min",
        type=float,
        default=DEFAULT_H_MIN,
        help=f"Smallest step (default: {DEFAULT_H_MIN:g})",
    )
    cost_parser.add_argument(
        "--h-max",
        type=float,
        default=DEFAULT_H_MAX,
        help=f"Largest step (default: {DEFAULT_H_MAX:g}; use t to reach the plateau)",
    )
    cost_parser.add_argument(
        "--points-per-decade",
        type=int,
        default=DEFAULT_POINTS_PER_DECADE,
        help=f"Grid density (default: {DEFAULT_POINTS_PER_DECADE})",
    )

    time_parser = subparsers.add_parser(
        "bench-time", parents=[common], help="Error per unit time at matched cost"
    )
    _add_bench_arguments(time_parser)
    time_parser.add_argument(
        "--t-grid",
        default=DEFAULT_T_GRID,
        help=f"Comma-separated evolution times (default: {DEFAULT_T_GRID})",
    )
    time_parser.add_argument(
        "--matched-cost",
        type=float,
        default=DEFAULT_MATCHED_COST,
        help=f"Scaled cost q/h shared by all schemes (default: {DEFAULT_MATCHED_COST:g})",
    )

    taylor_parser = subparsers.add_parser(
        "taylor", parents=[common], help="Taylor propagator against exact diagonalisation"
    )
    _add_model_arguments(taylor_parser, default_model="xxz")
    taylor_parser.add_argument(
        "--t", type=float, default=DEFAULT_T, help=f"Evolution time (default: {DEFAULT_T:g})"
    )
    taylor_parser.add_argument(
        "--epsilon",
        type=float,
        default=MACHINE_EPSILON,
        help="Target precision per step (default: double machine epsilon)",
    )

    slopes_parser = subparsers.add_parser(
        "slopes", parents=[common], help="Fitted log-log slopes of a bench-cost CSV"
    )
    slopes_parser.add_argument("input", help="bench-cost CSV file, or - for stdin")
    slopes_parser.add_argument(
        "--floor", type=float, default=1e-12, help="Precision floor (default: 1e-12)"
    )
    slopes_parser.add_argument(
        "--plateau", type=float, default=1e-1, help="Plateau threshold (default: 0.1)"
    )

    return parser


def _dispatch(args, verbose: bool):
    if args.command == "list-schemes":
        cmd_list_schemes(order=args.order, unitary=True if args.unitary else None)
    elif args.command == "efficiency":
        cmd_efficiency(args.scheme, args.degree)
    elif args.command == "convert":
        cmd_convert(args.scheme, args.export)
    elif args.command in ("bench-cost", "bench-time"):
        shared = dict(
            model=args.model,
            arrangement=args.arrangement,
            schemes=parse_scheme_list(args.schemes),
            L=args.L,
            seed=args.seed,
            conjugate_alternating=parse_conjugate_flag(args.conjugate_alternating),
            workers=args.workers,
        )
        if args.command == "bench-cost":
            cmd_bench_cost(
                args.out,
                verbose,
                t=args.t,
                h_min=args.h_min,
                h_max=args.h_max,
                points_per_decade=args.points_per_decade,
                **shared,
            )
        else:
            cmd_bench_time(
                args.out,
                verbose,
                t_grid=parse_float_list(args.t_grid),
                matched_cost=args.matched_cost,
                **shared,
            )
    elif args.command == "taylor":
        cmd_taylor(args.model, args.L, args.seed, args.t, args.epsilon, verbose)
    elif args.command == "slopes":
        cmd_slopes(args.input, args.floor, args.plateau)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command-line interface."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        sys.exit(2)

    verbose = args.verbose and not args.quiet
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)

    try:
        _dispatch(args, verbose)
    except KeyboardInterrupt:
        print("\n# Interrupted by user", file=sys.stderr)
        sys.exit(130)
    except NumericalFailure as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    except (OSError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
