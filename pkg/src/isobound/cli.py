"""Command-line front end: bound reports, table regeneration, verification suites.

Subcommands:

* ``vertex``    one vertex-expansion bound row (with the half-occupancy
                cross-check when u = 1/2)
* ``edge``      one edge-expansion bound row (always cross-checked against
                the explicit-equation form)
* ``table``     regenerate a full bound table as CSV/JSON, optionally
                comparing against a reference file
* ``verify``    run a named verification suite, machine-readable JSON report
* ``simulate``  sample pairings, project, and report exact per-sample
                isoperimetric ratios (informational; finite graphs need not
                obey the asymptotic bounds)

Exit codes: 0 success, 1 verification/comparison failure, 2 usage error.
Output is deterministic for identical flags and seed; table cells fan out
to a worker pool sized by the ISOBOUND_WORKERS environment variable and the
output order is fixed by sorting on (d, u) regardless of execution order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, exact, pairing, reference

__all__ = ["main"]

WORKERS_ENV = "ISOBOUND_WORKERS"

DEFAULT_TABLE_D = [3, 4, 5, 10, 25, 50, 100]
DEFAULT_TABLE_U = [0.01, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50]
DEFAULT_HALF_D = list(range(3, 36)) + [40, 50, 60, 70, 80, 90, 100]

ROW_FIELDS = ["d", "u", "bound", "method", "residual", "iterations", "reference", "delta"]


@dataclass(frozen=True)
class ReportRow:
    d: int
    u: float
    bound: float
    method: str
    residual: float
    iterations: int
    reference: float | None = None
    delta: float | None = None


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _map_cells(fn, items):
    items = list(items)
    workers = _workers()
    if workers <= 1 or len(items) < 4:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ROW_FIELDS)
    for row in rows:
        writer.writerow([_fmt(getattr(row, field)) for field in ROW_FIELDS])
    return buf.getvalue()


def _rows_to_json(rows: list[ReportRow]) -> str:
    payload = [{field: getattr(row, field) for field in ROW_FIELDS} for row in rows]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vertex_row(d: int, u: float, tol: float) -> ReportRow:
    q = bounds.BoundQuery(d, u, tol=tol)
    root = bounds.find_profile_zero(q)
    bound = bounds.profile_s(q, root.value) / u
    ref_value = delta = None
    if u == 0.5:
        ref_value = bounds.vertex_bound_half(d, tol)
        delta = bound - ref_value
    return ReportRow(d, u, bound, "vertex-profile-zero", root.residual, root.iterations, ref_value, delta)


def _edge_row(d: int, u: float, tol: float) -> ReportRow:
    q = bounds.BoundQuery(d, u, tol=tol)
    root = bounds.find_edge_profile_zero(q)
    bound = root.value / u
    ref_value = bounds.edge_bound_theorem_form(d, u, tol)
    return ReportRow(d, u, bound, "edge-profile-zero", root.residual, root.iterations, ref_value, bound - ref_value)


def _half_row(d: int, tol: float) -> ReportRow:
    root = bounds.find_half_occupancy_zero(d, tol)
    return ReportRow(d, 0.5, 2.0 * root.value, "half-occupancy-equation", root.residual, root.iterations)


def cmd_vertex(args, parser) -> int:
    _validate_du(parser, args.d, args.u)
    rows = [_vertex_row(args.d, args.u, args.tol)]
    _emit(_rows_to_csv(rows) if args.format == "csv" else _rows_to_json(rows), args.out)
    return 0


def cmd_edge(args, parser) -> int:
    _validate_du(parser, args.d, args.u)
    rows = [_edge_row(args.d, args.u, args.tol)]
    _emit(_rows_to_csv(rows) if args.format == "csv" else _rows_to_json(rows), args.out)
    return 0


def _validate_du(parser, d: int, u: float | None = None) -> None:
    if d < 3:
        parser.error(f"--d must be >= 3, got {d}")
    if u is not None and not (0.0 < u <= 0.5):
        parser.error(f"--u must lie in (0, 1/2], got {u}")


def cmd_table(args, parser) -> int:
    if args.table not in reference.TABLE_IDS:
        parser.error(f"unknown table {args.table!r}; choose from {sorted(reference.TABLE_IDS)}")
    ds = args.d if args.d else (DEFAULT_HALF_D if args.table == "vertex-half" else DEFAULT_TABLE_D)
    if not ds:
        parser.error("empty --d list")
    us = args.u if args.u else ([0.5] if args.table == "vertex-half" else DEFAULT_TABLE_U)
    if not us:
        parser.error("empty --u list")
    for d in ds:
        _validate_du(parser, d)
    for u in us:
        _validate_du(parser, ds[0], u)

    tol = args.tol
    if args.table == "vertex-half":
        cells = [(d, 0.5) for d in sorted(set(ds))]
        rows = _map_cells(lambda cell: _half_row(cell[0], tol), cells)
    elif args.table == "vertex-expansion":
        cells = sorted({(d, u) for d in ds for u in us})
        rows = _map_cells(lambda cell: _vertex_row(cell[0], cell[1], tol), cells)
    else:
        cells = sorted({(d, u) for d in ds for u in us})
        rows = _map_cells(lambda cell: _edge_row(cell[0], cell[1], tol), cells)
    rows.sort(key=lambda row: (row.d, row.u))

    failures = []
    if args.compare:
        table = reference.load_reference_path(args.compare)
        compared = []
        for row in rows:
            ref_value = table.get((row.d, row.u))
            delta = None if ref_value is None else row.bound - ref_value
            compared.append(
                ReportRow(row.d, row.u, row.bound, row.method, row.residual, row.iterations, ref_value, delta)
            )
            if ref_value is not None and abs(delta) > reference.compare_tolerance(ref_value):
                failures.append((row.d, row.u, row.bound, ref_value))
        rows = compared

    _emit(_rows_to_csv(rows) if args.format == "csv" else _rows_to_json(rows), args.out)
    if failures:
        for d, u, got, want in failures:
            print(f"MISMATCH d={d} u={u}: computed {got:.10g}, reference {want:.10g}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _suite_identities() -> list[dict]:
    checks = []
    worst_x = worst_s = worst_f = 0.0
    for d in range(3, 13):
        for i in range(1, 11):
            u = 0.05 * i
            q = bounds.BoundQuery(d, u)
            ym = bounds.profile_mode(q)
            worst_x = max(worst_x, abs(bounds.profile_x(q, ym) - u / (1.0 - u)))
            worst_s = max(worst_s, abs(bounds.profile_s(q, ym) - (1.0 - u) * (1.0 - (1.0 - u) ** d)))
            worst_f = max(worst_f, abs(bounds.profile_exponent(q, ym) - bounds.binary_entropy(u)))
    checks.append(_check("mode-tilt-identity", worst_x <= 1e-12, f"max |x(mode) - u/(1-u)| = {worst_x:.3e}"))
    checks.append(_check("mode-s-identity", worst_s <= 1e-12, f"max deviation = {worst_s:.3e}"))
    checks.append(_check("mode-rate-is-entropy", worst_f <= 1e-12, f"max deviation = {worst_f:.3e}"))

    worst = max(
        abs(bounds.vertex_bound(bounds.BoundQuery(d, 0.5)) - bounds.vertex_bound_half(d))
        for d in range(3, 21)
    )
    checks.append(_check("vertex-dual-consistency", worst <= 1e-9, f"max gap over d=3..20: {worst:.3e}"))

    worst = max(
        abs(bounds.edge_bound(bounds.BoundQuery(d, u)) - bounds.edge_bound_theorem_form(d, u))
        for d in DEFAULT_TABLE_D
        for u in DEFAULT_TABLE_U
    )
    checks.append(_check("edge-dual-consistency", worst <= 1e-9, f"max gap on the table grid: {worst:.3e}"))

    ok = True
    detail = "single increase-to-decrease flip, within one cell of the mode"
    for d, u in [(3, 0.5), (7, 0.25), (10, 0.4)]:
        q = bounds.BoundQuery(d, u)
        du = d * u
        ym = bounds.profile_mode(q)
        ys = [du * (k + 1) / 1002 for k in range(1000)]
        vals = [bounds.profile_exponent(q, y) for y in ys]
        diffs = [b - a for a, b in zip(vals, vals[1:])]
        flips = [i for i in range(1, len(diffs)) if (diffs[i - 1] > 0) != (diffs[i] > 0)]
        cell = ys[1] - ys[0]
        if len(flips) != 1 or abs(ys[flips[0]] - ym) > 1.5 * cell:
            ok = False
            detail = f"flips at {[ys[i] for i in flips]} vs mode {ym} (d={d}, u={u})"
    checks.append(_check("profile-unimodality", ok, detail))
    return checks


def _suite_scans() -> list[dict]:
    checks = []
    for d in (3, 4, 5, 10):
        rv = bounds.vertex_negativity_scan(d)
        checks.append(
            _check(f"vertex-negativity-d{d}", rv.passed, f"max {rv.max_value:.3e} at {rv.argmax}")
        )
        re_ = bounds.edge_negativity_scan(d)
        checks.append(
            _check(f"edge-negativity-d{d}", re_.passed, f"max {re_.max_value:.3e} at {re_.argmax}")
        )
    return checks


def _suite_expectation() -> list[dict]:
    checks = []
    vertex_means, edge_means = pairing.signature_means_by_enumeration(4, 3)
    mism_v = _enumeration_mismatches(4, 3, vertex_means, edge_means)
    checks.append(
        _check(
            "enumeration-oracle-n4-d3",
            not mism_v,
            f"{len(vertex_means)} vertex + {len(edge_means)} edge signatures, mismatches: {mism_v[:3]}",
        )
    )
    for un, sn, yn in [(6, 3, 4), (4, 2, 2)]:
        estimate = pairing.monte_carlo_expectation(12, 3, un, sn, yn, samples=20_000, seed=1_000 + un)
        target = float(exact.expected_vertex_count(12, 3, un, sn, yn).value)
        gap = abs(estimate.mean - target)
        checks.append(
            _check(
                f"monte-carlo-vertex-{un}-{sn}-{yn}",
                gap <= 4.0 * estimate.std_error,
                f"mean {estimate.mean:.4f} vs exact {target:.4f}, {gap / max(estimate.std_error, 1e-300):.2f} sigma",
            )
        )
    estimate = pairing.monte_carlo_expectation(12, 3, 5, None, 5, samples=20_000, seed=1_005)
    target = float(exact.expected_edge_count(12, 3, 5, 5).value)
    gap = abs(estimate.mean - target)
    checks.append(
        _check(
            "monte-carlo-edge-5-5",
            gap <= 4.0 * estimate.std_error,
            f"mean {estimate.mean:.4f} vs exact {target:.4f}, {gap / max(estimate.std_error, 1e-300):.2f} sigma",
        )
    )
    return checks


def _enumeration_mismatches(n, d, vertex_means, edge_means):
    mismatches = []
    for un in range(1, n + 1):
        for yn in range(0, d * un + 1):
            if (d * un - yn) % 2 or yn > d * (n - un):
                continue
            want = exact.expected_edge_count(n, d, un, yn).value
            if edge_means.get((un, yn), Fraction(0)) != want:
                mismatches.append(("edge", un, yn))
            for sn in range(0, n - un + 1):
                want = exact.expected_vertex_count(n, d, un, sn, yn).value
                if vertex_means.get((un, sn, yn), Fraction(0)) != want:
                    mismatches.append(("vertex", un, sn, yn))
    return mismatches


def _suite_coefficients() -> list[dict]:
    checks = []
    bad = [
        (d, sn)
        for d in range(1, 7)
        for sn in range(1, 31)
        if sum(exact.boundary_coefficient_row(d, sn)) != (2**d - 1) ** sn
    ]
    checks.append(_check("row-sums-exact", not bad, f"d <= 6, sn <= 30; failures: {bad[:3]}"))

    bad = []
    for d in range(2, 7):
        for sn in range(2, 31):
            row = exact.boundary_coefficient_row(d, sn)
            for k in range(sn + 1, d * sn):
                if row[k] * row[k] < row[k - 1] * row[k + 1]:
                    bad.append((d, sn, k))
    checks.append(_check("log-concavity-exact", not bad, f"d <= 6, sn <= 30; failures: {bad[:3]}"))

    holds = all(
        exact.coefficient_upper_bound_check(d, sn, yn, x)[1]
        for d in (3, 5)
        for sn in (1, 4, 9)
        for yn in range(0, d * 9 + 1, 3)
        for x in (0.25, 1.0, 4.0)
    )
    checks.append(_check("tilt-bound-dominates", holds, "sampled (d, sn, yn, x) grid"))

    ratios = exact.coefficient_asymptotics_check(3, Fraction(1, 10), Fraction(1, 5), [10, 50, 100, 200])
    increasing = all(b > a for a, b in zip(ratios, ratios[1:]))
    checks.append(
        _check(
            "tilt-bound-asymptotics",
            increasing and ratios[-1] >= 0.9 and all(r <= 1.0 for r in ratios),
            f"ratios {['%.4f' % r for r in ratios]}",
        )
    )
    return checks


def _suite_asymptotics() -> list[dict]:
    checks = []
    gaps = [d * (1.0 - bounds.vertex_bound_half(d)) for d in (25, 50, 100)]
    in_window = all(
        2.0 <= gap <= 2.0 + 10.0 * math.log(d) / d for gap, d in zip(gaps, (25, 50, 100))
    )
    decreasing = gaps[0] > gaps[1] > gaps[2]
    checks.append(
        _check(
            "vertex-half-gap-window",
            in_window and decreasing,
            f"d*(1 - bound) = {['%.4f' % g for g in gaps]}",
        )
    )
    gap = abs(bounds.edge_bound(bounds.BoundQuery(100, 0.5)) - bounds.edge_asymptote(100, 0.5))
    checks.append(_check("edge-asymptote-d100", gap <= 0.1, f"gap {gap:.4f}"))
    dominated = all(
        bounds.vertex_bound_half(d) > bounds.spectral_vertex_bound(d, 0.5) for d in (5, 10, 25, 50, 100)
    )
    checks.append(_check("beats-spectral-bound", dominated, "d in {5, 10, 25, 50, 100} at u = 1/2"))
    return checks


SUITES = {
    "identities": _suite_identities,
    "scans": _suite_scans,
    "expectation": _suite_expectation,
    "coefficients": _suite_coefficients,
    "asymptotics": _suite_asymptotics,
}


def cmd_verify(args, parser) -> int:
    if args.suite not in SUITES:
        parser.error(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    checks = SUITES[args.suite]()
    passed = all(check["passed"] for check in checks)
    report = {"suite": args.suite, "passed": passed, "checks": checks}
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# simulation


SIM_FIELDS = ["sample", "simple", "i_v", "i_e", "i_v_ref", "i_e_ref", "diameter_ub"]


def cmd_simulate(args, parser) -> int:
    if args.n < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    _validate_du(parser, args.d, args.u)
    if (args.n * args.d) % 2 != 0:
        parser.error(f"d*n = {args.n * args.d} must be even")
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    if args.n > pairing.SUBSET_SCAN_CAP_N:
        parser.error(f"--n exceeds the exhaustive-scan cap {pairing.SUBSET_SCAN_CAP_N}")
    q = bounds.BoundQuery(args.d, args.u, tol=args.tol)
    iv_ref = bounds.vertex_bound(q)
    ie_ref = bounds.edge_bound(q)
    rows = []
    simple_count = 0
    for index in range(args.samples):
        p = pairing.sample_pairing(args.n, args.d, pairing._sample_seed(args.seed, index))
        graph = pairing.project(p)
        simple_count += graph.simple
        iso = pairing.min_isoperimetric_exhaustive(graph, args.u)
        iv = iso.vertex_ratio
        diameter = (
            bounds.diameter_upper_bound(args.n, float(iv)) if iv > 0 else None
        )
        rows.append(
            {
                "sample": index,
                "simple": int(graph.simple),
                "i_v": f"{iv.numerator}/{iv.denominator}",
                "i_e": f"{iso.edge_ratio.numerator}/{iso.edge_ratio.denominator}",
                "i_v_ref": iv_ref,
                "i_e_ref": ie_ref,
                "diameter_ub": diameter,
            }
        )
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SIM_FIELDS)
        for row in rows:
            writer.writerow([_fmt(row[field]) for field in SIM_FIELDS])
        text = buf.getvalue()
    else:
        payload = {
            "rows": rows,
            "summary": {"samples": args.samples, "simplicity_rate": simple_count / args.samples},
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _emit(text, args.out)
    print(
        f"simplicity rate: {simple_count}/{args.samples} = {simple_count / args.samples:.4f}"
        " (informational; asymptotic bounds are not asserted on finite samples)",
        file=sys.stderr,
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isobound",
        description="Expansion lower bounds for random regular graphs, with exact verification tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_u=True):
        if with_u:
            p.add_argument("--d", type=int, required=True, help="degree (>= 3)")
            p.add_argument("--u", type=float, required=True, help="subset fraction in (0, 1/2]")
        p.add_argument("--tol", type=float, default=1e-12, help="root tolerance (default 1e-12)")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    p_vertex = sub.add_parser("vertex", help="vertex-expansion lower bound at (d, u)")
    common(p_vertex)
    p_edge = sub.add_parser("edge", help="edge-expansion lower bound at (d, u)")
    common(p_edge)

    p_table = sub.add_parser("table", help="regenerate a bound table")
    p_table.add_argument("--table", required=True, help="vertex-expansion | vertex-half | edge")
    p_table.add_argument("--d", type=_int_list, default=None, help="comma-separated degrees")
    p_table.add_argument("--u", type=_float_list, default=None, help="comma-separated fractions")
    p_table.add_argument("--compare", default=None, help="reference CSV; mismatched cells fail the run")
    common(p_table, with_u=False)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help=" | ".join(sorted(SUITES)))
    common(p_verify, with_u=False)

    p_sim = sub.add_parser("simulate", help="pairing-model simulation report")
    p_sim.add_argument("--n", type=int, required=True, help="number of vertices (cells)")
    p_sim.add_argument("--samples", type=int, default=100)
    p_sim.add_argument("--seed", type=int, default=0)
    common(p_sim)

    return parser


COMMANDS = {
    "vertex": cmd_vertex,
    "edge": cmd_edge,
    "table": cmd_table,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
