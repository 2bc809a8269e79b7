"""Command line front end: root tables, spectra, figure data, validation runs.

Subcommands:
    roots      truncation-root table for one polynomial order
    spectrum   variational eigenvalues at fixed parameters
    figure     sweep a parameter, emit curve/point CSV files and an SVG
    validate   run the cross-route checks and report pass/fail records

CSV output is bit-stable across runs for identical inputs: 15 significant
digits, '.' decimal point, comma separator, LF line endings, one header row.
Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical
failure.  The only environment variable read is COULHARM_WORKERS (worker
count for grid sweeps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from . import validate as validate_mod
from ._svg import render_figure
from .frobenius import (CoefficientOverflow, QuadratureError, TruncationRootError,
                        truncation_W, truncation_roots)
from .model import DimensionlessParams, energy_from_W
from .ritz import CholeskyBreakdown, converged_spectrum


def _fmt(v) -> str:
    return f"{float(v):.15g}"


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _print_table(header, rows) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def _workers() -> int:
    raw = os.environ.get("COULHARM_WORKERS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise ValueError(f"COULHARM_WORKERS must be a positive integer, got {raw!r}")
        if n < 1:
            raise ValueError(f"COULHARM_WORKERS must be a positive integer, got {raw!r}")
        return n
    return min(8, os.cpu_count() or 1)


def _sweep_spectra(grid, make_params, count: int, tol: float, n_max: int):
    """Evaluate converged spectra over a grid with an order-preserving pool."""
    def one(x):
        return converged_spectrum(make_params(float(x)), count, tol=tol, n_max=n_max)
    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        return list(pool.map(one, grid))


def _need(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _pick(args_value, cfg: dict, key: str, builtin, cast):
    if args_value is not None:
        return args_value
    if key in cfg:
        return cast(cfg[key])
    return builtin


def cmd_roots(args, cfg) -> int:
    n = _need(_pick(args.n, cfg, "n", None, int), "--n")
    s = _need(_pick(args.s, cfg, "s", None, float), "--s")
    mode = _pick(args.mode, cfg, "mode", "a", str)
    if mode == "a":
        if args.fixed_a is not None:
            raise ValueError("--fixed-a applies to --mode b only; use --fixed-b")
        fixed = _pick(args.fixed_b, cfg, "fixed_b", 0.0, float)
    else:
        if args.fixed_b is not None:
            raise ValueError("--fixed-b applies to --mode a only; use --fixed-a")
        fixed = _pick(args.fixed_a, cfg, "fixed_a", 0.0, float)
    sols = truncation_roots(n, s, mode, fixed)
    header = ["i", "root", "W", "nodes"]
    rows = [[str(sol.i), _fmt(sol.root), _fmt(sol.W), str(sol.nodes)] for sol in sols]
    if args.output:
        _write_csv(args.output, header, rows)
        print(f"wrote {args.output}")
    else:
        _print_table(header, rows)
    return 0


def cmd_spectrum(args, cfg) -> int:
    s = _need(_pick(args.s, cfg, "s", None, float), "--s")
    a = _pick(args.a, cfg, "a", 0.0, float)
    b = _pick(args.b, cfg, "b", 0.0, float)
    count = _pick(args.count, cfg, "count", 6, int)
    tol = _pick(args.tol, cfg, "tol", 1e-9, float)
    n_max = _pick(args.n_max, cfg, "n_max", 64, int)
    if args.omega is None and (args.hbar is not None or args.k is not None):
        raise ValueError("--hbar/--k need --omega to define an energy scale")
    spec = converged_spectrum(DimensionlessParams(s=s, a=a, b=b), count,
                              tol=tol, n_max=n_max)
    if not spec.converged:
        print(f"warning: convergence target {tol:g} not reached at N={spec.N_used}",
              file=sys.stderr)
    header = ["nu", "W", "convergence"]
    rows = [[str(nu), _fmt(w), _fmt(d)]
            for nu, (w, d) in enumerate(zip(spec.eigenvalues, spec.convergence))]
    if args.omega is not None:
        hbar = args.hbar if args.hbar is not None else 1.0
        k = args.k if args.k is not None else 0.0
        header.append("E")
        for row, w in zip(rows, spec.eigenvalues):
            row.append(_fmt(energy_from_W(float(w), args.omega, hbar, k)))
    if args.output:
        _write_csv(args.output, header, rows)
        print(f"wrote {args.output}")
    else:
        _print_table(header, rows)
    return 0


def _figure_points(which: str, s: float, n_max: int):
    mode = "a" if which == "wb0" else "b"
    rows = []
    for n in range(n_max + 1):
        for sol in truncation_roots(n, s, mode, 0.0):
            rows.append((n, sol.i, sol.root, sol.W))
    return rows


def cmd_figure(args, cfg) -> int:
    which = _need(_pick(args.which, cfg, "which", None, str), "--which")
    s = _pick(args.s, cfg, "s", 0.0, float)
    nu_max = _pick(args.nu_max, cfg, "nu_max", 6, int)
    n_max = _pick(args.n_max, cfg, "n_max", 10 if which == "wb0" else 15, int)
    grid_min = _pick(args.grid_min, cfg, "grid_min", -12.0, float)
    grid_max = _pick(args.grid_max, cfg, "grid_max", 12.0, float)
    grid_points = _pick(args.grid_points, cfg, "grid_points", 481, int)
    tol = _pick(args.tol, cfg, "tol", 1e-9, float)
    allow = bool(_pick(args.allow_unconverged, cfg, "allow_unconverged", False, bool))
    if grid_points < 2 or not grid_max > grid_min:
        raise ValueError("grid needs at least two points and grid-max > grid-min")
    if nu_max < 0 or n_max < 0:
        raise ValueError("--nu-max and --n-max must be non-negative")

    stem = f"figure_{which}"
    out_curves = args.output_curves or f"{stem}_curves.csv"
    out_points = args.output_points or f"{stem}_points.csv"
    out_svg = args.output_svg or f"{stem}.svg"

    grid = np.linspace(grid_min, grid_max, grid_points)
    count = nu_max + 1
    if which == "wb0":
        make = lambda x: DimensionlessParams(s=s, a=x, b=0.0)
        x_label = "a"
        title = f"Eigenvalue curves over a at b=0, s={s:g}"
    else:
        make = lambda x: DimensionlessParams(s=s, a=0.0, b=x)
        x_label = "b"
        title = f"Eigenvalue curves over b at a=0, s={s:g}"

    spectra = _sweep_spectra(grid, make, count, tol, n_max=96)
    W = np.array([sp.eigenvalues for sp in spectra])
    symmetric = np.allclose(grid, -grid[::-1], atol=1e-12 * max(1.0, abs(grid_max)))
    if symmetric:
        W_mirror = W[::-1]
        unconverged = [not sp.converged for sp in spectra]
    else:
        mirror_spectra = _sweep_spectra(-grid, make, count, tol, n_max=96)
        W_mirror = np.array([sp.eigenvalues for sp in mirror_spectra])
        unconverged = [not sp.converged for sp in spectra + mirror_spectra]
    if any(unconverged):
        bad = int(np.count_nonzero(unconverged))
        msg = f"{bad} grid point(s) did not reach the convergence target {tol:g}"
        if not allow:
            raise RuntimeError(msg + " (rerun with --allow-unconverged to emit anyway)")
        print(f"warning: {msg}", file=sys.stderr)

    points = _figure_points(which, s, n_max)
    w_line = truncation_W(n_max, s, 0.0)
    if which == "wb0":
        overlay = (np.array([grid[0], grid[-1]]), np.array([w_line, w_line]))
        overlay_label = f"truncation family n={n_max}: W = {w_line:g}"
    else:
        overlay = (grid, np.array([truncation_W(n_max, s, x) for x in grid]))
        overlay_label = f"truncation family n={n_max}: W = {w_line:g} - b^2/4"

    header = (["grid_value"] + [f"W_{nu}" for nu in range(count)]
              + [f"mirror_W_{nu}" for nu in range(count)])
    rows = [[_fmt(x)] + [_fmt(v) for v in W[k]] + [_fmt(v) for v in W_mirror[k]]
            for k, x in enumerate(grid)]
    _write_csv(out_curves, header, rows)
    _write_csv(out_points, ["n", "i", "root", "W"],
               [[str(n), str(i), _fmt(r), _fmt(w)] for n, i, r, w in points])

    visible = [w for _, _, r, w in points if grid_min <= r <= grid_max]
    pool = np.concatenate([W.ravel(), W_mirror.ravel(), overlay[1],
                           np.array(visible or [w_line])])
    pool = pool[np.isfinite(pool)]
    w_lo = args.w_min if args.w_min is not None else float(pool.min())
    w_hi = args.w_max if args.w_max is not None else float(pool.max())
    if not w_hi > w_lo:
        w_lo, w_hi = w_lo - 1.0, w_hi + 1.0
    pad = 0.04 * (w_hi - w_lo)
    if args.w_min is None:
        w_lo -= pad
    if args.w_max is None:
        w_hi += pad

    svg = render_figure(x_label, grid, list(W.T), list(W_mirror.T),
                        [(r, w) for _, _, r, w in points], overlay, overlay_label,
                        (w_lo, w_hi), title)
    with open(out_svg, "w", encoding="ascii", newline="") as fh:
        fh.write(svg)
    for path in (out_curves, out_points, out_svg):
        print(f"wrote {path}")
    return 0


def _record_line(rec: dict) -> str:
    status = "PASS" if rec["passed"] else "FAIL"
    ident = " ".join(f"{k}={v}" for k, v in rec.items()
                     if k not in ("check", "deviation", "tolerance", "passed"))
    return (f"{status} {rec['check']} {ident} "
            f"deviation={rec['deviation']:.3e} tolerance={rec['tolerance']:.1e}")


def cmd_validate(args, cfg) -> int:
    suite = _pick(args.suite, cfg, "suite", "all", str)
    s = _pick(args.s, cfg, "s", 0.0, float)
    tol_override = args.tolerance
    records = []

    def run_intersections(mode: str, n: int) -> None:
        fixed = _pick(args.fixed, cfg, "fixed", 0.0, float)
        reports = validate_mod.check_intersections(n, s, mode, fixed,
                                                   tolerance=tol_override)
        for rep in reports:
            records.append({"check": "intersections", "mode": rep.mode, "n": rep.n,
                            "i": rep.i, "root": rep.root,
                            "deviation": max(rep.abs_deviation, rep.mirror_abs_deviation),
                            "tolerance": rep.tolerance,
                            "converged": rep.converged,
                            "passed": rep.passed and rep.converged})

    def run_parabola(n: int) -> None:
        dev = validate_mod.check_parabola(n, s, 0.0)
        tol = tol_override if tol_override is not None else 1e-10
        records.append({"check": "parabola", "n": n, "s": s, "deviation": dev,
                        "tolerance": tol, "passed": dev <= tol})

    def run_hft() -> None:
        a = _pick(args.a, cfg, "a", 1.0, float)
        b = _pick(args.b, cfg, "b", 0.5, float)
        nu = _pick(args.nu, cfg, "nu", 0, int)
        delta = _pick(args.delta, cfg, "delta", 1e-3, float)
        chk = validate_mod.check_hellmann_feynman(
            DimensionlessParams(s=s, a=a, b=b), nu, delta)
        rel_a = abs(chk.fd_a - chk.exp_a) / abs(chk.exp_a)
        rel_b = abs(chk.fd_b - chk.exp_b) / abs(chk.exp_b)
        tol = tol_override if tol_override is not None else 1e-4
        positive = min(chk.fd_a, chk.exp_a, chk.fd_b, chk.exp_b) > 0.0
        records.append({"check": "hft", "s": s, "a": a, "b": b, "nu": nu,
                        "deviation": max(rel_a, rel_b), "tolerance": tol,
                        "converged": chk.converged, "positive": positive,
                        "passed": max(rel_a, rel_b) <= tol and positive and chk.converged})

    def run_continuity() -> None:
        mode = _pick(args.mode, cfg, "mode", "a", str)
        fixed = _pick(args.fixed, cfg, "fixed", 0.0, float)
        lo = _pick(args.grid_min, cfg, "grid_min", -6.0, float)
        hi = _pick(args.grid_max, cfg, "grid_max", 6.0, float)
        npts = _pick(args.grid_points, cfg, "grid_points", 25, int)
        nu_max = _pick(args.nu_max, cfg, "nu_max", 3, int)
        rep = validate_mod.check_continuity(s, mode, np.linspace(lo, hi, npts),
                                            nu_max, fixed)
        tol = tol_override if tol_override is not None else 2.0
        records.append({"check": "continuity", "mode": mode, "s": s,
                        "nu_max": nu_max, "deviation": rep.max_ratio,
                        "tolerance": tol, "converged": rep.all_converged,
                        "passed": rep.max_ratio <= tol})

    if suite in ("intersections", "all"):
        mode = _pick(args.mode, cfg, "mode", "a", str)
        if suite == "all":
            n = _pick(args.n, cfg, "n", 4, int)
            run_intersections("a", n)
            run_intersections("b", n)
        else:
            n = _need(_pick(args.n, cfg, "n", None, int), "--n")
            run_intersections(mode, n)
    if suite in ("parabola", "all"):
        run_parabola(_pick(args.n, cfg, "n", 15, int))
    if suite in ("hft", "all"):
        run_hft()
    if suite in ("continuity", "all"):
        run_continuity()

    for rec in records:
        print(_record_line(rec))
    all_passed = all(rec["passed"] for rec in records)
    if args.report:
        payload = {"suite": suite, "records": records, "all_passed": all_passed}
        with open(args.report, "w", encoding="ascii", newline="") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.report}")
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coulharm",
        description="Truncation roots and variational spectra of the radial "
                    "oscillator with inverse-square, Coulomb and linear terms.")
    parser.add_argument("--config", metavar="PATH",
                        help="TOML config file; flags override config values, "
                             "config values override built-in defaults")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("roots", help="truncation-root table for one order n")
    p.add_argument("--n", type=int, help="polynomial order (required)")
    p.add_argument("--s", type=float, help="angular strength s >= 0 (required)")
    p.add_argument("--mode", choices=("a", "b"), help="swept parameter (default: a)")
    p.add_argument("--fixed-a", type=float, dest="fixed_a",
                   help="held a value for --mode b (default: 0)")
    p.add_argument("--fixed-b", type=float, dest="fixed_b",
                   help="held b value for --mode a (default: 0)")
    p.add_argument("--output", metavar="PATH", help="write CSV instead of a table")
    p.set_defaults(func=cmd_roots, section="roots")

    p = sub.add_parser("spectrum", help="variational eigenvalues at fixed parameters")
    p.add_argument("--s", type=float, help="angular strength s >= 0 (required)")
    p.add_argument("--a", type=float, help="Coulomb coefficient (default: 0)")
    p.add_argument("--b", type=float, help="linear coefficient (default: 0)")
    p.add_argument("--count", type=int, help="number of levels (default: 6)")
    p.add_argument("--tol", type=float, help="convergence target (default: 1e-9)")
    p.add_argument("--n-max", type=int, dest="n_max",
                   help="largest basis size (default: 64)")
    p.add_argument("--omega", type=float, help="oscillator frequency for an E column")
    p.add_argument("--hbar", type=float, help="Planck constant (default: 1)")
    p.add_argument("--k", type=float, help="axial wavenumber (default: 0)")
    p.add_argument("--output", metavar="PATH", help="write CSV instead of a table")
    p.set_defaults(func=cmd_spectrum, section="spectrum")

    p = sub.add_parser("figure", help="curve/point CSV files and an SVG figure")
    p.add_argument("--which", choices=("wb0", "wa0"),
                   help="wb0 sweeps a at b=0, wa0 sweeps b at a=0 (required)")
    p.add_argument("--s", type=float, help="angular strength (default: 0)")
    p.add_argument("--nu-max", type=int, dest="nu_max",
                   help="highest plotted level (default: 6)")
    p.add_argument("--n-max", type=int, dest="n_max",
                   help="largest truncation family (default: 10 for wb0, 15 for wa0)")
    p.add_argument("--grid-min", type=float, dest="grid_min",
                   help="grid start (default: -12)")
    p.add_argument("--grid-max", type=float, dest="grid_max",
                   help="grid end (default: 12)")
    p.add_argument("--grid-points", type=int, dest="grid_points",
                   help="grid size (default: 481)")
    p.add_argument("--tol", type=float, help="convergence target (default: 1e-9)")
    p.add_argument("--w-min", type=float, dest="w_min", help="lower W axis limit")
    p.add_argument("--w-max", type=float, dest="w_max", help="upper W axis limit")
    p.add_argument("--allow-unconverged", action="store_true", default=None,
                   dest="allow_unconverged",
                   help="emit output even when some grid points miss the target")
    p.add_argument("--output-curves", metavar="PATH", dest="output_curves",
                   help="curves CSV path (default: figure_<which>_curves.csv)")
    p.add_argument("--output-points", metavar="PATH", dest="output_points",
                   help="points CSV path (default: figure_<which>_points.csv)")
    p.add_argument("--output-svg", metavar="PATH", dest="output_svg",
                   help="SVG path (default: figure_<which>.svg)")
    p.set_defaults(func=cmd_figure, section="figure")

    p = sub.add_parser("validate", help="run cross-route checks, report records")
    p.add_argument("--suite", choices=("all", "hft", "intersections", "parabola",
                                       "continuity"),
                   help="which checks to run (default: all)")
    p.add_argument("--s", type=float, help="angular strength (default: 0)")
    p.add_argument("--n", type=int,
                   help="order for intersections/parabola (defaults: 4 in "
                        "--suite all, 15 for parabola alone)")
    p.add_argument("--mode", choices=("a", "b"), help="swept parameter (default: a)")
    p.add_argument("--fixed", type=float, help="held other parameter (default: 0)")
    p.add_argument("--a", type=float, help="hft: Coulomb coefficient (default: 1)")
    p.add_argument("--b", type=float, help="hft: linear coefficient (default: 0.5)")
    p.add_argument("--nu", type=int, help="hft: level index (default: 0)")
    p.add_argument("--delta", type=float,
                   help="hft: finite-difference step (default: 1e-3)")
    p.add_argument("--tolerance", type=float,
                   help="pass threshold override for the selected suite")
    p.add_argument("--grid-min", type=float, dest="grid_min",
                   help="continuity grid start (default: -6)")
    p.add_argument("--grid-max", type=float, dest="grid_max",
                   help="continuity grid end (default: 6)")
    p.add_argument("--grid-points", type=int, dest="grid_points",
                   help="continuity grid size (default: 25)")
    p.add_argument("--nu-max", type=int, dest="nu_max",
                   help="continuity: highest level (default: 3)")
    p.add_argument("--report", metavar="PATH", help="write a JSON report")
    p.set_defaults(func=cmd_validate, section="validate")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "func", None) is None:
        parser.print_help()
        return 2
    try:
        cfg = {}
        if args.config:
            with open(args.config, "rb") as fh:
                cfg = tomllib.load(fh).get(args.section, {})
        return args.func(args, cfg)
    except (TruncationRootError, CoefficientOverflow, QuadratureError,
            CholeskyBreakdown, RuntimeError, np.linalg.LinAlgError,
            OverflowError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
