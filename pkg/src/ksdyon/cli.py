"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on usage or parameter errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import ksmap
from .errors import KSDyonError
from .spectra import COORDS, QuantumNumbersPar, spectrum
from .units import PhysicalContext
from .verify import SUITES, check_duality, reports_to_json, reports_to_table, run_suite
from .wavefunctions import (
    AngularState,
    HypersphericalState,
    ParabolicState,
    RadialState,
    assemble_psi_hyperspherical,
    assemble_psi_parabolic,
    normalize,
)

SPECTRUM_COLUMNS = ["epsilon", "N", "n", "k", "lambda", "p", "m", "m1", "m2", "degeneracy"]

EPILOG = """\
default tolerances:
  closed-form identities         1e-10 absolute (KS map 1e-12)
  eigensolver comparisons        1e-6 relative after Richardson extrapolation
                                 (monopole radial pipeline 1e-5)
  closed-form residuals          1e-6 normalized
  --tolerance replaces the eigensolver-comparison tolerance.
"""


class UsageError(Exception):
    pass


def _floats(text: str, count: int):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers") from exc
    if len(vals) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {len(vals)}")
    return vals


def _half_int(text: str) -> float:
    v = float(text)
    if 2 * v != round(2 * v):
        raise argparse.ArgumentTypeError("expected an integer or half-integer")
    return int(v) if v == int(v) else v


def _context(args) -> PhysicalContext:
    return PhysicalContext(M=args.mass, hbar=args.hbar, e2=args.coupling)


def _add_context(p):
    g = p.add_argument_group("physical context")
    g.add_argument("--mass", type=float, default=1.0, help="particle mass M (default 1)")
    g.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")
    g.add_argument("--coupling", type=float, default=1.0, help="charge product e^2 (default 1)")


def _add_output(p, default="table"):
    p.add_argument("--output", choices=("json", "csv", "table"), default=default)
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksdyon",
        description="Charge-dyon bound states through the Kustaanheimo-Stiefel map.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="energy levels at fixed m")
    sp.add_argument("--coords", choices=COORDS, default="hyperspherical")
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--depth", type=int, default=3, help="number of levels")
    sp.add_argument("--expand", action="store_true", help="one row per label tuple instead of per level")
    _add_context(sp)
    _add_output(sp)

    wp = sub.add_parser("wavefunction", help="sample a closed-form eigenfunction along a ray")
    wp.add_argument("--coords", choices=COORDS, default="hyperspherical")
    wp.add_argument("--n", type=int, default=0, help="radial nodes (hyperspherical)")
    wp.add_argument("--n-theta", type=int, default=0, help="angular nodes (hyperspherical)")
    wp.add_argument("--p", type=_half_int, default=0)
    wp.add_argument("--m", type=int, default=0)
    wp.add_argument("--m1", type=int, default=0, help="xi nodes (parabolic)")
    wp.add_argument("--m2", type=int, default=0, help="eta nodes (parabolic)")
    wp.add_argument("--theta", type=float, default=math.pi / 3, help="polar angle of the ray")
    wp.add_argument("--phi", type=float, default=0.0, help="azimuth (parabolic: in [0, 4 pi))")
    wp.add_argument("--gamma", type=float, default=0.0, help="fiber angle")
    wp.add_argument("--grid-points", type=int, default=101)
    wp.add_argument("--r-max", type=float, default=20.0)
    wp.add_argument("--normalize", action="store_true")
    _add_context(wp)
    _add_output(wp, default="csv")

    tp = sub.add_parser("transform", help="map points between R^4, R^3, spherical and parabolic charts")
    tp.add_argument("--ks", type=lambda s: _floats(s, 4), action="append", default=[], metavar="U0,U1,U2,U3")
    tp.add_argument("--cartesian", type=lambda s: _floats(s, 3), action="append", default=[], metavar="X0,X1,X2")
    tp.add_argument("--spherical", type=lambda s: _floats(s, 3), action="append", default=[],
                    metavar="R,THETA,PHI")
    tp.add_argument("--parabolic", type=lambda s: _floats(s, 3), action="append", default=[],
                    metavar="XI,ETA,PHI")
    tp.add_argument("--gamma", type=float, default=0.0, help="fiber angle for lifts to R^4")
    _add_output(tp, default="json")

    vp = sub.add_parser("verify", help="run the verification suite", epilog=EPILOG,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    vp.add_argument("--suite", default="all", choices=["all", *SUITES])
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--tolerance", type=float, default=None)
    vp.add_argument("--report", metavar="PATH", help="write the JSON report to PATH")
    vp.add_argument("--jobs", type=int, default=1, help="worker processes for independent groups")
    vp.add_argument("--timings", action="store_true", help="include per-check runtimes in JSON")
    _add_output(vp)

    dp = sub.add_parser("duality", help="oscillator/Coulomb duality check")
    g = dp.add_mutually_exclusive_group()
    g.add_argument("--energy", type=float, default=None, help="oscillator energy E (fixed)")
    g.add_argument("--omega", type=float, default=None, help="oscillator frequency (fixed)")
    dp.add_argument("--depth", type=int, default=4, help="largest oscillator level N")
    dp.add_argument("--tolerance", type=float, default=None)
    dp.add_argument("--mass", type=float, default=1.0)
    dp.add_argument("--hbar", type=float, default=1.0)
    dp.add_argument("--report", metavar="PATH")
    _add_output(dp)
    return parser


# ------------------------------------------------------------- emitters


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def _table(rows, columns) -> str:
    cells = [[_fmt(r.get(c)) if not isinstance(r.get(c), float) else f"{r[c]:.10g}" for c in columns]
             for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(rows, columns, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        return _csv(rows, columns)
    return _table(rows, columns)


# ------------------------------------------------------------ commands


def cmd_spectrum(args) -> int:
    ctx = _context(args)
    levels = spectrum(args.coords, args.m, args.depth, ctx)
    rows, seen = [], set()
    for lvl in levels:
        if not args.expand and lvl.extra["index"] in seen:
            continue
        seen.add(lvl.extra["index"])
        row = lvl.to_row()
        row["degeneracy"] = lvl.extra["degeneracy"]
        rows.append(row)
    columns = SPECTRUM_COLUMNS if args.expand or args.output != "table" else ["N", "epsilon", "degeneracy"]
    _emit(_render(rows, columns, args.output), args.out)
    return 0


def cmd_wavefunction(args) -> int:
    ctx = _context(args)
    if args.grid_points < 2 or not args.r_max > 0:
        raise UsageError("--grid-points must be >= 2 and --r-max positive")
    r = np.linspace(args.r_max / args.grid_points, args.r_max, args.grid_points)
    if args.coords == "hyperspherical":
        if float(args.p) != int(args.p):
            raise UsageError("hyperspherical p must be an integer")
        ang = AngularState(args.n_theta, int(args.p), args.m)
        state = HypersphericalState(RadialState.bound(args.n, ang.k, ctx), ang)
        if args.normalize:
            state, _ = normalize(state)
        psi = assemble_psi_hyperspherical(state, args.gamma, r, args.theta, args.phi)
        coords = {"r": r, "theta": np.full_like(r, args.theta), "phi": np.full_like(r, args.phi)}
    else:
        state = ParabolicState.bound(QuantumNumbersPar(args.p, args.m, args.m1, args.m2), ctx)
        if args.normalize:
            state, _ = normalize(state)
        xi, eta = r * (1 - math.cos(args.theta)), r * (1 + math.cos(args.theta))
        psi = assemble_psi_parabolic(state, args.gamma, xi, eta, args.phi)
        coords = {"xi": xi, "eta": eta, "phi": np.full_like(r, args.phi)}
    psi = np.broadcast_to(psi, r.shape)
    columns = list(coords) + ["gamma", "re", "im", "abs2"]
    rows = []
    for i in range(r.size):
        row = {k: float(v[i]) for k, v in coords.items()}
        row.update(gamma=float(args.gamma), re=float(psi[i].real), im=float(psi[i].imag),
                   abs2=float(abs(psi[i]) ** 2))
        rows.append(row)
    _emit(_render(rows, columns, args.output), args.out)
    return 0


TRANSFORM_COLUMNS = ["input", "u", "x", "gamma", "r", "theta", "phi", "xi", "eta", "phi_par", "error"]


def _transform_row(label, build):
    row = {"input": label}
    try:
        u, x, gamma = build()
        row["u"] = list(u) if u is not None else None
        row["x"] = list(x)
        row["gamma"] = gamma
        sph = ksmap.to_hyperspherical(x)
        row.update(r=sph.r, theta=sph.theta, phi=sph.phi)
        par = ksmap.to_parabolic(x)
        row.update(xi=par.xi, eta=par.eta, phi_par=par.phi)
    except KSDyonError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def cmd_transform(args) -> int:
    rows = []

    def from_x(x):
        u = ksmap.ks_inverse(x, args.gamma)
        return u, x, args.gamma

    for vals in args.ks:
        def build(vals=vals):
            p4 = ksmap.Point4(*vals)
            x, g = ksmap.ks_forward(p4)
            return p4, x, g.gamma
        rows.append(_transform_row("ks:" + ",".join(map(repr, vals)), build))
    for vals in args.cartesian:
        rows.append(_transform_row("cartesian:" + ",".join(map(repr, vals)),
                                   lambda vals=vals: from_x(ksmap.Point3(*vals))))
    for vals in args.spherical:
        rows.append(_transform_row("spherical:" + ",".join(map(repr, vals)),
                                   lambda vals=vals: from_x(ksmap.from_hyperspherical(ksmap.HypersphericalPoint(*vals)))))
    for vals in args.parabolic:
        rows.append(_transform_row("parabolic:" + ",".join(map(repr, vals)),
                                   lambda vals=vals: from_x(ksmap.from_parabolic(ksmap.ParabolicPoint(*vals)))))
    if not rows:
        raise UsageError("give at least one of --ks, --cartesian, --spherical, --parabolic")
    if args.output == "json":
        text = json.dumps([{k: v for k, v in r.items()} for r in rows], indent=2) + "\n"
    else:
        flat = [{k: (",".join(map(repr, v)) if isinstance(v, list) else v) for k, v in r.items()} for r in rows]
        text = _render(flat, TRANSFORM_COLUMNS, args.output)
    _emit(text, args.out)
    return 0


def _finish_reports(reports, args) -> int:
    if args.report:
        _emit(reports_to_json(reports, getattr(args, "timings", False)), args.report)
    if args.output == "json":
        text = reports_to_json(reports, getattr(args, "timings", False))
    elif args.output == "csv":
        rows = [r.to_dict() for r in reports]
        text = _csv(rows, ["check_name", "passed", "expected", "observed", "tolerance", "relative", "note"])
    else:
        text = reports_to_table(reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    reports = run_suite(args.suite, seed=args.seed, tolerance=args.tolerance, jobs=args.jobs)
    return _finish_reports(reports, args)


def cmd_duality(args) -> int:
    if args.energy is None and args.omega is None:
        args.energy = 4.0
    ctx = PhysicalContext(M=args.mass, hbar=args.hbar, omega=args.omega, E_osc=args.energy)
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    tol = {} if args.tolerance is None else {"tol_osc": args.tolerance}
    reports = check_duality(ctx, args.depth, **tol)
    return _finish_reports(reports, args)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "duality": cmd_duality,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, KSDyonError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"ksdyon {args.command}: error: {exc}", file=sys.stderr)
        return 2


__all__ = ["build_parser", "main"]

