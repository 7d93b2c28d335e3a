"""Command-line surface: evaluation, scans, limits, optimization, threshold,
region maps, and the verification suite.  CSV/JSON goes to stdout or --out;
figures (optional) go to --plot.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import analysis, cohinfo, verify
from .entropy import LogBase

__all__ = ["main"]


def _fmt(x: float) -> str:
    """17 significant digits: enough to round-trip a double exactly."""
    if x is None:
        return ""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _base(args) -> LogBase:
    return LogBase.TWO if args.base == "bits" else LogBase.NATURAL


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    c = _base(args).factor
    sp = cohinfo.spectral_params(args.n, args.k, args.tau)
    lines = [
        f"G = {_fmt(c * cohinfo.coherent_info(args.n, args.k, args.tau))} {args.base}",
        f"eta = {_fmt(sp.eta)}",
        f"f = {_fmt(sp.f)}",
        f"ell = {_fmt(sp.ell)}",
        f"p = {_fmt(sp.p)}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _scan_rows(args):
    grid = np.logspace(math.log10(args.n_min), math.log10(args.n_max), args.points)
    return [
        (float(n),
         cohinfo.coherent_info(float(n), args.k, args.tau),
         cohinfo.dG_dN(float(n), args.k, args.tau))
        for n in grid
    ]


def cmd_scan(args) -> int:
    c = _base(args).factor
    rows = _scan_rows(args)
    lines = [f"# base={args.base}", "N,G,dGdN"]
    lines += [f"{_fmt(n)},{_fmt(c * v)},{_fmt(c * s)}" for n, v, s in rows]
    _emit("\n".join(lines) + "\n", args.out)
    if args.plot:
        from .plots import render_scan

        limit = c * cohinfo.limit_inf(args.k, args.tau)
        render_scan([(n, c * v, c * s) for n, v, s in rows], args.plot,
                    base_label=args.base, limit=limit)
    return 0


def cmd_limit(args) -> int:
    c = _base(args).factor
    _emit(f"{_fmt(c * cohinfo.limit_inf(args.k, args.tau))}\n", args.out)
    return 0


def cmd_sup(args) -> int:
    c = _base(args).factor
    value, attained = analysis.supremum(args.k, args.tau)
    where = "N=inf" if attained is analysis.Attained.INFINITE_N else "N=0"
    _emit(f"{_fmt(c * value)} @ {where}\n", args.out)
    return 0


def cmd_stationary(args) -> int:
    c = _base(args).factor
    rep = analysis.stationary_point(args.k, args.tau)
    lines = [f"exists = {str(rep.exists).lower()}", f"shape = {rep.shape.value}"]
    if rep.exists:
        lines += [f"n_star = {_fmt(rep.n_star)}", f"value = {_fmt(c * rep.value)}"]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_threshold(args) -> int:
    _emit(f"{_fmt(analysis.k_threshold(args.tau))}\n", args.out)
    return 0


def _thread_cap() -> int:
    """Worker-thread cap from OMG_COHINFO_THREADS (default 1: sequential)."""
    raw = os.environ.get("OMG_COHINFO_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"OMG_COHINFO_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"OMG_COHINFO_THREADS must be >= 1, got {cap}")
    return cap


def cmd_region_map(args) -> int:
    c = _base(args).factor
    cells = analysis.region_map(
        (args.tau_min, args.tau_max), (args.y_min, args.y_max), (args.res, args.res),
        workers=_thread_cap(),
    )
    lines = [f"# base={args.base}", "tau,y,K,label,limit"]
    for tau, y, lab in cells:
        k = "" if lab.label is analysis.Region.UNPHYSICAL else _fmt(
            0.5 * (y - abs(tau - 1.0))
        )
        lim = "" if lab.limit_value is None else _fmt(c * lab.limit_value)
        lines.append(f"{_fmt(tau)},{_fmt(y)},{k},{lab.label.value},{lim}")
    _emit("\n".join(lines) + "\n", args.out)
    if args.plot:
        from .plots import render_region_map

        render_region_map(cells, args.res, args.res, args.plot)
    return 0


def cmd_verify(args) -> int:
    report = verify.run_verification(samples=args.samples, seed=args.seed)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if report["passed"] else 1


def _add_common(p, base=True, out=True, plot=False):
    if base:
        p.add_argument("--base", choices=["nats", "bits"], default="nats",
                       help="log base for reported entropic values")
    if out:
        p.add_argument("--out", default=None, help="write output to this file")
    if plot:
        p.add_argument("--plot", default=None, metavar="FIG",
                       help="also render a figure to this path")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="omgci",
        description="Coherent information of phase-insensitive one-mode "
        "Gaussian channels with added classical noise.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="G and spectral parameters at one point")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--n", type=float, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("scan", help="CSV scan of G and dG/dN over a log grid")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--n-min", type=float, default=1e-6)
    p.add_argument("--n-max", type=float, default=1e6)
    p.add_argument("--points", type=int, default=400)
    _add_common(p, plot=True)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("limit", help="infinite-input-power value of G")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("sup", help="supremum of G over the input power")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_sup)

    p = sub.add_parser("stationary", help="stationary point and curve shape")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_stationary)

    p = sub.add_parser("threshold", help="noise threshold K_th(tau)")
    p.add_argument("--tau", type=float, required=True)
    _add_common(p, base=False)
    p.set_defaults(fn=cmd_threshold)

    p = sub.add_parser("region-map", help="CSV classification of the (tau, y) plane")
    p.add_argument("--tau-min", type=float, required=True)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--y-min", type=float, required=True)
    p.add_argument("--y-max", type=float, required=True)
    p.add_argument("--res", type=int, default=64)
    _add_common(p, plot=True)
    p.set_defaults(fn=cmd_region_map)

    p = sub.add_parser("verify", help="run the numerical verification suite")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    _add_common(p, base=False)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
