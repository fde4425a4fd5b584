"""Command-line interface emitting the numerical study as CSV/JSON data.

Subcommands: eval (point values), zeros (series estimates + refined zeros),
branch (continuation paths), grid (|dz/dt| over a (kappa-1, t) grid).  Every
file starts with a '#'-prefixed comment carrying the full configuration so a
figure can be regenerated from the artifact alone.  Numbers are serialized
with repr (shortest round-trip), so reloading is bit-exact.

Exit codes: 0 ok, 2 usage/domain error, 3 refinement failure, 4 partial
continuation or grid.  ANNULUS_ZEROS_THREADS caps grid concurrency (0 = auto).
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .cross import dirichlet_cross, neumann_cross, oblique_cross
from .errors import BracketError, ConvergenceError, DomainError
from .params import ProblemParams
from .series import (DIRICHLET, NEUMANN, OBLIQUE, exceptional_zero_series,
                     mcmahon_pq, mcmahon_zero)
from .zeros import (NewtonConfig, branch_derivative, continue_branch,
                    find_real_zeros, refine_zero)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFINE = 3
EXIT_PARTIAL = 4


def _fmt(x):
    return repr(float(x))


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w"), True


def _emit(cfg, fields, rows, comments=()):
    """Write rows as CSV or JSON with the config recorded for provenance."""
    out, close = _open_out(cfg.get("output"))
    try:
        if cfg.get("format") == "json":
            payload = {
                "config": cfg,
                "fields": list(fields),
                "rows": [[float(v) if isinstance(v, (int, float)) else v for v in r]
                         for r in rows],
                "comments": list(comments),
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            out.write("# config: " + json.dumps(cfg, sort_keys=True) + "\n")
            out.write(",".join(fields) + "\n")
            for r in rows:
                out.write(",".join(_fmt(v) if isinstance(v, float) else str(v)
                                   for v in r) + "\n")
            for c in comments:
                out.write(f"# {c}\n")
    finally:
        if close:
            out.close()


def _params_from_args(args):
    try:
        return ProblemParams(args.nu, args.kappa, getattr(args, "beta", 0.0))
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _run_config(args, extra):
    cfg = {"command": args.command, "nu": args.nu, "kappa": args.kappa}
    cfg.update(extra)
    cfg["format"] = getattr(args, "format", "csv")
    cfg["output"] = getattr(args, "output", None)
    return cfg


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def cmd_eval(args):
    z = complex(args.z_re, args.z_im)
    if z == 0:
        raise DomainError("--z-re/--z-im: z = 0 is outside the domain")
    p = _params_from_args(args)
    fn = {DIRICHLET: dirichlet_cross, NEUMANN: neumann_cross,
          OBLIQUE: oblique_cross}[args.kind]
    v = fn(p, z)
    print(f"{_fmt(v.real)} {_fmt(v.imag)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# zeros
# ---------------------------------------------------------------------------

def _series_estimate(kind, s, p):
    if s == 0:
        if kind == DIRICHLET:
            raise DomainError("the Dirichlet problem has no s = 0 zero")
        if p.nu <= 0:
            raise DomainError("the s = 0 (exceptional) zero requires --nu > 0")
        return complex(exceptional_zero_series(p))
    return complex(mcmahon_zero(s, p, mcmahon_pq(kind, p)))


def cmd_zeros(args):
    p = _params_from_args(args)
    cfg = _run_config(args, {"beta": args.beta, "kind": args.kind,
                             "s_list": list(args.s)})
    rows = []
    failed = False
    for s in args.s:
        est = _series_estimate(args.kind, s, p)
        try:
            if args.kind == OBLIQUE:
                z, res = refine_zero(p, est, scaled=(s == 0))
            else:
                # Dirichlet/Neumann zeros are real: locate on the real line
                base = ProblemParams(p.nu, p.kappa, 0.0)
                count = s + 1 if (args.kind == NEUMANN and p.nu > 0) else max(s, 1)
                idx = s if (args.kind == NEUMANN and p.nu > 0) else s - 1
                x = find_real_zeros(args.kind, base, count)[idx]
                fn = dirichlet_cross if args.kind == DIRICHLET else neumann_cross
                z = complex(x)
                res = abs(fn(base, z))
            rows.append([s, est.real, est.imag, z.real, z.imag, float(res)])
        except (ConvergenceError, BracketError):
            failed = True
            rows.append([s, est.real, est.imag, math.nan, math.nan, math.nan])
    _emit(cfg, ["s", "estimate_re", "estimate_im", "refined_re", "refined_im",
                "residual"], rows)
    return EXIT_REFINE if failed else EXIT_OK


# ---------------------------------------------------------------------------
# branch
# ---------------------------------------------------------------------------

def cmd_branch(args):
    if args.nu <= 0:
        raise DomainError("--nu: continuation needs nu > 0 "
                          "(the s = 0 exceptional branch and t = nu*beta require it)")
    _params_from_args(args)
    cfg = _run_config(args, {"s_list": list(args.s), "t_max": args.t_max})
    ncfg = NewtonConfig(step_init=args.step) if args.step else NewtonConfig()
    rows = []
    comments = []
    partial = False
    for s in args.s:
        b = continue_branch(s, args.nu, args.kappa, args.t_max, ncfg)
        for pt in b.path:
            rows.append([s, pt.t, pt.t / args.nu, pt.z.real, pt.z.imag,
                         pt.residual])
        comments.append(f"branch s={s} status={b.status}")
        if b.status != "completed":
            partial = True
    _emit(cfg, ["s", "t", "beta", "z_re", "z_im", "residual"], rows, comments)
    return EXIT_PARTIAL if partial else EXIT_OK


# ---------------------------------------------------------------------------
# grid
# ---------------------------------------------------------------------------

def _grid_workers():
    raw = os.environ.get("ANNULUS_ZEROS_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def cmd_grid(args):
    if args.nu <= 0:
        raise DomainError("--nu: continuation needs nu > 0")
    if args.k1_count < 2 or args.t_count < 2:
        raise DomainError("grid counts must be >= 2")
    if not (0 < args.k1_min < args.k1_max):
        raise DomainError("need 0 < --k1-min < --k1-max")
    cfg = _run_config(args, {
        "s": args.s, "k1_min": args.k1_min, "k1_max": args.k1_max,
        "k1_count": args.k1_count, "t_max": args.t_max, "t_count": args.t_count,
    })
    k1s = np.linspace(args.k1_min, args.k1_max, args.k1_count)
    tgrid = np.linspace(0.0, args.t_max, args.t_count)
    ncfg = NewtonConfig(step_init=args.step) if args.step else NewtonConfig()

    def column(k1):
        b = continue_branch(args.s, args.nu, 1.0 + k1, args.t_max, ncfg)
        if b.status != "completed":
            raise ConvergenceError(f"column kappa-1={k1} stopped: {b.status}")
        deriv = branch_derivative(b)
        ts = np.array([t for t, _ in deriv])
        ds = np.array([d for _, d in deriv])
        re = np.interp(tgrid, ts, np.abs(ds.real))
        im = np.interp(tgrid, ts, np.abs(ds.imag))
        return re, im

    results = {}
    failed = False
    with ThreadPoolExecutor(max_workers=_grid_workers()) as ex:
        futures = {ex.submit(column, k1): i for i, k1 in enumerate(k1s)}
        for fut, i in futures.items():
            try:
                results[i] = fut.result()
            except (ConvergenceError, BracketError, DomainError):
                failed = True
    rows = []
    for i, k1 in enumerate(k1s):
        if i not in results:
            continue
        re, im = results[i]
        for j, t in enumerate(tgrid):
            rows.append([float(k1), float(t), float(re[j]), float(im[j])])
    _emit(cfg, ["kappa_minus_1", "t", "abs_re_dzdt", "abs_im_dzdt"], rows)
    return EXIT_PARTIAL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(sp, beta=True):
    sp.add_argument("--nu", type=float, required=True, help="order (>= 0)")
    sp.add_argument("--kappa", type=float, required=True, help="radius ratio (> 1)")
    if beta:
        sp.add_argument("--beta", type=float, default=0.0,
                        help="oblique tangent (>= 0, default 0)")


def _add_output(sp):
    sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="annulus-zeros",
        description="Zeros of oblique-derivative Bessel cross-products on annuli")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate a cross-product at one point")
    _add_common(sp)
    sp.add_argument("--kind", choices=(DIRICHLET, NEUMANN, OBLIQUE),
                    default=OBLIQUE)
    sp.add_argument("--z-re", type=float, required=True)
    sp.add_argument("--z-im", type=float, default=0.0)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("zeros", help="series estimates and refined zeros")
    _add_common(sp)
    sp.add_argument("--kind", choices=(DIRICHLET, NEUMANN, OBLIQUE),
                    default=OBLIQUE)
    sp.add_argument("--s", type=int, nargs="+", required=True,
                    help="branch indices")
    _add_output(sp)
    sp.set_defaults(fn=cmd_zeros)

    sp = sub.add_parser("branch", help="continuation paths z_s(t), t = nu*beta")
    _add_common(sp, beta=False)
    sp.add_argument("--s", type=int, nargs="+", required=True)
    sp.add_argument("--t-max", type=float, required=True)
    sp.add_argument("--step", type=float, default=None,
                    help="initial continuation step in t")
    _add_output(sp)
    sp.set_defaults(fn=cmd_branch)

    sp = sub.add_parser("grid", help="|dz/dt| over a (kappa-1, t) grid")
    _add_common(sp, beta=False)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--k1-min", type=float, required=True)
    sp.add_argument("--k1-max", type=float, required=True)
    sp.add_argument("--k1-count", type=int, required=True)
    sp.add_argument("--t-max", type=float, required=True)
    sp.add_argument("--t-count", type=int, required=True)
    sp.add_argument("--step", type=float, default=None)
    _add_output(sp)
    sp.set_defaults(fn=cmd_grid)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
