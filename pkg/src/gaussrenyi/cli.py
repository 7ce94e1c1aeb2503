"""Batch command line interface.

Subcommands
-----------
density      node table of the base density, expansion coefficients and
             the truncated density at the requested weight
digits       digit law table against the Gauss-Kuzmin law
convergence  order-of-accuracy study of the expansion against the
             discretized fixed density
bounds       contraction constants and admissible weight range per
             smoothness index
simulate     Monte Carlo digit frequencies

Output is CSV (default) or JSON with a provenance header that echoes
the full configuration, so identical invocations produce byte-identical
files.  Warnings go to stderr, never into the data stream.  Exit codes:
0 success, 1 invalid configuration, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

import numpy as np

from . import __version__
from .bounds import c_bound, eps_max, theta_bound
from .digits import digit_law, gauss_kuzmin, gauss_kuzmin_tail
from .maps import MapKind
from .perturbation import mixture_series, residual
from .simulate import SimConfig, simulate_digit_freq
from .transfer import TailPolicy, annealed, assemble_operator, invariant_density, tail_error_bound

_CONVERGENCE_GRID = (0.01, 0.02, 0.04)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._report(message))

    def _report(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return 1


def _fmt(value):
    if isinstance(value, (bool, np.bool_)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _write_table(args, provenance, header, rows):
    if args.format == "csv":
        buf = io.StringIO()
        for key, value in provenance.items():
            buf.write(f"# {key}: {_fmt(value)}\n")
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        text = buf.getvalue()
    else:
        payload = {
            "provenance": {k: v for k, v in provenance.items()},
            "columns": list(header),
            "rows": [[(float(v) if isinstance(v, (float, np.floating)) else v) for v in row] for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _base_provenance(args, **extra):
    prov = {
        "generator": f"gaussrenyi {__version__}",
        "subcommand": args.command,
        "format": args.format,
    }
    prov.update(extra)
    return prov


def _series_pipeline(args):
    policy = TailPolicy(a_max=args.a_max, taylor_order=args.taylor_order)
    m0 = assemble_operator(MapKind.GAUSS, args.degree, policy)
    m1 = assemble_operator(MapKind.RENYI, args.degree, policy)
    h0 = invariant_density(m0)
    series = mixture_series(h0, m0, m1, args.order)
    return policy, m0, m1, h0, series


def _cmd_density(args):
    policy, m0, m1, h0, series = _series_pipeline(args)
    h_eps = series.at(args.eps)
    res = residual(args.eps, h_eps, m0, m1)
    xs = np.linspace(0.0, 1.0, args.grid)
    header = ["x", "h0"] + [f"c{n}" for n in range(1, args.order + 1)] + ["h_eps"]
    columns = [xs, h0(xs)] + [c(xs) for c in series.coeffs] + [h_eps(xs)]
    rows = [list(vals) for vals in zip(*columns)]
    prov = _base_provenance(
        args,
        eps=args.eps,
        order=args.order,
        degree=args.degree,
        a_max=args.a_max,
        taylor_order=args.taylor_order,
        grid=args.grid,
        tail_error_bound=tail_error_bound(h0, policy),
        residual_sup=res,
    )
    _write_table(args, prov, header, rows)


def _cmd_digits(args):
    policy, m0, m1, h0, series = _series_pipeline(args)
    law = digit_law(args.eps, series, args.n_max)
    header = ["N", "p_approx", "p_gauss_kuzmin"]
    rows = [
        [n, float(law.probs[n - 1]), gauss_kuzmin(n)] for n in range(1, args.n_max + 1)
    ]
    rows.append(["tail", law.tail_mass, gauss_kuzmin_tail(args.n_max)])
    rows.append(
        ["total", float(law.probs.sum()) + law.tail_mass,
         sum(gauss_kuzmin(n) for n in range(1, args.n_max + 1)) + gauss_kuzmin_tail(args.n_max)]
    )
    prov = _base_provenance(
        args,
        eps=args.eps,
        order=args.order,
        degree=args.degree,
        a_max=args.a_max,
        taylor_order=args.taylor_order,
        n_max=args.n_max,
        tail_error_bound=tail_error_bound(h0, policy),
    )
    _write_table(args, prov, header, rows)


def _cmd_convergence(args):
    policy, m0, m1, h0, series = _series_pipeline(args)
    references = {}
    for eps in _CONVERGENCE_GRID:
        references[eps] = invariant_density(annealed(eps, m0, m1))
    header = ["eps", "k", "sup_error_vs_reference", "residual", "fitted_slope"]
    rows = []
    grid = np.linspace(0.0, 1.0, 2049)
    for k in range(1, args.order + 1):
        truncated = type(series)(series.h0, series.coeffs[:k], k)
        errors = []
        residuals = []
        for eps in _CONVERGENCE_GRID:
            h_k = truncated.at(eps)
            errors.append(float(np.max(np.abs(h_k(grid) - references[eps](grid)))))
            residuals.append(residual(eps, h_k, m0, m1))
        slope = float(np.polyfit(np.log(_CONVERGENCE_GRID), np.log(errors), 1)[0])
        for eps, err, res in zip(_CONVERGENCE_GRID, errors, residuals):
            rows.append([eps, k, err, res, slope])
    prov = _base_provenance(
        args,
        order=args.order,
        degree=args.degree,
        a_max=args.a_max,
        taylor_order=args.taylor_order,
        eps_grid=" ".join(str(e) for e in _CONVERGENCE_GRID),
        tail_error_bound=tail_error_bound(h0, policy),
    )
    _write_table(args, prov, header, rows)


def _cmd_bounds(args):
    header = ["i", "theta", "c", "eps_max"]
    rows = []
    for i in range(1, args.n_max + 1):
        if i == 1:
            rows.append([1, "", "", "deferred (i=1 case not covered by these bounds)"])
        else:
            rows.append([i, theta_bound(i), c_bound(i), eps_max(i)])
    prov = _base_provenance(args, n_max=args.n_max)
    _write_table(args, prov, header, rows)


def _cmd_simulate(args):
    cfg = SimConfig(
        eps=args.eps, samples=args.samples, n_index=args.n_index, seed=args.seed
    )
    law = simulate_digit_freq(cfg, n_max=args.n_max)
    freqs = law.frequencies()
    errs = law.std_errors()
    header = ["N", "count", "frequency", "std_error"]
    rows = [
        [n, int(law.counts[n - 1]), float(freqs[n - 1]), float(errs[n - 1])]
        for n in range(1, args.n_max + 1)
    ]
    rows.append(["overflow", law.overflow, law.overflow / law.total, ""])
    prov = _base_provenance(
        args,
        eps=args.eps,
        samples=args.samples,
        n_index=args.n_index,
        seed=args.seed,
        n_max=args.n_max,
    )
    _write_table(args, prov, header, rows)


def _add_common(sub, *, eps=False, series=False, n_max=None, sim=False, grid=False):
    if eps:
        sub.add_argument("--eps", type=float, default=0.0, help="Renyi weight (default 0)")
    if series:
        sub.add_argument("--order", type=int, default=3, help="expansion order (default 3)")
        sub.add_argument("--degree", type=int, default=128, help="collocation degree (default 128)")
        sub.add_argument("--a-max", dest="a_max", type=int, default=256,
                         help="explicit branch cutoff (default 256)")
        sub.add_argument("--taylor-order", dest="taylor_order", type=int, default=3,
                         help="tail Taylor order (default 3)")
    if n_max is not None:
        sub.add_argument("--n-max", dest="n_max", type=int, default=n_max,
                         help=f"last tabulated row (default {n_max})")
    if sim:
        sub.add_argument("--samples", type=int, default=10**6, help="sample count (default 1e6)")
        sub.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
        sub.add_argument("--n-index", dest="n_index", type=int, default=20,
                         help="digit index to record (default 20)")
    if grid:
        sub.add_argument("--grid", type=int, default=201,
                         help="output grid points (default 201)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")
    sub.add_argument("--out", default="-", help="output path, - for stdout (default)")


def _build_parser():
    parser = _Parser(prog="gaussrenyi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gaussrenyi {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("density", help="density expansion on a grid")
    _add_common(p, eps=True, series=True, grid=True)
    p.set_defaults(func=_cmd_density)

    p = subs.add_parser("digits", help="digit law against Gauss-Kuzmin")
    _add_common(p, eps=True, series=True, n_max=100)
    p.set_defaults(func=_cmd_digits)

    p = subs.add_parser("convergence", help="order-of-accuracy study")
    _add_common(p, series=True)
    p.set_defaults(func=_cmd_convergence)

    p = subs.add_parser("bounds", help="contraction constants per smoothness index")
    _add_common(p, n_max=8)
    p.set_defaults(func=_cmd_bounds)

    p = subs.add_parser("simulate", help="Monte Carlo digit frequencies")
    _add_common(p, eps=True, n_max=100, sim=True)
    p.set_defaults(func=_cmd_simulate)

    return parser


def _validate(args):
    checks = [
        ("eps", lambda v: 0.0 <= v <= 1.0, "must be in [0, 1]"),
        ("order", lambda v: v >= 1, "must be at least 1"),
        ("degree", lambda v: v >= 8, "must be at least 8"),
        ("a_max", lambda v: v >= 8, "must be at least 8"),
        ("taylor_order", lambda v: 0 <= v <= 4, "must be in 0..4"),
        ("n_max", lambda v: v >= 1, "must be at least 1"),
        ("samples", lambda v: v >= 1, "must be at least 1"),
        ("n_index", lambda v: v >= 1, "must be at least 1"),
        ("grid", lambda v: v >= 2, "must be at least 2"),
    ]
    for name, ok, msg in checks:
        if hasattr(args, name) and getattr(args, name) is not None:
            if not ok(getattr(args, name)):
                raise ValueError(f"--{name.replace('_', '-')} {msg}")


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        _validate(args)
        args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gaussrenyi: {exc}", file=sys.stderr)
        return 1
    except (RuntimeError, np.linalg.LinAlgError) as exc:
        print(f"gaussrenyi: numerical failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
