"""Command-line interface: ``sntensor <subcommand> [options]``.

Data goes to stdout (or ``--output``); diagnostics go to stderr. Exit status
is 0 on success, 2 on usage errors and 1 on computation errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from . import __version__
from .characters import character_table
from .errors import SnTensorError
from .mixing import (
    ChainSpec,
    asymptotic_bounds,
    chain_distribution,
    ds_upper_bound,
    fixed_point_free_mass,
    moment_direct,
    moment_via_decomposition,
    poisson_moment,
    reference_measure,
    total_variation,
)
from .partitions import dimension, fixed_points
from .simulate import empirical_tv, run_chain
from .tensor import closed_form_divergence, decompose

DEFAULT_EXACT_CEILING = 14
_DECIMAL = Context(prec=12, rounding=ROUND_HALF_EVEN)


def decimal(x) -> str:
    """12 significant digits, round-half-even."""
    if isinstance(x, Fraction):
        d = _DECIMAL.divide(Decimal(x.numerator), Decimal(x.denominator))
    else:
        d = _DECIMAL.plus(Decimal(x))
    return str(d)


def exact_fields(name: str, value: Fraction) -> dict:
    value = Fraction(value)
    return {
        f"{name}_num": value.numerator,
        f"{name}_den": value.denominator,
        f"{name}_decimal": decimal(value),
    }


class Report:
    def __init__(self, subcommand: str, params: dict, columns: list[str]):
        self.subcommand = subcommand
        self.params = params
        self.columns = columns
        self.rows: list[dict] = []
        self.warnings: list[str] = []
        self.summary: dict = {}

    def envelope(self) -> dict:
        out = {
            "tool": "sntensor",
            "version": __version__,
            "subcommand": self.subcommand,
            "parameters": self.params,
            "rows": self.rows,
            "warnings": self.warnings,
        }
        if self.summary:
            out["summary"] = self.summary
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.envelope(), indent=2) + "\n"
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns, extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()


def _check_ceiling(n: int, ceiling: int, hint: str):
    if n > ceiling:
        raise SnTensorError(
            f"n={n} exceeds the exact-computation ceiling {ceiling}; {hint}"
        )


def cmd_decompose(args) -> Report:
    table = decompose(args.n, args.r, args.rep, ceiling=args.exact_ceiling)
    rep = Report("decompose", {"n": args.n, "r": args.r, "rep": args.rep},
                 ["lambda", "multiplicity", "method", "dim", "mult_times_dim"])
    for lam, entry in table.entries.items():
        d = dimension(lam)
        rep.rows.append({
            "lambda": str(lam),
            "multiplicity": entry.multiplicity,
            "method": entry.method,
            "dim": d,
            "mult_times_dim": entry.multiplicity * d,
        })
    fallback = sum(1 for e in table.entries.values() if e.method == "oracle")
    if fallback:
        rep.warnings.append(f"oracle fallback used for {fallback} partition(s) outside r <= n - lambda_2")
    if args.diagnose:
        for lam, guess, truth in closed_form_divergence(args.n, args.r, args.rep,
                                                        ceiling=args.exact_ceiling):
            rep.warnings.append(
                f"closed form extrapolated to {lam} gives {guess}, oracle gives {truth}"
            )
    rep.summary = {"dimension_sum": table.dimension_sum(),
                   "expected_dimension": table.expected_dimension()}
    return rep


def cmd_chartab(args) -> Report:
    table = character_table(args.n)
    rep = Report("chartab", {"n": args.n}, ["lambda", "gamma", "chi", "class_size", "dim"])
    for lam, g, chi, size, d in table.records():
        rep.rows.append({"lambda": str(lam), "gamma": str(g), "chi": chi,
                         "class_size": size, "dim": d})
    return rep


def cmd_chain(args) -> Report:
    _check_ceiling(args.n, args.exact_ceiling, "use `simulate` instead")
    spec = ChainSpec(args.n, args.k)
    mu = chain_distribution(spec, ceiling=args.exact_ceiling)
    ref = reference_measure(spec.n, spec.parity)
    tv = total_variation(mu, ref)
    lower = abs(fixed_point_free_mass(mu) - fixed_point_free_mass(ref))
    rep = Report("chain", {"n": args.n, "k": args.k},
                 ["gamma", "mass_num", "mass_den", "fixed_points"])
    for g, m in mu.masses.items():
        rep.rows.append({"gamma": str(g), **exact_fields("mass", m),
                         "fixed_points": fixed_points(g)})
    upper = ds_upper_bound(spec)
    rep.summary = {
        "parity": spec.parity,
        **exact_fields("tv", tv),
        **exact_fields("lower_bound", lower),
        "ds_upper_bound": decimal(upper),
    }
    return rep


def _k_for(c: float, n: int) -> int:
    return math.floor(c * n + 0.5)


def cmd_bounds(args, parser) -> Report:
    if args.c <= 0:
        parser.error("--c must be positive")
    if args.nmin < 3 or args.nmax < args.nmin or args.step < 1:
        parser.error("need 3 <= nmin <= nmax and step >= 1")
    lo, hi = asymptotic_bounds(args.c)
    rep = Report("bounds",
                 {"c": args.c, "nmin": args.nmin, "nmax": args.nmax, "step": args.step},
                 ["n", "k", "tv_exact", "lower_bound", "ds_bound",
                  "asymptotic_lower", "asymptotic_upper"])
    rep.warnings.append("asymptotic bounds hold as n -> infinity; finite-n rows are a comparison only")
    for n in range(args.nmin, args.nmax + 1, args.step):
        k = _k_for(args.c, n)
        spec = ChainSpec(n, k)
        row = {"n": n, "k": k, "tv_exact": "", "lower_bound": "",
               "ds_bound": decimal(ds_upper_bound(spec)),
               "asymptotic_lower": decimal(lo), "asymptotic_upper": decimal(hi)}
        if n <= args.exact_ceiling:
            mu = chain_distribution(spec, ceiling=args.exact_ceiling)
            ref = reference_measure(n, spec.parity)
            tv = total_variation(mu, ref)
            lower = abs(fixed_point_free_mass(mu) - fixed_point_free_mass(ref))
            row.update(exact_fields("tv_exact", tv))
            row.update(exact_fields("lower_bound", lower))
            row["tv_exact"] = decimal(tv)
            row["lower_bound"] = decimal(lower)
        else:
            rep.warnings.append(f"n={n}: above exact ceiling, tv_exact and lower_bound omitted")
        rep.rows.append(row)
    return rep


def cmd_moments(args, parser) -> Report:
    if args.rmax < 1:
        parser.error("--rmax must be >= 1")
    spec = ChainSpec(args.n, args.k)
    nu = 1 - math.exp(-2 * args.k / args.n)
    rep = Report("moments", {"n": args.n, "k": args.k, "rmax": args.rmax},
                 ["r", "moment_exact_num", "moment_exact_den", "poisson_moment"])
    exact_ok = args.n <= args.exact_ceiling
    for r in range(1, args.rmax + 1):
        if r > args.n - 1:
            _check_ceiling(args.n, args.exact_ceiling,
                           "moments beyond r = n - 1 need the full character table")
        m = moment_via_decomposition(spec, r, ceiling=args.exact_ceiling)
        if exact_ok and m != moment_direct(spec, r, ceiling=args.exact_ceiling):
            raise SnTensorError(f"moment r={r}: decomposition and class sum disagree")
        rep.rows.append({"r": r, **exact_fields("moment_exact", m),
                         "poisson_moment": decimal(poisson_moment(nu, r))})
    if not exact_ok:
        rep.warnings.append("n above exact ceiling: moments not cross-checked by class summation")
    rep.summary = {"poisson_mean": decimal(nu)}
    return rep


def cmd_simulate(args, parser) -> Report:
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 bits")
    spec = ChainSpec(args.n, args.k)
    report = run_chain(spec, args.trials, args.seed)
    exact = None
    if args.n <= args.exact_ceiling:
        exact = chain_distribution(spec, ceiling=args.exact_ceiling)
    rep = Report("simulate",
                 {"n": args.n, "k": args.k, "trials": args.trials, "seed": args.seed},
                 ["gamma", "count", "frequency", "exact_mass"])
    for g, count in report.class_counts.items():
        row = {"gamma": str(g), "count": count,
               "frequency": decimal(Fraction(count, args.trials)), "exact_mass": ""}
        if exact is not None:
            row.update(exact_fields("exact_mass", exact[g]))
            row["exact_mass"] = decimal(exact[g])
        rep.rows.append(row)
    rep.summary = {
        "rng": report.rng,
        "parity": report.parity,
        "fixed_point_histogram": {str(f): c for f, c in report.fixed_point_histogram.items()},
        "empirical_moments": [decimal(m) for m in report.empirical_moments],
    }
    if exact is not None:
        rep.summary["empirical_tv"] = decimal(empirical_tv(report, exact))
    else:
        rep.warnings.append(f"n={args.n} above exact ceiling: exact_mass omitted")
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("--exact-ceiling", type=int, default=DEFAULT_EXACT_CEILING,
                        help="largest n for exact chain/TV computation (default %(default)s)")

    parser = argparse.ArgumentParser(prog="sntensor", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("decompose", parents=[common],
                       help="irreducible multiplicities of a tensor power")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--rep", choices=("defining", "standard"), default="defining")
    p.add_argument("--diagnose", action="store_true",
                   help="report where the closed form would disagree outside its range")

    p = sub.add_parser("chartab", parents=[common], help="full character table of S_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("chain", parents=[common],
                       help="exact class law of the n-cycle-then-transpositions chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("bounds", parents=[common], help="TV bounds along k = round(c*n)")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--step", type=int, default=1)

    p = sub.add_parser("moments", parents=[common], help="fixed-point moments of the chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo of the chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "n", 3) < (1 if args.command == "chartab" else 3):
        parser.error("--n out of range")
    if getattr(args, "k", 0) < 0 or getattr(args, "r", 1) < 1:
        parser.error("--k must be >= 0 and --r >= 1")
    handlers = {
        "decompose": lambda: cmd_decompose(args),
        "chartab": lambda: cmd_chartab(args),
        "chain": lambda: cmd_chain(args),
        "bounds": lambda: cmd_bounds(args, parser),
        "moments": lambda: cmd_moments(args, parser),
        "simulate": lambda: cmd_simulate(args, parser),
    }
    try:
        report = handlers[args.command]()
    except SnTensorError as exc:
        print(f"sntensor {args.command}: {exc}", file=sys.stderr)
        return 1
    text = report.render(args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.format == "csv" and report.summary and args.command == "chain":
        for key, value in report.summary.items():
            print(f"{key}={value}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
