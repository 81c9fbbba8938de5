"""Command line interface: ``latticeshift <command> ...``.

Exact values are printed as ``"p/q"`` strings.  Failures print a JSON error
object to stderr: exit 2 for bad input, 1 for failed checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import covariogram as cg
from . import distribution as dist
from . import moments, montecarlo, spectral
from .checks import CHECKS, run_selfcheck
from .corpus import random_corpus
from .geom import GeometryError, load_polygon, pick_counts


class MethodMismatch(ValueError):
    pass


class CommandError(Exception):
    def __init__(self, payload, code):
        super().__init__(payload)
        self.payload = payload
        self.code = code


def _frac(x) -> str:
    return str(x)


def _emit(obj, fmt="json"):
    if fmt == "csv":
        sys.stdout.write(obj)
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _csv(header, rows) -> str:
    return "\n".join([",".join(header)] + [",".join(str(c) for c in r) for r in rows]) + "\n"


def cmd_analyze(args):
    P = load_polygon(args.polygon, reorient=args.reorient)
    interior, boundary, area = pick_counts(P)
    rep = moments.moment_report(P)
    return {
        "vertices": [[v.x, v.y] for v in P.vertices],
        "area": _frac(area),
        "interior": interior,
        "boundary": boundary,
        "affine_lengths": list(P.affine_lengths),
        "affine_perimeter": P.affine_perimeter,
        "expectation": _frac(rep.expectation),
        "variance": _frac(rep.variance),
        "variance_by_direction": [[[d.x, d.y], _frac(c)] for d, c in rep.contributions],
        "support_bound": dist.support_bound(P),
    }


def _pmf_out(p, fmt):
    if fmt == "csv":
        return _csv(["value", "probability"], [(v, _frac(pr)) for v, pr in p.items])
    return p.to_json()


def cmd_distribution(args):
    P = load_polygon(args.polygon, reorient=args.reorient)
    if args.method == "triangle":
        if not P.is_triangle:
            raise MethodMismatch(f"method 'triangle' needs a triangle, got {len(P.vertices)} vertices")
        return _pmf_out(dist.triangle_pmf(P), args.format)
    if args.method == "exact":
        return _pmf_out(dist.exact_pmf(P), args.format)
    exact = dist.exact_pmf(P) if not args.no_exact else None
    cfg = montecarlo.SimConfig(args.samples, args.seed, args.shards)
    rep = montecarlo.simulate(P, cfg, exact)
    out = {
        "support": [[v, _frac(Fraction(c, rep.samples))] for v, c in rep.counts.items()],
        "mean": rep.mean,
        "variance": rep.variance,
        "samples": rep.samples,
    }
    if rep.comparison is not None:
        out["comparison"] = rep.to_json()["comparison"]
    if args.format == "csv":
        return _csv(["value", "probability"], out["support"])
    return out


def cmd_covariance(args):
    P = load_polygon(args.p, reorient=args.reorient)
    Q = load_polygon(args.q, reorient=args.reorient)
    if args.method == "theorem":
        return {"method": "theorem", "covariance": _frac(moments.covariance(P, Q))}
    if args.method == "covariogram":
        s = cg.lattice_sum(P, Q)
        return {
            "method": "covariogram",
            "covariance": _frac(s.covariance),
            "lattice_sum": _frac(s.lattice_sum),
            "integral": _frac(s.integral),
        }
    return {
        "method": "series",
        "radius": args.radius,
        "covariance": spectral.covariance_series(P, Q, args.radius),
    }


def cmd_simulate(args):
    P = load_polygon(args.polygon, reorient=args.reorient)
    exact = None if args.no_exact else dist.exact_pmf(P)
    rep = montecarlo.simulate(P, montecarlo.SimConfig(args.samples, args.seed, args.shards), exact)
    if args.format == "csv":
        return rep.to_csv()
    return rep.to_json()


def cmd_spectral(args):
    P = load_polygon(args.polygon, reorient=args.reorient)
    if args.freq is not None:
        c = spectral.fourier_coeff(P, tuple(args.freq))
        q = spectral.fourier_quadrature(P, tuple(args.freq))
        return {
            "frequency": list(args.freq),
            "r": _frac(c.r),
            "value": [c.value.real, c.value.imag],
            "quadrature": [q.real, q.imag],
        }
    if args.moment is not None:
        R = args.radii[-1]
        exact = dist.exact_pmf(P).central_moment(args.moment)
        val = spectral.central_moment_series(P, args.moment, R)
        return {"moment": args.moment, "radius": R, "series": val, "exact": _frac(exact)}
    Q = load_polygon(args.other, reorient=args.reorient) if args.other else P
    rows = spectral.convergence_table(P, Q, args.radii)
    if args.format == "csv":
        return _csv(["R", "partial_sum", "abs_error"], [(R, repr(s), repr(e)) for R, s, e in rows])
    return {"rows": [{"R": R, "partial_sum": s, "abs_error": e} for R, s, e in rows],
            "exact": _frac(moments.covariance(P, Q))}


def cmd_covariogram(args):
    A = load_polygon(args.a, reorient=args.reorient)
    B = load_polygon(args.b, reorient=args.reorient) if args.b else A
    table = cg.covariogram_table(A, B)
    if args.format == "csv":
        return _csv(["nx", "ny", "g"], [(n[0], n[1], _frac(g)) for n, g in table])
    s = cg.lattice_sum(A, B)
    return {
        "table": [[list(n), _frac(g)] for n, g in table],
        "lattice_sum": _frac(s.lattice_sum),
        "integral": _frac(s.integral),
        "covariance": _frac(s.covariance),
    }


def cmd_selfcheck(args):
    polys = random_corpus(args.corpus_size, args.seed)
    if not polys:
        return {"passed": True, "warning": "empty corpus; nothing checked", "rows": []}
    rows = run_selfcheck(polys, args.seed, sabotage=args.sabotage)
    failures = sum(1 for r in rows for v in r.values() if v is False)
    matrix = [
        {"polygon": [[v.x, v.y] for v in P.vertices],
         **{k: ("n/a" if r[k] is None else ("ok" if r[k] else "FAIL")) for k in CHECKS}}
        for P, r in zip(polys, rows)
    ]
    out = {"passed": failures == 0, "failures": failures, "checks": list(CHECKS), "rows": matrix}
    if failures:
        raise CommandError(out, 1)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latticeshift", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def poly_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--reorient", action="store_true",
                        help="accept clockwise vertex order by reversing it")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        return sp

    sp = poly_cmd("analyze", cmd_analyze, "area, Pick counts, mean and variance")
    sp.add_argument("polygon")

    sp = poly_cmd("distribution", cmd_distribution, "law of the shifted count")
    sp.add_argument("polygon")
    sp.add_argument("--method", choices=("exact", "triangle", "montecarlo"), default="exact")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--no-exact", action="store_true")

    sp = poly_cmd("covariance", cmd_covariance, "covariance of two counts")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--method", choices=("theorem", "covariogram", "series"), default="theorem")
    sp.add_argument("--radius", type=int, default=100)

    sp = poly_cmd("simulate", cmd_simulate, "Monte Carlo tallies")
    sp.add_argument("polygon")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--no-exact", action="store_true")

    sp = poly_cmd("spectral", cmd_spectral, "Fourier coefficients and series tables")
    sp.add_argument("polygon")
    sp.add_argument("--other", help="second polygon for the covariance series")
    sp.add_argument("--freq", type=int, nargs=2, metavar=("MX", "MY"))
    sp.add_argument("--moment", type=int)
    sp.add_argument("--radii", type=lambda s: [int(t) for t in s.split(",")],
                    default=[10, 50, 100, 200])

    sp = poly_cmd("covariogram", cmd_covariogram, "lattice covariogram table and sums")
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")

    sp = sub.add_parser("selfcheck", help="random corpus route-agreement matrix")
    sp.set_defaults(func=cmd_selfcheck, format="json")
    sp.add_argument("--corpus-size", type=int, default=25)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--sabotage", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except CommandError as exc:
        _emit(exc.payload)
        return exc.code
    except (GeometryError, MethodMismatch, OSError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "line", None) is not None:
            err["line"] = exc.line
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2
    if isinstance(out, dict) and out.get("warning"):
        sys.stderr.write(out["warning"] + "\n")
    if isinstance(out, dict) and getattr(args, "format", "json") == "csv":
        # commands without a natural table fall back to key,value rows
        out = _csv(["key", "value"], [(k, v) for k, v in sorted(out.items())
                                      if not isinstance(v, (list, dict))])
    _emit(out, "csv" if isinstance(out, str) else "json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
