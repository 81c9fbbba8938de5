"""Route-agreement checks over a polygon corpus (backs ``latticeshift selfcheck``)."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .counting import count_shifted, count_via_sides
from .covariogram import lattice_sum
from .distribution import (
    Pmf,
    exact_pmf,
    is_symmetric,
    reduce_mod,
    support_bound,
    triangle_pmf,
    uniform_pmf,
)
from .geom import IntPolygon, RationalPoint, negate, pick_counts
from .corpus import random_unimodular, transform
from .moments import covariance, variance
from .spectral import fourier_coeff, fourier_quadrature

CHECKS = (
    "pick", "mean", "variance", "support", "symmetry", "side_formula",
    "unimodular", "negation", "covariogram", "fourier", "triangle",
)


def random_shift(rng: random.Random, denom: int = 1009) -> RationalPoint:
    return RationalPoint(Fraction(rng.randrange(denom), denom),
                         Fraction(rng.randrange(denom), denom))


def clean_shifts(P: IntPolygon, rng: random.Random, count: int):
    out = []
    while len(out) < count:
        x = random_shift(rng)
        r = count_shifted(P, x)
        if r.boundary_clean:
            out.append((x, r.count))
    return out


def sabotaged(p: Pmf) -> Pmf:
    """Move a sliver of mass from the first support value to one above the top."""
    d = p.as_dict()
    v0 = p.support[0]
    eps = min(d[v0] / 2, Fraction(1, 1000))
    d[v0] -= eps
    top = p.support[-1] + 1
    d[top] = d.get(top, 0) + eps
    return Pmf.from_mapping(d)


def check_polygon(P: IntPolygon, partner: IntPolygon, rng: random.Random,
                  sabotage: bool = False) -> dict:
    res = {}
    try:
        pick_counts(P, check=True)
        res["pick"] = True
    except AssertionError:
        res["pick"] = False
    pmf = exact_pmf(P)
    if sabotage:
        pmf = sabotaged(pmf)
    res["mean"] = pmf.mean == P.area
    res["variance"] = pmf.variance == variance(P)
    res["support"] = len(pmf) <= support_bound(P) and pmf.is_contiguous()
    res["symmetry"] = is_symmetric(pmf)
    res["side_formula"] = all(count_via_sides(P, x) == c for x, c in clean_shifts(P, rng, 50))
    res["unimodular"] = all(
        exact_pmf(transform(P, random_unimodular(rng))) == pmf for _ in range(3)
    )
    res["negation"] = exact_pmf(negate(P)) == pmf
    res["covariogram"] = lattice_sum(P, partner).covariance == covariance(P, partner)
    res["fourier"] = all(
        abs(fourier_coeff(P, (a, b)).value - fourier_quadrature(P, (a, b))) <= 1e-8
        for a in range(-2, 3) for b in range(-2, 3)
    )
    if P.is_triangle:
        ok = triangle_pmf(P) == pmf
        a, b, c = P.affine_lengths
        if gcd(a, gcd(b, c)) == 1:
            ok = ok and all(reduce_mod(pmf, n) == uniform_pmf(n) for n in (a, b, c))
        res["triangle"] = ok
    else:
        res["triangle"] = None
    return res


def run_selfcheck(polygons, seed: int, sabotage: bool = False) -> list:
    """One result row per polygon; sabotage corrupts the first polygon's pmf."""
    rng = random.Random(seed)
    rows = []
    n = len(polygons)
    for i, P in enumerate(polygons):
        partner = polygons[(i + 1) % n]
        rows.append(check_polygon(P, partner, rng, sabotage=sabotage and i == 0))
    return rows
