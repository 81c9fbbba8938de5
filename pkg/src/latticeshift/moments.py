"""Closed-form mean, variance and covariance of shifted lattice counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import IntPolygon, IntVector, affine_length, angle_key, upper_half, wedge


@dataclass(frozen=True)
class MomentReport:
    expectation: Fraction
    variance: Fraction
    contributions: tuple  # (line direction, variance share)


def expectation(P: IntPolygon) -> Fraction:
    return P.area


def side_dot(v, w) -> int:
    """+|v||w| (affine) for same direction, - for opposite, 0 if not parallel."""
    lv, lw = affine_length(v), affine_length(w)
    if wedge(v, w) != 0:
        return 0
    if v[0] * w[0] + v[1] * w[1] > 0:
        return lv * lw
    return -lv * lw


def covariance(P: IntPolygon, Q: IntPolygon) -> Fraction:
    total = sum(side_dot(v, w) for v in P.sides for w in Q.sides)
    return Fraction(total, 12)


def variance(P: IntPolygon) -> Fraction:
    return covariance(P, P)


def _line_direction(u) -> IntVector:
    # canonical representative of {u, -u}
    return IntVector(*u) if upper_half(u) else IntVector(-u[0], -u[1])


def variance_contributions(P: IntPolygon) -> tuple:
    """Per line direction ``d``: ``(l_plus - l_minus)^2 / 12``.

    Opposite sides cancel because a parallelogram strip between them shifts
    the count by a constant only.
    """
    net: dict[IntVector, int] = {}
    for u, l in P.side_profile:
        d = _line_direction(u)
        net[d] = net.get(d, 0) + (l if d == u else -l)
    return tuple(
        (d, Fraction(k * k, 12))
        for d, k in sorted(net.items(), key=lambda kv: angle_key(kv[0]))
    )


def moment_report(P: IntPolygon) -> MomentReport:
    contrib = variance_contributions(P)
    var = variance(P)
    assert var == sum(c for _, c in contrib)
    return MomentReport(expectation(P), var, contrib)
