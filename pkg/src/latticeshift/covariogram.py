"""Cross covariograms of integer polygons and their lattice sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import IntPolygon, RationalPoint, intersect_convex, polygon_area


@dataclass(frozen=True)
class CovariogramSum:
    lattice_sum: Fraction
    integral: Fraction
    covariance: Fraction


def covariogram_at(A: IntPolygon, B: IntPolygon, x) -> Fraction:
    """Area of ``A`` intersected with ``B + x``."""
    t = RationalPoint.of(*x)
    moved = [RationalPoint(v.x + t.x, v.y + t.y) for v in B.vertices]
    return polygon_area(intersect_convex(A, moved))


def translate_range(A: IntPolygon, B: IntPolygon):
    """Integer box containing every ``n`` with ``A`` meeting ``B + n``."""
    ax0, ay0, ax1, ay1 = A.bounding_box()
    bx0, by0, bx1, by1 = B.bounding_box()
    return range(ax0 - bx1, ax1 - bx0 + 1), range(ay0 - by1, ay1 - by0 + 1)


def covariogram_table(A: IntPolygon, B: IntPolygon) -> list:
    """``[(n, g(n))]`` for lattice translates with positive overlap, sorted."""
    xs, ys = translate_range(A, B)
    ax0, ay0, ax1, ay1 = A.bounding_box()
    bx0, by0, bx1, by1 = B.bounding_box()
    rows = []
    for ny in ys:
        if by1 + ny <= ay0 or by0 + ny >= ay1:
            continue
        for nx in xs:
            if bx1 + nx <= ax0 or bx0 + nx >= ax1:
                continue
            g = covariogram_at(A, B, (nx, ny))
            if g:
                rows.append(((nx, ny), g))
    return rows


def lattice_sum(A: IntPolygon, B: IntPolygon) -> CovariogramSum:
    s = sum((g for _, g in covariogram_table(A, B)), Fraction(0))
    integral = A.area * B.area
    return CovariogramSum(s, integral, s - integral)
