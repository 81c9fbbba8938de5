"""Seeded generators of convex integer polygons for checks and experiments."""

from __future__ import annotations

import random

from .geom import (
    GeometryError,
    IntPolygon,
    apply_unimodular,
    convex_hull,
    validate_polygon,
)


def random_convex_polygon(rng: random.Random, lo: int = -8, hi: int = 8,
                          max_points: int = 7, max_vertices: int = 10) -> IntPolygon:
    """Hull of 3..max_points uniform lattice points in ``[lo, hi]^2``."""
    while True:
        k = rng.randint(3, max_points)
        pts = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(k)]
        hull = convex_hull(pts)
        if not 3 <= len(hull) <= max_vertices:
            continue
        try:
            return validate_polygon(hull)
        except GeometryError:
            continue


def random_corpus(size: int, seed: int, **kwargs) -> list:
    rng = random.Random(seed)
    return [random_convex_polygon(rng, **kwargs) for _ in range(size)]


def canonical_translate(P: IntPolygon) -> IntPolygon:
    """Representative of ``P`` modulo lattice translations (first vertex at 0)."""
    return P.translated(-P.vertices[0])


def sample_triangles(count: int, seed: int, box: int = 10, max_perimeter: int = 20) -> list:
    """``count`` distinct triangles (up to translation), drawn with a seed."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        pts = [(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(3)]
        try:
            T = validate_polygon(pts, reorient=True)
        except GeometryError:
            continue
        if T.affine_perimeter > max_perimeter:
            continue
        key = canonical_translate(T).vertices
        if key in seen:
            continue
        seen.add(key)
        out.append(T)
    return out


_SHEARS = [((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (1, 1)), ((1, 0), (-1, 1))]


def random_unimodular(rng: random.Random, steps: int = 5, reflections: bool = False):
    """Product of 1..``steps`` elementary shears (det +1).

    With ``reflections`` the generator set also contains ``diag(-1, 1)``.
    """
    A = ((1, 0), (0, 1))
    gens = _SHEARS + ([((-1, 0), (0, 1))] if reflections else [])
    for _ in range(rng.randint(1, steps)):
        G = rng.choice(gens)
        A = (
            (G[0][0] * A[0][0] + G[0][1] * A[1][0], G[0][0] * A[0][1] + G[0][1] * A[1][1]),
            (G[1][0] * A[0][0] + G[1][1] * A[1][0], G[1][0] * A[0][1] + G[1][1] * A[1][1]),
        )
    return A


def transform(P: IntPolygon, A) -> IntPolygon:
    return apply_unimodular(A, P)
