"""Lattice counts of a polygon under an explicit shift.

``count_shifted`` is the direct definition; ``count_via_sides`` evaluates the
same quantity from side directions only, through ceilings of wedge products.
Both are exact; a shift is *clean* when no lattice point sits on the
boundary of the shifted polygon, and the side formula is only claimed there.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple

import numpy as np

from .geom import IntPolygon, RationalPoint, affine_length, pick_counts, wedge


class ShiftCount(NamedTuple):
    count: int
    boundary_clean: bool


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _as_scaled(x):
    """Return (px, py, D) with x == (px/D, py/D)."""
    fx, fy = Fraction(x[0]), Fraction(x[1])
    d = lcm(fx.denominator, fy.denominator)
    return fx.numerator * (d // fx.denominator), fy.numerator * (d // fy.denominator), d


def count_shifted(P: IntPolygon, x) -> ShiftCount:
    """Number of lattice points in the closed polygon ``P + x``.

    Rows of the lattice are scanned and each row's admissible integer
    interval is cut out by the side half-planes, in integer arithmetic.
    """
    px, py, D = _as_scaled(x)
    verts, sides = P.vertices, P.sides
    ylo = _ceil_div(min(v.y for v in verts) * D + py, D)
    yhi = (max(v.y for v in verts) * D + py) // D
    total = 0
    clean = True
    for my in range(ylo, yhi + 1):
        lo, hi = None, None
        lo_tight = hi_tight = flat_tight = False
        empty = False
        for a, v in zip(verts, sides):
            wy = D * (my - a.y) - py
            c0 = v.x * wy + v.y * (px + D * a.x)
            if v.y > 0:
                den = v.y * D
                b = c0 // den
                if hi is None or b < hi:
                    hi, hi_tight = b, c0 % den == 0
                elif b == hi and c0 % den == 0:
                    hi_tight = True
            elif v.y < 0:
                den = -v.y * D
                b = _ceil_div(-c0, den)
                if lo is None or b > lo:
                    lo, lo_tight = b, c0 % den == 0
                elif b == lo and c0 % den == 0:
                    lo_tight = True
            else:
                if c0 < 0:
                    empty = True
                elif c0 == 0:
                    flat_tight = True
        if empty or lo is None or hi is None or hi < lo:
            continue
        total += hi - lo + 1
        if lo_tight or hi_tight or flat_tight:
            clean = False
    return ShiftCount(total, clean)


def parallelogram_points(v, x) -> int:
    """Lattice points of the half-open parallelogram {s*x + t*v : 0 < s <= 1, 0 <= t < 1}.

    The open side is the edge from 0 to v, the closed side its translate by
    x; points are enumerated over the bounding box.
    """
    px, py, D = _as_scaled(x)
    vx, vy = v
    N = px * vy - py * vx  # D * (x ^ v)
    if N == 0:
        return 0
    sgn = 1 if N > 0 else -1
    N *= sgn
    x_lo = min(0, vx, px // D, (px + vx * D) // D)
    x_hi = max(0, vx, -((-px) // D), -((-px - vx * D) // D))
    y_lo = min(0, vy, py // D, (py + vy * D) // D)
    y_hi = max(0, vy, -((-py) // D), -((-py - vy * D) // D))
    n = 0
    for my in range(y_lo, y_hi + 1):
        for mx in range(x_lo, x_hi + 1):
            # s = D (m ^ v) / N and t = (x ^ m) D / N, both scaled by N / D
            s_num = sgn * D * (mx * vy - my * vx)
            t_num = sgn * (px * my - py * mx)
            if 0 < s_num <= N and 0 <= t_num < N:
                n += 1
    return n


def count_parallelogram_oriented(v, x) -> int:
    """Oriented parallelogram count: plus (points + affine length) when
    ``x ^ v >= 0``, minus points otherwise."""
    l = affine_length(v)
    n = parallelogram_points(v, x)
    if wedge(RationalPoint.of(*x), v) >= 0:
        return n + l
    return -n


def count_via_ceiling(v, x) -> int:
    l = affine_length(v)
    px, py, D = _as_scaled(x)
    num = px * (v[1] // l) - py * (v[0] // l)
    return l * _ceil_div(num, D)


def is_clean_for_sides(P: IntPolygon, x) -> bool:
    """True iff no ``x ^ u`` is an integer for a primitive side direction ``u``.

    For lattice polygons this is equivalent to ``count_shifted(P, x)`` being
    boundary clean: a side line through a lattice point always meets one
    inside the side, since sides have affine length at least 1.
    """
    px, py, D = _as_scaled(x)
    for u, _ in P.side_profile:
        if (px * u.y - py * u.x) % D == 0:
            return False
    return True


def side_constant(P: IntPolygon) -> int:
    """The integer ``c`` with ``X_P(x) = c + sum_i l_i ceil(x ^ u_i)`` at clean x.

    It equals interior points minus one: pushing the shift off 0 along a
    generic direction picks up exactly the boundary points of one chain of
    sides, one fewer than their total affine length.
    """
    interior, _, _ = pick_counts(P)
    return interior - 1


def count_via_sides(P: IntPolygon, x) -> int:
    """``X_P(x)`` from side data alone; equals ``count_shifted`` at clean x.

    Written against the interior-plus-boundary count this reads
    ``|P n Z^2| + sum_i (l_i ceil(x ^ u_i) - l_i) - 1``.
    """
    return side_constant(P) + sum(count_via_ceiling(v, x) for v in P.sides)


def count_via_sides_batch(P: IntPolygon, px: np.ndarray, py: np.ndarray, denom: int):
    """Vectorized side formula at shifts ``(px/denom, py/denom)``.

    Returns ``(counts, clean)`` int64/bool arrays.  Inputs must be int64 and
    small enough that ``px * |u|`` does not overflow.
    """
    counts = np.full(px.shape, side_constant(P), dtype=np.int64)
    clean = np.ones(px.shape, dtype=bool)
    for u, l in P.side_profile:
        num = px * u.y - py * u.x
        counts += l * (-((-num) // denom))
        clean &= (num % denom) != 0
    return counts, clean
