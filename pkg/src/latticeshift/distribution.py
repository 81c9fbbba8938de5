"""Exact laws of the shifted lattice count.

Two independent routes:

* :func:`exact_pmf` cuts the unit square along every line ``x ^ u = k``
  (``u`` a primitive side direction, ``k`` integer), evaluates the count at
  an interior point of each cell with :func:`~latticeshift.counting.count_shifted`
  and sums cell areas per value.
* :func:`triangle_pmf` is the closed form for triangles: a shifted, dilated
  convolution of discrete uniforms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .counting import count_shifted
from .geom import IntPolygon, RationalPoint, upper_half, wedge


class ShiftNotInteger(ArithmeticError):
    pass


class PmfError(ValueError):
    pass


@dataclass(frozen=True)
class Pmf:
    """Probability mass function with integer support and exact probabilities."""

    items: tuple  # ((value, Fraction), ...) sorted by value

    def __post_init__(self):
        total = Fraction(0)
        prev = None
        for v, p in self.items:
            if not isinstance(p, Fraction) or p <= 0:
                raise PmfError(f"probability at {v} must be a positive Fraction, got {p!r}")
            if prev is not None and v <= prev:
                raise PmfError("support must be strictly increasing")
            prev = v
            total += p
        if total != 1:
            raise PmfError(f"probabilities sum to {total}, not 1")

    @classmethod
    def from_mapping(cls, mapping) -> "Pmf":
        return cls(tuple(sorted((k, Fraction(p)) for k, p in mapping.items() if p != 0)))

    def as_dict(self) -> dict:
        return dict(self.items)

    @property
    def support(self) -> list:
        return [v for v, _ in self.items]

    def __getitem__(self, value):
        return self.as_dict().get(value, Fraction(0))

    def __len__(self):
        return len(self.items)

    def moment(self, k: int, center=0) -> Fraction:
        return sum((p * (v - center) ** k for v, p in self.items), Fraction(0))

    @property
    def mean(self) -> Fraction:
        return self.moment(1)

    @property
    def variance(self) -> Fraction:
        return self.moment(2, self.mean)

    def central_moment(self, k: int) -> Fraction:
        return self.moment(k, self.mean)

    def is_contiguous(self) -> bool:
        s = self.support
        return s[-1] - s[0] + 1 == len(s)

    def to_json(self) -> dict:
        return {
            "support": [[v, str(p)] for v, p in self.items],
            "mean": str(self.mean),
            "variance": str(self.variance),
        }

    @classmethod
    def from_json(cls, data) -> "Pmf":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((int(v), Fraction(p)) for v, p in data["support"]))


def uniform_pmf(n: int) -> Pmf:
    if n < 1:
        raise PmfError("uniform_pmf needs n >= 1")
    return Pmf(tuple((k, Fraction(1, n)) for k in range(n)))


def convolve(p: Pmf, q: Pmf) -> Pmf:
    acc: dict[int, Fraction] = {}
    for v, a in p.items:
        for w, b in q.items:
            acc[v + w] = acc.get(v + w, Fraction(0)) + a * b
    return Pmf.from_mapping(acc)


def shift(p: Pmf, c: int) -> Pmf:
    return Pmf(tuple((v + c, pr) for v, pr in p.items))


def scale_support(p: Pmf, n: int) -> Pmf:
    if n < 1:
        raise PmfError("scale factor must be positive")
    return Pmf(tuple((v * n, pr) for v, pr in p.items))


def centered_pmf(p: Pmf) -> dict:
    mu = p.mean
    return {v - mu: pr for v, pr in p.items}


def is_symmetric(p: Pmf) -> bool:
    c = centered_pmf(p)
    return all(c.get(-t) == pr for t, pr in c.items())


def reduce_mod(p: Pmf, n: int) -> Pmf:
    if n < 1:
        raise PmfError("modulus must be positive")
    acc: dict[int, Fraction] = {}
    for v, pr in p.items:
        acc[v % n] = acc.get(v % n, Fraction(0)) + pr
    return Pmf.from_mapping(acc)


def support_bound(P: IntPolygon) -> int:
    return P.affine_perimeter - 1


def triangle_pmf(T: IntPolygon) -> Pmf:
    """Closed-form law of the count for an integer triangle."""
    if not T.is_triangle:
        raise ValueError(f"triangle_pmf needs a triangle, got {len(T.vertices)} vertices")
    a, b, c = T.affine_lengths
    g = gcd(a, gcd(b, c))
    base = uniform_pmf(2)
    for n in (a // g, b // g, c // g):
        base = convolve(base, uniform_pmf(n))
    base = scale_support(base, g)
    offset = T.area - base.mean
    if offset.denominator != 1:
        raise ShiftNotInteger(f"mean offset {offset} is not an integer for {T!r}")
    return shift(base, int(offset))


# -- cell arrangement -------------------------------------------------------
#
# Every vertex met during the decomposition is the intersection of two lines
# a*x + b*y = k with integer coefficients, so it is kept in homogeneous
# integer form (X, Y, W), W > 0.  A cell is a list of (vertex, line of the
# edge leaving that vertex).

def _meet(l1, l2):
    a1, b1, k1 = l1
    a2, b2, k2 = l2
    w = a1 * b2 - a2 * b1
    x = k1 * b2 - k2 * b1
    y = a1 * k2 - a2 * k1
    if w < 0:
        w, x, y = -w, -x, -y
    g = gcd(gcd(x, y), w)
    return (x // g, y // g, w // g)


def _split(cell, line):
    """Split a convex cell by ``line``; returns (below, above) or None."""
    a, b, k = line
    s = [a * X + b * Y - k * W for (X, Y, W), _ in cell]
    if min(s) >= 0 or max(s) <= 0:
        return None
    neg, pos = [], []
    n = len(cell)
    for i in range(n):
        v, e = cell[i]
        si, sj = s[i], s[(i + 1) % n]
        if si >= 0:
            pos.append((v, line if (si == 0 and sj < 0) else e))
        if si <= 0:
            neg.append((v, line if (si == 0 and sj > 0) else e))
        if si > 0 and sj < 0:
            c = _meet(line, e)
            pos.append((c, line))
            neg.append((c, e))
        elif si < 0 and sj > 0:
            c = _meet(line, e)
            neg.append((c, line))
            pos.append((c, e))
    return neg, pos


def _level_range(cell, a, b):
    vals = [(a * X + b * Y, W) for (X, Y, W), _ in cell]
    lo = min(t // w for t, w in vals) + 1
    hi = max(-((-t) // w) for t, w in vals) - 1
    return lo, hi


def line_directions(P: IntPolygon) -> list:
    """Primitive side directions of ``P`` with ``u`` and ``-u`` identified."""
    seen = []
    for u, _ in P.side_profile:
        d = u if upper_half(u) else type(u)(-u.x, -u.y)
        if d not in seen:
            seen.append(d)
    return seen


def unit_square_cells(directions) -> list:
    """Cells of the unit square cut by all lines ``x ^ u = k``."""
    square = [
        ((0, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (1, 0, 1)),
        ((1, 1, 1), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 0)),
    ]
    cells = [square]
    for u in directions:
        # x ^ u = x*u.y - y*u.x
        a, b = u[1], -u[0]
        out = []
        for cell in cells:
            lo, hi = _level_range(cell, a, b)
            rest = cell
            for k in range(lo, hi + 1):
                parts = _split(rest, (a, b, k))
                if parts is None:
                    continue
                out.append(parts[0])
                rest = parts[1]
            out.append(rest)
        cells = out
    return cells


@dataclass(frozen=True)
class Cell:
    polygon: tuple  # RationalPoint vertices, counterclockwise
    value: int
    probability: Fraction


def _to_points(cell):
    return tuple(RationalPoint(Fraction(X, W), Fraction(Y, W)) for (X, Y, W), _ in cell)


def _cell_area(pts) -> Fraction:
    n = len(pts)
    return sum(wedge(pts[i], pts[(i + 1) % n]) for i in range(n)) / 2


def _representative(P, pts):
    n = len(pts)
    c = RationalPoint(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)
    r = count_shifted(P, c)
    if r.boundary_clean:
        return r.count
    # vertex average is interior to the cell; this only guards against misuse
    for p in pts:
        q = c
        for _ in range(64):
            q = RationalPoint((q.x + p.x) / 2, (q.y + p.y) / 2)
            r = count_shifted(P, q)
            if r.boundary_clean:
                return r.count
    raise RuntimeError("no clean representative found in cell")


def cell_decomposition(P: IntPolygon) -> list:
    """Cells of constant count, with their value and probability (area)."""
    cells = []
    for raw in unit_square_cells(line_directions(P)):
        pts = _to_points(raw)
        area = _cell_area(pts)
        if area == 0:
            continue
        cells.append(Cell(pts, _representative(P, pts), area))
    return cells


def exact_pmf(P: IntPolygon) -> Pmf:
    acc: dict[int, Fraction] = {}
    for cell in cell_decomposition(P):
        acc[cell.value] = acc.get(cell.value, Fraction(0)) + cell.probability
    return Pmf.from_mapping(acc)


def generating_polynomial(p: Pmf) -> list:
    """Coefficients of ``sum_k P(X - min X = k) z^k``, lowest degree first."""
    lo = p.support[0]
    coeffs = [Fraction(0)] * (p.support[-1] - lo + 1)
    for v, pr in p.items:
        coeffs[v - lo] = pr
    return coeffs


def poly_mul(f, g) -> list:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def uniform_generating(n: int) -> list:
    return [Fraction(1, n)] * n
