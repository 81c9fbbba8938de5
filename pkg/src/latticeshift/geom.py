"""Exact planar geometry for integer polygons.

Everything here works on Python ints and :class:`fractions.Fraction`; there
are no epsilon comparisons anywhere.  Polygons are convex, counterclockwise
and normalized to start at their lowest (then leftmost) vertex, so two
polygons with the same vertex set compare equal.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class TooFewVertices(GeometryError):
    pass


class DegenerateArea(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class NotCounterclockwise(GeometryError):
    pass


class ZeroVector(GeometryError):
    pass


class NotUnimodular(GeometryError):
    pass


class PolygonParseError(GeometryError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return IntVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return IntVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return IntVector(-self.x, -self.y)

    def __mul__(self, k):
        return IntVector(self.x * k, self.y * k)

    __rmul__ = __mul__


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "RationalPoint":
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other):
        return RationalPoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return RationalPoint(self.x - other[0], self.y - other[1])


Point = Union[IntVector, RationalPoint, Sequence]


def wedge(a, b):
    """Oriented area ``a.x*b.y - b.x*a.y``; exact for ints and Fractions."""
    return a[0] * b[1] - b[0] * a[1]


def affine_length(v) -> int:
    """Number of lattice segments on the integer vector ``v``."""
    g = gcd(v[0], v[1])
    if g == 0:
        raise ZeroVector("affine length of the zero vector is undefined")
    return g


def primitive(v) -> IntVector:
    g = affine_length(v)
    return IntVector(v[0] // g, v[1] // g)


def upper_half(v) -> bool:
    """True for polar angles in [0, pi)."""
    return v[1] > 0 or (v[1] == 0 and v[0] > 0)


def angle_cmp(v, w) -> int:
    """Exact three-way comparison of nonzero vectors by polar angle in [0, 2pi)."""
    hv, hw = upper_half(v), upper_half(w)
    if hv != hw:
        return -1 if hv else 1
    c = wedge(v, w)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(angle_cmp)


@dataclass(frozen=True)
class SideProfile:
    """Multiset of (primitive direction, affine length), sorted by angle."""

    entries: tuple

    @classmethod
    def from_sides(cls, sides: Iterable) -> "SideProfile":
        acc: dict[IntVector, int] = {}
        for v in sides:
            l = affine_length(v)
            u = IntVector(v[0] // l, v[1] // l)
            acc[u] = acc.get(u, 0) + l
        items = sorted(acc.items(), key=lambda kv: angle_key(kv[0]))
        return cls(tuple(items))

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))

    def transformed(self, A) -> "SideProfile":
        return SideProfile.from_sides(mat_vec(A, u) * l for u, l in self.entries)

    def union(self, other: "SideProfile") -> "SideProfile":
        return SideProfile.from_sides(
            [u * l for u, l in self.entries] + [u * l for u, l in other.entries]
        )

    def is_symmetric(self) -> bool:
        """True when every direction is matched by its opposite with equal length."""
        d = dict(self.entries)
        return all(d.get(-u, 0) == l for u, l in d.items())

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def shoelace2(vertices) -> object:
    """Twice the signed area of a closed polygon."""
    n = len(vertices)
    return sum(wedge(vertices[i], vertices[(i + 1) % n]) for i in range(n))


def polygon_area(vertices) -> Fraction:
    """Unsigned exact area of a (possibly degenerate) convex polygon."""
    if len(vertices) < 3:
        return Fraction(0)
    return abs(Fraction(shoelace2(vertices)) / 2)


@dataclass(frozen=True)
class IntPolygon:
    """Validated convex counterclockwise integer polygon.

    Build instances with :func:`validate_polygon`; the constructor assumes
    its input is already normalized.
    """

    vertices: tuple

    @cached_property
    def sides(self) -> tuple:
        vs = self.vertices
        n = len(vs)
        return tuple(vs[(i + 1) % n] - vs[i] for i in range(n))

    @cached_property
    def area(self) -> Fraction:
        return Fraction(shoelace2(self.vertices), 2)

    @cached_property
    def affine_lengths(self) -> tuple:
        return tuple(affine_length(v) for v in self.sides)

    @property
    def affine_perimeter(self) -> int:
        return sum(self.affine_lengths)

    @cached_property
    def side_profile(self) -> SideProfile:
        return SideProfile.from_sides(self.sides)

    @property
    def is_triangle(self) -> bool:
        return len(self.vertices) == 3

    def bounding_box(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def translated(self, t) -> "IntPolygon":
        return IntPolygon(tuple(v + t for v in self.vertices))

    def to_json(self) -> dict:
        return {"vertices": [[v.x, v.y] for v in self.vertices]}

    def __repr__(self):
        return "IntPolygon(%s)" % ", ".join(f"({v.x},{v.y})" for v in self.vertices)


def _dedupe_cyclic(points):
    out = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _rotate_to_lowest(points):
    start = min(range(len(points)), key=lambda i: (points[i][1], points[i][0]))
    return points[start:] + points[:start]


def validate_polygon(vertices, reorient: bool = False) -> IntPolygon:
    """Check and normalize a convex integer polygon.

    Collinear runs are merged into a single side; the lattice points they
    carried are still accounted for through the side's affine length.
    Clockwise input raises :class:`NotCounterclockwise` unless ``reorient``
    is set, in which case the vertex order is reversed.
    """
    pts = []
    for p in vertices:
        x, y = p
        if int(x) != x or int(y) != y:
            raise GeometryError(f"non-integer vertex {p!r}")
        pts.append(IntVector(int(x), int(y)))
    pts = _dedupe_cyclic(pts)
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 distinct vertices, got {len(pts)}")
    s = shoelace2(pts)
    if s == 0:
        raise DegenerateArea("polygon has zero area")
    if s < 0:
        if not reorient:
            raise NotCounterclockwise("vertices are in clockwise order")
        pts.reverse()

    # merge collinear interior vertices; reject spikes
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            d1, d2 = b - a, c - b
            if wedge(d1, d2) == 0:
                if d1.x * d2.x + d1.y * d2.y < 0:
                    raise NotConvex(f"polygon folds back at vertex {tuple(b)}")
                del pts[i]
                changed = True
                break
    if len(pts) < 3:
        raise DegenerateArea("polygon collapses to a segment")

    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        e = b - a
        for p in pts:
            if wedge(e, p - a) < 0:
                raise NotConvex(f"vertex {tuple(p)} lies right of side {tuple(a)}->{tuple(b)}")
    return IntPolygon(tuple(_rotate_to_lowest(pts)))


def polygon(*vertices, reorient=False) -> IntPolygon:
    """Shorthand: ``polygon((0, 0), (1, 0), (0, 1))``."""
    return validate_polygon(vertices, reorient=reorient)


def lattice_points(P: IntPolygon) -> list:
    """All lattice points of the closed polygon, by bounding-box enumeration."""
    x0, y0, x1, y1 = P.bounding_box()
    vs, sides = P.vertices, P.sides
    out = []
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            if all(wedge(e, (x - a.x, y - a.y)) >= 0 for a, e in zip(vs, sides)):
                out.append(IntVector(x, y))
    return out


def pick_counts(P: IntPolygon, check: bool = False):
    """(interior, boundary, area) from Pick's theorem.

    With ``check=True`` both counts are recomputed by brute enumeration and a
    mismatch raises ``AssertionError``.
    """
    area = P.area
    boundary = P.affine_perimeter
    interior = area - Fraction(boundary, 2) + 1
    assert interior.denominator == 1
    interior = int(interior)
    if check:
        pts = lattice_points(P)
        on_boundary = sum(
            1 for m in pts
            if any(wedge(e, m - a) == 0 for a, e in zip(P.vertices, P.sides))
        )
        if on_boundary != boundary or len(pts) - on_boundary != interior:
            raise AssertionError(
                f"Pick mismatch for {P!r}: enumerated ({len(pts) - on_boundary}, "
                f"{on_boundary}) vs ({interior}, {boundary})"
            )
    return interior, boundary, area


def det2(A) -> int:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat_vec(A, v) -> IntVector:
    return IntVector(A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def transpose(A):
    return ((A[0][0], A[1][0]), (A[0][1], A[1][1]))


def apply_unimodular(A, P: IntPolygon) -> IntPolygon:
    """Image of ``P`` under an integer matrix with determinant +-1."""
    if det2(A) not in (1, -1):
        raise NotUnimodular(f"det {det2(A)} is not +-1")
    return validate_polygon([mat_vec(A, v) for v in P.vertices], reorient=True)


def negate(P: IntPolygon) -> IntPolygon:
    return validate_polygon([-v for v in P.vertices])


def minkowski_sum(P: IntPolygon, Q) -> IntPolygon:
    """Minkowski sum by merging the two side sequences in angular order.

    ``Q`` may also be a single integer point, giving a translate of ``P``.
    """
    if not isinstance(Q, IntPolygon):
        return P.translated(IntVector(*Q))
    # both polygons start at their lowest-leftmost vertex, so their sides
    # already run in increasing angle from [0, pi)
    sp, sq = P.sides, Q.sides
    i = j = 0
    cur = P.vertices[0] + Q.vertices[0]
    pts = [cur]
    while i < len(sp) or j < len(sq):
        if j == len(sq) or (i < len(sp) and angle_key(sp[i]) <= angle_key(sq[j])):
            cur = cur + sp[i]
            i += 1
        else:
            cur = cur + sq[j]
            j += 1
        pts.append(cur)
    return validate_polygon(pts[:-1])


def convex_hull(points) -> list:
    """Counterclockwise hull (monotone chain), collinear points dropped."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return [IntVector(*p) for p in pts]

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and wedge(
                (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                (p[0] - out[-2][0], p[1] - out[-2][1]),
            ) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return [IntVector(*p) for p in lower[:-1] + upper[:-1]]


# -- rational convex polygons -------------------------------------------------

def _simplify(points):
    pts = _dedupe_cyclic(points)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            if wedge((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) == 0:
                del pts[i]
                changed = True
                break
    if len(pts) == 2 and pts[0] == pts[1]:
        pts = pts[:1]
    return pts


def intersect_convex(P, Q) -> tuple:
    """Exact intersection of two convex counterclockwise polygons.

    Accepts :class:`IntPolygon` or vertex sequences.  The result is a tuple
    of :class:`RationalPoint`: empty, a single point, a segment, or a convex
    polygon.  Use :func:`polygon_area` for its area.
    """
    subject = [RationalPoint.of(*p) for p in _verts(P)]
    clip = [RationalPoint.of(*p) for p in _verts(Q)]
    n = len(clip)
    for i in range(n):
        if not subject:
            break
        a, b = clip[i], clip[(i + 1) % n]
        e = (b.x - a.x, b.y - a.y)
        side = [wedge(e, (p.x - a.x, p.y - a.y)) for p in subject]
        out = []
        m = len(subject)
        for k in range(m):
            p, q = subject[k], subject[(k + 1) % m]
            sp, sq = side[k], side[(k + 1) % m]
            if sp >= 0:
                out.append(p)
            if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
                t = sp / (sp - sq)
                out.append(RationalPoint(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
        subject = _simplify(out)
    return tuple(subject)


def _verts(P):
    return P.vertices if isinstance(P, IntPolygon) else list(P)


# -- I/O ----------------------------------------------------------------------

def parse_polygon_text(text: str, reorient: bool = False) -> IntPolygon:
    """Parse ``x y`` per line (``#`` comments allowed) or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            verts = data["vertices"]
            pts = [(int(x), int(y)) for x, y in verts]
        except (ValueError, KeyError, TypeError) as exc:
            raise PolygonParseError(f"bad polygon JSON: {exc}") from None
        return validate_polygon(pts, reorient=reorient)
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise PolygonParseError(f"expected 'x y', got {raw!r}", lineno)
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise PolygonParseError(f"non-integer coordinate in {raw!r}", lineno) from None
    return validate_polygon(pts, reorient=reorient)


def load_polygon(path, reorient: bool = False) -> IntPolygon:
    with open(path) as fh:
        return parse_polygon_text(fh.read(), reorient=reorient)


def format_polygon_text(P: IntPolygon) -> str:
    return "".join(f"{v.x} {v.y}\n" for v in P.vertices)


UNIT_TRIANGLE = IntPolygon((IntVector(0, 0), IntVector(1, 0), IntVector(0, 1)))
UNIT_SQUARE = IntPolygon((IntVector(0, 0), IntVector(1, 0), IntVector(1, 1), IntVector(0, 1)))
