"""Fourier coefficients of polygon indicators and lattice-sum moment series.

A nonzero-frequency coefficient of an integer polygon is ``r / (2 pi i)``
with ``r`` rational; we keep ``r`` exact and only turn it into a complex
number at the end of a summation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate

from .geom import IntPolygon, IntVector, affine_length
from .moments import side_dot


class ToleranceNotMet(ArithmeticError):
    pass


def perp(m) -> IntVector:
    """Quarter turn clockwise, ``(x, y) -> (y, -x)``.

    Of the two quarter turns this is the one for which the closed form
    agrees with direct integration of ``exp(-2 pi i <m, t>)``.
    """
    return IntVector(m[1], -m[0])


@dataclass(frozen=True)
class FourierCoefficient:
    frequency: IntVector
    r: Fraction  # value is r / (2 pi i), or the area itself at m = 0

    @property
    def value(self) -> complex:
        if self.frequency == (0, 0):
            return complex(self.r)
        return complex(self.r) / (2j * math.pi)

    def is_zero(self) -> bool:
        return self.r == 0


def fourier_r(P: IntPolygon, m) -> Fraction:
    if m[0] == 0 and m[1] == 0:
        return P.area
    mp = perp(m)
    n2 = affine_length(m) ** 2
    return Fraction(sum(side_dot(mp, v) for v in P.sides), n2)


def fourier_coeff(P: IntPolygon, m) -> FourierCoefficient:
    return FourierCoefficient(IntVector(*m), fourier_r(P, m))


def _fan(P: IntPolygon):
    v0 = P.vertices[0]
    return [(v0, P.vertices[i], P.vertices[i + 1]) for i in range(1, len(P.vertices) - 1)]


def _triangle_analytic(tri, m) -> complex:
    # integral of exp(-2 pi i <m,t>) over a triangle = 2|T| times the second
    # divided difference of exp at the phases; the phases <m, vertex> are
    # integers, so coincidences are detected exactly
    (a, b, c) = tri
    area2 = abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
    phases = [m[0] * p[0] + m[1] * p[1] for p in tri]
    z = [-2j * math.pi * ph for ph in phases]
    e = [cmath.exp(w) for w in z]
    p0, p1, p2 = phases
    if p0 == p1 == p2:
        dd = e[0] / 2
    elif p0 == p1 or p1 == p2 or p0 == p2:
        if p0 == p1:
            d, s = 0, 2
        elif p1 == p2:
            d, s = 1, 0
        else:
            d, s = 0, 1
        first = (e[s] - e[d]) / (z[s] - z[d])
        dd = (first - e[d]) / (z[s] - z[d])
    else:
        dd = sum(
            e[j] / math.prod(z[j] - z[k] for k in range(3) if k != j) for j in range(3)
        )
    return area2 * dd


def _triangle_adaptive(tri, m, tol):
    # Duffy-free parametrization t = a + s*(b-a) + u*(c-a), 0 <= u <= 1-s
    a, b, c = (np.array(p, dtype=float) for p in tri)
    e1, e2 = b - a, c - a
    jac = abs(e1[0] * e2[1] - e1[1] * e2[0])
    mv = np.array(m, dtype=float)
    ph0, ph1, ph2 = mv @ a, mv @ e1, mv @ e2

    def part(fn):
        val, err = integrate.dblquad(
            lambda u, s: fn(-2 * math.pi * (ph0 + s * ph1 + u * ph2)),
            0, 1, 0, lambda s: 1 - s, epsabs=tol / 8, epsrel=0, )
        return val, err

    re, e_re = part(math.cos)
    im, e_im = part(math.sin)
    return jac * complex(re, im), jac * (e_re + e_im)


def fourier_quadrature(P: IntPolygon, m, tol: float = 1e-10, method: str = "analytic") -> complex:
    """Integral of ``exp(-2 pi i <m, t>)`` over ``P`` by fan triangulation.

    ``method="analytic"`` evaluates each triangle in closed form from its
    vertex phases; ``method="adaptive"`` uses nested adaptive quadrature
    and raises :class:`ToleranceNotMet` when its error estimate exceeds
    ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    total = 0j
    if method == "analytic":
        for tri in _fan(P):
            total += _triangle_analytic(tri, m)
        return total
    if method != "adaptive":
        raise ValueError(f"unknown method {method!r}")
    err = 0.0
    for tri in _fan(P):
        v, e = _triangle_adaptive(tri, m, tol)
        total += v
        err += e
    if err > tol:
        raise ToleranceNotMet(f"estimated error {err:.3g} exceeds {tol:.3g}")
    return total


def side_normals(P: IntPolygon) -> list:
    """Primitive frequencies (one per line, up to sign) orthogonal to a side."""
    out = []
    for u, _ in P.side_profile:
        n = IntVector(-u.y, u.x)
        if n.y < 0 or (n.y == 0 and n.x < 0):
            n = -n
        if n not in out:
            out.append(n)
    return out


def spectral_support(P: IntPolygon, R: int) -> dict:
    """All nonzero frequencies ``k n`` with ``1 <= |k| <= R`` on side-normal rays,
    mapped to their exact ``r`` coefficients (zero ones dropped)."""
    out = {}
    for n in side_normals(P):
        for k in range(1, R + 1):
            for m in (n * k, n * -k):
                r = fourier_r(P, m)
                if r:
                    out[m] = r
    return out


def covariance_series_exact(P: IntPolygon, Q: IntPolygon, R: int) -> Fraction:
    """Exact ``sum r_P(m) r_Q(-m)`` over the truncated support."""
    if R < 1:
        raise ValueError("radius must be >= 1")
    sp = spectral_support(P, R)
    total = Fraction(0)
    for m, r in sp.items():
        rq = fourier_r(Q, -m)
        if rq:
            total += r * rq
    return total


def covariance_series(P: IntPolygon, Q: IntPolygon, R: int) -> float:
    """Truncated lattice sum of ``1_P^(m) 1_Q^(-m)`` over ``m != 0``."""
    # (r1 / 2 pi i)(r2 / 2 pi i) = -r1 r2 / (4 pi^2)
    return -float(covariance_series_exact(P, Q, R)) / (4 * math.pi ** 2)


def _tuple_sums(support: dict, k: int) -> dict:
    acc = {IntVector(0, 0): Fraction(1)}
    for _ in range(k):
        nxt: dict = {}
        for s, w in acc.items():
            for m, r in support.items():
                t = IntVector(s.x + m.x, s.y + m.y)
                nxt[t] = nxt.get(t, 0) + w * r
        acc = nxt
    return acc


def central_moment_series_exact(P: IntPolygon, k: int, R: int) -> Fraction:
    """Exact sum of ``prod r(m_j)`` over zero-sum k-tuples of support frequencies.

    Meet in the middle: tuple sums of the first half are matched against the
    negated tuple sums of the second half.
    """
    if k < 2 or R < 1:
        raise ValueError("need k >= 2 and R >= 1")
    sup = spectral_support(P, R)
    left = _tuple_sums(sup, k // 2)
    right = left if k % 2 == 0 else _tuple_sums(sup, k - k // 2)
    total = Fraction(0)
    for s, w in left.items():
        w2 = right.get(IntVector(-s.x, -s.y))
        if w2:
            total += w * w2
    return total


def central_moment_series(P: IntPolygon, k: int, R: int) -> float:
    """Truncated series for ``E (X_P - E X_P)^k``."""
    exact = central_moment_series_exact(P, k, R)
    val = complex(float(exact)) / (2j * math.pi) ** k
    if abs(val.imag) > 1e-9:
        raise ArithmeticError(f"imaginary part {val.imag:.3g} does not cancel")
    return val.real


def convergence_table(P: IntPolygon, Q: IntPolygon, radii, exact=None) -> list:
    """Rows ``(R, partial_sum, |error|)``; ``exact`` defaults to the closed form."""
    if exact is None:
        from .moments import covariance
        exact = covariance(P, Q)
    rows = []
    for R in radii:
        s = covariance_series(P, Q, R)
        rows.append((R, s, abs(s - float(exact))))
    return rows
