import math
import random
from fractions import Fraction

import pytest

from latticeshift.corpus import random_unimodular
from latticeshift.distribution import exact_pmf
from latticeshift.geom import apply_unimodular, mat_vec, polygon, transpose
from latticeshift.moments import covariance
from latticeshift.spectral import (
    ToleranceNotMet,
    central_moment_series,
    convergence_table,
    covariance_series,
    fourier_coeff,
    fourier_quadrature,
    perp,
    side_normals,
)

F = Fraction


def test_rotation_convention():
    assert perp((1, 0)) == (0, -1)
    assert perp((0, 1)) == (1, 0)


@pytest.mark.parametrize("m, r", [((1, 0), F(1)), ((1, -1), F(0)), ((2, 0), F(1, 2)),
                                  ((0, 1), F(1)), ((1, 1), F(-1))])
def test_triangle_coefficients(tri, m, r):
    c = fourier_coeff(tri, m)
    assert c.r == r
    q = fourier_quadrature(tri, m, tol=1e-10, method="adaptive")
    assert abs(c.value - q) <= 1e-10


def test_zero_frequency_is_area(tri):
    assert fourier_coeff(tri, (0, 0)).value == 0.5


def test_triangle_numeric_values(tri):
    assert fourier_quadrature(tri, (1, 0)) == pytest.approx(-0.15915494j, abs=1e-8)
    assert fourier_quadrature(tri, (1, 1)) == pytest.approx(0.15915494j, abs=1e-8)
    assert abs(fourier_quadrature(polygon((0, 0), (1, 0), (1, 1), (0, 1)), (1, 0))) < 1e-12


def test_adaptive_tolerance_error(tri):
    big = polygon((0, 0), (9, 0), (0, 9))
    with pytest.raises(ToleranceNotMet):
        fourier_quadrature(big, (17, 5), tol=1e-15, method="adaptive")


def test_analytic_matches_adaptive(tri, pentagon):
    for P in (tri, pentagon, polygon((0, 0), (3, 1), (1, 2))):
        for m in [(1, 0), (0, 1), (1, 2), (-2, 1), (1, 1)]:
            a = fourier_quadrature(P, m)
            b = fourier_quadrature(P, m, tol=1e-9, method="adaptive")
            assert abs(a - b) <= 1e-9


def test_conjugate_symmetry(corpus):
    for P in corpus[:10]:
        for n in side_normals(P):
            for k in (1, 2, 3):
                m = (n.x * k, n.y * k)
                assert fourier_coeff(P, (-m[0], -m[1])).value == fourier_coeff(P, m).value.conjugate()


def test_unimodular_covariance(corpus):
    rng = random.Random(1)
    for P in corpus[:10]:
        A = random_unimodular(rng)
        AP = apply_unimodular(A, P)
        for m in [(1, 0), (0, 1), (1, 1), (2, -3), (5, 1)]:
            assert fourier_coeff(AP, m).r == fourier_coeff(P, mat_vec(transpose(A), m)).r


def test_dissection_additivity():
    P = polygon((0, 0), (4, 0), (3, 3), (0, 2))
    P1 = polygon((0, 0), (4, 0), (3, 3))
    P2 = polygon((0, 0), (3, 3), (0, 2))
    for a in range(-4, 5):
        for b in range(-4, 5):
            if (a, b) == (0, 0):
                continue
            assert fourier_coeff(P, (a, b)).r == fourier_coeff(P1, (a, b)).r + fourier_coeff(P2, (a, b)).r


def test_covariance_series_examples(tri, square):
    assert abs(covariance_series(tri, tri, 100) - 0.25) <= 0.002
    assert covariance_series(tri, square, 30) == 0
    # sides (2,1), (-1,2), (-1,-3): no direction shared with the unit triangle
    other = polygon((0, 0), (2, 1), (1, 3))
    assert covariance_series(tri, other, 30) == 0
    assert covariance(tri, other) == 0


def test_covariance_series_converges_monotonically(tri):
    rows = convergence_table(tri, tri, [5, 10, 20, 40, 80, 160])
    errs = [e for _, _, e in rows]
    assert errs == sorted(errs, reverse=True)
    # tail of sum 1/(4 pi^2 k^2) over three rays is below 6/(4 pi^2 R)
    for R, _, e in rows:
        assert e <= 6 / (4 * math.pi ** 2 * R)


def test_covariance_series_error_constant(corpus):
    # measured: error * R stays bounded by the number of directions times 2/(4 pi^2)
    for P, Q in zip(corpus[:5], corpus[5:10]):
        exact = float(covariance(P, Q))
        for R in (20, 80):
            err = abs(covariance_series(P, Q, R) - exact)
            dirs = len(side_normals(P))
            bound = dirs * 2 / (4 * math.pi ** 2 * R) * max(P.affine_perimeter, 1) * max(Q.affine_perimeter, 1)
            assert err <= bound


def test_moment_series(tri):
    assert abs(central_moment_series(tri, 2, 100) - 0.25) <= 0.002
    assert abs(central_moment_series(tri, 3, 50)) <= 0.01
    exact4 = exact_pmf(tri).central_moment(4)
    assert exact4 == F(1, 16)
    assert abs(central_moment_series(tri, 4, 50) - float(exact4)) <= 0.01


def test_sparsity_random_frequencies(corpus):
    rng = random.Random(3)
    for P in corpus[:10]:
        dirs = [u for u, _ in P.side_profile]
        tested = 0
        while tested < 30:
            m = (rng.randint(-12, 12), rng.randint(-12, 12))
            if m == (0, 0) or any(m[0] * u.x + m[1] * u.y == 0 for u in dirs):
                continue
            assert fourier_coeff(P, m).r == 0
            assert abs(fourier_quadrature(P, m)) <= 1e-8
            tested += 1
