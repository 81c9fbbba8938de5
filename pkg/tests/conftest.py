import random
from fractions import Fraction

import pytest

from latticeshift.corpus import random_corpus
from latticeshift.geom import UNIT_SQUARE, UNIT_TRIANGLE, IntPolygon, RationalPoint, polygon
from latticeshift.spectral import fourier_coeff, fourier_quadrature

CORPUS_SEED = 2024
CORPUS_SIZE = 50

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_sessionstart(session):
    # the quarter-turn convention in fourier_coeff must match direct integration
    for m in [(1, 0), (0, 1), (1, 1)]:
        closed = fourier_coeff(UNIT_TRIANGLE, m).value
        direct = fourier_quadrature(UNIT_TRIANGLE, m, method="adaptive")
        if abs(closed - direct) > 1e-9:
            raise pytest.UsageError(f"rotation convention mismatch at m={m}: {closed} vs {direct}")


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(CORPUS_SIZE, CORPUS_SEED)


@pytest.fixture
def tri():
    return UNIT_TRIANGLE


@pytest.fixture
def square():
    return UNIT_SQUARE


@pytest.fixture
def pentagon():
    return polygon((0, 0), (2, 0), (2, 1), (1, 2), (0, 1))


def brute_count(P: IntPolygon, x):
    """Closed-polygon lattice count by bounding-box enumeration in Fractions."""
    x = RationalPoint.of(*x)
    x0, y0, x1, y1 = P.bounding_box()
    n = 0
    clean = True
    for my in range(y0 - 1, y1 + 2):
        for mx in range(x0 - 1, x1 + 2):
            q = (mx - x.x, my - x.y)
            vals = []
            for a, e in zip(P.vertices, P.sides):
                vals.append(e[0] * (q[1] - a.y) - e[1] * (q[0] - a.x))
            if all(v >= 0 for v in vals):
                n += 1
                if any(v == 0 for v in vals):
                    clean = False
    return n, clean


def rational_shift(rng: random.Random, denom: int = 997):
    return RationalPoint(Fraction(rng.randrange(denom), denom), Fraction(rng.randrange(denom), denom))
