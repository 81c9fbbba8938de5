"""Lattice points of an integer polygon under a uniform random shift.

Exact distribution, variance, covariance, Fourier and covariogram routes for
``X_P = #((P + X) & Z^2)`` with ``X`` uniform in the unit square.
"""

from .geom import (
    UNIT_SQUARE,
    UNIT_TRIANGLE,
    IntPolygon,
    IntVector,
    RationalPoint,
    SideProfile,
    affine_length,
    apply_unimodular,
    intersect_convex,
    minkowski_sum,
    negate,
    pick_counts,
    polygon,
    validate_polygon,
    wedge,
)
from .counting import (
    count_parallelogram_oriented,
    count_shifted,
    count_via_ceiling,
    count_via_sides,
)
from .moments import covariance, expectation, side_dot, variance
from .distribution import (
    Pmf,
    centered_pmf,
    convolve,
    exact_pmf,
    reduce_mod,
    support_bound,
    triangle_pmf,
    uniform_pmf,
)
from .spectral import (
    central_moment_series,
    covariance_series,
    fourier_coeff,
    fourier_quadrature,
)
from .covariogram import covariogram_at, lattice_sum
from .montecarlo import SimConfig, compare_to_exact, simulate

__version__ = "0.1.0"
