"""Three routes to one covariance.

For two integer polygons P and Q shifted by the same random point, the
covariance of their lattice counts is a sum over pairs of parallel sides.
The same number also falls out of a lattice sum of overlap areas, and as
the limit of a Fourier series.  Here all three are computed side by side.
"""

from latticeshift import covariance, polygon
from latticeshift.covariogram import lattice_sum
from latticeshift.spectral import convergence_table

P = polygon((0, 0), (3, 0), (4, 2), (1, 3))
Q = polygon((0, 0), (2, 0), (0, 2))

exact = covariance(P, Q)
print("side-pair formula   ", exact)

s = lattice_sum(P, Q)
print("overlap lattice sum ", s.lattice_sum, "-", s.integral, "=", s.covariance)

print("\nFourier partial sums over |m|_inf <= R:")
for R, partial, err in convergence_table(P, Q, [5, 20, 80]):
    print(f"  R={R:3d}  sum={partial:.6f}  error={err:.2e}")
