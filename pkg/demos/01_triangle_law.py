"""Where does a shifted triangle land?

Drop the triangle with vertices (0,0), (4,0), (0,3) at a uniformly random
offset inside the unit square and count the lattice points it covers.  The
count is random, but its law is a finite list of exact fractions.  This
script computes that law twice: once by cutting the unit square into cells
of constant count, and once from the closed form that only looks at the
affine side lengths.
"""

from fractions import Fraction

from latticeshift import exact_pmf, polygon, triangle_pmf
from latticeshift.distribution import cell_decomposition

T = polygon((0, 0), (4, 0), (0, 3))
print("triangle", [tuple(v) for v in T.vertices])
print("affine side lengths", T.affine_lengths, "area", T.area)

cells = cell_decomposition(T)
print(f"\nThe unit square splits into {len(cells)} cells of constant count.")

law = exact_pmf(T)
closed = triangle_pmf(T)
print("\nvalue  probability (arrangement)  probability (closed form)")
for v in law.support:
    print(f"{v:5d}  {str(law[v]):>26}  {str(closed[v]):>25}")

assert law == closed
print("\nBoth routes agree exactly.")
print("mean", law.mean, "= area", T.area)
print("variance", law.variance, "= (sum of squared side lengths) / 12 =",
      Fraction(sum(l * l for l in T.affine_lengths), 12))
