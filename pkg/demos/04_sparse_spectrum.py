"""The Fourier transform of a polygon lives on a few lines.

The transform of a polygon's indicator at an integer frequency m vanishes
unless m is perpendicular to one of the sides.  The closed form from side
data is printed next to a numerical integral for a few frequencies.
"""

from latticeshift import polygon
from latticeshift.spectral import fourier_coeff, fourier_quadrature

P = polygon((0, 0), (2, 0), (2, 1), (1, 2), (0, 1))
print("sides", [tuple(s) for s in P.sides])
print("\n   m        closed form                  quadrature")
for m in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (3, -2), (2, 2)]:
    c = fourier_coeff(P, m).value
    q = fourier_quadrature(P, m)
    print(f"{str(m):9s} {c.real:+.6f}{c.imag:+.6f}j   {q.real:+.6f}{q.imag:+.6f}j")
