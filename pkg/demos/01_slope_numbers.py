"""
Slope numbers of curves and K3 surfaces
=======================================

Slope numbers redistribute each Frobenius slope between the two nearest
integers. For a K3 surface the answer does not depend on the height.
"""

from fractions import Fraction

from hodgewitt import SlopeMultiset, curve, k3, slope_numbers

# A genus 3 curve of p-rank 1 has H^1 slopes {0: 1, 1/2: 4, 1: 1}.
c = curve(3, 1)
print("curve g=3, f=1:", c.slopes[1], "->", slope_numbers(c.slopes[1]))

# K3 surfaces of every finite height give (1, 20, 1) in degree 2.
for h in range(1, 12):
    s = k3(h).slopes[2]
    print(f"K3 height {h:2d}: {str(s):<40} m = {tuple(int(v) for v in slope_numbers(s))}")

# A single slope 1/3 with multiplicity 3 splits 2:1 between columns 0 and 1.
print("slope 1/3 x 3:", slope_numbers(SlopeMultiset(1, ((Fraction(1, 3), 3),))))
