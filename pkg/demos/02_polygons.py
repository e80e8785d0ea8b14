"""
Newton, slope-number and Hodge polygons
=======================================

The Newton polygon sits on or above the slope-number polygon, which sits on
or above the Hodge polygon. For a K3 of height 3 the lower two coincide.
"""

import sys

from hodgewitt import (
    hodge_polygon,
    k3,
    lies_on_or_above,
    newton_polygon,
    polygons_equal,
    slope_number_polygon,
    slope_numbers,
)
from hodgewitt.svg import render_svg

p = k3(3)
newton = newton_polygon(p, 2)
sn = slope_number_polygon(slope_numbers(p.slopes[2]))
hodge = hodge_polygon(p, 2)

print("newton      ", newton)
print("slope-number", sn)
print("hodge       ", hodge)
print("newton >= slope-number:", lies_on_or_above(newton, sn))
print("slope-number = hodge:  ", polygons_equal(sn, hodge))

# Heights at x = 1, where the three differ the most.
print("at x=1:", newton.value_at(1), sn.value_at(1), hodge.value_at(1))

out = sys.argv[1] if len(sys.argv) > 1 else "k3_height3.svg"
with open(out, "w") as fh:
    fh.write(render_svg([("newton", newton), ("slope-number", sn), ("hodge", hodge)],
                        "K3 of height 3, degree 2"))
print("wrote", out)
