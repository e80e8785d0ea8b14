"""
Checking the hypothesis chain
=============================

Hodge-Witt + slope-number symmetry => Hodge-Witt symmetry => Hodge symmetry,
given torsion-free crystalline cohomology and Hodge-de Rham degeneration.
"""

from dataclasses import replace

from hodgewitt import NumberTable, curve, k3, verify_main_theorem

# A K3 of height 2 satisfies every hypothesis.
print(verify_main_theorem(k3(2)).to_text())

# The supersingular K3 is not Hodge-Witt. Its domino T^(0,2) = 1 still gives
# h_W = h, but the conclusion is not drawn.
print(verify_main_theorem(k3("supersingular")).to_text())

# Dropping a hypothesis never yields a pass.
p = k3(2)
no_torsion_free = replace(p, flags=replace(p.flags, crystalline_torsion_free=False))
print("without torsion-freeness:", verify_main_theorem(no_torsion_free).overall)

# Asymmetric Hodge numbers on a genus 2 curve are caught with the offending (p, q).
bad = replace(curve(2, 2), hodge=NumberTable.from_rows([[1], [1, 3], [0, 1, 0]]))
report = verify_main_theorem(bad)
for e in report.check("hodge-symmetry").evidence:
    print(" ", e)
