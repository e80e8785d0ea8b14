"""
Products and abelian varieties
==============================

Künneth products of elliptic curves reproduce the abelian-variety slopes
computed from exterior powers of H^1.
"""

from hodgewitt import abelian_variety, elliptic_curve, kunneth_product, verify_main_theorem

E = elliptic_curve("ordinary")
S = elliptic_curve("supersingular")

EE = kunneth_product(E, E)
print("E x E:", {n: str(s) for n, s in EE.slopes.items()})
print("same as av(2,2):", EE.slopes == abelian_variety(2, 2).slopes)

ES = kunneth_product(E, S)
print("E x S Hodge-Witt:", ES.flags.hodge_witt, "->", verify_main_theorem(ES).overall)

SS = kunneth_product(S, S)
print("S x S Hodge-Witt flag:", SS.flags.hodge_witt, "->", verify_main_theorem(SS).overall)

for g, f in [(3, 3), (3, 2), (3, 1)]:
    av = abelian_variety(g, f)
    print(f"av g={g} f={f}: H^3 = {av.slopes[3]}  verdict {verify_main_theorem(av).overall}")
