"""
Symmetric powers on the elliptic ruled surface
==============================================

E is the indecomposable rank-2 bundle of degree 1 on an elliptic curve and
A = det E.  Sym^m E splits into twists of O, the three 2-torsion line
bundles L1, L2, L3, and E itself.
"""

from planeinterp import h0_anticanonical_pencil, sym_power
from planeinterp.sympow import h0, twist

for m in range(7):
    dec = sym_power(m)
    print(f"Sym^{m} E = {dec.render():<28} rank {dec.rank}, degree {dec.degree}")

# -2K_S corresponds to Sym^4 E twisted by A^-2: two sections, so a pencil
print("Sym^4 E (x) A^-2 =", twist(sym_power(4), -2).render())
print("h0(-2K_S) =", h0_anticanonical_pencil())
print("h0(Sym^2 E (x) A^-1) =", h0(twist(sym_power(2), -1)))
