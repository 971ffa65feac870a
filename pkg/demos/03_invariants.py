"""
Counting invariants and enhanced polynomials
============================================

Colour catalog diagrams by bikei, then count bead colourings for a
module to get the enhanced polynomial.
"""

from bikeikit import catalog, counting_invariant, enhanced_polynomial, enumerate_colorings
from bikeikit.enhance import bead_system

P2 = catalog.get("2^{-1}_1").diagram
print("projective plane:", P2)
print("X1 colorings:", counting_invariant(P2, catalog.bikei("x1")))
print("X2 colorings:", counting_invariant(P2, catalog.bikei("x2")))

# the worked Z_5 example: one bead variable, two colourings
M5 = catalog.module("z5")
for f in enumerate_colorings(P2, M5.base):
    s = bead_system(f, M5)
    print(f.vector(), "matrix", s.matrix, "beads", s.kernel_size())
print("polynomial:", enhanced_polynomial(P2, M5))

# two non-orientable surfaces with equal homsets, split by the module
XP = catalog.bikei("xp")
M = catalog.module("ex-proper")
for name in ("8^{-1,-1}_1", "9^{1,-2}_1"):
    d = catalog.get(name).diagram
    print(name, counting_invariant(d, XP), enhanced_polynomial(d, M))

# the counting example bikei separates them outright
X8 = catalog.bikei("x8")
for name in ("8^{-1,-1}_1", "9^{1,-2}_1"):
    print(name, "under x8:", counting_invariant(catalog.get(name).diagram, X8))
