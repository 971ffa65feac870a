"""
Bikei modules over Z_8
======================

Search every coefficient assignment [T|S|R] over the two-element bikei
X1 and look at which of them survive a direct R2 move on beads.
"""

import time

from bikeikit import catalog, reidemeister2_violation, search_modules

X1 = catalog.bikei("x1")
t = time.perf_counter()
modules = search_modules(X1, 8)
print(f"{len(modules)} modules in {time.perf_counter() - t:.2f}s")

example = catalog.module("z8")
print("printed example found:", example in modules)
print(example.to_block())

# The module axioms do not include the conditions that make a pair of
# crossings cancel on beads.  Most modules fail them.
sound = [M for M in modules if reidemeister2_violation(M) is None]
print(f"{len(sound)} of {len(modules)} meet the R2 bead conditions")
print("printed example:", reidemeister2_violation(example))
for M in sound[:3]:
    print(M.to_block(), end="\n\n")
