"""
Move invariance under fuzzing
=============================

Random Omega_1, Omega_2 and Omega_4 insertions never change a counting
invariant.  Enhanced polynomials stay put only for modules meeting the
R2 bead conditions.
"""

from bikeikit import (
    catalog, counting_invariant, enhanced_polynomial, fuzz_moves, parse,
    reidemeister2_violation, search_modules,
)

d = catalog.get("9^{1,-2}_1").diagram
variants = fuzz_moves(d, seed=7, k=10)
print("original:", d)
print("one variant:", variants[0])

XP = catalog.bikei("xp")
print("counts:", {counting_invariant(v, XP) for v in variants})

for key in ("ex-proper", "second", "z5"):
    M = catalog.module(key)
    polys = {str(enhanced_polynomial(v, M)) for v in [d] + variants}
    print(f"{key:10} R2 ok: {reidemeister2_violation(M) is None!s:5}  distinct values: {sorted(polys)}")

# the smallest witness: two circles drawn with an R2 pair of crossings
r2 = parse("X(1,2,3,4) X(4,2,3,1)")
M1 = catalog.module("ex-proper")
print("O O:", enhanced_polynomial(parse("O O"), M1), " R2 pair:", enhanced_polynomial(r2, M1))

sound = [M for M in search_modules(catalog.bikei("x1"), 8) if reidemeister2_violation(M) is None]
e = catalog.get("8^{1,1}_1").diagram
stable = all(
    enhanced_polynomial(v, M) == enhanced_polynomial(e, M)
    for M in sound
    for v in fuzz_moves(e, seed=3, k=5)
)
print(f"{len(sound)} R2-sound Z_8 modules stable on 8^(1,1)_1 variants: {stable}")
