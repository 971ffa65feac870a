"""Acceptance gate: one PASS/FAIL line per criterion.

Run under pytest (the lines are collected into the terminal summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from bikeikit import catalog  # noqa: E402
from bikeikit.bikei import enumerate_bikei  # noqa: E402
from bikeikit.coloring import counting_invariant, enumerate_colorings  # noqa: E402
from bikeikit.diagram import fuzz_moves, parse  # noqa: E402
from bikeikit.enhance import bead_module_size, bead_system, enhanced_polynomial  # noqa: E402
from bikeikit.module import BikeiModule, reidemeister2_violation, search_modules  # noqa: E402
from bikeikit.ring import kernel_count  # noqa: E402

FUZZ_VARIANTS = 20


def criterion_1():
    two = enumerate_bikei(2)
    same = all([(X.under, X.over) for X in enumerate_bikei(n)] == oracles.bikei_tables(n) for n in (1, 2, 3))
    # time the library side only; the oracle is deliberately slow
    t_lib = time.perf_counter()
    for n in (1, 2, 3):
        enumerate_bikei(n)
    elapsed = time.perf_counter() - t_lib
    ok = len(two) == 2 and same and elapsed < 1.0
    return ok, f"{len(two)} bikei on 2 elements, naive filter agrees for n<=3: {same}, {elapsed:.3f}s"


def criterion_2():
    X1 = catalog.bikei("x1")
    t = time.perf_counter()
    found = search_modules(X1, 8, workers=1)
    elapsed = time.perf_counter() - t
    ex = BikeiModule.from_matrices(X1, 8, [[3, 7], [7, 3]], [[4, 0], [0, 4]], [[7, 5], [5, 7]])
    ok = len(found) == 512 and ex in found and elapsed < 60
    return ok, f"{len(found)} modules over Z_8, printed example present: {ex in found}, {elapsed:.2f}s single-threaded"


def criterion_3():
    P2 = catalog.get("2^{-1}_1").diagram
    XP = catalog.bikei("xp")
    got = (
        counting_invariant(P2, catalog.bikei("x1")),
        counting_invariant(P2, catalog.bikei("x2")),
        counting_invariant(catalog.get("8^{-1,-1}_1").diagram, XP),
        counting_invariant(catalog.get("9^{1,-2}_1").diagram, XP),
    )
    return got == (0, 2, 8, 8), f"(X1 on P2, X2 on P2, 8^(-1,-1)_1, 9^(1,-2)_1) = {got}, expected (0, 2, 8, 8)"


def criterion_4():
    P2 = catalog.get("2^{-1}_1").diagram
    M5 = catalog.module("z5")
    sizes = sorted(bead_module_size(f, M5) for f in enumerate_colorings(P2, M5.base))
    return sizes == [1, 5], f"bead module sizes {sizes}, expected [1, 5]"


def criterion_5():
    parts, ok = [], True
    for table in ("ex-proper", "second"):
        rows = catalog.reproduce(table)
        missing = sum(r.got is None for r in rows)
        good = sum(r.ok for r in rows)
        ok &= good == len(rows)
        parts.append(f"{table}: {good}/{len(rows)} rows ({missing} without a diagram)")
    swapped = []
    for table, other in (("ex-proper", "second"), ("second", "ex-proper")):
        rows = [r for r in catalog.reproduce(table, catalog.module(other)) if r.got is not None]
        swapped.append(f"{sum(r.ok for r in rows)}/{len(rows)}")
    parts.append("with the two printed modules exchanged: " + ", ".join(swapped) + " of rows with diagrams")
    return ok, "; ".join(parts)


def criterion_6():
    rng = random.Random(20261015)
    bad = 0
    for _ in range(500):
        n = rng.randint(2, 8)
        cols = rng.randint(1, 4)
        rows = rng.randint(0, 4)
        A = [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)]
        bad += kernel_count(A, n, cols) != oracles.kernel_count(A, n, cols)
    return bad == 0, f"{500 - bad}/500 random matrices agree with exhaustive counting"


def criterion_7():
    t = time.perf_counter()
    bikei = {k: catalog.bikei(k) for k in ("x1", "x2", "xp", "x8")}
    modules = {k: catalog.module(k) for k in ("ex-proper", "second", "z8", "z5")}
    count_bad = 0
    poly_bad = {k: 0 for k in modules}
    checked = 0
    for i, e in enumerate(catalog.available()):
        d = e.diagram
        want_c = {k: counting_invariant(d, X) for k, X in bikei.items()}
        want_p = {k: enhanced_polynomial(d, M) for k, M in modules.items()}
        for f in fuzz_moves(d, seed=1000 + i, k=FUZZ_VARIANTS):
            checked += 1
            count_bad += any(counting_invariant(f, X) != want_c[k] for k, X in bikei.items())
            for k, M in modules.items():
                poly_bad[k] += enhanced_polynomial(f, M) != want_p[k]
    # control: every Z_8 module on X1 that meets the R2 conditions
    control = [M for M in search_modules(bikei["x1"], 8) if reidemeister2_violation(M) is None]
    control_bad = 0
    for i, e in enumerate(catalog.available()):
        d = e.diagram
        want = [enhanced_polynomial(d, M) for M in control]
        for f in fuzz_moves(d, seed=1000 + i, k=FUZZ_VARIANTS):
            control_bad += [enhanced_polynomial(f, M) for M in control] != want
    elapsed = time.perf_counter() - t
    r2 = {k: reidemeister2_violation(M) is None for k, M in modules.items()}
    ok = count_bad == 0 and not any(poly_bad.values()) and elapsed < 300
    poly = ", ".join(f"{k}{'' if r2[k] else ' (fails R2 conditions)'}: {v}" for k, v in poly_bad.items())
    return ok, (f"{checked} fuzzed diagrams; counting mismatches {count_bad}; "
                f"polynomial mismatches by module {poly}; "
                f"control with the {len(control)} R2-sound Z_8 modules: {control_bad}; {elapsed:.1f}s")


def criterion_8():
    total = bad = 0
    for key in ("ex-proper", "second", "z8", "z5"):
        M = catalog.module(key)
        for e in catalog.available():
            for f in enumerate_colorings(e.diagram, M.base):
                total += 1
                bad += bead_system(f, M, flip=True).kernel_size() != bead_system(f, M).kernel_size()
    return bad == 0, f"{total - bad}/{total} colored diagrams keep their kernel size with flipped crossings"


def criterion_9():
    from bikeikit.bikei import verify

    X8 = catalog.bikei("x8")
    if not verify(*X8.tables()):
        return True, "skipped: the corrected table does not verify"
    a = counting_invariant(catalog.get("8^{-1,-1}_1").diagram, X8)
    b = counting_invariant(catalog.get("9^{1,-2}_1").diagram, X8)
    return (a, b) == (0, 4), f"table with row labels read as 1,2,3,4 verifies; counts ({a}, {b}), expected (0, 4)"


CRITERIA = {
    1: ("bikei enumeration", criterion_1),
    2: ("module search", criterion_2),
    3: ("counting invariants", criterion_3),
    4: ("worked Z_5 example", criterion_4),
    5: ("table reproduction", criterion_5),
    6: ("kernel-count oracle", criterion_6),
    7: ("move invariance", criterion_7),
    8: ("direction-flip soundness", criterion_8),
    9: ("contingent counting check", criterion_9),
}


def line(k: int) -> tuple[bool, str]:
    title, fn = CRITERIA[k]
    ok, detail = fn()
    return ok, f"criterion {k} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


def _check(k):
    from conftest import ACCEPTANCE_LINES

    ok, text = line(k)
    print(text)
    ACCEPTANCE_LINES.append(text)
    assert ok, text


def test_criterion_1_bikei_enumeration():
    _check(1)


def test_criterion_2_module_search():
    _check(2)


def test_criterion_3_counting_invariants():
    _check(3)


def test_criterion_4_worked_z5_example():
    _check(4)


def test_criterion_5_table_reproduction():
    _check(5)


def test_criterion_6_kernel_count_oracle():
    _check(6)


def test_criterion_7_move_invariance():
    _check(7)


def test_criterion_8_direction_flip():
    _check(8)


def test_criterion_9_contingent_check():
    _check(9)


if __name__ == "__main__":
    results = [line(k) for k in CRITERIA]
    for _, text in results:
        print(text)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
