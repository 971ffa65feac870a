"""Bikei modules over Z_m.

A bikei module over a bikei X assigns ring elements ``t[x][y]``,
``s[x][y]`` and ``r[x][y]`` to each ordered pair of elements.  They are
the coefficients of the linear bead equations at a crossing whose
under-strand arrives with color x and whose over-strand arrives with y::

    d = t[x][y] * a + s[x][y] * b
    c = r[x][y] * b

All matrices are indexed by 0-based elements; the block-matrix text form
``[T | S | R]`` is row x, column y.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from . import ring
from .bikei import Bikei
from .errors import InputError, Rejection, WorkBoundError

AXIOM_ORDER = (
    "0.i", "0.ii", "0.iii", "i.i",
    "iii.i", "iii.ii", "iii.iii", "iii.iv", "iii.v", "iii.vi",
)

#: largest raw search space the unpruned filter will walk
NAIVE_WORK_BOUND = 2_000_000

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ModuleViolation:
    axiom: str
    witness: tuple[int, ...]  # 1-indexed bikei elements

    def __str__(self) -> str:
        return f"axiom ({self.axiom}) fails at {self.witness}"


@dataclass(frozen=True)
class BikeiModule:
    base: Bikei
    modulus: int
    T: Matrix
    S: Matrix
    R: Matrix

    def __post_init__(self):
        v = first_violation(self.base, self.modulus, self.T, self.S, self.R)
        if v is not None:
            raise Rejection(f"not a bikei module: {v}", v.axiom, v.witness)

    @classmethod
    def from_matrices(cls, base: Bikei, modulus: int, T, S, R) -> "BikeiModule":
        T, S, R = (_normalize(M, base.n, modulus, name) for M, name in ((T, "T"), (S, "S"), (R, "R")))
        return cls(base, modulus, T, S, R)

    def coefficients(self, x: int, y: int) -> tuple[int, int, int]:
        return self.T[x][y], self.S[x][y], self.R[x][y]

    def key(self) -> tuple[int, ...]:
        return tuple(v for M in (self.T, self.S, self.R) for row in M for v in row)

    def to_block(self) -> str:
        """The ``[T | S | R]`` block matrix, one row per element."""
        return "\n".join(
            " | ".join(" ".join(map(str, M[x])) for M in (self.T, self.S, self.R))
            for x in range(self.base.n)
        )

    def to_json(self) -> dict:
        return {
            "bikei": self.base.to_json(),
            "modulus": self.modulus,
            "T": [list(r) for r in self.T],
            "S": [list(r) for r in self.S],
            "R": [list(r) for r in self.R],
        }

    @classmethod
    def from_json(cls, data: dict, base: Bikei | None = None) -> "BikeiModule":
        try:
            if base is None:
                base = Bikei.from_json(data["bikei"])
            return cls.from_matrices(base, int(data["modulus"]), data["T"], data["S"], data["R"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"module JSON is missing {exc}") from exc

    @classmethod
    def from_block(cls, base: Bikei, modulus: int, text: str) -> "BikeiModule":
        T, S, R = parse_block(text, base.n)
        return cls.from_matrices(base, modulus, T, S, R)


def parse_block(text: str, n: int) -> tuple[list, list, list]:
    """Parse ``n`` rows of ``3n`` integers; ``|`` separators are optional."""
    rows = [line.replace("|", " ").split() for line in text.strip().splitlines() if line.strip()]
    if len(rows) != n or any(len(r) != 3 * n for r in rows):
        raise InputError(f"block matrix must have {n} rows of {3 * n} entries")
    try:
        vals = [[int(v) for v in r] for r in rows]
    except ValueError as exc:
        raise InputError(f"non-integer block matrix entry: {exc}") from exc
    return (
        [r[:n] for r in vals],
        [r[n : 2 * n] for r in vals],
        [r[2 * n :] for r in vals],
    )


def _normalize(M, n: int, m: int, name: str) -> Matrix:
    if len(M) != n or any(len(row) != n for row in M):
        raise InputError(f"{name} must be {n}x{n} to match the base bikei")
    for row in M:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < m:
                raise InputError(f"{name} entry {v!r} outside [0, {m})")
    return tuple(tuple(row) for row in M)


# -- axioms --------------------------------------------------------------
#
# Each law maps a lookup ``get(block, x, y)`` and the bikei operations to a
# residue that must vanish mod m.  Writing them once lets the verifier and
# the pruned search share a single source of truth.

Law = Callable[..., int]


def _pair_laws(X: Bikei):
    U, O = X.under, X.over

    def partner(x, y):
        return U[x][y], O[y][x]

    return (
        ("0.i", lambda g, x, y: g("T", x, y) * g("T", *partner(x, y)) - 1,
         lambda x, y: (("T", x, y), ("T",) + partner(x, y))),
        ("0.ii", lambda g, x, y: g("R", x, y) * g("R", *partner(x, y)) - 1,
         lambda x, y: (("R", x, y), ("R",) + partner(x, y))),
        ("0.iii", lambda g, x, y: (g("T", x, y) + g("R", x, y)) * g("S", *partner(x, y)),
         lambda x, y: (("T", x, y), ("R", x, y), ("S",) + partner(x, y))),
    )


def _triple_laws(X: Bikei):
    U, O = X.under, X.over
    laws = (
        ("iii.i",
         lambda g, x, y, z: g("R", O[y][x], O[z][x]) * g("R", x, z) - g("R", U[x][y], O[z][y]) * g("R", y, z),
         lambda x, y, z: (("R", O[y][x], O[z][x]), ("R", x, z), ("R", U[x][y], O[z][y]), ("R", y, z))),
        ("iii.ii",
         lambda g, x, y, z: g("R", U[x][z], U[y][z]) * g("T", y, z) - g("T", O[y][x], O[z][x]) * g("R", x, y),
         lambda x, y, z: (("R", U[x][z], U[y][z]), ("T", y, z), ("T", O[y][x], O[z][x]), ("R", x, y))),
        ("iii.iii",
         lambda g, x, y, z: g("R", U[x][z], U[y][z]) * g("S", y, z) - g("S", O[y][x], O[z][x]) * g("R", x, z),
         lambda x, y, z: (("R", U[x][z], U[y][z]), ("S", y, z), ("S", O[y][x], O[z][x]), ("R", x, z))),
        ("iii.iv",
         lambda g, x, y, z: g("T", U[x][z], U[y][z]) * g("T", x, z) - g("T", U[x][y], O[z][y]) * g("T", x, y),
         lambda x, y, z: (("T", U[x][z], U[y][z]), ("T", x, z), ("T", U[x][y], O[z][y]), ("T", x, y))),
        ("iii.v",
         lambda g, x, y, z: g("S", U[x][z], U[y][z]) * g("T", y, z) - g("T", U[x][y], O[z][y]) * g("S", x, y),
         lambda x, y, z: (("S", U[x][z], U[y][z]), ("T", y, z), ("T", U[x][y], O[z][y]), ("S", x, y))),
        ("iii.vi",
         lambda g, x, y, z: g("T", U[x][z], U[y][z]) * g("S", x, z)
         + g("S", U[x][z], U[y][z]) * g("S", y, z)
         - g("S", U[x][y], O[z][y]) * g("R", y, z),
         lambda x, y, z: (("T", U[x][z], U[y][z]), ("S", x, z), ("S", U[x][z], U[y][z]),
                          ("S", y, z), ("S", U[x][y], O[z][y]), ("R", y, z))),
    )
    return laws


def _instances(X: Bikei):
    """Every axiom instance in reporting order: (label, witness, slots, residue)."""
    n = X.n
    out = []
    pair = _pair_laws(X)
    for label, law, slots in pair:
        for x, y in product(range(n), repeat=2):
            out.append((label, (x, y), slots(x, y), lambda g, law=law, x=x, y=y: law(g, x, y)))
    for x in range(n):
        out.append(("i.i", (x,), (("T", x, x), ("S", x, x), ("R", x, x)),
                    lambda g, x=x: g("T", x, x) + g("S", x, x) - g("R", x, x)))
    for label, law, slots in _triple_laws(X):
        for x, y, z in product(range(n), repeat=3):
            out.append((label, (x, y, z), slots(x, y, z),
                        lambda g, law=law, x=x, y=y, z=z: law(g, x, y, z)))
    return out


def first_violation(X: Bikei, m: int, T, S, R) -> ModuleViolation | None:
    blocks = {"T": T, "S": S, "R": R}
    g = lambda b, x, y: blocks[b][x][y]  # noqa: E731
    for label, witness, _, residue in _instances(X):
        if residue(g) % m:
            return ModuleViolation(label, tuple(w + 1 for w in witness))
    return None


@dataclass(frozen=True)
class ModuleReport:
    violation: ModuleViolation | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else str(self.violation)


def verify_module(base: Bikei, modulus: int, T, S, R) -> ModuleReport:
    """Check all ten axiom families; the first failure is reported with its witness."""
    ring.check_modulus(modulus)
    T, S, R = (_normalize(M, base.n, modulus, name) for M, name in ((T, "T"), (S, "S"), (R, "R")))
    return ModuleReport(first_violation(base, modulus, T, S, R))


def reidemeister2_violation(M: BikeiModule) -> ModuleViolation | None:
    """First failure of the conditions that make beads survive a direct R2 move.

    Two parallel strands with colors x (under) and y (over) pass through
    two crossings.  Between them the under strand carries x' = x under y,
    and reading the second crossing from its own canonical side, the bead
    maps have to undo the first one::

        t[x'][y] * t[x][y] = 1
        t[x'][y] * s[x][y] + s[x'][y] = 0
        r[x'][y] = r[x][y]

    These do not follow from the module axioms as stated.  A module that
    fails them can give different enhanced polynomials on diagrams related
    by an unoriented R2 move.  Labels are ``r2.t``, ``r2.s`` and ``r2.r``.
    """
    X, m = M.base, M.modulus
    for x, y in product(range(X.n), repeat=2):
        xp = X.under[x][y]
        t, s, r = M.coefficients(x, y)
        tp, sp, rp = M.coefficients(xp, y)
        for label, residue in (("r2.t", tp * t - 1), ("r2.s", tp * s + sp), ("r2.r", rp - r)):
            if residue % m:
                return ModuleViolation(label, (x + 1, y + 1))
    return None


def constant_module(modulus: int, t: int, s: int, r: int, base: Bikei) -> BikeiModule:
    """The module with every coefficient constant, if it satisfies the axioms."""
    n = base.n
    t, s, r = t % modulus, s % modulus, r % modulus
    T, S, R = ([[c] * n for _ in range(n)] for c in (t, s, r))
    report = verify_module(base, modulus, T, S, R)
    if not report:
        v = report.violation
        raise Rejection(f"constant coefficients (t,s,r)=({t},{s},{r}) rejected: {v}", v.axiom, v.witness)
    return BikeiModule.from_matrices(base, modulus, T, S, R)


# -- search --------------------------------------------------------------


def _slot_order(n: int) -> list[tuple[str, int, int]]:
    # T and R first: their entries are units and (0.i), (0.ii), (iii.i),
    # (iii.ii), (iii.iv) close over them alone, so S is only branched on
    # after most of the pruning has happened.
    return [(b, x, y) for b in ("T", "R", "S") for x in range(n) for y in range(n)]


class _Plan:
    def __init__(self, X: Bikei, m: int):
        self.X, self.m = X, m
        self.order = _slot_order(X.n)
        self.index = {slot: k for k, slot in enumerate(self.order)}
        self.domains = [ring.units(m) if b in "TR" else list(range(m)) for b, _, _ in self.order]
        self.checks: list[list] = [[] for _ in self.order]
        for _, _, slots, residue in _instances(X):
            self.checks[max(self.index[s] for s in slots)].append(residue)

    def run(self, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
        order, index, m = self.order, self.index, self.m
        vals: list[int | None] = [None] * len(order)
        g = lambda b, x, y: vals[index[(b, x, y)]]  # noqa: E731

        def ok(k):
            return all(residue(g) % m == 0 for residue in self.checks[k])

        for k, v in enumerate(prefix):
            vals[k] = v
            if not ok(k):
                return

        def step(k):
            if k == len(order):
                yield tuple(vals)
                return
            for v in self.domains[k]:
                vals[k] = v
                if ok(k):
                    yield from step(k + 1)
            vals[k] = None

        yield from step(len(prefix))

    def to_module(self, vals: Sequence[int]) -> BikeiModule:
        n = self.X.n
        blocks = {b: [[0] * n for _ in range(n)] for b in "TSR"}
        for (b, x, y), v in zip(self.order, vals):
            blocks[b][x][y] = v
        return BikeiModule.from_matrices(self.X, self.m, blocks["T"], blocks["S"], blocks["R"])


def _run_partition(args):
    X, m, prefix = args
    return list(_Plan(X, m).run(prefix))


def search_modules(
    base: Bikei,
    modulus: int,
    *,
    pruned: bool = True,
    workers: int | None = None,
    work_bound: int = NAIVE_WORK_BOUND,
    progress: Callable[[str], None] | None = None,
) -> list[BikeiModule]:
    """All bikei modules over ``base`` with coefficients in Z_modulus.

    The default backtracking search checks each axiom instance as soon as
    every coefficient it mentions has been assigned.  ``pruned=False``
    walks the raw cartesian space instead and refuses when that space has
    more than ``work_bound`` points.  With ``workers > 1`` the search is
    split on the first row of T and run in worker processes; the merged
    result is identical to the serial one.
    """
    ring.check_modulus(modulus)
    n = base.n
    if not pruned:
        return _naive_search(base, modulus, work_bound)
    plan = _Plan(base, modulus)
    if workers is None:
        workers = int(os.environ.get("BIKEIKIT_WORKERS", "1"))
    if workers <= 1:
        found = list(plan.run())
    else:
        prefixes = list(product(*plan.domains[:n]))
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, part in enumerate(pool.map(_run_partition, [(base, modulus, p) for p in prefixes])):
                found.extend(part)
                if progress:
                    progress(f"partition {i + 1}/{len(prefixes)}: {len(found)} modules so far")
    modules = [plan.to_module(v) for v in found]
    modules.sort(key=BikeiModule.key)
    return modules


def _naive_search(base: Bikei, m: int, work_bound: int) -> list[BikeiModule]:
    n = base.n
    space = m ** (3 * n * n)
    if space > work_bound:
        raise WorkBoundError(f"raw search space {m}^{3 * n * n} = {space} exceeds work bound {work_bound}")
    out = []
    for flat in product(range(m), repeat=3 * n * n):
        T = [flat[i * n : (i + 1) * n] for i in range(n)]
        S = [flat[n * n + i * n : n * n + (i + 1) * n] for i in range(n)]
        R = [flat[2 * n * n + i * n : 2 * n * n + (i + 1) * n] for i in range(n)]
        if first_violation(base, m, T, S, R) is None:
            out.append(BikeiModule.from_matrices(base, m, [list(r) for r in T], [list(r) for r in S], [list(r) for r in R]))
    out.sort(key=BikeiModule.key)
    return out


def load_module(text: str, base: Bikei | None = None) -> BikeiModule:
    return BikeiModule.from_json(json.loads(text), base)
