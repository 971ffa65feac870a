"""Finite bikei on {1..n}.

A bikei is stored as two n x n operation tables.  ``under[x][y]`` is
x under-star y and ``over[x][y]`` is x over-star y.  Internally everything
is 0-indexed; the public constructors and serializers speak the 1-indexed
convention used for printed operation tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import InputError, Rejection

Table = tuple[tuple[int, ...], ...]

#: default refusal bound for :func:`enumerate_bikei`
MAX_ENUMERATE = 4

AXIOM_ORDER = ("i", "ii.1", "ii.2", "ii.3", "ii.4", "iii.1", "iii.2", "iii.3")


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]  # 1-indexed elements

    def __str__(self) -> str:
        return f"axiom ({self.axiom}) fails at {self.witness}"


@dataclass(frozen=True)
class Report:
    """Outcome of an axiom check; truthy when every axiom holds."""

    violation: Violation | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else str(self.violation)


def _freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _check_shape(rows, n: int, name: str) -> None:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"{name} table must be {n}x{n}")


def _first_violation(U: Table, O: Table) -> Violation | None:
    n = len(U)
    w = lambda *xs: tuple(x + 1 for x in xs)  # noqa: E731
    for x in range(n):
        if U[x][x] != O[x][x]:
            return Violation("i", w(x))
    pair_laws = (
        ("ii.1", lambda x, y: U[U[x][y]][y] == x),
        ("ii.2", lambda x, y: O[O[x][y]][y] == x),
        ("ii.3", lambda x, y: U[x][O[y][x]] == U[x][y]),
        ("ii.4", lambda x, y: O[x][U[y][x]] == O[x][y]),
    )
    for label, law in pair_laws:
        for x, y in product(range(n), repeat=2):
            if not law(x, y):
                return Violation(label, w(x, y))
    triple_laws = (
        ("iii.1", lambda x, y, z: U[U[x][y]][U[z][y]] == U[U[x][z]][O[y][z]]),
        ("iii.2", lambda x, y, z: O[U[x][y]][U[z][y]] == U[O[x][z]][O[y][z]]),
        ("iii.3", lambda x, y, z: O[O[x][y]][O[z][y]] == O[O[x][z]][U[y][z]]),
    )
    for label, law in triple_laws:
        for x, y, z in product(range(n), repeat=3):
            if not law(x, y, z):
                return Violation(label, w(x, y, z))
    return None


def verify(under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]) -> Report:
    """Check the bikei axioms for a pair of 1-indexed operation tables.

    Axioms are tried in the fixed order (i), (ii.1)-(ii.4), (iii.1)-(iii.3)
    and the first failure is reported with its witness.
    """
    n = len(under)
    if n == 0:
        raise InputError("a bikei needs at least one element")
    _check_shape(under, n, "under")
    _check_shape(over, n, "over")
    for row in list(under) + list(over):
        for v in row:
            if not (isinstance(v, int) and 1 <= v <= n):
                raise InputError(f"table entry {v!r} outside 1..{n}")
    U = tuple(tuple(v - 1 for v in row) for row in under)
    O = tuple(tuple(v - 1 for v in row) for row in over)
    return Report(_first_violation(U, O))


@dataclass(frozen=True)
class Bikei:
    """A verified finite bikei; tables are 0-indexed."""

    under: Table
    over: Table

    def __post_init__(self):
        v = _first_violation(self.under, self.over)
        if v is not None:
            raise Rejection(f"not a bikei: {v}", v.axiom, v.witness)

    @classmethod
    def from_tables(cls, under, over) -> "Bikei":
        """Build from 1-indexed tables, raising :class:`Rejection` on failure."""
        report = verify(under, over)
        if not report:
            v = report.violation
            raise Rejection(f"not a bikei: {v}", v.axiom, v.witness)
        return cls(
            _freeze([[v - 1 for v in row] for row in under]),
            _freeze([[v - 1 for v in row] for row in over]),
        )

    @property
    def n(self) -> int:
        return len(self.under)

    def u(self, x: int, y: int) -> int:
        return self.under[x][y]

    def o(self, x: int, y: int) -> int:
        return self.over[x][y]

    def is_kei(self) -> bool:
        return all(self.over[x][y] == x for x in range(self.n) for y in range(self.n))

    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """Both tables, 1-indexed."""
        return (
            [[v + 1 for v in row] for row in self.under],
            [[v + 1 for v in row] for row in self.over],
        )

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.under + self.over for v in row)

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        U, O = self.tables()
        lines = [str(self.n)]
        lines += [" ".join(map(str, row)) for row in U]
        lines.append("")
        lines += [" ".join(map(str, row)) for row in O]
        return "\n".join(lines) + "\n"

    def to_block(self) -> str:
        """One line per element: ``under row | over row``."""
        U, O = self.tables()
        return "\n".join(
            " ".join(map(str, u)) + " | " + " ".join(map(str, o)) for u, o in zip(U, O)
        )

    def to_json(self) -> dict:
        U, O = self.tables()
        return {"n": self.n, "under": U, "over": O}

    @classmethod
    def from_json(cls, data: dict) -> "Bikei":
        try:
            under, over = data["under"], data["over"]
        except (KeyError, TypeError) as exc:
            raise InputError("bikei JSON needs 'under' and 'over'") from exc
        if "n" in data and data["n"] != len(under):
            raise InputError("bikei JSON 'n' disagrees with table size")
        return cls.from_tables(under, over)

    @classmethod
    def from_text(cls, text: str) -> "Bikei":
        """Parse the text format, or JSON if the text starts with ``{``."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_json(json.loads(stripped))
        rows = [line.split() for line in stripped.splitlines() if line.strip()]
        try:
            n = int(rows[0][0])
            if len(rows[0]) != 1 or len(rows) != 2 * n + 1:
                raise InputError(f"expected 1 + 2*{n} non-blank lines")
            data = [[int(v) for v in row] for row in rows[1:]]
        except (IndexError, ValueError) as exc:
            raise InputError(f"malformed bikei text: {exc}") from exc
        return cls.from_tables(data[:n], data[n:])


# -- constructions -------------------------------------------------------


def trivial(n: int) -> Bikei:
    """x under y = x over y = x."""
    row = lambda x: tuple(x for _ in range(n))  # noqa: E731
    T = tuple(row(x) for x in range(n))
    return Bikei(T, T)


def takasaki(m: int) -> Bikei:
    """Takasaki kei on Z_m: x under y = 2y - x, x over y = x.

    Element k of {1..m} stands for the residue k - 1.
    """
    if m < 1:
        raise InputError("takasaki needs m >= 1")
    U = tuple(tuple((2 * y - x) % m for y in range(m)) for x in range(m))
    O = tuple(tuple(x for _ in range(m)) for x in range(m))
    return Bikei(U, O)


def alexander(n: int, t: int, s: int, r: int) -> Bikei:
    """Alexander bikei on Z_n: x under y = t x + s y, x over y = r x."""
    if n < 1:
        raise InputError("alexander needs n >= 1")
    t, s, r = t % n, s % n, r % n
    conditions = (
        ("t^2=1", (t * t - 1) % n == 0),
        ("r^2=1", (r * r - 1) % n == 0),
        ("s(t+r)=0", s * (t + r) % n == 0),
        ("r=t+s", (r - t - s) % n == 0),
    )
    for label, holds in conditions:
        if not holds:
            raise Rejection(f"Alexander parameters violate {label} in Z_{n}", label, (t, s, r))
    U = tuple(tuple((t * x + s * y) % n for y in range(n)) for x in range(n))
    O = tuple(tuple((r * x) % n for _ in range(n)) for x in range(n))
    # the four conditions above do not imply the axioms: (ii.1) also needs
    # s(t+1)=0 and (ii.3) needs s(r-1)=0, e.g. (t,s,r)=(1,1,2) in Z_3 fails
    try:
        return Bikei(U, O)
    except Rejection as exc:
        raise Rejection(
            f"Alexander parameters (t,s,r)=({t},{s},{r}) in Z_{n} meet t^2=r^2=1, s(t+r)=0, r=t+s "
            f"but the tables fail the bikei axioms: {exc}",
            exc.label,
            exc.witness,
        ) from exc


def is_hom(f: Sequence[int], X: Bikei, Y: Bikei) -> bool:
    """Whether the 1-indexed map ``f`` (``f[x-1]`` is the image of x) is a bikei map."""
    if len(f) != X.n or any(not 1 <= v <= Y.n for v in f):
        raise InputError("map must send every element of the source into 1..|target|")
    g = [v - 1 for v in f]
    return all(
        g[X.under[x][y]] == Y.under[g[x]][g[y]] and g[X.over[x][y]] == Y.over[g[x]][g[y]]
        for x in range(X.n)
        for y in range(X.n)
    )


# -- enumeration ---------------------------------------------------------


def involutions(n: int) -> list[tuple[int, ...]]:
    """All involutive permutations of range(n), lexicographically."""
    out = []

    def grow(perm: list[int | None], i: int):
        if i == n:
            out.append(tuple(perm))
            return
        if perm[i] is not None:
            grow(perm, i + 1)
            return
        for j in range(i, n):
            if perm[j] is None:
                perm[i], perm[j] = j, i
                grow(perm, i + 1)
                perm[i] = perm[j] = None

    grow([None] * n, 0)
    return sorted(out)


def _partial_ok(U, O, n) -> bool:
    """Check every axiom instance whose lookups are all already defined."""

    def get(T, a, b):
        if a is None or b is None or T[b] is None:
            return None
        return T[b][a]  # tables are stored column-major during the search

    for x in range(n):
        a, b = get(U, x, x), get(O, x, x)
        if a is not None and b is not None and a != b:
            return False
    for x, y in product(range(n), repeat=2):
        lhs = get(U, x, get(O, y, x))
        rhs = get(U, x, y)
        if lhs is not None and rhs is not None and lhs != rhs:
            return False
        lhs = get(O, x, get(U, y, x))
        rhs = get(O, x, y)
        if lhs is not None and rhs is not None and lhs != rhs:
            return False
    for x, y, z in product(range(n), repeat=3):
        uxy, uzy, uxz, oyz = get(U, x, y), get(U, z, y), get(U, x, z), get(O, y, z)
        oxz, oxy, ozy, uyz = get(O, x, z), get(O, x, y), get(O, z, y), get(U, y, z)
        for lhs, rhs in (
            (get(U, uxy, uzy), get(U, uxz, oyz)),
            (get(O, uxy, uzy), get(U, oxz, oyz)),
            (get(O, oxy, ozy), get(O, oxz, uyz)),
        ):
            if lhs is not None and rhs is not None and lhs != rhs:
                return False
    return True


def iter_bikei(n: int) -> Iterator[Bikei]:
    """Backtracking search; each column of either table is an involution (ii.1, ii.2)."""
    invs = involutions(n)
    # column-major partial tables: U[y] is the column y of the under table
    U: list = [None] * n
    O: list = [None] * n
    found = []

    def step(k: int):
        if k == 2 * n:
            under = tuple(tuple(U[y][x] for y in range(n)) for x in range(n))
            over = tuple(tuple(O[y][x] for y in range(n)) for x in range(n))
            found.append(Bikei(under, over))
            return
        table = U if k % 2 == 0 else O
        y = k // 2
        for col in invs:
            table[y] = col
            if _partial_ok(U, O, n):
                step(k + 1)
        table[y] = None

    step(0)
    found.sort(key=lambda b: b.flat())
    yield from found


def enumerate_bikei(n: int, max_n: int = MAX_ENUMERATE) -> list[Bikei]:
    """Every bikei structure on {1..n}, sorted by flattened 1-indexed tables."""
    if n < 1:
        raise InputError("n must be positive")
    if n > max_n:
        from .errors import WorkBoundError

        raise WorkBoundError(f"refusing to enumerate bikei of order {n} > bound {max_n}")
    return list(iter_bikei(n))
