"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

from itertools import product


def kernel_count(A, n, cols):
    """Count x in (Z_n)^cols with A x = 0 by trying every vector."""
    count = 0
    for x in product(range(n), repeat=cols):
        if all(sum(a * v for a, v in zip(row, x)) % n == 0 for row in A):
            count += 1
    return count


def _bikei_ok(U, O, n):
    r = range(n)
    if any(U[x][x] != O[x][x] for x in r):
        return False
    for x, y in product(r, repeat=2):
        if U[U[x][y]][y] != x or O[O[x][y]][y] != x:
            return False
        if U[x][O[y][x]] != U[x][y] or O[x][U[y][x]] != O[x][y]:
            return False
    for x, y, z in product(r, repeat=3):
        if U[U[x][y]][U[z][y]] != U[U[x][z]][O[y][z]]:
            return False
        if O[U[x][y]][U[z][y]] != U[O[x][z]][O[y][z]]:
            return False
        if O[O[x][y]][O[z][y]] != O[O[x][z]][U[y][z]]:
            return False
    return True


def bikei_tables(n):
    """All (under, over) pairs on range(n) passing the axioms, 0-indexed.

    Each table is drawn from all n^(n*n) tables that pass the one-table
    involution law, then pairs are filtered by the full axiom list.
    """
    def tables():
        out = []
        for flat in product(range(n), repeat=n * n):
            T = [flat[i * n:(i + 1) * n] for i in range(n)]
            if all(T[T[x][y]][y] == x for x, y in product(range(n), repeat=2)):
                out.append(tuple(tuple(r) for r in T))
        return out

    cands = tables()
    found = [(U, O) for U in cands for O in cands if _bikei_ok(U, O, n)]
    return sorted(found, key=lambda p: tuple(v + 1 for t in p for row in t for v in row))


def _ends(d):
    for c in d.crossings:
        yield "X", (c.a, c.b, c.c, c.d)
    for v in d.marked_vertices:
        yield "V", v.ccw


def colorings(d, X):
    """Every 1-indexed color vector (semiarcs then free loops) by brute force."""
    U, O, n, m = X.under, X.over, X.n, d.semiarcs
    out = []
    for colors in product(range(n), repeat=m):
        c = lambda l: colors[l - 1]  # noqa: E731
        ok = True
        for kind, e in _ends(d):
            if kind == "X":
                a, b, cc, dd = map(c, e)
                ok = dd == U[a][b] and cc == O[b][a]
            else:
                ok = len(set(map(c, e))) == 1
            if not ok:
                break
        if ok:
            for loops in product(range(n), repeat=d.free_loops):
                out.append(tuple(v + 1 for v in colors + loops))
    return sorted(out)


def bead_count(d, f_colors, M):
    """Bead colorings of one colored diagram by trying every assignment.

    ``f_colors`` is the 0-indexed semiarc color vector.
    """
    m = M.modulus
    count = 0
    for beads in product(range(m), repeat=d.semiarcs):
        b = lambda l: beads[l - 1]  # noqa: E731
        ok = True
        for kind, e in _ends(d):
            if kind == "X":
                x, y = f_colors[e[0] - 1], f_colors[e[1] - 1]
                t, s, r = M.coefficients(x, y)
                ok = (t * b(e[0]) + s * b(e[1]) - b(e[3])) % m == 0 and (r * b(e[1]) - b(e[2])) % m == 0
            else:
                ok = len(set(map(b, e))) == 1
            if not ok:
                break
        count += ok
    return count * m ** d.free_loops


def module_ok(X, m, T, S, R):
    """The ten module axioms, transcribed one per line."""
    u = lambda a, b: X.under[a][b]  # noqa: E731
    o = lambda a, b: X.over[a][b]  # noqa: E731
    t = lambda a, b: T[a][b]  # noqa: E731
    s = lambda a, b: S[a][b]  # noqa: E731
    r = lambda a, b: R[a][b]  # noqa: E731
    E = range(X.n)
    for x, y in product(E, repeat=2):
        p, q = u(x, y), o(y, x)
        if (t(x, y) * t(p, q) - 1) % m or (r(x, y) * r(p, q) - 1) % m:
            return False
        if (t(x, y) + r(x, y)) * s(p, q) % m:
            return False
    if any((t(x, x) + s(x, x) - r(x, x)) % m for x in E):
        return False
    for x, y, z in product(E, repeat=3):
        checks = (
            r(o(y, x), o(z, x)) * r(x, z) - r(u(x, y), o(z, y)) * r(y, z),
            r(u(x, z), u(y, z)) * t(y, z) - t(o(y, x), o(z, x)) * r(x, y),
            r(u(x, z), u(y, z)) * s(y, z) - s(o(y, x), o(z, x)) * r(x, z),
            t(u(x, z), u(y, z)) * t(x, z) - t(u(x, y), o(z, y)) * t(x, y),
            s(u(x, z), u(y, z)) * t(y, z) - t(u(x, y), o(z, y)) * s(x, y),
            t(u(x, z), u(y, z)) * s(x, z) + s(u(x, z), u(y, z)) * s(y, z) - s(u(x, y), o(z, y)) * r(y, z),
        )
        if any(c % m for c in checks):
            return False
    return True


def module_triples(X, m):
    """All flattened (T, S, R) passing the axioms, by filtering the raw space."""
    n = X.n
    out = []
    for flat in product(range(m), repeat=3 * n * n):
        blocks = [[flat[k * n * n + i * n: k * n * n + (i + 1) * n] for i in range(n)] for k in range(3)]
        if module_ok(X, m, *blocks):
            out.append(flat)
    return out
