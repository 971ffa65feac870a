"""Arithmetic in Z_n and solution counting for homogeneous systems over Z_n.

Matrices are plain nested lists of Python ints.  Python ints are
arbitrary precision, so the Smith reduction below never overflows no
matter how large intermediate entries grow.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .errors import InputError

Matrix = Sequence[Sequence[int]]


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise InputError(f"modulus must be an integer >= 2, got {n!r}")
    return n


def reduce_matrix(A: Matrix, n: int) -> list[list[int]]:
    """Return a copy of ``A`` with every entry reduced into ``[0, n)``."""
    return [[int(v) % n for v in row] for row in A]


def units(n: int) -> list[int]:
    """Units of Z_n in increasing order."""
    return [u for u in range(1, n) if gcd(u, n) == 1] if n > 1 else []


def inverse(a: int, n: int) -> int:
    return pow(a, -1, n)


def smith_diagonal(A: Matrix) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix.

    ``r`` is the rank of ``A`` over Q.  Pivots are chosen by smallest
    nonzero absolute value, which keeps the entries small for the tiny
    matrices we care about.
    """
    M = [list(map(int, row)) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if M[i][j] and (pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        M[top], M[pi] = M[pi], M[top]
        for row in M:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = M[top][top]
            dirty = False
            for i in range(top + 1, rows):
                q = M[i][top] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[top])]
                if M[i][top]:
                    dirty = True
            for j in range(top + 1, cols):
                q = M[top][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[top]
                if M[top][j]:
                    dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; move it into place
                best = None
                for i in range(top + 1, rows):
                    if M[i][top] and (best is None or abs(M[i][top]) < abs(best[2])):
                        best = (i, None, M[i][top])
                for j in range(top + 1, cols):
                    if M[top][j] and (best is None or abs(M[top][j]) < abs(best[2])):
                        best = (None, j, M[top][j])
                i, j, _ = best
                if i is not None:
                    M[top], M[i] = M[i], M[top]
                else:
                    for row in M:
                        row[top], row[j] = row[j], row[top]
                continue
            # pivot now isolated; enforce divisibility against the remaining block
            bad = next(
                ((i, j) for i in range(top + 1, rows) for j in range(top + 1, cols) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            M[top] = [a + b for a, b in zip(M[top], M[bad[0]])]
        diag.append(abs(M[top][top]))
        top += 1
    return diag


def kernel_count(A: Matrix, n: int, cols: int | None = None) -> int:
    """Number of ``x`` in ``(Z_n)^cols`` with ``A x = 0 (mod n)``.

    ``cols`` is only needed when ``A`` has no rows (an empty system), in
    which case every vector is a solution.
    """
    check_modulus(n)
    if cols is None:
        if not A:
            raise InputError("cols must be given for a matrix with no rows")
        cols = len(A[0])
    if not A:
        return n**cols
    diag = smith_diagonal(reduce_matrix(A, n))
    count = n ** (cols - len(diag))
    for d in diag:
        count *= gcd(d, n)
    return count
