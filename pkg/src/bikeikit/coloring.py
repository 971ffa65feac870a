"""Bikei colorings of marked graph diagrams and the counting invariant.

At a crossing ``X(a,b,c,d)`` with under-arc color x on ``a`` and
over-arc color y on ``b`` the outgoing arcs are forced::

    color(d) = x under y        color(c) = y over x

Reading the crossing from the other side gives the same constraint
because (x, y) -> (x under y, y over x) is an involution on pairs.  At a
marked vertex all four semiarcs carry one color.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bikei import Bikei
from .diagram import Crossing, MarkedGraphDiagram, vertex_classes


@dataclass(frozen=True)
class Coloring:
    diagram: MarkedGraphDiagram
    bikei: Bikei
    colors: tuple[int, ...]  # 0-indexed color of semiarc label k at position k-1
    loop_colors: tuple[int, ...] = ()

    def vector(self) -> tuple[int, ...]:
        """1-indexed colors: semiarcs in label order, then free loops."""
        return tuple(c + 1 for c in self.colors + self.loop_colors)

    def color(self, label: int) -> int:
        return self.colors[label - 1]


def crossing_ok(X: Bikei, c: Crossing, color) -> bool:
    x, y = color(c.a), color(c.b)
    return color(c.d) == X.under[x][y] and color(c.c) == X.over[y][x]


def is_coloring(d: MarkedGraphDiagram, X: Bikei, colors) -> bool:
    """Check a 0-indexed color vector against every local constraint."""
    color = lambda l: colors[l - 1]  # noqa: E731
    if not all(crossing_ok(X, c, color) for c in d.crossings):
        return False
    return all(len({color(l) for l in v.ccw}) == 1 for v in d.marked_vertices)


def _class_system(d: MarkedGraphDiagram):
    cls = vertex_classes(d)
    reps = sorted(set(cls))
    index = {r: i for i, r in enumerate(reps)}
    var = [index[r] for r in cls]
    cons = [(var[c.a - 1], var[c.b - 1], var[c.c - 1], var[c.d - 1]) for c in d.crossings]
    return var, len(reps), cons


def _solve(n_vars: int, cons, X: Bikei):
    """All assignments of the class variables, lexicographic in variable order."""
    U, O = X.under, X.over
    touching: list[list[int]] = [[] for _ in range(n_vars)]
    for k, (a, b, c, d) in enumerate(cons):
        for v in {a, b, c, d}:
            touching[v].append(k)

    def propagate(vals, queue):
        while queue:
            v = queue.pop()
            for k in touching[v]:
                a, b, c, d = cons[k]
                va, vb, vc, vd = vals[a], vals[b], vals[c], vals[d]
                if va is not None and vb is not None:
                    pairs = ((d, U[va][vb]), (c, O[vb][va]))
                elif vc is not None and vd is not None:
                    pairs = ((a, U[vd][vc]), (b, O[vc][vd]))
                else:
                    continue
                for w, val in pairs:
                    if vals[w] is None:
                        vals[w] = val
                        queue.append(w)
                    elif vals[w] != val:
                        return False
        return True

    out = []

    def search(vals, start):
        for v in range(start, n_vars):
            if vals[v] is None:
                break
        else:
            out.append(tuple(vals))
            return
        for x in range(X.n):
            trial = list(vals)
            trial[v] = x
            if propagate(trial, [v]):
                search(trial, v + 1)

    search([None] * n_vars, 0)
    # a later variable forced by propagation can make the branch order
    # differ from plain lexicographic order on the full vector
    out.sort()
    return out


def enumerate_colorings(d: MarkedGraphDiagram, X: Bikei) -> list[Coloring]:
    """Every X-coloring of ``d``; each free loop contributes an independent color."""
    var, n_vars, cons = _class_system(d)
    from itertools import product

    out = []
    for sol in _solve(n_vars, cons, X):
        colors = tuple(sol[v] for v in var)
        for loops in product(range(X.n), repeat=d.free_loops):
            out.append(Coloring(d, X, colors, tuple(loops)))
    out.sort(key=lambda f: f.colors + f.loop_colors)
    return out


def counting_invariant(d: MarkedGraphDiagram, X: Bikei) -> int:
    _, n_vars, cons = _class_system(d)
    return len(_solve(n_vars, cons, X)) * X.n**d.free_loops
