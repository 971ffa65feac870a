"""Marked graph diagrams.

Text code
---------
A diagram is a whitespace-separated list of terms:

``X(a,b,c,d)``
    A crossing.  ``a`` and ``d`` are the two ends of the under-strand,
    ``b`` and ``c`` the two ends of the over-strand.  Going
    counterclockwise around the crossing the ends appear in the order
    ``a, b, d, c``: ``a`` is opposite ``d`` and ``b`` is opposite ``c``,
    and ``b`` follows ``a``.  Reading the crossing from the (a, b) side,
    ``a`` is the incoming under-arc and ``b`` the incoming over-arc.

``M13(e1,e2,e3,e4)`` / ``M24(e1,e2,e3,e4)``
    A marked vertex whose four edges are listed counterclockwise.  The
    marker of ``M13`` lies in the gaps e4|e1 and e2|e3, so the plus
    smoothing of an ``M13`` vertex joins e1 to e2 and e3 to e4 and the
    minus smoothing joins e2 to e3 and e4 to e1.  ``M24`` swaps the two.

``O``
    A crossingless unknotted circle.

Every label names a semiarc and must occur exactly twice, once for each
of its ends.  Labels are renumbered ``1..m`` in order of first
appearance when a diagram is parsed or built.

Internally each node keeps its four ends in counterclockwise order
(``ccw``); for a crossing, positions 0 and 2 are the under-strand.
"""

from __future__ import annotations

import json
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int

    @property
    def ccw(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.d, self.c)

    @classmethod
    def from_ccw(cls, ends: Sequence[int]) -> "Crossing":
        """Ends in counterclockwise order with positions 0 and 2 under."""
        p0, p1, p2, p3 = ends
        return cls(p0, p1, p3, p2)

    def flipped(self) -> "Crossing":
        """The same crossing read from the opposite side."""
        return Crossing(self.d, self.c, self.b, self.a)

    def relabel(self, f) -> "Crossing":
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d))

    def __str__(self) -> str:
        return f"X({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class MarkedVertex:
    e1: int
    e2: int
    e3: int
    e4: int
    axis: str = "13"

    def __post_init__(self):
        if self.axis not in ("13", "24"):
            raise InputError(f"marker axis must be '13' or '24', not {self.axis!r}")

    @property
    def ccw(self) -> tuple[int, int, int, int]:
        return (self.e1, self.e2, self.e3, self.e4)

    def smoothing_pairs(self, direction: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """Pairs of ccw positions joined by the given smoothing."""
        first = ((0, 1), (2, 3))
        second = ((1, 2), (3, 0))
        plus = first if self.axis == "13" else second
        minus = second if self.axis == "13" else first
        if direction == "plus":
            return plus
        if direction == "minus":
            return minus
        raise InputError(f"smoothing direction must be 'plus' or 'minus', not {direction!r}")

    def relabel(self, f) -> "MarkedVertex":
        return MarkedVertex(f(self.e1), f(self.e2), f(self.e3), f(self.e4), self.axis)

    def __str__(self) -> str:
        return f"M{self.axis}({self.e1},{self.e2},{self.e3},{self.e4})"


@dataclass(frozen=True)
class MarkedGraphDiagram:
    crossings: tuple[Crossing, ...] = ()
    marked_vertices: tuple[MarkedVertex, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "marked_vertices", tuple(self.marked_vertices))
        if self.free_loops < 0:
            raise InputError("free loop count must be non-negative")
        counts = Counter(l for node in self.nodes for l in node.ccw)
        for label, k in sorted(counts.items()):
            if k != 2:
                raise InputError(f"semiarc {label} has {k} ends (expected exactly 2)")
        labels = sorted(counts)
        if labels != list(range(1, len(labels) + 1)):
            raise InputError("semiarc labels must be 1..m without gaps")

    @property
    def nodes(self) -> tuple:
        return self.crossings + self.marked_vertices

    @property
    def semiarcs(self) -> int:
        return 2 * len(self.nodes)

    @property
    def ch_index(self) -> int:
        return len(self.crossings) + len(self.marked_vertices)

    def __str__(self) -> str:
        return serialize(self)

    def to_json(self) -> dict:
        return {
            "crossings": [[c.a, c.b, c.c, c.d] for c in self.crossings],
            "marked_vertices": [
                {"ends": [v.e1, v.e2, v.e3, v.e4], "axis": v.axis} for v in self.marked_vertices
            ],
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MarkedGraphDiagram":
        try:
            crossings = [Crossing(*map(int, c)) for c in data.get("crossings", [])]
            vertices = [
                MarkedVertex(*map(int, v["ends"]), axis=str(v.get("axis", "13")))
                for v in data.get("marked_vertices", [])
            ]
            loops = int(data.get("free_loops", 0))
        except (TypeError, KeyError, ValueError) as exc:
            raise InputError(f"malformed diagram JSON: {exc}") from exc
        return build(crossings, vertices, loops)


def build(
    crossings: Iterable[Crossing],
    vertices: Iterable[MarkedVertex] = (),
    free_loops: int = 0,
) -> MarkedGraphDiagram:
    """Assemble a diagram from nodes with arbitrary hashable labels and renumber them."""
    crossings, vertices = list(crossings), list(vertices)
    counts = Counter(l for node in crossings + vertices for l in node.ccw)
    for label, k in counts.items():
        if k != 2:
            raise InputError(f"semiarc {label} has {k} ends (expected exactly 2)")
    mapping: dict = {}
    for node in crossings + vertices:
        for l in (node.a, node.b, node.c, node.d) if isinstance(node, Crossing) else node.ccw:
            mapping.setdefault(l, len(mapping) + 1)
    f = mapping.__getitem__
    return MarkedGraphDiagram(
        tuple(c.relabel(f) for c in crossings),
        tuple(v.relabel(f) for v in vertices),
        free_loops,
    )


# -- text code -----------------------------------------------------------

_TERM = re.compile(r"(X|M13|M24)\(([^()]*)\)|O\b|(\S+)")


def parse(text: str) -> MarkedGraphDiagram:
    """Parse the text code; ``#`` starts a comment that runs to end of line."""
    crossings: list[Crossing] = []
    vertices: list[MarkedVertex] = []
    loops = 0
    positions: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for m in _TERM.finditer(line):
            col = m.start() + 1
            if m.group(3) is not None:
                raise ParseError(f"unknown token {m.group(3)!r}", lineno, col)
            if m.group(0) == "O":
                loops += 1
                continue
            kind, body = m.group(1), m.group(2)
            parts = [p.strip() for p in body.split(",")]
            if len(parts) != 4:
                raise ParseError(f"{kind} takes 4 semiarc labels, got {len(parts)}", lineno, col)
            try:
                labels = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"non-integer label in {m.group(0)}", lineno, col) from None
            if any(l < 1 for l in labels):
                raise ParseError("semiarc labels must be positive", lineno, col)
            for l in labels:
                positions.setdefault(l, (lineno, col))
            if kind == "X":
                crossings.append(Crossing(*labels))
            else:
                vertices.append(MarkedVertex(*labels, axis=kind[1:]))
    counts = Counter(l for node in crossings + vertices for l in node.ccw)
    for label, k in sorted(counts.items()):
        if k != 2:
            line, col = positions[label]
            raise ParseError(f"semiarc {label} has {k} ends (expected exactly 2)", line, col)
    return build(crossings, vertices, loops)


def serialize(d: MarkedGraphDiagram) -> str:
    terms = [str(c) for c in d.crossings] + [str(v) for v in d.marked_vertices]
    terms += ["O"] * d.free_loops
    return " ".join(terms)


def load(text: str) -> MarkedGraphDiagram:
    """Parse either the text code or its JSON mirror."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return MarkedGraphDiagram.from_json(json.loads(stripped))
    return parse(text)


# -- structure -----------------------------------------------------------


class _DSU:
    def __init__(self, items=()):
        self.parent = {i: i for i in items}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def vertex_classes(d: MarkedGraphDiagram) -> list[int]:
    """Map each semiarc (index label-1) to the smallest label identified with it.

    Colors and beads agree on the four semiarcs meeting at a marked vertex.
    """
    dsu = _DSU(range(1, d.semiarcs + 1))
    for v in d.marked_vertices:
        for l in v.ccw[1:]:
            dsu.union(v.e1, l)
    return [dsu.find(l) for l in range(1, d.semiarcs + 1)]


def smooth(d: MarkedGraphDiagram, direction: str) -> MarkedGraphDiagram:
    """Replace every marked vertex by its plus or minus smoothing."""
    if not d.marked_vertices:
        return d
    dsu = _DSU(range(1, d.semiarcs + 1))
    for v in d.marked_vertices:
        for i, j in v.smoothing_pairs(direction):
            dsu.union(v.ccw[i], v.ccw[j])
    used = {dsu.find(l) for c in d.crossings for l in c.ccw}
    roots = {dsu.find(l) for l in range(1, d.semiarcs + 1)}
    loops = d.free_loops + len(roots - used)
    crossings = [c.relabel(dsu.find) for c in d.crossings]
    # a crossing strand can now meet itself: X(a,...) with both under ends
    # on one merged arc is fine, but labels must still occur twice
    return build(crossings, (), loops)


def link_components(d: MarkedGraphDiagram) -> int:
    """Number of components of a diagram without marked vertices."""
    if d.marked_vertices:
        raise InputError("link_components needs a diagram without marked vertices")
    dsu = _DSU(range(1, d.semiarcs + 1))
    for c in d.crossings:
        dsu.union(c.a, c.d)
        dsu.union(c.b, c.c)
    return len({dsu.find(l) for l in range(1, d.semiarcs + 1)}) + d.free_loops


# -- planar structure ----------------------------------------------------


def _endpoints(nodes) -> dict[int, list[tuple[int, int]]]:
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, node in enumerate(nodes):
        for slot, l in enumerate(node.ccw):
            ends.setdefault(l, []).append((i, slot))
    return ends


def faces(nodes) -> list[list[tuple[int, tuple[int, int], tuple[int, int]]]]:
    """Faces of the plane graph as lists of darts ``(label, tail, head)``.

    A dart runs along a semiarc from endpoint ``tail`` to endpoint
    ``head`` (endpoints are ``(node, slot)``).  Each face is traversed
    with the face on the left: arriving at slot ``i`` we leave by slot
    ``i - 1``.
    """
    ends = _endpoints(nodes)
    other = {}
    for l, (p, q) in ends.items():
        other[p] = q
        other[q] = p
    unvisited = set(other)
    out = []
    for start in sorted(other):
        if start not in unvisited:
            continue
        face = []
        tail = start
        while tail in unvisited:
            unvisited.discard(tail)
            head = other[tail]
            face.append((nodes[tail[0]].ccw[tail[1]], tail, head))
            tail = (head[0], (head[1] - 1) % 4)
        out.append(face)
    return out


# -- local moves ---------------------------------------------------------


class _Editable:
    """Mutable node lists (ccw form) used while rewriting a diagram."""

    def __init__(self, d: MarkedGraphDiagram):
        self.kinds = ["X"] * len(d.crossings) + ["M"] * len(d.marked_vertices)
        self.axes = [None] * len(d.crossings) + [v.axis for v in d.marked_vertices]
        self.ccw = [list(n.ccw) for n in d.nodes]
        self.loops = d.free_loops
        self.next_label = d.semiarcs + 1

    def fresh(self) -> int:
        self.next_label += 1
        return self.next_label - 1

    def add_crossing(self, ccw):
        self.kinds.append("X")
        self.axes.append(None)
        self.ccw.append(list(ccw))

    def nodes(self):
        out = []
        for kind, axis, ends in zip(self.kinds, self.axes, self.ccw):
            if kind == "X":
                out.append(Crossing.from_ccw(ends))
            else:
                out.append(MarkedVertex(*ends, axis=axis))
        return out

    def finish(self) -> MarkedGraphDiagram:
        nodes = self.nodes()
        return build(
            [n for n in nodes if isinstance(n, Crossing)],
            [n for n in nodes if isinstance(n, MarkedVertex)],
            self.loops,
        )


def _rotate(ends, k):
    return ends[k:] + ends[:k]


def kink(d: MarkedGraphDiagram, label: int | None, rotation: int = 0, side: int = 0) -> MarkedGraphDiagram:
    """Insert a curl (move Omega_1) on semiarc ``label``, or on a free loop if ``None``.

    ``side`` picks which side of the strand the curl sits on and
    ``rotation`` (0..3) picks which strand is over; together they give
    every Omega_1 variant.
    """
    e = _Editable(d)
    loop = e.fresh()
    if label is None:
        if e.loops < 1:
            raise InputError("no free loop to put a kink on")
        e.loops -= 1
        outer = e.fresh()
        ends = [outer, outer, loop, loop]
    else:
        ends_at = _endpoints(e.nodes())[label]
        node, slot = ends_at[1]
        new = e.fresh()
        e.ccw[node][slot] = new
        ends = [label, new, loop, loop] if side == 0 else [label, loop, loop, new]
    e.add_crossing(_rotate(ends, rotation % 4))
    return e.finish()


def poke(d: MarkedGraphDiagram, face_index: int, i: int, j: int, e_over: bool) -> MarkedGraphDiagram:
    """Push a finger of one boundary edge of a face across another (move Omega_2).

    ``i`` and ``j`` index darts of the face; the edge of dart ``i`` is
    pushed across the edge of dart ``j``.
    """
    e = _Editable(d)
    fs = faces(e.nodes())
    face = fs[face_index]
    (le, e_tail, e_head), (lf, f_tail, f_head) = face[i], face[j]
    if le == lf:
        raise InputError("poke needs two distinct semiarcs")
    # the finger edge e is traversed from its right end (tail) to its left
    # end (head); f runs left (tail) to right (head) underneath it.
    e2, e3, f2, f3 = e.fresh(), e.fresh(), e.fresh(), e.fresh()
    e.ccw[e_tail[0]][e_tail[1]] = e3
    e.ccw[f_head[0]][f_head[1]] = f3
    e1, f1 = le, lf
    c1 = [f2, e1, f1, e2]
    c2 = [f3, e3, f2, e2]
    if e_over:
        e.add_crossing(c1)
        e.add_crossing(c2)
    else:
        e.add_crossing(_rotate(c1, 1))
        e.add_crossing(_rotate(c2, 1))
    return e.finish()


def vertex_slide(d: MarkedGraphDiagram, face_index: int, corner: int, j: int, over: bool) -> MarkedGraphDiagram:
    """Drag a boundary edge of a face across a marked vertex on that face.

    The finger of edge ``j`` wraps the whole vertex, crossing all four of
    its edges over (or under) them; this is Omega_2 followed by the
    marked-vertex slide Omega_4.  ``corner`` indexes the dart of the face
    that arrives at the vertex.
    """
    e = _Editable(d)
    nodes = e.nodes()
    face = faces(nodes)[face_index]
    _, _, head = face[corner]
    vnode, slot_b = head
    if e.kinds[vnode] != "M":
        raise InputError("corner does not arrive at a marked vertex")
    lf, f_tail, f_head = face[j]
    if f_tail[0] == vnode or f_head[0] == vnode:
        raise InputError("the dragged edge must not touch the vertex")
    slot_a = (slot_b - 1) % 4
    slot_c = (slot_b + 1) % 4
    slot_d = (slot_b + 2) % 4
    outer = {s: e.ccw[vnode][s] for s in range(4)}
    inner = {s: e.fresh() for s in range(4)}
    for s in range(4):
        e.ccw[vnode][s] = inner[s]
    g1, g2, g3, f3 = e.fresh(), e.fresh(), e.fresh(), e.fresh()
    e.ccw[f_head[0]][f_head[1]] = f3
    f1 = lf
    A_in, A_out = inner[slot_a], outer[slot_a]
    B_in, B_out = inner[slot_b], outer[slot_b]
    C_in, C_out = inner[slot_c], outer[slot_c]
    D_in, D_out = inner[slot_d], outer[slot_d]
    # f under: the finger is listed first so positions 0 and 2 are the finger
    under_forms = (
        [f1, A_in, g1, A_out],
        [g1, D_in, g2, D_out],
        [g3, C_out, g2, C_in],
        [f3, B_out, g3, B_in],
    )
    for ccw in under_forms:
        e.add_crossing(_rotate(ccw, 1) if over else ccw)
    return e.finish()


def vertex_corners(d: MarkedGraphDiagram):
    """(face index, dart index arriving at a vertex, candidate edge darts)."""
    nodes = d.nodes
    nc = len(d.crossings)
    for fi, face in enumerate(faces(nodes)):
        for k, (_, _, head) in enumerate(face):
            if head[0] >= nc:
                v = head[0]
                cands = [j for j, (_, t, h) in enumerate(face) if t[0] != v and h[0] != v]
                if cands:
                    yield fi, k, cands


def fuzz_moves(d: MarkedGraphDiagram, seed: int, k: int, max_moves: int = 3) -> list[MarkedGraphDiagram]:
    """``k`` diagrams, each ``d`` after 1..max_moves random Omega_1/2/4 insertions.

    Deterministic for a given seed.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        cur = d
        for _ in range(rng.randint(1, max_moves)):
            cur = random_move(cur, rng)
        out.append(cur)
    return out


def random_move(d: MarkedGraphDiagram, rng: random.Random) -> MarkedGraphDiagram:
    options = ["kink"]
    fs = faces(d.nodes)
    pokeable = [
        (fi, i, j)
        for fi, face in enumerate(fs)
        for i in range(len(face))
        for j in range(len(face))
        if face[i][0] != face[j][0]
    ]
    if pokeable:
        options.append("poke")
    slides = list(vertex_corners(d))
    if slides:
        options.append("slide")
    move = rng.choice(options)
    if move == "kink":
        labels = list(range(1, d.semiarcs + 1)) + [None] * d.free_loops
        label = rng.choice(labels)
        return kink(d, label, rng.randrange(4), rng.randrange(2))
    if move == "poke":
        fi, i, j = rng.choice(pokeable)
        return poke(d, fi, i, j, rng.random() < 0.5)
    fi, corner, cands = rng.choice(slides)
    return vertex_slide(d, fi, corner, rng.choice(cands), rng.random() < 0.5)
