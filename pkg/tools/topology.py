"""Diagnostics used while building the catalog: surface type and smoothing checks.

Not part of the library proper; admissibility checking is heuristic
(Kauffman bracket of each smoothing compared with that of an unlink).
"""
from __future__ import annotations

from collections import defaultdict

from bikeikit.diagram import MarkedGraphDiagram, smooth, link_components, _DSU

# Laurent polynomials in A as dict exp -> coeff


def _mul(p, q):
    out = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {k: v for k, v in out.items() if v}


def _add(p, q):
    out = defaultdict(int, p)
    for k, v in q.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


DELTA = {2: -1, -2: -1}


def bracket(d: MarkedGraphDiagram):
    """Kauffman bracket <D> (normalized so the unknot circle is 1)."""
    cs = d.crossings
    n = len(cs)
    total = {}
    m = d.semiarcs
    for state in range(1 << n):
        dsu = _DSU(range(1, m + 1))
        a_count = 0
        for i, c in enumerate(cs):
            p0, p1, p2, p3 = c.ccw
            if state >> i & 1:
                # A-smoothing: joins p0-p1 and p2-p3 (region swept CCW from under)
                dsu.union(p0, p1); dsu.union(p2, p3); a_count += 1
            else:
                dsu.union(p1, p2); dsu.union(p3, p0)
        loops = len({dsu.find(l) for l in range(1, m + 1)}) + d.free_loops
        term = {a_count - (n - a_count): 1}
        for _ in range(loops - 1):
            term = _mul(term, DELTA)
        total = _add(total, term)
    return total


def looks_like_unlink(d: MarkedGraphDiagram) -> bool:
    c = link_components(d)
    target = {0: 1}
    for _ in range(c - 1):
        target = _mul(target, DELTA)
    b = bracket(d)
    # <unlink diagram> = (-A^3)^k * delta^(c-1)
    for k in range(-40, 41):
        if _mul(target, {3 * k: (-1) ** k}) == b:
            return True
    return False


def surface_components(d: MarkedGraphDiagram):
    """Per surface component: (euler characteristic, orientable)."""
    m = d.semiarcs
    dsu = _DSU(range(1, m + 1))
    for c in d.crossings:
        dsu.union(c.a, c.d); dsu.union(c.b, c.c)
    for v in d.marked_vertices:
        for l in v.ccw[1:]:
            dsu.union(v.e1, l)
    roots = sorted({dsu.find(l) for l in range(1, m + 1)})
    out = []
    plus, minus = smooth_maps(d, "plus"), smooth_maps(d, "minus")
    for r in roots:
        labels = [l for l in range(1, m + 1) if dsu.find(l) == r]
        nv = sum(1 for v in d.marked_vertices if dsu.find(v.e1) == r)
        chi = plus[r] + minus[r] - nv
        out.append((chi, _orientable(d, set(labels))))
    out += [(2, True)] * d.free_loops
    return out


def smooth_maps(d, direction):
    """Number of smoothing circles per surface component root."""
    m = d.semiarcs
    comp = _DSU(range(1, m + 1))
    for c in d.crossings:
        comp.union(c.a, c.d); comp.union(c.b, c.c)
    for v in d.marked_vertices:
        for l in v.ccw[1:]:
            comp.union(v.e1, l)
    circ = _DSU(range(1, m + 1))
    for c in d.crossings:
        circ.union(c.a, c.d); circ.union(c.b, c.c)
    for v in d.marked_vertices:
        for i, j in v.smoothing_pairs(direction):
            circ.union(v.ccw[i], v.ccw[j])
    counts = defaultdict(set)
    for l in range(1, m + 1):
        counts[comp.find(l)].add(circ.find(l))
    return {k: len(v) for k, v in counts.items()}


def _orientable(d, labels) -> bool:
    # orient each semiarc by choosing which end (node, slot) is the head.
    # variables: label -> bit; constraints via parity
    ends = defaultdict(list)
    for i, node in enumerate(d.nodes):
        for s, l in enumerate(node.ccw):
            ends[l].append((i, s))
    # incoming(l, end) == (bit[l] == index of end in ends[l])
    # crossing: p0 in <=> p2 out ; p1 in <=> p3 out
    # vertex: p0 in <=> p2 in ; p0 in <=> p1 out ; p1 in <=> p3 in
    # encode inc(l,e) = bit[l] xor idx ; constraints inc(x) xor inc(y) = k
    cons = []
    nc = len(d.crossings)
    for i, node in enumerate(d.nodes):
        if not set(node.ccw) & labels:
            continue
        def inc(s, i=i, node=node):
            l = node.ccw[s]
            idx = ends[l].index((i, s))
            if ends[l][0] == ends[l][1]:
                idx = 0
            return l, idx
        # a label with both ends at this node: disambiguate by slot order
        def inc2(s, i=i, node=node):
            l = node.ccw[s]
            idx = [e for e in ends[l]].index((i, s))
            return l, idx
        rel = [(0, 2, 1), (1, 3, 1)] if i < nc else [(0, 2, 0), (0, 1, 1), (1, 3, 0)]
        for s, t, k in rel:
            (l1, i1), (l2, i2) = inc2(s), inc2(t)
            cons.append((l1, l2, k ^ i1 ^ i2))
    # solve bit[l1] xor bit[l2] = k
    val = {}
    adj = defaultdict(list)
    for a, b, k in cons:
        adj[a].append((b, k)); adj[b].append((a, k))
    for start in labels:
        if start in val:
            continue
        val[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for b, k in adj[a]:
                want = val[a] ^ k
                if b in val:
                    if val[b] != want:
                        return False
                else:
                    val[b] = want; stack.append(b)
    return True


def signature(d: MarkedGraphDiagram) -> str:
    parts = []
    for chi, ori in surface_components(d):
        parts.append(str((2 - chi) // 2) if ori else str(-(2 - chi)))
    return ",".join(sorted(parts, key=lambda s: (int(s) < 0, abs(int(s)))))


def admissible(d: MarkedGraphDiagram) -> bool:
    return looks_like_unlink(smooth(d, "plus")) and looks_like_unlink(smooth(d, "minus"))


def unlink_certified(d: MarkedGraphDiagram) -> bool:
    """Stronger check through spherogram's simplifier (dev tool only)."""
    import spherogram

    if not d.crossings:
        return True
    L = spherogram.Link([list(c.ccw) for c in d.crossings])
    for _ in range(20):
        L.simplify("global")
        if len(L.crossings) == 0:
            return True
    return False


def certified(d: MarkedGraphDiagram) -> bool:
    return unlink_certified(smooth(d, "plus")) and unlink_certified(smooth(d, "minus"))
