"""Building blocks used to assemble the catalog diagrams.

Diagrams are described by nodes on string labels.  ``double`` mirrors a
right-half diagram across the spin axis; labels listed as shared cross the
axis and are not duplicated.  Gadgets join a circle to its mirror image.
"""
from __future__ import annotations

from itertools import product

from bikeikit.diagram import Crossing, MarkedVertex, build

from topology import admissible, signature


def X(*ccw):
    return ("X", tuple(ccw))


def V(*ccw, axis="?"):
    return ("V", tuple(ccw), axis)


def mirror_label(l, shared):
    return l if l in shared else l + "'"


def reflect(node, shared):
    f = lambda l: mirror_label(l, shared)  # noqa: E731
    if node[0] == "X":
        p = node[1]
        return X(f(p[0]), f(p[3]), f(p[2]), f(p[1]))
    p = node[1]
    axis = {"13": "24", "24": "13", "?": "?"}[node[2]]
    return V(f(p[0]), f(p[3]), f(p[2]), f(p[1]), axis=axis)


def double(half, shared, gadgets=()):
    return list(half) + [reflect(n, set(shared)) for n in half] + list(gadgets)


def torus_gadget(low, mid, high):
    """Two pinches joining the inner side of a circle to its mirror."""
    return [
        V(low, mid, mid + "'", low + "'"),
        V(mid, high, high + "'", mid + "'"),
    ]


def klein_gadget(low, mid, high):
    m2 = mid + "_"
    return [
        V(low, mid, mid + "'", low + "'"),
        X(mid, m2 + "'", m2, mid + "'"),
        V(m2 + "'", high, high + "'", m2),
    ]


def crosscap_gadget(low, mid, high):
    return [
        V(low, mid + "'", mid, low + "'"),
        X(mid + "'", high, high + "'", mid),
    ]


def realize(nodes, axes):
    cs, vs = [], []
    it = iter(axes)
    for n in nodes:
        if n[0] == "X":
            cs.append(Crossing.from_ccw(n[1]))
        else:
            axis = n[2] if n[2] != "?" else next(it)
            vs.append(MarkedVertex(*n[1], axis=axis))
    return build(cs, vs)


def variants(nodes):
    """Every marker choice for the undecided vertices, with diagnostics."""
    k = sum(1 for n in nodes if n[0] == "V" and n[2] == "?")
    out = []
    for axes in product(("13", "24"), repeat=k):
        d = realize(nodes, axes)
        out.append((axes, d, admissible(d), signature(d)))
    return out


def spin(d, face, e, f=None, gadget=None):
    """Spin a knot diagram about an axis running through ``face``.

    Semiarc ``e`` is cut and its ends are carried across the axis; if
    ``f`` is given the gadget joins it to its mirror image (torus gadget
    for an interior local minimum of the spun arc).
    """
    from bikeikit.diagram import faces

    walk = faces(d.nodes)[face]
    darts = {lab: (tail, head) for lab, tail, head in walk}
    rename = {}
    tail, head = darts[e]
    rename[head] = "eA"
    rename[tail] = "eB"
    if f is not None:
        tail, head = darts[f]
        rename[tail] = "flo"
        rename[head] = "fhi"
    half = []
    for i, node in enumerate(d.nodes):
        labels = [rename.get((i, s), f"s{l}") for s, l in enumerate(node.ccw)]
        if i < len(d.crossings):
            half.append(X(*labels))
        else:
            half.append(V(*labels, axis=node.axis))
    nodes = double(half, ["eA", "eB"])
    if f is not None:
        nodes += (gadget or torus_gadget)("flo", "fmid", "fhi")
    return nodes


def knot(name):
    import spherogram

    return build([Crossing.from_ccw(c) for c in spherogram.Link(name).PD_code()])


def full_twist_gadget(low, mid, high):
    """Torus gadget whose tube carries a full twist."""
    m2, m3 = mid + "_", mid + "__"
    return [
        V(low, mid, mid + "'", low + "'"),
        X(mid, m2 + "'", m2, mid + "'"),
        X(m2 + "'", m3, m3 + "'", m2),
        V(m3, high, high + "'", m3 + "'"),
    ]


def spin_closed(d, face, fs, gadgets=None):
    """Spin a closed diagram lying off the axis; each label in ``fs`` gets a gadget."""
    from bikeikit.diagram import faces

    walk = faces(d.nodes)[face]
    darts = {lab: (tail, head) for lab, tail, head in walk}
    rename = {}
    for k, f in enumerate(fs):
        tail, head = darts[f]
        rename[tail] = f"f{k}lo"
        rename[head] = f"f{k}hi"
    half = []
    for i, node in enumerate(d.nodes):
        labels = [rename.get((i, s), f"s{l}") for s, l in enumerate(node.ccw)]
        half.append(X(*labels) if i < len(d.crossings) else V(*labels, axis=node.axis))
    nodes = double(half, [])
    gadgets = gadgets or [torus_gadget] * len(fs)
    for k, g in enumerate(gadgets):
        nodes += g(f"f{k}lo", f"f{k}mid", f"f{k}hi")
    return nodes
