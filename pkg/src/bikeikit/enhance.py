"""Bead modules of colored diagrams and the enhanced polynomial.

Given a coloring f and a bikei module, a bead coloring assigns an element
of Z_m to every semiarc so that at each crossing ``X(a,b,c,d)`` with
colors x on ``a`` and y on ``b``::

    t[x][y] * a + s[x][y] * b - d = 0
    r[x][y] * b - c = 0

The four semiarcs at a marked vertex share one bead.  ``|M_f|`` is the
number of bead colorings, and the enhanced polynomial is the sum of
``u ** |M_f|`` over all colorings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import ring
from .coloring import Coloring, enumerate_colorings
from .diagram import Crossing, MarkedGraphDiagram, vertex_classes
from .errors import InputError
from .module import BikeiModule


@dataclass(frozen=True)
class BeadSystem:
    coloring: Coloring
    module: BikeiModule
    matrix: tuple[tuple[int, ...], ...]
    columns: int

    def kernel_size(self) -> int:
        return ring.kernel_count(self.matrix, self.module.modulus, self.columns)


def bead_system(f: Coloring, M: BikeiModule, flip: bool = False) -> BeadSystem:
    """Assemble the bead equations.

    One column per vertex class of semiarcs plus one per free loop; two
    rows per crossing.  ``flip=True`` reads every crossing from the
    opposite side, which must not change the kernel size.
    """
    if f.bikei != M.base:
        raise InputError("coloring and module are over different bikei")
    d, m = f.diagram, M.modulus
    cls = vertex_classes(d)
    reps = sorted(set(cls))
    col = {r: i for i, r in enumerate(reps)}
    ncols = len(reps) + d.free_loops
    rows = []
    for c in d.crossings:
        if flip:
            c = c.flipped()
        x, y = f.color(c.a), f.color(c.b)
        t, s, r = M.coefficients(x, y)
        a, b, cc, dd = (col[cls[l - 1]] for l in (c.a, c.b, c.c, c.d))
        row1 = [0] * ncols
        row1[a] += t
        row1[b] += s
        row1[dd] -= 1
        row2 = [0] * ncols
        row2[b] += r
        row2[cc] -= 1
        rows.append(tuple(v % m for v in row1))
        rows.append(tuple(v % m for v in row2))
    return BeadSystem(f, M, tuple(rows), ncols)


def bead_module_size(f: Coloring, M: BikeiModule) -> int:
    """``|M_f|``, the number of bead colorings of the colored diagram."""
    return bead_system(f, M).kernel_size()


@dataclass(frozen=True)
class InvariantPolynomial:
    """A sum of monomials ``u ** e``; stored as exponent -> coefficient."""

    terms: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def from_exponents(cls, exponents) -> "InvariantPolynomial":
        return cls(tuple(sorted(Counter(exponents).items())))

    @classmethod
    def parse(cls, text: str) -> "InvariantPolynomial":
        """Parse renderings such as ``5u+2u^3+u^9`` (also ``u**3``, ``0``)."""
        s = text.replace(" ", "").replace("**", "^").replace("{", "").replace("}", "")
        if s in ("", "0"):
            return cls()
        terms: Counter = Counter()
        for part in s.split("+"):
            coeff, _, exp = part.partition("u")
            if not _:
                raise InputError(f"cannot parse polynomial term {part!r}")
            c = int(coeff) if coeff else 1
            e = int(exp[1:]) if exp.startswith("^") else 1
            if exp and not exp.startswith("^"):
                raise InputError(f"cannot parse polynomial term {part!r}")
            terms[e] += c
        return cls(tuple(sorted(terms.items())))

    def count(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            coeff = "" if c == 1 else str(c)
            out.append(f"{coeff}u" if e == 1 else f"{coeff}u^{e}")
        return "+".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coeff": c} for e, c in self.terms]}


def enhanced_polynomial(d: MarkedGraphDiagram, M: BikeiModule) -> InvariantPolynomial:
    return InvariantPolynomial.from_exponents(
        bead_module_size(f, M) for f in enumerate_colorings(d, M.base)
    )
