"""Bundled surface-link diagrams, bikei, modules and published invariant tables.

Diagrams live in ``data/catalog`` as ``.mgd`` text files listed by
``index.json``.  Each entry carries a status:

``constructed``
    built by a spin or doubling construction whose surface type,
    ch-index and admissibility were checked when the data was generated.
``candidate``
    surface type and ch-index match the name but the identification
    with that particular table entry is not established.
``unresolved``
    the name is known but no diagram has been transcribed; ``get``
    raises for it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .bikei import Bikei
from .diagram import MarkedGraphDiagram, parse
from .enhance import InvariantPolynomial, enhanced_polynomial
from .errors import BikeiKitError
from .module import BikeiModule


class CatalogLookupError(BikeiKitError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    file: str | None
    orientable: bool
    ch_index: int
    components: tuple[int, ...]
    status: str
    provenance: str
    alternates: tuple[str, ...] = ()

    @property
    def available(self) -> bool:
        return self.file is not None

    @property
    def diagram(self) -> MarkedGraphDiagram:
        if self.file is None:
            raise CatalogLookupError(f"{self.name} has no transcribed diagram ({self.provenance})")
        return _diagram(self.file)

    def alternate_diagrams(self) -> list[MarkedGraphDiagram]:
        return [_diagram(f) for f in self.alternates]


def _data():
    return resources.files("bikeikit") / "data"


@lru_cache(maxsize=None)
def _diagram(filename: str) -> MarkedGraphDiagram:
    return parse((_data() / "catalog" / filename).read_text())


@lru_cache(maxsize=1)
def _index() -> dict:
    return json.loads((_data() / "catalog" / "index.json").read_text())


def version() -> str:
    return _index()["version"]


@lru_cache(maxsize=1)
def entries() -> tuple[CatalogEntry, ...]:
    out = []
    for e in _index()["entries"]:
        out.append(CatalogEntry(
            e["name"], e["file"], e["orientable"], e["ch_index"], tuple(e["components"]),
            e["status"], e["provenance"], tuple(e.get("alternates", ())),
        ))
    return tuple(out)


def names() -> list[str]:
    return [e.name for e in entries()]


def get(name: str) -> CatalogEntry:
    for e in entries():
        if e.name == name:
            return e
    raise CatalogLookupError(f"unknown catalog name {name!r}; available: {', '.join(names())}")


def available() -> list[CatalogEntry]:
    """Entries that have a diagram."""
    return [e for e in entries() if e.available]


def required_names() -> list[str]:
    """Every surface-link named in the published tables, plus the trivial sphere."""
    seen = ["0_1"]
    for table in tables().values():
        for row in table["rows"]:
            for n in row["names"]:
                if n not in seen:
                    seen.append(n)
    return seen


# -- bundled algebra -----------------------------------------------------


def bikei(key: str) -> Bikei:
    """Bundled bikei: ``x1``, ``x2``, ``xp`` (the 4-element bikei of both
    tables) and ``x8`` (the counting example)."""
    path = _data() / "bikei" / f"{key}.bikei"
    if not path.is_file():
        raise CatalogLookupError(f"unknown bundled bikei {key!r}")
    return Bikei.from_text(path.read_text())


def module(key: str) -> BikeiModule:
    """Bundled module: ``ex-proper``, ``second``, ``z8`` or ``z5``."""
    path = _data() / "modules" / f"{key}.json"
    if not path.is_file():
        raise CatalogLookupError(f"unknown bundled module {key!r}")
    return BikeiModule.from_json(json.loads(path.read_text()))


@lru_cache(maxsize=1)
def tables() -> dict:
    return json.loads((_data() / "tables.json").read_text())


@dataclass(frozen=True)
class RowCheck:
    name: str
    expected: InvariantPolynomial
    got: InvariantPolynomial | None  # None when the entry has no diagram
    status: str

    @property
    def ok(self) -> bool:
        return self.got == self.expected


def reproduce(table: str, module_override: BikeiModule | None = None) -> list[RowCheck]:
    """Recompute every row of a published table from the catalog diagrams."""
    try:
        layout = tables()[table]
    except KeyError:
        raise CatalogLookupError(f"unknown table {table!r}; available: {', '.join(tables())}") from None
    M = module_override or module(layout["module"])
    out = []
    for row in layout["rows"]:
        expected = InvariantPolynomial.parse(row["polynomial"])
        for name in row["names"]:
            e = get(name)
            got = enhanced_polynomial(e.diagram, M) if e.available else None
            out.append(RowCheck(name, expected, got, e.status))
    return out
