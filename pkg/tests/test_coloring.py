import pytest

import oracles
from bikeikit import catalog
from bikeikit.bikei import enumerate_bikei, trivial
from bikeikit.coloring import counting_invariant, crossing_ok, enumerate_colorings, is_coloring
from bikeikit.diagram import fuzz_moves, parse


def test_projective_plane_counts(P2, X1, X2):
    assert enumerate_colorings(P2, X1) == []
    assert len(enumerate_colorings(P2, X2)) == 2
    assert counting_invariant(P2, X2) == 2


def test_free_loop_gets_every_color():
    d = parse("O")
    for n in (1, 2, 3):
        X = trivial(n)
        assert [f.vector() for f in enumerate_colorings(d, X)] == [(c,) for c in range(1, n + 1)]


def test_homset_sizes(XP, X8):
    a, b = catalog.get("8^{-1,-1}_1").diagram, catalog.get("9^{1,-2}_1").diagram
    assert counting_invariant(a, XP) == counting_invariant(b, XP) == 8
    assert counting_invariant(a, X8) == 0
    assert counting_invariant(b, X8) == 4


SMALL = ["X(1,2,3,4) M13(1,3,4,2)", "M13(1,2,3,4) M24(2,1,4,3)", "X(1,2,3,4) X(4,3,2,1)",
         "X(1,2,3,4) X(2,5,4,6) M13(1,5,6,3)", "O O"]


@pytest.mark.parametrize("code", SMALL)
@pytest.mark.parametrize("n", [2, 3])
def test_matches_brute_force(code, n):
    d = parse(code)
    for X in enumerate_bikei(n):
        assert [f.vector() for f in enumerate_colorings(d, X)] == oracles.colorings(d, X)


def test_colorings_sorted_and_valid(XP):
    d = catalog.get("6^{0,1}_1").diagram
    fs = enumerate_colorings(d, XP)
    vecs = [f.vector() for f in fs]
    assert vecs == sorted(vecs)
    assert all(is_coloring(d, XP, f.colors) for f in fs)


def test_flipped_crossings_accept_same_colorings(XP, X8):
    for e in catalog.available():
        for X in (XP, X8):
            for f in enumerate_colorings(e.diagram, X):
                assert all(crossing_ok(X, c.flipped(), f.color) for c in e.diagram.crossings)


@pytest.mark.parametrize("n", [2, 3])
def test_constant_colorings(n):
    d = catalog.get("8^{1,1}_1").diagram
    for X in enumerate_bikei(n):
        found = {f.colors for f in enumerate_colorings(d, X)}
        for x in range(n):
            const = (x,) * d.semiarcs
            expected = X.under[x][x] == x and X.over[x][x] == x
            assert (const in found) == expected


GOLDEN = {
    # name: counts under x1, x2, xp, x8
    "0_1": (2, 2, 4, 4),
    "2^{-1}_1": (0, 2, 4, 0),
    "2_1": (2, 2, 4, 4),
    "6^{0,1}_1": (4, 4, 12, 12),
    "7^{0,-2}_1": (0, 4, 12, 4),
    "8^{-1,-1}_1": (0, 4, 8, 0),
    "8^{1,1}_1": (4, 4, 8, 8),
    "8_1": (2, 2, 4, 4),
    "9^{1,-2}_1": (0, 4, 8, 4),
    "10^1_1": (2, 2, 4, 4),
    "10^{-1,-1}_1": (0, 4, 8, 0),
    "10^{-2,-2}_1": (0, 4, 8, 0),
    "10^{0,0,1}_1": (8, 8, 48, 48),
    "10^{0,1}_1": (4, 4, 16, 16),
    "10^{1,1}_1": (4, 4, 8, 8),
    "10_1": (2, 2, 4, 4),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_catalog_counts_frozen(name):
    d = catalog.get(name).diagram
    got = tuple(counting_invariant(d, catalog.bikei(k)) for k in ("x1", "x2", "xp", "x8"))
    assert got == GOLDEN[name]


def test_surface_bound_under_xp():
    # observed bound, not a theorem: a c-component surface has at least
    # 2^(c+1) colorings here.  Rows that give a two-component surface a
    # four-term polynomial would break it.
    XP = catalog.bikei("xp")
    for e in catalog.available():
        c = len(e.components)
        assert counting_invariant(e.diagram, XP) >= 2 ** (c + 1)


@pytest.mark.parametrize("name", ["2^{-1}_1", "9^{1,-2}_1", "6^{0,1}_1"])
def test_fuzz_invariance(name, XP, X8):
    d = catalog.get(name).diagram
    want = [counting_invariant(d, X) for X in (XP, X8)]
    for f in fuzz_moves(d, seed=11, k=8):
        assert [counting_invariant(f, X) for X in (XP, X8)] == want
