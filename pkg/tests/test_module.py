import pytest

import oracles
from bikeikit.bikei import trivial
from bikeikit.errors import InputError, Rejection, WorkBoundError
from bikeikit.module import (
    BikeiModule, constant_module, reidemeister2_violation, search_modules, verify_module,
)

Z8_EXAMPLE = ([[3, 7], [7, 3]], [[4, 0], [0, 4]], [[7, 5], [5, 7]])


def test_printed_z8_example(X1):
    assert verify_module(X1, 8, *Z8_EXAMPLE)


def test_changed_entry_names_witness(X1):
    T = [[3, 6], [7, 3]]
    report = verify_module(X1, 8, T, *Z8_EXAMPLE[1:])
    assert not report
    assert report.violation.axiom == "0.i"
    assert report.violation.witness == (1, 2)


def test_one_element_z2():
    assert verify_module(trivial(1), 2, [[1]], [[0]], [[1]])


def test_dimension_mismatch(X1):
    with pytest.raises(InputError):
        verify_module(X1, 8, [[1]], [[0]], [[1]])


def test_printed_modules_verify(M1, M2, M5):
    for M in (M1, M2, M5):
        assert verify_module(M.base, M.modulus, M.T, M.S, M.R)


def test_z8_search(X1):
    found = search_modules(X1, 8)
    assert len(found) == 512
    ex = BikeiModule.from_matrices(X1, 8, *Z8_EXAMPLE)
    assert ex in found
    assert [M.key() for M in found] == sorted(M.key() for M in found)


@pytest.mark.parametrize("m, count", [(2, 1), (3, 4), (4, 4), (5, 4)])
def test_trivial_base(m, count):
    X = trivial(1)
    got = search_modules(X, m)
    assert len(got) == count
    assert [M.key() for M in got] == oracles.module_triples(X, m)


@pytest.mark.parametrize("base", ["x1", "x2"])
@pytest.mark.parametrize("m", [2, 3])
def test_pruned_equals_naive(base, m):
    from bikeikit import catalog

    X = catalog.bikei(base)
    pruned = search_modules(X, m)
    naive = search_modules(X, m, pruned=False)
    assert pruned == naive
    if m == 2:
        assert [M.key() for M in pruned] == oracles.module_triples(X, m)


def test_naive_work_bound(X1):
    with pytest.raises(WorkBoundError):
        search_modules(X1, 8, pruned=False)


def test_parallel_search_is_identical(X1):
    assert search_modules(X1, 8, workers=2) == search_modules(X1, 8, workers=1)


def test_partner_law_round_trip(X1):
    for M in search_modules(X1, 8):
        for x in range(2):
            for y in range(2):
                p, q = X1.under[x][y], X1.over[y][x]
                assert (X1.under[p][q], X1.over[q][p]) == (x, y)
                assert (M.T[x][y] + M.S[x][y] - M.R[x][y]) % 8 == 0 if x == y else True


def test_constant_modules():
    X = trivial(3)
    assert constant_module(7, 1, 0, 1, X).T == ((1,) * 3,) * 3
    assert constant_module(7, 6, 0, 6, trivial(1))
    with pytest.raises(Rejection) as info:
        constant_module(5, 2, 0, 2, trivial(1))
    assert info.value.label == "0.i"


def test_rejects_non_module(X1):
    with pytest.raises(Rejection):
        BikeiModule.from_matrices(X1, 8, [[3, 6], [7, 3]], *Z8_EXAMPLE[1:])


def test_json_round_trip(M1):
    assert BikeiModule.from_json(M1.to_json()) == M1


def test_r2_conditions(X1, M1, M2, M5):
    found = search_modules(X1, 8)
    assert sum(reidemeister2_violation(M) is None for M in found) == 16
    assert reidemeister2_violation(M5) is None
    assert reidemeister2_violation(M1).axiom == "r2.t"
    assert reidemeister2_violation(M2).axiom == "r2.s"
