import itertools

import pytest
from hypothesis import given, strategies as st

from frobenius.apery import compute_nr
from frobenius.errors import DomainError, PreconditionError, UnresolvedError
from frobenius.obopt import ObProblem, family_B, ndr_via_reduction, ob_closed_form, ob_general, ob_values
from frobenius.families import FAMILIES


def test_general_examples():
    sol = ob_general(ObProblem((1, 4)), 10)
    assert (sol.value, sol.witness) == (4, (2, 2))
    sol = ob_general(ObProblem((1, 4, 5)), 8)
    assert (sol.value, sol.witness) == (2, (0, 2, 0))
    assert ob_general(ObProblem((3, 5)), 0).witness == (0, 0)
    assert not ob_general(ObProblem((3, 5)), 7).feasible


def test_problem_validation():
    with pytest.raises(DomainError):
        ObProblem((2, 2))
    with pytest.raises(DomainError):
        ObProblem((-1, 1))
    assert ObProblem((-1, 1), signed=True).B == (-1, 1)
    with pytest.raises(DomainError):
        ob_general(ObProblem((1, 2)), -1)


def test_closed_form_examples():
    assert ob_closed_form("square", {"a": 4}, 8).value == 2
    assert ob_closed_form("a2j", {"j": 5}, 13).value == 4
    assert ob_closed_form("arith", {"k": 3}, 7).value == 3
    assert ob_closed_form("pm", {}, -4).witness == (4, 0)
    assert not ob_closed_form("trunc-arith", {"K": 1, "k": 3}, 1).feasible
    with pytest.raises(PreconditionError):
        family_B("trunc-arith", {"K": 2, "k": 4})


PARAMS = {
    "aj": [{"j": j} for j in range(3, 11)],
    "a2j": [{"j": j} for j in range(3, 11)],
    "square": [{"a": a} for a in range(2, 11)],
    "arith": [{"k": k} for k in range(1, 11)],
    "trunc-arith": [{"K": K, "k": k} for k in range(3, 11) for K in range(1, (k - 1) // 2 + 1)],
    "odd-steps": [{"k": k} for k in range(1, 8)],
    "even-steps": [{"k": k} for k in range(1, 8)],
}


@pytest.mark.parametrize("family", sorted(PARAMS))
def test_closed_form_equals_dp(family):
    for params in PARAMS[family]:
        B = family_B(family, params)
        reference = ob_values(ObProblem(B), 500)
        for M in range(501):
            closed = ob_closed_form(family, params, M)
            assert closed.check(B, M)
            assert closed.value == reference[M], (family, params, M)


@given(st.integers(-300, 300))
def test_signed_pair_closed_form(M):
    sol = ob_closed_form("pm", {}, M)
    x1, x2 = sol.witness
    assert x2 - x1 == M and x1 + x2 == sol.value == abs(M)


def test_reduction_examples():
    # residue 5 of (7, 8, 9): 7*ceil(5/2) + 5
    assert ndr_via_reduction(7, 1, 1, (1, 2), 5, m_cap=3).value == 26
    assert ndr_via_reduction(5, 2, 1, (1,), 2, m_cap=3).value == 22
    assert ndr_via_reduction(7, 1, 1, (1, 2), 0).value == 0


def test_reduction_unresolved():
    with pytest.raises(UnresolvedError):
        ndr_via_reduction(7, 1, 1, (10,), 3, m_cap=0)


def _scan_family(family, point):
    fam = FAMILIES[family]
    A = fam.build(point)
    a, h, d = point["a"], point["h"], point["d"]
    table = compute_nr(A).values
    B = tuple((x - h * a) // d for x in A[1:]) if family != "square" else None
    return a, h, d, B, table


GRID = {
    "aj": dict(j=range(3, 7)),
    "a2j": dict(j=range(4, 8)),
    "pm": dict(),
    "arith": dict(k=range(1, 5)),
    "trunc-arith": dict(K=range(1, 3), k=range(3, 7)),
    "odd-steps": dict(k=range(1, 4)),
    "even-steps": dict(k=range(1, 4)),
}


@pytest.mark.parametrize("family", sorted(GRID))
def test_reduction_reproduces_tables(family):
    fam = FAMILIES[family]
    ranges = dict(a=range(2, 101, 7), h=range(1, 3), d=range(1, 3), **GRID[family])
    for values in itertools.product(*(ranges[p] for p in fam.params)):
        point = dict(zip(fam.params, values))
        if not fam.admits(point):
            continue
        a, h, d, B, table = _scan_family(family, point)
        for r in range(a):
            scan = ndr_via_reduction(a, h, d, B, r)
            assert scan.value == table[(d * r) % a], (point, r)


def test_arith_scans_are_monotone():
    for a in range(3, 60, 4):
        for k in range(1, min(a, 6)):
            for r in range(a):
                assert ndr_via_reduction(a, 2, 1, tuple(range(1, k + 1)), r).monotone
