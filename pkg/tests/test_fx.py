import itertools

import pytest

from frobenius.apery import compute_nr
from frobenius.ct import LaurentPoly, RationalTerm, RationalTermSum, power_series, value_at_one
from frobenius.errors import PreconditionError, ResourceError
from frobenius.families import FAMILIES, FamilySpec
from frobenius.fx import FX_FAMILIES, fx_equivalence_check, fx_family, fx_from_table, fx_square_double_sum


def exponents(S, upto):
    low, coeffs = power_series(S, upto)
    assert low == 0
    out = []
    for e, c in enumerate(coeffs):
        out += [e] * int(c)
    return out


def test_from_table():
    f = fx_from_table(compute_nr((5, 9, 11)))
    assert exponents(f, 30) == [0, 9, 11, 18, 22]
    assert exponents(fx_from_table(compute_nr((2, 3))), 10) == [0, 3]
    T = compute_nr((5, 16, 19, 22))
    assert max(exponents(fx_from_table(T), 100)) == 33 + 5


def test_pm_form_expands_to_the_table():
    S = fx_family(FamilySpec("pm", dict(a=5, h=2, d=1)))
    assert [t.den for t in S] == [(11,), (9,)]
    assert exponents(S, 40) == [0, 9, 11, 18, 22]
    assert fx_equivalence_check(S, compute_nr((5, 9, 11)))


def test_arith_form_expands_to_the_table():
    S = fx_family(FamilySpec("arith", dict(a=7, h=1, d=1, k=2)))
    assert exponents(S, 40) == [0, 8, 9, 17, 18, 26, 27]


def test_a2j_form_on_worked_instance():
    S = fx_family(FamilySpec("a2j", dict(a=9, h=1, d=1, j=4)))
    assert fx_equivalence_check(S, compute_nr((9, 10, 11, 13)))


def test_corrupted_sum_is_caught():
    S = fx_family(FamilySpec("pm", dict(a=5, h=2, d=1))) + RationalTermSum.polynomial({18: -1, 19: 1})
    verdict = fx_equivalence_check(S, compute_nr((5, 9, 11)))
    assert not verdict
    assert verdict.exponent == 18
    assert "x^18" in verdict.describe()


def test_trunc_form_needs_its_constant_term():
    S = fx_family(FamilySpec("trunc-arith", dict(a=7, h=1, d=1, K=1, k=3)))
    T = compute_nr((7, 9, 10))
    assert fx_equivalence_check(S, T)
    without_one = S - RationalTermSum.polynomial([0])
    assert fx_equivalence_check(without_one, T).exponent == 0


def test_expansion_limit():
    S = fx_family(FamilySpec("pm", dict(a=5, h=2, d=1)))
    with pytest.raises(ResourceError):
        fx_equivalence_check(S, compute_nr((5, 9, 11)), max_length=10)


def test_negative_exponent_denominators_are_normalised():
    # 1/(1 - x^-2) = -x^2/(1 - x^2)
    S = RationalTermSum([RationalTerm(LaurentPoly({0: -1}), (-2,))])
    low, coeffs = power_series(S, 6)
    assert list(coeffs[-low:]) == [0, 0, 1, 0, 1, 0, 1]


GRID = dict(a=range(2, 41), h=range(1, 4), d=range(1, 4), j=range(3, 9), k=range(1, 7), K=range(1, 4))


def _points(family):
    fam = FAMILIES[family]
    ranges = dict(GRID, a=range(2, 8)) if family == "square" else GRID
    for values in itertools.product(*(ranges[p] for p in fam.params)):
        point = dict(zip(fam.params, values))
        if fam.admits(point):
            yield point


@pytest.mark.parametrize("family", sorted(FX_FAMILIES))
def test_forms_expand_to_tables(family):
    checked = 0
    for point in _points(family):
        spec = FamilySpec(family, point)
        try:
            S = fx_family(spec)
        except PreconditionError:
            continue
        A = spec.tuple()
        T = compute_nr(A)
        verdict = fx_equivalence_check(S, T)
        assert verdict, (point, verdict.describe())
        low, coeffs = power_series(S, verdict.checked_upto)
        assert max(i for i, c in enumerate(coeffs) if c) + low == max(T.values)
        checked += 1
    assert checked > 10


@pytest.mark.parametrize("family", sorted(FX_FAMILIES))
def test_value_at_one_counts_residues(family):
    point = next(p for p in _points(family) if family not in ("odd-steps", "even-steps") or p["d"] > p["h"])
    spec = FamilySpec(family, point)
    assert value_at_one(fx_family(spec)) == spec.tuple()[0]


def test_square_forms_agree():
    for a in range(2, 11):
        for h in range(1, 4):
            for d in range(1, 4):
                if FAMILIES["square"].admits(dict(a=a, h=h, d=d)):
                    closed = fx_family(FamilySpec("square", dict(a=a, h=h, d=d)))
                    explicit = fx_square_double_sum(a, h, d)
                    T = compute_nr(FAMILIES["square"].build(dict(a=a, h=h, d=d)))
                    assert fx_equivalence_check(closed, T) and fx_equivalence_check(explicit, T)


@pytest.mark.parametrize("family", ["odd-steps", "even-steps"])
def test_step_forms_also_hold_when_d_is_at_most_h(family):
    fam = FAMILIES[family]
    seen = 0
    for a, h, d, k in itertools.product(range(3, 41), range(1, 5), range(1, 5), range(1, 8)):
        point = dict(a=a, h=h, d=d, k=k)
        if not fam.admits(point) or d > h:
            continue
        with pytest.raises(PreconditionError):
            fx_family(FamilySpec(family, point))
        S = fx_family(FamilySpec(family, point), require_d_gt_h=False)
        assert fx_equivalence_check(S, compute_nr(fam.build(point))), point
        seen += 1
    assert seen > 100
