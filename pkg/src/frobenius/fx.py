"""f(x) = sum_r x^{N_r} as a sum of rational terms.

``fx_from_table`` packages any residue table as a polynomial. ``fx_family``
builds the closed rational-term form for each tuple family, with the
geometric blocks (1 - x^{cn}) / (1 - x^c) left unexpanded so that
constant-term evaluation stays cheap. ``fx_equivalence_check`` expands a
sum back into a polynomial and compares it against a table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional

import numpy as np

from .apery import NrTable
from .ct import LaurentPoly, RationalTerm, RationalTermSum, power_series
from .errors import DomainError, PreconditionError, ResourceError
from .families import FAMILIES, FamilySpec

__all__ = [
    "fx_from_table",
    "fx_family",
    "fx_square_double_sum",
    "fx_equivalence_check",
    "FxVerdict",
    "FX_FAMILIES",
    "arith_f1_term",
    "arith_f1_value",
]


def _x(e: int, c=1) -> LaurentPoly:
    return LaurentPoly({e: c})


def _one_minus(e: int) -> LaurentPoly:
    """1 - x^e (zero when e = 0)."""
    return LaurentPoly({0: 1}) - _x(e)


def _t(num: LaurentPoly, *den: int) -> RationalTerm:
    return RationalTerm(num, den)


def _need(cond: bool, name: str):
    if not cond:
        raise PreconditionError(name)


def fx_from_table(T: NrTable) -> RationalTermSum:
    return RationalTermSum.polynomial(T.values)


# ---------------------------------------------------------------------------
# family constructors


def _fx_aj(a, h, d, j):
    _need(j > 2, "j > 2")
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(d <= h, "d <= h")
    k = -(-a // j)
    t = k * j - a
    _need(h * k + d - h * t >= 0, "hk + d - ht >= 0")
    u, v = h * a + d, h * a + j * d
    return RationalTermSum([
        _t(_one_minus(j * u) * _one_minus(v * (k - 1)), u, v),
        _t(_x((k - 1) * v) * _one_minus(u * (j - t)), u),
    ])


def _fx_a2j(a, h, d, j):
    FAMILIES["a2j"].guard(dict(a=a, h=h, d=d, j=j))
    k = -(-a // j)
    t = k * j - a
    u1, u2, v = h * a + d, h * a + 2 * d, h * a + j * d
    head = _t(_one_minus(v * k), v)
    e1 = k * h * a + ((k - 1) * j + 1) * d
    e2 = k * h * a + ((k - 1) * j + 2) * d
    if (j - 1) % 2 == 0:
        middle = _t(_one_minus(u2 * (j - 1) // 2) * _one_minus(v * (k - 1)) * (_x(u1) + _x(u2)), u2, v)
    else:
        middle = _t(
            _one_minus(v * (k - 1)) * (_x(u1) * _one_minus(u2 * j // 2) + _x(u2) * _one_minus(u2 * (j - 2) // 2)),
            u2,
            v,
        )
    if ((j - 1) % 2 == 0) == (t % 2 == 0):
        tail = [_t(_one_minus(u2 * (j - t - 1) // 2) * (_x(e1) + _x(e2)), u2)]
    else:
        tail = [
            _t(_x(e1) * _one_minus(u2 * (j - t) // 2), u2),
            _t(_x(e2) * _one_minus(u2 * (j - t - 2) // 2), u2),
        ]
    return RationalTermSum([head, middle] + tail)


def _fx_pm(a, h, d):
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(h >= 1 and d >= 1, "h, d >= 1")
    _need(h * a - d > 1, "ha - d > 1")
    r1 = (h * a - d) // (2 * h)
    p, m = h * a + d, h * a - d
    return RationalTermSum([
        _t(_one_minus(p * (r1 + 1)), p),
        _t(_x(m) * _one_minus(m * (a - r1 - 1)), m),
    ])


def _square_guard(a, h, d):
    _need(a > 1, "a > 1")
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(h >= 1 and d >= 1, "h, d >= 1")


def fx_square_double_sum(a: int, h: int, d: int) -> RationalTermSum:
    """The square family's f(x) as an explicit double sum of monomials."""
    _square_guard(a, h, d)
    A2 = a * a
    exps = [(m + i) * h * A2 + (m * (a + 1) + i) * d for m in range(a) for i in range(a - m)]
    exps += [(m + 1) * h * A2 + ((m + 1) * a + i) * d for m in range(a - 1) for i in range(m + 1)]
    return RationalTermSum.polynomial(exps)


def _fx_square(a, h, d):
    _square_guard(a, h, d)
    A2 = a * a
    u, w, z = h * A2 + d, h * A2 + a * d + d, h * A2 + a * d
    return RationalTermSum([
        _t(_x(a * w) - _x(a * u), a * d, u),
        _t(_one_minus(a * w), u, w),
        _t(_x(a * w) - _x(w), w, d),
        _t(_x(z) - _x(A2 * (h * a + d)), z, d),
    ])


def _fx_trunc(a, h, d, K, k):
    FAMILIES["trunc-arith"].guard(dict(a=a, h=h, d=d, K=K, k=k))
    q, r1 = divmod(a + K, k)
    v = h * a + d * k
    correction = q * h * a + d * a if r1 <= K else (q + 1) * h * a + d * a
    return RationalTermSum([
        _t(_x(0)),
        _t(_x(h * a + d * (K + 1)) * _one_minus(d * (k - K)), d),
        _t(_x(2 * h * a + d * (k + 1)) * _one_minus(v * (q - 1)) * _one_minus(d * k), v, d),
        _t(_x((q + 1) * h * a + d * (q * k + 1)) * _one_minus(d * r1), d),
        _t(_x(correction, -1)),
    ])


def _fx_arith(a, h, d, k):
    FAMILIES["arith"].guard(dict(a=a, h=h, d=d, k=k))
    s, r1 = divmod(a - 1, k)
    v = h * a + d * k
    return RationalTermSum([
        _t(_x(0)),
        _t(_one_minus(d * k) * _x(h * a + d) * _one_minus(v * s), d, v),
        _t(_x((s + 1) * h * a + d * (s * k + 1)) * _one_minus(d * r1), d),
    ])


def _steps_guard(family, a, h, d, k, require_d_gt_h):
    FAMILIES[family].guard(dict(a=a, h=h, d=d, k=k))
    if require_d_gt_h:
        _need(d > h, "d > h")


def _fx_even(a, h, d, k, require_d_gt_h=True):
    _steps_guard("even-steps", a, h, d, k, require_d_gt_h)
    s, t = divmod(a - 2, 2 * k)
    t += 1
    v = h * a + 2 * k * d
    terms = [
        _t(_x(0)),
        _t(_x(h * a + d) * _one_minus(v * (s + 1)), v),
        _t(_x(h * a + 2 * d) * _one_minus(v * s) * _one_minus(2 * d * k), v, 2 * d),
        _t(_x(2 * h * a + 3 * d) * _one_minus(v * s) * _one_minus(2 * d * (k - 1)), v, 2 * d),
    ]
    e1 = h * a * (s + 1) + d * (2 * k * s + 2)
    e2 = h * a * (s + 2) + d * (2 * k * s + 3)
    if t % 2:
        terms += [_t(_x(e1) * _one_minus(d * (t - 1)), 2 * d), _t(_x(e2) * _one_minus(d * (t - 1)), 2 * d)]
    else:
        terms += [_t(_x(e1) * _one_minus(d * t), 2 * d), _t(_x(e2) * _one_minus(d * (t - 2)), 2 * d)]
    return RationalTermSum(terms)


def _fx_odd(a, h, d, k, require_d_gt_h=True):
    _steps_guard("odd-steps", a, h, d, k, require_d_gt_h)
    top = 2 * k + 1
    s, t = divmod(a - 2, top)
    t += 1
    v = h * a + top * d
    terms = [
        _t(_x(0)),
        _t(_x(h * a + d) * _one_minus(v * s) * _one_minus(2 * d * (k + 1)), v, 2 * d),
        _t(_x(2 * h * a + 2 * d) * _one_minus(v * s) * _one_minus(2 * d * k), v, 2 * d),
    ]
    e1 = h * a * (s + 1) + d * (top * s + 1)
    e2 = h * a * (s + 2) + d * (top * s + 2)
    if t % 2:
        terms += [_t(_x(e1) * _one_minus(d * (t + 1)), 2 * d), _t(_x(e2) * _one_minus(d * (t - 1)), 2 * d)]
    else:
        terms += [_t(_x(e1) * _one_minus(d * t), 2 * d), _t(_x(e2) * _one_minus(d * t), 2 * d)]
    return RationalTermSum(terms)


FX_FAMILIES = {
    "aj": _fx_aj,
    "a2j": _fx_a2j,
    "pm": _fx_pm,
    "square": _fx_square,
    "trunc-arith": _fx_trunc,
    "arith": _fx_arith,
    "even-steps": _fx_even,
    "odd-steps": _fx_odd,
}


def fx_family(spec: FamilySpec, require_d_gt_h: bool = True) -> RationalTermSum:
    """Closed rational-term form of f(x) for a family instance.

    The step families are only claimed for d > h; pass
    ``require_d_gt_h=False`` to build them anyway (for probing).
    """
    if spec.family not in FX_FAMILIES:
        raise DomainError(f"no f(x) form for family {spec.family!r}")
    build = FX_FAMILIES[spec.family]
    if spec.family in ("even-steps", "odd-steps"):
        return build(**spec.params, require_d_gt_h=require_d_gt_h)
    return build(**spec.params)


# ---------------------------------------------------------------------------
# the worked arithmetic-family term


def arith_f1_term(a: int, h: int, d: int, k: int, s: int) -> RationalTerm:
    """-dk x^{dk+ah+d-1} (1 - x^{(ah+dk)s}) / ((1 - x^d)(1 - x^{ah+dk}))."""
    v = a * h + d * k
    return _t(_x(d * k + a * h + d - 1, -d * k) * _one_minus(v * s), d, v)


def arith_f1_value(a: int, h: int, d: int, k: int, s: int):
    """Closed value of :func:`arith_f1_term` at x = 1."""
    return Fraction(k * s, 2) * (a * h * s + d * k * s + a * h + d * k + d - 2)


# ---------------------------------------------------------------------------
# equivalence


@dataclass(frozen=True)
class FxVerdict:
    equal: bool
    exponent: Optional[int] = None
    expected: Optional[int] = None
    found: Optional[object] = None
    checked_upto: int = 0

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return f"equal (checked through x^{self.checked_upto})"
        return f"mismatch at x^{self.exponent}: expected {self.expected}, found {self.found}"


def _check_bound(S: RationalTermSum, degree: int) -> int:
    """Expansion length that decides S == polynomial of the given degree.

    With Q the least common multiple of all denominator factors, S*Q minus
    the polynomial times Q is a polynomial; if the series of S agrees with
    the polynomial up to its degree, the difference vanishes identically.
    """
    mult: dict[int, int] = {}
    top = degree
    for term in S.terms:
        den = [abs(b) for b in term.den]
        for b in set(den):
            mult[b] = max(mult.get(b, 0), den.count(b))
        shift = sum(-b for b in term.den if b < 0)
        top = max(top, term.numerator.high + shift - sum(den))
    return top + sum(b * m for b, m in mult.items())


def fx_equivalence_check(S: RationalTermSum, T: NrTable, max_length: int = 10**7) -> FxVerdict:
    """Does S expand to exactly sum_r x^{N_r}?"""
    degree = max(T.values)
    upto = _check_bound(S, degree)
    if upto + 1 > max_length:
        raise ResourceError(f"equivalence check needs {upto + 1} coefficients, limit {max_length}")
    low, coeffs = power_series(S, upto, max_length)
    expected = np.zeros(upto - low + 1, dtype=np.int64)
    np.add.at(expected, np.asarray(T.values, dtype=np.int64) - low, 1)
    diff = np.nonzero(coeffs != expected)[0]
    if len(diff):
        i = int(diff[0])
        found = coeffs[i]
        return FxVerdict(False, low + i, int(expected[i]), int(found) if isinstance(found, (int, np.integer)) else found, upto)
    return FxVerdict(True, checked_upto=upto)
