"""Exact combinatorial number sequences.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision, so nothing here can overflow.

Bernoulli convention
--------------------
``bernoulli(1) == -1/2``. This is the convention for which

    t / (1 - e^t) = sum_n  -B_n t^n / n!  = -1 + t/2 - t^2/12 + t^4/720 - ...

which is the expansion the constant-term engine is built on. Using
``B_1 = +1/2`` instead silently flips the sign of every odd correction.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

__all__ = [
    "bernoulli",
    "stirling2",
    "stirling1",
    "falling_factorial",
    "power_sum",
]

_MEMO_LIMIT = 64
_lock = threading.Lock()
_bernoulli_table: list[Fraction] = [Fraction(1)]
_stirling2_rows: list[list[int]] = [[1]]
_stirling1_rows: list[list[int]] = [[1]]


def _extend_bernoulli(n: int) -> list[Fraction]:
    table = list(_bernoulli_table)
    for m in range(len(table), n + 1):
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        acc = sum((comb(m + 1, k) * table[k] for k in range(m)), Fraction(0))
        table.append(-acc / (m + 1))
    return table


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be non-negative")
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    if n < len(_bernoulli_table):
        return _bernoulli_table[n]
    with _lock:
        table = _extend_bernoulli(n)
        if n <= _MEMO_LIMIT:
            _bernoulli_table[len(_bernoulli_table):] = table[len(_bernoulli_table):n + 1]
    return table[n]


def _triangle(rows: list[list[int]], p: int, first_kind: bool) -> list[int]:
    local = [list(r) for r in rows]
    while len(local) <= p:
        q = len(local)
        prev = local[-1]
        row = [0] * (q + 1)
        for k in range(1, q + 1):
            left = prev[k - 1]
            right = prev[k] if k < q else 0
            # first kind (signed): s(q,k) = s(q-1,k-1) - (q-1) s(q-1,k)
            row[k] = left - (q - 1) * right if first_kind else left + k * right
        local.append(row)
    with _lock:
        if len(rows) < min(len(local), _MEMO_LIMIT + 1):
            rows[len(rows):] = local[len(rows):_MEMO_LIMIT + 1]
    return local[p]


def stirling2(p: int, k: int) -> int:
    """Stirling number of the second kind S(p, k)."""
    if p < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    if k > p:
        return 0
    row = _stirling2_rows[p] if p < len(_stirling2_rows) else _triangle(_stirling2_rows, p, False)
    return row[k]


def stirling1(p: int, k: int) -> int:
    """Signed Stirling number of the first kind s(p, k).

    Satisfies ``falling_factorial(n, p) == sum(stirling1(p, k) * n**k)``.
    """
    if p < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    if k > p:
        return 0
    row = _stirling1_rows[p] if p < len(_stirling1_rows) else _triangle(_stirling1_rows, p, True)
    return row[k]


def falling_factorial(n, p: int):
    """n (n-1) ... (n-p+1); the empty product (p = 0) is 1."""
    if p < 0:
        raise ValueError("falling factorial order must be non-negative")
    out = 1
    for i in range(p):
        out *= n - i
    return out


def power_sum(upto: int, p: int) -> int:
    """sum_{r=1}^{upto} r**p, zero when ``upto < 1``."""
    if upto < 1:
        return 0
    if p == 0:
        return upto
    # Faulhaber with B_1 = -1/2 written for the sum up to n-1, then shifted.
    n = upto + 1
    total = sum(comb(p + 1, k) * bernoulli(k) * n ** (p + 1 - k) for k in range(p + 1))
    value = total / (p + 1)
    assert value.denominator == 1
    return int(value)
