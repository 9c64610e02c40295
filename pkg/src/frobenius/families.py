"""Closed-form g / n / s (and s_mu where available) for special tuple families.

Every family is guarded: a formula is only evaluated when its hypotheses
hold, otherwise :class:`PreconditionError` names the first failed
constraint. Intermediate half-integers are carried as ``Fraction`` and the
final values are asserted integral.

Family tags and tuples (all with gcd(a, d) = 1):

=============  ==============================================
``aj``         (a, ha+d, ha+jd)
``a2j``        (a, ha+d, ha+2d, ha+jd)
``square``     (a^2, ha^2+d, ha^2+ad, ha^2+(a+1)d)
``pm``         (a, ha-d, ha+d)
``arith``      (a, ha+d, ha+2d, ..., ha+kd)
``trunc-arith`` (a, ha+(K+1)d, ..., ha+kd)
``odd-steps``  (a, ha+d, ha+3d, ..., ha+(2k+1)d)
``even-steps`` (a, ha+d, ha+2d, ha+4d, ..., ha+2kd)
=============  ==============================================
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from math import ceil, comb, floor, gcd
from typing import Callable, Mapping, Sequence

from .apery import compute_nr, stats_from_nr, sylvester_power_sum
from .errors import ConsistencyError, DomainError, PreconditionError
from .numeric import bernoulli, power_sum
from .stats import StatBundle, make_tuple

__all__ = [
    "FamilySpec",
    "Family",
    "FAMILIES",
    "family_tuple",
    "evaluate_family",
    "scale_g",
    "family_aj",
    "family_a2j",
    "family_square",
    "family_pm",
    "family_arith",
    "family_trunc_arith",
    "family_odd_steps",
    "family_even_steps",
    "hujter_g",
    "sa_line_g",
    "small_j_g",
    "a2j_guard_variant",
]


def _need(cond: bool, name: str):
    if not cond:
        raise PreconditionError(name)


def _int(x, what: str) -> int:
    x = F(x)
    if x.denominator != 1:
        raise ConsistencyError(f"{what} evaluated to non-integer {x}")
    return int(x)


def _positive(**values):
    for name, v in values.items():
        _need(v >= 1, f"{name} >= 1")


def _bundle(A, g, n, s=None, s_mu=None, engine="closed-form") -> StatBundle:
    return StatBundle(
        tuple=tuple(A),
        g=_int(g, "g"),
        n=_int(n, "n"),
        s=None if s is None else _int(s, "s"),
        s_mu=dict(s_mu or {}),
        engine=engine,
    )


def _kt(a: int, j: int) -> tuple[int, int]:
    """Write a = k*j - t with k >= 1 and 0 <= t <= j-1."""
    k = -(-a // j)
    return k, k * j - a


def _power_sum_mu(a: int, nr_values: Sequence[int], max_mu: int) -> dict[int, int]:
    sums = [0] * (max_mu + 2)
    for v in nr_values:
        if v:
            for p in range(max_mu + 2):
                sums[p] += v**p
    return {mu: sylvester_power_sum(a, sums, mu) for mu in range(1, max_mu + 1)}


# -- scaling -----------------------------------------------------------------


def scale_g(a: int, d: int, B: Sequence[int]) -> int:
    """g(a, d*B) from g(a, B): d*g(a, B) + (d-1)*a."""
    _positive(a=a, d=d)
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    base = make_tuple((a,) + tuple(B))
    make_tuple((a,) + tuple(d * b for b in B))
    return d * compute_nr(base).frobenius + (d - 1) * a


# -- (a, ha+d, ha+jd) ---------------------------------------------------------


def _tuple_aj(p):
    a, h, d, j = p["a"], p["h"], p["d"], p["j"]
    return (a, h * a + d, h * a + j * d)


def _guard_aj(p):
    a, h, d, j = p["a"], p["h"], p["d"], p["j"]
    _positive(h=h, d=d)
    _need(a > 2, "a > 2")
    _need(j > 2, "j > 2")
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(h >= d, "h >= d")
    k, t = _kt(a, j)
    _need(h * k + d - h * t >= 0, "hk + d - ht >= 0")


def family_aj(a: int, h: int, d: int, j: int) -> StatBundle:
    p = dict(a=a, h=h, d=d, j=j)
    _guard_aj(p)
    k, t = _kt(a, j)
    if t == 0:
        g = F(h * a * a, j) + (j - 2) * h * a + (a - 1) * d - a
    elif t == 1:
        g = F(h * a * (a + 1), j) + (j - 3) * h * a + (a - 1) * d - a
    else:
        g = (a // j) * (h * a + j * d) + (j - 2) * h * a - d - a
    n = F((a - 1) * (h * a + d - 1), 2) - F(h * (j - 1) * (a - t), 2) * (F(a + t, j) - 1)
    c = h * a + d
    s = (
        F(c * c * (2 * a * a - 3 * a + 1), 12)
        + F(h * h * a * (j - 1) ** 2 * (k - 1), 6) * (j * k * k - F(j * k, 2) - 3 * t * k + 3 * t)
        - F(h * c * (j - 1) * (k - 1), 6)
        * (2 * j * j * (k * k + F(k, 4)) - 2 * k * j * (3 * t + F(3, 4)) + 3 * t * (t + 1))
        - F(a * c * (a - 1), 4)
        + F(h * a * (j - 1) * (a - t), 4) * (F(a + t, j) - 1)
        + F(a * a - 1, 12)
    )
    return _bundle(_tuple_aj(p), g, n, s)


# -- (a, ha+d, ha+2d, ha+jd) --------------------------------------------------


def _tuple_a2j(p):
    a, h, d, j = p["a"], p["h"], p["d"], p["j"]
    return (a, h * a + d, h * a + 2 * d, h * a + j * d)


def _weak_guard_a2j(p):
    a, h, d, j = p["a"], p["h"], p["d"], p["j"]
    _positive(h=h, d=d)
    _need(a >= 2, "a >= 2")
    _need(j >= 4, "j >= 4")
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(h >= d, "h >= d")
    k, t = _kt(a, j)
    _need(k + 1 - ceil(F(t, 2)) >= 0, "k + 1 - ceil(t/2) >= 0")


def _guard_a2j(p):
    _weak_guard_a2j(p)
    # N_{dr}(m) is non-decreasing in m only when h(k - ceil(t/2)) + d >= 0;
    # the weaker k + 1 - ceil(t/2) >= 0 admits counterexamples once h > d
    a, h, d, j = p["a"], p["h"], p["d"], p["j"]
    k, t = _kt(a, j)
    _need(h * (k - ceil(F(t, 2))) + d >= 0, "hk + d - h*ceil(t/2) >= 0")


def a2j_guard_variant(a: int, h: int, d: int, j: int) -> str | None:
    """Which hypothesis set an (a, h, d, j) instance satisfies.

    ``"monotone"`` when the formulas are valid, ``"weak-only"`` when only
    the weaker k + 1 - ceil(t/2) >= 0 holds, ``None`` when neither does.
    """
    p = dict(a=a, h=h, d=d, j=j)
    try:
        _weak_guard_a2j(p)
    except PreconditionError:
        return None
    try:
        _guard_a2j(p)
    except PreconditionError:
        return "weak-only"
    return "monotone"


def _a2j_s(a, h, d, j, k, t) -> F:
    A2H2 = a * a * h * h
    adh = a * d * h
    poly = (
        A2H2 * j**3 * k + 3 * A2H2 * j**2 * k**2 + 4 * A2H2 * j * k**3 + 3 * adh * j**3 * k**2
        + 8 * adh * j**2 * k**3 + 4 * d * d * j**3 * k**3 - 3 * j**2 * A2H2 * k
        - 3 * A2H2 * j**2 * t - 6 * A2H2 * j * k**2 - 12 * A2H2 * j * k * t + 3 * A2H2 * j * t**2
        - 12 * A2H2 * k**2 * t + 6 * A2H2 * k * t**2 - A2H2 * t**3
        + adh * j**3 * k - 6 * adh * j**2 * k**2 - 12 * adh * j**2 * k * t - 24 * adh * j * k**2 * t
        + 6 * adh * j * k * t**2 - 12 * d * d * j**2 * k**2 * t
        + 12 * A2H2 * j * t + 24 * A2H2 * k * t - 6 * A2H2 * t**2 - 3 * a * a * h * j**2 * k
        - 6 * a * a * h * j * k**2 - 5 * adh * j**2 * k + 24 * adh * j * k * t + 6 * adh * j * t**2
        + 12 * adh * k * t**2 - 4 * adh * t**3 - 6 * a * d * j**2 * k**2 - 6 * d * d * j**2 * k**2
        + 12 * d * d * j * k * t**2 + 6 * a * a * h * j * k + 6 * a * a * h * j * t + 12 * a * a * h * k * t
        - 3 * a * a * h * t**2 + 6 * adh * j * t + 12 * adh * k * t - 15 * adh * t**2 + 12 * a * d * j * k * t
        + 12 * d * d * j * k * t - 4 * d * d * t**3 - 12 * a * a * h * t + 6 * a * d * j * k
        - 6 * a * d * t**2 + 2 * d * d * j * k - 6 * d * d * t**2 + 2 * a**3 - 6 * a * d * t
        - 2 * d * d * t - 2 * a
    )
    j_odd, t_even = j % 2 == 1, t % 2 == 0
    if j_odd and t_even:
        tilde = (j * A2H2 * k - 3 * A2H2 * k**2 - 9 * adh * j * k**2 + 3 * A2H2 * k - 11 * A2H2 * t
                 + 5 * adh * j * k + 3 * a * a * h * k + 3 * adh * k - 8 * adh * t)
    elif j_odd:
        tilde = (j * A2H2 * k - 3 * A2H2 * k**2 - 9 * adh * j * k**2 + 3 * A2H2 * j + 9 * A2H2 * k
                 - 14 * A2H2 * t + 11 * adh * j * k - 6 * A2H2 + 3 * a * a * h * k + 3 * adh * k
                 - 14 * adh * t - 3 * a * a * h - 3 * adh)
    elif not t_even:
        tilde = (4 * j * A2H2 * k - 6 * adh * j * k**2 - 3 * A2H2 * j - 6 * A2H2 * k - 11 * A2H2 * t
                 + 2 * adh * j * k + 6 * A2H2 - 8 * adh * t + 3 * a * a * h + 3 * adh)
    else:
        tilde = 4 * j * A2H2 * k - 6 * adh * j * k**2 - 14 * A2H2 * t + 8 * adh * j * k - 14 * adh * t
    return F(poly + tilde, 24 * a)


def family_a2j(a: int, h: int, d: int, j: int) -> StatBundle:
    _guard_a2j(dict(a=a, h=h, d=d, j=j))
    return _a2j_values(a, h, d, j)


def _a2j_values(a, h, d, j) -> StatBundle:
    p = dict(a=a, h=h, d=d, j=j)
    k, t = _kt(a, j)
    s0 = (a - 1) // j
    first = h * a * (s0 + ceil(F(a - 1, 2) - F(j, 2) * s0)) + (a - 1) * d - a
    second = h * a * (s0 + ceil(F(j - 1, 2)) - 1) + (j * s0 - 1) * d - a
    g = max(first, second)
    n = F((a - 1) * (d - 1), 2) + F(h * (k - 1), 2) * (j * k - 2 * t)
    if j % 2 == 1:
        n += F(h * (j - 1) * (j + 1) * (k - 1), 4)
        n += F(h * (j - t - 1) * (j - t + 1), 4) if t % 2 == 0 else F(h * (j - t) ** 2, 4)
    else:
        n += F(h * j * j * (k - 1), 4)
        n += F(h * (j - t) ** 2, 4) if t % 2 == 0 else F(h * (j - t - 1) * (j - t + 1), 4)
    return _bundle(_tuple_a2j(p), g, n, _a2j_s(a, h, d, j, k, t))


def small_j_g(j: int, a: int) -> int:
    """g(a, a+1, a+2, a+j) for j in {4, 5, 6}, a >= 2, via floor expressions."""
    _need(a >= 2, "a >= 2")
    fl = lambda x: x // j  # noqa: E731
    if j == 4:
        return (a + 1) * fl(a) + fl(a + 1) + 2 * fl(a + 2) - 1
    if j == 5:
        return a * fl(a + 1) + fl(a) + fl(a + 1) + fl(a + 2) + 2 * fl(a + 3) - 1
    if j == 6:
        return (a * fl(a) + 2 * fl(a) + 2 * fl(a + 1) + 5 * fl(a + 2) + fl(a + 3)
                + fl(a + 4) + fl(a + 5) - 1)
    raise DomainError("only j = 4, 5, 6 have floor formulas")


# -- (a^2, ha^2+d, ha^2+ad, ha^2+(a+1)d) -------------------------------------


def _tuple_square(p):
    a, h, d = p["a"], p["h"], p["d"]
    q = a * a
    return (q, h * q + d, h * q + a * d, h * q + (a + 1) * d)


def _guard_square(p):
    _positive(h=p["h"], d=p["d"])
    _need(p["a"] > 1, "a > 1")
    _need(gcd(p["a"], p["d"]) == 1, "gcd(a, d) = 1")


def family_square(a: int, h: int, d: int) -> StatBundle:
    p = dict(a=a, h=h, d=d)
    _guard_square(p)
    g = h * a**3 + (d - h - 1) * a * a - d
    n = F(2, 3) * h * a**3 + F(d - h - 1, 2) * a * a - F(h * a, 6) + F(1 - d, 2)
    s = F(
        6 * h * h * a**6
        + (9 * d * h - 8 * h * h - 8 * h) * a**5
        + (4 * d * d - 5 * d * h - 6 * d + 6 * h + 2) * a**4
        + (2 * h * h - 11 * d * h + 2 * h) * a**3
        + (5 * d * h - 6 * d * d + 6 * d) * a**2
        + 2 * d * h * a
        + 2 * d * d
        - 2,
        24,
    )
    return _bundle(_tuple_square(p), g, n, s)


# -- (a, ha-d, ha+d) ----------------------------------------------------------


def _tuple_pm(p):
    a, h, d = p["a"], p["h"], p["d"]
    return (a, h * a - d, h * a + d)


def _guard_pm(p):
    a, h, d = p["a"], p["h"], p["d"]
    _positive(h=h, d=d)
    _need(a >= 2, "a >= 2")
    _need(gcd(a, d) == 1, "gcd(a, d) = 1")
    _need(h * a - d > 1, "ha - d > 1")


def family_pm(a: int, h: int, d: int, max_mu: int = 1) -> StatBundle:
    p = dict(a=a, h=h, d=d)
    _guard_pm(p)
    lo, hi = h * a - d, h * a + d
    s = lo // (2 * h)
    g = max(s * hi - a, (a - ceil(F(lo, 2 * h))) * lo - a)
    n = F(hi, 2 * a) * s * (s + 1) + F(lo, 2 * a) * (a - s) * (a - s - 1) - F(a - 1, 2)
    sylv = (
        (F(hi * hi * (2 * s + 1), 12 * a) - F(hi, 4)) * s * (s + 1)
        + (F(lo * lo * (2 * a - 2 * s - 1), 12 * a) - F(lo, 4)) * (a - s) * (a - s - 1)
        + F(a * a - 1, 12)
    )
    s_mu = {}
    for mu in range(1, max_mu + 1):
        total = F(0)
        for kappa in range(mu + 1):
            q = mu + 1 - kappa
            inner = hi**q * power_sum(s, q) + lo**q * power_sum(a - s - 1, q)
            total += comb(mu + 1, kappa) * bernoulli(kappa) * F(a) ** (kappa - 1) * inner
        total = total / (mu + 1) + bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
        s_mu[mu] = _int(total, f"s_{mu}")
    return _bundle(_tuple_pm(p), g, n, sylv, s_mu)


# -- (a, ha+d, ..., ha+kd) ----------------------------------------------------


def _tuple_arith(p):
    a, h, d, k = p["a"], p["h"], p["d"], p["k"]
    return (a,) + tuple(h * a + i * d for i in range(1, k + 1))


def _guard_arith(p):
    a, k = p["a"], p["k"]
    _positive(h=p["h"], d=p["d"])
    _need(a >= 2, "a >= 2")
    _need(gcd(a, p["d"]) == 1, "gcd(a, d) = 1")
    _need(1 <= k <= a - 1, "1 <= k <= a - 1")


def family_arith(a: int, h: int, d: int, k: int, max_mu: int = 1) -> StatBundle:
    p = dict(a=a, h=h, d=d, k=k)
    _guard_arith(p)
    s, r1 = divmod(a - 1, k)
    g = h * a * ((a - 2) // k + 1) + (d - 1) * (a - 1) - 1
    q = (a - 1) // k
    n = h * (q + 1) * (a - 1 - F(k, 2) * q) + F((d - 1) * (a - 1), 2)
    sylv = (
        F(a * (s + 1) * h * h, 6) * (k * s * s + F(k * s, 2) + 3 * s * r1 + 3 * r1)
        + F((a - 1) * (d - 1), 6) * (a * d - F(d, 2) - F(a, 2) - F(1, 2))
        - F(h * (s + 1), 4)
        * (-F(4, 3) * d * k * k * s * s + (F(k * d, 3) - 4 * d * r1 - d + a) * k * s
           + 2 * r1 * (-r1 * d - d + a))
    )
    nr = [h * a * -(-r // k) + d * r for r in range(1, a)]
    return _bundle(_tuple_arith(p), g, n, sylv, _power_sum_mu(a, nr, max_mu))


# -- (a, ha+(K+1)d, ..., ha+kd) -------------------------------------------------


def _tuple_trunc(p):
    a, h, d, K, k = p["a"], p["h"], p["d"], p["K"], p["k"]
    return (a,) + tuple(h * a + i * d for i in range(K + 1, k + 1))


def _weak_guard_trunc(p):
    a, K, k = p["a"], p["K"], p["k"]
    _positive(h=p["h"], d=p["d"], K=K)
    _need(a >= 2, "a >= 2")
    _need(gcd(a, p["d"]) == 1, "gcd(a, d) = 1")
    _need(2 * K <= k - 1, "K <= (k-1)/2")


def _guard_trunc(p):
    _weak_guard_trunc(p)
    # the maximum sits at residue K, which must exist
    _need(p["a"] > p["K"], "a > K")


def family_trunc_arith(a: int, h: int, d: int, K: int, k: int) -> StatBundle:
    _guard_trunc(dict(a=a, h=h, d=d, K=K, k=k))
    return _trunc_values(a, h, d, K, k)


def _trunc_values(a, h, d, K, k) -> StatBundle:
    p = dict(a=a, h=h, d=d, K=K, k=k)
    q, r1 = divmod(a + K, k)
    g = h * a * -(-(a + K) // k) + d * (a + K) - a
    base = F((a - 1) * (d - 1), 2) + K * d
    if r1 >= K + 1:
        n = h * ((q + 1) * (F(q * k, 2) + r1 - 1) - K) + base
    else:
        n = h * ((q + 1) * (F(q * k, 2) + r1) - K - q) + base
    return _bundle(_tuple_trunc(p), g, n)


# -- (a, ha+d, ha+3d, ..., ha+(2k+1)d) -----------------------------------------


def _tuple_odd(p):
    a, h, d, k = p["a"], p["h"], p["d"], p["k"]
    return (a, h * a + d) + tuple(h * a + (2 * i + 1) * d for i in range(1, k + 1))


def _guard_odd(p):
    a, k = p["a"], p["k"]
    _positive(h=p["h"], d=p["d"], k=k)
    _need(a > 2, "a > 2")
    _need(gcd(a, p["d"]) == 1, "gcd(a, d) = 1")
    _need(3 <= 2 * k + 1 <= a - 1, "3 <= 2k+1 <= a-1")


def family_odd_steps(a: int, h: int, d: int, k: int) -> StatBundle:
    p = dict(a=a, h=h, d=d, k=k)
    _guard_odd(p)
    w = 2 * k + 1
    s = (a - 2) // w
    t = a - 1 - w * s
    if t % 2 == 0:
        g = h * a * ((a - 2) // w + 2) + (a - 1) * d - a
    else:
        g = max(h * a * ((a - 2) // w + 1) + (a - 1) * d - a,
                h * a * ((a - 3) // w + 2) + (a - 2) * d - a)
    n = h * s * (k * s + t + F(s, 2) - F(1, 2)) + (a - 1) * (F(d, 2) + h - F(1, 2)) + h * (t // 2)
    return _bundle(_tuple_odd(p), g, n)


# -- (a, ha+d, ha+2d, ha+4d, ..., ha+2kd) --------------------------------------


def _tuple_even(p):
    a, h, d, k = p["a"], p["h"], p["d"], p["k"]
    return (a, h * a + d) + tuple(h * a + 2 * i * d for i in range(1, k + 1))


def _guard_even(p):
    a, k = p["a"], p["k"]
    _positive(h=p["h"], d=p["d"], k=k)
    _need(a > 2, "a > 2")
    _need(gcd(a, p["d"]) == 1, "gcd(a, d) = 1")
    _need(2 <= 2 * k <= a - 1, "2 <= 2k <= a-1")


def family_even_steps(a: int, h: int, d: int, k: int) -> StatBundle:
    p = dict(a=a, h=h, d=d, k=k)
    _guard_even(p)
    w = 2 * k
    if a % 2 == 0:
        t = a - 1 - w * ((a - 2) // w)
        if t != 1:
            g = h * a * ((a - 2) // w + 2) + (a - 1) * d - a
        else:
            g = h * a * (F(a - 2, w) + 1) + (a - 1) * d - a
    else:
        t = a - 2 - w * ((a - 3) // w)
        first = h * a * ((a - 2) // w + 1) + (a - 1) * d - a
        if t != 1:
            g = max(first, h * a * ((a - 3) // w + 2) + (a - 2) * d - a)
        else:
            g = first
    s = (a - 2) // w
    t = a - 1 - w * s
    n = h * (s * s * k + s * t - s - 1) + (a - 1) * (h + F(d, 2) - F(1, 2)) + h * ceil(F(t, 2))
    return _bundle(_tuple_even(p), g, n)


# -- named corollaries ----------------------------------------------------------


def hujter_g(a: int) -> int:
    """g(a^2, a^2+1, a^2+a) = 2a^3 - 2a^2 - 1 for a >= 3."""
    _need(a >= 3, "a >= 3")
    return 2 * a**3 - 2 * a * a - 1


def sa_line_g(s: int, a: int) -> int:
    """g(sa, sa+1, sa+a) = as(a+s-2) - 1 for a > 2, s >= 1."""
    _need(a > 2, "a > 2")
    _need(s >= 1, "s >= 1")
    return a * s * (a + s - 2) - 1


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    tag: str
    params: tuple[str, ...]
    build: Callable[[Mapping[str, int]], tuple]
    guard: Callable[[Mapping[str, int]], None]
    evaluate: Callable[..., StatBundle]
    stats: tuple[str, ...]
    supports_mu: bool = False
    description: str = ""
    weak_guard: Callable[[Mapping[str, int]], None] | None = None
    unguarded: Callable[..., StatBundle] | None = None

    def admits(self, params: Mapping[str, int], weak: bool = False) -> bool:
        """Whether ``params`` satisfy the adopted (or, with ``weak``, the weaker) hypotheses."""
        guard = self.weak_guard if weak and self.weak_guard else self.guard
        try:
            guard(params)
        except PreconditionError:
            return False
        return True


FAMILIES: dict[str, Family] = {
    f.tag: f
    for f in [
        Family("aj", ("a", "h", "d", "j"), _tuple_aj, _guard_aj, family_aj, ("g", "n", "s"),
               description="(a, ha+d, ha+jd)"),
        Family("a2j", ("a", "h", "d", "j"), _tuple_a2j, _guard_a2j, family_a2j, ("g", "n", "s"),
               description="(a, ha+d, ha+2d, ha+jd)",
               weak_guard=_weak_guard_a2j, unguarded=_a2j_values),
        Family("square", ("a", "h", "d"), _tuple_square, _guard_square, family_square, ("g", "n", "s"),
               description="(a^2, ha^2+d, ha^2+ad, ha^2+(a+1)d)"),
        Family("pm", ("a", "h", "d"), _tuple_pm, _guard_pm, family_pm, ("g", "n", "s"), True,
               description="(a, ha-d, ha+d)"),
        Family("arith", ("a", "h", "d", "k"), _tuple_arith, _guard_arith, family_arith, ("g", "n", "s"), True,
               description="(a, ha+d, ..., ha+kd)"),
        Family("trunc-arith", ("a", "h", "d", "K", "k"), _tuple_trunc, _guard_trunc, family_trunc_arith,
               ("g", "n"), description="(a, ha+(K+1)d, ..., ha+kd)",
               weak_guard=_weak_guard_trunc, unguarded=_trunc_values),
        Family("odd-steps", ("a", "h", "d", "k"), _tuple_odd, _guard_odd, family_odd_steps, ("g", "n"),
               description="(a, ha+d, ha+3d, ..., ha+(2k+1)d)"),
        Family("even-steps", ("a", "h", "d", "k"), _tuple_even, _guard_even, family_even_steps, ("g", "n"),
               description="(a, ha+d, ha+2d, ha+4d, ..., ha+2kd)"),
    ]
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        missing = set(FAMILIES[self.family].params) - set(self.params)
        if missing:
            raise DomainError(f"missing parameters {sorted(missing)} for {self.family}")
        object.__setattr__(self, "params", {k: int(self.params[k]) for k in FAMILIES[self.family].params})

    def check(self) -> None:
        FAMILIES[self.family].guard(self.params)

    def tuple(self) -> tuple[int, ...]:
        return make_tuple(FAMILIES[self.family].build(self.params))


def family_tuple(family: str, **params) -> tuple[int, ...]:
    return FamilySpec(family, params).tuple()


def evaluate_family(spec: FamilySpec, max_mu: int = 1) -> StatBundle:
    fam = FAMILIES[spec.family]
    if fam.supports_mu:
        return fam.evaluate(**spec.params, max_mu=max_mu)
    return fam.evaluate(**spec.params)
