"""Constant-term evaluation of sums of rational terms N(x) / prod (1 - x^b).

A :class:`RationalTermSum` that is finite at x = 1 is evaluated there by
substituting x = e^t and reading off the constant term of the Laurent
series in t. Each denominator factor contributes

    1 / (1 - e^{bt}) = t^{-1} * sum_n  -B_n b^{n-1} t^n / n!

so a term with m factors needs its numerator series only up to t^m.
Evaluation at another point lam substitutes x = lam * e^t; factors with
lam^b != 1 are then ordinary invertible series and only the factors with
lam^b = 1 create poles.

Denominators are kept as multisets of exponents and never multiplied out,
so differentiation and products stay inside the representation.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ConsistencyError, DomainError, PoleError, ResourceError
from .numeric import bernoulli, stirling2
from .stats import StatBundle

__all__ = [
    "TruncatedSeries",
    "LaurentPoly",
    "RationalTerm",
    "RationalTermSum",
    "series_exp",
    "series_t_over_one_minus_exp",
    "laurent_coefficients",
    "ct_term",
    "differentiate",
    "value_at_one",
    "value_at",
    "power_series",
    "stats_via_ct",
    "STORED_ORDER",
]

STORED_ORDER = 30


# ---------------------------------------------------------------------------
# truncated series


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{i} coefficients[i] * t^(offset + i), known up to t^order exactly."""

    coefficients: tuple[Fraction, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return self.offset + len(self.coefficients) - 1

    def __getitem__(self, power: int) -> Fraction:
        if power > self.order:
            raise IndexError(f"t^{power} is beyond the truncation order {self.order}")
        i = power - self.offset
        return self.coefficients[i] if i >= 0 else Fraction(0)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: max(0, order - self.offset + 1)], self.offset)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        low = min(self.offset, other.offset)
        return TruncatedSeries([self[p] + other[p] for p in range(low, order + 1)], low)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coefficients], self.offset)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries([c * x for x in self.coefficients], self.offset)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        return TruncatedSeries(self.coefficients, self.offset + k)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        # the product is exact up to the smaller of (each order + other's lowest power)
        offset = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        n = order - offset + 1
        out = [Fraction(0)] * max(n, 0)
        for i, x in enumerate(self.coefficients[:n]):
            if x:
                for j, y in enumerate(other.coefficients[: n - i]):
                    out[i + j] += x * y
        return TruncatedSeries(out, offset)

    def inverse(self) -> "TruncatedSeries":
        """1/S for a series with nonzero constant term and offset 0."""
        if self.offset != 0 or not self.coefficients or self.coefficients[0] == 0:
            raise DomainError("series is not invertible")
        c = self.coefficients
        inv = [1 / c[0]]
        for n in range(1, len(c)):
            inv.append(-sum((c[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0)) / c[0])
        return TruncatedSeries(inv)


def series_exp(order: int, c=1) -> TruncatedSeries:
    """e^{ct} up to t^order."""
    if order < 0:
        raise DomainError("order must be non-negative")
    c = Fraction(c)
    return TruncatedSeries([c**n / factorial(n) for n in range(order + 1)])


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(order: int) -> tuple[Fraction, ...]:
    return tuple(-bernoulli(n) / factorial(n) for n in range(order + 1))


def series_t_over_one_minus_exp(b: int, order: int) -> TruncatedSeries:
    """t / (1 - e^{bt}) up to t^order: coefficients -B_n b^(n-1) / n!."""
    if b == 0:
        raise DomainError("b must be nonzero")
    if order < 0:
        raise DomainError("order must be non-negative")
    base = _bernoulli_over_factorial(max(order, STORED_ORDER))
    b = Fraction(b)
    return TruncatedSeries([base[n] * b ** (n - 1) for n in range(order + 1)])


# ---------------------------------------------------------------------------
# Laurent polynomials and rational terms


def _clean(terms: Mapping[int, Fraction]) -> dict[int, Fraction | int]:
    out = {}
    for e, c in terms.items():
        if c:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            out[int(e)] = c
    return out


class LaurentPoly:
    """Finite sum of c * x^e with integer (possibly negative) exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]] = ()):
        acc: dict[int, Fraction | int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] += c
        self.terms = _clean(acc)

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.terms.items()))})"

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        acc: dict[int, Fraction | int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[e1 + e2] += c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self.terms.items() if e})

    def __call__(self, x):
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    @property
    def low(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def high(self) -> int:
        return max(self.terms) if self.terms else 0


@dataclass(frozen=True)
class RationalTerm:
    """numerator(x) / prod_j (1 - x^{den[j]})."""

    numerator: LaurentPoly
    den: tuple[int, ...] = ()

    def __post_init__(self):
        den = tuple(sorted(int(b) for b in self.den))
        if any(b == 0 for b in den):
            raise DomainError("denominator exponents must be nonzero")
        object.__setattr__(self, "den", den)
        if not isinstance(self.numerator, LaurentPoly):
            object.__setattr__(self, "numerator", LaurentPoly(self.numerator))

    @property
    def pole_order(self) -> int:
        return len(self.den)


class RationalTermSum:
    """A sum of :class:`RationalTerm`; terms sharing a denominator are merged."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[RationalTerm] = ()):
        by_den: dict[tuple[int, ...], LaurentPoly] = {}
        for term in terms:
            if not isinstance(term, RationalTerm):
                term = RationalTerm(*term)
            if term.den in by_den:
                by_den[term.den] = by_den[term.den] + term.numerator
            else:
                by_den[term.den] = term.numerator
        self.terms = [RationalTerm(num, den) for den, num in by_den.items() if num]

    @classmethod
    def polynomial(cls, exponents: Iterable[int] | Mapping[int, int]) -> "RationalTermSum":
        if isinstance(exponents, Mapping):
            return cls([RationalTerm(LaurentPoly(exponents))])
        return cls([RationalTerm(LaurentPoly((e, 1) for e in exponents))])

    @classmethod
    def term(cls, numerator: Mapping[int, int] | LaurentPoly, *den: int) -> "RationalTermSum":
        return cls([RationalTerm(LaurentPoly(numerator) if not isinstance(numerator, LaurentPoly) else numerator, den)])

    def __repr__(self) -> str:
        return f"RationalTermSum({self.to_list()!r})"

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "RationalTermSum") -> "RationalTermSum":
        return RationalTermSum(self.terms + other.terms)

    def __neg__(self) -> "RationalTermSum":
        return RationalTermSum(RationalTerm(-t.numerator, t.den) for t in self.terms)

    def __sub__(self, other: "RationalTermSum") -> "RationalTermSum":
        return self + (-other)

    def __mul__(self, other) -> "RationalTermSum":
        if not isinstance(other, RationalTermSum):
            return RationalTermSum(RationalTerm(t.numerator * other, t.den) for t in self.terms)
        return RationalTermSum(
            RationalTerm(s.numerator * t.numerator, s.den + t.den) for s in self.terms for t in other.terms
        )

    __rmul__ = __mul__

    def to_list(self) -> list[dict]:
        return [
            {
                "num": [[e, str(Fraction(c))] for e, c in sorted(t.numerator.terms.items())],
                "den": list(t.den),
            }
            for t in self.terms
        ]

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_list(), **kwargs)

    @classmethod
    def from_list(cls, data: Sequence[Mapping]) -> "RationalTermSum":
        terms = []
        for item in data:
            num = LaurentPoly((int(e), Fraction(c)) for e, c in item["num"])
            terms.append(RationalTerm(num, tuple(item["den"])))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "RationalTermSum":
        return cls.from_list(json.loads(text))


def differentiate(S: RationalTermSum) -> RationalTermSum:
    """d/dx, term by term, keeping denominators as factor multisets."""
    out = []
    for t in S.terms:
        out.append(RationalTerm(t.numerator.derivative(), t.den))
        for b in set(t.den):
            # d/dx (1 - x^b)^(-c) = c b x^(b-1) (1 - x^b)^(-c-1)
            mult = t.den.count(b)
            out.append(RationalTerm(t.numerator * LaurentPoly({b - 1: mult * b}), t.den + (b,)))
    return RationalTermSum(out)


# ---------------------------------------------------------------------------
# constant terms


@lru_cache(maxsize=None)
def _bernoulli_scaled(order: int) -> tuple[int, tuple[int, ...]]:
    """(D, [-D * B_n]) with D the lcm of the denominators of B_0..B_order."""
    D = 1
    for n in range(order + 1):
        D = lcm(D, bernoulli(n).denominator)
    return D, tuple(int(-D * bernoulli(n)) for n in range(order + 1))


def _egf_product(x: list, y: list) -> list:
    n = len(x)
    return [sum(comb(k, i) * x[i] * y[k - i] for i in range(k + 1)) for k in range(n)]


def _laurent_at_one(term: RationalTerm, extra: int = 0) -> list[Fraction]:
    """Coefficients of t^-m .. t^extra of term(e^t), m the pole order."""
    m = term.pole_order
    n = m + extra + 1
    # sequences are kept in exponential form (coefficient times k!) and in
    # integers wherever the numerator is integral
    items = list(term.numerator.terms.items())
    acc = [sum(c * e**k for e, c in items) for k in range(n)]
    D, scaled = _bernoulli_scaled(n - 1)
    scale = 1
    for b in term.den:
        factor = [scaled[k] * b**k for k in range(n)]
        acc = _egf_product(acc, factor)
        scale *= b * D
    return [Fraction(acc[k]) / (factorial(k) * scale) for k in range(n)]


def _laurent_at(term: RationalTerm, lam: Fraction, extra: int = 0) -> list[Fraction]:
    poles = [b for b in term.den if lam**b == 1]
    regular = [b for b in term.den if lam**b != 1]
    m = len(poles)
    order = m + extra
    num = TruncatedSeries(
        [
            sum((c * lam**e * Fraction(e) ** k for e, c in term.numerator.terms.items()), Fraction(0)) / factorial(k)
            for k in range(order + 1)
        ]
    )
    acc = num
    for b in poles:
        acc = acc * series_t_over_one_minus_exp(b, order)
    for b in regular:
        c = lam**b
        u = TruncatedSeries([1 - c] + [-c * Fraction(b) ** k / factorial(k) for k in range(1, order + 1)])
        acc = acc * u.inverse()
    return [acc[k] for k in range(order + 1)]


def laurent_coefficients(term: RationalTerm, lam=1, extra: int = 0) -> TruncatedSeries:
    """Laurent expansion of term(lam * e^t) from its lowest possible power up to t^extra."""
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("cannot expand around x = 0")
    if lam == 1:
        coeffs = _laurent_at_one(term, extra)
    else:
        coeffs = _laurent_at(term, lam, extra)
    return TruncatedSeries(coeffs, extra + 1 - len(coeffs))


def ct_term(term: RationalTerm, extra: int = 0) -> Fraction:
    """Constant term in t of term(e^t).

    ``extra`` carries the expansion past t^0; the constant term does not
    depend on it.
    """
    return laurent_coefficients(term, 1, extra)[0]


def value_at(S: RationalTermSum, lam=1) -> Fraction:
    """S(lam), found as the constant term of S(lam * e^t).

    Individual terms may have poles at lam; they must cancel in the total,
    otherwise :class:`PoleError` is raised.
    """
    lam = Fraction(lam)
    totals: dict[int, Fraction] = defaultdict(Fraction)
    for term in S.terms:
        series = laurent_coefficients(term, lam)
        for i, c in enumerate(series.coefficients):
            totals[series.offset + i] += c
    bad = {p: c for p, c in totals.items() if p < 0 and c != 0}
    if bad:
        worst = min(bad)
        raise PoleError(f"sum has a pole at {lam} of order {-worst}")
    return totals[0]


def value_at_one(S: RationalTermSum) -> Fraction:
    return value_at(S, 1)


# ---------------------------------------------------------------------------
# power series expansion


def _normalized(term: RationalTerm) -> tuple[dict[int, Fraction | int], list[int]]:
    """Rewrite 1/(1 - x^-c) as -x^c/(1 - x^c) so every factor has b > 0."""
    num = LaurentPoly(term.numerator.terms)
    den = []
    for b in term.den:
        if b < 0:
            num = num * LaurentPoly({-b: -1})
            den.append(-b)
        else:
            den.append(b)
    return num.terms, den


def _cumsum_stride(arr: np.ndarray, b: int) -> np.ndarray:
    """Multiply a power series by 1/(1 - x^b): arr[i] += arr[i - b] cumulatively."""
    n = len(arr)
    pad = (-n) % b
    if pad:
        arr = np.concatenate([arr, np.zeros(pad, dtype=arr.dtype)])
    return np.cumsum(arr.reshape(-1, b), axis=0).reshape(-1)[:n]


def power_series(S: RationalTermSum, upto: int, max_length: int = 10**7) -> tuple[int, np.ndarray]:
    """Coefficients of the expansion of S around x = 0 up to x^upto.

    Returns ``(low, coeffs)`` with ``coeffs[i]`` the coefficient of
    x^(low + i). Integer sums are expanded in int64 when that cannot
    overflow, otherwise in exact Python objects.
    """
    parts = [_normalized(t) for t in S.terms]
    low = min([min(num) for num, _ in parts if num], default=0)
    low = min(low, 0)
    n = upto - low + 1
    if n > max_length:
        raise ResourceError(f"expansion length {n} exceeds the limit {max_length}")
    if n <= 0:
        return low, np.zeros(0, dtype=np.int64)
    integral = all(isinstance(c, int) for num, _ in parts for c in num.values())
    growth = max([sum(abs(c) for c in num.values()) * n ** len(den) for num, den in parts], default=0)
    dtype = np.int64 if integral and growth * max(len(parts), 1) < 2**62 else object
    total = np.zeros(n, dtype=dtype)
    if dtype is object:
        total[:] = 0
    for num, den in parts:
        arr = np.zeros(n, dtype=dtype)
        if dtype is object:
            arr[:] = 0
        for e, c in num.items():
            if e - low < n:
                arr[e - low] += c
        for b in den:
            arr = _cumsum_stride(arr, b)
        total = total + arr
    return low, total


# ---------------------------------------------------------------------------
# statistics


def _integral(x: Fraction, what: str) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ConsistencyError(f"{what} came out non-integral: {x}")
    return int(x)


def _gap_derivatives(f_derivs: list[RationalTermSum], a: int, top: int) -> list[RationalTermSum]:
    """g^(k) for k = 0..top where g(x) = 1/(1-x) - f(x)/(1-x^a)."""
    inv = [RationalTermSum.term({0: 1}, a)]
    for _ in range(top):
        inv.append(differentiate(inv[-1]))
    out = []
    for k in range(top + 1):
        gk = RationalTermSum.term({0: factorial(k)}, *([1] * (k + 1)))
        for i in range(k + 1):
            gk = gk - (inv[i] * f_derivs[k - i]) * comb(k, i)
        out.append(gk)
    return out


def stats_via_ct(
    f: RationalTermSum,
    a: int,
    max_mu: int = 1,
    lambdas: Iterable = (),
    A: Sequence[int] = (),
) -> StatBundle:
    """Sylvester statistics from f(x) = sum_r x^{N_r} by constant-term evaluation.

    ``g`` is read off only when ``f`` is a plain polynomial (deg f - a);
    for a genuine sum of rational terms it is left as ``None``.
    """
    lambdas = [Fraction(lam) for lam in lambdas]
    for lam in lambdas:
        if lam in (0, 1):
            raise DomainError("weight lambda must differ from 0 and 1")
    if max_mu < 1:
        raise DomainError("max_mu must be at least 1")
    top = max(max_mu, 2)
    derivs = [f]
    for _ in range(top):
        derivs.append(differentiate(derivs[-1]))
    f1 = value_at_one(derivs[1])
    f2 = value_at_one(derivs[2])
    n = _integral(f1 / a - Fraction(a - 1, 2), "n")
    s = _integral(f2 / (2 * a) - Fraction(a - 1, 2 * a) * f1 + Fraction(a * a - 1, 12), "s")

    gk = _gap_derivatives(derivs, a, max_mu)
    at_one = [value_at_one(G) for G in gk]
    s_mu = {mu: _integral(sum(stirling2(mu, k) * at_one[k] for k in range(mu + 1)), f"s_{mu}") for mu in range(1, max_mu + 1)}
    shat = {mu: _integral(at_one[mu] / factorial(mu), f"shat_{mu}") for mu in range(1, max_mu + 1)}
    if s_mu[1] != s:
        raise ConsistencyError(f"s from f'' ({s}) and from g'(1) ({s_mu[1]}) disagree")
    weighted = {}
    for lam in lambdas:
        at_lam = [value_at(G, lam) for G in gk]
        weighted[lam] = {
            mu: sum((stirling2(mu, k) * lam**k * at_lam[k] for k in range(mu + 1)), Fraction(0))
            for mu in range(1, max_mu + 1)
        }
    g = None
    if all(not t.den for t in f.terms) and f.terms:
        g = max(t.numerator.high for t in f.terms) - a
    return StatBundle(
        tuple=tuple(A),
        g=g,
        n=n,
        s=s,
        s_mu=s_mu,
        shat_mu=shat,
        s_mu_lambda=weighted,
        engine="ct",
    )
