"""Minimal representatives N_r of each residue class, and the statistics they determine.

N_r is the least integer congruent to r modulo ``a = A[0]`` that is
representable by the remaining generators. It is the shortest-path distance
from residue 0 to residue r in the graph on Z/aZ with an edge r -> r + b of
weight b for every other generator b.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import ConsistencyError, DomainError
from .numeric import bernoulli, power_sum, stirling1
from .stats import StatBundle, make_tuple

__all__ = [
    "NrTable",
    "compute_nr",
    "apery_table",
    "stats_from_nr",
    "residue_permute",
    "nr_power_sums",
    "sylvester_power_sum",
    "weighted_sums_from_nr",
    "binomial_moments",
]

_INF = 1 << 62


@dataclass(frozen=True)
class NrTable:
    """``values[r]`` is N_{multiplier * r mod modulus}; multiplier is 1 unless permuted."""

    modulus: int
    values: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), compare=False)
    multiplier: int = 1

    @property
    def frobenius(self) -> int:
        return max(self.values) - self.modulus

    def to_json(self) -> str:
        return json.dumps({"modulus": self.modulus, "values": list(self.values)})

    @classmethod
    def from_json(cls, text: str) -> "NrTable":
        data = json.loads(text)
        values = tuple(int(v) for v in data["values"])
        if len(values) != data["modulus"]:
            raise DomainError("values must have one entry per residue")
        return cls(int(data["modulus"]), values)


def _round_robin(a: int, weights: Sequence[int]) -> list[int]:
    dist = np.full(a, _INF, dtype=np.int64)
    dist[0] = 0
    for b in weights:
        step = b % a
        if step == 0:
            continue
        d = gcd(a, step)
        length = a // d
        k = np.arange(length, dtype=np.int64)
        cycles = (np.arange(d, dtype=np.int64)[:, None] + k[None, :] * step) % a
        vals = dist[cycles]
        start = np.argmin(vals, axis=1)
        live = vals[np.arange(d), start] < _INF
        if not live.any():
            continue
        cycles = cycles[live]
        start = start[live]
        rows = np.arange(cycles.shape[0])[:, None]
        order = cycles[rows, (start[:, None] + k[None, :]) % length]
        # along a cycle, relaxing dist[p_k] against dist[p_{k-1}] + b is a running
        # minimum of dist[p_k] - k*b; starting at the cycle minimum covers wrap-around
        offset = k * b
        shifted = np.minimum.accumulate(dist[order] - offset[None, :], axis=1)
        dist[order] = shifted + offset[None, :]
    return [int(x) for x in dist]


def _dijkstra(a: int, weights: Sequence[int]) -> list[int]:
    dist = [None] * a
    heap = [(0, 0)]
    edges = sorted({(b % a, b) for b in weights if b % a})
    while heap:
        du, u = heapq.heappop(heap)
        if dist[u] is not None:
            continue
        dist[u] = du
        for step, b in edges:
            v = (u + step) % a
            if dist[v] is None:
                heapq.heappush(heap, (du + b, v))
    return dist


def compute_nr(A: Sequence[int], method: str = "auto") -> NrTable:
    """The table N_0..N_{a-1} for ``a = A[0]``.

    ``method`` is ``"round_robin"`` (vectorised, int64), ``"dijkstra"``
    (pure Python, exact for any size) or ``"auto"``, which uses round robin
    whenever the int64 range is safe.
    """
    A = make_tuple(A)
    a, weights = A[0], A[1:]
    if method == "auto":
        # every N_r is at most (a-1) * max(weights); round robin also subtracts k*b
        method = "round_robin" if 2 * a * max(weights) < _INF else "dijkstra"
    if method == "round_robin":
        values = _round_robin(a, weights)
    elif method == "dijkstra":
        values = _dijkstra(a, weights)
    else:
        raise DomainError(f"unknown method {method!r}")
    return NrTable(a, tuple(values), A)


def apery_table(A: Sequence[int], method: str = "auto") -> NrTable:
    """Like :func:`compute_nr` but reduces modulo the smallest generator."""
    A = make_tuple(A)
    i = min(range(len(A)), key=A.__getitem__)
    return compute_nr((A[i],) + A[:i] + A[i + 1:], method)


def residue_permute(T: NrTable, d: int) -> NrTable:
    """Re-list the table as N_{d*0}, N_{d*1}, ..., N_{d*(a-1)} (indices mod a)."""
    a = T.modulus
    if gcd(d, a) != 1:
        raise DomainError(f"multiplier {d} is not coprime to modulus {a}")
    lookup = _canonical(T)
    values = tuple(lookup[(d * T.multiplier * r) % a] for r in range(a))
    return NrTable(a, values, T.generators, (d * T.multiplier) % a or 1)


def _canonical(T: NrTable) -> list[int]:
    if T.multiplier == 1:
        return list(T.values)
    out = [0] * T.modulus
    for r, v in enumerate(T.values):
        out[(T.multiplier * r) % T.modulus] = v
    return out


def nr_power_sums(T: NrTable, max_p: int) -> list[int]:
    """[sum N_r**p for p in 0..max_p], summed over r = 1..a-1."""
    sums = [0] * (max_p + 1)
    for v in T.values:
        if v == 0:
            continue
        x = 1
        for p in range(max_p + 1):
            sums[p] += x
            x *= v
    return sums


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} came out non-integral: {value}")
    return int(value)


def sylvester_power_sum(a: int, sums: Sequence[int], mu: int) -> int:
    """s_mu from the power sums of N_r via the Bernoulli-weighted aggregation."""
    total = Fraction(0)
    for kappa in range(mu + 1):
        total += comb(mu + 1, kappa) * bernoulli(kappa) * Fraction(a) ** (kappa - 1) * sums[mu + 1 - kappa]
    total /= mu + 1
    total += bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
    return _exact(total, f"s_{mu}")


def _geometric_moments(q: int, z: Fraction, top: int) -> list[Fraction]:
    """[sum_{j=0}^{q-1} j**p * z**j for p in 0..top]."""
    if q <= 0:
        return [Fraction(0)] * (top + 1)
    if z == 1:
        return [Fraction(power_sum(q - 1, p) + (1 if p == 0 else 0)) for p in range(top + 1)]
    zq = z**q
    out: list[Fraction] = []
    for p in range(top + 1):
        # (1 - z) G_p = [p = 0] + sum_{j=1}^{q-1} (j^p - (j-1)^p) z^j - (q-1)^p z^q
        acc = Fraction(1 if p == 0 else 0) - Fraction(q - 1) ** p * zq
        for i in range(p):
            inner = out[i] - (1 if i == 0 else 0)
            acc += comb(p, i) * (-1) ** (p - 1 - i) * inner
        out.append(acc / (1 - z))
    return out


def weighted_sums_from_nr(T: NrTable, lam, max_mu: int) -> dict[int, Fraction]:
    """sum lam**n * n**mu over the gaps, residue class by residue class.

    The gaps congruent to r are r, r + a, ..., N_r - a, so each class is a
    weighted geometric sum with ratio lam**a.
    """
    lam = Fraction(lam)
    if lam in (0, 1):
        raise DomainError("weight lambda must differ from 0 and 1")
    a = T.modulus
    z = lam**a
    totals = [Fraction(0)] * (max_mu + 1)
    for r, v in enumerate(_canonical(T)):
        q = (v - r) // a
        if q <= 0:
            continue
        G = _geometric_moments(q, z, max_mu)
        base = lam**r
        for mu in range(1, max_mu + 1):
            totals[mu] += base * sum(comb(mu, p) * r ** (mu - p) * a**p * G[p] for p in range(mu + 1))
    return {mu: totals[mu] for mu in range(1, max_mu + 1)}


def binomial_moments(n: int, s_mu: dict[int, int], max_mu: int) -> dict[int, int]:
    """sum C(x, mu) over the gaps from the power sums (s_0 = n)."""
    sums = {0: n, **s_mu}
    out = {}
    for mu in range(1, max_mu + 1):
        value = Fraction(sum(stirling1(mu, k) * sums[k] for k in range(mu + 1)), factorial(mu))
        out[mu] = _exact(value, f"binomial moment {mu}")
    return out


def stats_from_nr(T: NrTable, max_mu: int = 1, lambdas: Iterable = ()) -> StatBundle:
    """g, n, s, s_mu, binomial moments and weighted sums from a residue table."""
    a = T.modulus
    sums = nr_power_sums(T, max(max_mu + 1, 2))
    g = max(T.values) - a
    n = _exact(Fraction(sums[1], a) - Fraction(a - 1, 2), "n")
    s = _exact(Fraction(sums[2], 2 * a) - Fraction(sums[1], 2) + Fraction(a * a - 1, 12), "s")
    s_mu = {mu: sylvester_power_sum(a, sums, mu) for mu in range(1, max_mu + 1)}
    if max_mu >= 1 and s_mu[1] != s:
        raise ConsistencyError("s_1 disagrees with s")
    weighted = {Fraction(lam): weighted_sums_from_nr(T, lam, max_mu) for lam in lambdas}
    return StatBundle(
        tuple=T.generators,
        g=g,
        n=n,
        s=s,
        s_mu=s_mu,
        shat_mu=binomial_moments(n, s_mu, max_mu),
        s_mu_lambda=weighted,
        engine="nr",
    )
