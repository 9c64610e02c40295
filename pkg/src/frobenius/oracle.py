"""Ground truth by direct enumeration of representable integers.

Everything here is deliberately naive: a representability sieve over the
integers 0..L, grown until ``min(A)`` consecutive representable integers
appear (after which every larger integer is representable). The residue
engine, the closed forms and the constant-term engine are all checked
against these numbers.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, OracleCapExceeded
from .stats import StatBundle, make_tuple

__all__ = ["GapSet", "denumerant", "representable_sieve", "gap_set", "oracle_stats", "oracle_cap"]

DEFAULT_CAP = 10**7


def oracle_cap() -> int:
    """Largest Frobenius number the oracle will enumerate to (env ``FROB_ORACLE_CAP``)."""
    raw = os.environ.get("FROB_ORACLE_CAP")
    return int(float(raw)) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class GapSet:
    members: tuple[int, ...]
    frobenius: int

    def __len__(self) -> int:
        return len(self.members)


def denumerant(a0: int, A: Sequence[int]) -> int:
    """Number of solutions x in N^n of sum A[i] x[i] == a0."""
    if a0 < 0:
        raise DomainError("denumerant is defined for a0 >= 0")
    ways = [1] + [0] * a0
    for c in A:
        if c <= 0:
            raise DomainError("denumerant needs positive generators")
        for x in range(c, a0 + 1):
            ways[x] += ways[x - c]
    return ways[a0]


def representable_sieve(A: Iterable[int], length: int) -> np.ndarray:
    """Boolean array ``rep`` with ``rep[x]`` true iff x < length is representable."""
    rep = np.zeros(length, dtype=bool)
    rep[0] = True
    for c in sorted(set(A)):
        if c >= length:
            continue
        rows = -(-length // c)
        padded = np.zeros(rows * c, dtype=bool)
        padded[:length] = rep
        # rep[x] |= rep[x - c], run along each residue class mod c
        padded = np.logical_or.accumulate(padded.reshape(rows, c), axis=0).ravel()
        rep = padded[:length]
    return rep


def _locate_frobenius(rep: np.ndarray, run: int) -> int | None:
    holes = np.flatnonzero(~rep)
    if holes.size == 0:
        return -1
    spans = np.diff(np.append(holes, rep.size)) - 1
    ok = np.flatnonzero(spans >= run)
    if ok.size == 0:
        return None
    return int(holes[ok[0]])


def gap_set(A: Sequence[int], cap: int | None = None) -> GapSet:
    """All non-representable non-negative integers of a valid tuple."""
    A = make_tuple(A)
    cap = oracle_cap() if cap is None else cap
    run = min(A)
    length = max(4 * max(A), 64)
    while True:
        window = min(length, cap + 2 * run + 1)
        rep = representable_sieve(A, window)
        g = _locate_frobenius(rep, run)
        if g is not None:
            if g > cap:
                raise OracleCapExceeded(f"Frobenius number {g} exceeds oracle cap {cap}")
            holes = np.flatnonzero(~rep[: g + 1])
            return GapSet(tuple(holes.tolist()), g)
        if window < length or window >= cap + 2 * run + 1:
            raise OracleCapExceeded(f"no run of {run} representable integers below cap {cap}")
        length *= 2


def _weighted_power_sums(members: Sequence[int], lam: Fraction, max_mu: int) -> dict[int, Fraction]:
    out = {mu: Fraction(0) for mu in range(1, max_mu + 1)}
    if lam.denominator == 1:
        lam_int = int(lam)
        for x in members:
            w = lam_int ** x
            for mu in out:
                out[mu] += w * x**mu
        return {mu: Fraction(v) for mu, v in out.items()}
    num, den = lam.numerator, lam.denominator
    # common denominator den**g keeps the accumulation in integers
    top = members[-1] if members else 0
    acc = {mu: 0 for mu in out}
    for x in members:
        w = num**x * den ** (top - x)
        for mu in acc:
            acc[mu] += w * x**mu
    scale = Fraction(1, den**top)
    return {mu: acc[mu] * scale for mu in acc}


def oracle_stats(
    A: Sequence[int],
    max_mu: int = 1,
    lambdas: Iterable = (),
    cap: int | None = None,
) -> StatBundle:
    """Every statistic by direct summation over the gap set."""
    lambdas = [Fraction(lam) for lam in lambdas]
    for lam in lambdas:
        if lam in (0, 1):
            raise DomainError("weight lambda must differ from 0 and 1")
    A = make_tuple(A)
    gaps = gap_set(A, cap)
    members = gaps.members
    total = sum(members)
    s_mu = {mu: total if mu == 1 else sum(x**mu for x in members) for mu in range(1, max_mu + 1)}
    shat = {mu: total if mu == 1 else sum(comb(x, mu) for x in members) for mu in range(1, max_mu + 1)}
    weighted = {lam: _weighted_power_sums(members, lam, max_mu) for lam in lambdas}
    return StatBundle(
        tuple=A,
        g=gaps.frobenius,
        n=len(members),
        s=total,
        s_mu=s_mu,
        shat_mu=shat,
        s_mu_lambda=weighted,
        engine="oracle",
    )
