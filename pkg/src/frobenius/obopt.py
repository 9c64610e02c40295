"""The minimisation O_B(M) = min { sum x_i : sum b_i x_i = M, x_i >= 0 }.

For tuples of the shape ``(a, ha + d*b_1, ..., ha + d*b_k)`` with
gcd(a, d) = 1 the residue minima satisfy

    N_{d r} = min_m  h*a*O_B(m*a + r) + (m*a + r)*d

so a formula for O_B gives a formula for N_r. This module solves O_B by a
generic dynamic programme and by the per-family closed forms, and scans the
reduction over m.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Mapping, Optional, Sequence

from .errors import DomainError, PreconditionError, UnresolvedError

__all__ = [
    "ObProblem",
    "ObSolution",
    "ob_general",
    "ob_values",
    "ob_closed_form",
    "family_B",
    "NdrScan",
    "ndr_via_reduction",
    "OB_FAMILIES",
]


@dataclass(frozen=True)
class ObProblem:
    B: tuple[int, ...]
    signed: bool = False

    def __post_init__(self):
        B = tuple(self.B)
        object.__setattr__(self, "B", B)
        if not B:
            raise DomainError("B must be non-empty")
        if any(y <= x for x, y in zip(B, B[1:])):
            raise DomainError("B must be strictly increasing")
        if not self.signed and B[0] < 1:
            raise DomainError("unsigned O_B needs positive entries")


@dataclass(frozen=True)
class ObSolution:
    value: Optional[int]
    witness: Optional[tuple[int, ...]]

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def check(self, B: Sequence[int], M: int) -> bool:
        if not self.feasible:
            return True
        return (
            all(x >= 0 for x in self.witness)
            and sum(b * x for b, x in zip(B, self.witness)) == M
            and sum(self.witness) == self.value
        )


INFEASIBLE = ObSolution(None, None)


def _knapsack(P: ObProblem, M: int) -> tuple[list, list]:
    if P.signed:
        raise DomainError("the DP solver handles unsigned problems only")
    if M < 0:
        raise DomainError("M must be non-negative for unsigned O_B")
    best = [0] + [None] * M
    parent = [-1] * (M + 1)
    for x in range(1, M + 1):
        for i, b in enumerate(P.B):
            if b > x:
                break
            prev = best[x - b]
            if prev is not None and (best[x] is None or prev + 1 < best[x]):
                best[x] = prev + 1
                parent[x] = i
    return best, parent


def ob_values(P: ObProblem, upto: int) -> list[Optional[int]]:
    """O_B(M) for every M in 0..upto (None where infeasible), from one DP pass."""
    return _knapsack(P, upto)[0]


def ob_general(P: ObProblem, M: int) -> ObSolution:
    """Unbounded-knapsack DP over 0..M with parent pointers."""
    best, parent = _knapsack(P, M)
    if best[M] is None:
        return INFEASIBLE
    witness = [0] * len(P.B)
    x = M
    while x:
        i = parent[x]
        witness[i] += 1
        x -= P.B[i]
    return ObSolution(best[M], tuple(witness))


def _need(cond: bool, name: str):
    if not cond:
        raise PreconditionError(name)


def family_B(family: str, params: Mapping[str, int]) -> tuple[int, ...]:
    """The B vector a tuple family reduces to."""
    p = params
    if family == "aj":
        _need(p["j"] > 2, "j > 2")
        return (1, p["j"])
    if family == "a2j":
        _need(p["j"] >= 3, "j >= 3")
        return (1, 2, p["j"])
    if family == "square":
        _need(p["a"] >= 2, "a >= 2")
        return (1, p["a"], p["a"] + 1)
    if family == "pm":
        return (-1, 1)
    if family == "arith":
        _need(p["k"] >= 1, "k >= 1")
        return tuple(range(1, p["k"] + 1))
    if family == "trunc-arith":
        K, k = p["K"], p["k"]
        _need(K >= 1, "K >= 1")
        _need(2 * K <= k - 1, "K <= (k-1)/2")
        return tuple(range(K + 1, k + 1))
    if family == "odd-steps":
        _need(p["k"] >= 1, "k >= 1")
        return (1,) + tuple(2 * i + 1 for i in range(1, p["k"] + 1))
    if family == "even-steps":
        _need(p["k"] >= 1, "k >= 1")
        return (1,) + tuple(2 * i for i in range(1, p["k"] + 1))
    raise DomainError(f"unknown O_B family {family!r}")


OB_FAMILIES = ("aj", "a2j", "square", "pm", "arith", "trunc-arith", "odd-steps", "even-steps")


def _from_parts(B: Sequence[int], parts: Mapping[int, int]) -> ObSolution:
    index = {b: i for i, b in enumerate(B)}
    witness = [0] * len(B)
    for b, count in parts.items():
        if count:
            witness[index[b]] += count
    return ObSolution(sum(witness), tuple(witness))


def _closed(family: str, p: Mapping[str, int], B: tuple[int, ...], M: int) -> ObSolution:
    if family == "pm":
        return ObSolution(abs(M), (0, M) if M >= 0 else (-M, 0))
    if M < 0:
        raise DomainError("M must be non-negative for unsigned O_B")
    if M == 0:
        return ObSolution(0, (0,) * len(B))
    if family == "aj":
        s, r1 = divmod(M, p["j"])
        return ObSolution(r1 + s, (r1, s))
    if family == "a2j":
        s, r1 = divmod(M, p["j"])
        return ObSolution(s + (r1 + 1) // 2, (r1 % 2, r1 // 2, s))
    if family == "square":
        a = p["a"]
        s, r1 = divmod(M, a + 1)
        if r1 != 0 and M >= a * (s + 1):
            return ObSolution(s + 1, (0, a - r1 + 1, s - a + r1))
        return ObSolution(s + r1, (r1, 0, s))
    if family == "arith":
        k = p["k"]
        s, t = divmod(M - 1, k)
        t += 1
        if t == k:
            return _from_parts(B, {k: s + 1})
        return _from_parts(B, {k: s, t: 1})
    if family == "trunc-arith":
        K, k = p["K"], p["k"]
        s, t = divmod(M - 1, k)
        t += 1
        if t >= K + 1:
            return _from_parts(B, {k: s + 1}) if t == k else _from_parts(B, {k: s, t: 1})
        if s == 0:
            return INFEASIBLE
        parts = {k: s - 1}
        other = k + t - K - 1
        parts[other] = parts.get(other, 0) + 1
        parts[K + 1] = parts.get(K + 1, 0) + 1
        return _from_parts(B, parts)
    if family == "odd-steps":
        top = 2 * p["k"] + 1
        s, t = divmod(M - 1, top)
        t += 1
        if t % 2 == 0:
            parts = {top: s, 1: 1}
            parts[t - 1] = parts.get(t - 1, 0) + 1
            return _from_parts(B, parts)
        return _from_parts(B, {top: s + 1}) if t == top else _from_parts(B, {top: s, t: 1})
    if family == "even-steps":
        top = 2 * p["k"]
        s, t = divmod(M - 1, top)
        t += 1
        if t % 2 == 0:
            return _from_parts(B, {top: s + 1}) if t == top else _from_parts(B, {top: s, t: 1})
        if t == 1:
            return _from_parts(B, {top: s, 1: 1})
        return _from_parts(B, {top: s, t - 1: 1, 1: 1})
    raise DomainError(f"unknown O_B family {family!r}")


def ob_closed_form(family: str, params: Mapping[str, int], M: int) -> ObSolution:
    """O_B(M) from the family's closed form, with a constructive witness."""
    B = family_B(family, params)
    return _closed(family, params, B, M)


@dataclass(frozen=True)
class NdrScan:
    value: int
    argmin_m: int
    monotone: bool
    trace: tuple[tuple[int, Optional[int]], ...]


def ndr_via_reduction(
    a: int,
    h: int,
    d: int,
    B: Sequence[int],
    r: int,
    m_cap: Optional[int] = None,
    solver: Optional[Callable[[int], ObSolution]] = None,
) -> NdrScan:
    """Scan N_{dr}(m) = h*a*O_B(m*a + r) + (m*a + r)*d over m and take the minimum.

    With a signed ``B`` (some entry negative) negative m are scanned too.
    ``monotone`` reports whether the values were non-decreasing over the
    scanned m >= 0.
    """
    if gcd(a, d) != 1:
        raise DomainError("gcd(a, d) must be 1")
    if h < 1:
        raise DomainError("h must be positive")
    B = tuple(B)
    signed = min(B) < 0
    if m_cap is None:
        m_cap = 2 + -(-max(abs(b) for b in B) // a) * len(B)
    if solver is None:
        if signed:
            if B != (-1, 1):
                raise DomainError("signed scans support B = (-1, 1) only")
            solver = lambda M: ob_closed_form("pm", {}, M)  # noqa: E731
        else:
            values = ob_values(ObProblem(B), m_cap * a + r)
            solver = lambda M: ObSolution(values[M], None)  # noqa: E731
    ms = range(-m_cap if signed else 0, m_cap + 1)
    trace = []
    for m in ms:
        M = m * a + r
        if not signed and M < 0:
            trace.append((m, None))
            continue
        sol = solver(M)
        trace.append((m, None if not sol.feasible else h * a * sol.value + M * d))
    feasible = [(v, m) for m, v in trace if v is not None]
    if not feasible:
        raise UnresolvedError(f"no feasible m up to {m_cap}; raise m_cap")
    value, argmin = min(feasible)
    tail = [v for m, v in trace if m >= 0 and v is not None]
    monotone = all(x <= y for x, y in zip(tail, tail[1:]))
    return NdrScan(value, argmin, monotone, tuple(trace))
