"""Generator tuples and the statistics record every engine returns."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .errors import InvalidTuple

__all__ = ["make_tuple", "parse_tuple", "StatBundle", "format_number", "parse_number"]


def make_tuple(elements: Iterable[int]) -> tuple[int, ...]:
    """Validate ``elements`` as a generator tuple and return it as a tuple.

    Every element must be an integer >= 2, there must be at least two of
    them, and their gcd must be 1.
    """
    out = tuple(elements)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidTuple(f"tuple elements must be integers, got {x!r}")
    if len(out) < 2:
        raise InvalidTuple("a tuple needs at least two elements")
    if min(out) < 2:
        raise InvalidTuple(f"every element must be >= 2, got {min(out)}")
    g = 0
    for x in out:
        g = gcd(g, x)
    if g != 1:
        raise InvalidTuple(f"elements must be coprime, gcd is {g}")
    return out


def parse_tuple(text: str) -> tuple[int, ...]:
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as exc:
        raise InvalidTuple(f"cannot parse tuple {text!r}") from exc
    return make_tuple(values)


def format_number(x) -> int | str:
    """JSON form of an exact number: ints stay ints, other rationals become "p/q"."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def parse_number(x) -> Fraction | int:
    if isinstance(x, int):
        return x
    value = Fraction(x)
    return int(value) if value.denominator == 1 else value


def _lambda_key(lam) -> str:
    return str(format_number(Fraction(lam)))


@dataclass
class StatBundle:
    """Frobenius number and Sylvester statistics of one tuple.

    ``s_mu[mu]`` is the power sum of the gaps, ``shat_mu[mu]`` the binomial
    moment sum C(n, mu) and ``s_mu_lambda[lam][mu]`` the weighted power sum
    sum lam**n * n**mu. ``g`` is ``None`` when the engine cannot produce it.
    """

    tuple: tuple[int, ...]
    g: Optional[int]
    n: Optional[int]
    s: Optional[int]
    s_mu: dict[int, int] = field(default_factory=dict)
    shat_mu: dict[int, int] = field(default_factory=dict)
    s_mu_lambda: dict[Fraction, dict[int, Fraction]] = field(default_factory=dict)
    engine: str = ""

    def to_dict(self) -> dict:
        return {
            "tuple": list(self.tuple),
            "g": self.g,
            "n": self.n,
            "s": self.s,
            "s_mu": {str(k): format_number(v) for k, v in sorted(self.s_mu.items())},
            "shat_mu": {str(k): format_number(v) for k, v in sorted(self.shat_mu.items())},
            "s_mu_lambda": {
                _lambda_key(lam): {str(k): format_number(v) for k, v in sorted(vals.items())}
                for lam, vals in self.s_mu_lambda.items()
            },
            "engine": self.engine,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "StatBundle":
        return cls(
            tuple=tuple(data["tuple"]),
            g=data.get("g"),
            n=data.get("n"),
            s=data.get("s"),
            s_mu={int(k): parse_number(v) for k, v in data.get("s_mu", {}).items()},
            shat_mu={int(k): parse_number(v) for k, v in data.get("shat_mu", {}).items()},
            s_mu_lambda={
                Fraction(lam): {int(k): Fraction(v) for k, v in vals.items()}
                for lam, vals in data.get("s_mu_lambda", {}).items()
            },
            engine=data.get("engine", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "StatBundle":
        return cls.from_dict(json.loads(text))

    def differences(self, other: "StatBundle") -> list[str]:
        """Names of statistics present in both bundles whose values differ."""
        diffs = []
        for name in ("g", "n", "s"):
            mine, theirs = getattr(self, name), getattr(other, name)
            if mine is not None and theirs is not None and mine != theirs:
                diffs.append(name)
        for name in ("s_mu", "shat_mu"):
            mine, theirs = getattr(self, name), getattr(other, name)
            for k in mine.keys() & theirs.keys():
                if mine[k] != theirs[k]:
                    diffs.append(f"{name}[{k}]")
        for lam in self.s_mu_lambda.keys() & other.s_mu_lambda.keys():
            mine, theirs = self.s_mu_lambda[lam], other.s_mu_lambda[lam]
            for k in mine.keys() & theirs.keys():
                if mine[k] != theirs[k]:
                    diffs.append(f"s_mu_lambda[{lam}][{k}]")
        return diffs
