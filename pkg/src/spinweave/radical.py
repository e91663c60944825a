"""Exact numbers of the form sum_i q_i * sqrt(r_i).

``q_i`` is rational and ``r_i`` a squarefree positive integer.  The set is a
ring under ``+`` and ``*``; every amplitude produced by this package (CGC
products, integer projection outputs, their ratios) lives in it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Union

from sympy import factorint

Number = Union[int, Fraction, "Radical"]


@lru_cache(maxsize=4096)
def split_square(r: int) -> tuple:
    """Return ``(t, s)`` with ``r == t*t*s`` and ``s`` squarefree."""
    if r <= 0:
        raise ValueError(f"radicand must be positive, got {r}")
    t, s = 1, 1
    for p, e in factorint(r).items():
        t *= p ** (e // 2)
        if e % 2:
            s *= p
    return t, s


def _canonical(terms: Mapping[int, Fraction]) -> dict:
    out: dict = {}
    for r, q in terms.items():
        q = Fraction(q)
        if q == 0:
            continue
        t, s = split_square(int(r))
        out[s] = out.get(s, Fraction(0)) + q * t
    return {s: out[s] for s in sorted(out) if out[s] != 0}


class Radical:
    """Immutable canonical element of Q[sqrt(2), sqrt(3), ...]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] = None):
        self._terms = _canonical(terms or {})
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Radical":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def of(cls, x: Number) -> "Radical":
        if isinstance(x, Radical):
            return x
        q = Fraction(x)
        return cls._raw({1: q} if q else {})

    @classmethod
    def sqrt(cls, x: Union[int, Fraction]) -> "Radical":
        """Exact square root of a nonnegative rational: sqrt(p/q) = sqrt(pq)/q."""
        x = Fraction(x)
        if x < 0:
            raise ValueError(f"square root of negative rational {x}")
        if x == 0:
            return cls._raw({})
        return cls({x.numerator * x.denominator: Fraction(1, x.denominator)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return set(self._terms) <= {1}

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational().denominator == 1

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def normalized(self) -> "Radical":
        return Radical(self._terms)

    def __add__(self, other: Number) -> "Radical":
        other = Radical.of(other)
        out = dict(self._terms)
        for r, q in other._terms.items():
            v = out.get(r, 0) + q
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return Radical._raw({r: out[r] for r in sorted(out)})

    __radd__ = __add__

    def __neg__(self) -> "Radical":
        return Radical._raw({r: -q for r, q in self._terms.items()})

    def __sub__(self, other: Number) -> "Radical":
        return self + (-Radical.of(other))

    def __rsub__(self, other: Number) -> "Radical":
        return Radical.of(other) - self

    def __mul__(self, other: Number) -> "Radical":
        other = Radical.of(other)
        out: dict = {}
        for r1, q1 in self._terms.items():
            for r2, q2 in other._terms.items():
                g = gcd(r1, r2)
                # sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2), product of coprime squarefrees
                s = (r1 // g) * (r2 // g)
                out[s] = out.get(s, 0) + q1 * q2 * g
        return Radical._raw({r: out[r] for r in sorted(out) if out[r]})

    __rmul__ = __mul__

    def inverse(self) -> "Radical":
        if not self.is_monomial():
            raise ZeroDivisionError(f"only nonzero monomials are invertible here, got {self}")
        ((r, q),) = self._terms.items()
        # 1/(q sqrt r) = sqrt(r) / (q r)
        return Radical._raw({r: 1 / (q * r)})

    def __truediv__(self, other: Number) -> "Radical":
        return self * Radical.of(other).inverse()

    def __rtruediv__(self, other: Number) -> "Radical":
        return Radical.of(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Radical.of(other)
        if not isinstance(other, Radical):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __float__(self) -> float:
        return float(sum(float(q) * r ** 0.5 for r, q in self._terms.items()))

    def sign(self) -> int:
        """Sign of the real value; exact for monomials."""
        if not self._terms:
            return 0
        if self.is_monomial():
            (q,) = self._terms.values()
            return 1 if q > 0 else -1
        v = float(self)
        return (v > 0) - (v < 0)

    def to_json(self) -> dict:
        return {str(r): f"{q.numerator}/{q.denominator}" for r, q in self._terms.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "Radical":
        return cls({int(r): Fraction(q) for r, q in obj.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for r, q in self._terms.items():
            if r == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"√{r}")
            elif q == -1:
                parts.append(f"-√{r}")
            else:
                parts.append(f"({q})√{r}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Radical({self._terms!r})"


ZERO = Radical()
ONE = Radical.of(1)
