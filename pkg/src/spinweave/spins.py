"""Half-integer quanta, coupling paths and basis strings.

Every spin quantum number is carried as twice its value so that all index
arithmetic stays in the integers.  Basis strings are plain ``str`` over the
alphabet ``"+-"`` with emitter 1 leftmost.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidStart, InvalidStep, NegativeSpin, SpinweaveError

PLUS = "+"
MINUS = "-"
BASIS_CHARS = PLUS + MINUS


@dataclass(frozen=True, order=True)
class HalfInt:
    """A half-integer ``doubled / 2``."""

    doubled: int

    def __post_init__(self):
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"doubled must be int, got {self.doubled!r}")

    @classmethod
    def of(cls, value: Union["HalfInt", Fraction, int, str]) -> "HalfInt":
        """Build from an actual value: ``HalfInt.of("1/2") == HalfInt(1)``."""
        if isinstance(value, HalfInt):
            return value
        raw = value
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise SpinweaveError(f"not a half-integer: {value!r}") from None
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise SpinweaveError(f"not a half-integer: {raw!r}")
        return cls(int(twice))

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


@dataclass(frozen=True)
class CouplingPath:
    """Coupling history S_1, ..., S_N of an N-qubit eigenstate family."""

    spins: tuple

    def __post_init__(self):
        spins = tuple(HalfInt.of(s) for s in self.spins)
        object.__setattr__(self, "spins", spins)
        _check_path(spins)

    @classmethod
    def from_doubled(cls, doubled: Iterable[int]) -> "CouplingPath":
        return cls(tuple(HalfInt(int(d)) for d in doubled))

    @classmethod
    def parse(cls, text: str) -> "CouplingPath":
        """Parse ``"1/2,1,1/2"`` (values) or ``"1,2,1"`` (doubled integers).

        A list containing any ``/`` is read as values; an all-integer list is
        read as doubled spins (a value-form path always starts with ``1/2``).
        """
        tokens = [t.strip() for t in text.split(",")]
        if not tokens or any(t == "" for t in tokens):
            raise SpinweaveError(f"empty token in path {text!r}")
        if any("/" in t for t in tokens):
            return cls(tuple(HalfInt.of(t) for t in tokens))
        doubled = []
        for t in tokens:
            try:
                doubled.append(int(t))
            except ValueError:
                raise SpinweaveError(f"bad path token {t!r}") from None
        return cls.from_doubled(doubled)

    @property
    def n(self) -> int:
        return len(self.spins)

    @property
    def final(self) -> HalfInt:
        return self.spins[-1]

    @property
    def doubled(self) -> tuple:
        return tuple(s.doubled for s in self.spins)

    def prefix(self, length: int) -> "CouplingPath":
        return CouplingPath(self.spins[:length])

    def is_ascent(self, k: int) -> bool:
        """True if step ``k`` (1-based, k >= 2) raises the spin."""
        if not 2 <= k <= self.n:
            raise IndexError(f"step {k} outside 2..{self.n}")
        return self.spins[k - 1] > self.spins[k - 2]

    def descents(self) -> list:
        return [k for k in range(2, self.n + 1) if not self.is_ascent(k)]

    def m_values(self) -> list:
        """Admissible magnetic quantum numbers, from -S_N up to S_N."""
        top = self.final.doubled
        return [HalfInt(d) for d in range(-top, top + 1, 2)]

    def admits(self, m: HalfInt) -> bool:
        m = HalfInt.of(m)
        return abs(m.doubled) <= self.final.doubled and (m.doubled - self.final.doubled) % 2 == 0

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.spins)


def _check_path(spins: Sequence[HalfInt]) -> None:
    if not spins:
        raise SpinweaveError("coupling path must be nonempty")
    for s in spins:
        if s.doubled < 0:
            raise NegativeSpin(f"negative spin {s} in path")
    if spins[0].doubled != 1:
        raise InvalidStart(f"path must start at 1/2, got {spins[0]}")
    for prev, cur in zip(spins, spins[1:]):
        if abs(cur.doubled - prev.doubled) != 1:
            raise InvalidStep(f"step {prev} -> {cur} does not change the spin by 1/2")


def validate_path(spins: Sequence) -> CouplingPath:
    return CouplingPath(tuple(spins))


def enumerate_paths(n: int) -> list:
    """All coupling paths of length ``n``, lexicographic in doubled spins."""
    if n < 1:
        raise SpinweaveError(f"n must be >= 1, got {n}")
    paths = [(1,)]
    for _ in range(n - 1):
        grown = []
        for p in paths:
            if p[-1] > 0:
                grown.append(p + (p[-1] - 1,))
            grown.append(p + (p[-1] + 1,))
        paths = grown
    return [CouplingPath.from_doubled(p) for p in sorted(paths)]


def check_basis(b: str, n: int = None) -> str:
    if any(c not in BASIS_CHARS for c in b):
        raise SpinweaveError(f"basis string {b!r} has characters outside '+-'")
    if n is not None and len(b) != n:
        raise SpinweaveError(f"basis string {b!r} has length {len(b)}, expected {n}")
    return b


def magnetization(b: str) -> HalfInt:
    return HalfInt(b.count(PLUS) - b.count(MINUS))


def flip(b: str) -> str:
    return b.translate(str.maketrans("+-", "-+"))
