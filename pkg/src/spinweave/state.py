"""Sparse state vectors over the decoupled basis with exact amplitudes."""
from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DimensionMismatch, SpinweaveError
from .radical import ZERO, Radical
from .spins import check_basis, flip, magnetization


class SparseState:
    """Map from basis strings of length ``n`` to nonzero ``Radical`` amplitudes.

    Instances are treated as immutable; arithmetic returns new states.
    """

    __slots__ = ("n", "_amps")

    def __init__(self, n: int, amplitudes: Mapping[str, object] = None):
        if n < 0:
            raise SpinweaveError(f"qubit count must be >= 0, got {n}")
        self.n = n
        amps = {}
        for b, a in (amplitudes or {}).items():
            check_basis(b, n)
            a = Radical.of(a)
            if not a.is_zero():
                amps[b] = a
        # '+' < '-' in ASCII, so plain string order is the canonical order
        self._amps = {b: amps[b] for b in sorted(amps)}

    @classmethod
    def basis(cls, b: str) -> "SparseState":
        return cls(len(b), {b: 1})

    @classmethod
    def zero(cls, n: int) -> "SparseState":
        return cls(n)

    @property
    def amplitudes(self) -> dict:
        return dict(self._amps)

    def support(self) -> list:
        return list(self._amps)

    def __getitem__(self, b: str) -> Radical:
        return self._amps.get(b, ZERO)

    def __contains__(self, b: str) -> bool:
        return b in self._amps

    def __len__(self) -> int:
        return len(self._amps)

    def __iter__(self):
        return iter(self._amps.items())

    def is_zero(self) -> bool:
        return not self._amps

    def _check_dim(self, other: "SparseState") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"states on {self.n} and {other.n} qubits")

    def __add__(self, other: "SparseState") -> "SparseState":
        self._check_dim(other)
        out = dict(self._amps)
        for b, a in other._amps.items():
            out[b] = out.get(b, ZERO) + a
        return SparseState(self.n, out)

    def __neg__(self) -> "SparseState":
        return SparseState(self.n, {b: -a for b, a in self._amps.items()})

    def __sub__(self, other: "SparseState") -> "SparseState":
        return self + (-other)

    def scale(self, c) -> "SparseState":
        c = Radical.of(c)
        if c.is_zero():
            return SparseState(self.n)
        return SparseState(self.n, {b: c * a for b, a in self._amps.items()})

    __rmul__ = scale

    def append(self, qubit: str) -> "SparseState":
        """Tensor with one more qubit ``|+>`` or ``|->`` on the right."""
        check_basis(qubit, 1)
        return SparseState(self.n + 1, {b + qubit: a for b, a in self._amps.items()})

    def flipped(self) -> "SparseState":
        """Global exchange of ``+`` and ``-`` on every qubit."""
        return SparseState(self.n, {flip(b): a for b, a in self._amps.items()})

    def magnetizations(self) -> set:
        return {magnetization(b) for b in self._amps}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseState):
            return NotImplemented
        return self.n == other.n and self._amps == other._amps

    def __hash__(self):
        return hash((self.n, tuple(self._amps.items())))

    def to_json(self) -> dict:
        return {b: a.to_json() for b, a in self._amps.items()}

    @classmethod
    def from_json(cls, n: int, obj: Mapping[str, Mapping[str, str]]) -> "SparseState":
        return cls(n, {b: Radical.from_json(a) for b, a in obj.items()})

    def __str__(self) -> str:
        if not self._amps:
            return "0"
        return " + ".join(f"({a})|{b}>" for b, a in self._amps.items())

    def __repr__(self) -> str:
        return f"SparseState({self.n}, {self})"


def inner_product(a: SparseState, b: SparseState) -> Radical:
    """<a|b> for real amplitudes (no conjugation)."""
    a._check_dim(b)
    if len(b) < len(a):
        a, b = b, a
    total = ZERO
    for key, amp in a:
        if key in b:
            total = total + amp * b[key]
    return total


def superpose(n: int, parts: Iterable) -> SparseState:
    """Sum of ``coefficient * state`` pairs."""
    out = SparseState(n)
    for c, s in parts:
        out = out + s.scale(c)
    return out
