"""Coupled-basis reference states built from spin-1/2 Clebsch-Gordan coefficients.

The state ``|S_1, ..., S_N; m>`` is obtained by coupling ``|S_1, ..., S_{N-1}; m -+ 1/2>``
with one more qubit, using the closed-form coefficients for ``j2 = 1/2`` in
the Condon-Shortley phase convention.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidBranch, MOutOfRange, SelectionRuleError, SpinweaveError
from .radical import ZERO, Radical
from .spins import MINUS, PLUS, CouplingPath, HalfInt, magnetization
from .state import SparseState


class CgcBranch(enum.Enum):
    UP = "up"  # J = j1 + 1/2
    DOWN = "down"  # J = j1 - 1/2


def cgc(j1: HalfInt, M: HalfInt, branch: CgcBranch, m2: HalfInt) -> Radical:
    """<j1, 1/2; M - m2, m2 | j1 +- 1/2, M>.

    Returns zero when ``m1 = M - m2`` lies outside ``[-j1, j1]``.
    """
    j1, M, m2 = HalfInt.of(j1), HalfInt.of(M), HalfInt.of(m2)
    dj, dM = j1.doubled, M.doubled
    if dj < 0:
        raise SpinweaveError(f"j1 must be nonnegative, got {j1}")
    if abs(m2.doubled) != 1:
        raise SpinweaveError(f"m2 must be +-1/2, got {m2}")
    if branch is CgcBranch.DOWN and dj == 0:
        raise InvalidBranch("J = j1 - 1/2 requires j1 >= 1/2")
    dJ = dj + 1 if branch is CgcBranch.UP else dj - 1
    if (dM - dJ) % 2 or abs(dM) > dJ:
        raise SelectionRuleError(f"M={M} not admissible for J={HalfInt(dJ)}")
    dm1 = dM - m2.doubled
    if abs(dm1) > dj:
        return ZERO
    plus = Fraction(dj + dM + 1, 2 * (dj + 1))  # (j1 + M + 1/2) / (2 j1 + 1)
    minus = Fraction(dj - dM + 1, 2 * (dj + 1))  # (j1 - M + 1/2) / (2 j1 + 1)
    if branch is CgcBranch.UP:
        return Radical.sqrt(plus if m2.doubled > 0 else minus)
    if m2.doubled > 0:
        return -Radical.sqrt(minus)
    return Radical.sqrt(plus)


def build_coupled_state(path: CouplingPath, m) -> SparseState:
    """Normalized ``|S_1, ..., S_N; m>`` in the decoupled basis."""
    m = HalfInt.of(m)
    if not path.admits(m):
        raise MOutOfRange(f"m={m} not admissible for S_N={path.final}")
    return _coupled(path.doubled, m.doubled)


@lru_cache(maxsize=None)
def _coupled(doubled: tuple, dm: int) -> SparseState:
    if len(doubled) == 1:
        return SparseState.basis(PLUS if dm > 0 else MINUS)
    parent, dj = doubled[:-1], doubled[-2]
    branch = CgcBranch.UP if doubled[-1] > dj else CgcBranch.DOWN
    M = HalfInt(dm)
    out = SparseState(len(doubled))
    for qubit, dm2 in ((PLUS, 1), (MINUS, -1)):
        c = cgc(HalfInt(dj), M, branch, HalfInt(dm2))
        if c.is_zero():
            continue
        out = out + _coupled(parent, dm - dm2).append(qubit).scale(c)
    return out


def apply_Sz(s: SparseState) -> SparseState:
    return SparseState(s.n, {b: a * magnetization(b).value for b, a in s})


def _ladder(s: SparseState, src: str, dst: str) -> SparseState:
    out: dict = {}
    for b, a in s:
        for i, c in enumerate(b):
            if c == src:
                t = b[:i] + dst + b[i + 1:]
                out[t] = out.get(t, ZERO) + a
    return SparseState(s.n, out)


def apply_S_plus(s: SparseState) -> SparseState:
    return _ladder(s, MINUS, PLUS)


def apply_S_minus(s: SparseState) -> SparseState:
    return _ladder(s, PLUS, MINUS)


def apply_S2(s: SparseState) -> SparseState:
    """Total spin squared, S^2 = Sz^2 + (S+ S- + S- S+) / 2."""
    flips = apply_S_plus(apply_S_minus(s)) + apply_S_minus(apply_S_plus(s))
    return apply_Sz(apply_Sz(s)) + flips.scale(Fraction(1, 2))
