"""Post-measurement atomic state of a wired setup, computed two independent ways.

``apply_projection_sequence`` folds the single-emitter projectors one emitter
at a time, tracking which detectors already registered a photon as a bitmask.
``permutation_sum_oracle`` evaluates the closed double sum over detector and
emitter permutations literally and serves as a brute-force check.
"""
from __future__ import annotations

import itertools
from math import factorial

import numpy as np

from .errors import CapExceeded, SpinweaveError
from .spins import MINUS, PLUS, HalfInt
from .state import SparseState
from .wiring import SetupConfig

DEFAULT_ORACLE_CAP = 7


def projection_layers(cfg: SetupConfig) -> list:
    """Joint (atomic string, occupied detectors) amplitudes after each emitter.

    Entry ``k`` of the result maps ``(string, mask)`` with ``len(string) ==
    popcount(mask) == k`` to a nonzero integer amplitude.
    """
    n = cfg.n
    layer = {("", 0): 1}
    layers = [layer]
    for k in range(n):
        links = [(j, cfg.chi[j][k]) for j in range(n) if cfg.chi[j][k]]
        nxt: dict = {}
        for (s, mask), amp in layer.items():
            for j, c in links:
                bit = 1 << j
                if mask & bit:
                    continue
                # each detector carries exactly one polarizer: beta selects |+>, alpha |->
                key = (s + (PLUS if cfg.beta[j] else MINUS), mask | bit)
                nxt[key] = nxt.get(key, 0) + amp * c
        layer = {key: a for key, a in nxt.items() if a}
        layers.append(layer)
    return layers


def apply_projection_sequence(cfg: SetupConfig) -> SparseState:
    full = (1 << cfg.n) - 1
    final = projection_layers(cfg)[-1]
    return SparseState(cfg.n, {s: a for (s, mask), a in final.items() if mask == full})


def permutation_sum_oracle(cfg: SetupConfig, m=None, cap: int = DEFAULT_ORACLE_CAP) -> SparseState:
    """Brute-force double sum over (sigma, tau) in S_n x S_n.

    For each pair the term is
    ``beta_s1 ... beta_sk alpha_s(k+1) ... alpha_sn * chi_{s1 t1} ... chi_{sn tn}``
    attached to the string with ``+`` at emitters ``t1..tk``; the total is
    divided by ``k! (n-k)!`` with ``k = n/2 + m``.
    """
    n = cfg.n
    if n > cap:
        raise CapExceeded(n, cap)
    m = cfg.m if m is None else HalfInt.of(m)
    if abs(m.doubled) > n or (m.doubled + n) % 2:
        raise SpinweaveError(f"m={m} impossible for n={n}")
    k = (n + m.doubled) // 2

    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    chi = np.array(cfg.chi, dtype=np.int64).reshape(n, n)
    # tau -> index of its basis string; strings keyed by the set {tau(1..k)} of '+' emitters
    plus_masks = np.zeros(len(perms), dtype=np.int64)
    for i in range(k):
        plus_masks |= np.left_shift(1, perms[:, i])
    totals = np.zeros(1 << n, dtype=np.int64)

    for sigma in perms:
        weight = 1
        for i in range(n):
            weight *= cfg.beta[sigma[i]] if i < k else cfg.alpha[sigma[i]]
        if weight == 0:
            continue
        # chi_{sigma(i), tau(i)} for every tau at once
        prod = np.ones(len(perms), dtype=np.int64)
        for i in range(n):
            prod *= chi[sigma[i], perms[:, i]]
        np.add.at(totals, plus_masks, weight * prod)

    norm = factorial(k) * factorial(n - k)
    out = {}
    for mask in np.nonzero(totals)[0]:
        value = int(totals[mask])
        q, r = divmod(value, norm)
        if r:
            raise ArithmeticError(f"prefactor 1/{norm} does not divide amplitude {value}")
        out["".join(PLUS if mask >> e & 1 else MINUS for e in range(n))] = q
    return SparseState(n, out)
