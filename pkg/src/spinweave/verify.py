"""Exact checks that the wired projection reproduces the coupled eigenstates.

``ratio`` in every report is the constant ``A`` with ``psi_alg = A * psi_ref``.
Its reciprocal, ``table_a``, is the factor that scales the raw projection
output to the normalized eigenstate; the ratio constraint between sibling
labels is stated in that orientation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .coupling import apply_S2, apply_Sz, build_coupled_state
from .errors import CapExceeded, ChildInadmissible, MOutOfRange, SpinweaveError
from .projection import DEFAULT_ORACLE_CAP, apply_projection_sequence, permutation_sum_oracle
from .radical import ZERO, Radical
from .spins import MINUS, PLUS, CouplingPath, HalfInt, enumerate_paths
from .state import SparseState, inner_product
from .wiring import AssignmentPolicy, column_sums, compile_setup

SUITES = ("proportionality", "recursion", "sums", "invariance", "ratio", "eigen", "oracle")


@dataclass
class EquivalenceReport:
    path: CouplingPath
    m: HalfInt
    holds: bool
    ratio: Radical
    alg_norm2: Radical
    mismatch_keys: list = field(default_factory=list)

    @property
    def table_a(self) -> Optional[Radical]:
        return None if self.ratio.is_zero() else self.ratio.inverse()

    def to_json(self) -> dict:
        return {
            "path": str(self.path),
            "m": str(self.m),
            "holds": self.holds,
            "ratio": self.ratio.to_json(),
            "ratio_text": str(self.ratio),
            "table_a": self.table_a.to_json() if self.table_a is not None else None,
            "alg_norm2": self.alg_norm2.to_json(),
            "mismatch_keys": list(self.mismatch_keys),
        }


def _admissible(path: CouplingPath, m: HalfInt) -> None:
    if not path.admits(m):
        raise MOutOfRange(f"m={m} not admissible for S_N={path.final}")


@lru_cache(maxsize=None)
def _algorithm_state(doubled: tuple, dm: int) -> SparseState:
    path = CouplingPath.from_doubled(doubled)
    return apply_projection_sequence(compile_setup(path, HalfInt(dm)))


def algorithm_state(path: CouplingPath, m, policy: AssignmentPolicy = None) -> SparseState:
    """Projection output for ``(path, m)`` wired under ``policy``."""
    m = HalfInt.of(m)
    _admissible(path, m)
    if policy is None or policy.mode == "canonical":
        return _algorithm_state(path.doubled, m.doubled)
    return apply_projection_sequence(compile_setup(path, m, policy))


def compare(path: CouplingPath, m: HalfInt, alg: SparseState, ref: SparseState) -> EquivalenceReport:
    """Decide whether ``alg`` equals ``A * ref`` for a single constant ``A``."""
    keys = sorted(set(alg.support()) | set(ref.support()))
    mismatches = [b for b in keys if (b in alg) != (b in ref)]
    ratio = ZERO
    if not mismatches and keys:
        ratio = alg[keys[0]] / ref[keys[0]]
        mismatches = [b for b in keys if alg[b] != ratio * ref[b]]
    holds = bool(keys) and not mismatches and not ratio.is_zero()
    return EquivalenceReport(path, m, holds, ratio, inner_product(alg, alg), mismatches)


def check_proportionality(path: CouplingPath, m, policy: AssignmentPolicy = None) -> EquivalenceReport:
    m = HalfInt.of(m)
    _admissible(path, m)
    return compare(path, m, algorithm_state(path, m, policy), build_coupled_state(path, m))


def _child(path: CouplingPath, dm: int) -> SparseState:
    parent = path.prefix(path.n - 1)
    m = HalfInt(dm)
    if not parent.admits(m):
        return SparseState(parent.n)
    return algorithm_state(parent, m)


def recursion_coefficients(path: CouplingPath, m: HalfInt) -> tuple:
    """``(c_plus, c_minus)`` multiplying the ``m - 1/2`` and ``m + 1/2`` children."""
    if path.is_ascent(path.n):
        d_prev = path.spins[-2].doubled
        return (Fraction(d_prev + m.doubled + 1, 2), Fraction(d_prev - m.doubled + 1, 2))
    return (Fraction(-1), Fraction(1))


def check_algorithm_recursion(path: CouplingPath, m) -> bool:
    m = HalfInt.of(m)
    if path.n < 2:
        raise SpinweaveError("recursion needs n >= 2")
    _admissible(path, m)
    c_plus, c_minus = recursion_coefficients(path, m)
    expected = _child(path, m.doubled - 1).append(PLUS).scale(c_plus) + _child(
        path, m.doubled + 1
    ).append(MINUS).scale(c_minus)
    return algorithm_state(path, m) == expected


def check_sum_identities(path: CouplingPath, m, policy: AssignmentPolicy = None) -> bool:
    m = HalfInt.of(m)
    if path.n < 2:
        raise SpinweaveError("sum identities need n >= 2")
    cfg = compile_setup(path, m, policy)
    expected = tuple(int(c) for c in recursion_coefficients(path, m))
    return column_sums(cfg, path.n) == expected


def check_assignment_invariance(path: CouplingPath, m, trials: int, seed: int) -> bool:
    m = HalfInt.of(m)
    reference = algorithm_state(path, m)
    rng = random.Random(seed)
    for _ in range(trials):
        policy = AssignmentPolicy.seeded(rng.getrandbits(64))
        if algorithm_state(path, m, policy) != reference:
            return False
    return True


def check_ratio_constraint(path: CouplingPath, m) -> bool:
    """Sibling reports satisfy A1/A2 = sqrt((S' + m + 1/2) / (S' - m + 1/2)).

    ``A1``, ``A2`` are the normalizing factors (``table_a``) of the children
    ``(S_1..S_{N-1}; m - 1/2)`` and ``(S_1..S_{N-1}; m + 1/2)``, ``S' = S_{N-1}``.
    """
    m = HalfInt.of(m)
    if path.n < 2:
        raise SpinweaveError("ratio constraint needs n >= 2")
    parent = path.prefix(path.n - 1)
    lo, hi = m - HalfInt(1), m + HalfInt(1)
    if not (parent.admits(lo) and parent.admits(hi)):
        raise ChildInadmissible(f"child label outside [-{parent.final}, {parent.final}]")
    a1 = check_proportionality(parent, lo).table_a
    a2 = check_proportionality(parent, hi).table_a
    if a1 is None or a2 is None:
        return False
    d_prev = parent.final.doubled
    target = Radical.sqrt(Fraction(d_prev + m.doubled + 1, d_prev - m.doubled + 1))
    return a1 / a2 == target


def check_eigenvalues(path: CouplingPath, m) -> bool:
    m = HalfInt.of(m)
    psi = build_coupled_state(path, m)
    s = path.final.value
    return apply_S2(psi) == psi.scale(s * (s + 1)) and apply_Sz(psi) == psi.scale(m.value)


def check_oracle(path: CouplingPath, m, policy: AssignmentPolicy = None, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    m = HalfInt.of(m)
    cfg = compile_setup(path, m, policy)
    return permutation_sum_oracle(cfg, m, cap=cap) == apply_projection_sequence(cfg)


def labels(n: int):
    for path in enumerate_paths(n):
        for m in path.m_values():
            yield path, m


def full_sweep(
    n_max: int,
    suites=SUITES,
    seed: int = 0,
    trials: int = 20,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> dict:
    """Run the selected checks over every label with 2 <= n <= n_max.

    Returns a JSON-ready summary with per-check, per-n pass/fail/skip counts
    and one item per evaluated label.
    """
    if n_max < 2:
        raise SpinweaveError("full_sweep needs n_max >= 2")
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise SpinweaveError(f"unknown suites: {sorted(unknown)}")
    suites = [s for s in SUITES if s in suites]
    checks = {s: {"counts": {}, "items": []} for s in suites}

    def record(suite, n, path, m, status, report=None):
        counts = checks[suite]["counts"].setdefault(str(n), {"pass": 0, "fail": 0, "skip": 0})
        counts[status] += 1
        item = {"path": str(path), "m": str(m), "holds": status == "pass" if status != "skip" else None}
        if report is not None:
            item["ratio"] = report.ratio.to_json()
            if status == "fail":
                item["report"] = report.to_json()
        checks[suite]["items"].append(item)

    seeder = random.Random(seed)
    for n in range(2, n_max + 1):
        for path, m in labels(n):
            label_seed = seeder.getrandbits(64)
            report = check_proportionality(path, m)
            if "proportionality" in checks:
                record("proportionality", n, path, m, "pass" if report.holds else "fail", report)
            if "recursion" in checks:
                record("recursion", n, path, m, "pass" if check_algorithm_recursion(path, m) else "fail")
            if "sums" in checks:
                record("sums", n, path, m, "pass" if check_sum_identities(path, m) else "fail")
            if "invariance" in checks:
                ok = check_assignment_invariance(path, m, trials, label_seed)
                record("invariance", n, path, m, "pass" if ok else "fail")
            if "ratio" in checks:
                try:
                    ok = check_ratio_constraint(path, m)
                except ChildInadmissible:
                    record("ratio", n, path, m, "skip")
                else:
                    record("ratio", n, path, m, "pass" if ok else "fail")
            if "eigen" in checks:
                record("eigen", n, path, m, "pass" if check_eigenvalues(path, m) else "fail")
            if "oracle" in checks:
                try:
                    ok = check_oracle(path, m, cap=oracle_cap)
                except CapExceeded:
                    record("oracle", n, path, m, "skip")
                else:
                    record("oracle", n, path, m, "pass" if ok else "fail")

    totals = {}
    for suite, data in checks.items():
        agg = {"pass": 0, "fail": 0, "skip": 0}
        for c in data["counts"].values():
            for key in agg:
                agg[key] += c[key]
        totals[suite] = agg
    return {
        "n_max": n_max,
        "seed": seed,
        "trials": trials,
        "oracle_cap": oracle_cap,
        "suites": suites,
        "totals": totals,
        "all_passed": all(t["fail"] == 0 for t in totals.values()),
        "checks": checks,
    }
