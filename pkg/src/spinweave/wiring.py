"""Compile a target eigenstate label into a detector/polarizer wiring.

Indices of emitters and detectors are 1-based in every public signature and
in the JSON form; ``SetupConfig.chi`` itself is a nested tuple indexed
``chi[detector - 1][emitter - 1]``.

Polarizer characters: ``"-"`` is a sigma-minus filter (the detection projects
the emitter onto ``|+>``, beta = 1), ``"+"`` is sigma-plus (projects onto
``|->``, alpha = 1).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional

from .errors import (
    EmitterIndexError,
    ExhaustedDetectors,
    InvalidExplicitLayout,
    MOutOfRange,
    SpinweaveError,
)
from .spins import CouplingPath, HalfInt

SIGMA_MINUS = "-"
SIGMA_PLUS = "+"


@dataclass(frozen=True)
class SetupConfig:
    n: int
    alpha: tuple
    beta: tuple
    chi: tuple
    descent_pairs: Mapping[int, tuple] = field(default_factory=dict)

    @property
    def polarizers(self) -> str:
        return "".join(SIGMA_MINUS if b else SIGMA_PLUS for b in self.beta)

    @property
    def sigma_minus_count(self) -> int:
        return sum(self.beta)

    @property
    def m(self) -> HalfInt:
        """Magnetic quantum number implied by the polarizer counts."""
        return HalfInt(2 * self.sigma_minus_count - self.n)

    def column(self, k: int) -> tuple:
        _check_emitter(self, k)
        return tuple(row[k - 1] for row in self.chi)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "polarizers": self.polarizers,
            "chi": [list(row) for row in self.chi],
            "descent_pairs": {
                str(k): list(self.descent_pairs[k]) for k in sorted(self.descent_pairs)
            },
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SetupConfig":
        n = int(obj["n"])
        pol = obj["polarizers"]
        if len(pol) != n or set(pol) - {SIGMA_MINUS, SIGMA_PLUS}:
            raise SpinweaveError(f"bad polarizer string {pol!r} for n={n}")
        chi = tuple(tuple(int(x) for x in row) for row in obj["chi"])
        pairs = {int(k): tuple(int(j) for j in v) for k, v in obj.get("descent_pairs", {}).items()}
        cfg = cls(
            n=n,
            alpha=tuple(int(c == SIGMA_PLUS) for c in pol),
            beta=tuple(int(c == SIGMA_MINUS) for c in pol),
            chi=chi,
            descent_pairs=pairs,
        )
        check_config(cfg)
        return cfg


@dataclass(frozen=True)
class AssignmentPolicy:
    """How free choices (polarizer placement, descent detectors) are resolved.

    ``canonical``: sigma-minus on detectors 1..n/2+m, descent pairs take the
    lowest free sigma-minus and sigma-plus detectors.  ``explicit``: caller
    supplies the polarizer string and every descent pair.  ``random``: both
    choices drawn from ``random.Random(seed)``.
    """

    mode: str = "canonical"
    polarizers: Optional[str] = None
    descent_pairs: Optional[Mapping[int, tuple]] = None
    seed: Optional[int] = None

    @classmethod
    def canonical(cls) -> "AssignmentPolicy":
        return cls()

    @classmethod
    def explicit(cls, polarizers: str, descent_pairs: Mapping[int, tuple]) -> "AssignmentPolicy":
        pairs = {int(k): tuple(int(j) for j in v) for k, v in descent_pairs.items()}
        return cls("explicit", polarizers=polarizers, descent_pairs=pairs)

    @classmethod
    def seeded(cls, seed: int) -> "AssignmentPolicy":
        return cls("random", seed=int(seed) & (2**64 - 1))

    @classmethod
    def parse(cls, text: str) -> "AssignmentPolicy":
        """``canonical``, ``random:<seed>`` or ``file:<layout.json>``."""
        if text == "canonical":
            return cls.canonical()
        kind, _, arg = text.partition(":")
        if kind == "random" and arg:
            try:
                return cls.seeded(int(arg, 0))
            except ValueError:
                raise SpinweaveError(f"bad seed {arg!r} in policy {text!r}") from None
        if kind == "file" and arg:
            obj = json.loads(Path(arg).read_text(encoding="utf-8"))
            return cls.explicit(obj["polarizers"], obj.get("descent_pairs", {}))
        raise SpinweaveError(f"unknown policy {text!r}")

    def __str__(self) -> str:
        if self.mode == "random":
            return f"random:{self.seed}"
        return self.mode


def compile_setup(path: CouplingPath, m, policy: AssignmentPolicy = None) -> SetupConfig:
    policy = policy or AssignmentPolicy.canonical()
    m = HalfInt.of(m)
    if not path.admits(m):
        raise MOutOfRange(f"m={m} not admissible for S_N={path.final}")
    n = path.n
    n_minus = (n + m.doubled) // 2
    rng = random.Random(policy.seed) if policy.mode == "random" else None

    if policy.mode == "canonical":
        pol = SIGMA_MINUS * n_minus + SIGMA_PLUS * (n - n_minus)
    elif policy.mode == "random":
        chosen = set(rng.sample(range(n), n_minus))
        pol = "".join(SIGMA_MINUS if j in chosen else SIGMA_PLUS for j in range(n))
    elif policy.mode == "explicit":
        pol = policy.polarizers or ""
        if len(pol) != n or set(pol) - {SIGMA_MINUS, SIGMA_PLUS}:
            raise InvalidExplicitLayout(f"polarizer string {pol!r} does not fit n={n}")
        if pol.count(SIGMA_MINUS) != n_minus:
            raise InvalidExplicitLayout(
                f"layout has {pol.count(SIGMA_MINUS)} sigma-minus filters, need {n_minus}"
            )
        wanted = set(path.descents())
        given = set((policy.descent_pairs or {}).keys())
        if wanted != given:
            raise InvalidExplicitLayout(
                f"descent pairs given for emitters {sorted(given)}, path descends at {sorted(wanted)}"
            )
    else:
        raise SpinweaveError(f"unknown policy mode {policy.mode!r}")

    beta = tuple(int(c == SIGMA_MINUS) for c in pol)
    alpha = tuple(1 - b for b in beta)
    chi = [[0] * n for _ in range(n)]
    consumed: set = set()
    pairs: dict = {}

    for j in range(n):
        chi[j][0] = 1
    for k in range(2, n + 1):
        if path.is_ascent(k):
            for j in range(n):
                if j not in consumed:
                    chi[j][k - 1] = 1
            continue
        free_minus = [j for j in range(n) if j not in consumed and beta[j]]
        free_plus = [j for j in range(n) if j not in consumed and alpha[j]]
        if policy.mode == "explicit":
            jm, jp = (j - 1 for j in policy.descent_pairs[k])
            if jm not in free_minus or jp not in free_plus:
                raise InvalidExplicitLayout(
                    f"descent pair {policy.descent_pairs[k]} for emitter {k} is not a fresh "
                    "(sigma-minus, sigma-plus) detector pair"
                )
        else:
            if not free_minus or not free_plus:
                raise ExhaustedDetectors(f"no fresh detector pair left for emitter {k}")
            if rng is None:
                jm, jp = free_minus[0], free_plus[0]
            else:
                jm, jp = rng.choice(free_minus), rng.choice(free_plus)
        chi[jm][k - 1] = -1
        chi[jp][k - 1] = 1
        consumed.update((jm, jp))
        pairs[k] = (jm + 1, jp + 1)

    cfg = SetupConfig(n, alpha, beta, tuple(tuple(r) for r in chi), pairs)
    check_config(cfg)
    return cfg


def check_config(cfg: SetupConfig) -> None:
    """Raise ``InvalidExplicitLayout`` unless every structural invariant holds."""
    n = cfg.n
    if len(cfg.alpha) != n or len(cfg.beta) != n or len(cfg.chi) != n:
        raise InvalidExplicitLayout("array sizes disagree with n")
    if any(len(row) != n for row in cfg.chi):
        raise InvalidExplicitLayout("chi must be n x n")
    if any(a + b != 1 or a not in (0, 1) for a, b in zip(cfg.alpha, cfg.beta)):
        raise InvalidExplicitLayout("each detector needs exactly one polarizer")
    if any(x not in (-1, 0, 1) for row in cfg.chi for x in row):
        raise InvalidExplicitLayout("chi entries must be -1, 0 or +1")
    seen: set = set()
    for k, (jm, jp) in cfg.descent_pairs.items():
        if not 2 <= k <= n or not (1 <= jm <= n and 1 <= jp <= n):
            raise InvalidExplicitLayout(f"descent pair index out of range: {k}: {(jm, jp)}")
        if not cfg.beta[jm - 1] or not cfg.alpha[jp - 1]:
            raise InvalidExplicitLayout(f"descent pair {(jm, jp)} has wrong polarizers")
        if {jm, jp} & seen:
            raise InvalidExplicitLayout(f"descent pair {(jm, jp)} reuses a consumed detector")
        seen |= {jm, jp}
        if cfg.chi[jm - 1][k - 1] != -1 or cfg.chi[jp - 1][k - 1] != 1:
            raise InvalidExplicitLayout(f"descent emitter {k} lacks its (-1, +1) wiring")
        if sum(1 for row in cfg.chi if row[k - 1]) != 2:
            raise InvalidExplicitLayout(f"descent emitter {k} links outside its detector pair")
        for later in range(k + 1, n + 1):
            if cfg.chi[jm - 1][later - 1] or cfg.chi[jp - 1][later - 1]:
                raise InvalidExplicitLayout(
                    f"detectors {(jm, jp)} consumed by emitter {k} reconnect to emitter {later}"
                )
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if cfg.chi[j - 1][k - 1] == -1 and cfg.descent_pairs.get(k, (None,))[0] != j:
                raise InvalidExplicitLayout(f"phase-shifted link ({j}, {k}) outside a descent pair")


def _check_emitter(cfg: SetupConfig, k: int) -> None:
    if not 1 <= k <= cfg.n:
        raise EmitterIndexError(f"emitter {k} outside 1..{cfg.n}")


def column_sums(cfg: SetupConfig, k: int) -> tuple:
    """``(sum_j beta_j chi_jk, sum_j alpha_j chi_jk)`` for emitter ``k``."""
    col = cfg.column(k)
    return (
        sum(b * c for b, c in zip(cfg.beta, col)),
        sum(a * c for a, c in zip(cfg.alpha, col)),
    )
