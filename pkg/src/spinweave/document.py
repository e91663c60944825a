"""JSON documents written by the command-line tool."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .radical import Radical
from .spins import CouplingPath, HalfInt
from .state import SparseState
from .verify import EquivalenceReport
from .wiring import SetupConfig

SCHEMA = "spinweave/1"
DECIMAL_DIGITS = 15


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def approx(state: SparseState) -> dict:
    return {
        "approx": True,
        "digits": DECIMAL_DIGITS,
        "amplitudes": {b: f"{float(a):.{DECIMAL_DIGITS}g}" for b, a in state},
    }


@dataclass
class StateDocument:
    path: CouplingPath
    m: HalfInt
    policy: str
    setup: SetupConfig
    state_alg: SparseState
    state_ref: SparseState
    holds: bool
    ratio: Radical
    normalized: Optional[dict] = None

    @classmethod
    def from_report(cls, report: EquivalenceReport, policy: str, setup: SetupConfig,
                    state_alg: SparseState, state_ref: SparseState, with_decimals: bool = False):
        return cls(report.path, report.m, policy, setup, state_alg, state_ref,
                   report.holds, report.ratio, approx(state_ref) if with_decimals else None)

    @property
    def n(self) -> int:
        return self.path.n

    def to_json(self) -> dict:
        table_a = None if self.ratio.is_zero() else self.ratio.inverse()
        doc = {
            "schema": SCHEMA,
            "n": self.n,
            "label": {"path": str(self.path), "m": str(self.m)},
            "policy": self.policy,
            "setup": self.setup.to_json(),
            "state_alg": self.state_alg.to_json(),
            "state_ref": self.state_ref.to_json(),
            "holds": self.holds,
            "ratio": self.ratio.to_json(),
            "ratio_text": str(self.ratio),
            "table_a": table_a.to_json() if table_a is not None else None,
        }
        if self.normalized is not None:
            doc["normalized"] = self.normalized
        return doc

    def dumps(self) -> str:
        return dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: dict) -> "StateDocument":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {obj.get('schema')!r}")
        n = int(obj["n"])
        return cls(
            path=CouplingPath.parse(obj["label"]["path"]),
            m=HalfInt.of(obj["label"]["m"]),
            policy=obj["policy"],
            setup=SetupConfig.from_json(obj["setup"]),
            state_alg=SparseState.from_json(n, obj["state_alg"]),
            state_ref=SparseState.from_json(n, obj["state_ref"]),
            holds=bool(obj["holds"]),
            ratio=Radical.from_json(obj["ratio"]),
            normalized=obj.get("normalized"),
        )

    @classmethod
    def loads(cls, text: str) -> "StateDocument":
        return cls.from_json(json.loads(text))
