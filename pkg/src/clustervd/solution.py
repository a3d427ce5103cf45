"""Problem variants and the solution record shared by every solver."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import INFINITY

SCHEMA = "clustervd/1"


class Variant(str, Enum):
    CVD = "cvd"                      # G - S is a cluster graph
    CONNECTED_CVD = "ccvd"           # ... and G[S] is connected
    CLIQUE_DEL = "clique"            # G - S is a clique
    CONNECTED_CLIQUE_DEL = "cclique"
    COMPLEMENT_VC = "covc"           # S is a vertex cover of the complement (same sets as CLIQUE_DEL)
    VERTEX_COVER = "vc"              # G - S is edgeless

    @property
    def connected(self) -> bool:
        return self in (Variant.CONNECTED_CVD, Variant.CONNECTED_CLIQUE_DEL)


@dataclass(frozen=True)
class Solution:
    variant: Variant
    value: float | int
    set: frozenset | None = None
    weighted: bool = False
    method: str = "cotree-dp"

    @property
    def finite(self) -> bool:
        return self.value != INFINITY

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "variant": self.variant.value,
            "value": self.value if self.finite else "infinity",
            "set": None if self.set is None else sorted(self.set),
            "weighted": self.weighted,
            "method": self.method,
        }

    @classmethod
    def from_json(cls, data: dict) -> Solution:
        value = INFINITY if data["value"] == "infinity" else int(data["value"])
        vs = data.get("set")
        return cls(Variant(data["variant"]), value, None if vs is None else frozenset(vs),
                   bool(data.get("weighted", False)), data.get("method", "cotree-dp"))
