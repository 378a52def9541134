from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Status(str, Enum):
    TRUE = "true"
    FALSE = "false"
    VACUOUS = "vacuous"

    def __bool__(self) -> bool:  # pragma: no cover - guard against misuse
        raise TypeError("Status is three-valued; compare against Status members")


@dataclass
class Witness:
    """Certificate for a verdict.

    ``vertices`` are local vertex ids of the graph the verdict was computed
    on; their meaning depends on ``kind`` (path order for P4, cycle order
    for cycles, the pairs ``(a, b), (c, d)`` for 2K2, branch vertices for
    subdivisions).  Extra structure lives in ``data``.
    """

    kind: str
    vertices: list[int] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    # display names and group element indices of ``vertices`` (filled by annotate)
    labels: list[str] | None = None
    elements: list[int] | None = None

    def annotate(self, labels: list[str], elements: list[int]) -> "Witness":
        self.labels = [labels[v] for v in self.vertices]
        self.elements = [int(elements[v]) for v in self.vertices]
        return self

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "vertices": list(self.vertices), "data": self.data}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.elements is not None:
            out["elements"] = list(self.elements)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(d["kind"], list(d["vertices"]), dict(d.get("data", {})),
                   d.get("labels"), d.get("elements"))


@dataclass
class Verdict:
    status: Status
    witness: Witness | None = None

    @property
    def value(self) -> bool | None:
        if self.status is Status.VACUOUS:
            return None
        return self.status is Status.TRUE

    @classmethod
    def vacuous(cls) -> "Verdict":
        return cls(Status.VACUOUS)

    @classmethod
    def yes(cls, kind: str, vertices=(), **data) -> "Verdict":
        return cls(Status.TRUE, Witness(kind, list(vertices), data))

    @classmethod
    def no(cls, kind: str, vertices=(), **data) -> "Verdict":
        return cls(Status.FALSE, Witness(kind, list(vertices), data))

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        w = d.get("witness")
        return cls(Status(d["status"]), None if w is None else Witness.from_dict(w))
