"""Falsification events: a check that is a theorem failed on a concrete drawing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .product_graph import edge_str


@dataclass
class Falsification:
    check: str
    detail: str
    where: dict = field(default_factory=dict)
    drawing: dict | None = None

    def to_dict(self) -> dict:
        out = {"check": self.check, "detail": self.detail, "where": self.where}
        if self.drawing is not None:
            out["drawing"] = self.drawing
        return out


class FalsificationError(RuntimeError):
    def __init__(self, event: Falsification):
        super().__init__(f"{event.check}: {event.detail}")
        self.event = event


def crossing_str(cid: tuple) -> str:
    return f"{edge_str(cid[0])}|{edge_str(cid[1])}"
