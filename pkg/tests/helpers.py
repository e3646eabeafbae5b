from __future__ import annotations

from pathlib import Path

from crossring.drawing import read
from crossring.generate import canonical, reroute

DATA = Path(__file__).parent / "data"


def figure_eight(n: int = 6, j: int = 2):
    """canonical(4, n) with the closing edge of R(j) rerouted across r(1, j)."""
    return reroute(
        canonical(4, n),
        ("R", j, 3),
        [(("B", 2, j + 1), 0), (("R", j, 1), 0), (("B", 1, j), 1)],
        tail_after=("B", 3, j + 1),
        head_after=("B", 0, j),
    )


def double_red_crossing(j: int = 3):
    """canonical(4, 8) with the closing edge of R(j) crossing R(j-1) twice."""
    return reroute(
        canonical(4, 8),
        ("R", j, 3),
        [
            (("R", j - 1, 3), 0),
            (("R", j - 1, 2), 0),
            (("B", 2, j - 1), 1),
            (("B", 1, j - 1), 1),
            (("B", 0, j - 1), 0),
        ],
        tail_after=("R", j, 2),
        head_after=("B", 0, j + 1),
    )


def self_crossing_separator():
    """C_4 x C_5 where R(3) crosses itself and separates R(2) from the other red cycles."""
    return read(DATA / "self_crossing_separator.json")


def no_disjoint_partner():
    """C_3 x C_3 where R(2) crosses both other red cycles."""
    return read(DATA / "no_disjoint_partner.json")


ACCEPTANCE_LINES: list = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
