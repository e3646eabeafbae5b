"""Index arithmetic on Z_k and the circular relation used to order red cycles."""

from __future__ import annotations

from dataclasses import dataclass


class ModulusMismatch(ValueError):
    """Raised when two indices from different rings are combined."""


@dataclass(frozen=True, order=True)
class CycIndex:
    """An element of Z_k.

    Construct with ``CycIndex.of(value, k)`` to reduce an arbitrary integer;
    the plain constructor insists on an already-reduced value.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    @classmethod
    def of(cls, value: int, modulus: int) -> CycIndex:
        return cls(value % modulus, modulus)

    def _offset(self, y: int | CycIndex) -> int:
        if isinstance(y, CycIndex):
            if y.modulus != self.modulus:
                raise ModulusMismatch(f"Z_{self.modulus} combined with Z_{y.modulus}")
            return y.value
        return int(y)

    def __add__(self, y: int | CycIndex) -> CycIndex:
        return add(self, y)

    def __sub__(self, y: int | CycIndex) -> CycIndex:
        return sub(self, y)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def add(x: CycIndex, y: int | CycIndex) -> CycIndex:
    return CycIndex((x.value + x._offset(y)) % x.modulus, x.modulus)


def sub(x: CycIndex, y: int | CycIndex) -> CycIndex:
    return CycIndex((x.value - x._offset(y)) % x.modulus, x.modulus)


def _check_same(i: CycIndex, j: CycIndex) -> int:
    if i.modulus != j.modulus:
        raise ModulusMismatch(f"Z_{i.modulus} compared with Z_{j.modulus}")
    return i.modulus


def circ_leq(i: CycIndex, j: CycIndex) -> bool:
    """``i`` precedes-or-equals ``j``: the forward distance from i to j is at most k // 2.

    For even k both ``circ_leq(i, j)`` and ``circ_leq(j, i)`` hold when the
    two indices are antipodal; no tie-break is applied.
    """
    k = _check_same(i, j)
    return (j.value - i.value) % k <= k // 2


def circ_lt(i: CycIndex, j: CycIndex) -> bool:
    return circ_leq(i, j) and i.value != j.value


def leq_mod(i: int, j: int, k: int) -> bool:
    """Integer shortcut for :func:`circ_leq` used on hot paths."""
    return (j - i) % k <= k // 2


def lt_mod(i: int, j: int, k: int) -> bool:
    return (i - j) % k != 0 and leq_mod(i, j, k)
