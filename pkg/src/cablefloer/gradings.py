"""Degree shifts of the blow-down and crossing-change maps.

Alexander shifts are stored doubled.  A map of twist degree ``t`` between
cables with Alexander shift ``A`` moves the normalized degree by
``A - t(n-1)/2``, since ``c_{m+t} - c_m = t(n-1)/2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GradingShift:
    grw: int
    alexander2: tuple[int, ...]
    twist: int

    def __add__(self, other: "GradingShift") -> "GradingShift":
        if len(self.alexander2) != len(other.alexander2):
            raise ValueError("shifts of different rank")
        a = tuple(x + y for x, y in zip(self.alexander2, other.alexander2))
        return GradingShift(self.grw + other.grw, a, self.twist + other.twist)

    @property
    def alexander(self) -> tuple[float, ...]:
        return tuple(x / 2 for x in self.alexander2)

    def to_json(self) -> dict:
        return {"grw": self.grw, "alexander2": list(self.alexander2), "twist": self.twist}


def phi_shift(n: int, k: int) -> GradingShift:
    """Blow-down map ``φ_k`` around all ``n`` strands: ``(-k²-k, (-k + (n-1)/2)·𝟙)``, twist 1."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"φ_{k} is not defined for n={n}")
    return GradingShift(-k * k - k, (n - 1 - 2 * k,) * n, 1)


def phi_shift_general(lk_total: int, lk: Sequence[int], k: int, twist: int = 1) -> GradingShift:
    """Blow-down of a (-1)-framed unknot ``M`` with ``lk(L, M) = lk_total``.

    ``A_i = (-2k - 1 + lk_total) · lk(L_i, M) / 2``.
    """
    a2 = tuple((-2 * k - 1 + lk_total) * l for l in lk)
    return GradingShift(-k * k - k, a2, twist)


def renormalize(shift: GradingShift, n: int, m: int) -> GradingShift:
    """Shift in normalized Alexander degree for a map leaving twist ``m``."""
    c2_src = m * (n - 1)
    c2_dst = (m + shift.twist) * (n - 1)
    a2 = tuple(x + c2_src - c2_dst for x in shift.alexander2)
    return GradingShift(shift.grw, a2, 0)


def crossing_shifts(n: int, j: int, check_m: Iterable[int] = (0, 7)) -> dict[str, GradingShift]:
    """``G_j``, ``F_j`` and their colored versions ``G_j^col``, ``F_j^col``.

    The colored shifts come from :func:`renormalize`; the result is checked to be
    independent of ``m`` (at the values in ``check_m``) and equal to the closed
    forms ``-2j + 1`` and ``n - 1``.
    """
    if n < 1 or j < 0:
        raise ValueError("need n >= 1 and j >= 0")
    G = phi_shift_general(2 * n, (2,) * n, j, twist=4)
    F = phi_shift_general(0, (0,) * n, j, twist=-2)
    out = {"G": G, "F": F}
    for name, shift, closed in (("G_col", G, 2 * (1 - 2 * j)), ("F_col", F, 2 * (n - 1))):
        versions = {renormalize(shift, n, m) for m in check_m}
        if len(versions) != 1:
            raise AssertionError(f"{name} renormalization depends on m")
        col = versions.pop()
        if col.alexander2 != (closed,) * n:
            raise AssertionError(f"{name} renormalized to {col.alexander2}, expected {closed}")
        out[name] = col
    return out


def psi_shift(n: int, Z: Iterable[tuple[int, int]]) -> GradingShift:
    """Crossing-change composite ``Ψ_Z`` for ``Z ⊂ {1..n}²`` (1-based), twist -2, Maslov 0."""
    Z = set(Z)
    for i, j in Z:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair {(i, j)} outside 1..{n}")
    a2 = [0] * n
    for i, j in product(range(1, n + 1), repeat=2):
        sign = 1 if (i, j) in Z else -1
        a2[i - 1] += sign
        a2[j - 1] -= sign
    return GradingShift(0, tuple(a2), -2)
