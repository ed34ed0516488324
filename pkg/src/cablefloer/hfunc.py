"""Staircases and h-functions of L-space knots, their cables and torus links.

For an L-space knot ``K`` write ``χ_K(t) = Δ_K(t)/(1 - t^-1) = Σ_{σ∈S} t^σ``.
The set ``S`` (the *staircase*) has a finite head above ``-g`` and then
contains every integer ``<= -g``.  The h-function counts staircase elements
strictly above ``s``; for cables and torus links it is the sorted sum

    h(s_1 <= ... <= s_n) = Σ_i h_K(s_i - c_m + (i-1) m),   c_m = m(n-1)/2.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import LaurentPoly, NormalizationError, TruncatedSeries, chi_series

# how far below -g the tail of χ_K is re-checked when building a staircase
TAIL_SAFETY = 8


class UnverifiedRegimeWarning(UserWarning):
    """The cable may not be an L-space link, so the h-function formula is unproven there."""


class LatticeError(ValueError):
    """An Alexander vector is off the lattice Z^n + c_m (1, ..., 1)."""


@dataclass(frozen=True)
class Staircase:
    """``S = head ∪ {-g, -g-1, ...}`` with ``head`` strictly decreasing and > -g."""

    genus: int
    head: tuple[int, ...]

    def __post_init__(self):
        g, head = self.genus, tuple(self.head)
        object.__setattr__(self, "head", head)
        if g < 0:
            raise ValueError("genus must be non-negative")
        if len(head) != g:
            raise ValueError(f"staircase head must have exactly g={g} elements, got {len(head)}")
        if any(a <= b for a, b in zip(head, head[1:])):
            raise ValueError("staircase head must be strictly decreasing")
        if head and (head[0] != g or head[-1] < 1 - g):
            raise ValueError("staircase head must start at g and stay above -g")

    def __contains__(self, s: int) -> bool:
        return s <= -self.genus or s in self.head

    def sigma(self, i: int) -> int:
        """The i-th element, 1-based and descending."""
        if i < 1:
            raise IndexError("staircase elements are indexed from 1")
        return self.head[i - 1] if i <= self.genus else 1 - i

    def elements(self, count: int) -> list[int]:
        return [self.sigma(i) for i in range(1, count + 1)]

    def h(self, s: int) -> int:
        """``|{σ ∈ S : σ > s}|``."""
        g = self.genus
        if s >= g:
            return 0
        if s < -g:
            return -s
        # tail sits at or below -g <= s, so only head entries count
        return sum(1 for x in self.head if x > s)

    def chi(self, floor: int) -> TruncatedSeries:
        """``Σ_{σ∈S} t^σ`` truncated at ``floor``."""
        coeffs = {2 * s: 1 for s in self.head if s >= floor}
        for s in range(-self.genus, floor - 1, -1):
            coeffs[2 * s] = 1
        return TruncatedSeries(LaurentPoly(coeffs), 2 * floor)

    def is_symmetric(self, margin: int = 5) -> bool:
        """``h(-s) = h(s) + s`` for ``|s| <= g + margin``."""
        r = self.genus + margin
        return all(self.h(-s) == self.h(s) + s for s in range(-r, r + 1))


def staircase_from_delta(delta: LaurentPoly) -> Staircase:
    """Read the staircase off ``χ_K = Δ/(1 - t^-1)``.

    Raises :class:`NormalizationError` when a coefficient leaves {0, 1} or the
    tail is not all ones, i.e. Δ cannot come from an L-space knot.
    """
    g = delta.top2 // 2 if not delta.is_zero() else 0
    series = chi_series(delta, -g - TAIL_SAFETY)
    head = []
    for e, c in series.items():
        if c not in (0, 1):
            raise NormalizationError(f"not an L-space staircase: coefficient {c} at t^{e}")
        if c == 1 and e > -g:
            head.append(int(e))
    for s in range(-g, -g - TAIL_SAFETY - 1, -1):
        if series[s] != 1:
            raise NormalizationError(f"not an L-space staircase: tail coefficient at t^{s} is {series[s]}")
    try:
        st = Staircase(g, tuple(head))
    except ValueError as exc:
        raise NormalizationError(f"not an L-space staircase: {exc}") from None
    if not st.is_symmetric():
        raise NormalizationError("not an L-space staircase: h(-s) != h(s) + s")
    return st


@dataclass(frozen=True)
class HKnot:
    """h-function of an L-space knot; ``threshold`` overrides the L-space cable bound."""

    staircase: Staircase
    threshold: int | None = field(default=None, compare=False)

    @classmethod
    def from_delta(cls, delta: LaurentPoly, threshold: int | None = None) -> "HKnot":
        return cls(staircase_from_delta(delta), threshold)

    @classmethod
    def unknot(cls) -> "HKnot":
        return cls(Staircase(0, ()))

    @property
    def genus(self) -> int:
        return self.staircase.genus

    def __call__(self, s: int) -> int:
        return self.staircase.h(s)


def lspace_threshold(hK: HKnot) -> int:
    """Smallest m treated as the proven L-space cable regime.

    Default ``max(1, 2g - 1)``; overridable per knot via ``HKnot.threshold``.
    """
    if hK.threshold is not None:
        return hK.threshold
    return max(1, 2 * hK.genus - 1)


def h_knot(hK: HKnot, s: int) -> int:
    return hK(s)


def h0(x: int) -> int:
    """h-function of the unknot."""
    return -x if x < 0 else 0


def _normalize(n: int, m: int, s2: Sequence[int]) -> list[int]:
    """Doubled Alexander vector -> integer normalized vector ``s - c_m``."""
    if len(s2) != n:
        raise ValueError(f"expected {n} coordinates, got {len(s2)}")
    c2 = m * (n - 1)
    out = []
    for v in s2:
        d = v - c2
        if d % 2:
            raise LatticeError(f"coordinate {v}/2 is off the lattice Z + {c2}/2")
        out.append(d // 2)
    return out


def h_torus(n: int, m: int, s2: Sequence[int]) -> int:
    """h-function of T(n, mn); ``s2`` holds doubled Alexander coordinates."""
    sbar = sorted(_normalize(n, m, s2))
    return sum(h0(x + i * m) for i, x in enumerate(sbar))


def _check_regime(hK: HKnot, m: int) -> None:
    if hK.genus > 0 and m < lspace_threshold(hK):
        warnings.warn(
            f"m={m} is below the L-space threshold {lspace_threshold(hK)}; h-function unverified",
            UnverifiedRegimeWarning,
            stacklevel=3,
        )


def h_stab(hK: HKnot, n: int, m: int, sbar: Sequence[int]) -> int:
    """h-function of K_{n,mn} in normalized coordinates ``s̄ = s - c_m``."""
    if len(sbar) != n:
        raise ValueError(f"expected {n} coordinates, got {len(sbar)}")
    _check_regime(hK, m)
    return sum(hK(x + i * m) for i, x in enumerate(sorted(sbar)))


def h_cable(hK: HKnot, n: int, m: int, s2: Sequence[int]) -> int:
    """h-function of the cable K_{n,mn} at the doubled Alexander vector ``s2``."""
    _check_regime(hK, m)
    sbar = sorted(_normalize(n, m, s2))
    return sum(hK(x + i * m) for i, x in enumerate(sbar))


def h_colored(hK: HKnot, sbar: Sequence[int]) -> int:
    """Stable value ``h_K(min s̄)``; the m -> ∞ limit of :func:`h_stab`."""
    return hK(min(sbar))
