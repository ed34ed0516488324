"""Colimits of directed systems of finite-dimensional GF(2) spaces.

A system is truncated to indices ``i0..M``.  For each ``i`` the engine computes
``r_i = rank(f_{M-1} ∘ ... ∘ f_i)``, the dimension of the image of ``V_i`` in
``V_M``.  These ranks are non-increasing as ``i`` decreases.  A degree counts as
stabilized when these ranks and the dimensions stop changing over the last
``window`` steps.  Without that certificate the reported dimension is only
the truncated image rank.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import gf2
from .hfunc import HKnot, UnverifiedRegimeWarning, h_colored, lspace_threshold
from .algebra import _cable_h
from .presentation import tower_dim

Matrix = tuple[tuple[int, ...], ...]


def _shape(mat: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(mat)
    return rows, (len(mat[0]) if rows else 0)


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def identity(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


@dataclass(frozen=True)
class DirectedSystem:
    """``V_{i0} -> V_{i0+1} -> ... -> V_M``; ``maps[t]`` is ``dims[t+1] × dims[t]``."""

    start: int
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(tuple(tuple(r) for r in f) for f in self.maps))
        if len(self.maps) != len(self.dims) - 1:
            raise ValueError("need exactly one map between consecutive spaces")
        for t, f in enumerate(self.maps):
            rows, cols = _shape(f)
            want = (self.dims[t + 1], self.dims[t])
            # an empty matrix has no columns to inspect
            if rows != want[0] or (rows and cols != want[1]):
                raise ValueError(f"map {self.start + t} has shape {rows}×{cols}, expected {want[0]}×{want[1]}")

    @property
    def end(self) -> int:
        return self.start + len(self.dims) - 1

    def dim(self, i: int) -> int:
        return self.dims[i - self.start]

    def map(self, i: int) -> Matrix:
        """``f_i : V_i -> V_{i+1}``."""
        return self.maps[i - self.start]

    @classmethod
    def constant(cls, d: int, start: int, end: int) -> "DirectedSystem":
        return cls(start, (d,) * (end - start + 1), (identity(d),) * (end - start))


@dataclass(frozen=True)
class ColimitResult:
    dim: int
    stabilized: bool
    first_stable_m: int | None
    ranks: tuple[int, ...]  # r_{i0} .. r_M


def image_ranks(sys: DirectedSystem) -> list[int]:
    """``r_i = rank(f_{M-1}∘⋯∘f_i)`` for ``i = i0..M``."""
    M = sys.end
    comp = [list(r) for r in identity(sys.dim(M))]
    out = [sys.dim(M)]
    for i in range(M - 1, sys.start - 1, -1):
        comp = gf2.matmul(comp, [list(r) for r in sys.map(i)], inner=sys.dim(i + 1), cols=sys.dim(i))
        out.append(gf2.matrix_rank(comp))
    out.reverse()
    return out


def colimit_dim(sys: DirectedSystem, stab_window: int = 3) -> ColimitResult:
    """Truncated colimit dimension of one degree.

    Stabilized means ``r_i`` is constant for ``i`` in ``[M-w, M-1]`` and ``d_i``
    is constant on ``[M-w, M]``; ``first_stable_m`` is the smallest index from
    which both stay constant (clamped to the start of the range).
    """
    if stab_window < 1 or stab_window > len(sys.maps):
        raise ValueError(f"stabilization window {stab_window} does not fit in the range {sys.start}..{sys.end}")
    ranks = image_ranks(sys)
    M, i0 = sys.end, sys.start

    def steady(i: int) -> bool:
        return ranks[i - i0] == ranks[M - 1 - i0] and sys.dim(i) == sys.dim(M)

    stable = all(steady(i) for i in range(M - stab_window, M))
    first = None
    if stable:
        first = M - stab_window
        while first > i0 and steady(first - 1):
            first -= 1
    return ColimitResult(ranks[M - stab_window - i0], stable, first, tuple(ranks))


def colimit_dims(systems: Mapping, stab_window: int = 3) -> dict:
    """Per-degree colimit results, in sorted degree order."""
    return {deg: colimit_dim(systems[deg], stab_window) for deg in sorted(systems)}


def _stab_h(hK: HKnot, n: int, m: int, sbar: Sequence[int]) -> int:
    c2 = m * (n - 1)
    return _cable_h(hK, n, m, [2 * x + c2 for x in sbar])


def lspace_phi0_system(hK: HKnot, n: int, degrees: Iterable[tuple[Sequence[int], int]],
                       m_range: tuple[int, int]) -> dict:
    """Full-twist systems in the h-model, one per normalized degree ``(s̄, d)``.

    ``φ_0`` sends ``(m, s̄, k)`` to ``(m+1, s̄, k + h_stab(m, s̄) - h_stab(m+1, s̄))``,
    so in a fixed degree it is ``[1]`` between non-zero spaces.
    """
    lo, hi = m_range
    if hi <= lo:
        raise ValueError("m-range must contain at least two values")
    if hK.genus and lo < lspace_threshold(hK):
        warnings.warn(
            f"m={lo} is below the L-space threshold {lspace_threshold(hK)}; full-twist model unverified",
            UnverifiedRegimeWarning,
            stacklevel=2,
        )
    out = {}
    for sbar, d in degrees:
        sbar = tuple(sbar)
        if len(sbar) != n:
            raise ValueError(f"degree {sbar} does not have {n} coordinates")
        hs = [_stab_h(hK, n, m, sbar) for m in range(lo, hi + 1)]
        for a, b in zip(hs, hs[1:]):
            if a - b < 0:
                raise AssertionError(f"full-twist map would lower the 𝐔-power at s̄={sbar}")
        dims = [tower_dim(-2 * h, d) for h in hs]
        maps = []
        for a, b in zip(dims, dims[1:]):
            if a and not b:
                raise AssertionError(f"full-twist map is not injective at s̄={sbar}, d={d}")
            maps.append(identity(1) if a else zero_matrix(b, a))
        out[(sbar, d)] = DirectedSystem(lo, tuple(dims), tuple(maps))
    return out


def lspace_A_maps(hK: HKnot, n: int, sbar: Sequence[int], d: int, m_range: tuple[int, int]) -> tuple:
    """The 𝖠 action as a shifted map of systems.

    Multiplication by ``a_1`` sends twist ``m`` in degree ``(s̄, d)`` to twist
    ``m+1`` in degree ``(s̄ - 𝟙, d - 2)``.  Returns ``(V, W, h)`` where ``h[i]``
    maps ``V_i`` to ``W_{i+1}``.
    """
    lo, hi = m_range
    target = tuple(x - 1 for x in sbar)
    V = lspace_phi0_system(hK, n, [(tuple(sbar), d)], (lo, hi))[(tuple(sbar), d)]
    W = lspace_phi0_system(hK, n, [(target, d - 2)], (lo, hi + 1))[(target, d - 2)]
    hs = {}
    for i in range(lo, hi + 1):
        a, b = V.dim(i), W.dim(i + 1)
        if a and not b:
            raise AssertionError("a_1 would kill a tower element")
        hs[i] = identity(1) if a else zero_matrix(b, a)
    return V, W, hs


def shifted_map_compat(sys_V: DirectedSystem, sys_W: DirectedSystem, h: Mapping[int, Matrix], s: int) -> bool:
    """Check ``g_{i+s} ∘ h_i = h_{i+1} ∘ f_i`` wherever both sides are defined."""
    for i in sorted(h):
        if i + 1 not in h or i + 1 > sys_V.end:
            continue
        if i + s + 1 > sys_W.end:
            continue
        hi = [list(r) for r in h[i]]
        hi1 = [list(r) for r in h[i + 1]]
        g = [list(r) for r in sys_W.map(i + s)]
        f = [list(r) for r in sys_V.map(i)]
        left = gf2.matmul(g, hi, inner=sys_W.dim(i + s), cols=sys_V.dim(i))
        right = gf2.matmul(hi1, f, inner=sys_V.dim(i + 1), cols=sys_V.dim(i))
        if left != right:
            return False
    return True


def expected_first_stable(hK: HKnot, sbar: Sequence[int]) -> int:
    """``max(threshold, g - min s̄)``: where the h-model promises stabilization."""
    return max(lspace_threshold(hK), hK.genus - min(sbar))


def colored_reference(hK: HKnot, sbar: Sequence[int], d: int) -> int:
    return tower_dim(-2 * h_colored(hK, sbar), d)
