"""The cable algebra of the unknot and its colored localization, as tower models.

Every multidegree of the cable algebra holds at most a single ``F[𝐔]``-tower,
so an element is pinned down by its twist ``m``, Alexander vector ``s`` and
``𝐔``-power ``k``; the Maslov grading is then ``-2 h(m, s) - 2k``.  Products are
computed from gradings alone:

    (m, s, k) · (m', s', k') = (m + m', s + s', k + k' + Δ),
    Δ = h(m, s) + h(m', s') - h(m + m', s + s') >= 0.

Relations of the algebra are therefore checked, not imposed.

Colored elements live in normalized Alexander degree ``s̄`` and use the stable
h-value ``h_K(min s̄)`` in place of ``h``.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .hfunc import HKnot, h0, h_colored, lspace_threshold, UnverifiedRegimeWarning

_UNKNOT = HKnot.unknot()


class AlgebraInconsistency(AssertionError):
    """A grading identity the tower model relies on has failed."""


class ZeroProduct(ValueError):
    """A word's total grading lies above the tower top, so the monomial vanishes."""


@dataclass(frozen=True)
class TriGrading:
    """Alexander vector (doubled), Maslov grading ``gr_w`` and twist grading."""

    alexander2: tuple[int, ...]
    maslov: int
    twist: int = 0

    def __add__(self, other: "TriGrading") -> "TriGrading":
        if len(self.alexander2) != len(other.alexander2):
            raise ValueError("gradings of different rank")
        a = tuple(x + y for x, y in zip(self.alexander2, other.alexander2))
        return TriGrading(a, self.maslov + other.maslov, self.twist + other.twist)

    def __sub__(self, other: "TriGrading") -> "TriGrading":
        a = tuple(x - y for x, y in zip(self.alexander2, other.alexander2))
        return TriGrading(a, self.maslov - other.maslov, self.twist - other.twist)


def _cable_h(knot: HKnot | None, n: int, m: int, s2: Sequence[int]) -> int:
    """Sorted-sum h without regime warnings; ``knot=None`` means the unknot."""
    hk = knot or _UNKNOT
    c2 = m * (n - 1)
    sbar = sorted((v - c2) // 2 for v in s2)
    return sum(hk(x + i * m) for i, x in enumerate(sbar))


def _check_lattice(n: int, m: int, s2: Sequence[int]) -> None:
    if len(s2) != n:
        raise ValueError(f"expected {n} Alexander coordinates, got {len(s2)}")
    par = (m * (n - 1)) % 2
    if any((v - par) % 2 for v in s2):
        raise ValueError(f"Alexander vector {[v / 2 for v in s2]} is off the lattice for m={m}")


@dataclass(frozen=True)
class TowerBasisElt:
    """``𝐔^k`` times the tower top in twist ``m`` and Alexander degree ``s2/2``.

    ``knot=None`` is the cable algebra itself; an ``HKnot`` makes it an element
    of the cable module of that knot.
    """

    n: int
    m: int
    s2: tuple[int, ...]
    k: int = 0
    knot: HKnot | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "s2", tuple(self.s2))
        if self.m < 0 or self.k < 0:
            raise ValueError("twist and 𝐔-power must be non-negative")
        _check_lattice(self.n, self.m, self.s2)

    @property
    def h(self) -> int:
        return _cable_h(self.knot, self.n, self.m, self.s2)

    @property
    def grw(self) -> int:
        return -2 * self.h - 2 * self.k

    @property
    def grading(self) -> TriGrading:
        return TriGrading(self.s2, self.grw, self.m)

    def to_json(self) -> dict:
        return {"m": self.m, "s2": list(self.s2), "k": self.k, "grw": self.grw}


def unit(n: int) -> TowerBasisElt:
    return TowerBasisElt(n, 0, (0,) * n, 0)


def gen_U(n: int, i: int) -> TowerBasisElt:
    """``U_i`` (1-based)."""
    _check_index(n, i)
    return TowerBasisElt(n, 0, tuple(-2 if j == i - 1 else 0 for j in range(n)))


def gen_V(n: int, i: int) -> TowerBasisElt:
    """``V_i`` (1-based)."""
    _check_index(n, i)
    return TowerBasisElt(n, 0, tuple(2 if j == i - 1 else 0 for j in range(n)))


def gen_bold_U(n: int, power: int = 1) -> TowerBasisElt:
    return TowerBasisElt(n, 0, (0,) * n, power)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")


def gen_a(n: int, j: int) -> TowerBasisElt:
    """Generator ``a_j`` in twist 1, Alexander degree ``((n-1)/2 - j)·𝟙``."""
    if n < 1 or not 0 <= j <= n - 1:
        raise ValueError(f"a_{j} is not defined for n={n}")
    x = TowerBasisElt(n, 1, (n - 1 - 2 * j,) * n, 0)
    if x.grw != -j * j - j:
        raise AlgebraInconsistency(f"gr_w(a_{j}) = {x.grw}, expected {-j * j - j}")
    return x


def mul(x: TowerBasisElt, y: TowerBasisElt) -> TowerBasisElt:
    """Product of two tower basis elements (or the action on a cable module)."""
    if x.n != y.n:
        raise ValueError(f"cannot multiply elements with n={x.n} and n={y.n}")
    if x.knot is not None and y.knot is not None:
        raise ValueError("at most one factor may belong to a knot's cable module")
    knot = x.knot or y.knot
    m = x.m + y.m
    s2 = tuple(a + b for a, b in zip(x.s2, y.s2))
    delta = x.h + y.h - _cable_h(knot, x.n, m, s2)
    if delta < 0:
        raise AlgebraInconsistency(f"negative 𝐔-shift {delta} multiplying {x} by {y}")
    return TowerBasisElt(x.n, m, s2, x.k + y.k + delta, knot)


def product(factors: Iterable[TowerBasisElt], n: int) -> TowerBasisElt:
    acc = unit(n)
    for f in factors:
        acc = mul(acc, f)
    return acc


_TOKEN = re.compile(r"(a|U|V)(\d+)(?:\^(\d+))?$|(U|𝐔|UU)(?:\^(\d+))?$")


def parse_word(n: int, word: str | Sequence[str]) -> list[TowerBasisElt]:
    """Tokens ``a0``, ``U1``, ``V2``, ``U`` (the central 𝐔), each optionally ``^p``."""
    tokens = word.replace("*", " ").split() if isinstance(word, str) else list(word)
    if not tokens:
        raise ValueError("empty word")
    out = []
    for tok in tokens:
        mt = _TOKEN.match(tok.strip())
        if not mt:
            raise ValueError(f"unknown algebra letter {tok!r}")
        if mt.group(1):
            letter, idx = mt.group(1), int(mt.group(2))
            power = int(mt.group(3) or 1)
            g = {"a": gen_a, "U": gen_U, "V": gen_V}[letter](n, idx)
            out.extend([g] * power)
        else:
            out.append(gen_bold_U(n, int(mt.group(5) or 1)))
    return out


def word_to_basis(n: int, word: str | Sequence[str]) -> TowerBasisElt:
    """The basis element carrying the word's total trigrading.

    Raises :class:`ZeroProduct` if that grading is above the tower top.
    """
    letters = parse_word(n, word)
    total = letters[0].grading
    for g in letters[1:]:
        total = total + g.grading
    m = total.twist
    h = _cable_h(None, n, m, total.alexander2)
    twice_k = -total.maslov - 2 * h
    if twice_k < 0 or twice_k % 2:
        raise ZeroProduct(f"grading {total} is not realized in the tower (k = {twice_k / 2})")
    return TowerBasisElt(n, m, total.alexander2, twice_k // 2)


def y_tilde(n: int, m: int, i: int) -> TowerBasisElt:
    """``a_q^{m-r} a_{q+1}^r`` where ``i = qm + r``, ``0 <= r < m``."""
    if m < 1 or not 0 <= i <= m * (n - 1):
        raise ValueError(f"Y_{i} is not defined for n={n}, m={m}")
    q, r = divmod(i, m)
    word = [f"a{q}"] * (m - r) + [f"a{q + 1}"] * r
    return word_to_basis(n, word)


def verify_linear(n: int, I: Iterable[int]) -> bool | None:
    """``U_I a_{k-1} = V_Ī a_k`` with ``k = |I|``; ``None`` when k is outside 1..n-1."""
    I = sorted(set(I))
    if any(not 1 <= i <= n for i in I):
        raise ValueError(f"subset {I} is not inside 1..{n}")
    k = len(I)
    if not 1 <= k <= n - 1:
        return None
    lhs = product([gen_U(n, i) for i in I] + [gen_a(n, k - 1)], n)
    rhs = product([gen_V(n, i) for i in range(1, n + 1) if i not in I] + [gen_a(n, k)], n)
    return lhs == rhs


def verify_quadratic(n: int, i: int, j: int, k: int, l: int) -> bool:
    """``a_i a_j = 𝐔^{kl - ij} a_k a_l`` for ``i <= k <= l <= j``, ``i + j = k + l``."""
    if i + j != k + l or not i <= k <= l <= j:
        raise ValueError(f"(i, j, k, l) = ({i}, {j}, {k}, {l}) is not admissible")
    lhs = mul(gen_a(n, i), gen_a(n, j))
    rhs = mul(mul(gen_a(n, k), gen_a(n, l)), gen_bold_U(n, k * l - i * j))
    return lhs == rhs


def linear_instances(n: int):
    for size in range(1, n):
        yield from combinations(range(1, n + 1), size)


def quadratic_instances(n: int):
    for i in range(n):
        for j in range(i, n):
            for k in range(i, j + 1):
                l = i + j - k
                if k <= l:
                    yield i, j, k, l


def verify_all(n: int) -> dict[str, list]:
    """Failed instances of both relation families (empty lists when all hold)."""
    bad_lin = [I for I in linear_instances(n) if not verify_linear(n, I)]
    bad_quad = [q for q in quadratic_instances(n) if not verify_quadratic(n, *q)]
    return {"linear": bad_lin, "quadratic": bad_quad}


class AlgebraElt:
    """A homogeneous GF(2) sum of basis elements (the empty sum is zero)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        ts = frozenset(terms)
        grads = {t.grading for t in ts}
        if len(grads) > 1:
            raise ValueError("inhomogeneous element")
        self.terms = ts

    @property
    def grading(self) -> TriGrading | None:
        return next(iter(self.terms)).grading if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElt") -> "AlgebraElt":
        return AlgebraElt(self.terms ^ other.terms)

    def __mul__(self, other: "AlgebraElt") -> "AlgebraElt":
        acc: set = set()
        for x in self.terms:
            for y in other.terms:
                acc ^= {mul(x, y) if isinstance(x, TowerBasisElt) else colored_mul(x, y)}
        return AlgebraElt(acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AlgebraElt) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"AlgebraElt({sorted(self.terms, key=repr)})"


# colored algebra and colored modules


@dataclass(frozen=True)
class ColoredBasisElt:
    """``𝐔^k`` times the stable tower top in normalized degree ``s̄``."""

    sbar: tuple[int, ...]
    k: int = 0
    knot: HKnot = field(default=_UNKNOT, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "sbar", tuple(self.sbar))
        if self.k < 0:
            raise ValueError("𝐔-power must be non-negative")
        if not self.sbar:
            raise ValueError("empty Alexander vector")

    @property
    def n(self) -> int:
        return len(self.sbar)

    @property
    def grw(self) -> int:
        return -2 * h_colored(self.knot, self.sbar) - 2 * self.k

    @property
    def grading(self) -> TriGrading:
        return TriGrading(tuple(2 * x for x in self.sbar), self.grw, 0)

    def to_json(self) -> dict:
        return {"sbar": list(self.sbar), "k": self.k, "grw": self.grw}


def colored_gen(n: int, op: str) -> ColoredBasisElt:
    """The colored-algebra element for ``U_i``, ``V_i``, ``A`` (𝖠) or ``U`` (𝐔)."""
    kind, i = _parse_op(n, op)
    if kind == "V":
        return ColoredBasisElt(tuple(1 if j == i - 1 else 0 for j in range(n)))
    if kind == "U_i":
        return ColoredBasisElt(tuple(-1 if j == i - 1 else 0 for j in range(n)))
    if kind == "A":
        return ColoredBasisElt((-1,) * n)
    return ColoredBasisElt((0,) * n, 1)


def _parse_op(n: int, op: str) -> tuple[str, int]:
    op = op.strip()
    if op in ("A", "𝖠"):
        return "A", 0
    if op in ("U", "𝐔", "UU"):
        return "UU", 0
    mt = re.fullmatch(r"([UV])(\d+)", op)
    if not mt:
        raise ValueError(f"unknown colored operator {op!r}")
    i = int(mt.group(2))
    _check_index(n, i)
    return ("U_i" if mt.group(1) == "U" else "V"), i


def colored_act(op: str, x: ColoredBasisElt) -> ColoredBasisElt:
    """Action of ``U_i``, ``V_i``, ``𝖠`` or ``𝐔`` on a colored tower element."""
    kind, i = _parse_op(x.n, op)
    h, s = x.knot, x.sbar
    lo = min(s)
    if kind == "UU":
        return ColoredBasisElt(s, x.k + 1, x.knot)
    if kind == "V":
        t = tuple(v + (j == i - 1) for j, v in enumerate(s))
        k = x.k + h(lo) - h(min(t))
    elif kind == "U_i":
        t = tuple(v - (j == i - 1) for j, v in enumerate(s))
        k = x.k + 1 - (h(min(t)) - h(lo))
    else:
        t = tuple(v - 1 for v in s)
        k = x.k + 1 - (h(lo - 1) - h(lo))
    if k < 0:
        raise AlgebraInconsistency(f"negative 𝐔-power acting by {op} on {x}")
    return ColoredBasisElt(t, k, x.knot)


def colored_mul(x: ColoredBasisElt, y: ColoredBasisElt) -> ColoredBasisElt:
    """Product in the colored algebra, or its action on a knot's colored module.

    At most one factor may carry a non-trivial knot.
    """
    if x.n != y.n:
        raise ValueError("colored elements of different n")
    if x.knot.genus and y.knot.genus:
        raise ValueError("at most one factor may belong to a knot's colored module")
    if y.knot.genus:
        x, y = y, x
    t = tuple(a + b for a, b in zip(x.sbar, y.sbar))
    delta = h_colored(x.knot, x.sbar) + h0(min(y.sbar)) - h_colored(x.knot, t)
    if delta < 0:
        raise AlgebraInconsistency(f"negative 𝐔-shift multiplying {x} by {y}")
    return ColoredBasisElt(t, x.k + y.k + delta, x.knot)


def localize(x: TowerBasisElt, hK: HKnot | None = None) -> ColoredBasisElt:
    """Class of ``x`` in the colimit over the full-twist maps, i.e. ``x / a_0^m``."""
    knot = hK if hK is not None else (x.knot or _UNKNOT)
    if knot.genus and x.m < lspace_threshold(knot):
        warnings.warn(
            f"m={x.m} is below the L-space threshold {lspace_threshold(knot)}; localization unverified",
            UnverifiedRegimeWarning,
            stacklevel=2,
        )
    c2 = x.m * (x.n - 1)
    sbar = tuple((v - c2) // 2 for v in x.s2)
    k = x.k + _cable_h(knot, x.n, x.m, x.s2) - h_colored(knot, sbar)
    if k < 0:
        raise AlgebraInconsistency(f"negative 𝐔-power localizing {x}")
    y = ColoredBasisElt(sbar, k, knot)
    if y.grw != -2 * _cable_h(knot, x.n, x.m, x.s2) - 2 * x.k:
        raise AlgebraInconsistency("localization changed the Maslov grading")
    return y


def colored_dim(hK: HKnot, n: int, sbar: Sequence[int], d: int) -> int:
    """Dimension of the colored homology in normalized degree ``s̄`` and Maslov ``d``."""
    if len(sbar) != n:
        raise ValueError(f"expected {n} coordinates, got {len(sbar)}")
    top = -2 * h_colored(hK, sbar)
    return int(d <= top and (top - d) % 2 == 0)
