"""Finitely presented multigraded modules over F_2[U_1..U_n, V_1..V_n] (or F_2[V, 𝖠]).

Weights: ``U_i`` has Alexander ``-e_i`` and Maslov ``-2``, ``V_i`` has ``+e_i`` and
``0``, ``𝖠`` has ``-𝟙`` and ``-2``.  Alexander vectors are stored doubled.

A bidegree slice of a free module is finite, because Maslov fixes the number
of descending letters and the Alexander vector then fixes the V-exponents.
``graded_dim`` counts monomial-generator pairs in the slice and subtracts the
GF(2) rank of the relation multiples landing there.

Two exact methods are available:

``free``
    works in the free polynomial ring, with the ``(U_jV_j + U_lV_l)·g`` rows
    instantiated like any other relation.
``quotient``
    for presentations carrying every such equalizer row, works directly in
    ``F[U, V]/(U_jV_j - U_lV_l)``, where each monomial slice has dimension <= 1.
    The two methods agree by construction and are cross-checked in the tests;
    ``quotient`` is much faster on large windows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import gf2
from .hfunc import Staircase, h_torus
from .parallel import ordered_map

Degree = tuple[tuple[int, ...], int]  # (doubled Alexander vector, Maslov)


@dataclass(frozen=True)
class Generator:
    label: str
    alex2: tuple[int, ...]
    maslov: int


@dataclass(frozen=True)
class Term:
    """``U^alpha V^beta 𝖠^a`` times generator ``gen``."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gen: int
    a: int = 0


@dataclass(frozen=True)
class Relation:
    terms: tuple[Term, ...]
    kind: str = "main"  # or "equalizer"


@dataclass(frozen=True)
class Presentation:
    n: int
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]
    has_U: bool = True
    has_A: bool = False
    validity: str = "everywhere"
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be unique")
        for g in self.generators:
            if len(g.alex2) != self.n:
                raise ValueError(f"generator {g.label} has the wrong rank")
        degs = tuple(self.relation_degree(r) for r in self.relations)
        object.__setattr__(self, "_rel_degs", degs)
        object.__setattr__(self, "_uv", self._check_uv_equalized())

    def term_degree(self, t: Term) -> Degree:
        g = self.generators[t.gen]
        if (any(t.alpha) and not self.has_U) or (t.a and not self.has_A):
            raise ValueError("term uses a variable the ring does not have")
        alex = tuple(x + 2 * (b - a) - 2 * t.a for x, a, b in zip(g.alex2, t.alpha, t.beta))
        return alex, g.maslov - 2 * sum(t.alpha) - 2 * t.a

    def relation_degree(self, r: Relation) -> Degree:
        """Common degree of the terms; raises if the relation is inhomogeneous."""
        if not r.terms:
            raise ValueError("empty relation")
        degs = {self.term_degree(t) for t in r.terms}
        if len(degs) != 1:
            raise ValueError(f"inhomogeneous relation {self.format_relation(r)}")
        return degs.pop()

    @property
    def uv_equalized(self) -> bool:
        """True when every ``(U_jV_j + U_lV_l)·g`` row is present."""
        return self._uv

    def _check_uv_equalized(self) -> bool:
        if not self.has_U or self.has_A:
            return False
        have = set()
        for r in self.relations:
            if r.kind == "equalizer":
                have.add(_equalizer_key(r))
        need = {(j, l, g) for g in range(len(self.generators)) for j, l in combinations(range(self.n), 2)}
        return need <= have

    def format_term(self, t: Term) -> str:
        parts = []
        for name, exps in (("U", t.alpha), ("V", t.beta)):
            for i, e in enumerate(exps):
                if e:
                    parts.append(f"{name}{i + 1}" + (f"^{e}" if e > 1 else ""))
        if t.a:
            parts.append("A" + (f"^{t.a}" if t.a > 1 else ""))
        parts.append(self.generators[t.gen].label)
        return "*".join(parts)

    def format_relation(self, r: Relation) -> str:
        return " + ".join(self.format_term(t) for t in r.terms)

    def main_relations(self) -> list[Relation]:
        return [r for r in self.relations if r.kind == "main"]


def _equalizer_key(r: Relation) -> tuple[int, int, int]:
    t1, t2 = r.terms
    j = t1.alpha.index(1)
    l = t2.alpha.index(1)
    return (min(j, l), max(j, l), t1.gen)


def _unit(n: int, i: int, v: int = 1) -> tuple[int, ...]:
    return tuple(v if j == i else 0 for j in range(n))


def _zeros(n: int) -> tuple[int, ...]:
    return (0,) * n


def _equalizers(n: int, ngens: int) -> list[Relation]:
    out = []
    for g in range(ngens):
        for j, l in combinations(range(n), 2):
            out.append(Relation((Term(_unit(n, j), _unit(n, j), g), Term(_unit(n, l), _unit(n, l), g)), "equalizer"))
    return out


# builders


def torus_generator_degree(n: int, m: int, i: int) -> Generator:
    c2 = m * (n - 1)
    if m == 0:
        return Generator("Y0", _zeros(n), 0)
    q, r = divmod(i, m)
    return Generator(f"Y{i}", (c2 - 2 * i,) * n, -(q + 1) * (q * m + 2 * r))


def build_torus(n: int, m: int) -> Presentation:
    """Generators ``Y_0..Y_{m(n-1)}`` and relations ``U_I Y_i + V_Ī Y_{i+1}``, ``|I| = q + 1``."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    top = m * (n - 1)
    gens = tuple(torus_generator_degree(n, m, i) for i in range(top + 1))
    rels = []
    for i in range(top):
        q = i // m
        for I in combinations(range(n), q + 1):
            alpha = tuple(int(j in I) for j in range(n))
            beta = tuple(1 - a for a in alpha)
            rels.append(Relation((Term(alpha, _zeros(n), i), Term(_zeros(n), beta, i + 1))))
    rels += _equalizers(n, len(gens))
    return Presentation(n, gens, tuple(rels), meta={"family": "torus", "n": n, "m": m})


def _staircase_gens(st: Staircase, N: int, n: int, prefix: str) -> tuple[Generator, ...]:
    return tuple(
        Generator(f"{prefix}{s}", (2 * s,) * n, -2 * i) for i, s in enumerate(st.elements(N))
    )


def default_truncation(st: Staircase, depth: int = 0) -> int:
    return depth + st.genus + 2


def truncation_for(st: Staircase, lo: int) -> int:
    """Smallest N whose validity region ``min s̄ > σ_N`` contains ``min s̄ >= lo``."""
    i = 1
    while st.sigma(i) >= lo:
        i += 1
    return i


def build_knot(st: Staircase, N: int | None = None) -> Presentation:
    """Zigzag presentation ``U z_{σ_i} = V^{σ_i - σ_{i+1} - 1} z_{σ_{i+1}}`` (one variable pair)."""
    N = N if N is not None else default_truncation(st)
    if N < 1:
        raise ValueError("need at least one generator")
    sig = st.elements(N + 1)
    gens = _staircase_gens(st, N, 1, "z")
    rels = []
    for i in range(N - 1):
        gap = sig[i] - sig[i + 1]
        rels.append(Relation((Term((1,), (0,), i), Term((0,), (gap - 1,), i + 1))))
    return Presentation(1, gens, tuple(rels), validity=f"s > {sig[N - 1]}",
                        meta={"family": "knot", "N": N, "min_valid": sig[N - 1] + 1})


def build_colored(st: Staircase, n: int, N: int | None = None) -> Presentation:
    """Colored homology of an L-space knot:
    ``U_j z̃_{σ_i} + V^{(σ_i - σ_{i+1})𝟙 - e_j} z̃_{σ_{i+1}}`` plus equalizers.

    Dimensions are exact for ``min s̄ > σ_N``.
    """
    N = N if N is not None else default_truncation(st)
    if N < 1 or n < 1:
        raise ValueError("need N >= 1 and n >= 1")
    sig = st.elements(N + 1)
    gens = _staircase_gens(st, N, n, "z~")
    rels = []
    for i in range(N - 1):
        gap = sig[i] - sig[i + 1]
        for j in range(n):
            beta = tuple(gap - (jj == j) for jj in range(n))
            rels.append(Relation((Term(_unit(n, j), _zeros(n), i), Term(_zeros(n), beta, i + 1))))
    rels += _equalizers(n, N)
    return Presentation(n, gens, tuple(rels), validity=f"min(s̄) > {sig[N - 1]}",
                        meta={"family": "colored", "N": N, "min_valid": sig[N - 1] + 1})


def build_tensor(st: Staircase, n: int, N: int | None = None) -> Presentation:
    """Knot zigzag complex tensored up to the colored algebra, written over F[V_1..V_n, 𝖠].

    ``U ↦ 𝖠`` and ``V ↦ V_1⋯V_n``; the U_i are eliminated via ``U_i = 𝖠 ∏_{j≠i} V_j``.
    """
    N = N if N is not None else default_truncation(st)
    if N < 1 or n < 1:
        raise ValueError("need N >= 1 and n >= 1")
    sig = st.elements(N + 1)
    gens = _staircase_gens(st, N, n, "z")
    rels = []
    for i in range(N - 1):
        gap = sig[i] - sig[i + 1]
        rels.append(Relation((Term(_zeros(n), _zeros(n), i, 1), Term(_zeros(n), (gap - 1,) * n, i + 1))))
    return Presentation(n, gens, tuple(rels), has_U=False, has_A=True,
                        validity=f"min(s̄) > {sig[N - 1]}",
                        meta={"family": "tensor", "N": N, "min_valid": sig[N - 1] + 1})


def stable_truncation(st: Staircase, m: int) -> int:
    """Number of stable generators at twist ``m``: those with ``σ >= g - m``."""
    bound = st.genus - m
    i = 1
    while st.sigma(i) >= bound:
        i += 1
    return i - 1


# slice computations


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 0:
        return ((),) if total == 0 else ()
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _monomials(P: Presentation, delta2: Sequence[int], dm: int):
    """Monomials (alpha, beta, a) of degree (delta2/2, dm) in the free ring."""
    if dm > 0 or dm % 2 or any(x % 2 for x in delta2):
        return
    T = -dm // 2
    delta = [x // 2 for x in delta2]
    a_range = range(T + 1) if P.has_A else (0,)
    for a in a_range:
        rest = T - a
        if not P.has_U and rest:
            continue
        for alpha in _compositions(rest, P.n):
            beta = tuple(d + x + a for d, x in zip(delta, alpha))
            if min(beta) >= 0:
                yield alpha, beta, a


def _slice_free(P: Presentation, alex2: Sequence[int], d: int) -> int:
    # inside one slice, (alpha, a, generator) already determines beta
    cols: dict[tuple, int] = {}
    for gi, g in enumerate(P.generators):
        dd = [x - y for x, y in zip(alex2, g.alex2)]
        for alpha, _beta, a in _monomials(P, dd, d - g.maslov):
            cols[(alpha, a, gi)] = len(cols)
    if not cols:
        return 0
    rows = []
    for r, (ra, rm) in zip(P.relations, P._rel_degs):
        dd = [x - y for x, y in zip(alex2, ra)]
        for alpha, _beta, a in _monomials(P, dd, d - rm):
            bits = 0
            for t in r.terms:
                ta = t.alpha
                key = (tuple([x + y for x, y in zip(alpha, ta)]) if any(ta) else alpha, a + t.a, t.gen)
                bits ^= 1 << cols[key]
            rows.append(bits)
    return len(cols) - gf2.rank(rows)


def _quotient_feasible(delta2: Sequence[int], dm: int) -> bool:
    """Is the ``(delta2/2, dm)`` piece of F[U,V]/(U_jV_j - U_lV_l) nonzero?"""
    if dm > 0 or dm % 2 or any(x % 2 for x in delta2):
        return False
    need = sum(-x // 2 for x in delta2 if x < 0)
    return -dm // 2 >= need


def _slice_quotient(P: Presentation, alex2: Sequence[int], d: int) -> int:
    live = 0
    count = 0
    for gi, g in enumerate(P.generators):
        if _quotient_feasible([x - y for x, y in zip(alex2, g.alex2)], d - g.maslov):
            live |= 1 << gi
            count += 1
    if not count:
        return 0
    rows = []
    for r, (ra, rm) in zip(P.relations, P._rel_degs):
        if r.kind == "equalizer":
            continue
        if _quotient_feasible([x - y for x, y in zip(alex2, ra)], d - rm):
            bits = 0
            for t in r.terms:
                bits ^= 1 << t.gen
            rows.append(bits)
    return count - gf2.rank(rows)


def graded_dim(P: Presentation, alex2: Sequence[int], d: int, method: str = "free") -> int:
    """Dimension of the module in doubled Alexander degree ``alex2`` and Maslov ``d``."""
    if len(alex2) != P.n:
        raise ValueError(f"expected {P.n} Alexander coordinates")
    if method == "quotient":
        if not P.uv_equalized:
            raise ValueError("quotient method needs every U_jV_j equalizer row")
        return _slice_quotient(P, alex2, d)
    if method == "free":
        return _slice_free(P, alex2, d)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class DimReport:
    dims: dict[Degree, int]
    validity: str
    truncation: dict

    def nonzero(self) -> dict[Degree, int]:
        return {k: v for k, v in self.dims.items() if v}


def _dim_job(P: Presentation, method: str, deg: Degree) -> int:
    return graded_dim(P, deg[0], deg[1], method)


def graded_dims(P: Presentation, degrees: Iterable[Degree], method: str = "free",
                threads: int | None = None) -> DimReport:
    """Dimensions over many degrees, merged in sorted degree order."""
    degs = sorted(set((tuple(a), d) for a, d in degrees))
    vals = ordered_map(partial(_dim_job, P, method), degs, threads)
    trunc = {k: v for k, v in P.meta.items() if k in ("N", "min_valid")}
    return DimReport(dict(zip(degs, vals)), P.validity, trunc)


def torus_window(n: int, m: int, lo_extra: int = 2, hi_extra: int = 3,
                 maslov: tuple[int, int] = (-24, 0)) -> list[Degree]:
    """Degrees with ``s_i ∈ [c - m(n-1) - lo_extra, c + hi_extra]`` and the given Maslov range."""
    c2 = m * (n - 1)
    offs = range(-m * (n - 1) - lo_extra, hi_extra + 1)
    from itertools import product as iproduct

    out = []
    for t in iproduct(offs, repeat=n):
        a = tuple(c2 + 2 * x for x in t)
        for d in range(maslov[0], maslov[1] + 1):
            out.append((a, d))
    return out


def tower_dim(top: int, d: int) -> int:
    """1 iff ``d = top - 2k`` for some ``k >= 0``."""
    return int(d <= top and (top - d) % 2 == 0)


def torus_oracle(n: int, m: int) -> Callable[[tuple[int, ...], int], int]:
    return lambda a2, d: tower_dim(-2 * h_torus(n, m, a2), d)


@dataclass(frozen=True)
class Discrepancy:
    degree: Degree
    got: int
    expected: int


def oracle_scan(P: Presentation, region: Iterable[Degree], oracle: Callable[[tuple[int, ...], int], int],
                method: str = "free", threads: int | None = None) -> list[Discrepancy]:
    """Degrees where the presentation and the h-model disagree (empty when they agree)."""
    rep = graded_dims(P, region, method, threads)
    out = []
    for (a, d), got in rep.dims.items():
        exp = oracle(a, d)
        if got != exp:
            out.append(Discrepancy((a, d), got, exp))
    return out
