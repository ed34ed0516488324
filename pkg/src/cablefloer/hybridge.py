"""Exact integer polynomials and the specialization of the x_i generators.

Under ``u_k ↦ (-1)^k e_{n-1-k}(V) 𝖠`` and ``y_i ↦ V_i`` the element
``x_i = u_0 + u_1 y_i + ... + u_{n-1} y_i^{n-1}`` becomes ``𝖠 ∏_{j≠i} V_j``.
Writing ``ê_m`` for the elementary symmetric polynomials without ``V_i``,
``e_m = ê_m + V_i ê_{m-1}`` makes the alternating sum telescope to ``ê_{n-1}``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

Monomial = tuple[tuple[str, int], ...]  # sorted (variable, exponent > 0) pairs


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


class MultiPoly:
    """Integer-coefficient polynomial in named commuting variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {v for mono in self.terms for v, _ in mono}

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = _lift(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return MultiPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "MultiPoly":
        return _lift(other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = _lift(other)
        acc: dict[Monomial, int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = _mono_mul(ka, kb)
                acc[k] = acc.get(k, 0) + ca * cb
        return MultiPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out, base = MultiPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Ring homomorphism sending each listed variable to its image (others fixed)."""
        out = MultiPoly()
        for mono, c in self.terms.items():
            term = MultiPoly.const(c)
            for v, e in mono:
                term = term * (images[v] ** e if v in images else MultiPoly({((v, e),): 1}))
            out = out + term
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[mono]
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _lift(x: "MultiPoly | int") -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


def V(i: int) -> MultiPoly:
    return MultiPoly.var(f"V{i}")


A = MultiPoly.var("A")


def elementary_symmetric(variables: Iterable[MultiPoly | str], m: int) -> MultiPoly:
    """``e_m`` of the given variables; zero for ``m < 0`` or ``m`` above their number."""
    vs = [MultiPoly.var(v) if isinstance(v, str) else v for v in variables]
    if m < 0 or m > len(vs):
        return MultiPoly()
    out = MultiPoly()
    for combo in combinations(vs, m):
        term = MultiPoly.const(1)
        for v in combo:
            term = term * v
        out = out + term
    return out


def x_generator(n: int, i: int) -> MultiPoly:
    """``x_i = Σ_k u_k y_i^k``."""
    y = MultiPoly.var(f"y{i}")
    return sum((MultiPoly.var(f"u{k}") * y ** k for k in range(n)), MultiPoly())


def hy_substitution(n: int) -> dict[str, MultiPoly]:
    Vs = [V(j) for j in range(1, n + 1)]
    images = {f"u{k}": (-1) ** k * elementary_symmetric(Vs, n - 1 - k) * A for k in range(n)}
    images.update({f"y{j}": V(j) for j in range(1, n + 1)})
    return images


def specialize_x(n: int, i: int) -> MultiPoly:
    return x_generator(n, i).substitute(hy_substitution(n))


def colored_U(n: int, i: int) -> MultiPoly:
    """``𝖠 ∏_{j≠i} V_j``."""
    out = A
    for j in range(1, n + 1):
        if j != i:
            out = out * V(j)
    return out


def verify_hy(n: int) -> bool:
    if n < 1:
        raise ValueError("need n >= 1")
    return all(specialize_x(n, i) == colored_U(n, i) for i in range(1, n + 1))


def telescope_check(n: int, i: int) -> bool:
    """``e_m = ê_m + V_i ê_{m-1}`` for ``0 <= m <= n`` and
    ``Σ_k (-1)^k e_{n-1-k} V_i^k = ê_{n-1}``."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    Vs = [V(j) for j in range(1, n + 1)]
    rest = [V(j) for j in range(1, n + 1) if j != i]
    vi = V(i)
    for m in range(n + 1):
        if elementary_symmetric(Vs, m) != elementary_symmetric(rest, m) + vi * elementary_symmetric(rest, m - 1):
            return False
    alt = sum(((-1) ** k * elementary_symmetric(Vs, n - 1 - k) * vi ** k for k in range(n)), MultiPoly())
    return alt == elementary_symmetric(rest, n - 1)
