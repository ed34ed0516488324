"""Exact Laurent polynomials in one variable ``t`` on the half-integer lattice.

Exponents are stored doubled (``exp2 = 2 * exponent``) so that knot data
(integer exponents) and collapsed cable data (half-integer exponents) live on
one integer lattice.  Coefficients are Python ints.

>>> d = parse_poly("t^3 - t^2 + 1 - t^-2 + t^-3")
>>> str(d)
't^3 - t^2 + 1 - t^-2 + t^-3'
>>> sorted(e for e, c in chi_series(d, -6).items() if c)[::-1]
[Fraction(3, 1), Fraction(0, 1), Fraction(-1, 1), Fraction(-3, 1), Fraction(-4, 1), Fraction(-5, 1), Fraction(-6, 1)]
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

Number = Union[int, Fraction]


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class NormalizationError(ValueError):
    """Input fails the Alexander polynomial normalization checks."""


def to_exp2(e: Number) -> int:
    """Doubled form of an integer or half-integer exponent."""
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not on the half-integer lattice")
    return int(d)


class LaurentPoly:
    """Immutable, canonical Laurent polynomial ``sum c * t^(exp2/2)``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs2: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs2 or {}).items():
            if v:
                c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def monomial(cls, exponent: Number, coef: int = 1) -> "LaurentPoly":
        return cls({to_exp2(exponent): coef})

    @classmethod
    def monomial2(cls, exp2: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp2: coef})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    # -- access -------------------------------------------------------------
    @property
    def coeffs2(self) -> dict[int, int]:
        return dict(self._c)

    def coeff2(self, exp2: int) -> int:
        return self._c.get(exp2, 0)

    def __getitem__(self, exponent: Number) -> int:
        return self._c.get(to_exp2(exponent), 0)

    def items(self) -> Iterator[tuple[Fraction, int]]:
        """(exponent, coefficient) pairs in descending exponent order."""
        for e2 in sorted(self._c, reverse=True):
            yield Fraction(e2, 2), self._c[e2]

    def is_zero(self) -> bool:
        return not self._c

    @property
    def top2(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def bottom2(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def degree(self) -> Fraction:
        return Fraction(self.top2, 2)

    def at_one(self) -> int:
        return sum(self._c.values())

    def reflect(self) -> "LaurentPoly":
        """Substitute ``t -> t^-1``."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def is_symmetric(self) -> bool:
        return self.reflect() == self

    def has_integer_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift2(self, exp2: int) -> "LaurentPoly":
        """Multiply by ``t^(exp2/2)``."""
        return LaurentPoly({e + exp2: v for e, v in self._c.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise.

        Long division on the leading term, which is exact for Laurent
        polynomials because ``t`` is a unit.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = divisor.top2
        lead_c = divisor._c[lead_e]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        # quotient exponents never go below self.bottom2 - divisor.bottom2
        stop = (self.bottom2 - divisor.bottom2) if self._c else 0
        while rem:
            e = max(rem)
            qe = e - lead_e
            if qe < stop:
                break
            q, r = divmod(rem[e], lead_c)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            quot[qe] = q
            for de, dv in divisor._c.items():
                k = qe + de
                nv = rem.get(k, 0) - q * dv
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return LaurentPoly(quot)

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- serialization --------------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [{"exp2": e, "coef": self._c[e]} for e in sorted(self._c, reverse=True)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(t["exp2"]): int(t["coef"]) for t in data["terms"]})


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def _format_exp2(e2: int) -> str:
    if e2 % 2 == 0:
        return str(e2 // 2)
    return f"{e2}/2"


def format_poly(p: LaurentPoly) -> str:
    """Render in the grammar accepted by :func:`parse_poly`."""
    if p.is_zero():
        return "0"
    parts = []
    for i, e2 in enumerate(sorted(p.coeffs2, reverse=True)):
        c = p.coeff2(e2)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e2 == 0:
            body = str(a)
        else:
            mono = "t" if e2 == 2 else f"t^{_format_exp2(e2)}"
            body = mono if a == 1 else f"{a}{mono}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.src = text
        self.text = text.replace("−", "-")
        self.i = 0
        self._skip()

    def _skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.i += 1
        self._skip()
        return ch

    def error(self, msg: str, pos: int | None = None) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(msg, self.src, self.i if pos is None else pos)

    def integer(self) -> int | None:
        start = self.i
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == start:
            return None
        self.i = j
        self._skip()
        return int(self.text[start:j])


def _parse_exponent(sc: _Scanner) -> int:
    start = sc.i
    paren = sc.peek() == "("
    if paren:
        sc.take()
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.take() == "-" else 1
    num = sc.integer()
    if num is None:
        raise sc.error("expected exponent")
    exp2 = 2 * sign * num
    if sc.peek() == "/":
        slash = sc.i
        sc.take()
        den = sc.integer()
        if den is None:
            raise sc.error("expected denominator")
        if den == 2:
            exp2 = sign * num
        elif den != 1:
            raise sc.error(f"exponent {sign * num}/{den} is not an integer or half-integer", slash)
    if paren:
        if sc.peek() != ")":
            raise sc.error("expected ')'")
        sc.take()
    if sc.i == start:
        raise sc.error("expected exponent")
    return exp2


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``term (('+'|'-') term)*`` with ``term = [int] ['t' ['^' exp]]``.

    Half-integer exponents are written ``p/2`` (``t^-3/2``); parentheses
    around an exponent and a ``*`` between coefficient and ``t`` are allowed.
    """
    sc = _Scanner(text)
    if not sc.peek():
        raise sc.error("empty polynomial")
    coeffs: dict[int, int] = {}
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        term_start = sc.i
        coef = sc.integer()
        if coef is not None and sc.peek() == "*":
            sc.take()
            if sc.peek() != "t":
                raise sc.error("expected 't' after '*'")
        exp2 = 0
        if sc.peek() == "t":
            sc.take()
            exp2 = 2
            if sc.peek() == "^":
                sc.take()
                exp2 = _parse_exponent(sc)
        elif coef is None:
            raise sc.error("expected a term", term_start)
        c = sign * (1 if coef is None else coef)
        coeffs[exp2] = coeffs.get(exp2, 0) + c
        nxt = sc.peek()
        if not nxt:
            break
        if nxt not in "+-":
            raise sc.error(f"unexpected character {nxt!r}")
        sign = -1 if sc.take() == "-" else 1
        if not sc.peek():
            raise sc.error("dangling operator")
    return LaurentPoly(coeffs)


# ---------------------------------------------------------------------------
# Truncated series in t^-1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """A series bounded above, known exactly for exponents >= ``floor2 / 2``.

    Coefficients strictly below the floor are unspecified; all operations
    track the floor below which the result would depend on them.
    """

    poly: LaurentPoly
    floor2: int

    def __post_init__(self):
        if any(e < self.floor2 for e in self.poly.coeffs2):
            object.__setattr__(
                self, "poly",
                LaurentPoly({e: v for e, v in self.poly.coeffs2.items() if e >= self.floor2}),
            )

    @property
    def floor(self) -> Fraction:
        return Fraction(self.floor2, 2)

    def coeff2(self, exp2: int) -> int:
        if exp2 < self.floor2:
            raise ValueError(f"coefficient at t^{_format_exp2(exp2)} lies below the truncation floor")
        return self.poly.coeff2(exp2)

    def __getitem__(self, exponent: Number) -> int:
        return self.coeff2(to_exp2(exponent))

    def items(self) -> Iterator[tuple[Fraction, int]]:
        return self.poly.items()

    def support(self) -> list[Fraction]:
        return [e for e, _ in self.items()]

    def truncate(self, floor: Number) -> "TruncatedSeries":
        f2 = to_exp2(floor)
        if f2 < self.floor2:
            raise ValueError("cannot lower the truncation floor")
        return TruncatedSeries(self.poly, f2)

    def shift2(self, exp2: int) -> "TruncatedSeries":
        return TruncatedSeries(self.poly.shift2(exp2), self.floor2 + exp2)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly + other.poly, max(self.floor2, other.floor2))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.poly, self.floor2)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries | LaurentPoly | int") -> "TruncatedSeries":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if isinstance(other, LaurentPoly):
            if other.is_zero():
                return TruncatedSeries(LaurentPoly(), self.floor2)
            return TruncatedSeries(self.poly * other, self.floor2 + other.top2)
        if self.poly.is_zero() or other.poly.is_zero():
            # an all-unknown tail could still contribute just below the larger floor
            return TruncatedSeries(LaurentPoly(), max(self.floor2 + _top_or_floor(other),
                                                    other.floor2 + _top_or_floor(self)))
        floor2 = max(self.floor2 + other.poly.top2, other.floor2 + self.poly.top2)
        return TruncatedSeries(self.poly * other.poly, floor2)

    __rmul__ = __mul__

    def agrees_above(self, other: "TruncatedSeries", bound2: int) -> int | None:
        """First (highest) doubled exponent ``> bound2`` where the two differ, else None."""
        if bound2 < max(self.floor2, other.floor2) - 1:
            raise ValueError("comparison window reaches below a truncation floor")
        diff = self.poly - other.poly
        bad = [e for e in diff.coeffs2 if e > bound2]
        return max(bad) if bad else None

    def __str__(self) -> str:
        return f"{format_poly(self.poly)} + O(t^{_format_exp2(self.floor2 - 1)})"


def _top_or_floor(s: TruncatedSeries) -> int:
    return s.poly.top2 if not s.poly.is_zero() else s.floor2


def validate_lspace_delta(delta: LaurentPoly) -> None:
    """Checks that every L-space knot Alexander polynomial must pass.

    Raises :class:`NormalizationError` for Δ(1) ≠ 1, asymmetric input or
    half-integer exponents.  Passing does *not* certify an L-space knot.
    """
    if not delta.has_integer_exponents():
        raise NormalizationError("knot Alexander polynomials have integer exponents")
    if delta.at_one() != 1:
        raise NormalizationError(f"Δ(1)≠1 (got Δ(1)={delta.at_one()})")
    if not delta.is_symmetric():
        raise NormalizationError("Δ is not symmetric under t -> t^-1")


def chi_series(delta: LaurentPoly, floor: Number) -> TruncatedSeries:
    """``Δ(t) / (1 - t^-1)`` expanded in ``t^-1``, exact down to ``t^floor``."""
    validate_lspace_delta(delta)
    f2 = to_exp2(floor)
    out: dict[int, int] = {}
    run = 0
    top = delta.top2
    e2 = top
    # coefficient at e is the sum of Δ's coefficients at exponents >= e
    while e2 >= f2:
        run += delta.coeff2(e2)
        if run:
            out[e2] = run
        e2 -= 2
    return TruncatedSeries(LaurentPoly(out), f2)


def _twist_factor(m: int) -> LaurentPoly:
    """``t^{m/2} - t^{-m/2}`` (zero for m = 0)."""
    return LaurentPoly.monomial2(m) - LaurentPoly.monomial2(-m)


def torus_chi(n: int, m: int) -> LaurentPoly:
    """Collapsed ``χ`` of the torus link T(n, mn): (t^{m/2} - t^{-m/2})^{n-1} / (t^{1/2} - t^{-1/2})."""
    if n < 2:
        raise ValueError("torus_chi needs n >= 2; for n = 1 use chi_series (the knot itself)")
    if m < 0:
        raise ValueError("m must be non-negative")
    num = _twist_factor(m) ** (n - 1)
    return num.exact_div(LaurentPoly({1: 1, -1: -1}))


def cable_chi(delta: LaurentPoly, n: int, m: int, floor: Number) -> TruncatedSeries:
    """Collapsed ``χ`` of the (n, mn) cable: t^{-1/2} χ_K(t) (t^{m/2} - t^{-m/2})^{n-1}.

    ``n = 1`` returns ``χ_K`` itself, since every (1, m) cable is K.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if n == 1:
        return chi_series(delta, floor)
    f2 = to_exp2(floor)
    factor = _twist_factor(m) ** (n - 1)
    if factor.is_zero():
        validate_lspace_delta(delta)
        return TruncatedSeries(LaurentPoly(), f2)
    # χ_K must be known down to the floor that survives the product
    need2 = f2 + 1 - factor.top2
    knot_floor2 = need2 - (need2 % 2)
    chi = chi_series(delta, Fraction(knot_floor2, 2))
    prod = chi * factor.shift2(-1)
    return prod.truncate(Fraction(f2, 2))


@dataclass(frozen=True)
class ChiStabilityReport:
    ok: bool
    n: int
    m: int
    modulus2: int
    first_mismatch2: int | None

    def __str__(self) -> str:
        mod = _format_exp2(self.modulus2)
        if self.ok:
            return f"n={self.n} m={self.m}: congruent modulo t^{mod}"
        return (f"n={self.n} m={self.m}: differ at t^{_format_exp2(self.first_mismatch2)}"
                f" (modulus t^{mod})")


def stable_chi_check(delta: LaurentPoly, n: int, m: int, modulus: Number | None = None) -> ChiStabilityReport:
    """Compare ``t^{-c_m} χ_{K_{n,mn}}`` with ``t^{-1/2} χ_K`` above ``t^modulus``.

    Terms with exponent ``<= modulus`` are ignored.  The default modulus is
    ``g - m`` (g = top degree of Δ): the renormalized cable series differs
    from the stable one by ``-(n-1) t^{g - 1/2 - m} + ...``, so this is the
    sharp bound at which the congruence holds for every m >= 1.
    """
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    validate_lspace_delta(delta)
    g2 = delta.top2
    mod2 = g2 - 2 * m if modulus is None else to_exp2(modulus)
    c2 = m * (n - 1)  # doubled c_m
    low = Fraction(mod2 - 2, 2)
    cable = cable_chi(delta, n, m, low + Fraction(c2, 2)).shift2(-c2)
    stable = chi_series(delta, low - 1).shift2(-1)
    first = cable.agrees_above(stable, mod2)
    return ChiStabilityReport(first is None, n, m, mod2, first)
