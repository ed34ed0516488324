"""Named knot inputs: the unknot and positive torus knots T(p, q)."""
from __future__ import annotations

import re
from math import gcd

from .laurent import LaurentPoly, parse_poly

_TORUS = re.compile(r"^\s*T\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def torus_knot_delta(p: int, q: int) -> LaurentPoly:
    """Symmetrized Alexander polynomial of T(p, q), p, q coprime.

    Uses ``t^{-(p-1)(q-1)/2} (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1))``.
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot")
    t = lambda k: LaurentPoly.monomial(k)  # noqa: E731
    one = LaurentPoly.one()
    num = (t(p * q) - one) * (t(1) - one)
    den = (t(p) - one) * (t(q) - one)
    return num.exact_div(den).shift2(-(p - 1) * (q - 1))


def preset(name: str) -> LaurentPoly:
    """Resolve ``unknot`` / ``O`` / ``T(p,q)`` to an Alexander polynomial."""
    key = name.strip()
    if key.lower() in ("unknot", "o", "t(1,1)"):
        return LaurentPoly.one()
    m = _TORUS.match(key)
    if m:
        return torus_knot_delta(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown knot preset {name!r} (try unknot, T(2,3), T(3,4), T(2,2k+1))")


def resolve(delta: str | None = None, knot: str | None = None) -> LaurentPoly:
    if (delta is None) == (knot is None):
        raise ValueError("give exactly one of a Δ polynomial or a knot preset")
    return parse_poly(delta) if delta is not None else preset(knot)
