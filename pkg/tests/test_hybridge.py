from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cablefloer.hybridge import (A, MultiPoly, V, colored_U, elementary_symmetric, hy_substitution,
                                 specialize_x, telescope_check, verify_hy, x_generator)

NAMES = ["V1", "V2", "V3", "A"]
SYMS = {name: sympy.Symbol(name) for name in NAMES + ["u0", "u1", "u2", "y1", "y2", "y3"]}


def to_sympy(p: MultiPoly):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Integer(c)
        for v, e in mono:
            term *= SYMS[v] ** e
        out += term
    return sympy.expand(out)


polys = st.dictionaries(
    st.lists(st.tuples(st.sampled_from(NAMES), st.integers(1, 3)), max_size=3, unique_by=lambda t: t[0])
    .map(lambda ms: tuple(sorted(ms))),
    st.integers(-3, 3), max_size=4).map(MultiPoly)


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys, polys, polys)
def test_substitution_is_multiplicative(p, q, image):
    images = {"V1": image, "A": V(2) + 1}
    assert (p * q).substitute(images) == p.substitute(images) * q.substitute(images)
    assert (p + q).substitute(images) == p.substitute(images) + q.substitute(images)


def test_elementary_symmetric():
    vs = [V(1), V(2), V(3)]
    assert str(elementary_symmetric(vs, 2)) == "V1*V2 + V1*V3 + V2*V3"
    assert elementary_symmetric(vs, 0) == 1
    assert elementary_symmetric(vs, 4).is_zero()
    assert elementary_symmetric(vs, -1).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_verify_hy(n):
    assert verify_hy(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_specialization_with_sympy(n):
    # independent computation of Σ_k u_k y_i^k under the substitution
    Vs = [SYMS[f"V{j}"] for j in range(1, n + 1)]
    for i in range(1, n + 1):
        total = 0
        for k in range(n):
            e = sum((sympy.Mul(*c) for c in combinations(Vs, n - 1 - k)), sympy.Integer(0))
            total += (-1) ** k * e * SYMS["A"] * Vs[i - 1] ** k
        want = SYMS["A"] * sympy.Mul(*[v for j, v in enumerate(Vs, 1) if j != i])
        assert sympy.expand(total - want) == 0
        assert to_sympy(specialize_x(n, i)) == sympy.expand(want)


@pytest.mark.parametrize("n", range(1, 6))
def test_telescope(n):
    assert all(telescope_check(n, i) for i in range(1, n + 1))


def test_broken_substitution_fails():
    images = hy_substitution(3)
    images["u1"] = images["u1"] * -1
    assert x_generator(3, 1).substitute(images) != colored_U(3, 1)


def test_printing_is_deterministic():
    p = (V(2) + V(1)) * A - 3
    assert str(p) == "A*V1 + A*V2 - 3"
