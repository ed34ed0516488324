import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from cablefloer import algebra as alg
from cablefloer.gradings import (GradingShift, crossing_shifts, phi_shift, phi_shift_general, psi_shift,
                                 renormalize)


def test_phi_examples():
    assert phi_shift(2, 0) == GradingShift(0, (1, 1), 1)
    assert phi_shift(4, 3) == GradingShift(-12, (-3,) * 4, 1)
    assert phi_shift(4, 3).alexander == (-1.5,) * 4
    with pytest.raises(ValueError):
        phi_shift(3, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_closed_form(n):
    for k in range(n):
        s = phi_shift(n, k)
        assert s.grw == -k * k - k
        assert all(Fraction(a, 2) == -k + Fraction(n - 1, 2) for a in s.alexander2)
        assert s == phi_shift_general(n, (1,) * n, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_is_grading_of_a_k(n):
    # φ_k applied to the unit of the twist-0 piece is a_k
    for k in range(n):
        s, a = phi_shift(n, k), alg.gen_a(n, k)
        assert (s.grw, s.alexander2, s.twist) == (a.grw, a.s2, a.m)


def test_additivity_matches_products():
    n = 3
    for i, j in product(range(n), repeat=2):
        total = phi_shift(n, i) + phi_shift(n, j)
        prod = alg.mul(alg.gen_a(n, i), alg.gen_a(n, j))
        assert (total.grw, total.alexander2, total.twist) == (prod.grw, prod.s2, prod.m)


def test_general_specializations():
    assert phi_shift_general(5, (0,) * 3, 2).alexander2 == (0, 0, 0)
    for n in range(1, 7):
        for j in range(5):
            g = phi_shift_general(2 * n, (2,) * n, j, twist=4)
            assert all(Fraction(a, 2) == -2 * j - 1 + 2 * n for a in g.alexander2)


@pytest.mark.parametrize("n,j", [(1, 0), (2, 1)] + [(n, j) for n in range(1, 7) for j in range(5)])
def test_crossing_shifts(n, j):
    sh = crossing_shifts(n, j)
    for s in sh.values():
        assert s.grw == -j * j - j
    assert sh["G"].twist == 4 and sh["F"].twist == -2
    assert all(Fraction(a, 2) == -2 * j - 1 + 2 * n for a in sh["G"].alexander2)
    assert set(sh["F"].alexander2) == {0}
    assert all(Fraction(a, 2) == -2 * j + 1 for a in sh["G_col"].alexander2)
    assert all(Fraction(a, 2) == n - 1 for a in sh["F_col"].alexander2)


def test_renormalization_identity():
    rng = random.Random(7)
    for _ in range(20):
        n, j, m = rng.randint(1, 8), rng.randint(0, 6), rng.randint(0, 30)
        G = crossing_shifts(n, j)["G"]
        # -2j - 1 + 2n - (m+4)(n-1)/2 + m(n-1)/2 = -2j + 1
        assert renormalize(G, n, m).alexander2 == tuple(a - 4 * (n - 1) for a in G.alexander2)
        assert Fraction(2 * (-2 * j - 1 + 2 * n) - (m + 4) * (n - 1) + m * (n - 1), 2) == -2 * j + 1


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_antisymmetry(n):
    pairs = list(product(range(1, n + 1), repeat=2))
    assert psi_shift(n, []).alexander2 == (0,) * n
    assert psi_shift(n, pairs).alexander2 == (0,) * n
    for size in range(len(pairs) + 1):
        for Z in combinations(pairs, size):
            s = psi_shift(n, Z)
            assert s.grw == 0 and s.twist == -2 and sum(s.alexander2) == 0
            if n <= 2:
                # brute force of the defining sum
                want = [0] * n
                for i, j in pairs:
                    sign = 1 if (i, j) in Z else -1
                    want[i - 1] += sign
                    want[j - 1] -= sign
                assert s.alexander2 == tuple(want)


def test_psi_example():
    assert psi_shift(2, [(1, 2)]) == GradingShift(0, (2, -2), -2)
    with pytest.raises(ValueError):
        psi_shift(2, [(1, 3)])
