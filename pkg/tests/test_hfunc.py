import warnings
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cablefloer.golden import DEFAULT_TABLES
from cablefloer.hfunc import (HKnot, LatticeError, Staircase, UnverifiedRegimeWarning, h0, h_cable, h_colored,
                              h_knot, h_stab, h_torus, lspace_threshold, staircase_from_delta)
from cablefloer.knots import preset
from cablefloer.laurent import NormalizationError, cable_chi, chi_series, parse_poly

KNOTS = ["unknot", "T(2,3)", "T(3,4)", "T(2,5)", "T(3,5)", "T(2,7)"]


def test_t34_staircase(t34):
    assert t34.genus == 3
    assert t34.staircase.head == (3, 0, -1)
    assert t34.staircase.elements(6) == [3, 0, -1, -3, -4, -5]


def test_t34_h_table(t34):
    assert tuple(t34(s) for s in range(-5, 6)) == DEFAULT_TABLES["t34_h"]


def test_unknot_h():
    hU = HKnot.unknot()
    assert [hU(s) for s in range(-3, 4)] == [3, 2, 1, 0, 0, 0, 0]
    assert [h0(s) for s in range(-3, 4)] == [3, 2, 1, 0, 0, 0, 0]


def test_staircase_rejects_non_lspace():
    # Δ of the figure eight knot: χ has a coefficient -3 at t^0
    with pytest.raises(NormalizationError, match="not an L-space staircase"):
        staircase_from_delta(parse_poly("-t + 3 - t^-1"))


def test_staircase_invariants():
    with pytest.raises(ValueError):
        Staircase(2, (1, 5))


@pytest.mark.parametrize("name", KNOTS)
def test_h_knot_shape(name):
    hK = HKnot.from_delta(preset(name))
    g = hK.genus
    vals = [hK(s) for s in range(-g - 6, g + 7)]
    steps = {a - b for a, b in zip(vals, vals[1:])}
    assert steps <= {0, 1}
    for s in range(-g - 5, g + 6):
        assert hK(-s) == hK(s) + s
    assert hK(g) == 0 and hK(g - 1) == 1


@pytest.mark.parametrize("name", KNOTS)
def test_h_reproduces_chi(name):
    d = preset(name)
    hK = HKnot.from_delta(d)
    lo = -hK.genus - 8
    series = chi_series(d, lo)
    for s in range(lo, hK.genus + 4):
        assert hK(s - 1) - hK(s) == series[s]


def test_h_knot_function_form(t34):
    assert h_knot(t34, -5) == 5


def test_threshold(t34, trefoil, unknot):
    assert lspace_threshold(t34) == 5
    assert lspace_threshold(trefoil) == 1
    assert lspace_threshold(unknot) == 1
    assert lspace_threshold(HKnot.from_delta(preset("T(3,4)"), threshold=9)) == 9


def test_below_threshold_warns(t34):
    with pytest.warns(UnverifiedRegimeWarning):
        h_stab(t34, 2, 3, (0, 0))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        h_stab(t34, 2, 5, (0, 0))


def test_lattice_checked():
    with pytest.raises(LatticeError):
        h_torus(2, 1, (0, 0))  # T(2,2) lives on (Z + 1/2)^2
    with pytest.raises(ValueError):
        h_torus(2, 1, (1,))


def test_t34_cable_grid(t34):
    grid = DEFAULT_TABLES["t34_grid_m6"]
    for r, s2 in enumerate(range(5, -6, -1)):
        for c, s1 in enumerate(range(-5, 6)):
            assert h_stab(t34, 2, 6, (s1, s2)) == grid[r][c], (s1, s2)


@pytest.mark.parametrize("m,sbar,want", [(6, (-5, -5), 6), (7, (-5, -5), 6), (8, (-5, -5), 5),
                                         (7, (-4, -4), 4), (7, (-4, -5), 5), (8, (-4, -5), 5)])
def test_t34_corrections(t34, m, sbar, want):
    assert h_stab(t34, 2, m, sbar) == want


def _inclusion_exclusion(hK, n, m, s2):
    return sum((-1) ** (k + 1) * h_cable(hK, n, m, [s2[i] - 2 * (i in B) for i in range(n)])
               for k in range(n + 1) for B in combinations(range(n), k))


@pytest.mark.parametrize("name", ["unknot", "T(2,3)", "T(3,4)", "T(3,5)"])
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", range(0, 5))
def test_h_cable_matches_euler_characteristic(name, n, m, quiet):
    # For an L-space link χ(HFL(s)) = Σ_B (-1)^{|B|+1} h(s - e_B), and the cable's χ only
    # depends on t_1⋯t_n, so it is supported on the diagonal.
    d = preset(name)
    hK = HKnot.from_delta(d)
    chi = cable_chi(d, n, m, -40)
    c2 = m * (n - 1)
    shift = 1 if n > 1 else 0
    for t in product(range(-7, 7), repeat=n):
        s2 = [c2 % 2 + 2 * x for x in t]
        want = chi.coeff2(s2[0] - shift) if len(set(s2)) == 1 else 0
        assert _inclusion_exclusion(hK, n, m, s2) == want, s2


def test_h_torus_is_unknot_cable(unknot):
    for n in (1, 2, 3):
        for m in range(0, 5):
            c2 = m * (n - 1)
            for t in product(range(-5, 5), repeat=n):
                s2 = [c2 % 2 + 2 * x for x in t]
                assert h_torus(n, m, s2) == h_cable(unknot, n, m, s2)


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(KNOTS[:4]), st.integers(1, 4), st.integers(0, 9), st.data())
def test_h_cable_permutation_invariant(name, n, m, data):
    hK = HKnot.from_delta(preset(name))
    c2 = m * (n - 1)
    s2 = [c2 % 2 + 2 * x for x in data.draw(st.lists(st.integers(-12, 12), min_size=n, max_size=n))]
    perm = data.draw(st.permutations(s2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnverifiedRegimeWarning)
        assert h_cable(hK, n, m, s2) == h_cable(hK, n, m, perm)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(KNOTS[:4]), st.integers(2, 3), st.integers(1, 10), st.data())
def test_h_stab_monotone_and_stable(name, n, m, data):
    hK = HKnot.from_delta(preset(name))
    sbar = data.draw(st.lists(st.integers(-10, 10), min_size=n, max_size=n))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnverifiedRegimeWarning)
        a, b = h_stab(hK, n, m, sbar), h_stab(hK, n, m + 1, sbar)
    assert b <= a
    if min(sbar) >= hK.genus - m:
        assert a == b


@given(st.sampled_from(KNOTS[:4]), st.lists(st.integers(-10, 10), min_size=1, max_size=4))
def test_h_colored_is_limit(name, sbar):
    hK = HKnot.from_delta(preset(name))
    m = max(lspace_threshold(hK), hK.genus - min(sbar))
    assert h_colored(hK, sbar) == h_stab(hK, len(sbar), m, sbar) == hK(min(sbar))
