"""Reference values for T(3,4) and a runner that checks the engines against them.

The tables are plain data so a test (or a user) can hand in a modified copy
and watch the corresponding named check fail.
"""
from __future__ import annotations

import copy
import time
import warnings
from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import algebra as alg
from .colimit import colimit_dims, lspace_phi0_system
from .gradings import crossing_shifts, phi_shift, phi_shift_general
from .hfunc import HKnot, UnverifiedRegimeWarning, h_colored, h_stab, h_torus, staircase_from_delta
from .hybridge import elementary_symmetric, verify_hy
from .knots import torus_knot_delta
from .laurent import chi_series, parse_poly, stable_chi_check
from .presentation import (build_colored, build_knot, build_tensor, build_torus, graded_dims,
                           stable_truncation)

T34_DELTA = "t^3 - t^2 + 1 - t^-2 + t^-3"

# rows: s̄_2 = 5, 4, ..., -5; columns: s̄_1 = -5, ..., 5
T34_GRID_M6 = (
    (5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0),
    (5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0),
    (5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0),
    (5, 4, 3, 3, 2, 1, 1, 1, 1, 1, 1),
    (5, 4, 3, 3, 2, 1, 1, 1, 1, 1, 1),
    (5, 4, 3, 3, 2, 1, 1, 1, 1, 1, 1),
    (5, 4, 3, 3, 2, 2, 2, 2, 2, 2, 2),
    (5, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    (5, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    (6, 5, 4, 4, 4, 4, 4, 4, 4, 4, 4),
    (6, 6, 5, 5, 5, 5, 5, 5, 5, 5, 5),
)

DEFAULT_TABLES = {
    "t34_support": (3, 2, 0, -2, -3),
    "t34_chi_floor6": (3, 0, -1, -3, -4, -5, -6),
    "t34_staircase_head": (3, 0, -1),
    "t34_h": (5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0),  # s = -5..5
    "t34_grid_m6": T34_GRID_M6,
    # (m, s̄) -> h_stab
    "t34_corrections": {
        (6, (3, 3)): 0,
        (6, (-5, -5)): 6,
        (7, (-4, -4)): 4,
        (7, (-4, -5)): 5,
        (7, (-5, -4)): 5,
        (7, (-5, -5)): 6,
        (8, (-4, -4)): 4,
        (8, (-4, -5)): 5,
        (8, (-5, -5)): 5,
    },
    # U z_a = V^e z_b
    "t34_zigzag": ((3, 2, 0), (0, 0, -1), (-1, 1, -3), (-3, 0, -4)),
    # (from m on) U_j z̃_a = V^β z̃_b, j 1-based
    "t34_colored_relations": {
        6: ((1, 3, (2, 3), 0), (2, 3, (3, 2), 0), (1, 0, (0, 1), -1), (2, 0, (1, 0), -1),
            (1, -1, (1, 2), -3), (2, -1, (2, 1), -3)),
        7: ((1, -3, (0, 1), -4), (2, -3, (1, 0), -4)),
        8: ((1, -4, (0, 1), -5), (2, -4, (1, 0), -5)),
    },
    # 𝖠 z̃_a = (V_1V_2)^e z̃_b
    "t34_A_relations": ((3, 2, 0), (0, 0, -1), (-1, 1, -3), (-3, 0, -4), (-4, 0, -5)),
    "t34_stable_gen_grw": {-4: -8, -5: -10},
    "t34_colimit_m6_8": {((-4, -4), -8): (0, 1, 1)},
}


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    passed: bool
    detail: str = ""


def _t34() -> HKnot:
    return HKnot.from_delta(parse_poly(T34_DELTA))


def _eq(got, want) -> tuple[bool, str]:
    return got == want, ("" if got == want else f"got {got!r}, expected {want!r}")


def _colored_relation_table(P, st) -> list[tuple]:
    sig = st.elements(len(P.generators))
    rows = []
    for r in P.main_relations():
        src, dst = r.terms
        j = src.alpha.index(1) + 1
        rows.append((j, sig[src.gen], dst.beta, sig[dst.gen]))
    return rows


def _checks(T: dict) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    hK = _t34()
    st = hK.staircase
    delta = parse_poly(T34_DELTA)

    def support():
        return _eq(tuple(int(e) for e, _ in delta.items()), tuple(T["t34_support"]))

    def chi_floor():
        s = chi_series(delta, -6)
        return _eq(tuple(int(e) for e, c in s.items() if c), tuple(T["t34_chi_floor6"]))

    def staircase():
        ok1, d1 = _eq(staircase_from_delta(delta).head, tuple(T["t34_staircase_head"]))
        ok2, d2 = _eq(torus_knot_delta(3, 4), delta)
        return ok1 and ok2, d1 or d2

    def h_table():
        return _eq(tuple(hK(s) for s in range(-5, 6)), tuple(T["t34_h"]))

    def grid():
        got = tuple(tuple(h_stab(hK, 2, 6, (s1, s2)) for s1 in range(-5, 6)) for s2 in range(5, -6, -1))
        return _eq(got, tuple(tuple(r) for r in T["t34_grid_m6"]))

    def corrections():
        bad = {k: h_stab(hK, 2, k[0], k[1]) for k, v in T["t34_corrections"].items()
               if h_stab(hK, 2, k[0], k[1]) != v}
        return not bad, ("" if not bad else f"mismatches {bad}")

    def colored_h():
        return _eq(h_colored(hK, (-1, 4)), 2)

    def torus_diagonal():
        for n, m in product(range(2, 5), range(1, 5)):
            c2 = m * (n - 1)
            for i in range(m * (n - 1) + 1):
                q, r = divmod(i, m)
                if 2 * h_torus(n, m, (c2 - 2 * i,) * n) != (q + 1) * (q * m + 2 * r):
                    return False, f"h(c-{i}) wrong for n={n}, m={m}"
            if h_torus(n, m, (c2,) * (n - 1) + (c2 + 4,)) != 0:
                return False, f"h not zero above c for n={n}, m={m}"
        return True, ""

    def alex_stable():
        rep = stable_chi_check(delta, 2, 8)
        return rep.ok, str(rep)

    def gen_a():
        a0, a1 = alg.gen_a(2, 0), alg.gen_a(2, 1)
        return _eq((a0.m, a0.s2, a0.grw, a1.s2, a1.grw), (1, (1, 1), 0, (-1, -1), -2))

    def quadratic_example():
        left = alg.mul(alg.gen_a(3, 0), alg.gen_a(3, 2))
        right = alg.mul(alg.gen_a(3, 1), alg.gen_a(3, 1))
        ok = (left.m, left.s2) == (right.m, right.s2) and left.k == right.k + 1
        ok = ok and alg.verify_quadratic(3, 0, 2, 1, 1)
        ok = ok and alg.word_to_basis(3, "a0 a2") == alg.word_to_basis(3, "U a1 a1")
        return ok, "" if ok else f"a0a2={left}, a1a1={right}"

    def linear_example():
        ok = alg.verify_linear(2, {1}) and alg.verify_linear(2, {2})
        return bool(ok), ""

    def colored_unknot_action():
        x = alg.ColoredBasisElt((0, 0))
        ok = alg.colored_act("U1", x) == alg.ColoredBasisElt((-1, 0), 0)
        ok = ok and alg.colored_act("U1", x) == alg.colored_act("V2", alg.colored_act("A", x))
        return ok, ""

    def colored_A_t34():
        got = alg.colored_act("A", alg.ColoredBasisElt((3, 3), 0, hK))
        z0 = alg.ColoredBasisElt((0, 0), 0, hK)
        want = alg.colored_act("V2", alg.colored_act("V1", alg.colored_act("V2", alg.colored_act("V1", z0))))
        return _eq(got, want)

    def localize_a1():
        return _eq(alg.localize(alg.gen_a(2, 1)), alg.colored_gen(2, "A"))

    def colored_dims_t34():
        got = (alg.colored_dim(hK, 2, (3, 3), 0), alg.colored_dim(hK, 2, (3, 3), -1))
        return _eq(got, (1, 0))

    def colored_unknot_hilbert():
        O = HKnot.unknot()
        for n in (1, 2, 3):
            for s in product(range(-3, 4), repeat=n):
                for d in range(-10, 1):
                    j, rem = divmod(-d, 2)
                    count = int(rem == 0 and d <= 0 and all(x + j >= 0 for x in s))
                    if alg.colored_dim(O, n, s, d) != count:
                        return False, f"n={n} s̄={s} d={d}"
        return True, ""

    def torus_n2_m1():
        P = build_torus(2, 1)
        rels = sorted(P.format_relation(r) for r in P.relations)
        want = sorted(["U1*Y0 + V2*Y1", "U2*Y0 + V1*Y1", "U1*V1*Y0 + U2*V2*Y0", "U1*V1*Y1 + U2*V2*Y1"])
        return _eq(rels, want)

    def torus_n3_m2():
        tops = {alg.word_to_basis(3, [f"a{i}", f"a{j}"]) for i in range(3) for j in range(i, 3)}
        tops = {x for x in tops if x.k == 0}
        ok = len(tops) == 5 and len(build_torus(3, 2).generators) == 5
        ok = ok and tops == {alg.y_tilde(3, 2, i) for i in range(5)}
        return ok, "" if ok else f"{len(tops)} tower tops"

    def zigzag():
        P = build_knot(st, 5)
        got = tuple((st.sigma(r.terms[0].gen + 1), r.terms[1].beta[0], st.sigma(r.terms[1].gen + 1))
                    for r in P.main_relations())
        return _eq(got, tuple(T["t34_zigzag"]))

    def colored_relations():
        want: list = []
        for m in sorted(T["t34_colored_relations"]):
            want += list(T["t34_colored_relations"][m])
            P = build_colored(st, 2, stable_truncation(st, m))
            got = _colored_relation_table(P, st)
            if sorted(got) != sorted(want):
                return False, f"m={m}: got {sorted(got)}"
        return True, ""

    def A_relations():
        P = build_tensor(st, 2, 6)
        got = tuple((st.sigma(r.terms[0].gen + 1), r.terms[1].beta[0], st.sigma(r.terms[1].gen + 1))
                    for r in P.main_relations())
        return _eq(got, tuple(T["t34_A_relations"]))

    def stable_generators():
        P = build_colored(st, 2, 6)
        got = {int(g.label[2:]): g.maslov for g in P.generators if g.label in ("z~-4", "z~-5")}
        return _eq(got, dict(T["t34_stable_gen_grw"]))

    def tensor_unknot():
        O = HKnot.unknot().staircase
        P = build_tensor(O, 2, 3)
        degs = [((2 * a, 2 * b), d) for a in range(0, 4) for b in range(0, 4) for d in range(-8, 1)]
        rep = graded_dims(P, degs)
        bad = [k for k, v in rep.dims.items()
               if v != alg.colored_dim(HKnot.unknot(), 2, (k[0][0] // 2, k[0][1] // 2), k[1])]
        return not bad, (f"mismatches at {bad[:3]}" if bad else "")

    def colimit_unknot():
        O = HKnot.unknot()
        for m in range(1, 6):
            sysd = lspace_phi0_system(O, 2, [((a, b), d) for a in range(-m, 3) for b in range(-m, 3)
                                             for d in range(-8, 1)], (m, m + 4))
            for deg, s in sysd.items():
                for f in s.maps:
                    if s.dim(s.start) and f != ((1,),):
                        return False, f"non-identity map at {deg}, m={m}"
        return True, ""

    def colimit_t34():
        for (sbar, d), dims in T["t34_colimit_m6_8"].items():
            sysd = lspace_phi0_system(hK, 2, [(sbar, d)], (6, 12))
            s = sysd[(sbar, d)]
            res = colimit_dims(sysd)[(sbar, d)]
            if tuple(s.dims[:3]) != tuple(dims) or res.dim != 1:
                return False, f"dims {s.dims}, colimit {res}"
        return True, ""

    def phi_shifts():
        ok = phi_shift(2, 0).alexander2 == (1, 1) and phi_shift(2, 0).grw == 0
        for n in range(1, 7):
            for k in range(n):
                ok = ok and phi_shift_general(n, (1,) * n, k) == phi_shift(n, k)
        return ok, ""

    def big_blowdown():
        for n in range(1, 7):
            for j in range(5):
                if phi_shift_general(2 * n, (2,) * n, j).alexander2 != (2 * (-2 * j - 1 + 2 * n),) * n:
                    return False, f"n={n}, j={j}"
        return True, ""

    def crossing():
        s = crossing_shifts(2, 1)
        return _eq((s["G"].alexander2, s["F"].alexander2, s["G_col"].alexander2, s["F_col"].alexander2,
                    s["G"].twist, s["F"].twist, s["G"].grw),
                   ((2, 2), (0, 0), (-2, -2), (2, 2), 4, -2, -2))

    def e2():
        return _eq(str(elementary_symmetric(["V1", "V2", "V3"], 2)), "V1*V2 + V1*V3 + V2*V3")

    def hy3():
        return verify_hy(3), ""

    return [
        ("laurent.parse_t34_support", support),
        ("laurent.chi_t34_floor6", chi_floor),
        ("laurent.alex_stable_t34_n2_m8", alex_stable),
        ("hfunc.t34_staircase", staircase),
        ("hfunc.t34_h_table", h_table),
        ("hfunc.torus_diagonal_and_zero", torus_diagonal),
        ("hfunc.t34_grid_m6", grid),
        ("hfunc.t34_m7_m8_corrections", corrections),
        ("hfunc.t34_colored_h", colored_h),
        ("algebra.gen_a_n2", gen_a),
        ("algebra.a0a2_eq_U_a1a1", quadratic_example),
        ("algebra.linear_n2", linear_example),
        ("algebra.colored_unknot_U1", colored_unknot_action),
        ("algebra.t34_A_on_z3", colored_A_t34),
        ("algebra.localize_a1_is_A", localize_a1),
        ("algebra.t34_colored_dim", colored_dims_t34),
        ("algebra.colored_unknot_hilbert", colored_unknot_hilbert),
        ("presentation.torus_n2_m1", torus_n2_m1),
        ("presentation.torus_n3_m2_generators", torus_n3_m2),
        ("presentation.t34_zigzag", zigzag),
        ("presentation.t34_colored_relations", colored_relations),
        ("presentation.t34_A_relations", A_relations),
        ("presentation.t34_stable_generators", stable_generators),
        ("presentation.tensor_unknot_free", tensor_unknot),
        ("colimit.unknot_identity_maps", colimit_unknot),
        ("colimit.t34_z_minus4", colimit_t34),
        ("gradings.phi_shift", phi_shifts),
        ("gradings.big_blowdown", big_blowdown),
        ("gradings.crossing_n2_j1", crossing),
        ("hybridge.e2_three_vars", e2),
        ("hybridge.verify_n3", hy3),
    ]


def golden_suite(tables: dict | None = None) -> list[GoldenCheck]:
    """Run every reference check; ``tables`` overrides entries of :data:`DEFAULT_TABLES`."""
    T = copy.deepcopy(DEFAULT_TABLES)
    if tables:
        T.update(tables)
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnverifiedRegimeWarning)
        for name, fn in _checks(T):
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed check, reported by name
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(GoldenCheck(name, bool(ok), detail))
    return out


def timed_golden_suite(tables: dict | None = None) -> tuple[list[GoldenCheck], float]:
    t0 = time.perf_counter()
    res = golden_suite(tables)
    return res, time.perf_counter() - t0
