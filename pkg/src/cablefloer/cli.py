"""``cablefloer`` command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a verification or oracle
comparison fails.  Every JSON report carries ``"schema": "cablefloer/1"``;
TSV reports have a header row and rows in lexicographic degree order.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from functools import partial
from itertools import product
from typing import Iterable, Sequence

from . import algebra as alg
from .colimit import colimit_dims, expected_first_stable, lspace_phi0_system
from .golden import golden_suite
from .gradings import crossing_shifts, phi_shift, psi_shift
from .hfunc import HKnot, UnverifiedRegimeWarning, h_stab
from .hybridge import telescope_check, verify_hy
from .knots import resolve
from .laurent import PolynomialSyntaxError, format_poly, stable_chi_check, validate_lspace_delta
from .parallel import ordered_map, worker_count
from .presentation import (build_colored, build_knot, build_tensor, build_torus, graded_dims,
                           torus_generator_degree, torus_oracle, torus_window, tower_dim, truncation_for)

SCHEMA = "cablefloer/1"


class InputError(ValueError):
    pass


class VerificationFailed(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    mt = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not mt:
        raise argparse.ArgumentTypeError(f"expected a range like -5..5, got {text!r}")
    lo, hi = int(mt.group(1)), int(mt.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt2(v: int) -> str:
    """Doubled value to plain text: 3 -> '3/2', 4 -> '2'."""
    return str(v // 2) if v % 2 == 0 else f"{v}/2"


def _knot(args) -> HKnot:
    delta = resolve(getattr(args, "delta", None), getattr(args, "knot", None))
    validate_lspace_delta(delta)
    return HKnot.from_delta(delta, getattr(args, "threshold", None))


def _add_knot(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--delta", help="Alexander polynomial, e.g. 't^3 - t^2 + 1 - t^-2 + t^-3'")
    g.add_argument("--knot", help="preset: unknot, T(p,q)")
    p.add_argument("--threshold", type=int, default=None, help="override the L-space cable threshold")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")


def _emit(out, args, command: str, header: Sequence[str], rows: Iterable[Sequence], extra: dict | None = None,
          json_rows: list | None = None) -> None:
    rows = list(rows)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": command}
        doc.update(extra or {})
        doc["rows"] = json_rows if json_rows is not None else [dict(zip(header, r)) for r in rows]
        out.write(json.dumps(doc, ensure_ascii=False, sort_keys=False) + "\n")
    else:
        for k, v in (extra or {}).items():
            out.write(f"# {k}: {v}\n")
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(str(x) for x in r) + "\n")


def _json(out, command: str, payload: dict) -> None:
    doc = {"schema": SCHEMA, "command": command}
    doc.update(payload)
    out.write(json.dumps(doc, ensure_ascii=False) + "\n")


# subcommands


def cmd_hfunc(args, out) -> int:
    hK = _knot(args)
    lo, hi = args.range
    if args.cable is None:
        rows = [(s, hK(s)) for s in range(lo, hi + 1)]
        _emit(out, args, "hfunc", ("s", "h"), rows, {"genus": hK.genus},
              json_rows=[{"s̄": [s], "h": h} for s, h in rows])
        return 0
    if len(args.cable) != 2:
        raise InputError("--cable takes n,m")
    n, m = args.cable
    if n < 1 or m < 0:
        raise InputError("--cable needs n >= 1 and m >= 0")
    pts = sorted(product(range(lo, hi + 1), repeat=n))
    vals = [h_stab(hK, n, m, p) for p in pts]
    header = tuple(f"s̄{i + 1}" for i in range(n)) + ("h",)
    _emit(out, args, "hfunc", header, [p + (v,) for p, v in zip(pts, vals)],
          {"genus": hK.genus, "n": n, "m": m},
          json_rows=[{"s̄": list(p), "h": v} for p, v in zip(pts, vals)])
    return 0


def _present_build(args):
    kind = args.family
    if kind == "torus":
        if args.n is None or args.m is None:
            raise InputError("present torus needs --n and --m")
        return build_torus(args.n, args.m), None
    hK = _knot(args)
    st = hK.staircase
    lo = args.window[0] if args.window else -st.genus
    N = args.N if args.N is not None else truncation_for(st, lo)
    if kind == "knot":
        return build_knot(st, N), hK
    if args.n is None:
        raise InputError(f"present {kind} needs --n")
    if kind == "colored":
        return build_colored(st, args.n, N), hK
    return build_tensor(st, args.n, N), hK


def cmd_present(args, out) -> int:
    if args.family == "torus" and (args.delta or args.knot):
        raise InputError("present torus takes --n/--m, not a knot")
    P, hK = _present_build(args)
    n = P.n
    if args.relations:
        rows = [(r.kind, P.format_relation(r)) for r in P.relations]
        _emit(out, args, "present", ("kind", "relation"), rows,
              {"generators": " ".join(f"{g.label}[{','.join(_fmt2(a) for a in g.alex2)};{g.maslov}]"
                                      for g in P.generators)})
        return 0
    dlo, dhi = args.maslov
    if P.meta["family"] == "torus":
        m = P.meta["m"]
        if args.window:
            lo, hi = args.window
            degs = [(tuple(m * (n - 1) + 2 * x for x in t), d)
                    for t in product(range(lo, hi + 1), repeat=n) for d in range(dlo, dhi + 1)]
        else:
            degs = torus_window(n, m, maslov=(dlo, dhi))
        oracle = torus_oracle(n, m)
    else:
        lo, hi = args.window or (P.meta["min_valid"], P.meta["min_valid"] + 6)
        degs = [(tuple(2 * x for x in t), d) for t in product(range(lo, hi + 1), repeat=n)
                for d in range(dlo, dhi + 1)]

        def oracle(a2, d, _h=hK, _n=n):
            return alg.colored_dim(_h, _n, [x // 2 for x in a2], d)
    rep = graded_dims(P, degs, method=args.method)
    header = tuple(f"A{i + 1}" for i in range(n)) + ("maslov", "dim")
    rows, bad = [], 0
    for (a2, d), v in rep.dims.items():
        row = tuple(_fmt2(x) for x in a2) + (d, v)
        if args.oracle:
            exp = oracle(a2, d)
            bad += exp != v
            row += (exp,)
        rows.append(row)
    if args.oracle:
        header += ("oracle",)
    if args.nonzero:
        rows = [r for r in rows if r[n + 1]]
    meta = {"family": P.meta["family"], "validity": rep.validity, **rep.truncation}
    if args.oracle:
        meta["discrepancies"] = bad
    _emit(out, args, "present", header, rows, meta)
    return 2 if bad else 0


def cmd_algebra(args, out) -> int:
    n = args.n
    if n < 1:
        raise InputError("--n must be >= 1")
    if args.action == "mul":
        if not args.word:
            raise InputError("algebra mul needs --word")
        try:
            x = alg.word_to_basis(n, args.word)
        except alg.ZeroProduct as exc:
            _json(out, "algebra.mul", {"n": n, "word": args.word, "zero": True, "reason": str(exc)})
            return 0
        folded = alg.product(alg.parse_word(n, args.word), n)
        if folded != x:
            raise VerificationFailed(f"product {folded} disagrees with grading placement {x}")
        _json(out, "algebra.mul", {"n": n, "word": args.word, **x.to_json()})
        return 0
    rep = alg.verify_all(n)
    ybad = []
    for m in range(1, args.max_m + 1):
        for i in range(m * (n - 1) + 1):
            y, g = alg.y_tilde(n, m, i), torus_generator_degree(n, m, i)
            if y.k or y.s2 != g.alex2 or y.grw != g.maslov:
                ybad.append([m, i])
    ok = not rep["linear"] and not rep["quadratic"] and not ybad
    _json(out, "algebra.verify", {
        "n": n, "max_m": args.max_m, "ok": ok,
        "linear_checked": sum(1 for _ in alg.linear_instances(n)),
        "quadratic_checked": sum(1 for _ in alg.quadratic_instances(n)),
        "failures": {"linear": [list(I) for I in rep["linear"]], "quadratic": [list(q) for q in rep["quadratic"]],
                     "generators": ybad},
    })
    return 0 if ok else 2


def cmd_colored(args, out) -> int:
    hK = _knot(args)
    n = args.n
    if args.act:
        if args.sbar is None:
            raise InputError("--act needs --sbar")
        x = alg.ColoredBasisElt(args.sbar, args.k, hK)
        y = alg.colored_act(args.act, x)
        _json(out, "colored.act", {"op": args.act, "in": x.to_json(), "out": y.to_json()})
        return 0
    lo, hi = args.window
    dlo, dhi = args.maslov
    pts = [args.sbar] if args.sbar is not None else sorted(product(range(lo, hi + 1), repeat=n))
    for p in pts:
        if len(p) != n:
            raise InputError(f"--sbar needs {n} coordinates")
    rows = [tuple(p) + (d, alg.colored_dim(hK, n, p, d)) for p in pts for d in range(dlo, dhi + 1)]
    header = tuple(f"s̄{i + 1}" for i in range(n)) + ("maslov", "dim")
    bad = 0
    if args.oracle:
        P = build_colored(hK.staircase, n, truncation_for(hK.staircase, min(min(p) for p in pts)))
        rep = graded_dims(P, [(tuple(2 * x for x in r[:n]), r[n]) for r in rows])
        new = []
        for r in rows:
            v = rep.dims[(tuple(2 * x for x in r[:n]), r[n])]
            bad += v != r[-1]
            new.append(r + (v,))
        rows = new
        header += ("presentation",)
    if args.nonzero:
        rows = [r for r in rows if r[n + 1]]
    meta = {"genus": hK.genus}
    if args.oracle:
        meta["discrepancies"] = bad
    _emit(out, args, "colored", header, rows, meta)
    return 2 if bad else 0


def _read_degrees(path: str, n: int) -> list[tuple[tuple[int, ...], int]]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.strip()
    degs = []
    if stripped.startswith("["):
        for item in json.loads(stripped):
            s, d = item
            degs.append((tuple(int(x) for x in s), int(d)))
    else:
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            vals = [int(x) for x in re.split(r"[\s,;]+", line) if x]
            degs.append((tuple(vals[:-1]), vals[-1]))
    for s, _ in degs:
        if len(s) != n:
            raise InputError(f"degree {s} in {path} does not have {n} coordinates")
    return degs


def _colimit_job(hK: HKnot, n: int, m_range: tuple[int, int], window: int, deg) -> tuple:
    sysd = lspace_phi0_system(hK, n, [deg], m_range)
    r = colimit_dims(sysd, window)[(tuple(deg[0]), deg[1])]
    return r.dim, r.stabilized, r.first_stable_m


def cmd_colimit(args, out) -> int:
    hK = _knot(args)
    n = args.n
    if args.degrees:
        degs = _read_degrees(args.degrees, n)
    else:
        lo, hi = args.window
        dlo, dhi = args.maslov
        degs = [(p, d) for p in product(range(lo, hi + 1), repeat=n) for d in range(dlo, dhi + 1)]
    degs = sorted(set(degs))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnverifiedRegimeWarning)
        res = ordered_map(partial(_colimit_job, hK, n, args.m_range, args.stab_window), degs)
    rows, json_rows, bad = [], [], 0
    for (s, d), (dim, stab, first) in zip(degs, res):
        ref = tower_dim(-2 * hK(min(s)), d)
        bad += (not stab) or dim != ref
        rows.append(tuple(s) + (d, dim, int(stab), first if first is not None else "-", ref))
        json_rows.append({"sbar": list(s), "maslov": d, "dim": dim, "stabilized": stab,
                          "first_stable_m": first, "expected_first_stable": expected_first_stable(hK, s),
                          "colored_dim": ref})
    header = tuple(f"s̄{i + 1}" for i in range(n)) + ("maslov", "dim", "stabilized", "first_stable_m", "colored_dim")
    meta = {"m_range": f"{args.m_range[0]}..{args.m_range[1]}", "discrepancies": bad}
    if hK.genus and args.m_range[0] < (args.threshold or max(1, 2 * hK.genus - 1)):
        meta["warning"] = "m-range starts below the L-space threshold; results unverified there"
    _emit(out, args, "colimit", header, rows, meta, json_rows=json_rows)
    return 2 if bad else 0


def cmd_grading(args, out) -> int:
    if args.kind == "phi":
        s = phi_shift(args.n, args.k)
        _json(out, "grading.phi", {"n": args.n, "k": args.k, **s.to_json()})
    elif args.kind == "crossing":
        shifts = crossing_shifts(args.n, args.j)
        _json(out, "grading.crossing", {"n": args.n, "j": args.j,
                                        "shifts": {k: v.to_json() for k, v in shifts.items()}})
    else:
        pairs = []
        for chunk in (args.pairs or "").split(";"):
            if chunk.strip():
                a, b = _ints(chunk)
                pairs.append((a, b))
        s = psi_shift(args.n, pairs)
        _json(out, "grading.psi", {"n": args.n, "Z": [list(p) for p in sorted(pairs)], **s.to_json()})
    return 0


def cmd_euler(args, out) -> int:
    delta = resolve(args.delta, args.knot)
    lo, hi = args.m_range if args.m_range else (args.m, args.m)
    ns = [args.n] if args.n else [2, 3]
    rows, bad = [], 0
    for n in ns:
        for m in range(lo, hi + 1):
            rep = stable_chi_check(delta, n, m, args.modulus)
            bad += not rep.ok
            rows.append((n, m, _fmt2(rep.modulus2), int(rep.ok),
                         "-" if rep.first_mismatch2 is None else _fmt2(rep.first_mismatch2)))
    _emit(out, args, "euler-check", ("n", "m", "modulus", "ok", "first_mismatch"), rows,
          {"delta": format_poly(delta)})
    return 2 if bad else 0


def cmd_hy(args, out) -> int:
    ok = verify_hy(args.n)
    tele = all(telescope_check(args.n, i) for i in range(1, args.n + 1))
    _json(out, "hy-check", {"n": args.n, "specialization": ok, "telescope": tele})
    return 0 if ok and tele else 2


def cmd_golden(args, out) -> int:
    res = golden_suite()
    bad = [r for r in res if not r.passed]
    if args.format == "json":
        _json(out, "golden", {"ok": not bad, "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                                                       for r in res]})
    else:
        for r in res:
            out.write(f"{'PASS' if r.passed else 'FAIL'}\t{r.name}" + (f"\t{r.detail}" if r.detail else "") + "\n")
    return 2 if bad else 0


def cmd_verify(args, out) -> int:
    if not args.all:
        raise InputError("verify currently supports only --all")
    n = args.n
    rep = alg.verify_all(n)
    hy = verify_hy(n)
    tele = all(telescope_check(n, i) for i in range(1, n + 1))
    ok = not rep["linear"] and not rep["quadratic"] and hy and tele
    _json(out, "verify", {"n": n, "ok": ok, "linear": not rep["linear"], "quadratic": not rep["quadratic"],
                          "hy": hy, "telescope": tele})
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cablefloer", description="Colored knot Floer homology of L-space knots.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hfunc", help="h-function of a knot or its cable")
    _add_knot(h)
    h.add_argument("--cable", type=_ints, default=None, metavar="N,M")
    h.add_argument("--range", type=_range, default=(-5, 5), metavar="A..B")
    _add_format(h)
    h.set_defaults(func=cmd_hfunc)

    pr = sub.add_parser("present", help="graded dimensions from a presentation")
    pr.add_argument("family", choices=("torus", "knot", "colored", "tensor"))
    _add_knot(pr, required=False)
    pr.add_argument("--n", type=int)
    pr.add_argument("--m", type=int)
    pr.add_argument("--N", type=int, default=None, help="number of staircase generators")
    pr.add_argument("--window", type=_range, default=None, metavar="A..B",
                    help="Alexander offsets from c (torus) or normalized s̄ range (others)")
    pr.add_argument("--maslov", type=_range, default=(-12, 0), metavar="A..B")
    pr.add_argument("--method", choices=("free", "quotient"), default="free")
    pr.add_argument("--oracle", action="store_true", help="compare with the h-function model")
    pr.add_argument("--relations", action="store_true", help="list generators and relations instead")
    pr.add_argument("--nonzero", action="store_true")
    _add_format(pr)
    pr.set_defaults(func=cmd_present)

    a = sub.add_parser("algebra", help="cable algebra products and relation checks")
    a.add_argument("action", choices=("verify", "mul"))
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--max-m", type=int, default=4)
    a.add_argument("--word", default=None)
    a.set_defaults(func=cmd_algebra)

    c = sub.add_parser("colored", help="colored homology dimensions and actions")
    _add_knot(c)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--sbar", type=_ints, default=None)
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--act", default=None, help="apply U_i, V_i, A or U to (--sbar, --k)")
    c.add_argument("--window", type=_range, default=(-3, 4), metavar="A..B")
    c.add_argument("--maslov", type=_range, default=(-12, 0), metavar="A..B")
    c.add_argument("--oracle", action="store_true", help="compare with the colored presentation")
    c.add_argument("--nonzero", action="store_true")
    _add_format(c)
    c.set_defaults(func=cmd_colored)

    cl = sub.add_parser("colimit", help="full-twist colimits in the h-model")
    _add_knot(cl)
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--degrees", default=None, help="file of degrees: 's̄1 ... s̄n maslov' per line, or JSON")
    cl.add_argument("--window", type=_range, default=(-5, 5), metavar="A..B")
    cl.add_argument("--maslov", type=_range, default=(-12, 0), metavar="A..B")
    cl.add_argument("--m-range", type=_range, default=(6, 14), metavar="A..B")
    cl.add_argument("--stab-window", type=int, default=3)
    cl.add_argument("--format", choices=("tsv", "json"), default="json")
    cl.set_defaults(func=cmd_colimit)

    g = sub.add_parser("grading", help="degree shifts of cobordism maps")
    g.add_argument("kind", choices=("phi", "crossing", "psi"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--j", type=int, default=0)
    g.add_argument("--pairs", default=None, help="Z as 'i,j;i,j' (1-based)")
    g.set_defaults(func=cmd_grading)

    e = sub.add_parser("euler-check", help="stable Euler characteristic congruence")
    _add_knot(e)
    e.add_argument("--n", type=int, default=None)
    e.add_argument("--m", type=int, default=1)
    e.add_argument("--m-range", type=_range, default=None, metavar="A..B")
    e.add_argument("--modulus", type=int, default=None, help="compare above t^modulus (default g - m)")
    _add_format(e)
    e.set_defaults(func=cmd_euler)

    hy = sub.add_parser("hy-check", help="specialization of the x_i generators")
    hy.add_argument("--n", type=int, required=True)
    hy.set_defaults(func=cmd_hy)

    go = sub.add_parser("golden", help="check all stored reference values")
    _add_format(go)
    go.set_defaults(func=cmd_golden)

    v = sub.add_parser("verify", help="run every relation and identity check for one n")
    v.add_argument("--all", action="store_true")
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(func=cmd_verify)
    return p


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """``--range -5..5`` -> ``--range=-5..5`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(range(len(argv)))
    skip = False
    for i in it:
        if skip:
            skip = False
            continue
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok.startswith("--") and "=" not in tok and nxt is not None and re.match(r"^-\d", nxt):
            out.append(f"{tok}={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        worker_count()
        with warnings.catch_warnings():
            warnings.simplefilter("always", UnverifiedRegimeWarning)
            return args.func(args, out)
    except VerificationFailed as exc:
        print(f"cablefloer: verification failed: {exc}", file=sys.stderr)
        return 2
    except (InputError, PolynomialSyntaxError, ValueError, OSError) as exc:
        print(f"cablefloer: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
