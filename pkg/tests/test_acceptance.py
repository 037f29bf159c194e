"""Acceptance criteria 1-9, one test each.

Every criterion prints one ``criterion N: PASS|FAIL`` line in the pytest
terminal summary (see ``conftest.py``); run this file directly to get the
same lines without pytest.
"""

import itertools
import os
import tempfile
from fractions import Fraction

import pytest

from homkernel import builtins
from homkernel.cli import PACKAGE_GOLDEN
from homkernel.core import Subspace, apply, identity
from homkernel.document import emit, parse, to_document
from homkernel.endv import build_biproduct, verify_biproduct
from homkernel.enveloping import MONOMIAL_ORDERS, build_enveloping, extend_to_enveloping, verify_enveloping_hopf
from homkernel.lie import (
    check_adjoint_identities, check_commutator_square, check_leibniz_identities, derive_bracket, invariants,
    verify_braided_lie,
)
from homkernel.perturb import perturbed_document, seeds
from homkernel.suite import verify
from homkernel.yd import YDAlgebraPresentation, check_braiding_symmetric

from golden_cases import CASES, run_quiet

F = Fraction
RESULTS = {}


def _table(l):
    labs = l.basis.labels
    return {(labs[a], labs[b], labs[c]): v for (a, b, c), v in l.bracket.entries.items()}


def _matrix_table(par):
    """Super commutator of matrix units, computed from 0/1 matrices."""
    n = len(par)

    def mul(p, q):
        return [[sum(p[i][k] * q[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    def e(i, j):
        return [[int((r, c) == (i, j)) for c in range(n)] for r in range(n)]

    out = {}
    for i, j, k, m in itertools.product(range(n), repeat=4):
        s = (-1) ** (((par[i] + par[j]) % 2) * ((par[k] + par[m]) % 2))
        p, q = mul(e(i, j), e(k, m)), mul(e(k, m), e(i, j))
        for r, c in itertools.product(range(n), repeat=2):
            v = p[r][c] - s * q[r][c]
            if v:
                out[(f"E{i}{j}", f"E{k}{m}", f"E{r}{c}")] = v
    return out


def criterion_1():
    got = _table(derive_bracket(builtins.get("a4")))
    want = {("x", "g", "gx"): 2, ("g", "x", "gx"): -2, ("gx", "g", "x"): 2, ("g", "gx", "x"): -2}
    return got == want, f"{len(got)} nonzero bracket entries"


def criterion_2():
    bad = []
    for name in ["h2", "a4", "adjoint(h2)", "coadjoint(h2)"]:
        rep = verify(builtins.get(name))
        if not rep.passed:
            bad.append(f"{name} fails {','.join(rep.failed())}")
    quiet = []
    for s in seeds():
        rep = verify(perturbed_document(s).build(), s.kind)
        again = verify(perturbed_document(s).build(), s.kind)
        if s.expect not in rep.failed() or not rep[s.expect].witnesses or rep.machine() != again.machine():
            quiet.append(s.id)
    if quiet:
        bad.append(f"fixtures without reproducible failure: {','.join(quiet)}")
    return not bad, "; ".join(bad) or f"4 built-ins pass, {len(seeds())} fixtures fail as named"


def criterion_3():
    checked, bad = [], []
    for name in builtins.names():
        A = builtins.get(name)
        if not isinstance(A, YDAlgebraPresentation):
            continue
        if A.hopf.antipode_inv is None or not check_braiding_symmetric(A).passed:
            continue
        rep = verify_braided_lie(derive_bracket(A))
        checked.append(name)
        for ax in ("braided-skew-symmetry", "braided-hom-jacobi"):
            if not rep[ax].passed:
                bad.append(f"{name}:{ax}")
    return not bad and bool(checked), f"checked {', '.join(checked)}" + (f"; failing {bad}" if bad else "")


def criterion_4():
    A = builtins.get("ut2")
    i = A.basis.index
    X = Subspace(A.basis, [{i("E11"): F(1)}, {i("E22"): F(1)}])
    Y = Subspace(A.basis, [{i("E11"): F(1), i("E22"): F(1)}, {i("E12"): F(1)}])
    rep = check_commutator_square(A, X, Y)
    ok = rep.preconditions_passed and rep["commutator-square-zero"].passed and any("nilpotent" in n for n in rep.notes)
    return ok, "preconditions " + ("pass" if rep.preconditions_passed else f"fail {rep.failed()}")


def criterion_5():
    bad, xs = [], 0
    for name in ["a4", "ut2"]:
        A = builtins.get(name)
        l = derive_bracket(A)
        if not check_leibniz_identities(l).passed:
            bad.append(f"{name}:leibniz")
        for v in invariants(A).vectors():
            x = {(k,): c for k, c in v.items()}
            if apply(A.beta, x, (0,)) != x:
                continue
            xs += 1
            rep = check_adjoint_identities(l, dict(v))
            if not rep.passed:
                bad.append(f"{name}:adjoint:{rep.failed()}")
    return not bad and xs > 0, f"{xs} qualifying x checked" + (f"; {bad}" if bad else "")


def criterion_6():
    u2 = build_enveloping(builtins.get("triv-abelian(2)"), 2)
    l = derive_bracket(builtins.get("a4"))
    us = [build_enveloping(l, 3, o) for o in MONOMIAL_ORDERS]
    rep = verify_enveloping_hopf(us[0])
    dims = {tuple(u.degree_dims()) for u in us}
    ok = u2.dimension_line() == "1+2+3=6" and rep.passed and rep["h-cocommutative"].passed and len(dims) == 1
    return ok, f"abelian {u2.dimension_line()}, U(a4) N=3 {us[0].dimension_line()}, orders agree: {len(dims) == 1}"


def criterion_7():
    A = builtins.get("a4")
    u = build_enveloping(derive_bracket(A), 3)
    res = extend_to_enveloping(u, A, identity(A.basis))
    ok = res.ok and res.report["g-after-psi-is-f"].passed and res.report["g-kills-ideal"].passed
    return ok, f"ideal basis of size {len(u.ideal_basis)} killed"


def criterion_8():
    bad = []
    gl = derive_bracket(builtins.get("gl(2)"))
    if _table(gl) != _matrix_table([0, 0]):
        bad.append("gl(2) bracket")
    for n, want in ((2, [1, 4, 10]), (3, [1, 4, 10, 20])):
        if build_enveloping(gl, n).degree_dims() != want:
            bad.append(f"U(gl2) N={n}")
    if _table(derive_bracket(builtins.get("superspace(1,1)"))) != _matrix_table([0, 1]):
        bad.append("super sign rule")
    for name in ["gl(2)", "superspace(1,1)"]:
        if not verify_biproduct(build_biproduct(builtins.get(name), 2)).passed:
            bad.append(f"biproduct {name}")
    return not bad, "; ".join(bad) or "commutator, U(gl2) dims, super signs, biproducts all exact"


def criterion_9():
    bad = []
    for name in builtins.names():
        text = emit(to_document(builtins.get(name)))
        if emit(parse(text)) != text:
            bad.append(f"round-trip {name}")
    old = os.environ.get("HOMKERNEL_GOLDEN_DIR")
    with tempfile.TemporaryDirectory() as d:
        os.environ["HOMKERNEL_GOLDEN_DIR"] = d
        try:
            for case in CASES:
                run_quiet(case + ["--write-golden"])
            for f in sorted(os.listdir(d)):
                with open(os.path.join(d, f), "rb") as a, open(os.path.join(PACKAGE_GOLDEN, f), "rb") as b:
                    if a.read() != b.read():
                        bad.append(f"golden {f}")
        finally:
            if old is None:
                os.environ.pop("HOMKERNEL_GOLDEN_DIR", None)
            else:
                os.environ["HOMKERNEL_GOLDEN_DIR"] = old
    codes = (run_quiet(["verify", "a4"])[0], run_quiet(["verify", "a4-broken"])[0], run_quiet(["verify", "nosuch"])[0])
    if codes != (0, 1, 2):
        bad.append(f"exit codes {codes}")
    return not bad, "; ".join(bad) or "round-trip, golden regeneration and exit codes 0/1/2 hold"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n):
    ok, detail = CRITERIA[n - 1]()
    RESULTS[n] = (ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
