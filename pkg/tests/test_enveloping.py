from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkernel import builtins
from homkernel.core import IN, OUT, Tensor, apply, identity
from homkernel.enveloping import (
    MONOMIAL_ORDERS, DegreeTooSmall, NotInvolutive, build_enveloping, check_braided_hopf,
    extend_to_enveloping, verify_enveloping_hopf,
)
from homkernel.lie import BraidedLiePresentation, derive_bracket
from homkernel.yd import YDModulePresentation

F = Fraction


def sym_dims(d, n):
    return [comb(d + k - 1, k) for k in range(n + 1)]


def super_dims(p, q, n):
    # coefficients of (1 - t)^-p (1 + t)^q
    even = [comb(p + k - 1, k) for k in range(n + 1)]
    odd = [comb(q, k) for k in range(n + 1)]
    return [sum(even[i] * odd[k - i] for i in range(k + 1)) for k in range(n + 1)]


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_abelian_dims_are_symmetric_algebra(d, n):
    u = build_enveloping(builtins.get(f"triv-abelian({d})"), n)
    assert u.degree_dims() == sym_dims(d, n)


def test_abelian_two_at_degree_two_line():
    assert build_enveloping(builtins.get("triv-abelian(2)"), 2).dimension_line() == "1+2+3=6"


@pytest.mark.parametrize("name,want", [
    ("a4", sym_dims(4, 3)), ("gl(2)", sym_dims(4, 3)), ("ut2", sym_dims(3, 3)),
    ("superspace(1,1)", super_dims(2, 2, 3)),
])
def test_pbw_dims(name, want):
    u = build_enveloping(derive_bracket(builtins.get(name)), 3)
    assert u.degree_dims() == want


def test_super_dims_oracle_sanity():
    assert super_dims(2, 2, 3) == [1, 4, 8, 12]


@pytest.mark.parametrize("name", ["a4", "superspace(1,1)", "ut2"])
def test_orders_agree_on_dimensions(name):
    l = derive_bracket(builtins.get(name))
    dims = {o: build_enveloping(l, 3, o).degree_dims() for o in MONOMIAL_ORDERS}
    assert len(set(map(tuple, dims.values()))) == 1


def test_orders_pick_different_normal_words():
    l = builtins.get("triv-abelian(2)")
    a, b = (build_enveloping(l, 2, o).normal_words for o in MONOMIAL_ORDERS)
    assert a != b and len(a) == len(b)


@pytest.mark.parametrize("name,n", [("a4", 2), ("a4", 3), ("gl(2)", 2), ("superspace(1,1)", 2), ("ut2", 2)])
def test_enveloping_is_braided_hopf(name, n):
    u = build_enveloping(derive_bracket(builtins.get(name)), n)
    rep = verify_enveloping_hopf(u)
    assert rep.passed, rep.human()
    assert rep["h-cocommutative"].passed


def test_abelian_enveloping_hopf_and_stability_note():
    u = build_enveloping(builtins.get("triv-abelian(2)"), 3)
    assert verify_enveloping_hopf(u).passed
    assert u.ideal.stability_implied


def test_delta_on_degree_two_by_hand():
    # trivial H: Delta(l0 l1) = l0l1 (x) 1 + l0 (x) l1 + l1 (x) l0 + 1 (x) l0l1
    u = build_enveloping(builtins.get("triv-abelian(2)"), 2)
    A = u.algebra
    p0, p1 = u.psi(0), u.psi(1)
    prod = A.mul({k0 + k1: c0 * c1 for k0, c0 in p0.items() for k1, c1 in p1.items()}, 0, 1)
    assert len(prod) == 1
    (w,), c = next(iter(prod.items()))
    assert c == 1
    (i0,), (i1,) = next(iter(p0)), next(iter(p1))
    want = {(w, 0): F(1), (i0, i1): F(1), (i1, i0): F(1), (0, w): F(1)}
    assert apply(A.delta, prod, (0,)) == want


def test_generators_are_primitive_up_to_twist():
    u = build_enveloping(derive_bracket(builtins.get("a4")), 2)
    A = u.algebra
    x = u.psi(u.tensor.letters.index("x"))
    (i,), _ = next(iter(x.items()))
    # beta(x) = -x, so Delta(x) = -x (x) 1 - 1 (x) x
    assert apply(A.delta, x, (0,)) == {(i, 0): F(-1), (0, i): F(-1)}


def test_check_braided_hopf_on_document_form():
    from homkernel.document import emit, parse, to_document

    u = build_enveloping(derive_bracket(builtins.get("a4")), 2)
    again = parse(emit(to_document(u.algebra, "enveloping"))).build()
    assert check_braided_hopf(again).passed


def test_degree_too_small():
    with pytest.raises(DegreeTooSmall):
        build_enveloping(builtins.get("triv-abelian(2)"), 1)


def test_non_involutive_twist_refused():
    l = builtins.get("triv-abelian(2)")
    M = l.module
    beta = Tensor(M.beta.axes, {(0, 0): F(2), (1, 1): F(1)})
    act = Tensor(M.action.axes, {(0, 0, 0): F(2), (0, 1, 1): F(1)})
    M2 = YDModulePresentation(M.hopf, M.basis, act, M.coaction, beta, name="scaled")
    with pytest.raises(NotInvolutive):
        build_enveloping(BraidedLiePresentation(M2, l.bracket), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_extension_of_identity_on_a4(n):
    A = builtins.get("a4")
    u = build_enveloping(derive_bracket(A), n)
    f = identity(A.basis)
    res = extend_to_enveloping(u, A, f)
    assert res.ok, res.report.human()
    for l in range(len(u.tensor.letters)):
        assert apply(res.g, u.psi(l), (0,)) == {(l,): F(1)}
    # independently: evaluate every ideal vector by left-nested products in A
    for v in u.ideal_basis:
        total = {}
        for w, c in v.items():
            acc = {(w[0],): F(1)}
            for letter in w[1:]:
                acc = A.mul({k + (letter,): a for k, a in acc.items()}, 0, 1)
            for k, a in acc.items():
                total[k] = total.get(k, 0) + c * a
        assert not {k: a for k, a in total.items() if a}


def test_extension_refuses_non_morphism():
    A = builtins.get("a4")
    u = build_enveloping(derive_bracket(A), 2)
    f = Tensor(((A.basis, IN), (A.basis, OUT)), {(i, i): F(2) for i in range(4)})
    res = extend_to_enveloping(u, A, f)
    assert res.g is None
    assert "f-bracket-preserving" in res.report.failed()


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_projection_ignores_ideal(data):
    u = build_enveloping(derive_bracket(builtins.get("a4")), 2)
    words = u.tensor.words
    x = {words[i]: F(data.draw(st.integers(-3, 3))) for i in
         data.draw(st.lists(st.integers(0, len(words) - 1), max_size=5, unique=True))}
    x = {w: c for w, c in x.items() if c}
    ib = u.ideal_basis
    j = data.draw(st.integers(0, len(ib) - 1))
    c = F(data.draw(st.integers(-3, 3)))
    y = dict(x)
    for w, a in ib[j].items():
        y[w] = y.get(w, 0) + c * a
    y = {w: a for w, a in y.items() if a}
    assert u.project(x) == u.project(y)
