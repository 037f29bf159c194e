from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkernel import builtins
from homkernel.core import IN, OUT, Basis, NotInvertible, Tensor
from homkernel.hopf import (
    AlgebraPresentation, HopfPresentation, check_hom_algebra, check_hom_coalgebra, check_hom_hopf,
)


def twisted_group_algebra(n: int, k: int) -> HopfPresentation:
    """k[Z/n] with a * b = alpha(ab), Delta = (alpha^-1 x alpha^-1) Delta_0, alpha(g) = g^k.

    Independent of the library's own examples: the Hom structure is obtained
    by twisting an ordinary Hopf algebra along a group automorphism.
    """
    B = Basis("G", [f"g{i}" for i in range(n)])
    kinv = pow(k, -1, n)
    one = Fraction(1)
    m = {(a, b, (k * (a + b)) % n): one for a in range(n) for b in range(n)}
    d = {(a, (kinv * a) % n, (kinv * a) % n): one for a in range(n)}
    return HopfPresentation(
        B,
        Tensor(((B, IN), (B, IN), (B, OUT)), m),
        Tensor(((B, OUT),), {(0,): one}),
        Tensor(((B, IN), (B, OUT), (B, OUT)), d),
        Tensor(((B, IN),), {(a,): one for a in range(n)}),
        Tensor(((B, IN), (B, OUT)), {(a, (k * a) % n): one for a in range(n)}),
        Tensor(((B, IN), (B, OUT)), {(a, (-a) % n): one for a in range(n)}),
        name=f"Z{n}^{k}",
    )


@st.composite
def group_twists(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    k = draw(st.sampled_from([k for k in range(1, n) if gcd(k, n) == 1]))
    return n, k


@settings(max_examples=25, deadline=None)
@given(group_twists())
def test_twisted_group_algebras_are_hom_hopf(nk):
    rep = check_hom_hopf(twisted_group_algebra(*nk))
    assert rep.passed, rep.human()


@settings(max_examples=25, deadline=None)
@given(group_twists(), st.data())
def test_breaking_one_product_constant_breaks_associativity(nk, data):
    n, k = nk
    if n < 3:
        return
    H = twisted_group_algebra(n, k)
    a = data.draw(st.integers(min_value=1, max_value=n - 1))
    b = data.draw(st.integers(min_value=1, max_value=n - 1))
    ent = dict(H.m.entries)
    key = (a, b, (k * (a + b)) % n)
    ent[key] = Fraction(2)
    A = AlgebraPresentation(H.basis, Tensor(H.m.axes, ent), H.unit, H.alpha)
    assert not check_hom_algebra(A).passed


@pytest.mark.parametrize("name", ["k", "z2"])
def test_untwisted_builtins_pass(name):
    assert check_hom_hopf(builtins.get(name)).passed


def test_h2_algebra_and_coalgebra_axioms_hold():
    H = builtins.get("h2")
    assert check_hom_algebra(H).passed
    assert check_hom_coalgebra(H).passed


def test_h2_delta_not_multiplicative_on_h_h():
    # h.h = 0, but Delta(h) Delta(h) = (h x 1 + 1 x h)^2 = 2 h x h by hand
    rep = check_hom_hopf(builtins.get("h2"))
    assert rep.failed() == ["delta-multiplicative"]
    ax = rep["delta-multiplicative"]
    assert ax.failures == 1
    w = ax.witnesses[0]
    assert w.inputs == ("h", "h")
    assert w.lhs == "0"
    assert w.rhs == "2*h(x)h"


def test_singular_antipode_rejected_unless_lenient():
    H = twisted_group_algebra(3, 1)
    S = Tensor(H.antipode.axes, {(0, 0): Fraction(1)})
    args = (H.basis, H.m, H.unit, H.delta, H.counit, H.alpha, S)
    with pytest.raises(NotInvertible):
        HopfPresentation(*args)
    lenient = HopfPresentation(*args, strict_antipode=False)
    assert lenient.antipode_inv is None
    assert not check_hom_hopf(lenient).passed


def test_witness_cap_limits_reported_instances():
    H = twisted_group_algebra(5, 2)
    ent = {k: 2 * v for k, v in H.m.entries.items()}
    A = AlgebraPresentation(H.basis, Tensor(H.m.axes, ent), H.unit, H.alpha)
    rep = check_hom_algebra(A, cap=2)
    # scaling m by 2 keeps associativity but breaks a * 1 = alpha(a) everywhere
    assert rep["hom-associativity"].passed
    assert rep["right-unit"].failures == 5
    assert len(rep["right-unit"].witnesses) == 2
