from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkernel import builtins
from homkernel.builtins import superspace_module
from homkernel.core import IN, OUT, Basis, Tensor, basis_elem, identity
from homkernel.yd import (
    YDModulePresentation, braiding, check_braiding_symmetric, check_hom_comodule, check_hom_module,
    check_yd_algebra, check_yd_compatibility, check_yd_module,
)
from homkernel.yd import braiding_elem

from test_hom_hopf import twisted_group_algebra


def test_a4_is_yd_algebra():
    A = builtins.get("a4")
    assert check_yd_module(A).passed
    assert check_yd_algebra(A).passed


def test_a4_braiding_is_the_flip():
    # coaction a -> 1 (x) beta(a), 1 acts as beta, beta^2 = id: C(a (x) b) = b (x) a
    A = builtins.get("a4")
    n = A.basis.dim
    for a in range(n):
        for b in range(n):
            assert braiding_elem(A, A, basis_elem(a, b)) == {(b, a): 1}


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_superspace_braiding_follows_sign_rule(p, q):
    if p + q == 0:
        return
    V = superspace_module(p, q)
    assert check_yd_module(V).passed
    assert check_braiding_symmetric(V).passed
    par = [0] * p + [1] * q
    for i in range(p + q):
        for j in range(p + q):
            sign = -1 if par[i] and par[j] else 1
            assert braiding_elem(V, V, basis_elem(i, j)) == {(j, i): sign}


def test_braiding_matrix_matches_elementwise():
    V = superspace_module(1, 1)
    C = braiding(V, V)
    for i in range(2):
        for j in range(2):
            row = {k[2:]: c for k, c in C.entries.items() if k[:2] == (i, j)}
            assert row == braiding_elem(V, V, basis_elem(i, j))


def _rotation_module() -> YDModulePresentation:
    """2-dim module over k[Z/3], generator acting by a matrix of order 3, all
    vectors of degree g1.  The braiding squares to g1 . - (x) g1 . -, not the identity."""
    H = twisted_group_algebra(3, 1)
    V = Basis("V", ["a", "b"])
    one = Fraction(1)
    rot = {(0, 1): one, (1, 0): -one, (1, 1): -one}  # a -> b, b -> -a - b
    act = {}
    for g in range(3):
        mat = {(0, 0): one, (1, 1): one}
        for _ in range(g):
            nxt = {}
            for (i, j), c in mat.items():
                for (jj, k), d in rot.items():
                    if jj == j:
                        nxt[(i, k)] = nxt.get((i, k), 0) + c * d
            mat = {k: v for k, v in nxt.items() if v}
        for (i, k), c in mat.items():
            act[(g, i, k)] = c
    action = Tensor(((H.basis, IN), (V, IN), (V, OUT)), act)
    coaction = Tensor(((V, IN), (H.basis, OUT), (V, OUT)), {(0, 1, 0): one, (1, 1, 1): one})
    return YDModulePresentation(H, V, action, coaction, identity(V), name="rot3")


def test_rotation_module_is_yd_but_braiding_not_symmetric():
    V = _rotation_module()
    assert check_hom_module(V).passed
    assert check_hom_comodule(V).passed
    assert check_yd_compatibility(V).passed
    assert not check_braiding_symmetric(V).passed


def test_adjoint_h2_defect_is_comodule_algebra_only():
    A = builtins.get("adjoint(h2)")
    assert check_yd_module(A).passed
    assert check_yd_algebra(A).failed() == ["comodule-algebra"]


def test_coadjoint_h2_defect_is_module_algebra_only():
    A = builtins.get("coadjoint(h2)")
    assert check_yd_module(A).passed
    assert check_yd_algebra(A).failed() == ["module-algebra", "module-algebra-unit"]


@pytest.mark.parametrize("name", ["ut2", "triv(1)", "triv(2)", "gl(2)", "superspace(1,1)"])
def test_yd_algebra_builtins(name):
    A = builtins.get(name)
    assert check_yd_module(A).passed
    assert check_yd_algebra(A).passed
