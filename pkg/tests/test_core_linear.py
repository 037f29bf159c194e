import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkernel.core import (
    IN, OUT, Basis, Overflow, StructureError, Subspace, Tensor, apply, fmt, invert_map, linear_map,
    permute, rref, scalar, solve_nullspace,
)

F = Fraction


@pytest.mark.parametrize("text,value", [
    ("3", F(3)), ("-3/2", F(-3, 2)), ("−3/2", F(-3, 2)), ("2/4", F(1, 2)), ("+7", F(7)), ("0/5", F(0)),
])
def test_scalar_parses_exact_rationals(text, value):
    assert scalar(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "1_0", "3/0", "a", "", "1/-2", "nan"])
def test_scalar_rejects_malformed(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        scalar(text)


def test_fmt_lowest_terms():
    assert fmt(F(2, 4)) == "1/2"
    assert fmt(F(-6, 3)) == "-2"
    assert fmt(F(0)) == "0"


def _brute_kernel_dim(rows, n):
    # rank by hand over Q with plain Gaussian elimination on dense lists
    m = [[F(r.get(j, 0)) for j in range(n)] for r in rows]
    rank, col = 0, 0
    while rank < len(m) and col < n:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return n - rank


small = st.integers(min_value=-3, max_value=3)


@st.composite
def sparse_rows(draw, n=4):
    k = draw(st.integers(min_value=0, max_value=5))
    rows = []
    for _ in range(k):
        vals = draw(st.lists(small, min_size=n, max_size=n))
        rows.append({j: F(v) for j, v in enumerate(vals) if v})
    return rows


@settings(max_examples=60, deadline=None)
@given(sparse_rows())
def test_nullspace_vectors_are_annihilated_and_complete(rows):
    n = 4
    kern = solve_nullspace(rows, n)
    for v in kern:
        for r in rows:
            assert sum(r.get(j, 0) * v.get(j, 0) for j in range(n)) == 0
    assert len(kern) == _brute_kernel_dim(rows, n)


@settings(max_examples=60, deadline=None)
@given(sparse_rows(), st.permutations(range(4)))
def test_rref_rank_independent_of_order(rows, order):
    a = rref(rows)
    b = rref(rows, list(order))
    assert len(a) == len(b)


@settings(max_examples=40, deadline=None)
@given(sparse_rows(), sparse_rows())
def test_subspace_intersection_is_contained_in_both(r1, r2):
    B = Basis("B", ["a", "b", "c", "d"])
    U, W = Subspace(B, r1), Subspace(B, r2)
    I = U.intersect(W)
    for v in I.vectors():
        assert v in U and v in W
    # dim(U+W) + dim(U cap W) = dim U + dim W
    assert U.extend(W.vectors()).dim + I.dim == U.dim + W.dim


def test_invert_map_roundtrip():
    B = Basis("B", ["a", "b"])
    t = linear_map(B, B, {"a": {"a": 1, "b": 1}, "b": {"b": 2}})
    inv = invert_map(t)
    for i in range(2):
        x = apply(inv, apply(t, {(i,): F(1)}, (0,)), (0,))
        assert x == {(i,): F(1)}


def test_invert_map_singular():
    B = Basis("B", ["a", "b"])
    with pytest.raises(StructureError):
        invert_map(linear_map(B, B, {"a": {"a": 1}, "b": {"a": 1}}))


def test_apply_inserts_output_at_first_slot():
    B = Basis("B", ["a", "b"])
    m = Tensor(((B, IN), (B, IN), (B, OUT)), {(0, 1, 1): F(5)})
    x = {(1, 0, 0, 1): F(1)}
    assert apply(m, x, (2, 3)) == {(1, 0, 1): F(5)}


def test_apply_undefined_key_overflows():
    B = Basis("B", ["a"])
    m = Tensor(((B, IN), (B, IN), (B, OUT)), {}, frozenset({(0, 0)}))
    with pytest.raises(Overflow):
        apply(m, {(0, 0): F(1)}, (0, 1))


def test_permute_moves_factors():
    x = {(0, 1, 2): F(1)}
    assert permute(x, (2, 0, 1)) == {(2, 0, 1): F(1)}


def test_every_triple_of_basis_indices_round_trips_through_permute():
    for p in itertools.permutations(range(3)):
        inv = [p.index(i) for i in range(3)]
        x = {(0, 1, 2): F(1)}
        assert permute(permute(x, p), inv) == x
