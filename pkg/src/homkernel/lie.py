"""Braided Hom-Lie algebras in the Hom-Yetter-Drinfeld category.

The derived bracket of a Yetter-Drinfeld algebra ``A`` is
``[a, b] = ab - m(C(a (x) b))``; it is a braided Hom-Lie bracket whenever
the braiding is symmetric on ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    IN, OUT, Basis, Elem, StructureError, Subspace, Tensor, add, apply, basis_elem,
    map_tensor, permute, scale, solve_nullspace, tensor_elems,
)
from .report import DEFAULT_WITNESS_CAP, Checker, Report, labels, show
from .yd import (
    BraidingNotSymmetric, YDAlgebraPresentation, YDModulePresentation, act_tensor,
    braiding_elem, check_braiding_symmetric, check_h_commutative, check_yd_algebra, coact_tensor,
)

__all__ = [
    "BraidedLiePresentation", "NotInvariant", "SubspacePresentation", "bracket_elem",
    "derive_bracket", "verify_braided_lie", "check_leibniz_identities", "invariants", "center",
    "check_h_ideal", "commutator_ideal", "check_commutator_square", "check_adjoint_identities",
]

SubspacePresentation = Subspace


class NotInvariant(ValueError):
    pass


@dataclass(eq=False)
class BraidedLiePresentation:
    module: YDModulePresentation
    bracket: Tensor
    source: Optional[YDAlgebraPresentation] = None
    notes: list = field(default_factory=list)
    preconditions: Optional[Report] = None

    def __post_init__(self):
        L = self.module.basis
        want = [(L.labels, IN), (L.labels, IN), (L.labels, OUT)]
        if [(b.labels, v) for b, v in self.bracket.axes] != want:
            raise StructureError("bracket must be a map L (x) L -> L")

    hopf = property(lambda self: self.module.hopf)
    basis = property(lambda self: self.module.basis)
    beta = property(lambda self: self.module.beta)
    beta_inv = property(lambda self: self.module.beta_inv)
    action = property(lambda self: self.module.action)
    coaction = property(lambda self: self.module.coaction)
    name = property(lambda self: self.module.name)
    origin = property(lambda self: self.module.origin)

    def act(self, x, h, m):
        return self.module.act(x, h, m)

    def coact(self, x, i):
        return self.module.coact(x, i)

    def br(self, x: Elem, i: int, j: int) -> Elem:
        return apply(self.bracket, x, (i, j))


def bracket_elem(A: YDAlgebraPresentation, x: Elem, i: int = 0) -> Elem:
    """``ab - (a_(-1) . beta^-1(b)) beta(a_0)`` on factors ``i, i+1``."""
    return add(A.mul(x, i, i + 1), (-1, A.mul(braiding_elem(A, A, x, i), i, i + 1)))


def derive_bracket(A: YDAlgebraPresentation) -> BraidedLiePresentation:
    """Derived bracket of a Yetter-Drinfeld algebra with symmetric braiding.

    A non-symmetric braiding raises.  The algebra-in-the-category identities
    are checked too; their report is kept on the result as ``preconditions``
    so callers can tell a bracket built on a defective source apart.
    """
    sym = check_braiding_symmetric(A)
    if not sym.passed:
        w = sym.axioms[0].witnesses[0].line() if sym.axioms[0].witnesses else ""
        raise BraidingNotSymmetric(f"braiding is not symmetric on {A.name}: {w}")
    L = A.basis
    br = map_tensor([L, L], [L], lambda k: bracket_elem(A, basis_elem(*k)))
    pre = check_yd_algebra(A)
    pre.merge(sym)
    out = BraidedLiePresentation(A, br, source=A, preconditions=pre)
    if not pre.passed:
        out.notes.append(f"source {A.name} fails {', '.join(pre.failed())}")
    return out


def verify_braided_lie(l: BraidedLiePresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    M = l.module
    H = l.hopf
    Hb, Lb = H.basis, l.basis
    n = Lb.dim
    rep = Report(f"braided-lie {l.name}".strip())
    twist = Checker(rep, "bracket-commutes-with-twist", [Lb], cap)
    lin = Checker(rep, "bracket-h-linear", [Lb], cap)
    colin = Checker(rep, "bracket-h-colinear", [Hb, Lb], cap)
    skew = Checker(rep, "braided-skew-symmetry", [Lb], cap)
    jac = Checker(rep, "braided-hom-jacobi", [Lb], cap)
    for a, b in itertools.product(range(n), repeat=2):
        x = basis_elem(a, b)
        inp = labels([Lb, Lb], (a, b))
        twist.check(inp, lambda: apply(l.beta, l.br(x, 0, 1), (0,)),
                    lambda: l.br(apply(l.beta, apply(l.beta, x, (0,)), (1,)), 0, 1))
        colin.check(inp, lambda: l.coact(l.br(x, 0, 1), 0), lambda: l.br(coact_tensor(M, M, x), 1, 2))
        skew.check(inp, lambda: l.br(x, 0, 1), lambda: scale(-1, l.br(braiding_elem(M, M, x), 0, 1)))
    for h, a, b in itertools.product(range(Hb.dim), range(n), range(n)):
        x = basis_elem(h, a, b)
        lin.check(labels([Hb, Lb, Lb], (h, a, b)), lambda: l.act(l.br(x, 1, 2), 0, 1),
                  lambda: l.br(act_tensor(M, M, x), 0, 1))

    def curly(t: Elem) -> Elem:
        return l.br(apply(l.beta, l.br(t, 1, 2), (0,)), 0, 1)

    for a, b, c in itertools.product(range(n), repeat=3):
        t = basis_elem(a, b, c)
        t1 = braiding_elem(M, M, braiding_elem(M, M, t, 1), 0)
        t2 = braiding_elem(M, M, braiding_elem(M, M, t, 0), 1)
        jac.check(labels([Lb] * 3, (a, b, c)), lambda: add(curly(t), curly(t1), curly(t2)))
    return rep


def _derived(l) -> YDAlgebraPresentation:
    A = l.source if isinstance(l, BraidedLiePresentation) else l
    if A is None:
        raise StructureError("identity check needs the source algebra of a derived bracket")
    return A


def check_leibniz_identities(l, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Both braided Leibniz rules of the derived bracket, on all basis triples."""
    A = _derived(l)
    H = A.hopf
    Ab = A.basis
    n = Ab.dim
    rep = Report(f"leibniz {A.name}".strip())
    left = Checker(rep, "leibniz-left", [Ab], cap)
    right = Checker(rep, "leibniz-right", [Ab], cap)

    def br(x, i):
        return bracket_elem(A, x, i)

    for a, b, c in itertools.product(range(n), repeat=3):
        x = basis_elem(a, b, c)
        inp = labels([Ab] * 3, (a, b, c))

        def left_rhs():
            t1 = A.mul(apply(A.beta, br(x, 0), (1,)), 0, 1)
            y = A.coact(x, 0)  # (h, a0, b, c)
            y = apply(H.alpha, y, (0,))
            y = A.act(permute(y, (0, 2, 1, 3)), 0, 1)  # (h.b, a0, c)
            y = br(apply(A.beta, y, (1,)), 1)
            return add(t1, A.mul(y, 0, 1))

        left.check(inp, lambda: br(A.mul(apply(A.beta, x, (0,)), 1, 2), 0), left_rhs)

        def right_rhs():
            t1 = A.mul(apply(A.beta, br(x, 1), (0,)), 0, 1)
            y = A.coact(x, 1)  # (a, h, b0, c)
            y = apply(A.beta_inv, y, (3,))
            y = A.act(permute(y, (0, 1, 3, 2)), 1, 2)  # (a, h.c', b0)
            y = br(y, 0)
            y = apply(A.beta, apply(A.beta, y, (1,)), (1,))
            return add(t1, A.mul(y, 0, 1))

        right.check(inp, lambda: br(apply(A.beta, A.mul(x, 0, 1), (1,)), 0), right_rhs)
    return rep


# ---------------------------------------------------------------- subspaces


def invariants(M: YDModulePresentation) -> Subspace:
    """Solutions of ``h . a = eps(h) a`` for every basis ``h``."""
    H = M.hopf
    n = M.basis.dim
    rows = []
    for h in range(H.basis.dim):
        eps = apply(H.counit, basis_elem(h), (0,)).get((), Fraction(0))
        cols = [add(M.act(basis_elem(h, a), 0, 1), (-eps, basis_elem(a))) for a in range(n)]
        for k in range(n):
            r = {a: cols[a].get((k,), 0) for a in range(n)}
            rows.append({a: v for a, v in r.items() if v})
    return Subspace(M.basis, solve_nullspace(rows, n))


def center(l: BraidedLiePresentation) -> Subspace:
    """Kernel of ``z -> ([z, b_1], ..., [z, b_d])``."""
    n = l.basis.dim
    rows = []
    for b in range(n):
        cols = [l.br(basis_elem(z, b), 0, 1) for z in range(n)]
        for k in range(n):
            r = {z: cols[z].get((k,), 0) for z in range(n)}
            rows.append({z: v for z, v in r.items() if v})
    return Subspace(l.basis, solve_nullspace(rows, n))


def _vec(v) -> Elem:
    return {(k,): c for k, c in v.items()}


def _unvec(x: Elem) -> dict:
    return {k[0]: c for k, c in x.items()}


def check_h_ideal(U: Subspace, l, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """H-stable, H-costable, twist-stable and ``[U, L] in U``."""
    Hb, Lb = l.hopf.basis, l.basis
    rep = Report("h-lie-ideal")
    stab = Checker(rep, "h-stable", [Lb], cap)
    costab = Checker(rep, "h-costable", [Lb], cap)
    tw = Checker(rep, "twist-stable", [Lb], cap)
    br = Checker(rep, "bracket-absorbing", [Lb], cap)
    bracket = (lambda x: l.br(x, 0, 1)) if isinstance(l, BraidedLiePresentation) else (lambda x: bracket_elem(l, x))

    def member(chk, inp, v: Elem):
        u = _unvec(v)
        if u in U:
            chk.ok()
        else:
            chk.fail(inp, show(v, [Lb]), "element of U")

    for i, u in enumerate(U.vectors()):
        x = _vec(u)
        tag = f"u{i}"
        for h in range(Hb.dim):
            member(stab, (Hb.labels[h], tag), l.act(tensor_elems(basis_elem(h), x), 0, 1))
        r = l.coact(x, 0)
        for h in range(Hb.dim):
            member(costab, (tag, Hb.labels[h]), {(k[1],): c for k, c in r.items() if k[0] == h})
        member(tw, (tag,), apply(l.beta, x, (0,)))
        for b in range(Lb.dim):
            member(br, (tag, Lb.labels[b]), bracket(tensor_elems(x, basis_elem(b))))
    return rep


def commutator_ideal(A: YDAlgebraPresentation) -> Subspace:
    n = A.basis.dim
    vecs = [_unvec(bracket_elem(A, basis_elem(a, b))) for a, b in itertools.product(range(n), repeat=2)]
    return Subspace(A.basis, vecs)


def check_commutator_square(A: YDAlgebraPresentation, X: Subspace, Y: Subspace,
                           cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """``[A,A][A,A] = 0`` for ``A = X + Y`` with H-commutative subalgebras X, Y."""
    Ab = A.basis
    rep = Report(f"commutator-square {A.name}".strip())
    for tag, S in (("X", X), ("Y", Y)):
        closed = Checker(rep, f"{tag}-subalgebra", [Ab], cap, precondition=True)
        vs = S.vectors()
        for (i, u), (j, w) in itertools.product(list(enumerate(vs)), repeat=2):
            p = A.mul(tensor_elems(_vec(u), _vec(w)), 0, 1)
            if _unvec(p) in S:
                closed.ok()
            else:
                closed.fail((f"{tag}{i}", f"{tag}{j}"), show(p, [Ab]), f"element of {tag}")
        for i, u in enumerate(vs):
            p = apply(A.beta, _vec(u), (0,))
            if _unvec(p) in S:
                closed.ok()
            else:
                closed.fail((f"beta({tag}{i})",), show(p, [Ab]), f"element of {tag}")
        sub = check_h_commutative(A, cap, vectors=vs)
        res = sub.axioms[0]
        res.name = f"{tag}-h-commutative"
        rep.preconditions.append(res)
    span = Checker(rep, "X+Y-spans", [Ab], cap, precondition=True)
    total = X.extend(Y.vectors())
    if total.dim == Ab.dim:
        span.ok()
    else:
        span.fail(("X", "Y"), f"dim {total.dim}", f"dim {Ab.dim}")
    sym = check_braiding_symmetric(A, cap).axioms[0]
    sym.name = "braiding-symmetric"
    rep.preconditions.append(sym)

    inter = X.intersect(Y)
    comp_vecs = []
    for v in Y.vectors():
        if _unvec(_vec(v)) not in inter.extend(comp_vecs):
            comp_vecs.append(v)
    rep.notes.append(
        f"splitting: dim(X^Y)={inter.dim}; Y-part taken in complement spanned by "
        + ("; ".join(show(_vec(v), [Ab]) for v in comp_vecs) or "0")
    )
    if not rep.preconditions_passed:
        rep.notes.append("preconditions failed; conclusion not evaluated")
        return rep
    C = commutator_ideal(A)
    concl = Checker(rep, "commutator-square-zero", [Ab], cap)
    cv = C.vectors()
    for (i, u), (j, w) in itertools.product(list(enumerate(cv)), repeat=2):
        concl.check((f"c{i}", f"c{j}"), lambda: A.mul(tensor_elems(_vec(u), _vec(w)), 0, 1))
    if concl.result.passed:
        rep.notes.append(f"commutator span (dim {C.dim}) squares to zero, hence is nilpotent")
    return rep


def check_adjoint_identities(l, x: dict, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Identities of ``ad_x`` for a twist-fixed invariant ``x``.

    ``x`` is a coordinate dict ``{index: value}`` on the basis of the algebra.
    """
    A = _derived(l)
    Ab = A.basis
    n = Ab.dim
    xv = _vec(x)
    if _unvec(xv) not in invariants(A) or apply(A.beta, xv, (0,)) != xv:
        raise NotInvariant(f"{show(xv, [Ab])} is not a twist-fixed invariant")
    rep = Report(f"adjoint-identities {A.name} x={show(xv, [Ab])}")
    c1 = Checker(rep, "braiding-trivial-on-x", [Ab], cap)
    c2 = Checker(rep, "ad-is-commutator", [Ab], cap)
    c3 = Checker(rep, "ad-derivation", [Ab], cap)
    c4 = Checker(rep, "ad-squared-rule", [Ab], cap)

    def ad(y: Elem) -> Elem:
        return bracket_elem(A, tensor_elems(xv, y))

    def b(y: Elem, k: int = 1) -> Elem:
        for _ in range(k):
            y = apply(A.beta, y, (0,))
        return y

    def mul(u: Elem, w: Elem) -> Elem:
        return A.mul(tensor_elems(u, w), 0, 1)

    for y in range(n):
        ye = basis_elem(y)
        inp = (Ab.labels[y],)
        c1.check(inp, lambda: braiding_elem(A, A, tensor_elems(xv, ye)), lambda: tensor_elems(ye, xv))
        c1.check(inp, lambda: braiding_elem(A, A, tensor_elems(ye, xv)), lambda: tensor_elems(xv, ye))
        c2.check(inp, lambda: ad(ye), lambda: add(mul(xv, ye), (-1, mul(ye, xv))))
    for y, z in itertools.product(range(n), repeat=2):
        ye, ze = basis_elem(y), basis_elem(z)
        inp = labels([Ab, Ab], (y, z))
        yz = mul(ye, ze)
        c3.check(inp, lambda: ad(yz), lambda: add(mul(ad(ye), b(ze)), mul(b(ye), ad(ze))))
        c4.check(
            inp,
            lambda: ad(ad(yz)),
            lambda: add(mul(ad(ad(ye)), b(ze, 2)), (2, b(mul(ad(ye), ad(ze)))), mul(b(ye, 2), ad(ad(ze)))),
        )
    return rep
