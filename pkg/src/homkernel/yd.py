"""Hom-modules, Hom-comodules and Hom-Yetter-Drinfeld modules.

All objects are left-left: ``h . m`` for the action and
``m -> m_(-1) (x) m_0`` for the coaction, over a shared
:class:`~homkernel.hopf.HopfPresentation`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    IN, OUT, Basis, Elem, StructureError, Tensor, apply, basis_elem, invert_map,
    map_tensor, permute, tensor_elems,
)
from .hopf import HopfPresentation, expect_axes, unit_elem, apply_map_twice_is_identity
from .report import DEFAULT_WITNESS_CAP, Checker, Report, labels

__all__ = [
    "YDModulePresentation", "YDAlgebraPresentation", "BraidingNotSymmetric",
    "check_hom_module", "check_hom_comodule", "check_yd_compatibility", "braiding",
    "check_braiding_symmetric", "check_h_commutative", "check_h_cocommutative",
    "check_yd_algebra", "check_yd_module",
]


class BraidingNotSymmetric(ValueError):
    pass


@dataclass(eq=False)
class YDModulePresentation:
    hopf: HopfPresentation
    basis: Basis
    action: Tensor
    coaction: Tensor
    beta: Tensor
    name: str = ""
    origin: str = ""
    grading: Optional[tuple] = None
    max_degree: Optional[int] = None

    def __post_init__(self):
        H, M = self.hopf.basis, self.basis
        expect_axes(self.action, "action", [(H, IN), (M, IN), (M, OUT)])
        expect_axes(self.coaction, "coaction", [(M, IN), (H, OUT), (M, OUT)])
        expect_axes(self.beta, "beta", [(M, IN), (M, OUT)])
        self.beta_inv = invert_map(self.beta)

    @property
    def involutive(self) -> bool:
        return apply_map_twice_is_identity(self.beta)

    # element helpers; ``x`` is a tensor element, slots index its factors
    def act(self, x: Elem, hslot: int, mslot: int) -> Elem:
        return apply(self.action, x, (hslot, mslot))

    def coact(self, x: Elem, slot: int) -> Elem:
        return apply(self.coaction, x, (slot,))


@dataclass(eq=False)
class YDAlgebraPresentation(YDModulePresentation):
    """A YD module that is also a monoidal Hom-algebra with twist ``beta``.

    The optional ``delta``/``counit``/``antipode`` make it a Hopf algebra in
    the Yetter-Drinfeld category (enveloping algebras, ``triv``).
    """

    m: Tensor = None
    unit: Tensor = None
    delta: Optional[Tensor] = None
    counit: Optional[Tensor] = None
    antipode: Optional[Tensor] = None

    def __post_init__(self):
        super().__post_init__()
        M = self.basis
        if self.m is None or self.unit is None:
            raise StructureError("yd-algebra needs m and unit")
        expect_axes(self.m, "m", [(M, IN), (M, IN), (M, OUT)])
        expect_axes(self.unit, "unit", [(M, OUT)])
        if self.delta is not None:
            expect_axes(self.delta, "delta", [(M, IN), (M, OUT), (M, OUT)])
            expect_axes(self.counit, "counit", [(M, IN)])
        if self.antipode is not None:
            expect_axes(self.antipode, "antipode", [(M, IN), (M, OUT)])

    # views used by the generic Hom-(co)algebra checkers
    alpha = property(lambda self: self.beta)
    alpha_inv = property(lambda self: self.beta_inv)
    gamma = property(lambda self: self.beta)
    gamma_inv = property(lambda self: self.beta_inv)

    def mul(self, x: Elem, i: int, j: int) -> Elem:
        return apply(self.m, x, (i, j))

    def as_hopf(self) -> HopfPresentation:
        if self.delta is None:
            raise StructureError(f"{self.name or 'object'} has no coalgebra structure")
        return HopfPresentation(
            self.basis, self.m, self.unit, self.delta, self.counit, self.beta,
            self.antipode, name=self.name, origin=self.origin,
        )


def same_hopf(m: YDModulePresentation, n: YDModulePresentation) -> None:
    if not m.hopf.same_as(n.hopf):
        raise StructureError("modules are over different Hopf algebras")


# ---------------------------------------------------------------- tensor-product structure


def act_tensor(M: YDModulePresentation, N: YDModulePresentation, x: Elem) -> Elem:
    """Diagonal action on (h, m, n): ``h1 . m (x) h2 . n``."""
    y = apply(M.hopf.delta, x, (0,))  # (h1, h2, m, n)
    y = M.act(permute(y, (0, 2, 1, 3)), 0, 1)  # (h1.m, h2, n)
    return N.act(y, 1, 2)


def coact_tensor(M: YDModulePresentation, N: YDModulePresentation, x: Elem) -> Elem:
    """Codiagonal coaction on (m, n): ``m_(-1) n_(-1) (x) m_0 (x) n_0``."""
    y = N.coact(M.coact(x, 0), 2)  # (hm, m0, hn, n0)
    return apply(M.hopf.m, permute(y, (0, 2, 1, 3)), (0, 1))


def twist_tensor(M: YDModulePresentation, N: YDModulePresentation, x: Elem) -> Elem:
    return apply(N.beta, apply(M.beta, x, (0,)), (1,))


# ---------------------------------------------------------------- checkers


def check_hom_module(M: YDModulePresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    H = M.hopf
    Hb, Mb = H.basis, M.basis
    rep = Report(f"hom-module {M.name}".strip())
    assoc = Checker(rep, "module-hom-associativity", [Mb], cap)
    unit = Checker(rep, "module-unit", [Mb], cap)
    twist = Checker(rep, "module-twist-compatible", [Mb], cap)
    one = unit_elem(H.unit)
    for a, b, v in itertools.product(range(Hb.dim), range(Hb.dim), range(Mb.dim)):
        x = basis_elem(a, b, v)
        assoc.check(
            labels([Hb, Hb, Mb], (a, b, v)),
            lambda: M.act(apply(H.alpha, M.act(x, 1, 2), (0,)), 0, 1),
            lambda: M.act(apply(M.beta, apply(H.m, x, (0, 1)), (1,)), 0, 1),
        )
    for a, v in itertools.product(range(Hb.dim), range(Mb.dim)):
        x = basis_elem(a, v)
        twist.check(
            labels([Hb, Mb], (a, v)),
            lambda: apply(M.beta, M.act(x, 0, 1), (0,)),
            lambda: M.act(apply(M.beta, apply(H.alpha, x, (0,)), (1,)), 0, 1),
        )
    for v in range(Mb.dim):
        e = basis_elem(v)
        unit.check((Mb.labels[v],), lambda: M.act(tensor_elems(one, e), 0, 1), lambda: apply(M.beta, e, (0,)))
    return rep


def check_hom_comodule(M: YDModulePresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    H = M.hopf
    Hb, Mb = H.basis, M.basis
    rep = Report(f"hom-comodule {M.name}".strip())
    coassoc = Checker(rep, "comodule-hom-coassociativity", [Hb, Hb, Mb], cap)
    twist = Checker(rep, "comodule-twist-compatible", [Hb, Mb], cap)
    counit = Checker(rep, "comodule-counit", [Mb], cap)
    for v in range(Mb.dim):
        e = basis_elem(v)
        inp = (Mb.labels[v],)
        r = M.coact(e, 0)
        coassoc.check(
            inp,
            lambda: apply(M.beta_inv, apply(H.delta, r, (0,)), (2,)),
            lambda: M.coact(apply(H.alpha_inv, r, (0,)), 1),
        )
        twist.check(
            inp,
            lambda: M.coact(apply(M.beta, e, (0,)), 0),
            lambda: apply(M.beta, apply(H.alpha, r, (0,)), (1,)),
        )
        counit.check(inp, lambda: apply(H.counit, r, (0,)), lambda: apply(M.beta_inv, e, (0,)))
    return rep


def _yd_rhs(M: YDModulePresentation, x: Elem) -> Elem:
    """``(h11 a^-1(m_(-1))) S(h2) (x) a(h12) . m_0`` on (h, m)."""
    H = M.hopf
    y = apply(H.delta, apply(H.delta, x, (0,)), (0,))  # (h11, h12, h2, m)
    y = M.coact(y, 3)  # (h11, h12, h2, m-1, m0)
    y = apply(H.alpha_inv, y, (3,))
    y = permute(y, (0, 3, 2, 1, 4))  # (h11, m-1, h2, h12, m0)
    y = apply(H.m, y, (0, 1))  # (h11 m-1, h2, h12, m0)
    y = apply(H.antipode, y, (1,))
    y = apply(H.m, y, (0, 1))  # (., h12, m0)
    y = apply(H.alpha, y, (1,))
    return M.act(y, 1, 2)


def _yd_alt(M: YDModulePresentation, x: Elem):
    """Both sides of the equivalent form of the compatibility condition."""
    H = M.hopf
    d = apply(H.delta, x, (0,))  # (h1, h2, m)
    lhs = M.coact(d, 2)  # (h1, h2, m-1, m0)
    lhs = apply(H.m, permute(lhs, (0, 2, 1, 3)), (0, 1))  # (h1 m-1, h2, m0)
    lhs = M.act(lhs, 1, 2)
    rhs = M.act(apply(M.beta_inv, d, (2,)), 0, 2)  # (h1.b^-1 m, h2)
    rhs = M.coact(rhs, 0)  # (k, n, h2)
    rhs = apply(H.m, permute(rhs, (0, 2, 1)), (0, 1))  # (k h2, n)
    rhs = apply(M.beta, rhs, (1,))
    return lhs, rhs


def check_yd_compatibility(M: YDModulePresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    H = M.hopf
    Hb, Mb = H.basis, M.basis
    rep = Report(f"yd-compatibility {M.name}".strip())
    if H.antipode is None:
        raise StructureError("Yetter-Drinfeld compatibility needs an antipode")
    main = Checker(rep, "yd-compatibility", [Hb, Mb], cap)
    alt = Checker(rep, "yd-compatibility-alt-form", [Hb, Mb], cap)
    agree = Checker(rep, "yd-forms-agree", [Hb, Mb], cap)
    for h, v in itertools.product(range(Hb.dim), range(Mb.dim)):
        x = basis_elem(h, v)
        inp = labels([Hb, Mb], (h, v))
        r1 = main.check(inp, lambda: M.coact(M.act(x, 0, 1), 0), lambda: _yd_rhs(M, x))
        lhs, rhs = _yd_alt(M, x)
        r2 = alt.check(inp, lambda: lhs, lambda: rhs)
        if r1 == r2:
            agree.ok()
        else:
            agree.fail(inp, f"main {'holds' if r1 else 'fails'}", f"alt {'holds' if r2 else 'fails'}")
    return rep


def check_yd_module(M: YDModulePresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    rep = Report(f"yd-module {M.name}".strip())
    rep.merge(check_hom_module(M, cap))
    rep.merge(check_hom_comodule(M, cap))
    rep.merge(check_yd_compatibility(M, cap))
    return rep


# ---------------------------------------------------------------- braiding


def braiding_elem(M: YDModulePresentation, N: YDModulePresentation, x: Elem, i: int = 0) -> Elem:
    """``C(m (x) n) = m_(-1) . nu^-1(n) (x) mu(m_0)`` on factors ``i, i+1`` of ``x``."""
    y = M.coact(x, i)  # (.., h, m0, n, ..)
    y = apply(N.beta_inv, y, (i + 2,))
    if not y:
        return {}
    n = len(next(iter(y)))
    perm = list(range(n))
    perm[i + 1], perm[i + 2] = i + 2, i + 1
    y = N.act(permute(y, perm), i, i + 1)  # (.., h.n, m0, ..)
    return apply(M.beta, y, (i + 1,))


def braiding(M: YDModulePresentation, N: YDModulePresentation) -> Tensor:
    """Matrix of the braiding ``M (x) N -> N (x) M``."""
    same_hopf(M, N)
    return map_tensor([M.basis, N.basis], [N.basis, M.basis], lambda k: braiding_elem(M, N, basis_elem(*k)))


def inverse_braiding_elem(M: YDModulePresentation, x: Elem) -> Elem:
    """``a (x) b -> beta(b_0) (x) S^-1(b_(-1)) . beta^-1(a)`` on (a, b)."""
    H = M.hopf
    y = M.coact(x, 1)  # (a, h, b0)
    y = apply(M.beta_inv, y, (0,))
    y = apply(H.antipode_inv, y, (1,))
    y = permute(y, (2, 1, 0))  # (b0, h, a)
    y = apply(M.beta, y, (0,))
    return M.act(y, 1, 2)


def check_braiding_symmetric(M: YDModulePresentation, cap: int = DEFAULT_WITNESS_CAP, vectors=None) -> Report:
    H = M.hopf
    Mb = M.basis
    rep = Report(f"braiding-symmetric {M.name}".strip())
    if H.antipode_inv is None:
        raise StructureError("symmetry check needs an invertible antipode")
    chk = Checker(rep, "braiding-symmetric", [Mb, Mb], cap)
    for a, b in itertools.product(range(Mb.dim), repeat=2):
        x = basis_elem(a, b)
        chk.check(labels([Mb, Mb], (a, b)), lambda: braiding_elem(M, M, x), lambda: inverse_braiding_elem(M, x))
    return rep


def _pairs(A: YDModulePresentation, vectors):
    if vectors is None:
        for a, b in itertools.product(range(A.basis.dim), repeat=2):
            yield labels([A.basis] * 2, (a, b)), basis_elem(a, b)
    else:
        for (i, u), (j, w) in itertools.product(list(enumerate(vectors)), repeat=2):
            yield (f"v{i}", f"v{j}"), tensor_elems({(k,): c for k, c in u.items()}, {(k,): c for k, c in w.items()})


def check_h_commutative(A: YDAlgebraPresentation, cap: int = DEFAULT_WITNESS_CAP, vectors=None,
                        title: str = "") -> Report:
    """``m o C == m`` on basis pairs, or on pairs drawn from ``vectors``."""
    rep = Report(title or f"h-commutative {A.name}".strip())
    chk = Checker(rep, "h-commutative", [A.basis], cap)
    for inp, x in _pairs(A, vectors):
        chk.check(inp, lambda: A.mul(braiding_elem(A, A, x), 0, 1), lambda: A.mul(x, 0, 1))
    return rep


def check_h_cocommutative(A, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """``C o Delta == Delta`` on every basis element."""
    if getattr(A, "delta", None) is None:
        raise StructureError("h-cocommutativity needs a comultiplication")
    rep = Report(f"h-cocommutative {A.name}".strip())
    chk = Checker(rep, "h-cocommutative", [A.basis, A.basis], cap)
    for c in range(A.basis.dim):
        d = apply(A.delta, basis_elem(c), (0,))
        chk.check((A.basis.labels[c],), lambda: braiding_elem(A, A, d), lambda: d)
    return rep


def check_yd_algebra(A: YDAlgebraPresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Module-algebra and comodule-algebra identities."""
    H = A.hopf
    Hb, Ab = H.basis, A.basis
    rep = Report(f"yd-algebra {A.name}".strip())
    mod = Checker(rep, "module-algebra", [Ab], cap)
    modu = Checker(rep, "module-algebra-unit", [Ab], cap)
    com = Checker(rep, "comodule-algebra", [Hb, Ab], cap)
    comu = Checker(rep, "comodule-algebra-unit", [Hb, Ab], cap)
    one = unit_elem(A.unit)
    for h, a, b in itertools.product(range(Hb.dim), range(Ab.dim), range(Ab.dim)):
        x = basis_elem(h, a, b)
        mod.check(
            labels([Hb, Ab, Ab], (h, a, b)),
            lambda: A.act(A.mul(x, 1, 2), 0, 1),
            lambda: A.mul(act_tensor(A, A, x), 0, 1),
        )
    for a, b in itertools.product(range(Ab.dim), repeat=2):
        x = basis_elem(a, b)
        com.check(
            labels([Ab, Ab], (a, b)),
            lambda: A.coact(A.mul(x, 0, 1), 0),
            lambda: A.mul(coact_tensor(A, A, x), 1, 2),
        )
    for h in range(Hb.dim):
        e = basis_elem(h)
        eps = apply(H.counit, e, (0,)).get((), Fraction(0))
        modu.check((Hb.labels[h],), lambda: A.act(tensor_elems(e, one), 0, 1), lambda: {k: eps * c for k, c in one.items() if eps * c})
    comu.check(("1",), lambda: A.coact(one, 0), lambda: tensor_elems(unit_elem(H.unit), one))
    return rep
