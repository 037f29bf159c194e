"""Monoidal Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras.

A presentation is a finite basis plus structure constants.  Every axiom is
checked on basis tuples; by multilinearity that is the same as checking it
on all elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    IN, OUT, Basis, Elem, NotInvertible, StructureError, Tensor, apply, basis_elem, identity,
    invert_map, permute, tensor_elems,
)
from .report import DEFAULT_WITNESS_CAP, Checker, Report, labels

__all__ = [
    "AlgebraPresentation", "CoalgebraPresentation", "HopfPresentation",
    "check_hom_algebra", "check_hom_coalgebra", "check_hom_bialgebra", "check_antipode",
    "check_hom_hopf",
]


def expect_axes(t: Tensor, what: str, axes) -> None:
    got = [(b.labels, v) for b, v in t.axes]
    want = [(b.labels, v) for b, v in axes]
    if got != want:
        raise StructureError(
            f"{what}: expected axes {[(b.name, v) for b, v in axes]}, "
            f"got {[(b.name, v) for b, v in t.axes]}"
        )


def unit_elem(unit: Tensor) -> Elem:
    return dict(unit.entries)


@dataclass(eq=False)
class AlgebraPresentation:
    basis: Basis
    m: Tensor
    unit: Tensor
    alpha: Tensor
    name: str = ""

    def __post_init__(self):
        A = self.basis
        expect_axes(self.m, "m", [(A, IN), (A, IN), (A, OUT)])
        expect_axes(self.unit, "unit", [(A, OUT)])
        expect_axes(self.alpha, "alpha", [(A, IN), (A, OUT)])
        self.alpha_inv = invert_map(self.alpha)


@dataclass(eq=False)
class CoalgebraPresentation:
    basis: Basis
    delta: Tensor
    counit: Tensor
    gamma: Tensor
    name: str = ""

    def __post_init__(self):
        C = self.basis
        expect_axes(self.delta, "delta", [(C, IN), (C, OUT), (C, OUT)])
        expect_axes(self.counit, "counit", [(C, IN)])
        expect_axes(self.gamma, "gamma", [(C, IN), (C, OUT)])
        self.gamma_inv = invert_map(self.gamma)


@dataclass(eq=False)
class HopfPresentation:
    """Monoidal Hom-bialgebra; a Hom-Hopf algebra when ``antipode`` is set.

    The antipode must be invertible: its inverse is needed by the symmetry
    condition on Yetter-Drinfeld modules and by the End(V) coaction.
    """

    basis: Basis
    m: Tensor
    unit: Tensor
    delta: Tensor
    counit: Tensor
    alpha: Tensor
    antipode: Optional[Tensor] = None
    name: str = ""
    origin: str = ""
    grading: Optional[tuple] = None
    max_degree: Optional[int] = None
    notes: list = field(default_factory=list)
    strict_antipode: bool = True

    def __post_init__(self):
        H = self.basis
        expect_axes(self.m, "m", [(H, IN), (H, IN), (H, OUT)])
        expect_axes(self.unit, "unit", [(H, OUT)])
        expect_axes(self.delta, "delta", [(H, IN), (H, OUT), (H, OUT)])
        expect_axes(self.counit, "counit", [(H, IN)])
        expect_axes(self.alpha, "alpha", [(H, IN), (H, OUT)])
        self.alpha_inv = invert_map(self.alpha)
        self.antipode_inv = None
        if self.antipode is not None:
            expect_axes(self.antipode, "antipode", [(H, IN), (H, OUT)])
            try:
                self.antipode_inv = invert_map(self.antipode)
            except NotInvertible:
                if self.strict_antipode:
                    raise
                self.notes.append("antipode is not invertible")

    gamma = property(lambda self: self.alpha)
    gamma_inv = property(lambda self: self.alpha_inv)

    @property
    def is_hopf(self) -> bool:
        return self.antipode is not None

    @property
    def involutive(self) -> bool:
        a = self.alpha
        return apply_map_twice_is_identity(a)

    @property
    def alpha_is_identity(self) -> bool:
        return self.alpha == identity(self.basis)

    def fingerprint(self) -> tuple:
        ts = [self.m, self.unit, self.delta, self.counit, self.alpha, self.antipode]
        return (self.basis.labels,) + tuple(
            None if t is None else tuple(t.entries.items()) for t in ts
        )

    def same_as(self, other: "HopfPresentation") -> bool:
        return self is other or self.fingerprint() == other.fingerprint()


def apply_map_twice_is_identity(t: Tensor) -> bool:
    b = t.axes[0][0]
    for i in range(b.dim):
        if apply(t, apply(t, basis_elem(i), (0,)), (0,)) != basis_elem(i):
            return False
    return True


# ---------------------------------------------------------------- checkers


def check_hom_algebra(p, cap: int = DEFAULT_WITNESS_CAP, title: str = "hom-algebra") -> Report:
    """Hom-associativity, multiplicativity of the twist, Hom-unitality."""
    A = p.basis
    m, al = p.m, p.alpha
    one = unit_elem(p.unit)
    rep = Report(title)
    B1 = [A]
    assoc = Checker(rep, "hom-associativity", B1, cap)
    mult = Checker(rep, "twist-multiplicative", B1, cap)
    runit = Checker(rep, "right-unit", B1, cap)
    lunit = Checker(rep, "left-unit", B1, cap)
    tunit = Checker(rep, "twist-fixes-unit", B1, cap)
    n = A.dim
    for a, b, c in itertools.product(range(n), repeat=3):
        x = basis_elem(a, b, c)
        assoc.check(
            labels([A] * 3, (a, b, c)),
            lambda: apply(m, apply(al, apply(m, x, (1, 2)), (0,)), (0, 1)),
            lambda: apply(m, apply(al, apply(m, x, (0, 1)), (1,)), (0, 1)),
        )
    for a, b in itertools.product(range(n), repeat=2):
        x = basis_elem(a, b)
        mult.check(
            labels([A] * 2, (a, b)),
            lambda: apply(al, apply(m, x, (0, 1)), (0,)),
            lambda: apply(m, apply(al, apply(al, x, (0,)), (1,)), (0, 1)),
        )
    for a in range(n):
        e = basis_elem(a)
        ae = apply(al, e, (0,))
        runit.check((A.labels[a],), lambda: apply(m, tensor_elems(e, one), (0, 1)), lambda: ae)
        lunit.check((A.labels[a],), lambda: apply(m, tensor_elems(one, e), (0, 1)), lambda: ae)
    tunit.check(("1",), lambda: apply(al, one, (0,)), lambda: one)
    return rep


def check_hom_coalgebra(p, cap: int = DEFAULT_WITNESS_CAP, title: str = "hom-coalgebra") -> Report:
    """Twisted coassociativity, twist comultiplicative, Hom-counitality."""
    C = p.basis
    d, g, gi, eps = p.delta, p.gamma, p.gamma_inv, p.counit
    rep = Report(title)
    B = [C]
    coassoc = Checker(rep, "hom-coassociativity", B, cap)
    comult = Checker(rep, "twist-comultiplicative", B, cap)
    rcounit = Checker(rep, "right-counit", B, cap)
    lcounit = Checker(rep, "left-counit", B, cap)
    tcounit = Checker(rep, "counit-twist-invariant", B, cap)
    for c in range(C.dim):
        x = basis_elem(c)
        inp = (C.labels[c],)
        dc = apply(d, x, (0,))
        coassoc.check(
            inp,
            lambda: apply(d, apply(gi, dc, (0,)), (1,)),
            lambda: apply(gi, apply(d, dc, (0,)), (2,)),
        )
        comult.check(
            inp,
            lambda: apply(d, apply(g, x, (0,)), (0,)),
            lambda: apply(g, apply(g, dc, (0,)), (1,)),
        )
        gix = apply(gi, x, (0,))
        rcounit.check(inp, lambda: apply(eps, dc, (1,)), lambda: gix)
        lcounit.check(inp, lambda: apply(eps, dc, (0,)), lambda: gix)
        tcounit.check(inp, lambda: apply(eps, apply(g, x, (0,)), (0,)), lambda: apply(eps, x, (0,)))
    return rep


def check_hom_bialgebra(p: HopfPresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """The comultiplication and counit are Hom-algebra maps."""
    H = p.basis
    m, d, eps = p.m, p.delta, p.counit
    one = unit_elem(p.unit)
    rep = Report("hom-bialgebra")
    B = [H]
    dmul = Checker(rep, "delta-multiplicative", B, cap)
    dunit = Checker(rep, "delta-unit", B, cap)
    emul = Checker(rep, "counit-multiplicative", B, cap)
    eunit = Checker(rep, "counit-unit", B, cap)
    for h, g in itertools.product(range(H.dim), repeat=2):
        x = basis_elem(h, g)
        inp = labels([H, H], (h, g))
        dmul.check(
            inp,
            lambda: apply(d, apply(m, x, (0, 1)), (0,)),
            lambda: apply(m, apply(m, permute(apply(d, apply(d, x, (0,)), (2,)), (0, 2, 1, 3)), (0, 1)), (1, 2)),
        )
        emul.check(
            inp,
            lambda: apply(eps, apply(m, x, (0, 1)), (0,)),
            lambda: apply(eps, apply(eps, x, (0,)), (0,)),
        )
    dunit.check(("1",), lambda: apply(d, one, (0,)), lambda: tensor_elems(one, one))
    eunit.check(("1",), lambda: apply(eps, one, (0,)), lambda: {(): Fraction(1)})
    return rep


def check_antipode(p: HopfPresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Convolution-inverse identities and commutation with the twist."""
    H = p.basis
    rep = Report("antipode")
    if p.antipode is None:
        rep.notes.append("no antipode supplied")
        Checker(rep, "antipode-present", [H], cap).fail((), "absent", "present")
        return rep
    m, d, eps, S, al = p.m, p.delta, p.counit, p.antipode, p.alpha
    one = unit_elem(p.unit)
    B = [H]
    left = Checker(rep, "antipode-left", B, cap)
    right = Checker(rep, "antipode-right", B, cap)
    comm = Checker(rep, "antipode-commutes-with-twist", B, cap)
    for h in range(H.dim):
        x = basis_elem(h)
        inp = (H.labels[h],)
        dh = apply(d, x, (0,))
        e1 = {k: c * apply(eps, x, (0,)).get((), 0) for k, c in one.items()}
        e1 = {k: c for k, c in e1.items() if c}
        left.check(inp, lambda: apply(m, apply(S, dh, (0,)), (0, 1)), lambda: e1)
        right.check(inp, lambda: apply(m, apply(S, dh, (1,)), (0, 1)), lambda: e1)
        comm.check(inp, lambda: apply(S, apply(al, x, (0,)), (0,)), lambda: apply(al, apply(S, x, (0,)), (0,)))
    return rep


def check_hom_hopf(p: HopfPresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    rep = Report(f"hom-hopf {p.name}".strip())
    rep.merge(check_hom_algebra(p, cap))
    rep.merge(check_hom_coalgebra(p, cap))
    rep.merge(check_hom_bialgebra(p, cap))
    if p.antipode is not None:
        rep.merge(check_antipode(p, cap))
    return rep
