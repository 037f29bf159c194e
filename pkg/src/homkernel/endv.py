"""End(V) as a Yetter-Drinfeld algebra, its braided Lie structure, and the
Radford biproduct ``U(End(V)) x H``.

The Hopf algebra under ``V`` must have the identity as twist; ``V``'s own
twist must square to the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    IN, OUT, Basis, Elem, Overflow, StructureError, Tensor, add, apply, basis_elem, tensor_elems,
)
from .enveloping import NotInvolutive, TruncatedEnveloping, build_enveloping
from .hopf import HopfPresentation, check_hom_hopf
from .lie import BraidedLiePresentation, derive_bracket
from .report import DEFAULT_WITNESS_CAP, Report
from .yd import YDAlgebraPresentation, YDModulePresentation

__all__ = [
    "AlphaNotIdentity", "NotInvolutive", "EndVPresentation", "BiproductPresentation",
    "build_endv", "endv_bracket", "build_biproduct", "verify_biproduct",
]


class AlphaNotIdentity(ValueError):
    pass


@dataclass(eq=False)
class EndVPresentation(YDAlgebraPresentation):
    source: Optional[YDModulePresentation] = None

    def unit_index(self, i: int, j: int) -> int:
        return i * self.source.basis.dim + j


def _unit_label(V: Basis, i: int, j: int) -> str:
    if V.dim <= 10:
        return f"E{i}{j}"
    return f"E{i}_{j}"


def build_endv(V: YDModulePresentation) -> EndVPresentation:
    H = V.hopf
    if not H.alpha_is_identity:
        raise AlphaNotIdentity(f"the Hopf algebra under {V.name or 'V'} must have the identity as twist")
    if H.antipode is None:
        raise StructureError("End(V) needs a Hopf algebra with antipode")
    if not V.involutive:
        raise NotInvolutive(f"twist of {V.name or 'V'} does not square to the identity")
    Vb, Hb = V.basis, H.basis
    d = Vb.dim
    E = Basis("End", [_unit_label(Vb, i, j) for i in range(d) for j in range(d)])

    def idx(i, j):
        return i * d + j

    # (h . E_ij)(v_k) = h1 . E_ij(S(h2) . v_k)
    act: Elem = {}
    for h in range(Hb.dim):
        for i, j in itertools.product(range(d), repeat=2):
            out: Elem = {}
            for (h1, h2), c in H.delta.table.get((h,), ()):
                for (sh2,), s in H.antipode.table.get((h2,), ()):
                    for k in range(d):
                        w = V.act(basis_elem(sh2, k), 0, 1)  # S(h2) . v_k
                        a = w.get((j,), 0)
                        if not a:
                            continue
                        for (o,), e in V.act(basis_elem(h1, i), 0, 1).items():
                            out = add(out, (c * s * a * e, {(idx(o, k),): 1}))
            for (o,), c in out.items():
                act[(h, idx(i, j), o)] = c
    action = Tensor(((Hb, IN), (E, IN), (E, OUT)), act)

    # rho(f)(v) = f(v_0)_(-1) S^-1(v_(-1)) (x) f(v_0)_0
    co: Elem = {}
    for i, j in itertools.product(range(d), repeat=2):
        out = {}
        for k in range(d):
            for (h, kk), c in V.coaction.table.get((k,), ()):
                if kk != j:
                    continue
                for (g, a), e in V.coaction.table.get((i,), ()):
                    for (sh,), s in H.antipode_inv.table.get((h,), ()):
                        for (p,), q in H.m.table.get((g, sh), ()):
                            out = add(out, (c * e * s * q, {(p, idx(a, k)): 1}))
        for (p, o), c in out.items():
            co[(idx(i, j), p, o)] = c
    coaction = Tensor(((E, IN), (Hb, OUT), (E, OUT)), co)

    # delta(f) = f o nu^2
    nu2 = {k: apply(V.beta, apply(V.beta, basis_elem(k), (0,)), (0,)) for k in range(d)}
    tw: Elem = {}
    for i, j in itertools.product(range(d), repeat=2):
        for k in range(d):
            c = nu2[k].get((j,), 0)
            if c:
                tw[(idx(i, j), idx(i, k))] = c
    twist = Tensor(((E, IN), (E, OUT)), tw)

    m: Elem = {}
    for i, j, l in itertools.product(range(d), repeat=3):
        m[(idx(i, j), idx(j, l), idx(i, l))] = Fraction(1)
    mul = Tensor(((E, IN), (E, IN), (E, OUT)), m)
    unit = Tensor(((E, OUT),), {(idx(i, i),): 1 for i in range(d)})
    name = f"End({V.name})" if V.name else "End(V)"
    origin = f"endv:{V.origin}" if V.origin else ""
    return EndVPresentation(H, E, action, coaction, twist, name=name, origin=origin, m=mul, unit=unit, source=V)


def endv_bracket(e: EndVPresentation) -> BraidedLiePresentation:
    return derive_bracket(e)


# ---------------------------------------------------------------- biproduct


@dataclass(eq=False)
class BiproductPresentation:
    enveloping: TruncatedEnveloping
    hopf_factor: HopfPresentation
    hopf: HopfPresentation
    literal: bool = False

    @property
    def basis(self) -> Basis:
        return self.hopf.basis

    def pair_index(self, u: int, h: int) -> int:
        return u * self.hopf_factor.basis.dim + h


def build_biproduct(e: EndVPresentation, n: int, literal: bool = False,
                    enveloping: Optional[TruncatedEnveloping] = None) -> BiproductPresentation:
    """Smash product ``(f x h)(f' x h') = f (h1 . delta^-1(f')) x h2 h'`` with the
    Radford coproduct and antipode.

    ``literal=True`` evaluates the multiplication with ``f`` in place of
    ``f'`` inside the action.  That variant is not associative; it is kept
    so the failure can be demonstrated.
    """
    u = enveloping or build_enveloping(endv_bracket(e), n)
    U = u.algebra
    H = e.hopf
    Ub, Hb = U.basis, H.basis
    nh = Hb.dim
    B = Basis("UxH", [f"{a}#{b}" for a in Ub.labels for b in Hb.labels])

    def flat(x: Elem) -> Elem:
        return {(a * nh + b,) + k[2:]: c for k, c in x.items() for a, b in [k[:2]]}

    def smash(x: Elem) -> Elem:
        """Product on pairs: ``x`` has factors (f, h, f', h')."""
        y = apply(H.delta, x, (1,))  # (f, h1, h2, f', h')
        src = 0 if literal else 3
        y = {(k[0], k[1], k[src], k[2], k[4]): c for k, c in y.items()}  # (f, h1, f*, h2, h')
        y = apply(U.beta_inv, y, (2,))
        y = U.act(y, 1, 2)  # (f, h1.f*, h2, h')
        y = U.mul(y, 0, 1)
        return apply(H.m, y, (1, 2))

    m_ent: Elem = {}
    undefined = set()
    for a, b, a2, b2 in itertools.product(range(Ub.dim), range(nh), range(Ub.dim), range(nh)):
        key = (a * nh + b, a2 * nh + b2)
        try:
            prod = smash(basis_elem(a, b, a2, b2))
        except Overflow:
            undefined.add(key)
            continue
        for (p, q), c in prod.items():
            m_ent[key + (p * nh + q,)] = c
    mul = Tensor(((B, IN), (B, IN), (B, OUT)), m_ent, frozenset(undefined))
    unit = Tensor(((B, OUT),), flat(tensor_elems(dict(U.unit.entries), dict(H.unit.entries))))

    d_ent: Elem = {}
    for a, b in itertools.product(range(Ub.dim), range(nh)):
        y = apply(U.delta, basis_elem(a, b), (0,))  # (f1, f2, h)
        y = U.coact(y, 1)  # (f1, g, f20, h)
        y = apply(H.delta, y, (3,))  # (f1, g, f20, h1, h2)
        y = apply(H.m, y, (1, 3))  # (f1, g h1, f20, h2)
        y = apply(U.beta, y, (2,))
        for k, c in y.items():
            d_ent[(a * nh + b, k[0] * nh + k[1], k[2] * nh + k[3])] = c
    delta = Tensor(((B, IN), (B, OUT), (B, OUT)), d_ent)

    counit = Tensor(((B, IN),), flat(tensor_elems(dict(U.counit.entries), dict(H.counit.entries))))

    one_u = dict(U.unit.entries)
    one_h = dict(H.unit.entries)
    s_ent: Elem = {}
    for a, b in itertools.product(range(Ub.dim), range(nh)):
        y = U.coact(basis_elem(a, b), 0)  # (g, f0, h)
        y = apply(H.m, y, (0, 2))  # (g h, f0)
        y = apply(H.antipode, y, (0,))
        y = apply(U.antipode, y, (1,))  # (S(gh), S(f0))
        z: Elem = {}
        for (k, f0), c in y.items():
            left = tensor_elems(one_u, {(k,): 1})
            right = tensor_elems({(f0,): 1}, one_h)
            z = add(z, (c, smash(tensor_elems(left, right))))
        for (p, q), c in z.items():
            s_ent[(a * nh + b, p * nh + q)] = c
    antipode = Tensor(((B, IN), (B, OUT)), s_ent)

    tw: Elem = {}
    for a, b in itertools.product(range(Ub.dim), range(nh)):
        for (o,), c in U.beta.table.get((a,), ()):
            tw[(a * nh + b, o * nh + b)] = c
    twist = Tensor(((B, IN), (B, OUT)), tw)

    name = f"{U.name}#{H.name}" + (" (literal)" if literal else "")
    hopf = HopfPresentation(B, mul, unit, delta, counit, twist, antipode, name=name,
                            origin=f"biproduct:{e.origin or e.name}", max_degree=n,
                            grading=tuple(U.grading[a] for a in range(Ub.dim) for _ in range(nh)),
                            strict_antipode=not literal)
    return BiproductPresentation(u, H, hopf, literal)


def verify_biproduct(b: BiproductPresentation, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    return check_hom_hopf(b.hopf, cap)
