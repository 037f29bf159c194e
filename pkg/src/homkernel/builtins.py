"""Built-in example presentations.

``h2`` and ``a4`` are the two-dimensional Hom-Hopf algebra and the twisted
Sweedler algebra acting as a Yetter-Drinfeld algebra over it.  The others
are small classical setups over the trivial Hopf algebra ``k`` or the group
algebra of Z/2, used as cross-checks.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .core import (
    IN, OUT, Basis, StructureError, Tensor, apply, basis_elem, from_table, identity,
    linear_map, map_tensor, permute, vector,
)
from .hopf import HopfPresentation
from .yd import YDAlgebraPresentation, YDModulePresentation

__all__ = ["get", "names", "k_hopf", "h2", "a4", "z2", "adjoint", "coadjoint", "triv", "ut2",
           "superspace", "abelian"]


def _alg_axes(B):
    return [(B, IN), (B, IN), (B, OUT)]


def _co_axes(B):
    return [(B, IN), (B, OUT), (B, OUT)]


def k_hopf() -> HopfPresentation:
    K = Basis("k", ["1"])
    return HopfPresentation(
        K,
        m=from_table(_alg_axes(K), [("1", "1", "1", 1)]),
        unit=vector(K, {"1": 1}),
        delta=from_table(_co_axes(K), [("1", "1", "1", 1)]),
        counit=from_table([(K, IN)], [("1", 1)]),
        alpha=identity(K),
        antipode=identity(K),
        name="k",
        origin="builtin:k",
    )


def h2() -> HopfPresentation:
    H = Basis("H", ["1", "h"])
    return HopfPresentation(
        H,
        m=from_table(_alg_axes(H), [("1", "1", "1", 1), ("1", "h", "h", -1), ("h", "1", "h", -1)]),
        unit=vector(H, {"1": 1}),
        delta=from_table(_co_axes(H), [("1", "1", "1", 1), ("h", "h", "1", -1), ("h", "1", "h", -1)]),
        counit=from_table([(H, IN)], [("1", 1)]),
        alpha=linear_map(H, H, {"1": {"1": 1}, "h": {"h": -1}}),
        antipode=linear_map(H, H, {"1": {"1": 1}, "h": {"h": -1}}),
        name="h2",
        origin="builtin:h2",
    )


def z2() -> HopfPresentation:
    """Group algebra of Z/2 with generator ``s``; untwisted."""
    H = Basis("Z2", ["1", "s"])
    return HopfPresentation(
        H,
        m=from_table(_alg_axes(H), [("1", "1", "1", 1), ("1", "s", "s", 1), ("s", "1", "s", 1), ("s", "s", "1", 1)]),
        unit=vector(H, {"1": 1}),
        delta=from_table(_co_axes(H), [("1", "1", "1", 1), ("s", "s", "s", 1)]),
        counit=from_table([(H, IN)], [("1", 1), ("s", 1)]),
        alpha=identity(H),
        antipode=identity(H),
        name="z2",
        origin="builtin:z2",
    )


def a4() -> YDAlgebraPresentation:
    H = h2()
    A = Basis("A", ["1", "x", "g", "gx"])
    beta = linear_map(A, A, {"1": {"1": 1}, "x": {"x": -1}, "g": {"g": 1}, "gx": {"gx": -1}})
    m = from_table(_alg_axes(A), [
        ("1", "1", "1", 1), ("1", "g", "g", 1), ("1", "x", "x", -1), ("1", "gx", "gx", -1),
        ("g", "1", "g", 1), ("g", "g", "1", 1), ("g", "x", "gx", -1), ("g", "gx", "x", -1),
        ("x", "1", "x", -1), ("x", "g", "gx", 1),
        ("gx", "1", "gx", -1), ("gx", "g", "x", 1),
    ])
    delta = from_table(_co_axes(A), [
        ("1", "1", "1", 1), ("g", "g", "g", 1),
        ("x", "x", "1", -1), ("x", "g", "x", -1),
        ("gx", "gx", "g", -1), ("gx", "1", "gx", -1),
    ])
    # g is grouplike, so eps(g) = 1
    counit = from_table([(A, IN)], [("1", 1), ("g", 1)])
    antipode = linear_map(A, A, {"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": -1}, "gx": {"x": 1}})
    # h acts as zero, 1_H acts as beta
    action = from_table([(H.basis, IN), (A, IN), (A, OUT)],
                        [("1", "1", "1", 1), ("1", "g", "g", 1), ("1", "x", "x", -1), ("1", "gx", "gx", -1)])
    coaction = from_table([(A, IN), (H.basis, OUT), (A, OUT)],
                          [("1", "1", "1", 1), ("g", "1", "g", 1), ("x", "1", "x", -1), ("gx", "1", "gx", -1)])
    return YDAlgebraPresentation(
        H, A, action, coaction, beta, name="a4", origin="builtin:a4",
        m=m, unit=vector(A, {"1": 1}), delta=delta, counit=counit, antipode=antipode,
    )


def adjoint(H: HopfPresentation) -> YDAlgebraPresentation:
    """``H`` over itself: ``h . g = (h1 a^-1(g)) S(a(h2))``, coaction ``Delta``."""
    B = H.basis

    def act(k):
        h, g = k
        y = apply(H.delta, basis_elem(h, g), (0,))  # (h1, h2, g)
        y = apply(H.alpha_inv, y, (2,))
        y = apply(H.antipode, apply(H.alpha, y, (1,)), (1,))
        y = apply(H.m, permute(y, (0, 2, 1)), (0, 1))  # (h1 a^-1 g, S a h2)
        return apply(H.m, y, (0, 1))

    action = map_tensor([B, B], [B], act)
    return YDAlgebraPresentation(
        H, B, action, H.delta, H.alpha, name=f"adjoint({H.name})", origin=f"builtin:adjoint({H.name})",
        m=H.m, unit=H.unit,
    )


def coadjoint(H: HopfPresentation) -> YDAlgebraPresentation:
    """``H`` over itself: action ``m``, coaction ``h11 a^-1(S(h2)) (x) a(h12)``."""
    B = H.basis

    def coact(k):
        y = apply(H.delta, apply(H.delta, basis_elem(*k), (0,)), (0,))  # (h11, h12, h2)
        y = apply(H.alpha_inv, apply(H.antipode, y, (2,)), (2,))
        y = apply(H.alpha, y, (1,))
        y = apply(H.m, permute(y, (0, 2, 1)), (0, 1))
        return y

    coaction = map_tensor([B], [B, B], coact)
    return YDAlgebraPresentation(
        H, B, H.m, coaction, H.alpha, name=f"coadjoint({H.name})", origin=f"builtin:coadjoint({H.name})",
        m=H.m, unit=H.unit,
    )


def _trivial_module(B: Basis, H: HopfPresentation | None = None):
    H = H or k_hopf()
    one = H.basis.index("1")
    action = Tensor(((H.basis, IN), (B, IN), (B, OUT)),
                    {(h, i, i): c for i in range(B.dim) for (h,), c in H.counit.entries.items()})
    coaction = Tensor(((B, IN), (H.basis, OUT), (B, OUT)), {(i, one, i): 1 for i in range(B.dim)})
    return H, action, coaction


def triv(d: int) -> YDAlgebraPresentation:
    """Functions on Z/d: idempotent basis ``e0..e{d-1}``, trivial YD structure over ``k``."""
    if d < 1:
        raise StructureError("triv(d) needs d >= 1")
    B = Basis("F", [f"e{i}" for i in range(d)])
    H, action, coaction = _trivial_module(B)
    m = Tensor(tuple(_alg_axes(B)), {(i, i, i): 1 for i in range(d)})
    delta = Tensor(tuple(_co_axes(B)), {(i, j, (i - j) % d): 1 for i in range(d) for j in range(d)})
    counit = Tensor(((B, IN),), {(0,): 1})
    antipode = Tensor(((B, IN), (B, OUT)), {(i, (-i) % d): 1 for i in range(d)})
    return YDAlgebraPresentation(
        H, B, action, coaction, identity(B), name=f"triv({d})", origin=f"builtin:triv({d})",
        m=m, unit=Tensor(((B, OUT),), {(i,): 1 for i in range(d)}),
        delta=delta, counit=counit, antipode=antipode,
    )


def ut2() -> YDAlgebraPresentation:
    """Upper-triangular 2x2 matrices over ``k`` with the flip braiding."""
    B = Basis("UT2", ["E11", "E12", "E22"])
    H, action, coaction = _trivial_module(B)
    m = from_table(_alg_axes(B), [
        ("E11", "E11", "E11", 1), ("E11", "E12", "E12", 1),
        ("E12", "E22", "E12", 1), ("E22", "E22", "E22", 1),
    ])
    return YDAlgebraPresentation(
        H, B, action, coaction, identity(B), name="ut2", origin="builtin:ut2",
        m=m, unit=vector(B, {"E11": 1, "E22": 1}),
    )


def abelian(d: int):
    """``d``-dimensional abelian braided Lie algebra over ``k`` (zero bracket)."""
    from .lie import BraidedLiePresentation

    B = Basis("L", [f"l{i}" for i in range(d)])
    H, action, coaction = _trivial_module(B)
    mod = YDModulePresentation(H, B, action, coaction, identity(B), name=f"triv-abelian({d})",
                               origin=f"builtin:triv-abelian({d})")
    return BraidedLiePresentation(mod, Tensor(tuple(_alg_axes(B))))


def superspace_module(p: int, q: int) -> YDModulePresentation:
    """Z/2-graded space: ``p`` even vectors ``v0..``, then ``q`` odd ones."""
    H = z2()
    n = p + q
    B = Basis("V", [f"v{i}" for i in range(n)])
    s = H.basis.index("s")
    par = [0] * p + [1] * q
    action = Tensor(((H.basis, IN), (B, IN), (B, OUT)),
                    {**{(0, i, i): 1 for i in range(n)}, **{(s, i, i): (-1) ** par[i] for i in range(n)}})
    coaction = Tensor(((B, IN), (H.basis, OUT), (B, OUT)), {(i, par[i] and s, i): 1 for i in range(n)})
    return YDModulePresentation(H, B, action, coaction, identity(B), name=f"superspace({p},{q})",
                                origin=f"builtin:superspace({p},{q})")


def superspace(p: int, q: int):
    from .endv import build_endv

    return build_endv(superspace_module(p, q))


def plain_space(d: int) -> YDModulePresentation:
    B = Basis("V", [f"v{i}" for i in range(d)])
    H, action, coaction = _trivial_module(B)
    return YDModulePresentation(H, B, action, coaction, identity(B), name=f"triv-space({d})",
                                origin=f"builtin:triv-space({d})")


def gl(d: int):
    from .endv import build_endv

    return build_endv(plain_space(d))


_PATTERNS = [
    (r"k", lambda: k_hopf()),
    (r"h2", lambda: h2()),
    (r"z2", lambda: z2()),
    (r"a4", lambda: a4()),
    (r"ut2", lambda: ut2()),
    (r"adjoint\((\w+)\)", lambda h: adjoint(get(h))),
    (r"coadjoint\((\w+)\)", lambda h: coadjoint(get(h))),
    (r"triv\((\d+)\)", lambda d: triv(int(d))),
    (r"triv-abelian\((\d+)\)", lambda d: abelian(int(d))),
    (r"triv-space\((\d+)\)", lambda d: plain_space(int(d))),
    (r"gl\((\d+)\)", lambda d: gl(int(d))),
    (r"superspace\((\d+),(\d+)\)", lambda p, q: superspace(int(p), int(q))),
    (r"superspace-module\((\d+),(\d+)\)", lambda p, q: superspace_module(int(p), int(q))),
]


def names() -> list:
    return ["k", "h2", "z2", "a4", "ut2", "adjoint(h2)", "coadjoint(h2)", "triv(1)", "triv(2)",
            "triv-abelian(2)", "triv-abelian(3)", "triv-space(2)", "gl(2)", "superspace(1,1)",
            "superspace-module(1,1)"]


def get(name: str):
    name = name.replace(" ", "")
    for pat, ctor in _PATTERNS:
        mt = re.fullmatch(pat, name)
        if mt:
            obj = ctor(*mt.groups())
            if not getattr(obj, "origin", ""):
                obj.origin = f"builtin:{name}"
            return obj
    raise KeyError(f"unknown built-in {name!r}")
