"""Exact linear algebra over the rationals.

Everything in the package reduces to three primitives defined here: sparse
multi-index tensors over named bases, contraction of such tensors, and exact
row reduction.  Scalars are :class:`fractions.Fraction`, so every identity is
checked as an exact equality.
"""

from __future__ import annotations

import re

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Scalar = Fraction
Index = Tuple[int, ...]
Elem = Dict[Index, Fraction]

IN = "in"
OUT = "out"


class StructureError(ValueError):
    """Malformed data: wrong shapes, mismatched bases, bad indices."""


class NotInvertible(StructureError):
    pass


class Overflow(ArithmeticError):
    """A truncated product was evaluated outside its defined range."""


_RATIONAL = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")


def scalar(value) -> Fraction:
    """Parse ``value`` as an exact rational.  Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise StructureError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("\u2212", "-")
        mt = _RATIONAL.fullmatch(text)
        if not mt:
            raise StructureError(f"malformed rational {value!r}")
        d = int(mt.group(2)) if mt.group(2) else 1
        if d == 0:
            raise StructureError(f"zero denominator in {value!r}")
        return Fraction(int(mt.group(1)), d)
    raise StructureError(f"not a rational: {value!r}")


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Basis:
    name: str
    labels: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise StructureError(f"basis {self.name}: duplicate labels")
        for lab in self.labels:
            if not lab or any(ch.isspace() for ch in lab):
                raise StructureError(f"basis {self.name}: bad label {lab!r}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError(f"basis {self.name} has no label {label!r}") from None

    def __len__(self):
        return len(self.labels)


Axis = Tuple[Basis, str]


def _clean(entries: Mapping[Index, object]) -> Elem:
    out: Elem = {}
    for k, v in entries.items():
        q = scalar(v)
        if q:
            out[tuple(k)] = q
    return out


@dataclass(frozen=True, eq=False)
class Tensor:
    """Sparse tensor.  ``entries`` never stores zeros.

    A linear map ``V1 (x) ... (x) Vk -> W1 (x) ... (x) Wr`` is a tensor whose
    ``in`` axes come first, then its ``out`` axes.  ``undefined`` lists input
    keys whose image lies outside a truncation window; applying the map to
    them raises :class:`Overflow`.
    """

    axes: Tuple[Axis, ...]
    entries: Elem = field(default_factory=dict)
    undefined: frozenset = frozenset()

    def __post_init__(self):
        axes = tuple((b, v) for b, v in self.axes)
        for b, v in axes:
            if v not in (IN, OUT):
                raise StructureError(f"bad variance {v!r}")
        object.__setattr__(self, "axes", axes)
        ent = _clean(self.entries)
        n = len(axes)
        for k in ent:
            if len(k) != n:
                raise StructureError(f"index {k} has arity {len(k)}, expected {n}")
            for i, (b, _) in zip(k, axes):
                if not 0 <= i < b.dim:
                    raise StructureError(f"index {i} out of range for basis {b.name}")
        object.__setattr__(self, "entries", dict(sorted(ent.items())))
        object.__setattr__(self, "undefined", frozenset(self.undefined))

    @property
    def arity(self) -> int:
        return len(self.axes)

    @property
    def in_axes(self) -> Tuple[int, ...]:
        return tuple(i for i, (_, v) in enumerate(self.axes) if v == IN)

    @property
    def out_axes(self) -> Tuple[int, ...]:
        return tuple(i for i, (_, v) in enumerate(self.axes) if v == OUT)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            [(b.labels, v) for b, v in self.axes] == [(b.labels, v) for b, v in other.axes]
            and self.entries == other.entries
            and self.undefined == other.undefined
        )

    def __hash__(self):
        return hash((tuple((b.labels, v) for b, v in self.axes), tuple(self.entries.items())))

    def __getitem__(self, key: Index) -> Fraction:
        return self.entries.get(tuple(key), Fraction(0))

    @property
    def table(self) -> Dict[Index, list]:
        """Map from in-index tuple to ``[(out-index, coefficient)]``."""
        tab = self.__dict__.get("_table")
        if tab is None:
            ins, outs = self.in_axes, self.out_axes
            tab = {}
            for k, c in self.entries.items():
                tab.setdefault(tuple(k[i] for i in ins), []).append((tuple(k[o] for o in outs), c))
            object.__setattr__(self, "_table", tab)
        return tab

    def transpose(self, perm: Sequence[int]) -> "Tensor":
        perm = tuple(perm)
        if sorted(perm) != list(range(self.arity)):
            raise StructureError(f"bad permutation {perm}")
        return Tensor(
            tuple(self.axes[p] for p in perm),
            {tuple(k[p] for p in perm): c for k, c in self.entries.items()},
        )

    def as_matrix(self) -> list:
        """Dense rows (out index) by columns (in index) for a square map."""
        (bi, vi), (bo, vo) = self.axes
        if (vi, vo) != (IN, OUT):
            raise StructureError("not a map")
        rows = [[Fraction(0)] * bi.dim for _ in range(bo.dim)]
        for (i, o), c in self.entries.items():
            rows[o][i] = c
        return rows


# ---------------------------------------------------------------- builders


def vector(basis: Basis, coords: Mapping) -> Tensor:
    """Vector from ``{label or index: value}``."""
    ent = {}
    for k, v in coords.items():
        i = basis.index(k) if isinstance(k, str) else k
        ent[(i,)] = v
    return Tensor(((basis, OUT),), ent)


def identity(basis: Basis) -> Tensor:
    return Tensor(((basis, IN), (basis, OUT)), {(i, i): 1 for i in range(basis.dim)})


def linear_map(src: Basis, dst: Basis, images: Mapping) -> Tensor:
    """Matrix from ``{src label: {dst label: coeff}}``."""
    ent = {}
    for s, img in images.items():
        i = src.index(s) if isinstance(s, str) else s
        for t, c in img.items():
            j = dst.index(t) if isinstance(t, str) else t
            ent[(i, j)] = c
    return Tensor(((src, IN), (dst, OUT)), ent)


def from_table(axes: Sequence[Axis], rows: Iterable[Sequence]) -> Tensor:
    """Tensor from rows ``(label, ..., label, coeff)``."""
    ent: Elem = {}
    for row in rows:
        *labs, c = row
        if len(labs) != len(axes):
            raise StructureError(f"row {row} does not match {len(axes)} axes")
        key = tuple(b.index(l) if isinstance(l, str) else l for (b, _), l in zip(axes, labs))
        ent[key] = ent.get(key, Fraction(0)) + scalar(c)
    return Tensor(tuple(axes), ent)


def map_tensor(ins: Sequence[Basis], outs: Sequence[Basis], fn) -> Tensor:
    """Tabulate ``fn(in_index_tuple) -> Elem`` over every input basis tuple."""
    import itertools

    ent: Elem = {}
    for key in itertools.product(*(range(b.dim) for b in ins)):
        for out, c in fn(key).items():
            if c:
                ent[key + out] = c
    return Tensor(tuple((b, IN) for b in ins) + tuple((b, OUT) for b in outs), ent)


# ---------------------------------------------------------------- contraction


def contract(t1: Tensor, t2: Tensor, pairs: Sequence[Tuple[int, int]]) -> Tensor:
    """Sum over paired axes.  Remaining axes: those of ``t1`` then ``t2``."""
    pairs = [tuple(p) for p in pairs]
    for a, b in pairs:
        (b1, v1), (b2, v2) = t1.axes[a], t2.axes[b]
        if b1.labels != b2.labels:
            raise StructureError(f"contract: axis {a} ({b1.name}) vs axis {b} ({b2.name})")
        if v1 == v2:
            raise StructureError(f"contract: axes {a},{b} are both '{v1}'")
    a_idx = [a for a, _ in pairs]
    b_idx = [b for _, b in pairs]
    if len(set(a_idx)) != len(a_idx) or len(set(b_idx)) != len(b_idx):
        raise StructureError("contract: an axis is paired twice")
    rest1 = [i for i in range(t1.arity) if i not in a_idx]
    rest2 = [i for i in range(t2.arity) if i not in b_idx]
    groups: Dict[Index, list] = {}
    for k, c in t2.entries.items():
        groups.setdefault(tuple(k[i] for i in b_idx), []).append((tuple(k[i] for i in rest2), c))
    out: Elem = {}
    for k, c in t1.entries.items():
        g = groups.get(tuple(k[i] for i in a_idx))
        if not g:
            continue
        head = tuple(k[i] for i in rest1)
        for tail, d in g:
            key = head + tail
            out[key] = out.get(key, 0) + c * d
    axes = tuple(t1.axes[i] for i in rest1) + tuple(t2.axes[i] for i in rest2)
    return Tensor(axes, out)


def kron(t1: Tensor, t2: Tensor) -> Tensor:
    out = {}
    for k1, c1 in t1.entries.items():
        for k2, c2 in t2.entries.items():
            out[k1 + k2] = c1 * c2
    return Tensor(t1.axes + t2.axes, out)


def compose(g: Tensor, f: Tensor) -> Tensor:
    """``g o f`` for square maps stored as (in, out)."""
    return contract(f, g, [(1, 0)])


# ---------------------------------------------------------------- element algebra
#
# Elements of V1 (x) ... (x) Vk are plain dicts {index tuple: Fraction}.


def basis_elem(*idx: int) -> Elem:
    return {tuple(idx): Fraction(1)}


def add(*terms) -> Elem:
    """``add(x, y)`` or ``add((c, x), (d, y))`` with scalar weights."""
    out: Elem = {}
    for t in terms:
        c, x = t if isinstance(t, tuple) else (1, t)
        if not c:
            continue
        for k, v in x.items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def scale(c, x: Elem) -> Elem:
    c = Fraction(c)
    return {k: c * v for k, v in x.items()} if c else {}


def apply(op: Tensor, x: Elem, slots: Sequence[int]) -> Elem:
    """Apply a map to the tensor factors ``slots`` of ``x``.

    The outputs replace the consumed factors, inserted where ``slots[0]`` sat.
    """
    tab = op.table
    if len(slots) != len(op.in_axes):
        raise StructureError(f"map takes {len(op.in_axes)} inputs, got slots {tuple(slots)}")
    slots = tuple(slots)
    undefined = op.undefined
    out: Elem = {}
    for k, c in x.items():
        key = tuple(k[s] for s in slots)
        if key in undefined:
            raise Overflow(key)
        imgs = tab.get(key)
        if not imgs:
            continue
        rest = [k[i] for i in range(len(k)) if i not in slots]
        pos = sum(1 for i in range(slots[0]) if i not in slots)
        head, tail = tuple(rest[:pos]), tuple(rest[pos:])
        for o, d in imgs:
            kk = head + o + tail
            s = out.get(kk, 0) + c * d
            if s:
                out[kk] = s
            else:
                out.pop(kk, None)
    return out


def permute(x: Elem, perm: Sequence[int]) -> Elem:
    """Reorder tensor factors: factor ``i`` of the result is factor ``perm[i]``."""
    return {tuple(k[p] for p in perm): c for k, c in x.items()}


def tensor_elems(x: Elem, y: Elem) -> Elem:
    out: Elem = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            out[k1 + k2] = c1 * c2
    return out


# ---------------------------------------------------------------- row reduction


def rref(rows: Iterable[Mapping[int, Fraction]], order: Sequence[int] | None = None):
    """Reduced row echelon form of sparse rows.

    ``order`` ranks columns for pivot choice: the earliest column in ``order``
    carrying a nonzero entry becomes the pivot.  Returns ``(rows, pivots)``
    with each row normalised to 1 at its pivot.
    """
    rank = None if order is None else {c: i for i, c in enumerate(order)}
    key = (lambda c: c) if rank is None else rank.__getitem__
    echelon: Dict[int, Dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        for q in [c for c in r if c in echelon]:
            f = r.get(q)
            if f:
                _axpy(r, -f, echelon[q])
        if not r:
            continue
        p = min(r, key=key)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for other in echelon.values():
            f = other.get(p)
            if f:
                _axpy(other, -f, r)
        echelon[p] = r
    pivots = sorted(echelon, key=key)
    return [echelon[p] for p in pivots], pivots


def _axpy(target: Dict[int, Fraction], a: Fraction, src: Mapping[int, Fraction]):
    for c, v in src.items():
        s = target.get(c, 0) + a * v
        if s:
            target[c] = s
        else:
            target.pop(c, None)


def solve_nullspace(rows: Iterable, dim: int, order: Sequence[int] | None = None) -> list:
    """Basis of the joint kernel of linear functionals on a ``dim``-space.

    Rows are ``{column: coeff}`` dicts or covector tensors (single ``in`` axis).
    Each kernel vector has a 1 at one free column and zeros at the others.
    """
    plain = []
    for r in rows:
        if isinstance(r, Tensor):
            if r.arity != 1:
                raise StructureError("functional must have a single axis")
            r = {k[0]: c for k, c in r.entries.items()}
        plain.append(r)
    ech, piv = rref(plain, order)
    pivset = set(piv)
    cols = list(range(dim)) if order is None else list(order)
    kernel = []
    for f in cols:
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for p, row in zip(piv, ech):
            c = row.get(f)
            if c:
                v[p] = -c
        kernel.append(dict(sorted(v.items())))
    return kernel


def invert_map(t: Tensor) -> Tensor:
    """Exact inverse of a square map on one basis."""
    (bi, vi), (bo, vo) = t.axes if t.arity == 2 else ((None, None), (None, None))
    if t.arity != 2 or (vi, vo) != (IN, OUT) or bi.labels != bo.labels:
        raise StructureError("invert_map needs a square (in, out) map over one basis")
    n = bi.dim
    # row o of [M | I]: M[o][i] lives in column i, identity in column n + o
    rows = []
    for o in range(n):
        r = {i: c for (i, oo), c in t.entries.items() if oo == o}
        r[n + o] = Fraction(1)
        rows.append(r)
    ech, piv = rref(rows)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise NotInvertible(f"map on {bi.name} is singular")
    ent = {}
    for i, row in enumerate(ech[:n]):
        for c, v in row.items():
            if c >= n:
                ent[(c - n, i)] = v
    return Tensor(((bi, IN), (bo, OUT)), ent)


# ---------------------------------------------------------------- subspaces


class Subspace:
    """Subspace of a coordinate space, kept in canonical reduced echelon form."""

    def __init__(self, basis: Basis, vectors: Iterable[Mapping[int, Fraction]] = (), order=None):
        self.basis = basis
        self.order = None if order is None else tuple(order)
        self.rows, self.pivots = rref((dict(v) for v in vectors), self.order)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        r = {c: Fraction(x) for c, x in v.items() if x}
        for p, row in zip(self.pivots, self.rows):
            f = r.get(p)
            if f:
                _axpy(r, -f, row)
        return r

    def __contains__(self, v) -> bool:
        return not self.reduce(v)

    def vectors(self) -> list:
        return [dict(sorted(r.items())) for r in self.rows]

    def extend(self, vectors) -> "Subspace":
        return Subspace(self.basis, self.vectors() + [dict(v) for v in vectors], self.order)

    def intersect(self, other: "Subspace") -> "Subspace":
        # v = sum a_i u_i = sum b_j w_j ; solve for (a, b)
        us, ws = self.vectors(), other.vectors()
        n = self.basis.dim
        rows = []
        for c in range(n):
            r = {i: u.get(c, 0) for i, u in enumerate(us)}
            r.update({len(us) + j: -w.get(c, 0) for j, w in enumerate(ws)})
            rows.append({k: v for k, v in r.items() if v})
        sols = solve_nullspace(rows, len(us) + len(ws))
        vecs = []
        for s in sols:
            v: Dict[int, Fraction] = {}
            for i, u in enumerate(us):
                if s.get(i):
                    _axpy(v, s[i], u)
            vecs.append(v)
        return Subspace(self.basis, vecs)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.vectors() == other.vectors()

    def labelled(self) -> list:
        labs = self.basis.labels
        return [{labs[c]: v for c, v in row.items()} for row in self.vectors()]

    def __repr__(self):
        return f"Subspace({self.basis.name}, dim={self.dim})"
