"""Plain-text presentation documents.

A document is line oriented::

    homkernel-presentation 1
    kind yd-algebra
    name a4
    hopf builtin:h2
    basis A 1 x g gx
    tensor beta A:in A:out
      1 1 1
      x x -1
    end
    ...

Tensor rows list one basis label per axis followed by an exact rational.
Inside a tensor block, ``undefined <labels>`` marks an input key whose
image lies outside a truncation window.  ``hopf`` references a built-in
(``builtin:NAME``), another file (``file:PATH``, relative to the
referencing document) or an inline block between ``begin hopf`` and
``end hopf``.  Lines starting with ``#`` are comments.  Emission is
canonical: tensors sorted by name, rows by index, rationals in lowest
terms.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .core import IN, OUT, Basis, StructureError, Tensor, fmt, scalar
from .hopf import AlgebraPresentation, CoalgebraPresentation, HopfPresentation
from .lie import BraidedLiePresentation
from .yd import YDAlgebraPresentation, YDModulePresentation

__all__ = ["DocumentError", "PresentationDocument", "parse", "emit", "load", "to_document", "KINDS"]

HEADER = "homkernel-presentation"
VERSION = 1

# kind -> (needs a Hopf reference, required tensors, optional tensors)
KINDS: Dict[str, Tuple[bool, Tuple[str, ...], Tuple[str, ...]]] = {
    "hom-algebra": (False, ("alpha", "m", "unit"), ()),
    "hom-coalgebra": (False, ("counit", "delta", "gamma"), ()),
    "hom-bialgebra": (False, ("alpha", "counit", "delta", "m", "unit"), ()),
    "hom-hopf": (False, ("alpha", "antipode", "counit", "delta", "m", "unit"), ()),
    "biproduct": (False, ("alpha", "antipode", "counit", "delta", "m", "unit"), ()),
    "yd-module": (True, ("action", "beta", "coaction"), ()),
    "yd-algebra": (True, ("action", "beta", "coaction", "m", "unit"), ("antipode", "counit", "delta")),
    "braided-lie": (True, ("action", "beta", "bracket", "coaction"), ()),
    "enveloping": (True, ("action", "antipode", "beta", "coaction", "counit", "delta", "m", "unit"), ()),
}

_TOKEN = re.compile(r"\S+")


class DocumentError(StructureError):
    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = ""):
        self.message, self.line, self.col, self.source = message, line, col, source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}line {line}, col {col}: {message}" if line else f"{where}{message}")


@dataclass
class PresentationDocument:
    kind: str
    basis: Basis
    tensors: Dict[str, Tensor]
    name: str = ""
    hopf: Union[str, "PresentationDocument", None] = None
    grading: Optional[Tuple[int, ...]] = None
    flags: Dict[str, str] = field(default_factory=dict)
    version: int = VERSION
    base_dir: str = ""
    source: str = ""

    def hopf_presentation(self) -> Optional[HopfPresentation]:
        if self.hopf is None:
            return None
        if isinstance(self.hopf, PresentationDocument):
            return self.hopf.build()
        return _resolve_ref(self.hopf, self.base_dir)

    def build(self):
        """The presentation object described by this document."""
        T = self.tensors
        B = self.basis
        md = int(self.flags["max-degree"]) if "max-degree" in self.flags else None
        origin = self.source or f"document:{self.name}"
        k = self.kind
        try:
            if k == "hom-algebra":
                return AlgebraPresentation(B, T["m"], T["unit"], T["alpha"], name=self.name)
            if k == "hom-coalgebra":
                return CoalgebraPresentation(B, T["delta"], T["counit"], T["gamma"], name=self.name)
            if k in ("hom-bialgebra", "hom-hopf", "biproduct"):
                return HopfPresentation(B, T["m"], T["unit"], T["delta"], T["counit"], T["alpha"],
                                        T.get("antipode"), name=self.name, origin=origin,
                                        grading=self.grading, max_degree=md,
                                        strict_antipode=self.flags.get("literal") != "yes")
            H = self.hopf_presentation()
            common = dict(name=self.name, origin=origin, grading=self.grading, max_degree=md)
            if k == "yd-module":
                return YDModulePresentation(H, B, T["action"], T["coaction"], T["beta"], **common)
            if k == "braided-lie":
                mod = YDModulePresentation(H, B, T["action"], T["coaction"], T["beta"], **common)
                return BraidedLiePresentation(mod, T["bracket"])
            return YDAlgebraPresentation(H, B, T["action"], T["coaction"], T["beta"], m=T["m"], unit=T["unit"],
                                         delta=T.get("delta"), counit=T.get("counit"),
                                         antipode=T.get("antipode"), **common)
        except DocumentError:
            raise
        except StructureError as e:
            raise DocumentError(str(e), source=self.source) from None


# ---------------------------------------------------------------- parsing


def _resolve_ref(ref: str, base_dir: str):
    from . import builtins

    scheme, _, rest = ref.partition(":")
    if scheme == "builtin":
        obj = builtins.get(rest)
    elif scheme == "file":
        obj = load(os.path.join(base_dir, rest))
    else:
        raise StructureError(f"unknown reference scheme in {ref!r}")
    if isinstance(obj, HopfPresentation):
        return obj
    if isinstance(obj, YDAlgebraPresentation) and obj.delta is not None:
        return obj.as_hopf()
    raise StructureError(f"reference {ref!r} is not a Hopf algebra")


def _tokens(line: str):
    if line.lstrip().startswith("#"):
        return []
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse(text: str, base_dir: str = "", source: str = "", _offset: int = 0) -> PresentationDocument:
    """Parse document text.  Errors carry 1-based line and column."""
    lines = text.split("\n")

    def err(msg, ln, col=1):
        return DocumentError(msg, ln + _offset, col, source)

    rows = [(i + 1, _tokens(l)) for i, l in enumerate(lines)]
    rows = [(n, t) for n, t in rows if t]
    if not rows:
        raise err("empty document", 1)
    n, toks = rows[0]
    if toks[0][0] != HEADER or len(toks) != 2:
        raise err(f"expected header '{HEADER} {VERSION}'", n, toks[0][1])
    if toks[1][0] != str(VERSION):
        raise err(f"unsupported version {toks[1][0]}", n, toks[1][1])

    kind = name = None
    hopf_ref = None
    basis: Optional[Basis] = None
    grading = None
    flags: Dict[str, str] = {}
    raw_tensors: Dict[str, tuple] = {}
    i = 1
    while i < len(rows):
        n, toks = rows[i]
        key, col = toks[0]
        args = toks[1:]
        if key == "kind":
            if len(args) != 1:
                raise err("kind takes one value", n, col)
            if args[0][0] not in KINDS:
                raise err(f"unknown kind {args[0][0]!r}", n, args[0][1])
            kind = args[0][0]
        elif key == "name":
            if len(args) != 1:
                raise err("name takes one value", n, col)
            name = args[0][0]
        elif key == "hopf":
            if len(args) != 1:
                raise err("hopf takes one reference", n, col)
            ref, rcol = args[0]
            if not (ref.startswith("builtin:") or ref.startswith("file:")):
                raise err(f"bad reference {ref!r}; use builtin:NAME, file:PATH or a begin/end hopf block", n, rcol)
            hopf_ref = (ref, n, rcol)
        elif key == "begin":
            if [a for a, _ in args] != ["hopf"]:
                raise err("only 'begin hopf' blocks are supported", n, col)
            j = i + 1
            while j < len(rows) and [t for t, _ in rows[j][1]] != ["end", "hopf"]:
                j += 1
            if j == len(rows):
                raise err("unterminated 'begin hopf' block", n, col)
            first, last = rows[i + 1][0], rows[j][0]
            inner = "\n".join(lines[first - 1:last - 1])
            sub = parse(inner, base_dir, source, _offset + first - 1)
            hopf_ref = (sub, n, col)
            i = j
        elif key == "basis":
            if basis is not None:
                raise err("duplicate basis", n, col)
            if len(args) < 2:
                raise err("basis needs a name and at least one label", n, col)
            labels = [a for a, _ in args[1:]]
            seen = {}
            for lab, lc in args[1:]:
                if lab in seen:
                    raise err(f"duplicate basis label {lab!r}", n, lc)
                seen[lab] = lc
            basis = Basis(args[0][0], labels)
        elif key == "grading":
            try:
                grading = tuple(int(a) for a, _ in args)
            except ValueError:
                raise err("grading takes integers", n, col) from None
        elif key == "flag":
            if len(args) != 2:
                raise err("flag takes a key and a value", n, col)
            flags[args[0][0]] = args[1][0]
        elif key == "tensor":
            if len(args) < 2:
                raise err("tensor needs a name and at least one axis", n, col)
            tname, tcol = args[0]
            if tname in raw_tensors:
                raise err(f"duplicate tensor {tname!r}", n, tcol)
            axes = []
            for a, ac in args[1:]:
                bname, sep, var = a.partition(":")
                if not sep or var not in (IN, OUT):
                    raise err(f"axis must look like NAME:in or NAME:out, got {a!r}", n, ac)
                axes.append((bname, var, ac))
            body = []
            j = i + 1
            while j < len(rows) and rows[j][1][0][0] != "end":
                body.append(rows[j])
                j += 1
            if j == len(rows):
                raise err(f"tensor {tname!r} has no 'end'", n, tcol)
            if len(rows[j][1]) != 1:
                raise err("'end' takes no arguments", rows[j][0], rows[j][1][1][1])
            raw_tensors[tname] = (n, tcol, axes, body)
            i = j
        else:
            raise err(f"unknown keyword {key!r}", n, col)
        i += 1

    if kind is None:
        raise err("missing 'kind'", rows[0][0])
    if basis is None:
        raise err("missing 'basis'", rows[0][0])
    needs_hopf, required, optional = KINDS[kind]
    if needs_hopf and hopf_ref is None:
        raise err(f"kind {kind} needs a 'hopf' reference", rows[0][0])
    if not needs_hopf and hopf_ref is not None:
        raise err(f"kind {kind} takes no 'hopf' reference", hopf_ref[1], hopf_ref[2])
    if grading is not None and len(grading) != basis.dim:
        raise err(f"grading has {len(grading)} entries for a basis of dimension {basis.dim}", rows[0][0])

    hopf_basis = None
    hopf_val = None
    if hopf_ref is not None:
        ref, hn, hc = hopf_ref
        hopf_val = ref
        if isinstance(ref, PresentationDocument):
            if ref.kind not in ("hom-hopf", "hom-bialgebra"):
                raise err("inline hopf block must be of kind hom-hopf", hn, hc)
            hopf_basis = ref.basis
        else:
            try:
                hopf_basis = _resolve_ref(ref, base_dir).basis
            except (KeyError, OSError, StructureError) as e:
                raise err(f"dangling reference {ref!r}: {e}", hn, hc) from None
    bases = {basis.name: basis}
    if hopf_basis is not None:
        if hopf_basis.name in bases and hopf_basis.labels != basis.labels:
            raise err(f"basis name {basis.name!r} clashes with the Hopf algebra's basis", rows[0][0])
        bases.setdefault(hopf_basis.name, hopf_basis)

    tensors: Dict[str, Tensor] = {}
    for tname, (tn, tcol, axes, body) in raw_tensors.items():
        if tname not in required and tname not in optional:
            raise err(f"tensor {tname!r} is not part of kind {kind}", tn, tcol)
        ax = []
        for bname, var, ac in axes:
            if bname not in bases:
                raise err(f"tensor {tname}: unknown basis {bname!r}", tn, ac)
            ax.append((bases[bname], var))
        ent = {}
        undefined = set()
        for rn, rtoks in body:
            is_undef = rtoks[0][0] == "undefined"
            fields = rtoks[1:] if is_undef else rtoks
            want = len(ax) if not is_undef else sum(1 for _, v in ax if v == IN)
            got = len(fields) if is_undef else len(fields) - 1
            if got != want:
                raise err(f"tensor {tname}: row has {got} indices, expected {want}", rn, rtoks[0][1])
            idx = []
            for (b, _), (lab, lc) in zip([a for a in ax if not is_undef or a[1] == IN], fields):
                if lab not in b.labels:
                    raise err(f"tensor {tname}: index {lab!r} out of range for basis {b.name}", rn, lc)
                idx.append(b.labels.index(lab))
            if is_undef:
                undefined.add(tuple(idx))
                continue
            val, vc = fields[-1]
            try:
                c = scalar(val)
            except StructureError as e:
                raise err(f"tensor {tname}: {e}", rn, vc) from None
            key = tuple(idx)
            if key in ent:
                raise err(f"tensor {tname}: duplicate entry for {' '.join(f for f, _ in fields[:-1])}", rn, rtoks[0][1])
            ent[key] = c
        tensors[tname] = Tensor(tuple(ax), ent, frozenset(undefined))
    for r in required:
        if r not in tensors:
            raise err(f"kind {kind} needs tensor {r!r}", rows[0][0])
    return PresentationDocument(kind, basis, tensors, name or "", hopf_val, grading, flags,
                                VERSION, base_dir, source)


def load(path: str):
    """Parse a document file and build its presentation."""
    return load_document(path).build()


def load_document(path: str) -> PresentationDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except UnicodeDecodeError as e:
        raise DocumentError(f"not UTF-8 text: {e}", source=path) from None
    return parse(text, os.path.dirname(os.path.abspath(path)), path)


# ---------------------------------------------------------------- emission


def _emit_tensor(name: str, t: Tensor) -> List[str]:
    head = " ".join(f"{b.name}:{v}" for b, v in t.axes)
    out = [f"tensor {name} {head}"]
    for k, c in t.entries.items():
        labs = " ".join(b.labels[i] for (b, _), i in zip(t.axes, k))
        out.append(f"  {labs} {fmt(c)}")
    ins = [b for b, v in t.axes if v == IN]
    for k in sorted(t.undefined):
        out.append("  undefined " + " ".join(b.labels[i] for b, i in zip(ins, k)))
    out.append("end")
    return out


def emit(doc: PresentationDocument) -> str:
    lines = [f"{HEADER} {doc.version}", f"kind {doc.kind}"]
    if doc.name:
        lines.append(f"name {doc.name}")
    if isinstance(doc.hopf, PresentationDocument):
        lines.append("begin hopf")
        lines.extend(emit(doc.hopf).rstrip("\n").split("\n"))
        lines.append("end hopf")
    elif doc.hopf is not None:
        lines.append(f"hopf {doc.hopf}")
    lines.append(f"basis {doc.basis.name} " + " ".join(doc.basis.labels))
    if doc.grading is not None:
        lines.append("grading " + " ".join(str(g) for g in doc.grading))
    for k in sorted(doc.flags):
        lines.append(f"flag {k} {doc.flags[k]}")
    for name in sorted(doc.tensors):
        lines.extend(_emit_tensor(name, doc.tensors[name]))
    return "\n".join(lines) + "\n"


def _hopf_ref(H: HopfPresentation):
    if H.origin.startswith("builtin:"):
        return H.origin
    return to_document(H, "hom-hopf")


def _doc_name(obj) -> str:
    name = getattr(obj, "name", "") or ""
    return re.sub(r"\s+", "_", name)


def to_document(obj, kind: Optional[str] = None, flags: Optional[Dict[str, str]] = None) -> PresentationDocument:
    """Document for a presentation object; ``kind`` defaults from its type."""
    flags = dict(flags or {})
    if isinstance(obj, BraidedLiePresentation):
        M = obj.module
        t = {"action": M.action, "coaction": M.coaction, "beta": M.beta, "bracket": obj.bracket}
        return PresentationDocument("braided-lie", M.basis, t, _doc_name(M), _hopf_ref(M.hopf),
                                    M.grading, flags)
    if isinstance(obj, YDModulePresentation):
        t = {"action": obj.action, "coaction": obj.coaction, "beta": obj.beta}
        if isinstance(obj, YDAlgebraPresentation) and kind != "yd-module":
            t.update(m=obj.m, unit=obj.unit)
            for extra in ("delta", "counit", "antipode"):
                if getattr(obj, extra) is not None:
                    t[extra] = getattr(obj, extra)
            kind = kind or "yd-algebra"
        else:
            kind = "yd-module"
        if obj.max_degree is not None:
            flags.setdefault("max-degree", str(obj.max_degree))
        return PresentationDocument(kind, obj.basis, t, _doc_name(obj), _hopf_ref(obj.hopf), obj.grading, flags)
    if isinstance(obj, HopfPresentation):
        t = {"m": obj.m, "unit": obj.unit, "delta": obj.delta, "counit": obj.counit, "alpha": obj.alpha}
        if obj.antipode is not None:
            t["antipode"] = obj.antipode
        kind = kind or ("hom-hopf" if obj.antipode is not None else "hom-bialgebra")
        if obj.max_degree is not None:
            flags.setdefault("max-degree", str(obj.max_degree))
        return PresentationDocument(kind, obj.basis, t, _doc_name(obj), None, obj.grading, flags)
    if isinstance(obj, AlgebraPresentation):
        return PresentationDocument("hom-algebra", obj.basis, {"m": obj.m, "unit": obj.unit, "alpha": obj.alpha},
                                    _doc_name(obj), None, None, flags)
    if isinstance(obj, CoalgebraPresentation):
        t = {"delta": obj.delta, "counit": obj.counit, "gamma": obj.gamma}
        return PresentationDocument("hom-coalgebra", obj.basis, t, _doc_name(obj), None, None, flags)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
