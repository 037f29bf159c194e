"""Command-line driver.

Exit codes: 0 when every checked axiom holds, 1 on an axiom failure, a
golden mismatch or a failed construction precondition, 2 on unreadable or
malformed input.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import List, Optional

from . import builtins, suite
from .core import StructureError, Subspace, fmt
from .document import DocumentError, emit, load_document, to_document
from .endv import AlphaNotIdentity, EndVPresentation, build_biproduct, build_endv, verify_biproduct
from .enveloping import MONOMIAL_ORDERS, DegreeTooSmall, NotInvolutive, build_enveloping, verify_enveloping_hopf
from .lie import NotInvariant, center, invariants
from .perturb import FIXTURE_DIR
from .report import DEFAULT_WITNESS_CAP, Report
from .yd import BraidingNotSymmetric, YDAlgebraPresentation, YDModulePresentation

__all__ = ["main", "resolve", "golden_dir", "golden_name", "subspace_text"]

MAX_DEGREE = 6
PRECONDITION_ERRORS = (NotInvolutive, DegreeTooSmall, AlphaNotIdentity, BraidingNotSymmetric, NotInvariant)
PACKAGE_GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


class UnknownTarget(LookupError):
    pass


class Target:
    """A resolved command argument: the presentation and the kind it was written as."""

    def __init__(self, name: str, obj, kind: str):
        self.name, self.obj, self.kind = name, obj, kind


def resolve(name: str) -> Target:
    """A file path, a built-in name, or the name of a shipped fixture."""
    if os.path.exists(name):
        doc = load_document(name)
        return Target(name, doc.build(), doc.kind)
    try:
        obj = builtins.get(name)
    except KeyError:
        obj = None
    if obj is not None:
        return Target(name, obj, suite.default_kind(obj))
    for cand in (name, name + ".fixture"):
        p = os.path.join(FIXTURE_DIR, cand)
        if os.path.isfile(p):
            doc = load_document(p)
            return Target(name, doc.build(), doc.kind)
    raise UnknownTarget(f"no file, built-in or fixture named {name!r}")


def golden_dir() -> str:
    return os.environ.get("HOMKERNEL_GOLDEN_DIR") or PACKAGE_GOLDEN


def golden_name(command: str, target: str, extra: str = "") -> str:
    slug = re.sub(r"[^A-Za-z0-9]+", "-", os.path.basename(target)).strip("-").lower()
    return f"{command}-{slug}{extra}.golden"


def subspace_text(U: Subspace, of: str) -> str:
    lines = ["homkernel-subspace 1", f"of {of}", f"basis {U.basis.name} " + " ".join(U.basis.labels), f"dim {U.dim}"]
    for v in U.labelled():
        lines.append("vector")
        for lab in U.basis.labels:
            if lab in v:
                lines.append(f"  {lab} {fmt(v[lab])}")
        lines.append("end")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands


def _lie(t: Target):
    return suite.coerce(t.obj, "braided-lie")


def cmd_verify(a, t: Target):
    kind = a.as_kind or t.kind
    return None, suite.verify(t.obj, kind, a.cap, a.jobs)


def cmd_derive_lie(a, t: Target):
    if not isinstance(t.obj, YDAlgebraPresentation):
        raise StructureError(f"{t.name} is not a yd-algebra")
    l = _lie(t)
    rep = suite.verify(l, "braided-lie", a.cap, a.jobs)
    return emit(to_document(l)), rep


def cmd_center(a, t: Target):
    l = _lie(t)
    U = center(l)
    rep = Report(f"center {l.name}")
    rep.notes.append(f"dimension {U.dim} of {l.basis.dim}")
    return subspace_text(U, l.name), rep


def cmd_invariants(a, t: Target):
    M = suite.coerce(t.obj, "yd-module")
    U = invariants(M)
    rep = Report(f"invariants {M.name}")
    rep.notes.append(f"dimension {U.dim} of {M.basis.dim}")
    return subspace_text(U, M.name), rep


def cmd_envelope(a, t: Target):
    u = build_enveloping(_lie(t), a.max_degree, a.order)
    rep = verify_enveloping_hopf(u, a.cap)
    rep.notes.insert(0, f"dimension {u.dimension_line()}")
    return emit(to_document(u.algebra, "enveloping")), rep


def cmd_biproduct(a, t: Target):
    obj = t.obj
    if not isinstance(obj, EndVPresentation):
        if isinstance(obj, YDModulePresentation) and not isinstance(obj, YDAlgebraPresentation):
            obj = build_endv(obj)
        else:
            raise StructureError(f"{t.name} is neither a yd-module V nor a built-in End(V)")
    b = build_biproduct(obj, a.max_degree, literal=a.literal)
    rep = verify_biproduct(b, a.cap)
    rep.notes.insert(0, f"dimension {b.basis.dim} = {b.enveloping.basis.dim} x {b.hopf_factor.basis.dim}")
    flags = {"literal": "yes"} if a.literal else None
    return emit(to_document(b.hopf, "biproduct", flags)), rep


def cmd_example(a, t: Target):
    return emit(to_document(t.obj)), None


COMMANDS = {
    "verify": cmd_verify,
    "derive-lie": cmd_derive_lie,
    "center": cmd_center,
    "invariants": cmd_invariants,
    "envelope": cmd_envelope,
    "biproduct": cmd_biproduct,
    "example": cmd_example,
}


def _degree(s: str) -> int:
    n = int(s)
    if not 1 <= n <= MAX_DEGREE:
        raise argparse.ArgumentTypeError(f"max degree must be between 1 and {MAX_DEGREE}")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="homkernel", description="Exact checks for monoidal Hom-Hopf structures.")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--cap", type=int, default=DEFAULT_WITNESS_CAP, help="witnesses kept per axiom")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verification")
    common.add_argument("--out", help="write the constructed document here")
    gold = common.add_mutually_exclusive_group()
    gold.add_argument("--golden", action="store_true", help="compare output with the stored golden file")
    gold.add_argument("--write-golden", action="store_true", help="store output as the golden file")

    p = sub.add_parser("verify", parents=[common], help="run every applicable checker")
    p.add_argument("target")
    p.add_argument("--as", dest="as_kind", choices=sorted(suite.TASKS))

    for name, helptext in (("derive-lie", "bracket of a yd-algebra"), ("center", "center of a braided Lie algebra"),
                           ("invariants", "H-invariants of a yd-module"), ("example", "print a built-in document")):
        sub.add_parser(name, parents=[common], help=helptext).add_argument("target")

    for name, helptext in (("envelope", "truncated enveloping algebra"), ("biproduct", "U(End(V)) x H")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("target")
        p.add_argument("--max-degree", type=_degree, default=3)
        if name == "envelope":
            p.add_argument("--order", choices=MONOMIAL_ORDERS, default=MONOMIAL_ORDERS[0])
        else:
            p.add_argument("--literal", action="store_true",
                           help="act on f instead of f' in the product (not a Hopf algebra)")

    p = sub.add_parser("report", parents=[common], help="verify several targets (default: all built-ins)")
    p.add_argument("targets", nargs="*")
    return ap


def _golden_extra(a) -> str:
    extra = ""
    if getattr(a, "max_degree", None) is not None:
        extra += f"-n{a.max_degree}"
    if getattr(a, "order", MONOMIAL_ORDERS[0]) != MONOMIAL_ORDERS[0]:
        extra += f"-{a.order}"
    if getattr(a, "literal", False):
        extra += "-literal"
    if getattr(a, "as_kind", None):
        extra += f"-as-{a.as_kind}"
    return extra


def _render(rep: Optional[Report], fmt_: str) -> str:
    if rep is None:
        return ""
    return (rep.human() if fmt_ == "human" else rep.machine()) + "\n"


def _run_report(a) -> int:
    names = a.targets or builtins.names()
    text, status = "", 0
    for n in names:
        t = resolve(n)
        rep = suite.verify(t.obj, None if t.kind == suite.default_kind(t.obj) else t.kind, a.cap, a.jobs)
        text += _render(rep, a.format)
        if not rep.passed:
            status = 1
    sys.stdout.write(text)
    return status


def run(argv: Optional[List[str]] = None) -> int:
    a = build_parser().parse_args(argv)
    if a.command == "report":
        return _run_report(a)
    t = resolve(a.target)
    doc, rep = COMMANDS[a.command](a, t)
    report_text = _render(rep, a.format)
    payload = (doc or "") + report_text

    if a.golden or a.write_golden:
        path = os.path.join(golden_dir(), golden_name(a.command, a.target, _golden_extra(a)))
        # golden files always hold the machine form of the report
        stored = (doc or "") + _render(rep, "machine")
        if a.write_golden:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(stored)
            print(f"wrote {path}", file=sys.stderr)
        else:
            with open(path, encoding="utf-8") as fh:
                want = fh.read()
            if want != stored:
                print(f"golden mismatch: {path}", file=sys.stderr)
                return 1
            print(f"golden ok: {path}", file=sys.stderr)

    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc or "")
        sys.stdout.write(report_text)
    elif doc is not None:
        sys.stdout.write(doc)
        sys.stderr.write(report_text)
    else:
        sys.stdout.write(payload)
    return 0 if rep is None or rep.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    try:
        return run(argv)
    except PRECONDITION_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (StructureError, UnknownTarget, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
