"""Which checkers apply to which kind of presentation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List

from .core import StructureError
from .enveloping import check_braided_hopf
from .hopf import (
    AlgebraPresentation, CoalgebraPresentation, HopfPresentation, check_antipode,
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra,
)
from .lie import BraidedLiePresentation, derive_bracket, verify_braided_lie
from .report import DEFAULT_WITNESS_CAP, Report
from .yd import (
    YDAlgebraPresentation, YDModulePresentation, check_hom_comodule, check_hom_module,
    check_yd_algebra, check_yd_compatibility,
)

__all__ = ["TASKS", "default_kind", "coerce", "run_task", "verify"]

_YD = ["hom-module", "hom-comodule", "yd-compatibility"]

TASKS: Dict[str, List[str]] = {
    "hom-algebra": ["hom-algebra"],
    "hom-coalgebra": ["hom-coalgebra"],
    "hom-bialgebra": ["hom-algebra", "hom-coalgebra", "hom-bialgebra"],
    "hom-hopf": ["hom-algebra", "hom-coalgebra", "hom-bialgebra", "antipode"],
    "biproduct": ["hom-algebra", "hom-coalgebra", "hom-bialgebra", "antipode"],
    "yd-module": _YD,
    "yd-algebra": _YD + ["hom-algebra", "yd-algebra"],
    "braided-lie": _YD + ["braided-lie"],
    "enveloping": _YD + ["yd-algebra", "braided-hopf"],
}

_RUN: Dict[str, Callable] = {
    "hom-algebra": check_hom_algebra,
    "hom-coalgebra": check_hom_coalgebra,
    "hom-bialgebra": check_hom_bialgebra,
    "antipode": check_antipode,
    "hom-module": check_hom_module,
    "hom-comodule": check_hom_comodule,
    "yd-compatibility": check_yd_compatibility,
    "yd-algebra": check_yd_algebra,
    "braided-lie": verify_braided_lie,
    "braided-hopf": check_braided_hopf,
}


def default_kind(obj) -> str:
    if isinstance(obj, BraidedLiePresentation):
        return "braided-lie"
    if isinstance(obj, YDAlgebraPresentation):
        return "enveloping" if obj.max_degree is not None and obj.delta is not None else "yd-algebra"
    if isinstance(obj, YDModulePresentation):
        return "yd-module"
    if isinstance(obj, HopfPresentation):
        if obj.origin.startswith("biproduct:"):
            return "biproduct"
        return "hom-hopf" if obj.antipode is not None else "hom-bialgebra"
    if isinstance(obj, AlgebraPresentation):
        return "hom-algebra"
    if isinstance(obj, CoalgebraPresentation):
        return "hom-coalgebra"
    raise StructureError(f"no checkers for {type(obj).__name__}")


def coerce(obj, kind: str):
    """View ``obj`` as a presentation of ``kind`` or raise ``StructureError``."""
    if kind not in TASKS:
        raise StructureError(f"unknown kind {kind!r}")
    name = getattr(obj, "name", "") or type(obj).__name__
    if kind == "hom-algebra":
        if isinstance(obj, (AlgebraPresentation, HopfPresentation, YDAlgebraPresentation)):
            return obj
    elif kind == "hom-coalgebra":
        if isinstance(obj, (CoalgebraPresentation, HopfPresentation)):
            return obj
        if isinstance(obj, YDAlgebraPresentation) and obj.delta is not None:
            return obj
    elif kind in ("hom-bialgebra", "hom-hopf", "biproduct"):
        if isinstance(obj, HopfPresentation):
            if kind != "hom-bialgebra" and obj.antipode is None:
                raise StructureError(f"{name} has no antipode")
            return obj
        if isinstance(obj, YDAlgebraPresentation) and obj.delta is not None:
            if kind != "hom-bialgebra" and obj.antipode is None:
                raise StructureError(f"{name} has no antipode")
            return obj.as_hopf()
    elif kind == "yd-module":
        if isinstance(obj, BraidedLiePresentation):
            return obj.module
        if isinstance(obj, YDModulePresentation):
            return obj
    elif kind == "yd-algebra":
        if isinstance(obj, YDAlgebraPresentation):
            return obj
    elif kind == "braided-lie":
        if isinstance(obj, BraidedLiePresentation):
            return obj
        if isinstance(obj, YDAlgebraPresentation):
            return derive_bracket(obj)
    elif kind == "enveloping":
        if isinstance(obj, YDAlgebraPresentation) and obj.delta is not None and obj.antipode is not None:
            return obj
    raise StructureError(f"{name} cannot be read as {kind}")


def run_task(obj, kind: str, task: str, cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Run one named checker on ``obj`` viewed as ``kind``."""
    p = coerce(obj, kind)
    if task in ("hom-module", "hom-comodule", "yd-compatibility") and isinstance(p, BraidedLiePresentation):
        p = p.module
    return _RUN[task](p, cap)


def _run_text(job) -> Report:
    from .document import parse

    text, kind, task, cap = job
    return run_task(parse(text).build(), kind, task, cap)


def verify(obj, kind: str = None, cap: int = DEFAULT_WITNESS_CAP, jobs: int = 1) -> Report:
    """Run every checker for ``kind``.  With ``jobs > 1`` the checkers run in
    worker processes on the emitted document; reports merge in task order."""
    kind = kind or default_kind(obj)
    p = coerce(obj, kind)
    rep = Report(f"{kind} {getattr(obj, 'name', '')}".strip())
    tasks = TASKS[kind]
    if jobs > 1 and len(tasks) > 1:
        from .document import emit, to_document

        text = emit(to_document(obj))
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
            parts = list(ex.map(_run_text, [(text, kind, t, cap) for t in tasks]))
    else:
        parts = [run_task(p, kind, t, cap) for t in tasks]
    for part in parts:
        rep.merge(part)
    if isinstance(p, BraidedLiePresentation) and p.preconditions is not None:
        rep.preconditions.extend(p.preconditions.axioms)
    return rep
