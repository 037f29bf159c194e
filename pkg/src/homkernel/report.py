"""Verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .core import Basis, Elem, Overflow, fmt

DEFAULT_WITNESS_CAP = 5


@dataclass
class Witness:
    inputs: Tuple[str, ...]
    lhs: str
    rhs: str

    def line(self) -> str:
        return f"({', '.join(self.inputs)}): {self.lhs} != {self.rhs}"


@dataclass
class AxiomResult:
    name: str
    instances: int = 0
    failures: int = 0
    skipped: int = 0
    witnesses: List[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class Report:
    title: str
    axioms: List[AxiomResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    preconditions: List[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.preconditions) and all(a.passed for a in self.axioms)

    @property
    def preconditions_passed(self) -> bool:
        return all(a.passed for a in self.preconditions)

    def __getitem__(self, name: str) -> AxiomResult:
        for a in self.preconditions + self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)

    def failed(self) -> List[str]:
        return [a.name for a in self.preconditions + self.axioms if not a.passed]

    def merge(self, other: "Report") -> "Report":
        self.axioms.extend(other.axioms)
        self.preconditions.extend(other.preconditions)
        self.notes.extend(other.notes)
        return self

    def human(self) -> str:
        lines = [f"== {self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for tag, group in (("pre", self.preconditions), ("", self.axioms)):
            for a in group:
                status = "ok  " if a.passed else "FAIL"
                extra = f", {a.skipped} skipped" if a.skipped else ""
                label = f"[{tag}] " if tag else ""
                lines.append(f"  {status} {label}{a.name} ({a.instances} instances{extra})")
                for w in a.witnesses:
                    lines.append(f"         witness {w.line()}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)

    def machine(self) -> str:
        lines = []
        for tag, group in (("precondition", self.preconditions), ("axiom", self.axioms)):
            for a in group:
                lines.append(
                    f"{tag}\t{self.title}\t{a.name}\t{'pass' if a.passed else 'fail'}"
                    f"\t{a.instances}\t{a.failures}\t{a.skipped}"
                )
                for w in a.witnesses:
                    lines.append(f"witness\t{self.title}\t{a.name}\t{','.join(w.inputs)}\t{w.lhs}\t{w.rhs}")
        for n in self.notes:
            lines.append(f"note\t{self.title}\t{n}")
        return "\n".join(lines)


def show(x: Elem, bases) -> str:
    """Render a tensor element using basis labels, e.g. ``2*x(x)g - 1/2*gx``."""
    if not x:
        return "0"
    bases = list(bases)
    width = max(len(k) for k in x)
    bases += bases[-1:] * (width - len(bases))  # the last basis repeats
    parts = []
    for k, c in sorted(x.items()):
        mono = "(x)".join(b.labels[i] for b, i in zip(bases, k))
        if c == 1:
            parts.append(f"+{mono}")
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            s = fmt(c)
            parts.append(f"{s if s.startswith('-') else '+' + s}*{mono}")
    out = " ".join(parts)
    return out[1:] if out.startswith("+") else out


class Checker:
    """Accumulates instances of one identity ``lhs == rhs``.

    ``check`` takes zero-argument callables so that a truncated product
    raising :class:`Overflow` marks the instance as skipped, not failed.
    """

    def __init__(self, report: Report, name: str, bases, cap: int = DEFAULT_WITNESS_CAP,
                 precondition: bool = False):
        self.result = AxiomResult(name)
        self.bases = list(bases)
        self.cap = cap
        (report.preconditions if precondition else report.axioms).append(self.result)

    def check(self, inputs, lhs, rhs=None, bases=None) -> Optional[bool]:
        r = self.result
        try:
            a = lhs()
            b = rhs() if rhs is not None else {}
        except Overflow:
            r.skipped += 1
            return None
        r.instances += 1
        if a == b:
            return True
        r.failures += 1
        if len(r.witnesses) < self.cap:
            bs = self.bases if bases is None else bases
            r.witnesses.append(Witness(tuple(inputs), show(a, bs), show(b, bs)))
        return False

    def fail(self, inputs, lhs: str, rhs: str):
        r = self.result
        r.instances += 1
        r.failures += 1
        if len(r.witnesses) < self.cap:
            r.witnesses.append(Witness(tuple(inputs), lhs, rhs))

    def ok(self):
        self.result.instances += 1


def labels(bases: List[Basis], idx) -> Tuple[str, ...]:
    return tuple(b.labels[i] for b, i in zip(bases, idx))
