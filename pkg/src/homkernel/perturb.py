"""Single-constant perturbations of built-in presentations.

Each seed changes one structure constant of a built-in document and names
an axiom the change must break.  The fixture files shipped in
``homkernel/fixtures`` are generated from the seeds by :func:`write_fixtures`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from typing import List

from . import builtins
from .core import Tensor, scalar
from .document import PresentationDocument, emit, to_document
from .lie import derive_bracket

__all__ = ["Seed", "seeds", "base_document", "perturbed_document", "fixture_text", "write_fixtures", "FIXTURE_DIR"]

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


@dataclass(frozen=True)
class Seed:
    id: str
    base: str
    kind: str
    tensor: str
    key: tuple
    value: str
    expect: str


def seeds() -> List[Seed]:
    raw = json.loads(resources.files("homkernel").joinpath("data/perturbations.json").read_text("utf-8"))
    return [Seed(s["id"], s["base"], s["kind"], s["tensor"], tuple(s["key"]), s["value"], s["expect"]) for s in raw]


def base_document(base: str) -> PresentationDocument:
    """``lie:NAME`` is the derived bracket of a built-in; anything else a built-in."""
    if base.startswith("lie:"):
        return to_document(derive_bracket(builtins.get(base[4:])))
    return to_document(builtins.get(base))


def perturbed_document(seed: Seed) -> PresentationDocument:
    doc = base_document(seed.base)
    t = doc.tensors[seed.tensor]
    key = tuple(b.index(lab) for (b, _), lab in zip(t.axes, seed.key))
    if len(key) != t.arity:
        raise ValueError(f"seed {seed.id}: key {seed.key} does not match tensor {seed.tensor}")
    ent = dict(t.entries)
    ent[key] = scalar(seed.value)
    tensors = dict(doc.tensors)
    tensors[seed.tensor] = Tensor(t.axes, ent, t.undefined)
    return PresentationDocument(doc.kind, doc.basis, tensors, f"{doc.name}~{seed.id}", doc.hopf,
                                doc.grading, dict(doc.flags))


def fixture_text(seed: Seed) -> str:
    head = (f"# perturbation {seed.id}: {seed.tensor}({' '.join(seed.key)}) := {seed.value}; "
            f"verify --as {seed.kind} must fail {seed.expect}\n")
    return head + emit(perturbed_document(seed))


def write_fixtures(directory: str = FIXTURE_DIR) -> List[str]:
    os.makedirs(directory, exist_ok=True)
    paths = []
    for s in seeds():
        p = os.path.join(directory, f"{s.id}.fixture")
        with open(p, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(fixture_text(s))
        paths.append(p)
    return paths


if __name__ == "__main__":
    for p in write_fixtures():
        print(p)
