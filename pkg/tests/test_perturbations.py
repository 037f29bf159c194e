import os

import pytest

from homkernel.document import load_document
from homkernel.perturb import FIXTURE_DIR, base_document, fixture_text, perturbed_document, seeds
from homkernel.suite import verify

SEEDS = seeds()


def test_about_twenty_seeds_with_unique_ids():
    assert len(SEEDS) >= 20
    assert len({s.id for s in SEEDS}) == len(SEEDS)


@pytest.mark.parametrize("seed", SEEDS, ids=[s.id for s in SEEDS])
def test_seed_breaks_named_axiom_only_after_perturbation(seed):
    base = verify(base_document(seed.base).build(), seed.kind)
    assert seed.expect not in base.failed()
    rep = verify(perturbed_document(seed).build(), seed.kind)
    assert seed.expect in rep.failed()
    assert rep[seed.expect].witnesses


@pytest.mark.parametrize("seed", SEEDS, ids=[s.id for s in SEEDS])
def test_shipped_fixture_is_current(seed):
    path = os.path.join(FIXTURE_DIR, f"{seed.id}.fixture")
    with open(path, encoding="utf-8") as fh:
        assert fh.read() == fixture_text(seed)
    # and the witness is reproducible from the file
    a = verify(load_document(path).build(), seed.kind).machine()
    b = verify(load_document(path).build(), seed.kind).machine()
    assert a == b
