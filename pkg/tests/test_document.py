from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkernel import builtins
from homkernel.core import IN, OUT, Basis, Tensor
from homkernel.document import DocumentError, PresentationDocument, emit, load, parse, to_document
from homkernel.enveloping import build_enveloping
from homkernel.lie import derive_bracket
from homkernel.suite import verify

A4 = emit(to_document(builtins.get("a4")))


@pytest.mark.parametrize("name", builtins.names())
def test_builtin_round_trip_is_byte_exact(name):
    text = emit(to_document(builtins.get(name)))
    assert emit(parse(text)) == text


def test_constructed_objects_round_trip():
    l = derive_bracket(builtins.get("a4"))
    u = build_enveloping(l, 2)
    for doc in (to_document(l), to_document(u.algebra, "enveloping")):
        text = emit(doc)
        assert emit(parse(text)) == text


def test_emission_is_deterministic():
    assert emit(to_document(builtins.get("gl(2)"))) == emit(to_document(builtins.get("gl(2)")))


def test_non_lowest_terms_normalised():
    text = A4.replace("  x g gx 1\n", "  x g gx 2/2\n").replace("  x x -1\n", "  x x -2/2\n", 1)
    assert text != A4
    assert emit(parse(text)) == A4
    half = A4.replace("  x g gx 1\n", "  x g gx 2/4\n")
    assert "  x g gx 1/2\n" in emit(parse(half))


def test_comments_and_blank_lines_ignored():
    text = "# header comment\n\n" + A4.replace("kind yd-algebra\n", "kind yd-algebra\n# between\n\n")
    assert emit(parse(text)) == A4


def test_unicode_minus_accepted():
    assert emit(parse(A4.replace("  x x -1\n", "  x x −1\n", 1))) == A4


def _err(text):
    with pytest.raises(DocumentError) as ei:
        parse(text)
    return ei.value


def test_index_out_of_range_names_tensor_and_index():
    e = _err(A4.replace("  x g gx 1\n", "  x y gx 1\n"))
    assert "tensor m" in e.message and "'y'" in e.message
    assert e.line == A4.splitlines().index("  x g gx 1") + 1
    assert e.col == 5


def test_malformed_rational_rejected_with_position():
    e = _err(A4.replace("  x g gx 1\n", "  x g gx 1.5\n"))
    assert "1.5" in e.message
    assert e.line == A4.splitlines().index("  x g gx 1") + 1


def test_unknown_kind():
    e = _err(A4.replace("kind yd-algebra", "kind hom-lie-ring"))
    assert e.line == 2 and "hom-lie-ring" in e.message


def test_dangling_reference():
    e = _err(A4.replace("hopf builtin:h2", "hopf builtin:nosuch"))
    assert e.line == 4


def test_missing_file_reference(tmp_path):
    e = _err(A4.replace("hopf builtin:h2", f"hopf file:{tmp_path}/missing.hk"))
    assert e.line == 4


def test_row_arity_mismatch():
    e = _err(A4.replace("  x g gx 1\n", "  x g 1\n"))
    assert "m" in e.message


def test_duplicate_row():
    e = _err(A4.replace("  x g gx 1\n", "  x g gx 1\n  x g gx 1\n"))
    assert "duplicate" in e.message


def test_missing_tensor():
    start = A4.index("tensor unit")
    end = A4.index("end\n", start) + 4
    e = _err(A4[:start] + A4[end:])
    assert "unit" in e.message


def test_bad_header():
    e = _err(A4.replace("homkernel-presentation 1", "homkernel-presentation 9"))
    assert e.line == 1


def test_structural_inconsistency_is_document_error():
    # a twist that is not invertible cannot be built
    head, tail = A4.split("tensor beta", 1)
    text = head + "tensor beta" + tail.replace("  g g 1\n", "  g 1 1\n", 1)
    assert text != A4
    with pytest.raises(DocumentError):
        parse(text).build()


def test_file_reference_resolved_relative(tmp_path):
    (tmp_path / "h.hk").write_text(emit(to_document(builtins.get("h2"))))
    sub = tmp_path / "sub"
    sub.mkdir()
    (sub / "a.hk").write_text(A4.replace("hopf builtin:h2", "hopf file:../h.hk"))
    A = load(str(sub / "a.hk"))
    assert verify(A, "yd-algebra").passed


def test_inline_hopf_block():
    h2 = emit(to_document(builtins.get("h2"))).rstrip("\n")
    text = A4.replace("hopf builtin:h2", "begin hopf\n" + h2 + "\nend hopf")
    doc = parse(text)
    assert emit(parse(emit(doc))) == emit(doc)
    assert verify(doc.build(), "yd-algebra").passed


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                       rationals.filter(lambda q: q != 0), max_size=12))
def test_random_tensor_round_trip(entries):
    B = Basis("B", ["p", "q", "r"])
    m = Tensor(((B, IN), (B, IN), (B, OUT)), entries)
    unit = Tensor(((B, OUT),), {(0,): Fraction(1)})
    alpha = Tensor(((B, IN), (B, OUT)), {(i, i): Fraction(1) for i in range(3)})
    doc = PresentationDocument("hom-algebra", B, {"m": m, "unit": unit, "alpha": alpha}, "rand")
    text = emit(doc)
    back = parse(text)
    assert emit(back) == text
    assert dict(back.tensors["m"].entries) == {k: v for k, v in entries.items()}
