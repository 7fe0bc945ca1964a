import random

import pytest

from qha.complexes import Complex, random_complex
from qha.formats import (
    FormatError,
    Workspace,
    format_complex,
    format_rep,
    format_rep_map,
    parse_complex,
    parse_rep,
)
from qha.linalg import prime_field, rationals


def test_rep_round_trip(a2_q):
    rng = random.Random(60)
    for _ in range(10):
        m = a2_q.random_object(rng, 3)
        text = format_rep("m", m)
        back = parse_rep(text, field=a2_q.field)
        assert back.key() == m.key()


def test_complex_round_trip(a2_f5):
    rng = random.Random(61)
    for _ in range(10):
        cx = random_complex(a2_f5, rng, -1, 2, 2)
        text = format_complex("c", cx)
        back = parse_complex(text, field=a2_f5.field)
        assert back.key() == cx.key()


def test_zero_complex_round_trip(a2_f5):
    cx = Complex(a2_f5, {}, {})
    back = parse_complex(format_complex("z", cx), field=a2_f5.field)
    assert back.is_zero()


def test_morphism_round_trip(a2_q, a2_objects):
    cover = a2_q.hom_basis(a2_objects["P1"], a2_objects["S1"])[0]
    ws = Workspace(a2_q.field)
    ws.load_text(format_rep("dom", a2_objects["P1"]) + format_rep("cod", a2_objects["S1"])
                 + format_rep_map("f", cover, "dom", "cod"))
    assert a2_q.mor_eq(ws.rep_maps["f"], cover)


def test_workspace_builtin_names():
    ws = Workspace(rationals())
    q = ws.quiver("A2")
    p1 = ws.rep("P1", q)
    assert p1.dim_vector() == {"1": 1, "2": 1}
    s = ws.rep("P1+S1", q)
    assert s.dim_vector() == {"1": 2, "2": 1}


def test_workspace_duplicate_names_rejected():
    ws = Workspace(rationals())
    text = "rep m over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 0\n"
    ws.load_text(text)
    with pytest.raises(FormatError, match="duplicate"):
        ws.load_text(text)


def test_workspace_unknown_reference():
    ws = Workspace(rationals())
    with pytest.raises(ValueError, match="unknown quiver"):
        ws.quiver("Z9")
    q = ws.quiver("A2")
    with pytest.raises(ValueError, match="unknown representation"):
        ws.rep("nope", q)


def test_parse_error_names_file_and_line():
    ws = Workspace(rationals())
    text = "rep m over A2 field Q\nvertex 1 dim 1\nbogus line\n"
    with pytest.raises(FormatError, match=r"input\.txt:3"):
        ws.load_text(text, source="input.txt")


def test_naturality_violation_reported():
    ws = Workspace(rationals())
    text = (
        "rep a over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 1\nmap a: 1\n"
        "rep b over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 1\nmap a: 0\n"
        "morphism f: a -> b\nat 1: 1\nat 2: 1\n"
    )
    with pytest.raises(FormatError, match="naturality square fails at arrow a"):
        ws.load_text(text)


def test_field_mismatch_rejected():
    ws = Workspace(prime_field(5))
    with pytest.raises(FormatError, match="field"):
        ws.load_text("rep m over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 0\n")


def test_chain_map_block(a2_f5):
    rng = random.Random(62)
    cx = random_complex(a2_f5, rng, 0, 1, 2)
    from qha.complexes import identity_chain_map
    text = format_complex("x", cx) + format_complex("y", cx)
    lines = ["chainmap f: x -> y"]
    for i, comp in identity_chain_map(cx).components.items():
        for v in a2_f5.quiver.vertices:
            lines.append(f"at {i} {v}: {comp.components[v].format()}")
    ws = Workspace(a2_f5.field)
    ws.load_text(text + "\n".join(lines) + "\n")
    cm = ws.chain_maps["f"]
    from qha.complexes import is_quasi_iso
    assert is_quasi_iso(cm).ok


def test_roof_round_trip(a2_f5):
    from qha.complexes import random_chain_map, random_complex, random_quasi_iso_onto
    from qha.derived import Roof
    from qha.formats import format_roof
    rng = random.Random(63)
    src = random_complex(a2_f5, rng, 0, 1, 2)
    left = random_quasi_iso_onto(src, rng)
    tgt = random_complex(a2_f5, rng, 0, 1, 2)
    roof = Roof(left.domain, left, random_chain_map(rng, left.domain, tgt))
    text = format_roof("r", roof)
    ws = Workspace(a2_f5.field)
    ws.load_text(text)
    back = ws.roofs["r"]
    assert back.apex.key() == roof.apex.key()
    assert back.left.key() == roof.left.key()
    assert back.right.key() == roof.right.key()
    assert back.certificate.ok
    assert "certificate r degree" in text


def test_bad_differential_in_complex_file():
    ws = Workspace(rationals())
    text = (
        "complex c over A2 field Q window 0 2\n"
        "degree 0\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "degree 1\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "degree 2\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "diff 0:\nat 1: 1\nat 2: [0x0]\n"
        "diff 1:\nat 1: 1\nat 2: [0x0]\n"
    )
    with pytest.raises(FormatError, match="d.d"):
        ws.load_text(text)
