import io
import sys

from qha.cli import main
from qha.induced import parse_report_records


def invoke(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_rep_hom_example():
    code, out = invoke(["rep", "hom", "--left", "P1", "--right", "S2"])
    assert code == 0
    assert out == "dim=0\n"


def test_quiver_check():
    code, out = invoke(["quiver", "check", "--quiver", "A2"])
    assert code == 0
    assert "morphisms=3" in out and "acyclic=true" in out


def test_rep_sum_and_embed():
    code, out = invoke(["rep", "sum", "--left", "P1", "--right", "P2"])
    assert code == 0
    assert "vertex 1 dim 1" in out and "vertex 2 dim 2" in out
    code, out = invoke(["rep", "embed", "--vertex", "1", "--dim", "2"])
    assert code == 0
    assert "vertex 1 dim 2" in out and "vertex 2 dim 0" in out


def test_rep_kernel_from_file(tmp_path):
    src = tmp_path / "data.txt"
    src.write_text(
        "rep a over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 1\nmap a: 1\n"
        "rep b over A2 field Q\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "morphism f: a -> b\nat 1: 1\nat 2: [0x1]\n"
    )
    code, out = invoke(["rep", "kernel", "--morphism", "f", "--in", str(src)])
    assert code == 0
    assert "vertex 1 dim 0" in out and "vertex 2 dim 1" in out


def test_complex_cohomology_from_file(tmp_path):
    src = tmp_path / "cover.cx"
    src.write_text(
        "complex cover over A2 field Q window 0 1\n"
        "degree 0\nvertex 1 dim 1\nvertex 2 dim 1\nmap a: 1\n"
        "degree 1\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "diff 0:\nat 1: 1\nat 2: [0x1]\n"
    )
    code, out = invoke(["complex", "cohomology", "--in", str(src),
                        "--name", "cover", "--degree", "0"])
    assert code == 0
    assert out == "H^0 dims: 1:0 2:1\n"


def test_derived_hom_matches_example():
    code, out = invoke(["derived", "hom", "--left", "S1", "--right", "S2", "--shift", "1"])
    assert code == 0
    assert out == "dim=1 cross_check=pass\n"


def test_derived_resolve():
    code, out = invoke(["derived", "resolve", "--name", "S1"])
    assert code == 0
    assert "degree -1" in out and "degree 0" in out


def test_derived_t_and_strictify():
    code, out = invoke(["derived", "T", "--name", "S1"])
    assert code == 0
    assert "vertex 1: cohomology 0:1" in out
    code, out = invoke(["derived", "strictify", "--name", "P1"])
    assert code == 0
    assert "verified=true" in out


def test_functor_build_tilt_and_reject():
    code, out = invoke(["functor", "build-tilt", "--tilt", "P1+S1"])
    assert code == 0
    assert "certificate passed" in out
    code, _ = invoke(["functor", "build-tilt", "--tilt", "S1"])
    assert code == 1


def test_experiment_thm21_cli_report():
    args = ["experiment", "thm21", "--quiver", "A2", "--suite", "stalks",
            "--shifts", "-1..2", "--seed", "7"]
    code, out = invoke(args)
    assert code == 0
    recs = parse_report_records(out)
    assert len(recs) == 36
    code2, out2 = invoke(args)
    assert out2 == out  # byte-identical reruns


def test_experiment_thm24_cli(tmp_path):
    out_path = tmp_path / "report.txt"
    code, _ = invoke(["experiment", "thm24", "--quiver", "A2", "--field", "F5",
                      "--tilt", "morita", "--seed", "3", "--bound", "4",
                      "--out", str(out_path)])
    assert code == 0
    text = out_path.read_text()
    recs = parse_report_records(text)
    ff = [r for r in recs if not r["case"].startswith("surj:")]
    assert ff and all(r["agree"] for r in ff)


def test_validation_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("rep m over A2 field Q\nvertex 1 dim 1\n")
    code, _ = invoke(["rep", "hom", "--left", "m", "--right", "m", "--in", str(bad)])
    assert code == 1


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("nonsense\n")
    code, _ = invoke(["quiver", "check", "--quiver", "A2", "--in", str(bad)])
    assert code == 1


def test_output_reparses(tmp_path):
    out_path = tmp_path / "sum.rep"
    code, _ = invoke(["rep", "sum", "--left", "P1", "--right", "S1",
                      "--out", str(out_path)])
    assert code == 0
    from qha.formats import Workspace
    from qha.linalg import rationals
    ws = Workspace(rationals())
    ws.load_file(out_path)
    assert ws.reps["P1+S1"].dim_vector() == {"1": 2, "2": 1}


def test_resolve_output_reparses(tmp_path):
    out_path = tmp_path / "res.cx"
    code, _ = invoke(["derived", "resolve", "--name", "S1", "--out", str(out_path)])
    assert code == 0
    from qha.formats import Workspace
    from qha.linalg import rationals
    ws = Workspace(rationals())
    ws.load_file(out_path)
    cx = ws.complexes["projective_resolution_S1"]
    assert cx.window() == (-1, 0)


def test_cohomology_name_defaults_to_unique_complex(tmp_path):
    src = tmp_path / "cover.cx"
    src.write_text(
        "complex cover over A2 field Q window 0 1\n"
        "degree 0\nvertex 1 dim 1\nvertex 2 dim 1\nmap a: 1\n"
        "degree 1\nvertex 1 dim 1\nvertex 2 dim 0\n"
        "diff 0:\nat 1: 1\nat 2: [0x1]\n"
    )
    code, out = invoke(["complex", "cohomology", "--in", str(src), "--degree", "0"])
    assert code == 0
    assert out == "H^0 dims: 1:0 2:1\n"


def test_deterministic_outputs():
    for args in (["derived", "T", "--name", "S1"],
                 ["rep", "sum", "--left", "P1", "--right", "P2"]):
        _, out1 = invoke(args)
        _, out2 = invoke(args)
        assert out1 == out2


def test_strictify_not_found_is_reported(monkeypatch):
    import qha.cli
    monkeypatch.setattr(qha.cli, "strictify", lambda tx, cat: None)
    code, out = invoke(["derived", "strictify", "--name", "P1"])
    assert code == 0
    assert out == "no strictification found at bound\n"
