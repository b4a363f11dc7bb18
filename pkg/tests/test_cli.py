import io
import json
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from hypermono.cli import main

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
DATA = HERE / "data"

CASES = [
    ("analyze_m11", ["analyze", str(DATA / "m11_row.json")]),
    ("splus_m11_primitive", ["splus", str(DATA / "m11_row.json"), "--primitive=yes"]),
    ("splus_93", ["splus", str(DATA / "type_9_3_p2.json"), "--primitive=yes"]),
    ("ss_linear_3_3", ["ss", "linear", "3", "3"]),
    ("ss_unitary_3_3", ["ss", "unitary", "3", "3"]),
    ("ss_symplectic_2_5", ["ss", "symplectic", "2", "5"]),
    ("ss_extraspecial_5_2", ["ss", "extraspecial", "5", "2"]),
    ("ss_linear_3_2_exhaustive", ["ss", "linear", "3", "2", "--exhaustive"]),
    ("spectrum_linear_3_3", ["spectrum", "linear", "3", "3", "--index", "1"]),
    ("spectrum_unitary_3_3", ["spectrum", "unitary", "3", "3", "--index", "1"]),
    ("gates_landau_12", ["gates", "landau", "12"]),
    ("gates_ppd_2_6", ["gates", "ppd", "2", "6"]),
    ("gates_meo_ly", ["gates", "meo", "Sporadic", "Ly"]),
    ("gates_chain", ["gates", "chain", "10", "10", "11", "11"]),
    ("gates_charsheaf", ["gates", "charsheaf", "12", "Symplectic", "2", "5"]),
    ("gates_bounds", ["gates", "bounds", "10", "11", "--index", "2"]),
    ("gates_brauerp_m11", ["gates", "brauerp", "--m11"]),
    ("construct_sawin", ["construct", "sawin", "11", "1", "3"]),
    ("construct_alt2", ["construct", "alt2", "8", "2", "--k", "3"]),
    ("construct_special_fn", ["construct", "special", "F_N", "3", "--N", "5"]),
    ("construct_special_gd", ["construct", "special", "G_D", "5", "--D", "7", "--chi", "1/3"]),
    ("tables_1", ["tables", "1"]),
    ("tables_2_check", ["tables", "2", "--check"]),
    ("tables_3_check", ["tables", "3", "--check"]),
    ("m4_monomial", ["m4", str(DATA / "monomial_q3.json")]),
]


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv):
    code, out = run_cli(argv)
    assert code == 0, out
    golden_path = GOLDEN / f"{name}.json"
    assert golden_path.exists(), f"golden file missing: {golden_path}"
    assert out == golden_path.read_text(), f"output drift for {name}"


def test_determinism_byte_identical():
    for _, argv in CASES[:6]:
        c1, o1 = run_cli(argv)
        c2, o2 = run_cli(argv)
        assert (c1, o1) == (c2, o2)


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(["--out", str(target), "gates", "landau", "7"])
    assert code == 0 and out == ""
    body = json.loads(target.read_text())
    assert body["result"]["landau"] == 12


class TestExitCodes:
    def test_validation_error_is_2(self, capsys):
        code = main(["analyze", str(DATA / "overlap.json")])
        assert code == 2

    def test_io_error_is_1(self):
        code = main(["analyze", str(DATA / "no_such_file.json")])
        assert code == 1

    def test_cap_exceeded_is_3(self):
        code = main(["m4", str(DATA / "monomial_q3.json"), "--cap", "10"])
        assert code == 3

    def test_excluded_case_is_2(self):
        code = main(["ss", "unitary", "3", "2"])
        assert code == 2
