import json
from fractions import Fraction

import pytest

from chebbern.cli import FLOAT_WARNING, main
from chebbern.serialize import matrix_from_csv, matrix_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_forward_n1(capsys):
    code, out, err = run(capsys, "matrix", "--n", "1", "--M", "0", "--N", "0", "--direction", "gen2bern")
    assert code == 0 and err == ""
    assert json.loads(out)["entries"] == [["1", "-9/8"], ["1", "9/8"]]


def test_matrix_n0(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "0")
    assert json.loads(out)["entries"] == [["1"]]


def test_matrix_printed_inverse(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "1", "--direction", "bern2gen", "--provenance", "printed")
    assert json.loads(out)["entries"] == [["1/2", "1/2"], ["-1/4", "1/4"]]


def test_matrix_exact_inverse_default(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "1", "--direction", "bern2gen")
    d = json.loads(out)
    assert d["provenance"] == "exact"
    assert d["entries"] == [["1/2", "1/2"], ["-4/9", "4/9"]]


def test_matrix_json_reparses(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "4", "--M", "1/2", "--N", "2")
    m = matrix_from_json(out)
    _, csv_out, _ = run(capsys, "matrix", "--n", "4", "--M", "1/2", "--N", "2", "--format", "csv")
    assert matrix_from_csv(csv_out).entries == m.entries
    assert m.params.mass_left == Fraction(1, 2)


def test_matrix_float_warns_on_stderr(capsys):
    code, out, err = run(capsys, "matrix", "--n", "2", "--mode", "float")
    assert code == 0
    assert err == FLOAT_WARNING
    assert isinstance(json.loads(out)["entries"][0][0], float)


@pytest.mark.parametrize("argv", [
    ["matrix", "--n", "1", "--M", "-1"],
    ["matrix", "--n", "1", "--M", "1/0"],
    ["matrix", "--n", "1", "--convention", "bogus"],
    ["matrix", "--n", "-1"],
    ["matrix", "--n", "1", "--direction", "gen2bern", "--provenance", "exact"],
])
def test_bad_flags_exit_2(capsys, argv):
    # argparse exits on its own, semantic checks return the code
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_convert_unit_vector(capsys):
    code, out, _ = run(capsys, "convert", "--n", "1", "--coeffs", "1,0")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["1", "1"]


def test_convert_zero_vector(capsys):
    _, out, _ = run(capsys, "convert", "--coeffs", "0,0,0,0", "--M", "1")
    assert json.loads(out)["coeffs"] == ["0"] * 4


def test_convert_length_mismatch(capsys):
    code, _, err = run(capsys, "convert", "--n", "2", "--coeffs", "1,0")
    assert code == 2 and "entries" in err


def test_convert_round_trip_via_files(capsys, tmp_path):
    d = ["3/7", "-1", "0", "5/2"]
    path = tmp_path / "d.json"
    path.write_text(json.dumps(d))
    bern = tmp_path / "b.json"
    assert main(["convert", "--input", str(path), "--M", "1", "--N", "1/2", "-o", str(bern)]) == 0
    _, out, _ = run(capsys, "convert", "--input", str(bern), "--direction", "bern2gen", "--M", "1", "--N", "1/2")
    res = json.loads(out)
    assert res["basis"] == "gen-cheb2"
    assert res["coeffs"] == d


def test_convert_csv_output(capsys):
    _, out, _ = run(capsys, "convert", "--coeffs", "1,0", "--format", "csv")
    assert out.split() == ["1", "1"]


def test_eval_generalized(capsys):
    _, out, _ = run(capsys, "eval", "--r", "1", "--x", "1")
    assert json.loads(out) == [{"x": "1", "value": "9/8"}]


def test_eval_classical_sign_modes(capsys):
    _, good, _ = run(capsys, "eval", "--r", "1", "--classical", "--x", "0", "1")
    assert [v["value"] for v in json.loads(good)] == ["-2", "2"]
    _, bad, _ = run(capsys, "eval", "--r", "1", "--classical", "--sign-mode", "as-printed", "--x", "0", "1")
    assert [v["value"] for v in json.loads(bad)] != ["-2", "2"]


def test_eval_input_file(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"basis": "bernstein", "degree": 2, "coeffs": ["0", "0", "1"]}))
    _, out, _ = run(capsys, "eval", "--input", str(p), "--x", "1/2", "--format", "csv")
    assert out.splitlines() == ["x,value", "1/2,1/4"]


def test_eval_rejects_out_of_range(capsys):
    code, _, _ = run(capsys, "eval", "--r", "1", "--x", "2")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--x", "0")
    assert code == 2


def test_eval_malformed_input(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, _ = run(capsys, "eval", "--input", str(p), "--x", "0")
    assert code == 2


def test_fit_examples(capsys):
    _, out, _ = run(capsys, "fit", "--target", "0,0,1", "--n", "2")
    assert json.loads(out)["residual"] == "0"
    _, out, _ = run(capsys, "fit", "--target", "0,0,1", "--n", "1")
    d = json.loads(out)
    assert d["residual"] == "1/180" and d["coeffs"] == ["-1/6", "1"]


def test_fit_samples_csv(capsys, tmp_path):
    path = tmp_path / "s.csv"
    xs = [j / 200 for j in range(201)]
    path.write_text("x,y\n" + "\n".join(f"{x},{2 * x + 1}" for x in xs))
    _, out, _ = run(capsys, "fit", "--samples", str(path), "--n", "1")
    d = json.loads(out)
    assert d["exact"] is False
    assert d["coeffs"] == pytest.approx([1.0, 2.0], abs=1e-10)


def test_fit_ill_conditioned_exit_3(capsys):
    code, _, err = run(capsys, "fit", "--target", "0,1", "--n", "16", "--mode", "float")
    assert code == 3 and "error" in err


def test_verify_default(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 0 and err == ""
    lines = out.splitlines()
    orth = next(l for l in lines if "orthogonality" in l)
    assert orth.startswith("PASS") and "10" in orth
    printed = next(l for l in lines if "round trip (printed)" in l)
    assert printed.startswith("REPORTED") and "9/16" in printed
    assert not any(l.startswith("FAIL") for l in lines)


def test_verify_n0_json(capsys):
    code, out, _ = run(capsys, "verify", "--n", "0", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"]
    assert all(c["status"] in ("PASS", "REPORTED") for c in d["checks"])
