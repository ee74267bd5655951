import json
import subprocess
import sys
from fractions import Fraction

import pytest

from pencilalg import QQ, Pencil, matrix_algebra, zero_algebra
from pencilalg.cli import main
from pencilalg.mstructure import example_cyclic
from pencilalg.pencil import example_1_3
from pencilalg.pmstructure import a2k1_build
from pencilalg.serialize import (
    mpres_from_json,
    mpres_to_json,
    pencil_to_json,
    pmpres_from_json,
    pmpres_to_json,
    rpres_from_json,
    rpres_to_json,
    sc_from_json,
    sc_to_json,
)


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip() else None
    return code, doc, out.err


def test_roundtrip_structure_constants():
    sc = matrix_algebra(QQ, 2)
    doc = sc_to_json(sc)
    back = sc_from_json(doc)
    assert back.table == sc.table
    assert doc["schema"]


def test_roundtrip_mpresentation():
    pres = example_cyclic(2)
    doc = mpres_to_json(pres)
    back = mpres_from_json(doc)
    t1, t2 = pres.tensors, back.tensors
    assert (t1.phi, t1.mu, t1.psi, t1.lam, t1.t) == (t2.phi, t2.mu, t2.psi, t2.lam, t2.t)


def test_roundtrip_pmpresentation():
    pres = a2k1_build(2, 2, [1, 2], [1, 1])
    doc = pmpres_to_json(pres)
    back = pmpres_from_json(doc)
    assert back.p == pres.p
    assert back.phi == pres.phi
    assert back.psi == pres.psi
    assert back.mu == pres.mu
    assert back.lam == pres.lam
    assert back.t == pres.t


def test_verify_pencil_ok(capsys):
    p = Pencil(matrix_algebra(QQ, 2), zero_algebra(QQ, 4))
    code, doc, err = run_cli(capsys, ["verify-pencil", "--inline",
                                      json.dumps(pencil_to_json(p))])
    assert code == 0
    assert doc["ok"] is True
    assert "ok" in err


def test_verify_pencil_failure_exit_code(capsys):
    from pencilalg import StructureConstants

    bad = StructureConstants.from_tensor(QQ, 4, {(0, 1, 2): 1})
    p = Pencil(matrix_algebra(QQ, 2), bad)
    code, doc, _ = run_cli(capsys, ["verify-pencil", "--inline",
                                    json.dumps(pencil_to_json(p))])
    assert code == 1
    assert doc["ok"] is False
    assert doc["residuals"]["mixed"]["witness"] is not None


def test_malformed_json_exit_2(capsys):
    code, _, err = run_cli(capsys, ["verify-pencil", "--inline", "{not json"])
    assert code == 2
    assert "line 1" in err


def test_deform_command(capsys):
    star = matrix_algebra(QQ, 2)
    # left multiplication by E11 on row-major coordinates
    rop = [["0"] * 4 for _ in range(4)]
    rop[0][0] = "1"
    rop[1][1] = "1"
    payload = {"star": sc_to_json(star), "r": rop}
    code, doc, _ = run_cli(capsys, ["deform", "--inline", json.dumps(payload)])
    assert code == 0
    circle = sc_from_json(doc["circle"])
    assert circle.dim == 4


def test_deform_command_flags_bad_operator(capsys):
    star = matrix_algebra(QQ, 2)
    rop = [["0"] * 4 for _ in range(4)]
    rop[0][0] = "1"  # projection; not a valid deformation operator
    payload = {"star": sc_to_json(star), "r": rop}
    code, doc, _ = run_cli(capsys, ["deform", "--inline", json.dumps(payload)])
    assert code == 1
    assert doc["ok"] is False


def test_build_cyclic_and_verify_roundtrip(capsys):
    code, doc, _ = run_cli(capsys, ["build-cyclic", "--p", "2", "--s", "2"])
    assert code == 0
    assert doc["validation"]["ok"] is True
    pres_doc = json.dumps(doc["presentation"])
    code2, doc2, _ = run_cli(capsys, ["verify-mstructure", "--inline", pres_doc,
                                      "--samples", "5"])
    assert code2 == 0
    assert doc2["ok"] is True
    rep = rpres_from_json(doc["representation"])
    assert rep.n == 3


def test_extract_tensors_command(capsys):
    code, doc, _ = run_cli(capsys, ["build-cyclic", "--p", "1", "--s", "3"])
    assert code == 0
    code2, doc2, _ = run_cli(capsys, ["extract-tensors", "--inline",
                                      json.dumps(doc["representation"])])
    assert code2 == 0
    assert doc2["identities"]["ok"] is True


def test_build_comma_and_classify(capsys):
    payload = {"u": ["0", "0", "0"], "v": ["1", "1", "1"],
               "q": [["0", "-1", "-1"], ["1", "0", "-1"], ["1", "1", "0"]]}
    code, doc, _ = run_cli(capsys, ["build-comma", "--inline", json.dumps(payload)])
    assert code == 0
    code2, doc2, _ = run_cli(capsys, ["classify-comma", "--inline", json.dumps(payload)])
    assert code2 == 0
    assert doc2["tag"] == "commutative"


def test_build_a2k1_pipeline(capsys):
    code, doc, _ = run_cli(capsys, ["build-a2k1", "--k", "2", "--m", "2",
                                    "--lam", "1,2", "--t", "1,1", "--s", "3"])
    assert code == 0
    assert doc["validation"]["ok"] is True
    code2, doc2, _ = run_cli(capsys, ["verify-pmstructure", "--inline",
                                      json.dumps(doc["presentation"]),
                                      "--samples", "5"])
    assert code2 == 0
    assert doc2["ok"] is True


def test_classify_matrix_command(capsys):
    code, doc, _ = run_cli(capsys, ["classify-matrix", "--inline",
                                    "[[1,1,0,0],[1,0,1,0],[1,0,0,1]]"])
    assert code == 0
    assert doc["family"] == "E6"
    assert doc["m"] == [2, 2, 2]
    assert doc["n"] == [3, 1, 1, 1]
    code2, doc2, _ = run_cli(capsys, ["classify-matrix", "--inline", "[[3]]"])
    assert code2 == 1
    assert doc2["admissible"] is False


def test_catalog_command(capsys):
    code, doc, _ = run_cli(capsys, ["catalog", "E6"])
    assert code == 0
    assert doc["matrix"] == [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]
    assert doc["n"] == [3, 1, 1, 1]
    code2, doc2, _ = run_cli(capsys, ["catalog", "list"])
    assert code2 == 0
    assert {"family": "A2k-1", "k": 2} in doc2["entries"]


def test_poisson_check_command(capsys):
    p = example_1_3(QQ, [1, 2], [1, -1], 0)
    code, doc, _ = run_cli(capsys, ["poisson-check", "--n", "2", "--inline",
                                    json.dumps(pencil_to_json(p))])
    assert code == 0
    assert doc["ok"] is True


def test_extend_poly_command(capsys):
    p = example_1_3(QQ, [1, 2], [1, 1], 1)
    code, doc, _ = run_cli(capsys, ["extend-poly", "--q", "2,-3,1", "--inline",
                                    json.dumps(pencil_to_json(p))])
    assert code == 0
    assert doc["associative"] is True
    assert doc["product"]["dim"] == 4


def test_deterministic_output(capsys):
    argv = ["build-a2k1", "--k", "2", "--m", "1", "--lam", "1", "--t", "1"]
    code1, doc1, _ = run_cli(capsys, argv)
    code2, doc2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 0
    assert json.dumps(doc1, sort_keys=True) == json.dumps(doc2, sort_keys=True)


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "pencilalg.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "pencilalg" in proc.stdout


def test_builder_output_pipes_into_verifier(capsys):
    code, doc, _ = run_cli(capsys, ["build-a2k1", "--k", "2", "--m", "2",
                                    "--lam", "1,2", "--t", "1,1"])
    assert code == 0
    code2, doc2, _ = run_cli(capsys, ["verify-pmstructure", "--inline",
                                      json.dumps(doc), "--samples", "3"])
    assert code2 == 0 and doc2["ok"] is True
