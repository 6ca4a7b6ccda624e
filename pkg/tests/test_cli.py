import json

from rankmetric.cli import main
from rankmetric.field import field_for
from rankmetric.linpoly import LinPoly
from rankmetric.code import RankCode


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_info(capsys):
    code, out, _ = run(["field", "info", "--q", "3", "--n", "6"], capsys)
    assert code == 0
    assert "F_729" in out and "generator" in out


def test_field_info_json(tmp_path, capsys):
    path = tmp_path / "field.json"
    code, _, _ = run(["field", "info", "--q", "3", "--n", "2", "--json", str(path)], capsys)
    assert code == 0
    blob = json.loads(path.read_text())
    assert blob["schema"].startswith("rankmetric-report") and blob["Q"] == 9


def test_linpoly_ops(capsys):
    code, out, _ = run(["linpoly", "rank", "--q", "3", "--n", "6",
                        "--coeffs", "0,1,0,0,0,0"], capsys)
    assert code == 0 and "rank 6" in out
    code, out, _ = run(["linpoly", "compose", "--q", "3", "--n", "6",
                        "--coeffs", "0,1", "--coeffs2", "0,1"], capsys)
    assert code == 0 and "[0, 0, 1, 0, 0, 0]" in out
    code, out, _ = run(["linpoly", "eval", "--q", "3", "--n", "6",
                        "--coeffs", "1", "--x", "5"], capsys)
    assert code == 0 and "= 5" in out


def test_code_commands(tmp_path, capsys):
    ctx = field_for(2, 6)
    C = RankCode.from_semilinear(ctx, [LinPoly.identity(ctx)])
    path = tmp_path / "code.json"
    path.write_text(json.dumps(C.to_json()))
    code, out, _ = run(["code", "mindist", "--in", str(path)], capsys)
    assert code == 0 and "minimum distance 6" in out

    # the trinomial code at q = 2 is not MRD: exit 1 with a witness
    from rankmetric.trinomial import build_instance
    inst = build_instance(2)
    path2 = tmp_path / "tri.json"
    path2.write_text(json.dumps(inst.code.to_json()))
    code, out, _ = run(["code", "mrd", "--in", str(path2)], capsys)
    assert code == 1 and "witness" in out
    code, out, _ = run(["code", "idealisers", "--in", str(path2)], capsys)
    assert code == 0 and "left idealiser" in out


def test_code_missing_file(capsys):
    code, _, err = run(["code", "mindist", "--in", "/no/such/file.json"], capsys)
    assert code == 2 and "error" in err


def test_subspace_commands(capsys):
    code, out, _ = run(["subspace", "linear-set", "--q", "3", "--n", "6",
                        "--coeffs", "0,1,0,0,0,0"], capsys)
    assert code == 0 and "364" in out
    code, out, _ = run(["subspace", "family", "--name", "U4", "--q", "3"], capsys)
    assert code == 0 and "U4" in out
    code, out, _ = run(["subspace", "scattered", "--q", "2", "--n", "6",
                        "--coeffs", "0,1,0,1,0,38"], capsys)
    assert code in (0, 1)


def test_paper_verify_main_exit_codes(capsys):
    code, out, _ = run(["paper", "verify-main", "--q", "3"], capsys)
    assert code == 0 and "MRD True" in out
    code, out, _ = run(["paper", "verify-main", "--q", "4"], capsys)
    assert code == 1 and "witness" in out


def test_paper_even_cex(capsys):
    code, out, _ = run(["paper", "even-cex", "--q", "2"], capsys)
    assert code == 0 and "kernel dimension 4" in out
    code, _, err = run(["paper", "even-cex", "--q", "3"], capsys)
    assert code == 2


def test_paper_relscan(capsys):
    code, out, _ = run(["paper", "relscan", "--q", "3", "--full-gamma"], capsys)
    assert code == 0 and "13 parameterized candidates" in out


def test_paper_table1_and_worker_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    code, _, _ = run(["paper", "table1", "--row", "1", "--q", "4",
                      "--workers", "1", "--json", str(out1)], capsys)
    assert code == 0
    code, _, _ = run(["paper", "table1", "--row", "1", "--q", "4",
                      "--workers", "2", "--json", str(out2)], capsys)
    assert code == 0
    assert out1.read_text() == out2.read_text()
    blob = json.loads(out1.read_text())
    assert blob["hits"] and blob["schema"].startswith("rankmetric-report")


def test_paper_table1_no_hits_is_failure(capsys):
    code, out, _ = run(["paper", "table1", "--row", "1", "--q", "2"], capsys)
    assert code == 1 and "0 MRD hits" in out


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("cap = 100\n")
    code, _, err = run(["field", "info", "--q", "3", "--n", "6",
                        "--config", str(cfg)], capsys)
    assert code == 2 and "cap" in err


def test_repro_subset(capsys):
    code, out, _ = run(["repro-all", "--criteria", "11", "--q-set", "3"], capsys)
    assert code == 0
    assert "criterion 11" in out and "PASS" in out
