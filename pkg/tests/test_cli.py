import json

import pytest

from wesym.cli import (build_parser, enumerator_from_json, enumerator_to_json,
                       main, parse_code_spec, parse_poly_spec, read_poly_file,
                       write_poly_file, RunConfig)
from wesym.codes import canonical_key, named_code, weight_enumerator
from wesym.homopoly import HomPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enum_rm(capsys):
    code, out, _ = run_cli(capsys, "enum", "rm", "q=2", "r=1", "m=3")
    assert code == 0
    assert out.split() == "1 0 0 0 14 0 0 0 1".split()


def test_enum_golay12_json(capsys):
    code, out, _ = run_cli(capsys, "enum", "golay12_ternary", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    w = enumerator_from_json(payload)
    assert w.coeffs[6] == 264 and w.coeffs[9] == 440 and w.coeffs[12] == 24
    assert enumerator_to_json(w) == payload


def test_enum_from_file(capsys, tmp_path):
    from wesym.codes import write_code_file
    path = tmp_path / "x2.code"
    write_code_file(named_code("x2"), str(path))
    code, out, _ = run_cli(capsys, "enum", f"file={path}")
    assert code == 0
    assert [int(c) for c in out.split()] == [1, 0, 3, 0, 3, 0, 1]


def test_sym_hamming8(capsys):
    code, out, _ = run_cli(capsys, "sym", "hamming8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["iso"]["type"] == "S4"
    assert payload["proj_order"] == 24 and payload["full_order"] == 192


def test_sym_rm312(capsys):
    code, out, _ = run_cli(capsys, "sym", "rm", "q=3", "r=1", "m=2")
    assert code == 0
    assert "C3" in out


def test_sym_zero_code_poly(capsys):
    code, out, _ = run_cli(capsys, "sym", "--poly", "zero-code", "n=5")
    assert code == 0
    assert "zero_code" in out


def test_budget_exit_code(capsys):
    code, _, err = run_cli(capsys, "enum", "golay24", "--budget", "1024")
    assert code == 3
    assert "budget" in err


def test_tables_cli_match(capsys):
    code, out, _ = run_cli(capsys, "tables", "--field", "3", "--max-m", "2",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == 3
    assert all(c["status"] == "ok" for c in payload["cells"])


def test_precision_exhausted_exit_code(capsys, tmp_path):
    from fractions import Fraction
    from wesym.cli import write_poly_file
    near = Fraction(1) + Fraction(1, 2 ** 2200)
    hp = HomPoly([1, -1]) * HomPoly([1, -near]) * HomPoly([1, 1])
    path = tmp_path / "deep.poly"
    write_poly_file(hp, str(path))
    code, _, err = run_cli(capsys, "sym", "--poly", str(path))
    assert code == 4
    assert "precision" in err.lower()


def test_tables_mismatch_exit_code(capsys, monkeypatch):
    import wesym.tables as tables
    from wesym.symmetry import IsoType
    patched = dict(tables.TABLE3)
    patched[(1, 1)] = IsoType("cyclic", 7)
    monkeypatch.setitem(tables.TABLES, 4, patched)
    code, out, _ = run_cli(capsys, "tables", "--field", "4", "--max-m", "1")
    assert code == 2
    assert "MISMATCH" in out


def test_macwilliams_cli(capsys, tmp_path):
    path = tmp_path / "h8.poly"
    write_poly_file(weight_enumerator(named_code("hamming8")).as_hompoly(),
                    str(path))
    code, out, _ = run_cli(capsys, "macwilliams", "--poly", str(path),
                           "--q", "2", "--k", "4")
    assert code == 0
    assert out.split() == "1 0 0 0 14 0 0 0 1".split()


def test_dual_cli(capsys):
    code, out, _ = run_cli(capsys, "dual", "rm", "q=2", "r=1", "m=3")
    assert code == 0
    lines = out.strip().splitlines()
    q, k, n = (int(x) for x in lines[0].split())
    assert (q, k, n) == (2, 4, 8)


def test_decompose_cli(capsys, tmp_path):
    path = tmp_path / "rm25.poly"
    from wesym.codes import reed_muller, weight_enumerator as wenum
    from wesym.fields import field
    write_poly_file(wenum(reed_muller(field(2), 2, 5)).as_hompoly(), str(path))
    code, out, _ = run_cli(capsys, "decompose", "--poly", str(path),
                           "--gleason", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["member"] and payload["unique"]
    assert {(t["a"], t["b"]): t["coeff"] for t in payload["terms"]} == \
        {(4, 0): "-1/3", (1, 1): "4/3"}


def test_classify_cli(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "classify", "--poly", "pairs", "q=2", "n=14",
                           "--q", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "infinite" and payload["case"] == "sum_of_pairs"
    assert "not classified" in payload["notes"]


def test_divisibility_cli(capsys, tmp_path):
    path = tmp_path / "h8.poly"
    write_poly_file(weight_enumerator(named_code("hamming8")).as_hompoly(),
                    str(path))
    code, out, _ = run_cli(capsys, "divisibility", "--poly", str(path))
    assert code == 0 and out.strip() == "4"


def test_poly_file_roundtrip(tmp_path):
    hp = HomPoly([1, "-3/7", 0, 2])
    path = tmp_path / "p.poly"
    write_poly_file(hp, str(path))
    assert read_poly_file(str(path)) == hp
    bad = tmp_path / "bad.poly"
    bad.write_text("2\n1\nx\n0\n")
    with pytest.raises(ValueError, match="3:"):
        read_poly_file(str(bad))


def test_parse_code_spec():
    c = parse_code_spec(["repetition", "q=3", "n=4"])
    assert (c.n, c.k) == (4, 1)
    c = parse_code_spec(["prm", "q=2", "r=1", "m=2"])
    assert (c.n, c.k) == (7, 3)
    assert canonical_key(parse_code_spec(["hamming8"])) == \
        canonical_key(named_code("hamming8"))
    with pytest.raises(ValueError):
        parse_code_spec(["rm", "q2"])


def test_parse_poly_spec():
    hp, q = parse_poly_spec(["full-space", "q=3", "n=2"])
    assert hp == HomPoly([1, 2]) ** 2 and q == 3
    hp, q = parse_poly_spec(["zero-code", "n=3"])
    assert hp == HomPoly([1, 0, 0, 0])
    with pytest.raises(ValueError):
        parse_poly_spec(["no-such-file.poly"])


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("PRECISION", "128")
    monkeypatch.setenv("FORMAT", "json")
    args = build_parser().parse_args(["sym", "hamming8"])
    assert args.precision == 128 and args.format == "json"


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(precision=32)
    with pytest.raises(ValueError):
        RunConfig(budget=1 << 50)
    with pytest.raises(ValueError):
        RunConfig(format="xml")


def test_cache_dir_cli(capsys, tmp_path):
    d = tmp_path / "cache"
    code, out1, _ = run_cli(capsys, "enum", "golay24", "--cache-dir", str(d))
    assert code == 0
    assert len(list(d.iterdir())) == 1
    code, out2, _ = run_cli(capsys, "enum", "golay24", "--cache-dir", str(d))
    assert out1 == out2
