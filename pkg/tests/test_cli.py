"""Command-line interface behavior: formats, exit codes, determinism."""

import json

import pytest

from liefoliate.catalog import catalog_lookup
from liefoliate.cli import main
from liefoliate.foliations import FoliationClass
from liefoliate.parabolic import HorosphericalData, ParabolicData
from liefoliate.roots import DynkinDiagram, RootSystem


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rootsys_show_table(capsys):
    code, out, _ = run(capsys, "rootsys", "show", "--family", "A", "--rank", "2")
    assert code == 0
    assert "|Sigma| = 6" in out
    assert "alpha_1 = e1-e2" in out


def test_rootsys_show_json_round_trip(capsys):
    code, out, _ = run(capsys, "rootsys", "show", "--family", "BC", "--rank", "2",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    from liefoliate.roots import build_root_system

    assert RootSystem.from_dict(data) == build_root_system("BC", 2)


def test_rootsys_dynkin_dot_f4(capsys):
    code, out, _ = run(capsys, "rootsys", "dynkin", "--family", "F4", "--rank", "4",
                       "--format", "dot")
    assert code == 0
    assert out.startswith("digraph F44 {")
    assert out.count("dir=forward") == 1
    assert 'a2 -> a3 [label="2", dir=forward];' in out
    assert 'a1 -> a2 [label="1", dir=none];' in out
    assert 'a3 -> a4 [label="1", dir=none];' in out


def test_rootsys_dynkin_json_round_trip(capsys):
    code, out, _ = run(capsys, "rootsys", "dynkin", "--family", "BC", "--rank", "3",
                       "--format", "json")
    assert code == 0
    dd = DynkinDiagram.from_dict(json.loads(out))
    from liefoliate.roots import build_root_system, dynkin_diagram

    assert dd == dynkin_diagram(build_root_system("BC", 3))


def test_rootsys_show_rejects_dot(capsys):
    code, _, err = run(capsys, "rootsys", "show", "--family", "A", "--rank", "2",
                       "--format", "dot")
    assert code == 2
    assert "usage error" in err


def test_rootsys_invalid_rank_is_domain_error(capsys):
    code, _, err = run(capsys, "rootsys", "show", "--family", "D", "--rank", "2")
    assert code == 1
    assert "valid range" in err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "sl(m,R)" in out and "f4(-20)" in out
    code, out, _ = run(capsys, "catalog", "list", "--format", "json")
    data = json.loads(out)
    assert len(data) == 33


def test_parabolic_json_round_trip(capsys):
    code, out, _ = run(capsys, "parabolic", "--space", "SL5", "--phi", "1,3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dim_q_phi"] == 16
    parsed = ParabolicData.from_dict(data)
    from liefoliate.parabolic import parabolic_data, phi_subset

    sl5 = catalog_lookup("SL5")
    assert parsed == parabolic_data(sl5, phi_subset(sl5, [1, 3]))


def test_parabolic_unknown_space_exit_1(capsys):
    code, _, err = run(capsys, "parabolic", "--space", "nope", "--phi", "1")
    assert code == 1
    assert "error:" in err and "valid names" in err


def test_parabolic_invalid_phi_exit_1(capsys):
    code, _, err = run(capsys, "parabolic", "--space", "SL5", "--phi", "9")
    assert code == 1
    code, _, err = run(capsys, "parabolic", "--space", "SL5", "--phi", "x,y")
    assert code == 1


def test_horospherical_json(capsys):
    code, out, _ = run(capsys, "horospherical", "--space", "SL5", "--phi", "1,2",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["dim_Fs"], data["dim_euclidean"], data["dim_N"]) == (5, 2, 7)
    parsed = HorosphericalData.from_dict(data)
    assert parsed.dim_Fs == 5


def test_foliations_enumerate_json_count(capsys):
    code, out, _ = run(capsys, "foliations", "enumerate", "--space", "SL5",
                       "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 18
    parsed = [FoliationClass.from_dict(r) for r in records]
    assert all(not c.trivial for c in parsed)
    code, out, _ = run(capsys, "foliations", "enumerate", "--space", "SL5",
                       "--include-trivial", "--format", "json")
    assert len(json.loads(out)) == 19


def test_foliations_codim_filter(capsys):
    code, out, _ = run(capsys, "foliations", "enumerate", "--space", "SL5",
                       "--codim", "1", "--format", "json")
    records = json.loads(out)
    assert sorted((tuple(r["phi"]), r["dim_v"]) for r in records) == [
        ((), 3), ((1,), 3), ((2,), 3),
    ]


def test_foliations_table(capsys):
    code, out, _ = run(capsys, "foliations", "enumerate", "--space", "su(3,1)")
    assert code == 0
    assert "2 foliation class(es)" in out
    assert "CH^3" in out


def test_byte_identical_output_on_repeat(capsys):
    argv = ("foliations", "enumerate", "--space", "e6(6)", "--format", "json")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    argv = ("rootsys", "show", "--family", "E7", "--rank", "7", "--format", "json")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_slmodel_iwasawa(capsys):
    code, out, _ = run(capsys, "slmodel", "iwasawa", "--rank", "1",
                       "--matrix", "[[1,0],[1,1]]")
    assert code == 0
    data = json.loads(out)
    assert data["residual"] < 1e-12
    assert data["n"][0][1] == pytest.approx(0.5)
    code, _, err = run(capsys, "slmodel", "iwasawa", "--rank", "1",
                       "--matrix", "[[2,0],[0,1]]")
    assert code == 1 and "determinant" in err
    code, _, err = run(capsys, "slmodel", "iwasawa", "--rank", "2",
                       "--matrix", "[[1,0],[1,1]]")
    assert code == 1 and "3x3" in err


def test_slmodel_killing(capsys):
    code, out, _ = run(capsys, "slmodel", "killing",
                       "--x", "[[1,0],[0,-1]]", "--y", "[[1,0],[0,-1]]")
    assert code == 0
    data = json.loads(out)
    assert data["killing"] == pytest.approx(8.0)
    assert data["difference"] == pytest.approx(0.0, abs=1e-12)


def test_slmodel_check_lie_triple(capsys):
    basis = "[[[0,0.5,0],[0.5,0,0],[0,0,0]],[[0,0,0.5],[0,0,0],[0.5,0,0]]]"
    code, out, _ = run(capsys, "slmodel", "check-lie-triple", "--basis", basis)
    assert code == 0
    assert json.loads(out)["holds"] is True
    bad = ("[[[0,0.5,0],[0.5,0,0],[0,0,0]],[[0,0,0.5],[0,0,0],[0.5,0,0]],"
           "[[0,0,0],[0,0,0.5],[0,0.5,0]]]")
    code, out, _ = run(capsys, "slmodel", "check-lie-triple", "--basis", bad)
    data = json.loads(out)
    assert data["holds"] is False and data["residual"] > 0.1


def test_slmodel_halfplane(capsys):
    code, out, _ = run(capsys, "slmodel", "halfplane", "--orbit", "N", "--samples", "5",
                       "--base-re", "0.5", "--base-im", "2.0")
    assert code == 0
    pts = json.loads(out)
    assert len(pts) == 5
    assert all(p["im"] == pytest.approx(2.0) for p in pts)
    code, out, _ = run(capsys, "slmodel", "halfplane", "--orbit", "A", "--samples", "3",
                       "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "re,im" and len(lines) == 4
    values = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
    assert values[1] == (0.0, 1.0)  # t = 0 fixes the base point i


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rootsys", "show", "--family", "Z", "--rank", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "catalog")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
