import subprocess
import sys

import pytest

from critgraphs.canon import canonical_form
from critgraphs.cli import main, read_manifest
from critgraphs.graph import Graph, join
from critgraphs.graph6 import serialize_graph6
from critgraphs.patterns import named_graph

C5K2 = serialize_graph6(join(named_graph("C5"), Graph.complete(2)))
C5K2_CANON = canonical_form(join(named_graph("C5"), Graph.complete(2))).code


def test_enumerate_k2(capsys):
    assert main(["enumerate", "--k", "2", "--family", "P5", "--n-max", "3", "--jobs", "1"]) == 0
    assert capsys.readouterr().out.split() == ["A_"]


def test_enumerate_truncated_exit_and_csv(tmp_path):
    csv_path = tmp_path / "c.csv"
    rc = main(["enumerate", "--k", "5", "--family", "P5,cricket", "--n-max", "7", "--jobs", "1",
               "--out", str(tmp_path / "g.g6"), "--counts", str(csv_path)])
    assert rc == 2
    rows = csv_path.read_text().splitlines()
    assert rows[0] == "n,count"
    assert rows[5:] == ["5,1", "6,0", "7,1"]
    assert (tmp_path / "g.g6").read_text().split() == ["D~{", C5K2_CANON]


def test_csv_is_byte_identical_across_runs(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"{i}.csv"
        main(["enumerate", "--k", "5", "--family", "P5,chair", "--n-max", "8", "--jobs", "1",
              "--out", str(tmp_path / f"{i}.g6"), "--counts", str(p)])
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv", [
    ["enumerate", "--k", "5", "--family", "P5,banana", "--n-max", "7"],
    ["enumerate", "--k", "x", "--family", "P5", "--n-max", "7"],
    ["enumerate", "--k", "1", "--family", "P5", "--n-max", "7"],
    ["enumerate", "--family", "P5", "--n-max", "7"],
    ["check-claims", "--variant", "bull", "--tables-only"],
    ["check-claims", "--variant", "chair", "--in", "whatever.g6"],
    [],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        rc = main(argv)
        raise SystemExit(rc)
    assert exc.value.code == 64


def test_missing_input(tmp_path):
    assert main(["verify", "--k", "5", "--family", "P5", "--in", str(tmp_path / "none.g6")]) == 66


def test_verify_outcomes(tmp_path, capsys):
    good = tmp_path / "good.g6"
    good.write_text(f"D~{{\n{C5K2}\n")
    expect = tmp_path / "expect.csv"
    expect.write_text("n,count\n5,1\n6,0\n7,1\n")
    assert main(["verify", "--k", "5", "--family", "P5,chair", "--in", str(good), "--expect", str(expect)]) == 0
    expect.write_text("n,count\n5,1\n6,0\n7,2\n")
    assert main(["verify", "--k", "5", "--family", "P5,chair", "--in", str(good), "--expect", str(expect)]) == 1
    p5 = tmp_path / "p5.g6"
    p5.write_text("DhC\n")
    assert main(["verify", "--k", "5", "--family", "P5,chair", "--in", str(p5)]) == 1
    dup = tmp_path / "dup.g6"
    dup.write_text(f"D~{{\n{C5K2}\n{C5K2}\n")
    capsys.readouterr()
    assert main(["verify", "--k", "5", "--family", "P5,chair", "--in", str(dup)]) == 1
    assert "duplicate of line 2" in capsys.readouterr().out


def test_check_claims_tables(capsys):
    assert main(["check-claims", "--variant", "chair", "--tables-only"]) == 0
    assert "13 holds, 2 unconstrained rows, 0 failures" in capsys.readouterr().err
    assert main(["check-claims", "--variant", "cricket", "--tables-only", "-q"]) == 0
    assert "10 holds, 5 unconstrained rows, 0 failures" in capsys.readouterr().err


def test_check_claims_on_file(tmp_path, capsys):
    f = tmp_path / "c.g6"
    f.write_text(f"{C5K2}\n")
    assert main(["check-claims", "--variant", "cricket", "--k", "5", "--in", str(f), "--lemmas"]) == 0
    assert "0 failures" in capsys.readouterr().err
    f.write_text("DhC\n")
    assert main(["check-claims", "--variant", "cricket", "--k", "5", "--in", str(f)]) == 1


def test_manifest_roundtrip(tmp_path, capsys):
    m = tmp_path / "run.manifest"
    main(["enumerate", "--k", "5", "--family", "P5,chair", "--n-max", "8", "--jobs", "1",
          "--out", str(tmp_path / "g.g6"), "--manifest", str(m)])
    data = read_manifest(str(m))
    assert data["command"] == "enumerate"
    assert data["counts"].endswith("5:1,6:0,7:1,8:7")
    assert main(["rerun", str(m)]) == 0
    v = tmp_path / "verify.manifest"
    main(["verify", "--k", "5", "--family", "P5,chair", "--in", str(tmp_path / "g.g6"), "--manifest", str(v)])
    assert "input_sha256[" in v.read_text()
    assert main(["rerun", str(v)]) == 0


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "critgraphs", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("critgraphs ")
