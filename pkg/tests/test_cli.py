import csv
import io
import json

import pytest

from diffgraph.cli import (
    ATLAS_COLUMNS,
    EXIT_IO,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_RESOURCE,
    main,
)
from diffgraph.theorems import CLASSES, ClassReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_d30_json(capsys):
    code, out, _ = run(capsys, "classify", "D30", "--json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["graph_stats"] == {"vertex_count": 6, "edge_count": 8}
    assert d["classes"]["eulerian"]["observed"]["status"] == "true"
    assert d["schema"] == "v1"


def test_classify_json_round_trips(capsys):
    _, out, _ = run(capsys, "classify", "Z2 x Z9", "--json")
    d = json.loads(out)
    assert ClassReport.from_dict(d).to_dict() == d


def test_classify_s4_vacuous(capsys):
    code, out, _ = run(capsys, "classify", "S4")
    assert code == EXIT_OK
    assert "eppo=true" in out
    assert "vacuous" in out


def test_classify_star_names_center(capsys):
    code, out, _ = run(capsys, "classify", "Z2 x Z7")
    assert code == EXIT_OK
    line = next(l for l in out.splitlines() if l.strip().startswith("star "))
    assert "true" in line and "star-center [(1, 0)]" in line


def test_classify_oracle_flag(capsys):
    code, out, _ = run(capsys, "classify", "D30", "--oracle")
    assert code == EXIT_OK
    assert "disagrees" not in out and "rejected" not in out


def test_classify_dot(tmp_path, capsys):
    path = tmp_path / "d.dot"
    code, _, _ = run(capsys, "classify", "D30", "--dot", str(path))
    assert code == EXIT_OK
    assert path.read_text().count(" -- ") == 8


def test_classify_cayley(tmp_path, capsys):
    path = tmp_path / "z6.txt"
    path.write_text("6\n" + "\n".join(" ".join(str((i + j) % 6) for j in range(6))
                                      for i in range(6)))
    code, out, _ = run(capsys, "classify", "--cayley", str(path), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["graph_stats"] == {"vertex_count": 3, "edge_count": 2}


@pytest.mark.parametrize("argv, code", [
    (["classify", "D7"], EXIT_PARSE),
    (["classify", "Z2 x (Z3"], EXIT_PARSE),
    (["classify"], EXIT_PARSE),
    (["classify", "S9"], EXIT_RESOURCE),
    (["classify", "Z12", "--max-elements", "10"], EXIT_RESOURCE),
    (["verify", "Z6", "Q6"], EXIT_PARSE),
    (["sweep", "--max-order", "0"], EXIT_PARSE),
    (["sweep", "--max-order", "5", "--families", "bogus"], EXIT_PARSE),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_classify_cayley_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "classify", "--cayley", str(tmp_path / "nope.txt"))
    assert code == EXIT_IO


def test_verify_agreement(capsys):
    code, out, _ = run(capsys, "verify", "S5", "S6", "A7", "Z2 x Z9", "D30")
    assert code == EXIT_OK
    assert "FAIL" not in out.replace("ok/FAIL", "")


def test_verify_z4_note(capsys):
    code, out, _ = run(capsys, "verify", "Z4", "Z8 x Z2")
    assert code == EXIT_OK
    assert "EPPO" in out


def test_verify_no_predictions_note(capsys):
    code, out, _ = run(capsys, "verify", "A5")
    assert code == EXIT_OK
    assert "EPPO" in out or "no applicable predictions" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "Z6", "D30", "--json")
    d = json.loads(out)
    assert code == EXIT_OK and d["failures"] == []
    assert [r["spec"] for r in d["reports"]] == ["Z6", "D30"]


def test_verify_mismatch_exit(capsys, monkeypatch):
    import diffgraph.theorems as th

    real = th.predict

    def wrong(group, prof=None):
        out = real(group, prof)
        if "chordal" in out:
            out["chordal"].value = not out["chordal"].value
        return out

    monkeypatch.setattr(th, "predict", wrong)
    code, out, _ = run(capsys, "verify", "S5")
    assert code == EXIT_MISMATCH
    assert "FAIL S5: chordal predicted false" in out


def test_sweep_trivial(capsys):
    code, out, err = run(capsys, "sweep", "--max-order", "1")
    assert code == EXIT_OK
    assert out.strip() == ",".join(ATLAS_COLUMNS)
    assert "0 groups" in err


def test_sweep_dihedral_row(capsys, tmp_path):
    path = tmp_path / "atlas.csv"
    code, _, err = run(capsys, "sweep", "--max-order", "30", "--families", "dihedral",
                       "--out", str(path))
    assert code == EXIT_OK
    rows = list(csv.DictReader(path.open()))
    assert [r["spec"] for r in rows] == sorted(f"D{n}" for n in range(6, 31, 2))
    d30 = next(r for r in rows if r["spec"] == "D30")
    assert (d30["vertices"], d30["edges"]) == ("6", "8")
    assert d30["eulerian_observed"] == "true" and d30["bipartite_observed"] == "true"
    assert d30["mismatches"] == ""
    assert list(rows[0].keys()) == ATLAS_COLUMNS
    for c in CLASSES:
        assert f"{c}_predicted" in ATLAS_COLUMNS


def test_sweep_parallel_is_identical(capsys):
    _, serial, _ = run(capsys, "sweep", "--max-order", "40")
    _, parallel, _ = run(capsys, "sweep", "--max-order", "40", "--jobs", "2")
    assert serial == parallel
    assert len(list(csv.DictReader(io.StringIO(serial)))) > 40


def test_sweep_skips_over_cap(capsys, caplog):
    code, out, err = run(capsys, "sweep", "--max-order", "12", "--families", "cyclic",
                         "--max-elements", "10")
    assert code == EXIT_OK
    assert "skipped Z11" in caplog.text and "skipped Z12" in caplog.text
    assert "9 groups, 2 skipped" in err
    assert "Z11" not in out


def test_export(tmp_path, capsys):
    path = tmp_path / "d.dot"
    code, out, _ = run(capsys, "export", "D30", "difference", str(path))
    assert code == EXIT_OK and "6 nodes, 8 edges" in out
    code, out, _ = run(capsys, "export", "Z6", "enhanced", str(tmp_path / "z6.dot"))
    assert "6 nodes, 15 edges" in out
    code, out, _ = run(capsys, "export", "S3", "power", str(tmp_path / "s3.dot"))
    assert "6 nodes, 6 edges" in out


def test_export_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "export", "D30", "difference", str(tmp_path / "no" / "x.dot"))
    assert code == EXIT_IO
    assert "I/O error" in err


def test_outputs_are_byte_identical(tmp_path, capsys):
    _, a, _ = run(capsys, "classify", "S5", "--json", "--seed", "3")
    _, b, _ = run(capsys, "classify", "S5", "--json", "--seed", "3")
    assert a == b
    p1, p2 = tmp_path / "a.dot", tmp_path / "b.dot"
    run(capsys, "export", "Q12", "commuting", str(p1))
    run(capsys, "export", "Q12", "commuting", str(p2))
    assert p1.read_bytes() == p2.read_bytes()
