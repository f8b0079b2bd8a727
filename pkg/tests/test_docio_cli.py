import json
import subprocess
import sys

import pytest

from t0space.cli import main
from t0space.docio import dumps_canonical, space_from_doc, space_to_doc
from t0space.errors import ParseError
from t0space.generators import sierpinski, v_space
from t0space.hasse import cover_edges, to_dot
from t0space.core import specialization_order
from t0space.maps import is_homeomorphic


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def write_space(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dumps_canonical(doc), encoding="utf-8")
    return str(path)


SIERP_DOC = {"points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}
V_DOC = {
    "points": ["a", "b", "c"],
    "poset": {"pairs": [["a", "b"], ["a", "c"]], "kind": "alexandroff"},
}


def test_doc_roundtrip_canonical():
    sp = space_from_doc(SIERP_DOC)
    doc = space_to_doc(sp)
    assert space_to_doc(space_from_doc(doc)) == doc
    assert dumps_canonical(doc) == dumps_canonical(space_to_doc(space_from_doc(doc)))


def test_doc_roundtrip_all_named(pool):
    for name, sp in pool.items():
        doc = space_to_doc(sp)
        again = space_from_doc(doc)
        assert is_homeomorphic(sp, again), name
        assert space_to_doc(again) == doc


def test_doc_forms():
    sub = {"points": ["x", "y"], "subbasis": [["y"]]}
    assert space_from_doc(sub).opens == (0, 0b10, 0b11)
    assert is_homeomorphic(space_from_doc(V_DOC), v_space())


def test_doc_errors():
    with pytest.raises(ParseError):
        space_from_doc({"points": []})
    with pytest.raises(ParseError):
        space_from_doc({"points": ["a"], "opens": [[]], "subbasis": [[]]})
    with pytest.raises(ParseError):
        space_from_doc({"points": ["a", "a"], "opens": [[]]})
    with pytest.raises(ParseError):
        space_from_doc({"points": ["a"], "opens": [["b"]]})
    with pytest.raises(ParseError):
        space_from_doc({"points": ["a", "b"], "opens": [[]]})  # not T0


def test_dot_export_sierpinski():
    dot = to_dot(sierpinski())
    assert dot.count("->") == 1
    assert 'label="0"' in dot and 'label="1"' in dot


def test_cover_edges_v():
    assert cover_edges(specialization_order(v_space())) == [(0, 1), (0, 2)]


def test_cli_classify(tmp_path, capsys):
    path = write_space(tmp_path, "s.json", SIERP_DOC)
    code, out = run_cli(["classify", path], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"]["sober"] is True
    assert report["verdicts"]["omega-well-filtered"] is True
    assert report["schema"] == "t0space-report/1"


def test_cli_power_and_reflect(tmp_path, capsys):
    path = write_space(tmp_path, "v.json", V_DOC)
    for cmd in (["power", "smyth", path], ["power", "hoare", path],
                ["reflect", path], ["sobrify", path]):
        code, out = run_cli(cmd, capsys)
        assert code == 0, (cmd, out)
        assert json.loads(out)["pass"] is True


def test_cli_rudin(tmp_path, capsys):
    path = write_space(tmp_path, "v.json", V_DOC)
    code, out = run_cli(
        ["rudin", path, "--family", "a,b,c;b,c", "--closed", "a,b,c"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["details"]["minimal"] == ["{a,b}", "{a,c}"]


def test_cli_product(tmp_path, capsys):
    p1 = write_space(tmp_path, "s.json", SIERP_DOC)
    p2 = write_space(tmp_path, "v.json", V_DOC)
    code, out = run_cli(["product", p1, p2, "--check"], capsys)
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_cli_catalog_and_verify(tmp_path, capsys):
    code, out = run_cli(["catalog", "chain-omega1-omega-scott", "d-space"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"]["d-space"] is False
    assert report["certificates"][0]["kind"] == "not-d-space"
    rpath = tmp_path / "report.json"
    rpath.write_text(out, encoding="utf-8")
    code, out2 = run_cli(["verify", str(rpath)], capsys)
    assert code == 0
    assert all(json.loads(out2)["verdicts"].values())


def test_cli_verify_fresh_process(tmp_path):
    # certificates re-check in a separate interpreter
    proc = subprocess.run(
        [sys.executable, "-m", "t0space.cli", "catalog", "cofinite-nat", "all"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    rpath = tmp_path / "cofinite.json"
    rpath.write_text(proc.stdout, encoding="utf-8")
    proc2 = subprocess.run(
        [sys.executable, "-m", "t0space.cli", "verify", str(rpath)],
        capture_output=True, text=True,
    )
    assert proc2.returncode == 0, proc2.stdout + proc2.stderr


def test_cli_export_dot(tmp_path, capsys):
    path = write_space(tmp_path, "v.json", V_DOC)
    out_dot = tmp_path / "v.dot"
    fig = tmp_path / "v.png"
    code, out = run_cli(
        ["export-dot", path, "-o", str(out_dot), "--fig", str(fig)], capsys
    )
    assert code == 0
    assert out_dot.read_text().count("->") == 2
    assert fig.stat().st_size > 0


def test_cli_fuzz_with_csv(tmp_path, capsys):
    csv = tmp_path / "cases.csv"
    code, out = run_cli(
        ["fuzz", "--n", "3", "--cases", "10", "--seed", "5", "--csv", str(csv)],
        capsys,
    )
    assert code == 0
    rows = csv.read_text().strip().splitlines()
    assert len(rows) == 11
    assert rows[0].startswith("case,points,opens")


def test_cli_errors(tmp_path, capsys):
    code, _ = run_cli(["classify", str(tmp_path / "missing.json")], capsys)
    assert code == 2
    code, _ = run_cli(["catalog", "no-such-space", "all"], capsys)
    assert code == 2
    code, _ = run_cli(["catalog", "cofinite-nat", "no-such-check"], capsys)
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert run_cli(["classify", str(bad)], capsys)[0] == 2
    assert run_cli(["verify", str(bad)], capsys)[0] == 2


def test_cli_usage_error_exit_2(capsys):
    assert main(["no-such-command"]) == 2


def test_dot_export_power_space():
    from t0space.power import smyth_space

    ps = smyth_space(v_space())
    dot = to_dot(ps.space, title="smyth")
    assert dot.count("[label=") == 4  # one node per compact saturated set


def test_cap_override(monkeypatch, tmp_path, capsys):
    from t0space.core import generate_topology
    from t0space.errors import CapExceededError

    monkeypatch.setenv("WORKBENCH_CAP", "2")
    with pytest.raises(CapExceededError):
        generate_topology(3, [])
    path = write_space(tmp_path, "v.json", V_DOC)
    code, _ = run_cli(["classify", path], capsys)
    assert code == 2
    monkeypatch.delenv("WORKBENCH_CAP")
    assert generate_topology(2, [0b10]).n == 2
