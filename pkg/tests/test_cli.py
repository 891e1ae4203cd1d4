import json

import pytest

from stripcluster.cli import main
from stripcluster.codec import load_desc, save_desc
from stripcluster.catalog import staircase, split_nested


@pytest.fixture()
def st_file(tmp_path):
    p = tmp_path / "T.json"
    save_desc(staircase(), p)
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys, st_file):
    code, out, err = run(capsys, "check", st_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["noncrossing"] and rep["maximal"] and rep["compact"]
    assert rep["fountains"] == [] and rep["components"] == 1


def test_check_split_nested(capsys, tmp_path):
    p = tmp_path / "S.json"
    save_desc(split_nested(), p)
    code, out, _ = run(capsys, "check", p)
    assert code == 0
    rep = json.loads(out)
    assert rep["maximal"] and rep["compact"] is False
    assert rep["compact_witness"] == "no connecting arc"


def test_hom_ext(capsys):
    code, out, _ = run(capsys, "hom", "--from", "C(0,1)", "--to", "C(0,0)")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "ext", "--from", "C(0,0)", "--to", "C(1,1)")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "hom", "--from", "C(0,0)", "--to", "C(0,1)")
    assert code == 0 and out.strip() == "0"


def test_flip_writes_new_file(capsys, st_file, tmp_path):
    out_path = tmp_path / "flipped.json"
    code, out, _ = run(capsys, "flip", st_file, "--arc", "C(0,0)", "-o", out_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["removed"] == "C(0,0)" and payload["added"] == "C(1,1)"
    flipped = load_desc(out_path)
    assert flipped.contains  # file parses back
    code, out, _ = run(capsys, "flip", out_path, "--arc", "C(1,1)", "-o", tmp_path / "b.json")
    assert json.loads(out)["added"] == "C(0,0)"


def test_flip_domain_error(capsys, st_file, tmp_path):
    code, out, err = run(capsys, "flip", st_file, "--arc", "C(9,9)", "-o", tmp_path / "x.json")
    assert code == 1
    assert json.loads(err)["error"] == "NotMemberError"


def test_bad_arc_parse_error(capsys):
    code, _, err = run(capsys, "hom", "--from", "C(0", "--to", "C(0,0)")
    assert code == 1
    assert json.loads(err)["error"] == "ArcParseError"


def test_quiver_formats(capsys, st_file):
    code, out, _ = run(capsys, "quiver", st_file, "--window", "-2", "2", "--format", "json")
    assert code == 0
    q = json.loads(out)
    assert {"vertices", "arrows"} <= q.keys()
    code, out, _ = run(capsys, "quiver", st_file, "--window", "-2", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_render(capsys, st_file, tmp_path):
    svg_path = tmp_path / "out.svg"
    code, _, _ = run(capsys, "render", st_file, "-o", svg_path, "--window", "-3", "3")
    assert code == 0
    assert svg_path.read_text().startswith("<svg")


def test_oracle_verify(capsys, tmp_path):
    o_path = tmp_path / "o.json"
    o_path.write_text(json.dumps({"core": "RL", "core_start": 0, "left_cycle": "RL", "right_cycle": "RL"}))
    code, out, _ = run(capsys, "oracle-verify", "--orientation", o_path, "--window", "-6", "6")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["projectives"]["quiver_matches_opposite"]


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["quiver"])  # missing file argument
    assert exc.value.code == 2
