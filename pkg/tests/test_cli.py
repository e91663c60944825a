import json

import pytest

from spinweave.cli import main
from spinweave.document import StateDocument


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_three_qubit(capsys):
    code, out, _ = run(capsys, "generate", "--path", "1/2,1,1/2", "--m", "1/2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "spinweave/1"
    assert doc["state_alg"] == {"++-": {"1": "2/1"}, "+-+": {"1": "-1/1"}, "-++": {"1": "-1/1"}}
    assert doc["ratio"] == {"6": "1/1"}
    assert doc["holds"] is True


def test_generate_doubled_syntax_and_table_row(capsys):
    code, out, _ = run(capsys, "generate", "--path", "1,2", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["state_alg"] == {"++": {"1": "2/1"}}
    assert doc["label"]["path"] == "1/2,1"


@pytest.mark.parametrize("argv, token", [
    (["--path", "1/2,3/2", "--m", "1/2"], "3/2"),
    (["--path", "1/2,q", "--m", "0"], "'q'"),
    (["--path", "1/2,1", "--m", "1/3"], "'1/3'"),
    (["--path", "1/2,1", "--m", "2"], "m=2"),
])
def test_generate_parse_errors(capsys, argv, token):
    code, _, err = run(capsys, "generate", *argv)
    assert code == 1
    assert token in err


def test_state_document_round_trip(capsys, tmp_path):
    target = tmp_path / "doc.json"
    code, _, _ = run(capsys, "generate", "--path", "1,2,1,2,1", "--m=-1/2", "--approx",
                     "--policy", "random:5", "-o", str(target))
    assert code == 0
    text = target.read_text(encoding="utf-8")
    doc = StateDocument.loads(text)
    assert doc.dumps() == text
    assert json.loads(text)["normalized"]["approx"] is True
    keys = list(json.loads(text)["state_alg"])
    assert keys == sorted(keys)


def test_generate_with_layout_file(capsys, tmp_path):
    layout = tmp_path / "layout.json"
    layout.write_text(json.dumps({"polarizers": "-+-", "descent_pairs": {"3": [3, 2]}}))
    code, out, _ = run(capsys, "generate", "--path", "1/2,1,1/2", "--m", "1/2", "--policy", f"file:{layout}")
    assert code == 0
    doc = json.loads(out)
    assert doc["setup"]["chi"] == [[1, 1, 0], [1, 1, 1], [1, 1, -1]]
    assert doc["policy"] == "explicit"


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "2", "--suite", "proportionality")
    assert code == 0
    summary = json.loads(out)
    assert summary["totals"]["proportionality"]["pass"] == 4


def test_verify_oracle_above_cap_is_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--suite", "oracle", "--oracle-cap", "3")
    assert code == 0
    assert json.loads(out)["totals"]["oracle"]["skip"] == 16


def test_verify_bad_suite(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "2", "--suite", "bogus")
    assert code == 1 and "bogus" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert [p["path"] for p in doc["paths"]] == ["1/2,0,1/2", "1/2,1,1/2", "1/2,1,3/2"]
    assert doc["dimension"] == 8


def test_oracle_command_and_cap(capsys):
    code, out, _ = run(capsys, "oracle", "--path", "1/2,1,1/2", "--m", "1/2")
    assert code == 0 and json.loads(out)["match"] is True
    code, _, err = run(capsys, "oracle", "--path", "1,2,3,4,5,6,7,8", "--m", "0")
    assert code == 3 and "n=8" in err
