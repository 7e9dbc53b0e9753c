import io
import json

import pytest

from braidlink.braids import BraidWord
from braidlink.cli import main, run_paper_checks
from braidlink.fixtures import reference_braids


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_trefoil(capsys):
    code, out, err = run(capsys, "invariants", "B2 1 1 1")
    assert code == 0
    assert "determinant:  3" in out


def test_invariants_unknot(capsys):
    code, out, _ = run(capsys, "invariants", "B2 1")
    assert code == 0
    assert "components:   1" in out
    assert "determinant:  1" in out


def test_invariants_json_reference(capsys):
    from braidlink.braids import braid_text

    word_text = braid_text(reference_braids().axis)
    code, out, _ = run(capsys, "invariants", "--json", word_text)
    assert code == 0
    payload = json.loads(out)
    assert payload["determinant"] == 64
    assert payload["components"] == 3


def test_invariants_alexander_at(capsys):
    code, out, _ = run(capsys, "invariants", "--alexander-at", "2", "B2 1 1 1")
    assert code == 0
    assert "alexander(2): 3" in out


def test_invariants_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "invariants", "B2 7 zz")
    assert code == 2
    assert "error" in err


def test_invariants_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("B2 1 1 1"))
    code, out, _ = run(capsys, "invariants", "-")
    assert code == 0
    assert "determinant:  3" in out


def test_invariants_file_argument(capsys, tmp_path):
    path = tmp_path / "word.txt"
    path.write_text("B3 1 -2 1 -2\n", encoding="utf-8")
    code, out, _ = run(capsys, "invariants", f"@{path}")
    assert code == 0
    assert "determinant:  5" in out


def test_json_output_deterministic(capsys):
    code1, out1, _ = run(capsys, "invariants", "--json", "B3 1 -2 1 -2")
    code2, out2, _ = run(capsys, "invariants", "--json", "B3 1 -2 1 -2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_paper_verify_passes(capsys):
    code, out, _ = run(capsys, "paper")
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_paper_verify_detects_corruption():
    braids = reference_braids()
    corrupted = braids._replace(
        axis=BraidWord(9, braids.axis.letters[:-1] + (1,))
    )
    lines = []
    code = run_paper_checks(braids=corrupted, out=lines)
    assert code == 1
    assert any(line.startswith("FAIL") for line in lines)


def test_paper_variant_report(capsys):
    code, out, _ = run(capsys, "paper", "--variant", "positive-q0")
    assert code == 0
    assert "axis all-positive" in out
    assert "determinant:  0" in out


def test_construct_braid(capsys):
    from braidlink.braids import braid_text

    code, out, _ = run(capsys, "construct", "--emit", "braid")
    assert code == 0
    assert out.strip() == braid_text(reference_braids().infinity)


def test_construct_braid_variant(capsys):
    from braidlink.braids import braid_text

    code, out, _ = run(
        capsys, "construct", "--emit", "braid", "--smoothing", "all-positive"
    )
    assert code == 0
    assert out.strip() == braid_text(reference_braids().infinity_all_positive)


def test_construct_braid_rejects_oxz(capsys):
    code, _, err = run(capsys, "construct", "--emit", "braid", "--projection", "oxz")
    assert code == 2
    assert "oxy" in err


def test_construct_crossings_contains_annotated_position(capsys):
    code, out, _ = run(capsys, "construct", "--emit", "crossings", "--projection", "oxy")
    assert code == 0
    payload = json.loads(out)
    positions = {tuple(e["position"]) for e in payload["events"] if e["position"]}
    assert ("2", "0") in positions


def test_construct_svg(capsys):
    code, out, _ = run(capsys, "construct", "--emit", "svg", "--projection", "oxz")
    assert code == 0
    assert out.startswith("<?xml")
    assert out.count('<g class="line"') == 8


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["construct", "--emit", "nonsense"])
    assert exit_info.value.code == 2
