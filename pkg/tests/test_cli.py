import json
import shutil
import subprocess

import pytest

from noncrossing.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lattice_type_a(capsys):
    code, out, _ = run(capsys, "lattice", "--family", "A", "--degree", "4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["element_count"] == 14 and data["maximal_chain_count"] == 16
    assert data["supersolvable"] is True and len(data["witness_chain"]) == 4


def test_lattice_type_b_not_supersolvable(capsys):
    code, out, _ = run(capsys, "lattice", "--family", "B", "--degree", "4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["supersolvable"] is False and data["witness_chain"] is None


def test_hurwitz_json_and_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "hurwitz", "--family", "A", "--degree", "4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["radius"], data["diameter"], data["vertex_count"]) == (3, 3, 16)
    assert data["radius_lower_bound"] == 3 and data["bound_holds"]
    path = tmp_path / "h.dot"
    code, out, _ = run(capsys, "hurwitz", "--family", "B", "--degree", "2", "--format", "dot", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert path.read_text().startswith("graph H_B2 {")


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "--family", "B", "--degree", "3")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["p"] == 3 and data["image_size"] == 20 and data["apartments_contain_chambers"]


def test_embed_onto_in_small_rank_fails(capsys):
    code, _, err = run(capsys, "embed", "--family", "A", "--degree", "3")
    assert code == EXIT_FAILED and "hits all" in err


def test_embed_building(capsys):
    code, out, _ = run(capsys, "embed", "--building", "--p", "2", "--dim", "3")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["chamber_count"], data["diameter"], data["radius"]) == (21, 3, 3)
    code, out, _ = run(capsys, "embed", "--building", "--p", "3", "--dim", "3", "--format", "dot")
    assert code == EXIT_OK and out.count(" -- ") == 52 * 6 // 2


@pytest.mark.parametrize(
    "argv",
    [
        ["lattice", "--family", "C", "--degree", "3"],
        ["lattice", "--family", "A"],
        ["embed", "--family", "A", "--degree", "4", "--p", "3"],
        ["embed", "--building", "--p", "2"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("nc:")


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "lattice", "--family", "A", "--degree", "5", "--budget", "4")
    assert code == EXIT_BUDGET and "cap" in err
    code, _, _ = run(capsys, "hurwitz", "--family", "A", "--degree", "5", "--budget", "10")
    assert code == EXIT_BUDGET


def test_verify_all_stable_output_is_reproducible(capsys, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-all", "--only", "radius-a", "--stable", "--out", str(first)]) == EXIT_OK
    assert main(["verify-all", "--only", "1", "--stable", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text())
    assert data["passed"] == 1 and data["failed"] == 0
    claim = data["claims"][0]
    assert claim["id"] == "radius-a" and "seconds" not in claim


def test_verify_all_selection_by_substring(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", "building")
    data = json.loads(out)
    assert code == EXIT_OK and [c["number"] for c in data["claims"]] == [15]
    assert "seconds" in data["claims"][0]


def test_verify_all_unknown_claim(capsys):
    code, _, _ = run(capsys, "verify-all", "--only", "no-such-claim")
    assert code == EXIT_USAGE


def test_injected_fault_is_detected(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", "partition-isomorphism", "--inject-fault")
    assert code == EXIT_FAILED
    assert json.loads(out)["failed"] == 1
    code, _, _ = run(capsys, "verify-all", "--only", "partition-isomorphism")
    assert code == EXIT_OK


@pytest.mark.skipif(shutil.which("nc") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["nc", "lattice", "--family", "A", "--degree", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["element_count"] == 5
