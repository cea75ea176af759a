import json

from edgepow.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_delta_c6pend(capsys):
    code, out, _ = run(capsys, "delta", "fixture:c6pend", "--caps", "1,2,1,1,1,1,1")
    assert code == 0 and out.strip() == "3"


def test_delta_c4twopath(capsys):
    code, out, _ = run(capsys, "delta", "template:c4twopath", "--caps", "3,1,3,1,3,3,3,3")
    assert code == 0 and out.strip() == "8"


def test_delta_k2(capsys, tmp_path):
    p = tmp_path / "k2.json"
    p.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}))
    code, out, _ = run(capsys, "delta", str(p), "--caps", "1,1")
    assert code == 0 and out.strip() == "1"


def test_gens_json(capsys):
    code, out, _ = run(
        capsys, "gens", "template:c3pathpend", "--caps", "1,1,1,2,1,1,1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["delta"] == 3 and len(data["members"]) == 6


def test_check_strong_fail_exit_2(capsys):
    code, out, _ = run(
        capsys, "check", "fixture:c5star", "--caps", "1,1,1,1,1,1,1,1", "--strong", "--json"
    )
    assert code == 2
    data = json.loads(out)
    assert data["verdict"] == "fail"
    missing = data["witness"]["missing"]
    # the moved monomial is always divisible by x6*x7*x8 here
    assert missing[5] >= 1 and missing[6] >= 1 and missing[7] >= 1


def test_check_strong_pass_exit_0(capsys):
    code, out, _ = run(capsys, "check", "cycle:5", "--caps", "1,1,1,1,1", "--strong")
    assert code == 0 and "pass" in out


def test_check_veronese_modes(capsys):
    code, out, _ = run(capsys, "check", "star:3", "--caps", "1,2,1,3", "--veronese")
    assert code == 0 and "base=" in out
    code, out, _ = run(
        capsys, "check", "cycle:8", "--caps", "2,1,2,1,1,1,2,1", "--veronese"
    )
    assert code == 2 and out.strip() == "none"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "template:c3path3")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "sep": True,
        "rule": "unicyclic(iv)(2)",
        "detail": {"path_at": 1},
    }


def test_search_modes(capsys):
    code, out, _ = run(capsys, "search", "path:7", "--cap-max", "2")
    assert code == 2 and "counterexample" in out
    code, out, _ = run(capsys, "search", "path:6", "--cap-max", "2")
    assert code == 0 and out.strip() == "none"
    code, out, _ = run(capsys, "search", "cycle:8", "--cap-max", "2", "--json")
    assert code == 2 and json.loads(out)["counterexample"] is not None


def test_repro_single_and_unknown(capsys):
    code, out, _ = run(capsys, "repro", "final-example")
    assert code == 0 and "pass" in out
    code, _, err = run(capsys, "repro", "nope")
    assert code == 1 and "unknown fixture" in err


def test_repro_all_json(capsys):
    code, out, _ = run(capsys, "repro", "--all", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data) >= 20 and all(entry["ok"] for entry in data)


def test_scan_conjecture_small(capsys):
    code, out, _ = run(capsys, "scan-conjecture", "--max-n", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["clean"] is True and data["instances"] > 0


def test_bad_inputs_exit_1(capsys):
    code, _, err = run(capsys, "delta", "cycle:2", "--caps", "1,1")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "delta", "cycle:4", "--caps", "1,1")
    assert code == 1 and "cap vector" in err
    code, _, err = run(capsys, "delta", "nosuchfile.json", "--caps", "1,1")
    assert code == 1


def test_graph_file_validation_message(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"n": 3, "edges": [[1, 2], [1, 2], [2, 3]]}))
    code, _, err = run(capsys, "delta", str(p), "--caps", "1,1,1")
    assert code == 1 and "edges[1]" in err and "duplicate" in err
