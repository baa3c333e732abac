import json

import pytest

from tribracket.cli import main
from tribracket.published import MODULES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_invariant_text(capsys):
    assert run(capsys, "invariant", "--link", "3_1", "--module", "V") == (0, "4u^27", "")
    assert run(capsys, "invariant", "--link", "U1", "--alexander", "3,1,2")[:2] == (0, "9")
    assert run(capsys, "invariant", "--link", "3_1", "--tribracket", "X2")[:2] == (0, "4")


def test_invariant_json(capsys):
    code, out, _ = run(capsys, "invariant", "--link", "L2a1", "--module", "V1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["polynomial"] == "2u^9+6u^27" and rec["counting"] == 8
    assert rec["multiset"] == {"9": 2, "27": 6}


def test_module_file_with_modulus_flag(tmp_path, capsys):
    _, n, x, y = MODULES["V"]
    f = tmp_path / "v.txt"
    f.write_text(f"{x}\n{y}\n")
    assert run(capsys, "invariant", "--link", "3_1", "--module", str(f), "--tribracket", "X2",
               "--modulus", "3")[:2] == (0, "4u^27")
    code, _, err = run(capsys, "invariant", "--link", "3_1", "--module", str(f), "--tribracket", "X2")
    assert code == 2 and "modulus" in err


def test_pd_file(tmp_path, capsys):
    f = tmp_path / "k.pd"
    f.write_text("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
    assert run(capsys, "invariant", "--pd", str(f), "--alexander", "3,1,2")[:2] == (0, "27")


def test_validate_exit_codes(tmp_path, capsys):
    assert run(capsys, "validate", "--tribracket", "X3")[:2] == (0, "tribracket: valid")
    bad = tmp_path / "bad.txt"
    bad.write_text("[[[1,1],[1,1]],[[2,2],[2,2]]]")
    code, out, _ = run(capsys, "validate", "--tribracket", str(bad))
    assert code == 1 and "axiom i" in out
    broken = tmp_path / "broken.txt"
    broken.write_text("[[[1,2],[2,1]],[[2,1],[1,")
    assert run(capsys, "validate", "--tribracket", str(broken))[0] == 2
    assert run(capsys, "validate", "--module", "V3")[:2] == (0, "module: valid")


def test_invalid_module_file(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"modulus": 3, "tribracket": "X2", "x": [[[1, 1], [1, 1]], [[1, 1], [1, 1]]],
                             "y": [[[1, 1], [1, 1]], [[1, 1], [1, 2]]]}))
    code, out, _ = run(capsys, "validate", "--module", str(f))
    assert code == 1 and "invalid" in out
    assert run(capsys, "invariant", "--link", "3_1", "--module", str(f))[0] == 2


def test_input_errors(capsys):
    assert run(capsys, "invariant", "--link", "9_99", "--module", "V")[0] == 2
    assert run(capsys, "invariant", "--link", "3_1")[0] == 2
    assert run(capsys, "validate", "--tribracket", "/no/such/file")[0] == 2
    assert run(capsys, "tables", "--set", "V9")[0] == 2
    with pytest.raises(SystemExit):
        main(["invariant", "--alexander", "3,1"])


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--size", "2")
    assert code == 0 and out.splitlines() == ["[[[1, 2], [2, 1]], [[2, 1], [1, 2]]]",
                                              "[[[2, 1], [1, 2]], [[1, 2], [2, 1]]]"]
    code, out, _ = run(capsys, "search", "--tribracket", "X2", "--modulus", "3", "--format", "json")
    assert code == 0 and len(out.splitlines()) == 48
    assert run(capsys, "search", "--tribracket", "X2")[0] == 2


def test_tables_single_set(capsys):
    code, out, _ = run(capsys, "tables", "--set", "V2", "--jobs", "1")
    assert code == 0
    assert out.splitlines()[-1] == "all cells match"
    assert "printed as L62" in out


def test_moves(capsys):
    code, out, _ = run(capsys, "moves", "--link", "L2a1", "--module", "V2", "--moves", "6", "--seed", "4")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "moves", "--link", "U1", "--alexander", "3,1,2", "--moves", "4")
    assert code == 0 and all(line.endswith(" 9") for line in out.splitlines())


def test_list_and_diagram(capsys):
    code, out, _ = run(capsys, "list", "--max-crossings", "4", "--components", "links")
    assert (code, out.splitlines()) == (0, ["L2a1", "L4a1"])
    code, out, _ = run(capsys, "diagram", "--link", "3_1", "--format", "json")
    rec = json.loads(out)
    assert rec["diagram"] == "3_1" and len(rec["regions"]) == 5
