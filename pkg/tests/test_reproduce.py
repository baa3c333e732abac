import pytest

from tribracket.published import TABLES, table_rows
from tribracket.reproduce import reproduce_table


def test_table_shapes():
    assert {k: len(table_rows(k)) for k in TABLES} == {"V1": 18, "V2": 18, "V3": 18, "four-element": 52}
    printed = [p for p, _, _ in table_rows("V2")]
    assert "L62" in printed and "L6a2" not in printed


@pytest.mark.parametrize("table", ["V1", "V2"])
def test_z3_tables_reproduce(table):
    cells = reproduce_table(table)
    assert all(c.matched for c in cells), [c for c in cells if not c.matched]
    flagged = [c for c in cells if c.flagged]
    assert all(c.name == "L6a2" for c in flagged)


def test_parallel_matches_serial():
    assert reproduce_table("V1", jobs=2) == reproduce_table("V1", jobs=1)


def test_cell_json():
    cell = reproduce_table("V1")[0]
    js = cell.to_json()
    assert js["matched"] is True and js["table"] == "V1"


def test_unknown_table():
    with pytest.raises(KeyError):
        reproduce_table("V7")
