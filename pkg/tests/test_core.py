from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from tribracket.core import (
    MalformedTensorError,
    Tribracket,
    alexander_tribracket,
    check_group,
    cyclic_group_table,
    dehn_tribracket,
    enumerate_tribrackets,
    format_tensor,
    parse_tensor,
    symmetric_group_table,
    validate_tribracket,
)
from tribracket.linalg import is_unit
from tribracket.published import X2_TENSOR, X3_TENSOR, X4_TENSOR


@pytest.mark.parametrize("tensor", [X2_TENSOR, X3_TENSOR, X4_TENSOR])
def test_builtin_tensors_validate(tensor):
    assert validate_tribracket(tensor)


def test_x2_is_alexander_z2():
    X = Tribracket.from_tensor(X2_TENSOR)
    assert X.table == alexander_tribracket(2, 1, 1).table
    assert X(1, 1, 1) == 1 and X(1, 1, 2) == 2


def test_latin_failure_has_witness():
    rep = validate_tribracket([[[1, 1], [1, 1]], [[2, 2], [2, 2]]])
    assert not rep and rep.axiom == "i"
    assert rep.witness == (1, 1, None)


def test_axiom_ii_failure():
    # Latin in all directions but not coming from a tribracket
    found = None
    for X in _latin_cubes(3):
        rep = validate_tribracket(X)
        if not rep and rep.axiom == "ii":
            found = rep
            break
    assert found is not None and len(found.witness) == 4


@pytest.mark.parametrize("bad", [
    [],
    [[[1, 2], [2, 1]]],
    [[[1, 2], [2, 1]], [[2, 1], [1, 3]]],
    [[[1, 2], [2, 1]], [[2, 1], [1, "a"]]],
    [[[1, 2], [2, 1]], [[2, 1], [1]]],
])
def test_malformed_tensors_raise(bad):
    with pytest.raises(MalformedTensorError):
        validate_tribracket(bad)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1), st.integers(1, n - 1))))
def test_alexander_tribrackets_are_valid(nxy):
    n, x, y = nxy
    if not (is_unit(x, n) and is_unit(y, n)):
        with pytest.raises(ValueError):
            alexander_tribracket(n, x, y)
        return
    assert validate_tribracket(alexander_tribracket(n, x, y).tensor())


@pytest.mark.parametrize("table", [cyclic_group_table(4), cyclic_group_table(5), symmetric_group_table(3)])
def test_dehn_tribrackets_are_valid(table):
    X = dehn_tribracket(table)
    assert validate_tribracket(X.tensor())


def test_group_checks():
    assert check_group(cyclic_group_table(3)) == (0, (0, 2, 1))
    with pytest.raises(ValueError, match="associativity"):
        check_group([[0, 1, 1], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(ValueError, match="closure"):
        check_group([[0, 3], [1, 0]])


def _latin_squares(n):
    for rows in product(permutations(range(1, n + 1)), repeat=n):
        if all(len({r[c] for r in rows}) == n for c in range(n)):
            yield [list(r) for r in rows]


def _latin_cubes(n):
    squares = list(_latin_squares(n))
    for mats in product(squares, repeat=n):
        if all(len({m[b][c] for m in mats}) == n for b in range(n) for c in range(n)):
            yield list(mats)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 12)])
def test_enumeration_matches_naive_filter(n, count):
    got = [X.tensor() for X in enumerate_tribrackets(n)]
    naive = sorted(X for X in _latin_cubes(n) if validate_tribracket(X))
    assert got == naive
    assert len(got) == count


def test_enumeration_contains_three_element_example():
    assert X3_TENSOR in [X.tensor() for X in enumerate_tribrackets(3)]


def test_tensor_text_round_trip():
    text = format_tensor(X3_TENSOR)
    assert parse_tensor(text) == X3_TENSOR
    assert parse_tensor(format_tensor(X3_TENSOR, as_json=True)) == X3_TENSOR
    assert parse_tensor("[[[1 2][2 1]] [[2 1][1 2]]]") == X2_TENSOR


@pytest.mark.parametrize("text", ["[[1, 2]", "[1, 2]]", "[[1, x]]", "5"])
def test_parse_errors(text):
    with pytest.raises(MalformedTensorError):
        parse_tensor(text)
