import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tribracket.core import MalformedTensorError, Tribracket, alexander_tribracket
from tribracket.published import CONSTANT_MODULES, MODULES, X2_TENSOR, published_module
from tribracket.xmodule import (
    XModule,
    constant_module,
    format_module,
    module_constraints,
    naive_search_modules,
    parse_module,
    search_modules,
    validate_module,
)


def _parts(name):
    tensor, n, x, y = MODULES[name]
    return Tribracket.from_tensor(tensor), x, y, n


@pytest.mark.parametrize("name", sorted(MODULES))
def test_builtin_modules_validate(name):
    X, x, y, n = _parts(name)
    assert validate_module(X, x, y, n)


@pytest.mark.parametrize("name", ["V", "V1", "V2", "V3"])
def test_single_entry_perturbation_breaks_module(name):
    X, x, y, n = _parts(name)
    rng = random.Random(name)
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    for _ in range(30):
        which = rng.choice("xy")
        t = [[list(r) for r in m] for m in (x if which == "x" else y)]
        a, b, c = (rng.randrange(2) for _ in range(3))
        t[a][b][c] = rng.choice([u for u in range(n) if u != t[a][b][c]])
        xx, yy = (t, y) if which == "x" else (x, t)
        rep = validate_module(X, xx, yy, n)
        assert not rep
        if t[a][b][c] not in units:
            assert rep.axiom == "0"


def test_non_residue_entry_is_malformed():
    X, x, y, n = _parts("V")
    bad = [[list(r) for r in m] for m in x]
    bad[0][0][0] = 7
    with pytest.raises(MalformedTensorError):
        validate_module(X, bad, y, n)
    with pytest.raises(MalformedTensorError):
        validate_module(X, [[[1]]], y, n)


@pytest.mark.parametrize("label,xy", sorted(CONSTANT_MODULES.items()))
def test_constant_modules(label, xy):
    X = Tribracket.from_tensor(X2_TENSOR)
    V = constant_module(X, *xy, 3)
    assert set(V.flat()) <= {1, 2}
    assert V.coeffs(1, 0, 1) == xy


@given(st.sampled_from([3, 4, 5, 7, 8]), st.integers(1, 7), st.integers(1, 7))
@settings(max_examples=40, deadline=None)
def test_constant_module_over_any_tribracket(n, x, y):
    # constant coefficients satisfy every family whenever they are units
    x, y = x % n, y % n
    base = alexander_tribracket(3, 1, 2)
    if gcd(x, n) != 1 or gcd(y, n) != 1:
        with pytest.raises(ValueError):
            constant_module(base, x, y, n)
    else:
        assert validate_module(base, *constant_module(base, x, y, n).tensors(), n)


def test_constraints_are_deduplicated():
    X = Tribracket.from_tensor(X2_TENSOR)
    cons = module_constraints(X)
    assert 0 < len(cons) <= 16
    assert all(len(q) == 4 for q, _ in cons)


@pytest.fixture(scope="module")
def x2_z3_modules():
    return list(search_modules(Tribracket.from_tensor(X2_TENSOR), 3))


def test_search_equals_naive_filter_z3(x2_z3_modules):
    X = Tribracket.from_tensor(X2_TENSOR)
    naive = sorted(V.flat() for V in naive_search_modules(X, 3))
    assert [V.flat() for V in x2_z3_modules] == naive
    assert len(naive) == 48


def test_search_contains_published_modules(x2_z3_modules):
    flats = {V.flat() for V in x2_z3_modules}
    for name in ("V", "V1", "V2"):
        assert published_module(name).flat() in flats
    X = Tribracket.from_tensor(X2_TENSOR)
    for xy in CONSTANT_MODULES.values():
        assert constant_module(X, *xy, 3).flat() in flats


def test_search_limit_and_pinning(x2_z3_modules):
    X = Tribracket.from_tensor(X2_TENSOR)
    assert [V.flat() for V in search_modules(X, 3, limit=5)] == [V.flat() for V in x2_z3_modules[:5]]
    pinned = list(search_modules(X, 3, pinned={(0, 0, 0): (2, 2)}))
    assert pinned and all(V.coeffs(0, 0, 0) == (2, 2) for V in pinned)
    assert len(pinned) < len(x2_z3_modules)


def test_search_over_z2_is_trivial():
    X = Tribracket.from_tensor(X2_TENSOR)
    assert [V.flat() for V in search_modules(X, 2)] == [(1,) * 16]


def test_search_results_validate_z8_sample():
    X = Tribracket.from_tensor(X2_TENSOR)
    for V in search_modules(X, 4, limit=20):
        assert validate_module(X, *V.tensors(), 4)


@pytest.mark.parametrize("as_json", [False, True])
def test_module_round_trip(as_json):
    V = published_module("V3")
    x, y, meta = parse_module(format_module(V, as_json=as_json))
    assert (x, y) == V.tensors()
    assert meta["modulus"] == 8
    assert meta["tribracket"] == X2_TENSOR


def test_module_text_with_named_tribracket():
    text = "# the example module\nmodulus 3\ntribracket X2\n" + "\n".join(
        str(t).replace(",", " ") for t in MODULES["V"][2:]
    )
    x, y, meta = parse_module(text)
    assert meta == {"modulus": 3, "tribracket": "X2"}
    assert (x, y) == MODULES["V"][2:]
    with pytest.raises(MalformedTensorError):
        parse_module("modulus 3\n[[[1]]]")


def test_from_tensors_rejects_invalid():
    X, x, y, n = _parts("V")
    with pytest.raises(ValueError):
        XModule.from_tensors(X, x, x, n)
