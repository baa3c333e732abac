from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_colorings
from tribracket.atlas import list_entries, load_entry
from tribracket.core import Tribracket, alexander_tribracket, dehn_tribracket, symmetric_group_table
from tribracket.diagram import add_kink, diagram_from_pd
from tribracket.invariants import (
    Coloring,
    EnhancementValue,
    alexander_counting,
    alexander_image_enhancement,
    alexander_matrix,
    counting_invariant,
    enumerate_colorings,
    format_polynomial,
    module_enhancement,
    parse_polynomial,
    sticker_matrix,
)
from tribracket.linalg import kernel_size
from tribracket.published import CONSTANT_MODULES, MODULES, X2_TENSOR, X3_TENSOR, published_module
from tribracket.xmodule import constant_module

SMALL = list_entries(max_crossings=5)


def test_trefoil_colorings(x2, trefoil):
    assert counting_invariant(x2, trefoil) == 4
    assert counting_invariant(alexander_tribracket(3, 1, 2), trefoil) == 27
    assert alexander_counting(3, 1, 2, trefoil) == 27


def test_unknot_counts(unknot):
    assert alexander_counting(3, 1, 2, unknot) == 9
    for tensor in (X2_TENSOR, X3_TENSOR):
        X = Tribracket.from_tensor(tensor)
        assert counting_invariant(X, unknot) == X.size ** 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_unlink_count(k):
    d = diagram_from_pd(f"U({k})")
    X = Tribracket.from_tensor(X3_TENSOR)
    assert counting_invariant(X, d) == 3 ** (k + 1)


@pytest.mark.parametrize("name", SMALL)
def test_enumeration_matches_brute_force(name):
    d = load_entry(name).diagram()
    for X in (Tribracket.from_tensor(X2_TENSOR), Tribracket.from_tensor(X3_TENSOR), alexander_tribracket(4, 1, 3)):
        got = [c.colors for c in enumerate_colorings(X, d)]
        assert got == brute_colorings(X, d)


@pytest.mark.parametrize("name", SMALL + ["6_1", "L6a4"])
@pytest.mark.parametrize("nxy", [(3, 1, 2), (3, 2, 2), (4, 1, 3), (5, 2, 3), (6, 1, 5), (8, 3, 5)])
def test_linear_algebra_matches_enumeration(name, nxy):
    d = load_entry(name).diagram()
    assert alexander_counting(*nxy, d) == counting_invariant(alexander_tribracket(*nxy), d)


def test_figure_eight_z3_22():
    d = load_entry("4_1").diagram()
    assert alexander_counting(3, 2, 2, d) == counting_invariant(alexander_tribracket(3, 2, 2), d)


def test_alexander_rejects_non_units(trefoil):
    with pytest.raises(ValueError):
        alexander_matrix(6, 2, 1, trefoil)
    with pytest.raises(ValueError):
        alexander_image_enhancement(4, 1, 2, trefoil)


def test_counting_invariant_of_dehn_s3():
    X = dehn_tribracket(symmetric_group_table(3))
    d = load_entry("3_1").diagram()
    assert counting_invariant(X, d) == len(brute_colorings(X, d))


# rows over Z_3 in region order u1..u5 for the monochromatic trefoil coloring:
# -2 u2 + u1 + 2 u4 - u3, -2 u2 + u4 + 2 u5 - u3, -2 u2 + u5 + 2 u1 - u3
PUBLISHED_TREFOIL_ROWS = [[1, 1, 2, 2, 0], [0, 1, 2, 1, 2], [2, 1, 2, 0, 1]]


def test_trefoil_sticker_system(module_v, trefoil):
    f = Coloring((1,) * trefoil.n_regions)
    A = sticker_matrix(module_v, trefoil, f)
    ours = sorted(map(tuple, A.to_rows()))
    matches = [
        perm for perm in permutations(range(5))
        if sorted(tuple(row[perm[r]] for r in range(5)) for row in PUBLISHED_TREFOIL_ROWS) == ours
    ]
    assert matches
    assert kernel_size(A) == 27


def test_unknot_sticker_matrix_is_empty(module_v, unknot):
    A = sticker_matrix(module_v, unknot, Coloring((1, 2)))
    assert (A.rows, A.cols) == (0, 2)
    assert kernel_size(A) == 9


def _hand_rows(V, d, f):
    rows = []
    for a, b, c, e in d.roles:
        x, y = _coeffs(V, f[a], f[b], f[c])
        row = Counter()
        row[a] -= x * y
        row[b] += x
        row[c] += y
        row[e] -= 1
        rows.append([row[r] % V.modulus for r in range(d.n_regions)])
    return rows


def _coeffs(V, A, B, C):
    return V.x[A - 1][B - 1][C - 1], V.y[A - 1][B - 1][C - 1]


@pytest.mark.parametrize("module", ["V", "V1", "V2", "V3"])
def test_hopf_sticker_rows(module):
    V = published_module(module)
    d = load_entry("L2a1").diagram()
    cols = enumerate_colorings(V.base, d)
    assert len(cols) == 8
    for f in cols:
        A = sticker_matrix(V, d, f)
        assert (A.rows, A.cols) == (2, 4)
        assert A.to_rows() == _hand_rows(V, d, f)


def test_hopf_monochromatic_rows_frozen(module_v):
    d = load_entry("L2a1").diagram()
    assert sticker_matrix(module_v, d, Coloring((1, 1, 1, 1))).to_rows() == [[2, 2, 1, 1], [1, 2, 2, 1]]


def test_sticker_matrix_rejects_foreign_coloring(module_v, trefoil):
    with pytest.raises(ValueError):
        sticker_matrix(module_v, trefoil, Coloring((1, 2)))
    with pytest.raises(ValueError):
        sticker_matrix(module_v, trefoil, Coloring((3,) * 5))


def test_trefoil_and_unknot_enhancement(module_v, trefoil, unknot):
    assert module_enhancement(module_v, trefoil).polynomial == "4u^27"
    assert module_enhancement(module_v, unknot).polynomial == "4u^9"
    assert module_enhancement(published_module("V1"), load_entry("L2a1").diagram()).polynomial == "2u^9+6u^27"


@pytest.mark.parametrize("module", sorted(MODULES))
@pytest.mark.parametrize("name", ["3_1", "4_1", "L2a1", "5_2"])
def test_evaluation_at_one_is_counting(module, name):
    V = published_module(module)
    d = load_entry(name).diagram()
    ev = module_enhancement(V, d)
    assert ev.at_one() == sum(ev.multiset.values()) == counting_invariant(V.base, d)


@pytest.mark.parametrize("xy", sorted(CONSTANT_MODULES.values()))
@pytest.mark.parametrize("name", ["U1", "3_1", "4_1", "L2a1", "5_1", "L4a1"])
def test_constant_module_law(xy, name):
    d = load_entry(name).diagram()
    V = constant_module(Tribracket.from_tensor(X2_TENSOR), *xy, 3)
    count = counting_invariant(V.base, d)
    assert module_enhancement(V, d).multiset == Counter({alexander_counting(3, *xy, d): count})


@given(st.sampled_from(["U1", "3_1", "L2a1", "4_1"]), st.sampled_from(["V", "V1", "V2", "V3"]),
       st.lists(st.tuples(st.booleans(), st.booleans(), st.integers(0, 99)), min_size=1, max_size=3))
@settings(max_examples=25, deadline=None)
def test_kinks_preserve_enhancement(name, module, steps):
    V = published_module(module)
    d = load_entry(name).diagram()
    want = module_enhancement(V, d).polynomial
    for positive, under_first, pick in steps:
        arc = d.pd.labels[pick % len(d.pd.labels)] if d.pd.crossings else None
        d = add_kink(d, arc, positive, under_first)
    assert module_enhancement(V, d).polynomial == want


def test_image_enhancement_trefoil(trefoil):
    values = alexander_image_enhancement(3, 1, 2, trefoil)
    X = alexander_tribracket(3, 1, 2)
    brute = [0 if set(f) == {1} else 1 for f in brute_colorings(X, trefoil)]
    assert values == brute
    assert Counter(values) == Counter({0: 1, 1: 26})


def test_image_enhancement_composite_modulus():
    d = load_entry("4_1").diagram()
    values = alexander_image_enhancement(4, 1, 3, d)
    assert len(values) == alexander_counting(4, 1, 3, d)
    assert values.count(0) == 1


@pytest.mark.parametrize("poly", ["4u^27", "2u^9+6u^27", "u^4+3u^8"])
def test_polynomial_round_trip(poly):
    assert format_polynomial(parse_polynomial(poly)) == poly


def test_polynomial_format_rules():
    assert EnhancementValue((27, 9, 27)).polynomial == "u^9+2u^27"
    assert parse_polynomial("2u^{9} + 6u^{27}") == Counter({9: 2, 27: 6})
    assert format_polynomial(Counter()) == "0"
    with pytest.raises(ValueError):
        parse_polynomial("2x^3")
