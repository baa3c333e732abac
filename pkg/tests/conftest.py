from itertools import product

import pytest

from tribracket.atlas import load_entry
from tribracket.published import published_module, tribracket, X2_TENSOR


def brute_colorings(X, d):
    """Every assignment of elements to regions, filtered by the crossing rule."""
    out = []
    for f in product(range(X.size), repeat=d.n_regions):
        if all(X.table[f[a]][f[b]][f[c]] == f[e] for a, b, c, e in d.roles):
            out.append(tuple(v + 1 for v in f))
    return out


@pytest.fixture(scope="session")
def x2():
    return tribracket(X2_TENSOR)


@pytest.fixture(scope="session")
def module_v():
    return published_module("V")


@pytest.fixture(scope="session")
def trefoil():
    return load_entry("3_1").diagram()


@pytest.fixture(scope="session")
def unknot():
    return load_entry("U1").diagram()
