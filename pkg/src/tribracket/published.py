"""Tribrackets, modules and published invariant tables used for reproduction."""
from __future__ import annotations

from .core import Tribracket
from .xmodule import XModule

X2_TENSOR = [[[1, 2], [2, 1]], [[2, 1], [1, 2]]]

X3_TENSOR = [
    [[1, 3, 2], [2, 1, 3], [3, 2, 1]],
    [[2, 1, 3], [3, 2, 1], [1, 3, 2]],
    [[3, 2, 1], [1, 3, 2], [2, 1, 3]],
]

X4_TENSOR = [
    [[4, 3, 2, 1], [2, 4, 1, 3], [3, 1, 4, 2], [1, 2, 3, 4]],
    [[3, 1, 4, 2], [4, 3, 2, 1], [1, 2, 3, 4], [2, 4, 1, 3]],
    [[2, 4, 1, 3], [1, 2, 3, 4], [4, 3, 2, 1], [3, 1, 4, 2]],
    [[1, 2, 3, 4], [3, 1, 4, 2], [2, 4, 1, 3], [4, 3, 2, 1]],
]

# name -> (tribracket tensor, modulus, x tensor, y tensor)
MODULES = {
    "V": (X2_TENSOR, 3,
          [[[2, 2], [2, 1]], [[1, 2], [2, 2]]],
          [[[1, 2], [2, 2]], [[2, 2], [2, 1]]]),
    "V1": (X2_TENSOR, 3,
           [[[2, 1], [2, 2]], [[2, 2], [1, 2]]],
           [[[2, 2], [1, 1]], [[1, 1], [2, 2]]]),
    "V2": (X2_TENSOR, 3,
           [[[1, 1], [1, 1]], [[1, 1], [1, 1]]],
           [[[1, 1], [2, 2]], [[2, 2], [1, 1]]]),
    "V3": (X2_TENSOR, 8,
           [[[1, 3], [1, 7]], [[7, 1], [3, 1]]],
           [[[1, 5], [1, 1]], [[1, 1], [5, 1]]]),
    "four-element": (X4_TENSOR, 3,
                     [[[1, 1, 1, 1], [2, 1, 1, 2], [2, 1, 1, 2], [1, 1, 1, 1]],
                      [[1, 2, 2, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 2, 2, 1]],
                      [[1, 2, 2, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 2, 2, 1]],
                      [[1, 1, 1, 1], [2, 1, 1, 2], [2, 1, 1, 2], [1, 1, 1, 1]]],
                     [[[2, 2, 2, 2], [1, 1, 1, 1], [1, 1, 1, 1], [2, 2, 2, 2]],
                      [[1, 1, 1, 1], [2, 2, 2, 2], [2, 2, 2, 2], [1, 1, 1, 1]],
                      [[1, 1, 1, 1], [2, 2, 2, 2], [2, 2, 2, 2], [1, 1, 1, 1]],
                      [[2, 2, 2, 2], [1, 1, 1, 1], [1, 1, 1, 1], [2, 2, 2, 2]]]),
}

# the constant modules over X2 with Z_3 coefficients, as (x, y)
CONSTANT_MODULES = {"C1": (1, 1), "C2": (1, 2), "C3": (2, 1), "C4": (2, 2)}

# polynomial -> diagram names, as printed; "L62" is kept verbatim
TABLES = {
    "V1": {
        "2u^9+6u^27": ["L2a1", "L4a1", "L5a1", "L6a2", "L7a4", "L7a6"],
        "2u^9+4u^27+2u^81": ["L7a2", "L7a3", "L7n1", "L7n2"],
        "8u^27": ["L6a1", "L6a3", "L7a1", "L7a5"],
        "8u^27+8u^81": ["L6a5"],
        "2u^9+6u^27+8u^81": ["L6n1", "L7a7"],
        "2u^9+14u^81": ["L6a4"],
    },
    "V2": {
        "6u^9+2u^27": ["L2a1", "L62", "L7a6"],
        "2u^9+6u^27": ["L4a1", "L5a1", "L7a2", "L7a3", "L7a4", "L7n1", "L7n2"],
        "4u^9+4u^27": ["L6a3", "L7a5"],
        "8u^27": ["L6a1", "L7a1"],
        "2u^9+6u^27+8u^81": ["L6a4"],
        "6u^9+8u^27+2u^81": ["L6a5"],
        "8u^9+6u^27+2u^81": ["L6n1", "L7a7"],
    },
    "V3": {
        "2u^128+4u^256+2u^512": ["L2a1", "L6a2", "L6a3", "L7a5", "L7a6"],
        "2u^256+6u^512": ["L4a1", "L6a1", "L7a2", "L7n1"],
        "8u^512": ["L5a1", "L7a1", "L7a3", "L7a4", "L7n2"],
        "2u^256+6u^1024+6u^2048+2u^4096": ["L6a5", "L6n1", "L7a7"],
        "2u^1024+6u^2048+8u^4096": ["L6a4"],
    },
    "four-element": {
        "16u^9": ["4_1", "5_1", "5_2", "6_2", "6_3", "7_1", "7_2", "7_3", "7_5", "7_6", "8_1", "8_2",
                  "8_3", "8_4", "8_6", "8_7", "8_8", "8_9", "8_12", "8_13", "8_14", "8_16", "8_17"],
        "8u^9+8u^27": ["3_1", "6_1", "7_4", "7_7", "8_5", "8_10", "8_11", "8_15", "8_19", "8_20", "8_21"],
        "8u^9+8u^81": ["8_18"],
        "16u^9+16u^27": ["L2a1", "L6a2", "L7a6"],
        "32u^27": ["L6a3", "L7a5"],
        "16u^9+32u^27+16u^81": ["L7a3", "L7n1", "L7n2"],
        "16u^9+48u^27": ["L4a1", "L5a1", "L7a4"],
        "32u^9+32u^81": ["L6n1", "L7a7"],
        "32u^27+32u^81": ["L6a5"],
        "64u^27": ["L6a1", "L7a1"],
        "32u^9+224u^81": ["L6a4"],
    },
}

# names printed in the tables that are not atlas names
NAME_FIXES = {"L62": "L6a2"}


def tribracket(tensor) -> Tribracket:
    return Tribracket.from_tensor(tensor)


def published_module(name: str) -> XModule:
    tensor, n, x, y = MODULES[name]
    return XModule.from_tensors(Tribracket.from_tensor(tensor), x, y, n)


def table_rows(name: str) -> list[tuple[str, str, str]]:
    """(printed name, atlas name, expected polynomial) for every cell."""
    rows = []
    for poly, names in TABLES[name].items():
        for printed in names:
            rows.append((printed, NAME_FIXES.get(printed, printed), poly))
    return rows


NAMED_TRIBRACKETS = {"X2": X2_TENSOR, "X3": X3_TENSOR, "X4": X4_TENSOR}
