"""Horizontal tribrackets on finite sets {1..n}.

A tribracket is stored as an n x n x n operation tensor whose entry in matrix
a, row b, column c is [a, b, c]. All public interfaces are 1-based; the
internal table ``Tribracket.table`` is 0-based for fast indexing.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .linalg import is_unit

__all__ = [
    "Tribracket",
    "ValidityReport",
    "MalformedTensorError",
    "validate_tribracket",
    "alexander_tribracket",
    "dehn_tribracket",
    "enumerate_tribrackets",
    "parse_tensor",
    "format_tensor",
    "cyclic_group_table",
    "symmetric_group_table",
    "check_group",
]


class MalformedTensorError(ValueError):
    pass


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    axiom: str | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return "valid"
        return f"invalid: axiom {self.axiom} fails at {self.witness}" + (f" ({self.detail})" if self.detail else "")


def _shape_check(tensor, n: int, lo: int, hi: int, what: str = "tensor"):
    if len(tensor) != n:
        raise MalformedTensorError(f"{what} has {len(tensor)} matrices, expected {n}")
    for a, mat in enumerate(tensor):
        if len(mat) != n:
            raise MalformedTensorError(f"{what} matrix {a + 1} has {len(mat)} rows, expected {n}")
        for b, row in enumerate(mat):
            if len(row) != n:
                raise MalformedTensorError(f"{what} matrix {a + 1} row {b + 1} has {len(row)} entries")
            for c, v in enumerate(row):
                if not isinstance(v, int) or not lo <= v <= hi:
                    raise MalformedTensorError(
                        f"{what} entry at ({a + 1},{b + 1},{c + 1}) is {v!r}, expected {lo}..{hi}"
                    )


def _check_latin(t, n: int) -> ValidityReport:
    # each of the three one-variable slices must be a permutation
    for a, b in product(range(n), repeat=2):
        if len({t[a][b][c] for c in range(n)}) != n:
            return ValidityReport(False, "i", (a + 1, b + 1, None), "right invertibility")
    for a, c in product(range(n), repeat=2):
        if len({t[a][b][c] for b in range(n)}) != n:
            return ValidityReport(False, "i", (a + 1, None, c + 1), "center invertibility")
    for b, c in product(range(n), repeat=2):
        if len({t[a][b][c] for a in range(n)}) != n:
            return ValidityReport(False, "i", (None, b + 1, c + 1), "left invertibility")
    return ValidityReport(True)


def _check_rIII(t, n: int) -> ValidityReport:
    for a, b, c, d in product(range(n), repeat=4):
        abc, abd, acd = t[a][b][c], t[a][b][d], t[a][c][d]
        lhs = t[b][abc][abd]
        if lhs != t[c][abc][acd] or lhs != t[d][abd][acd]:
            return ValidityReport(False, "ii", (a + 1, b + 1, c + 1, d + 1))
    return ValidityReport(True)


def validate_tribracket(tensor: Sequence) -> ValidityReport:
    """Check a raw 1-based tensor against both tribracket axioms.

    Raises MalformedTensorError for shape problems or out-of-range entries;
    otherwise returns a report naming the first failing axiom and witness.
    """
    n = len(tensor)
    if n == 0:
        raise MalformedTensorError("empty tensor")
    _shape_check(tensor, n, 1, n)
    t = [[[v - 1 for v in row] for row in mat] for mat in tensor]
    rep = _check_latin(t, n)
    if not rep:
        return rep
    return _check_rIII(t, n)


@dataclass(frozen=True)
class Tribracket:
    """A validated tribracket. ``table[a][b][c]`` is 0-based."""

    table: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.table)

    @classmethod
    def from_tensor(cls, tensor: Sequence, labels=None, check: bool = True) -> "Tribracket":
        if check:
            rep = validate_tribracket(tensor)
            if not rep:
                raise ValueError(f"not a tribracket: {rep}")
        table = tuple(tuple(tuple(v - 1 for v in row) for row in mat) for mat in tensor)
        return cls(table, labels)

    def tensor(self) -> list[list[list[int]]]:
        """1-based nested-list tensor."""
        return [[[v + 1 for v in row] for row in mat] for mat in self.table]

    def __call__(self, a: int, b: int, c: int) -> int:
        """1-based evaluation of [a, b, c]."""
        return self.table[a - 1][b - 1][c - 1] + 1

    def __str__(self):
        return format_tensor(self.tensor())


# ---------------------------------------------------------------------------
# constructors


def alexander_tribracket(n: int, x: int, y: int) -> Tribracket:
    """[a,b,c] = -xya + xb + yc over Z_n; residue r becomes element r + 1."""
    if not (is_unit(x, n) and is_unit(y, n)):
        raise ValueError(f"x={x}, y={y} must both be units mod {n}")
    table = tuple(
        tuple(tuple((-x * y * a + x * b + y * c) % n for c in range(n)) for b in range(n))
        for a in range(n)
    )
    return Tribracket(table, labels=tuple(range(n)))


def check_group(table: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Validate a 0-based group multiplication table.

    Returns (identity, inverses); raises ValueError naming the failed axiom.
    """
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise ValueError("group table must be a non-empty square")
    if any(not 0 <= v < n for r in table for v in r):
        raise ValueError("group table entries out of range (closure)")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"associativity fails at {(a, b, c)}")
    ident = next((e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))), None)
    if ident is None:
        raise ValueError("no identity element")
    inv = []
    for a in range(n):
        i = next((b for b in range(n) if table[a][b] == ident == table[b][a]), None)
        if i is None:
            raise ValueError(f"element {a} has no inverse")
        inv.append(i)
    return ident, tuple(inv)


def dehn_tribracket(table: Sequence[Sequence[int]]) -> Tribracket:
    """[a,b,c] = b a^-1 c for the group with 0-based multiplication ``table``."""
    _, inv = check_group(table)
    n = len(table)
    t = tuple(
        tuple(tuple(table[table[b][inv[a]]][c] for c in range(n)) for b in range(n))
        for a in range(n)
    )
    return Tribracket(t, labels=tuple(range(n)))


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(k: int) -> list[list[int]]:
    from itertools import permutations

    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    return [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]


# ---------------------------------------------------------------------------
# enumeration


def enumerate_tribrackets(n: int) -> Iterator[Tribracket]:
    """Every tribracket on {1..n}, lexicographic in the flattened tensor.

    Backtracking fills entries in flat order; each entry is restricted to
    values keeping all three slice families injective, and the axiom (ii)
    identity is checked for every quadruple as soon as all of its operands
    are known.
    """
    if n < 1:
        return
    cells = n ** 3
    flat = [-1] * cells

    def idx(a, b, c):
        return (a * n + b) * n + c

    # for every cell, the quadruples whose check becomes decidable once the
    # cell is filled are only known dynamically (entries index other cells),
    # so checks are run over all quadruples touching fully-known values
    quads = list(product(range(n), repeat=4))

    def val(a, b, c):
        return flat[idx(a, b, c)]

    def rIII_ok() -> bool:
        for a, b, c, d in quads:
            abc, abd, acd = val(a, b, c), val(a, b, d), val(a, c, d)
            if abc < 0 or abd < 0 or acd < 0:
                continue
            x1 = val(b, abc, abd)
            x2 = val(c, abc, acd)
            x3 = val(d, abd, acd)
            known = [v for v in (x1, x2, x3) if v >= 0]
            if len(set(known)) > 1:
                return False
        return True

    used_ab = [[0] * n for _ in range(n * n)]
    used_ac = [[0] * n for _ in range(n * n)]
    used_bc = [[0] * n for _ in range(n * n)]

    def rec(k: int):
        if k == cells:
            yield Tribracket(tuple(
                tuple(tuple(flat[idx(a, b, c)] for c in range(n)) for b in range(n)) for a in range(n)
            ))
            return
        a, rem = divmod(k, n * n)
        b, c = divmod(rem, n)
        for v in range(n):
            if used_ab[a * n + b][v] or used_ac[a * n + c][v] or used_bc[b * n + c][v]:
                continue
            flat[k] = v
            used_ab[a * n + b][v] = used_ac[a * n + c][v] = used_bc[b * n + c][v] = 1
            if rIII_ok():
                yield from rec(k + 1)
            used_ab[a * n + b][v] = used_ac[a * n + c][v] = used_bc[b * n + c][v] = 0
            flat[k] = -1

    yield from rec(0)


# ---------------------------------------------------------------------------
# text / JSON formats


def parse_tensor(text: str) -> list:
    """Parse a tensor in bracket notation or JSON into nested lists.

    Accepts ``[[[1,2],[2,1]],[[2,1],[1,2]]]`` with arbitrary whitespace, commas
    optional between numbers (``[[[1 2][2 1]] [[2 1][1 2]]]``).
    """
    import re

    tokens = re.findall(r"\[|\]|-?\d+|[^\s,\[\]\d-]+", text)
    bad = [t for t in tokens if t not in "[]" and not t.lstrip("-").isdigit()]
    if bad:
        raise MalformedTensorError(f"unexpected token {bad[0]!r}")
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise MalformedTensorError("unexpected end of input")
        tok = tokens[pos]
        pos += 1
        if tok == "[":
            items = []
            while True:
                if pos >= len(tokens):
                    raise MalformedTensorError("unbalanced brackets")
                if tokens[pos] == "]":
                    pos += 1
                    return items
                items.append(parse())
        if tok == "]":
            raise MalformedTensorError("unbalanced brackets")
        return int(tok)

    out = parse()
    if pos != len(tokens):
        raise MalformedTensorError("trailing content after tensor")
    if not isinstance(out, list):
        raise MalformedTensorError("expected a bracketed tensor")
    return out


def format_tensor(tensor: Sequence, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(tensor, separators=(",", ":"))
    mats = []
    for mat in tensor:
        mats.append("[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in mat) + "]")
    return "[" + ", ".join(mats) + "]"
