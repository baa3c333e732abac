"""Tribracket modules: unit coefficients x_{a,b,c}, y_{a,b,c} over Z_N.

The defining identities couple coefficients at (a,b,c), (a,b,d), (a,c,d) and
at the three "outer" triples

    B = (b, [a,b,c], [a,b,d]),  C = (c, [a,b,c], [a,c,d]),  D = (d, [a,b,d], [a,c,d])

for every quadruple (a,b,c,d). Each quadruple yields four families of three
scalar sides that must all agree mod N.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import Tribracket, ValidityReport, MalformedTensorError, format_tensor, parse_tensor
from .linalg import is_unit

__all__ = [
    "XModule",
    "validate_module",
    "constant_module",
    "search_modules",
    "naive_search_modules",
    "module_constraints",
    "parse_module",
    "format_module",
]

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class XModule:
    """Coefficient tensors indexed 0-based: ``x[a][b][c]`` is x_{a+1,b+1,c+1}."""

    base: Tribracket
    modulus: int
    x: tuple[tuple[tuple[int, ...], ...], ...]
    y: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_tensors(cls, base: Tribracket, x, y, modulus: int, check: bool = True) -> "XModule":
        if check:
            rep = validate_module(base, x, y, modulus)
            if not rep:
                raise ValueError(f"not a tribracket module: {rep}")
        freeze = lambda t: tuple(tuple(tuple(int(v) for v in row) for row in mat) for mat in t)  # noqa: E731
        return cls(base, modulus, freeze(x), freeze(y))

    def coeffs(self, a: int, b: int, c: int) -> tuple[int, int]:
        """(x, y) at the 0-based triple (a, b, c)."""
        return self.x[a][b][c], self.y[a][b][c]

    def tensors(self) -> tuple[list, list]:
        as_list = lambda t: [[list(row) for row in mat] for mat in t]  # noqa: E731
        return as_list(self.x), as_list(self.y)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for t in (self.x, self.y) for mat in t for row in mat for v in row)

    def __str__(self):
        return format_module(self)


def _quad_terms(t, a: int, b: int, c: int, d: int):
    abc, abd, acd = t[a][b][c], t[a][b][d], t[a][c][d]
    return (a, b, c), (a, b, d), (a, c, d), (b, abc, abd), (c, abc, acd), (d, abd, acd)


def _families(X, Y, n: int, t, a, b, c, d):
    """Four families of three sides; each family must agree mod N."""
    ABC, ABD, ACD, B, C, D = _quad_terms(t, a, b, c, d)
    x = lambda p: X[p[0]][p[1]][p[2]]  # noqa: E731
    y = lambda p: Y[p[0]][p[1]][p[2]]  # noqa: E731
    f1 = (x(C) * x(ABC), x(D) * x(ABD), x(B) * x(ABC) + y(B) * x(ABD) - x(B) * y(B))
    f2 = (y(C) * y(ACD), y(B) * y(ABD), x(D) * y(ABD) + y(D) * y(ACD) - x(D) * y(D))
    f3 = (x(B) * y(ABC), y(D) * x(ACD), x(C) * y(ABC) + y(C) * x(ACD) - x(C) * y(C))
    f4 = (
        x(C) * x(ABC) * y(ABC) + y(C) * x(ACD) * y(ACD),
        x(B) * x(ABC) * y(ABC) + y(B) * x(ABD) * y(ABD),
        x(D) * x(ABD) * y(ABD) + y(D) * x(ACD) * y(ACD),
    )
    return f1, f2, f3, f4


def validate_module(base: Tribracket, x: Sequence, y: Sequence, modulus: int) -> ValidityReport:
    """Check coefficient tensors against unit-ness and all four families.

    Axiom "0" is unit-ness of every entry; families are numbered 1-4 and the
    witness is the 1-based quadruple (a, b, c, d).
    """
    n = base.size
    for name, t in (("x", x), ("y", y)):
        if len(t) != n or any(len(m) != n or any(len(r) != n for r in m) for m in t):
            raise MalformedTensorError(f"{name} tensor shape does not match the {n}-element tribracket")
        for a, b, c in product(range(n), repeat=3):
            v = t[a][b][c]
            if not isinstance(v, int) or not 0 <= v < modulus:
                raise MalformedTensorError(f"{name} entry at ({a + 1},{b + 1},{c + 1}) is {v!r}, not a residue mod {modulus}")
            if not is_unit(v, modulus):
                return ValidityReport(False, "0", (name, a + 1, b + 1, c + 1), f"{v} is not a unit mod {modulus}")
    tab = base.table
    for a, b, c, d in product(range(n), repeat=4):
        for k, fam in enumerate(_families(x, y, n, tab, a, b, c, d), start=1):
            first = fam[0] % modulus
            if any(v % modulus != first for v in fam[1:]):
                return ValidityReport(False, str(k), (a + 1, b + 1, c + 1, d + 1))
    return ValidityReport(True)


def constant_module(base: Tribracket, x: int, y: int, modulus: int) -> XModule:
    if not (is_unit(x, modulus) and is_unit(y, modulus)):
        raise ValueError(f"x={x}, y={y} must both be units mod {modulus}")
    n = base.size
    fill = lambda v: [[[v % modulus] * n for _ in range(n)] for _ in range(n)]  # noqa: E731
    return XModule.from_tensors(base, fill(x), fill(y), modulus)


# ---------------------------------------------------------------------------
# search


def module_constraints(base: Tribracket) -> list[tuple[tuple[int, int, int, int], frozenset[Triple]]]:
    """One representative quadruple per distinct check, with the triples it reads.

    Quadruples whose six triples coincide positionally impose identical
    checks, so only the first of each is kept.
    """
    n = base.size
    seen: dict = {}
    for q in product(range(n), repeat=4):
        seen.setdefault(_quad_terms(base.table, *q), q)
    return [(q, frozenset(terms)) for terms, q in seen.items()]


def search_modules(base: Tribracket, modulus: int, limit: int | None = None, pinned: dict | None = None) -> Iterator[XModule]:
    """All X-modules over Z_modulus, lexicographic in the flattened (x, y) pair.

    Backtracking assigns triples in an order that completes constraints
    early; a constraint is checked the moment its last triple gets both of
    its coefficients. Results are emitted in lexicographic order, so the
    full set is collected before the first yield unless it can be streamed
    (``limit`` does not change which modules are produced first).

    ``pinned`` maps 0-based triples to fixed (x, y) pairs.
    """
    n = base.size
    units = [u for u in range(modulus) if is_unit(u, modulus)]
    triples = list(product(range(n), repeat=3))
    cons = module_constraints(base)
    # order triples greedily: next triple is the one completing most constraints
    order: list[Triple] = []
    remaining = set(triples)
    placed: set = set()
    while remaining:
        def score(t):
            done = sum(1 for _, ts in cons if t in ts and ts <= placed | {t})
            touch = sum(1 for _, ts in cons if t in ts)
            return (done, touch, -triples.index(t))
        t = max(remaining, key=score)
        order.append(t)
        placed.add(t)
        remaining.discard(t)
    pos = {t: k for k, t in enumerate(order)}
    checks_at: list[list[tuple[int, int, int, int]]] = [[] for _ in order]
    for q, ts in cons:
        checks_at[max(pos[t] for t in ts)].append(q)

    X = [[[0] * n for _ in range(n)] for _ in range(n)]
    Y = [[[0] * n for _ in range(n)] for _ in range(n)]
    tab = base.table
    pinned = pinned or {}
    found: list[tuple] = []

    def ok(k: int) -> bool:
        for q in checks_at[k]:
            for fam in _families(X, Y, n, tab, *q):
                first = fam[0] % modulus
                if fam[1] % modulus != first or fam[2] % modulus != first:
                    return False
        return True

    def rec(k: int):
        if k == len(order):
            found.append((
                tuple(tuple(tuple(row) for row in mat) for mat in X),
                tuple(tuple(tuple(row) for row in mat) for mat in Y),
            ))
            return
        a, b, c = order[k]
        choices = [pinned[(a, b, c)]] if (a, b, c) in pinned else [(u, v) for u in units for v in units]
        for u, v in choices:
            if not (is_unit(u, modulus) and is_unit(v, modulus)):
                continue
            X[a][b][c], Y[a][b][c] = u, v
            if ok(k):
                rec(k + 1)

    rec(0)
    found.sort(key=lambda xy: tuple(v for t in xy for mat in t for row in mat for v in row))
    for k, (x, y) in enumerate(found):
        if limit is not None and k >= limit:
            return
        yield XModule(base, modulus, x, y)


def naive_search_modules(base: Tribracket, modulus: int) -> Iterator[XModule]:
    """Filter every unit-valued tensor pair through ``validate_module``."""
    n = base.size
    units = [u for u in range(modulus) if is_unit(u, modulus)]
    cells = n ** 3
    for flat in product(units, repeat=2 * cells):
        x = _unflat(flat[:cells], n)
        y = _unflat(flat[cells:], n)
        if validate_module(base, x, y, modulus):
            yield XModule.from_tensors(base, x, y, modulus, check=False)


def _unflat(flat, n):
    return [[list(flat[(a * n + b) * n:(a * n + b) * n + n]) for b in range(n)] for a in range(n)]


# ---------------------------------------------------------------------------
# formats


def parse_module(text: str) -> tuple[list, list, dict]:
    """Parse a module file into (x tensor, y tensor, metadata).

    JSON form: ``{"modulus": 3, "x": [...], "y": [...], "tribracket": [...] | "name"}``.
    Bracket form: two tensors, optionally preceded by ``modulus N`` and
    ``tribracket <tensor-or-name>`` lines; ``#`` starts a comment.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        meta = {k: v for k, v in data.items() if k not in ("x", "y")}
        return data["x"], data["y"], meta
    meta: dict = {}
    body = []
    for line in stripped.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key == "modulus":
            meta["modulus"] = int(rest)
        elif key == "tribracket":
            rest = rest.strip()
            meta["tribracket"] = parse_tensor(rest) if rest.startswith("[") else rest
        else:
            body.append(line)
    pair = parse_tensor("[" + " ".join(body) + "]")
    if len(pair) != 2:
        raise MalformedTensorError("a module needs exactly two tensors (x then y)")
    return pair[0], pair[1], meta


def format_module(m: XModule, as_json: bool = False) -> str:
    x, y = m.tensors()
    if as_json:
        return json.dumps({"modulus": m.modulus, "tribracket": m.base.tensor(), "x": x, "y": y}, separators=(",", ":"))
    return "\n".join([
        f"modulus {m.modulus}",
        f"tribracket {format_tensor(m.base.tensor())}",
        format_tensor(x),
        format_tensor(y),
    ])
