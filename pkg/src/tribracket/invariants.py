"""Colorings, the counting invariant and the tribracket-module enhancement."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .core import Tribracket, alexander_tribracket
from .diagram import Diagram
from .linalg import ModMatrix, is_unit, kernel_size
from .xmodule import XModule

__all__ = [
    "Coloring",
    "EnhancementValue",
    "enumerate_colorings",
    "counting_invariant",
    "alexander_matrix",
    "alexander_counting",
    "sticker_matrix",
    "module_enhancement",
    "alexander_image_enhancement",
    "format_polynomial",
    "parse_polynomial",
]


@dataclass(frozen=True)
class Coloring:
    """Region colors, 1-based tribracket elements indexed by region id."""

    colors: tuple[int, ...]

    def __getitem__(self, region: int) -> int:
        return self.colors[region]


def _inverse_tables(t):
    n = len(t)
    left = [[[0] * n for _ in range(n)] for _ in range(n)]    # (b,c,d) -> a
    center = [[[0] * n for _ in range(n)] for _ in range(n)]  # (a,c,d) -> b
    right = [[[0] * n for _ in range(n)] for _ in range(n)]   # (a,b,d) -> c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                d = t[a][b][c]
                left[b][c][d] = a
                center[a][c][d] = b
                right[a][b][d] = c
    return left, center, right


def _region_order(d: Diagram) -> list[int]:
    # breadth-first over regions sharing a crossing, starting from region 0
    adj: dict[int, set[int]] = {r: set() for r in range(d.n_regions)}
    for roles in d.roles:
        for r in roles:
            adj[r].update(roles)
    order, seen = [], set()
    for start in range(d.n_regions):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            r = queue.popleft()
            order.append(r)
            for s in sorted(adj[r]):
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
    return order


def enumerate_colorings(X: Tribracket, d: Diagram) -> list[Coloring]:
    """Every region coloring of ``d`` by ``X``, sorted lexicographically.

    Branches on regions in breadth-first order; whenever a crossing has three
    of its four roles colored, the fourth is forced.
    """
    t = X.table
    n = X.size
    left, center, right = _inverse_tables(t)
    R = d.n_regions
    crossings_of: list[list[int]] = [[] for _ in range(R)]
    for i, roles in enumerate(d.roles):
        for r in set(roles):
            crossings_of[r].append(i)
    order = _region_order(d)
    color = [-1] * R
    out: list[tuple[int, ...]] = []

    def propagate(start: int, trail: list[int]) -> bool:
        queue = deque([start])
        while queue:
            r = queue.popleft()
            for i in crossings_of[r]:
                roles = d.roles[i]
                ca, cb, cc, ce = (color[s] for s in roles)
                missing = [k for k, v in enumerate((ca, cb, cc, ce)) if v < 0]
                if not missing:
                    if t[ca][cb][cc] != ce:
                        return False
                    continue
                if len(missing) > 1:
                    continue
                k = missing[0]
                if k == 3:
                    v = t[ca][cb][cc]
                elif k == 0:
                    v = left[cb][cc][ce]
                elif k == 1:
                    v = center[ca][cc][ce]
                else:
                    v = right[ca][cb][ce]
                u = roles[k]
                color[u] = v
                trail.append(u)
                queue.append(u)
        return True

    def rec(k: int):
        while k < len(order) and color[order[k]] >= 0:
            k += 1
        if k == len(order):
            out.append(tuple(v + 1 for v in color))
            return
        r = order[k]
        for v in range(n):
            color[r] = v
            trail = [r]
            if propagate(r, trail):
                rec(k + 1)
            for s in trail:
                color[s] = -1

    rec(0)
    out.sort()
    return [Coloring(c) for c in out]


def counting_invariant(X: Tribracket, d: Diagram) -> int:
    return len(enumerate_colorings(X, d))


# ---------------------------------------------------------------------------
# linear algebra routes


def _crossing_rows(d: Diagram, coeffs: Iterable[tuple[int, int]], modulus: int) -> ModMatrix:
    rows = []
    for (a, b, c, e), (x, y) in zip(d.roles, coeffs):
        row = [0] * d.n_regions
        # -xy v + x u + y w - z == 0, roles summed where regions coincide
        row[a] -= x * y
        row[b] += x
        row[c] += y
        row[e] -= 1
        rows.append(row)
    return ModMatrix.from_rows(rows, modulus, d.n_regions)


def alexander_matrix(modulus: int, x: int, y: int, d: Diagram) -> ModMatrix:
    if not (is_unit(x, modulus) and is_unit(y, modulus)):
        raise ValueError(f"x={x}, y={y} must both be units mod {modulus}")
    return _crossing_rows(d, [(x, y)] * d.n_crossings, modulus)


def alexander_counting(modulus: int, x: int, y: int, d: Diagram) -> int:
    """Counting invariant of the Alexander tribracket (Z_modulus, x, y) by linear algebra."""
    return kernel_size(alexander_matrix(modulus, x, y, d))


def sticker_matrix(V: XModule, d: Diagram, f: Coloring) -> ModMatrix:
    """Homogeneous sticker system for the coloring ``f``: one row per crossing."""
    if len(f.colors) != d.n_regions:
        raise ValueError("coloring does not match the diagram")
    n = V.base.size
    if any(not 1 <= v <= n for v in f.colors):
        raise ValueError("coloring uses elements outside the module's tribracket")
    coeffs = []
    for a, b, c, _ in d.roles:
        A, B, C = f[a] - 1, f[b] - 1, f[c] - 1
        coeffs.append(V.coeffs(A, B, C))
    return _crossing_rows(d, coeffs, V.modulus)


# ---------------------------------------------------------------------------
# enhancement


def format_polynomial(multiset: Counter) -> str:
    """``2u^9+6u^27``: ascending exponents, coefficient omitted when 1."""
    if not multiset:
        return "0"
    terms = []
    for e in sorted(multiset):
        k = multiset[e]
        terms.append(("" if k == 1 else str(k)) + f"u^{e}")
    return "+".join(terms)


def parse_polynomial(text: str) -> Counter:
    """Inverse of ``format_polynomial``; tolerates spaces and ``u^{27}``."""
    out: Counter = Counter()
    cleaned = text.replace(" ", "").replace("{", "").replace("}", "")
    for term in cleaned.split("+"):
        coef, _, exp = term.partition("u^")
        if not _:
            raise ValueError(f"bad term {term!r}")
        out[int(exp)] += int(coef) if coef else 1
    return out


@dataclass(frozen=True)
class EnhancementValue:
    """Kernel sizes over all colorings, kept in coloring order."""

    values: tuple[int, ...]

    @property
    def multiset(self) -> Counter:
        return Counter(self.values)

    @property
    def polynomial(self) -> str:
        return format_polynomial(self.multiset)

    def at_one(self) -> int:
        return len(self.values)

    def __str__(self):
        return self.polynomial


def module_enhancement(V: XModule, d: Diagram, colorings: list[Coloring] | None = None) -> EnhancementValue:
    if colorings is None:
        colorings = enumerate_colorings(V.base, d)
    return EnhancementValue(tuple(kernel_size(sticker_matrix(V, d, f)) for f in colorings))


def alexander_image_enhancement(modulus: int, x: int, y: int, d: Diagram) -> list[int]:
    """Minimal generator count of the submodule of Z_N spanned by each coloring's values.

    Z_N is cyclic, so each value is 0 (all colors zero) or 1.
    """
    X = alexander_tribracket(modulus, x, y)
    out = []
    for f in enumerate_colorings(X, d):
        g = modulus
        for v in f.colors:
            g = gcd(g, v - 1)
        out.append(0 if g == modulus else 1)
    return out
