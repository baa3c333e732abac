"""Exact linear algebra over Z_N for arbitrary N >= 2.

Two independent routes to the size of a kernel are provided:

* ``kernel_size_howell`` reduces the rows to Howell form over Z_N, where the
  row space has size ``prod(N / pivot)``;
* ``kernel_size_snf`` computes the Smith normal form of an integer lift and
  counts ``N**(cols - k) * prod(gcd(d_i, N))``.

Both use Python integers throughout, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

__all__ = [
    "ModMatrix",
    "is_unit",
    "row_reduce",
    "kernel_size",
    "kernel_size_howell",
    "kernel_size_snf",
    "kernel_rank",
    "brute_force_kernel_size",
    "smith_diagonal",
    "is_prime",
]


def _check_modulus(n: int) -> None:
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def is_unit(r: int, n: int) -> bool:
    """True iff ``r`` is invertible in Z_n."""
    _check_modulus(n)
    return gcd(r % n, n) == 1


@dataclass(frozen=True)
class ModMatrix:
    """Immutable matrix over Z_N with entries normalized to [0, N)."""

    modulus: int
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.modulus)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for e in self.entries:
            if not 0 <= e < self.modulus:
                raise ValueError(f"entry {e} not normalized mod {self.modulus}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int, cols: int | None = None) -> "ModMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(modulus, len(rows), cols, tuple(e % modulus for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> "ModMatrix":
        return cls(modulus, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, k: int, modulus: int) -> "ModMatrix":
        return cls.from_rows([[int(i == j) for j in range(k)] for i in range(k)], modulus, k)

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        n = self.modulus
        return tuple(sum(a * b for a, b in zip(row, v)) % n for row in self.to_rows())

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in r) for r in self.to_rows())


# ---------------------------------------------------------------------------
# Howell form


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def _unit_normalizer(a: int, n: int) -> int:
    """A unit u of Z_n with u*a == gcd(a, n) (mod n)."""
    a %= n
    if a == 0:
        return 1
    g, s, _ = _xgcd(a, n)
    # s*a == g mod n, but s need not be a unit; shift s by multiples of n/g
    step = n // g
    u = s % step
    while gcd(u, n) != 1:
        u += step
    return u % n


def _howell_rows(rows: list[list[int]], n: int, cols: int) -> list[list[int]]:
    # Echelonize with gcd row operations, scale each pivot to a divisor of n,
    # reduce the rows above it, and append the pivot row's annihilator
    # multiple so later columns absorb it (this gives the Howell property).
    work = [[e % n for e in r] for r in rows]
    r = 0
    for c in range(cols):
        if r == len(work):
            break
        for i in range(r + 1, len(work)):
            b = work[i][c]
            if b == 0:
                continue
            a = work[r][c]
            if a == 0:
                work[r], work[i] = work[i], work[r]
                continue
            g, s, t = _xgcd(a, b)
            rr, ri = work[r], work[i]
            work[r] = [(s * x + t * y) % n for x, y in zip(rr, ri)]
            work[i] = [(-(b // g) * x + (a // g) * y) % n for x, y in zip(rr, ri)]
        if work[r][c] == 0:
            continue
        u = _unit_normalizer(work[r][c], n)
        work[r] = [(u * x) % n for x in work[r]]
        p = work[r][c]
        for i in range(r):
            q = work[i][c] // p
            if q:
                work[i] = [(x - q * y) % n for x, y in zip(work[i], work[r])]
        extra = [((n // p) * x) % n for x in work[r]]
        if any(extra):
            work.append(extra)
        r += 1
    return [row for row in work if any(row)]


def row_reduce(a: ModMatrix) -> ModMatrix:
    """Howell form of ``a`` (reduced row echelon form when N is prime).

    The result has the same number of rows as ``a`` when possible, padded with
    zero rows; composite moduli can need extra rows, in which case the result
    is taller.
    """
    n = a.modulus
    rows = _howell_rows(a.to_rows(), n, a.cols)
    height = max(a.rows, len(rows))
    rows = rows + [[0] * a.cols for _ in range(height - len(rows))]
    return ModMatrix.from_rows(rows, n, a.cols)


def row_space_size(a: ModMatrix) -> int:
    h = row_reduce(a)
    n = a.modulus
    size = 1
    for row in h.to_rows():
        nz = [e for e in row if e]
        if nz:
            size *= n // nz[0]
    return size


def kernel_size_howell(a: ModMatrix) -> int:
    return a.modulus ** a.cols // row_space_size(a)


# ---------------------------------------------------------------------------
# Smith normal form over the integers


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero elementary divisors of an integer matrix (as positive ints)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nr, nc):
        # choose smallest nonzero |entry| in the trailing block as pivot
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = m[t][t]
            for i in range(t + 1, nr):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    done = False
            for j in range(t + 1, nc):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    done = False
            if not done:
                # move a smaller remainder into the pivot slot
                best = None
                for i in range(t, nr):
                    if m[i][t] and (best is None or abs(m[i][t]) < abs(m[best][t])):
                        best = i
                m[t], m[best] = m[best], m[t]
                bestj = None
                for j in range(t, nc):
                    if m[t][j] and (bestj is None or abs(m[t][j]) < abs(m[t][bestj])):
                        bestj = j
                for row in m:
                    row[t], row[bestj] = row[bestj], row[t]
                continue
            # divisibility: pivot must divide the whole trailing block
            p = m[t][t]
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if m[i][j] % p), None)
            if bad is not None:
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                done = False
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def kernel_size_snf(a: ModMatrix) -> int:
    n = a.modulus
    d = smith_diagonal(a.to_rows())
    return n ** (a.cols - len(d)) * prod(gcd(x, n) for x in d)


def kernel_size(a: ModMatrix) -> int:
    """Number of vectors v in (Z_N)^cols with a @ v == 0 (mod N)."""
    return kernel_size_howell(a)


def kernel_rank(a: ModMatrix) -> int:
    """Dimension of the kernel over the prime field Z_p."""
    if not is_prime(a.modulus):
        raise ValueError(f"kernel_rank needs a prime modulus, got {a.modulus}")
    h = row_reduce(a)
    rank = sum(1 for row in h.to_rows() if any(row))
    return a.cols - rank


def brute_force_kernel_size(a: ModMatrix) -> int:
    """Count kernel vectors by trying all N**cols of them."""
    from itertools import product

    n = a.modulus
    rows = a.to_rows()
    return sum(
        1
        for v in product(range(n), repeat=a.cols)
        if all(sum(x * y for x, y in zip(r, v)) % n == 0 for r in rows)
    )
