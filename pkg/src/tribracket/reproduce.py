"""Recompute the published enhancement tables cell by cell."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .atlas import load_atlas
from .diagram import orientation_variants
from .invariants import module_enhancement
from .published import NAME_FIXES, TABLES, published_module, table_rows

__all__ = ["CellResult", "reproduce_table", "TABLE_SETS"]

TABLE_SETS = tuple(TABLES)


@dataclass(frozen=True)
class CellResult:
    table: str
    printed: str
    name: str
    expected: str
    computed: str
    variant: str | None  # None when no orientation/mirror variant matched
    flagged: bool        # printed name differs from the atlas name

    @property
    def matched(self) -> bool:
        return self.variant is not None

    def to_json(self) -> dict:
        return asdict(self) | {"matched": self.matched}


def _cell(args) -> CellResult:
    table, printed, name, expected, atlas_path = args
    V = published_module(table)
    d = load_atlas(atlas_path)[name].diagram()
    computed = module_enhancement(V, d).polynomial
    variant = "as-is" if computed == expected else None
    if variant is None:
        for tag, dv in orientation_variants(d)[1:]:
            if module_enhancement(V, dv).polynomial == expected:
                variant = tag
                break
    return CellResult(table, printed, name, expected, computed, variant, printed in NAME_FIXES)


def reproduce_table(table: str, jobs: int = 1, atlas_path=None) -> list[CellResult]:
    """One result per table cell, in table order.

    A cell matches if the stored diagram, or failing that one of its
    mirror/orientation variants, gives the printed polynomial.
    """
    if table not in TABLES:
        raise KeyError(f"unknown table {table!r}; choose from {', '.join(TABLES)}")
    work = [(table, printed, name, poly, atlas_path) for printed, name, poly in table_rows(table)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_cell, work))
    return [_cell(w) for w in work]
