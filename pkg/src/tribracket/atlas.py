"""Embedded PD codes for prime knots (<= 8 crossings) and links (<= 7 crossings)."""
from __future__ import annotations

import difflib
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .diagram import Diagram, PDCode, diagram_from_pd, parse_pd

__all__ = ["AtlasEntry", "load_atlas", "load_entry", "list_entries", "crossing_count", "read_entries"]

_NAME_RE = re.compile(r"^(?:(\d+)_(\d+)|L(\d+)([an])(\d+))$")


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    pd: PDCode
    components: int

    @property
    def crossings(self) -> int:
        return len(self.pd.crossings)

    def diagram(self, **kw) -> Diagram:
        return diagram_from_pd(self.pd, **kw)


def crossing_count(name: str) -> int:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"not an atlas name: {name}")
    return int(m.group(1) or m.group(3))


def read_entries(text: str) -> dict[str, AtlasEntry]:
    """Parse ``NAME: PDTEXT`` lines (``#`` comments allowed)."""
    out: dict[str, AtlasEntry] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, pd_text = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'NAME: PD'")
        name = name.strip()
        if name in out:
            raise ValueError(f"line {lineno}: duplicate entry {name}")
        pd = parse_pd(pd_text)
        d = diagram_from_pd(pd)
        out[name] = AtlasEntry(name, pd, d.n_components)
    return out


@lru_cache(maxsize=None)
def _builtin() -> dict[str, AtlasEntry]:
    text = resources.files("tribracket").joinpath("data/atlas.txt").read_text()
    return read_entries(text)


def load_atlas(path: str | Path | None = None) -> dict[str, AtlasEntry]:
    if path is None:
        return _builtin()
    return read_entries(Path(path).read_text())


def load_entry(name: str, atlas: dict[str, AtlasEntry] | None = None) -> AtlasEntry:
    """Look up an atlas entry; ``U1``, ``U2``... give crossingless unlinks."""
    m = re.fullmatch(r"U\(?(\d+)\)?", name)
    if m:
        k = int(m.group(1))
        return AtlasEntry(f"U({k})", PDCode((), k), k)
    atlas = _builtin() if atlas is None else atlas
    try:
        return atlas[name]
    except KeyError:
        near = difflib.get_close_matches(name, list(atlas), n=3)
        hint = f"; did you mean {', '.join(near)}?" if near else ""
        raise KeyError(f"unknown diagram {name!r}{hint}") from None


def list_entries(max_crossings: int | None = None, components: int | str | None = None,
                 atlas: dict[str, AtlasEntry] | None = None) -> list[str]:
    """Names in atlas order.

    ``components`` is an exact count, ``"links"`` (two or more) or None.
    """
    atlas = _builtin() if atlas is None else atlas
    out = []
    for name, e in atlas.items():
        if max_crossings is not None and e.crossings > max_crossings:
            continue
        if components == "links" and e.components < 2:
            continue
        if isinstance(components, int) and e.components != components:
            continue
        out.append(name)
    return out
