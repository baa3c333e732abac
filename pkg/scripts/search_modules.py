"""Enumerate X-modules of a small tribracket and score them on the link tables.

With ``--score`` every module found is evaluated on the links of a published
table; the best agreement is reported. Over Z_8 the 2-element tribracket has
15360 modules and the full scoring run takes several minutes.
"""
import argparse
import time
from dataclasses import dataclass

from tribracket.atlas import load_entry
from tribracket.core import Tribracket
from tribracket.invariants import enumerate_colorings, module_enhancement
from tribracket.published import NAMED_TRIBRACKETS, table_rows
from tribracket.xmodule import search_modules


@dataclass
class Config:
    tribracket: str = "X2"
    modulus: int = 3
    limit: int | None = None
    score: str | None = None
    show: int = 5


def main(cfg: Config) -> None:
    X = Tribracket.from_tensor(NAMED_TRIBRACKETS[cfg.tribracket])
    t0 = time.perf_counter()
    modules = list(search_modules(X, cfg.modulus, limit=cfg.limit))
    print(f"{len(modules)} modules over Z_{cfg.modulus} in {time.perf_counter() - t0:.2f}s")
    if not cfg.score:
        for V in modules[: cfg.show]:
            print(" ", V.tensors())
        return
    rows = table_rows(cfg.score)
    diagrams = [(name, poly, load_entry(name).diagram()) for _, name, poly in rows]
    colorings = {name: enumerate_colorings(X, d) for name, _, d in diagrams}
    scored = []
    for V in modules:
        hits = sum(module_enhancement(V, d, colorings[name]).polynomial == poly for name, poly, d in diagrams)
        scored.append((hits, V))
    scored.sort(key=lambda s: -s[0])
    best = scored[0][0]
    print(f"best agreement with table {cfg.score}: {best}/{len(rows)} "
          f"({sum(1 for h, _ in scored if h == best)} modules attain it)")
    for hits, V in scored[: cfg.show]:
        print(f"  {hits:2d}  x={V.tensors()[0]}  y={V.tensors()[1]}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tribracket", default="X2", choices=sorted(NAMED_TRIBRACKETS))
    ap.add_argument("--modulus", type=int, default=3)
    ap.add_argument("--limit", type=int)
    ap.add_argument("--score", help="table name, e.g. V3")
    ap.add_argument("--show", type=int, default=5)
    a = ap.parse_args()
    main(Config(a.tribracket, a.modulus, a.limit, a.score, a.show))
