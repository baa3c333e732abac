"""Random R1/R2 walks on small diagrams, checking every module invariant."""
import argparse
import random
from dataclasses import dataclass

from tribracket.atlas import list_entries, load_entry
from tribracket.diagram import random_move
from tribracket.invariants import module_enhancement
from tribracket.published import MODULES, published_module


@dataclass
class Config:
    max_crossings: int = 5
    moves: int = 20
    seed: int = 0


def main(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    failures = 0
    for name in ["U1"] + list_entries(max_crossings=cfg.max_crossings):
        for label in MODULES:
            V = published_module(label)
            d = load_entry(name).diagram()
            want = module_enhancement(V, d).polynomial
            for _ in range(cfg.moves):
                d, move = random_move(d, rng)
                got = module_enhancement(V, d).polynomial
                if got != want:
                    failures += 1
                    print(f"FAIL {name} {label} after {move}: {got} != {want}")
        print(f"{name:6s} ok" if not failures else f"{name:6s} {failures} failure(s) so far")
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-crossings", type=int, default=5)
    ap.add_argument("--moves", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.max_crossings, a.moves, a.seed)))
