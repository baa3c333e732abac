"""Regenerate src/tribracket/data/atlas.txt from the Rolfsen/Thistlethwaite tables.

Needs spherogram + snappy_manifolds, which are NOT dependencies of the package:

    pip install spherogram snappy_manifolds
    python scripts/generate_atlas.py
"""
from pathlib import Path

import spherogram

KNOTS = ["3_1", "4_1"] + [f"5_{i}" for i in (1, 2)] + [f"6_{i}" for i in (1, 2, 3)]
KNOTS += [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 22)]
LINKS = ["L2a1", "L4a1", "L5a1"] + [f"L6a{i}" for i in range(1, 6)] + ["L6n1"]
LINKS += [f"L7a{i}" for i in range(1, 8)] + ["L7n1", "L7n2"]

OUT = Path(__file__).resolve().parents[1] / "src" / "tribracket" / "data" / "atlas.txt"


def pd_text(name):
    link = spherogram.Link(name)
    return " ".join("X(%d,%d,%d,%d)" % tuple(c) for c in link.PD_code(min_strand_index=1))


def main():
    lines = ["# name: PD code (Knot Atlas convention: ccw from incoming under-strand)"]
    for name in KNOTS + LINKS:
        lines.append(f"{name}: {pd_text(name)}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(KNOTS) + len(LINKS)} entries to {OUT}")


if __name__ == "__main__":
    main()
