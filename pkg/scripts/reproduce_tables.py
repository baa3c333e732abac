"""Recompute every published enhancement table and write a JSON report."""
import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from tribracket.reproduce import TABLE_SETS, reproduce_table


@dataclass
class Config:
    tables: tuple[str, ...] = TABLE_SETS
    jobs: int = 1
    out: Path | None = None


def main(cfg: Config) -> int:
    report, bad = [], 0
    for table in cfg.tables:
        t0 = time.perf_counter()
        cells = reproduce_table(table, jobs=cfg.jobs)
        miss = [c for c in cells if not c.matched]
        bad += len(miss)
        print(f"{table:13s} {len(cells) - len(miss):3d}/{len(cells)} cells  {time.perf_counter() - t0:.2f}s")
        for c in miss:
            print(f"    {c.name:6s} got {c.computed}  expected {c.expected}")
        report += [c.to_json() for c in cells]
    if cfg.out:
        cfg.out.write_text(json.dumps(report, indent=1))
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--table", action="append", choices=TABLE_SETS)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    raise SystemExit(main(Config(tuple(a.table) if a.table else TABLE_SETS, a.jobs, a.out)))
