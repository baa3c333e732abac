"""Command-line front end.

Exit codes: 0 success / all match, 1 semantic failure (invalid structure,
table mismatch, invariance violation), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .atlas import list_entries, load_atlas, load_entry
from .core import (
    MalformedTensorError,
    Tribracket,
    enumerate_tribrackets,
    format_tensor,
    parse_tensor,
    validate_tribracket,
)
from .diagram import PDError, diagram_from_pd, parse_pd, random_move
from .invariants import alexander_counting, counting_invariant, enumerate_colorings, module_enhancement
from .published import MODULES, NAMED_TRIBRACKETS
from .reproduce import TABLE_SETS, reproduce_table
from .xmodule import XModule, format_module, parse_module, search_modules, validate_module


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    link: str | None = None
    pd: str | None = None
    atlas: str | None = None
    tribracket: str | None = None
    module: str | None = None
    alexander: tuple[int, int, int] | None = None
    modulus: int | None = None
    size: int | None = None
    fmt: str = "text"
    limit: int | None = None
    sets: list[str] = field(default_factory=list)
    jobs: int = 1
    seed: int = 0
    moves: int = 20
    max_crossings: int | None = None
    components: str | None = None


# ---------------------------------------------------------------------------
# input resolution


def _read(path_or_text: str) -> str:
    p = Path(path_or_text)
    if p.exists():
        return p.read_text()
    raise InputError(f"no such file: {path_or_text}")


def _tribracket_tensor(src: str):
    if src in NAMED_TRIBRACKETS:
        return NAMED_TRIBRACKETS[src]
    return parse_tensor(_read(src))


def _load_tribracket(src: str) -> Tribracket:
    tensor = _tribracket_tensor(src)
    rep = validate_tribracket(tensor)
    if not rep:
        raise InputError(f"{src} is not a tribracket: {rep}")
    return Tribracket.from_tensor(tensor, check=False)


def _module_parts(cfg: RunConfig):
    """(base tribracket, x tensor, y tensor, modulus) without validating the module."""
    src = cfg.module
    if src in MODULES and not Path(src).exists():
        tensor, n, x, y = MODULES[src]
        meta = {"modulus": n, "tribracket": tensor}
    else:
        x, y, meta = parse_module(_read(src))
    n = meta.get("modulus", cfg.modulus)
    if n is None:
        raise InputError("module modulus unknown: add a 'modulus N' line or pass --modulus")
    if cfg.modulus is not None and cfg.modulus != n:
        raise InputError(f"--modulus {cfg.modulus} disagrees with the module's modulus {n}")
    ref = meta.get("tribracket")
    if isinstance(ref, str):
        if ref not in NAMED_TRIBRACKETS:
            raise InputError(f"unknown tribracket name {ref!r}")
        ref = NAMED_TRIBRACKETS[ref]
    if cfg.tribracket is not None:
        base = _load_tribracket(cfg.tribracket)
        if ref is not None and ref != base.tensor():
            raise InputError("module's tribracket differs from --tribracket")
    elif ref is not None:
        base = _load_tribracket_tensor(ref)
    else:
        raise InputError("module needs a tribracket: pass --tribracket or embed one")
    return base, x, y, n


def _load_tribracket_tensor(tensor) -> Tribracket:
    rep = validate_tribracket(tensor)
    if not rep:
        raise InputError(f"embedded tribracket is invalid: {rep}")
    return Tribracket.from_tensor(tensor, check=False)


def _load_module(cfg: RunConfig) -> XModule:
    base, x, y, n = _module_parts(cfg)
    rep = validate_module(base, x, y, n)
    if not rep:
        raise InputError(f"{cfg.module} is not a tribracket module: {rep}")
    return XModule.from_tensors(base, x, y, n, check=False)


def _load_diagram(cfg: RunConfig):
    if cfg.pd:
        return "pd:" + cfg.pd, diagram_from_pd(parse_pd(_read(cfg.pd)))
    if cfg.link:
        atlas = load_atlas(cfg.atlas) if cfg.atlas else None
        entry = load_entry(cfg.link, atlas)
        return entry.name, entry.diagram()
    raise InputError("give --link NAME or --pd FILE")


def _emit(cfg: RunConfig, text: str, record) -> None:
    if cfg.fmt == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(cfg: RunConfig) -> int:
    if cfg.module:
        base, x, y, n = _module_parts(cfg)
        rep = validate_module(base, x, y, n)
        kind = "module"
    elif cfg.tribracket:
        rep = validate_tribracket(_tribracket_tensor(cfg.tribracket))
        kind = "tribracket"
    else:
        raise InputError("validate needs --tribracket and/or --module")
    _emit(cfg, f"{kind}: {rep}", {"kind": kind, "valid": rep.valid, "axiom": rep.axiom,
                                  "witness": list(rep.witness) if rep.witness else None})
    return 0 if rep.valid else 1


def cmd_invariant(cfg: RunConfig) -> int:
    name, d = _load_diagram(cfg)
    record: dict = {"diagram": name}
    if cfg.alexander:
        n, x, y = cfg.alexander
        count = alexander_counting(n, x, y, d)
        record.update(tribracket={"alexander": [n, x, y]}, counting=count)
        _emit(cfg, str(count), record)
        return 0
    if cfg.module:
        V = _load_module(cfg)
        colorings = enumerate_colorings(V.base, d)
        ev = module_enhancement(V, d, colorings)
        x, y = V.tensors()
        record.update(
            tribracket=V.base.tensor(),
            module={"modulus": V.modulus, "x": x, "y": y},
            counting=len(colorings),
            polynomial=ev.polynomial,
            multiset={str(k): v for k, v in sorted(ev.multiset.items())},
        )
        _emit(cfg, ev.polynomial, record)
        return 0
    if cfg.tribracket:
        X = _load_tribracket(cfg.tribracket)
        count = counting_invariant(X, d)
        record.update(tribracket=X.tensor(), counting=count)
        _emit(cfg, str(count), record)
        return 0
    raise InputError("invariant needs --alexander, --tribracket or --module")


def cmd_search(cfg: RunConfig) -> int:
    if cfg.size is not None:
        for k, X in enumerate(enumerate_tribrackets(cfg.size)):
            if cfg.limit is not None and k >= cfg.limit:
                break
            _emit(cfg, format_tensor(X.tensor()), X.tensor())
        return 0
    if not cfg.tribracket or cfg.modulus is None:
        raise InputError("search needs --size N, or --tribracket and --modulus")
    X = _load_tribracket(cfg.tribracket)
    for V in search_modules(X, cfg.modulus, limit=cfg.limit):
        x, y = V.tensors()
        _emit(cfg, format_tensor(x) + "  " + format_tensor(y), {"modulus": V.modulus, "x": x, "y": y})
    return 0


def cmd_tables(cfg: RunConfig) -> int:
    sets = cfg.sets or list(TABLE_SETS)
    bad = 0
    for s in sets:
        if s not in TABLE_SETS:
            raise InputError(f"unknown table set {s!r}; choose from {', '.join(TABLE_SETS)}")
        for cell in reproduce_table(s, jobs=cfg.jobs, atlas_path=cfg.atlas):
            bad += not cell.matched
            if cfg.fmt == "json":
                print(json.dumps(cell.to_json(), sort_keys=True))
                continue
            status = "ok  " if cell.matched else "FAIL"
            note = []
            if cell.variant not in (None, "as-is"):
                note.append(f"via {cell.variant}")
            if cell.flagged:
                note.append(f"printed as {cell.printed}")
            extra = f"  ({'; '.join(note)})" if note else ""
            diff = "" if cell.matched else f"  expected {cell.expected}"
            print(f"{status} {s:13s} {cell.name:6s} {cell.computed}{diff}{extra}")
    if cfg.fmt != "json":
        print(f"{'all cells match' if not bad else f'{bad} mismatching cell(s)'}")
    return 0 if not bad else 1


def cmd_moves(cfg: RunConfig) -> int:
    """Apply random R1/R2 moves and check the invariants never change."""
    name, d = _load_diagram(cfg)
    if cfg.module:
        V = _load_module(cfg)
        value = lambda dd: module_enhancement(V, dd).polynomial  # noqa: E731
    elif cfg.tribracket:
        X = _load_tribracket(cfg.tribracket)
        value = lambda dd: str(counting_invariant(X, dd))  # noqa: E731
    elif cfg.alexander:
        n, x, y = cfg.alexander
        value = lambda dd: str(alexander_counting(n, x, y, dd))  # noqa: E731
    else:
        raise InputError("moves needs --module, --tribracket or --alexander")
    rng = random.Random(cfg.seed)
    start = value(d)
    failures = 0
    for step in range(cfg.moves):
        d, desc = random_move(d, rng)
        got = value(d)
        ok = got == start
        failures += not ok
        _emit(cfg, f"{'ok  ' if ok else 'FAIL'} {step + 1:3d} {desc:28s} {d.n_crossings:3d} crossings  {got}",
              {"step": step + 1, "move": desc, "crossings": d.n_crossings, "value": got, "ok": ok})
    return 0 if not failures else 1


def cmd_list(cfg: RunConfig) -> int:
    atlas = load_atlas(cfg.atlas) if cfg.atlas else None
    comps = cfg.components
    if comps is not None and comps != "links":
        comps = int(comps)
    names = list_entries(cfg.max_crossings, comps, atlas=atlas)
    for n in names:
        print(n)
    return 0


def cmd_diagram(cfg: RunConfig) -> int:
    name, d = _load_diagram(cfg)
    if cfg.fmt == "json":
        print(json.dumps({"diagram": name} | d.to_json(), sort_keys=True))
    else:
        print(f"{name}: {d.n_crossings} crossings, {d.n_components} components, {d.n_regions} regions")
        for i, (roles, s) in enumerate(zip(d.roles, d.signs)):
            print(f"  crossing {i + 1} ({'+' if s > 0 else '-'}): [{roles[0]},{roles[1]},{roles[2]}] = {roles[3]}")
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "invariant": cmd_invariant,
    "search": cmd_search,
    "tables": cmd_tables,
    "moves": cmd_moves,
    "list": cmd_list,
    "diagram": cmd_diagram,
}


def _triple(text: str) -> tuple[int, int, int]:
    try:
        n, x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected N,x,y") from None
    return n, x, y


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--link", help="atlas name, or U1/U2/... for unlinks")
    common.add_argument("--pd", help="file holding a PD code")
    common.add_argument("--atlas", help="alternate atlas file (NAME: PD per line)")
    common.add_argument("--tribracket", help="tensor file or builtin name X2/X3/X4")
    common.add_argument("--module", help="module file or builtin name V/V1/V2/V3/four-element")
    common.add_argument("--alexander", type=_triple, help="Alexander tribracket N,x,y")
    common.add_argument("--modulus", type=int)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--limit", type=int)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="tribracket", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check tribracket / module axioms")
    sub.add_parser("invariant", parents=[common], help="counting invariant or module enhancement")
    p = sub.add_parser("search", parents=[common], help="enumerate tribrackets or modules")
    p.add_argument("--size", type=int, help="enumerate tribrackets on {1..N}")
    p = sub.add_parser("tables", parents=[common], help="recompute the published tables")
    p.add_argument("--set", dest="sets", action="append", default=[], help=", ".join(TABLE_SETS))
    p = sub.add_parser("moves", parents=[common], help="random R1/R2 invariance check")
    p.add_argument("--moves", type=int, default=20)
    p = sub.add_parser("list", parents=[common], help="atlas names")
    p.add_argument("--max-crossings", type=int)
    p.add_argument("--components", help="exact component count, or 'links'")
    sub.add_parser("diagram", parents=[common], help="regions and crossing roles")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        return COMMANDS[cfg.command](cfg)
    except (InputError, MalformedTensorError, PDError, KeyError, json.JSONDecodeError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
