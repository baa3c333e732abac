"""Oriented link diagrams from PD codes: regions, crossing roles, R1/R2 moves.

PD crossings ``X(i,j,k,l)`` list arc labels counterclockwise starting from
the incoming under-strand (Knot Atlas convention). Slot 0 is the incoming
under-arc, slot 2 the outgoing under-arc; the over-strand occupies slots 1
and 3 and its direction is recovered from the rest of the diagram.

A *corner* ``(i, s)`` is the quadrant at crossing ``i`` between slot ``s``
and slot ``s + 1`` (counterclockwise). Regions are sets of corners.
"""
from __future__ import annotations

import json
import random
import re
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "PDCode",
    "Diagram",
    "PDError",
    "RoleConvention",
    "random_move",
    "ROLE_CONVENTION",
    "parse_pd",
    "compute_regions",
    "assign_roles",
    "diagram_from_pd",
    "add_kink",
    "remove_kink",
    "poke",
    "mirror",
    "reverse_components",
    "orientation_variants",
]


class PDError(ValueError):
    pass


class RoleConvention(Enum):
    """Which quadrant plays slot ``a`` in the crossing relation [a,b,c] = d.

    LEFT: ``a`` lies to the left of both strands, ``d`` to the right of both.
    BEHIND: ``a`` lies between the two incoming edges, ``d`` between the
    outgoing ones. In both, ``b`` is across the under-strand from ``a`` and
    ``c`` across the over-strand.
    """

    LEFT = "left"
    RIGHT = "right"
    BEHIND = "behind"
    FRONT = "front"


# pinned by tests/test_diagram.py::test_role_convention_is_pinned
ROLE_CONVENTION = RoleConvention.LEFT
SWAP_BC_AT_NEGATIVE = False


@dataclass(frozen=True)
class PDCode:
    """Crossing tuples plus a count of crossingless unknotted components."""

    crossings: tuple[tuple[int, int, int, int], ...]
    unknots: int = 0

    def __post_init__(self):
        if not self.crossings and self.unknots < 1:
            raise PDError("empty diagram; use U(k) for a crossingless unlink")
        if self.crossings and self.unknots:
            raise PDError("split unions of crossingless circles with other diagrams are not supported")
        counts: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise PDError(f"malformed crossing {x}: need 4 labels")
            for lab in x:
                counts[lab] = counts.get(lab, 0) + 1
        bad = sorted(lab for lab, k in counts.items() if k != 2)
        if bad:
            raise PDError(f"arc label(s) {bad} do not appear exactly twice")

    def __str__(self):
        if not self.crossings:
            return f"U({self.unknots})"
        return " ".join("X(%d,%d,%d,%d)" % x for x in self.crossings)

    @property
    def labels(self) -> list[int]:
        return sorted({lab for x in self.crossings for lab in x})


_X_RE = re.compile(r"X\s*[\(\[]([^\)\]]*)[\)\]]")
_U_RE = re.compile(r"^\s*U\s*[\(\[]\s*(\d+)\s*[\)\]]\s*$")


def parse_pd(text: str) -> PDCode:
    """Parse ``X(1,4,2,5) X(3,6,4,1) ...`` or ``U(k)``.

    Also accepts ``PD[X[...], ...]`` (KnotTheory style) and a JSON list of
    4-lists.
    """
    text = text.strip()
    m = _U_RE.match(text)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise PDError("U(k) needs k >= 1")
        return PDCode((), k)
    if text.startswith("[") and "X" not in text:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PDError(f"bad JSON PD code: {e}") from None
        return PDCode(tuple(tuple(int(v) for v in x) for x in data))
    body = text
    if body.startswith("PD"):
        body = body[2:].strip()[1:-1]
    crossings = []
    for m in _X_RE.finditer(body):
        parts = [p for p in re.split(r"[\s,]+", m.group(1).strip()) if p]
        try:
            labels = tuple(int(p) for p in parts)
        except ValueError:
            raise PDError(f"non-integer label in X({m.group(1)})") from None
        if len(labels) != 4:
            raise PDError(f"malformed crossing X({m.group(1)}): need 4 labels")
        crossings.append(labels)
    leftover = _X_RE.sub("", body).replace(",", " ").strip()
    if leftover:
        raise PDError(f"unrecognised PD text near {leftover[:20]!r}")
    if not crossings:
        raise PDError("no crossings found")
    return PDCode(tuple(crossings))


# ---------------------------------------------------------------------------
# orientation


def _occurrences(crossings) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for s, lab in enumerate(x):
            occ.setdefault(lab, []).append((i, s))
    return occ


def _derive_over_in(crossings) -> tuple[int, ...]:
    """Slot (1 or 3) where each over-strand enters.

    Under-slots fix the direction of their arcs; directions then propagate
    along arcs and through over-strands. Components that never pass under
    fall back to label succession.
    """
    occ = _occurrences(crossings)
    incoming: dict[tuple[int, int], bool] = {}
    queue: deque = deque()

    def mark(port, inc):
        prev = incoming.get(port)
        if prev is None:
            incoming[port] = inc
            queue.append(port)
        elif prev != inc:
            raise PDError(f"inconsistent orientation at crossing {port[0] + 1}")

    def drain():
        while queue:
            i, s = queue.popleft()
            inc = incoming[(i, s)]
            lab = crossings[i][s]
            pair = occ[lab]
            other = pair[1] if pair[0] == (i, s) else pair[0]
            mark(other, not inc)
            mark((i, (s + 2) % 4), not inc)

    for i in range(len(crossings)):
        mark((i, 0), True)
        mark((i, 2), False)
    drain()
    for i, x in enumerate(crossings):
        if (i, 1) in incoming:
            continue
        j, l = x[1], x[3]
        # KnotTheory positivity: over runs l -> j when j follows l
        if j == l + 1 or l - j > 1:
            mark((i, 3), True)
        else:
            mark((i, 1), True)
        drain()
    return tuple(1 if incoming[(i, 1)] else 3 for i in range(len(crossings)))


def _components(crossings, over_in) -> list[list[int]]:
    """Arc labels of each component in traversal order."""
    occ = _occurrences(crossings)
    head: dict[int, tuple[int, int]] = {}
    for lab, ports in occ.items():
        for i, s in ports:
            if s == 0 or s == over_in[i]:
                head[lab] = (i, s)
    seen = set()
    comps = []
    for start in sorted(occ):
        if start in seen:
            continue
        comp = []
        lab = start
        while lab not in seen:
            seen.add(lab)
            comp.append(lab)
            i, s = head[lab]
            lab = crossings[i][(s + 2) % 4]
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# diagram


@dataclass(frozen=True)
class Diagram:
    """Oriented diagram with faces and per-crossing region roles.

    ``roles[i] = (a, b, c, d)`` are region ids with the crossing relation
    ``[f(a), f(b), f(c)] = f(d)``.
    """

    pd: PDCode
    over_in: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    regions: tuple[tuple[tuple[int, int], ...], ...]
    region_arcs: tuple[tuple[int, ...], ...]
    roles: tuple[tuple[int, int, int, int], ...] = ()
    convention: tuple[RoleConvention, bool] | None = None

    @property
    def n_crossings(self) -> int:
        return len(self.pd.crossings)

    @property
    def n_regions(self) -> int:
        return len(self.regions)

    @property
    def n_components(self) -> int:
        return len(self.components) if self.pd.crossings else self.pd.unknots

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if o == 3 else -1 for o in self.over_in)

    def corner_region(self) -> dict[tuple[int, int], int]:
        return {c: r for r, face in enumerate(self.regions) for c in face}

    def arc_tail(self, label: int) -> tuple[int, int]:
        for i, x in enumerate(self.pd.crossings):
            for s in range(4):
                if x[s] == label and s in (2, 4 - self.over_in[i]):
                    return i, s
        raise PDError(f"no arc {label}")

    def arc_head(self, label: int) -> tuple[int, int]:
        for i, x in enumerate(self.pd.crossings):
            for s in range(4):
                if x[s] == label and s in (0, self.over_in[i]):
                    return i, s
        raise PDError(f"no arc {label}")

    def to_json(self) -> dict:
        return {
            "pd": [list(x) for x in self.pd.crossings],
            "unknots": self.pd.unknots,
            "signs": list(self.signs),
            "components": [list(c) for c in self.components],
            "regions": [[[i + 1, s] for i, s in face] for face in self.regions],
            "region_arcs": [list(a) for a in self.region_arcs],
            "roles": [list(r) for r in self.roles],
        }


def _trace_faces(crossings):
    occ = _occurrences(crossings)
    other = {}
    for ports in occ.values():
        p, q = ports
        other[p] = q
        other[q] = p
    seen = set()
    faces, arcs = [], []
    for i in range(len(crossings)):
        for s in range(4):
            if (i, s) in seen:
                continue
            face, face_arcs = [], []
            v, t = i, s
            while (v, t) not in seen:
                seen.add((v, t))
                face.append((v, t))
                out = (v, (t + 1) % 4)
                face_arcs.append(crossings[v][out[1]])
                v, t = other[out]
            faces.append(tuple(face))
            arcs.append(tuple(face_arcs))
    return tuple(faces), tuple(arcs)


def _connected(crossings) -> bool:
    if not crossings:
        return True
    occ = _occurrences(crossings)
    adj = {i: set() for i in range(len(crossings))}
    for (i, _), (j, _) in occ.values():
        adj[i].add(j)
        adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(crossings)


def compute_regions(pd: PDCode, over_in: Sequence[int] | None = None) -> Diagram:
    """Trace the faces of the diagram's planar complement."""
    if not pd.crossings:
        k = pd.unknots
        return Diagram(pd, (), (), tuple(() for _ in range(k + 1)), tuple(() for _ in range(k + 1)))
    crossings = pd.crossings
    if over_in is None:
        over_in = _derive_over_in(crossings)
    over_in = tuple(over_in)
    comps = tuple(tuple(c) for c in _components(crossings, over_in))
    if not _connected(crossings):
        raise PDError("split diagrams are not supported")
    faces, arcs = _trace_faces(crossings)
    if len(faces) != len(crossings) + 2:
        raise PDError(
            f"non-planar encoding: {len(faces)} faces for {len(crossings)} crossings (expected {len(crossings) + 2})"
        )
    return Diagram(pd, over_in, comps, faces, arcs)


def _role_corners(over_in: int, convention: RoleConvention, swap_negative: bool) -> tuple[int, int, int, int]:
    """Corner indices (a, b, c, d) at a crossing whose over-strand enters at ``over_in``."""
    positive = over_in == 3
    # corners of a crossing by side: (left of under?, left of over?)
    if positive:
        side = {(True, True): 2, (False, False): 0, (True, False): 3, (False, True): 1}
    else:
        side = {(True, True): 3, (False, False): 1, (True, False): 2, (False, True): 0}
    behind = 3 if positive else 0   # between the two incoming edges
    if convention is RoleConvention.LEFT:
        a = side[(True, True)]
    elif convention is RoleConvention.RIGHT:
        a = side[(False, False)]
    elif convention is RoleConvention.BEHIND:
        a = behind
    else:
        a = (behind + 2) % 4
    d = (a + 2) % 4
    # the quadrant across the under-strand from a
    a_key = next(k for k, v in side.items() if v == a)
    b = side[(not a_key[0], a_key[1])]
    c = side[(a_key[0], not a_key[1])]
    if swap_negative and not positive:
        b, c = c, b
    return a, b, c, d


def assign_roles(d: Diagram, convention: RoleConvention | None = None, swap_negative: bool | None = None) -> Diagram:
    """Fill the (a, b, c, d) region roles at every crossing."""
    convention = ROLE_CONVENTION if convention is None else convention
    swap_negative = SWAP_BC_AT_NEGATIVE if swap_negative is None else swap_negative
    where = d.corner_region()
    roles = []
    for i, o in enumerate(d.over_in):
        corners = _role_corners(o, convention, swap_negative)
        roles.append(tuple(where[(i, k)] for k in corners))
    return Diagram(d.pd, d.over_in, d.components, d.regions, d.region_arcs, tuple(roles), (convention, swap_negative))


def diagram_from_pd(pd: PDCode | str, **kw) -> Diagram:
    if isinstance(pd, str):
        pd = parse_pd(pd)
    return assign_roles(compute_regions(pd), **kw)


# ---------------------------------------------------------------------------
# rewriting
#
# Moves build a port table {(crossing, slot): label} with fresh labels,
# glue labels that denote the same arc, then relabel arcs 1..m along
# components so the output PD also reads correctly by label succession.


def _rebuild(crossings: list[list[int]], over_in: list[int], glue: Iterable[tuple[int, int]] = (), like: Diagram | None = None) -> Diagram:
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in glue:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    crossings = [[find(lab) for lab in x] for x in crossings]
    comps = _components(crossings, over_in)
    # keep component order stable: order by the first crossing touched
    relabel = {}
    nxt = 1
    for comp in comps:
        for lab in comp:
            relabel[lab] = nxt
            nxt += 1
    pd = PDCode(tuple(tuple(relabel[lab] for lab in x) for x in crossings))
    d = compute_regions(pd, over_in)
    if like is not None and like.convention is not None:
        return assign_roles(d, *like.convention)
    return assign_roles(d)


def _fresh(d: Diagram):
    start = max([0] + [lab for x in d.pd.crossings for lab in x]) + 1
    counter = iter(range(start, start + 10_000))
    return lambda: next(counter)


# (first passage under?, positive?) -> PD slots filled by (in, loop, out)
_KINKS = {
    # e1 under-in, loop from slot 2 back to over-in
    (True, False): ("e1", "l", "l", "e2"),
    (True, True): ("e1", "e2", "l", "l"),
    # e1 over-in, loop from over-out back to under-in
    (False, False): ("l", "e1", "e2", "l"),
    (False, True): ("l", "l", "e2", "e1"),
}


def add_kink(d: Diagram, arc: int | None = None, positive: bool = True, under_first: bool = True) -> Diagram:
    """Reidemeister I: insert a curl on ``arc``.

    The four (``positive``, ``under_first``) combinations are the four
    oriented R1 moves; the curl lies left of the arc for (True, True) and
    (False, False) and right of it otherwise.
    """
    crossings = [list(x) for x in d.pd.crossings]
    over_in = list(d.over_in)
    if not crossings:
        if d.pd.unknots != 1:
            raise PDError("kinks on crossingless unlinks need exactly one component")
        names = {"e1": 1, "e2": 1, "l": 2}
        pattern = _KINKS[(under_first, positive)]
        new = [names[p] for p in pattern]
        return _rebuild([new], [3 if positive else 1], like=d)
    if arc not in {lab for x in crossings for lab in x}:
        raise PDError(f"invalid arc id {arc}")
    fresh = _fresh(d)
    names = {"e1": fresh(), "e2": fresh(), "l": fresh()}
    ti, ts = d.arc_tail(arc)
    hi, hs = d.arc_head(arc)
    crossings[ti][ts] = names["e1"]
    crossings[hi][hs] = names["e2"]
    crossings.append([names[p] for p in _KINKS[(under_first, positive)]])
    over_in.append(3 if positive else 1)
    return _rebuild(crossings, over_in, like=d)


def remove_kink(d: Diagram, crossing: int) -> Diagram:
    """Inverse R1: delete ``crossing`` (0-based) if it is a curl."""
    x = d.pd.crossings[crossing]
    loop = None
    for s in range(4):
        if x[s] == x[(s + 1) % 4]:
            loop = s
    if loop is None:
        raise PDError(f"crossing {crossing} is not a kink")
    ends = [x[s] for s in range(4) if s not in (loop, (loop + 1) % 4)]
    rest = [list(y) for k, y in enumerate(d.pd.crossings) if k != crossing]
    over_in = [o for k, o in enumerate(d.over_in) if k != crossing]
    if not rest:
        conv, swap = d.convention or (None, None)
        return diagram_from_pd(PDCode((), 1), convention=conv, swap_negative=swap)
    return _rebuild(rest, over_in, glue=[(ends[0], ends[1])], like=d)


# counterclockwise order of the four directions at a poke crossing
_CCW = ("right", "up", "left", "down")


def _slot_tuple(labels: dict[str, int], under_in: str) -> list[int]:
    k = _CCW.index(under_in)
    return [labels[_CCW[(k + t) % 4]] for t in range(4)]


def _side_of(d: Diagram, arc: int, region: int) -> str | None:
    where = d.corner_region()
    ti, ts = d.arc_tail(arc)
    left = where[(ti, ts)]
    right = where[(ti, (ts - 1) % 4)]
    if left == region:
        return "left"
    if right == region:
        return "right"
    return None


def poke(d: Diagram, over_arc: int | None = None, under_arc: int | None = None, region: int | None = None) -> Diagram:
    """Reidemeister II: push ``over_arc`` across ``under_arc`` through a shared region.

    For a crossingless unknot the two arcs are the two halves of the circle
    and the finger is pushed through the inside.
    """
    # local picture: the over-arc runs along y=0 with the region above, the
    # under-arc along y=1 with the region below; a finger of the over-arc
    # rises at x=-1 (crossing P) and descends at x=+1 (crossing Q)
    crossings = [list(x) for x in d.pd.crossings]
    over_in = list(d.over_in)
    glue = []
    if not crossings:
        if d.pd.unknots != 1:
            raise PDError("pokes on crossingless unlinks need exactly one component")
        p_dir, q_dir = "+", "-"
        fresh_iter = iter(range(1, 100))
        fresh = lambda: next(fresh_iter)  # noqa: E731
    else:
        labels = {lab for x in crossings for lab in x}
        if over_arc not in labels or under_arc not in labels or over_arc == under_arc:
            raise PDError(f"invalid arc pair ({over_arc}, {under_arc})")
        candidates = [region] if region is not None else [
            r for r, arcs in enumerate(d.region_arcs) if over_arc in arcs and under_arc in arcs
        ]
        chosen = None
        for r in candidates:
            sp, sq = _side_of(d, over_arc, r), _side_of(d, under_arc, r)
            if sp and sq:
                chosen = (sp, sq)
                break
        if chosen is None:
            raise PDError(f"arcs {over_arc} and {under_arc} do not bound a common region")
        p_dir = "+" if chosen[0] == "left" else "-"
        q_dir = "+" if chosen[1] == "right" else "-"
        fresh = _fresh(d)
    p1, p2, p3, q1, q2, q3 = (fresh() for _ in range(6))
    if p_dir == "+":
        P = {"down": p1, "up": p2}
        Q = {"up": p2, "down": p3}
    else:
        Q = {"down": p1, "up": p2}
        P = {"up": p2, "down": p3}
    if q_dir == "+":
        P.update(left=q1, right=q2)
        Q.update(left=q2, right=q3)
        p_under_in, q_under_in = "left", "left"
    else:
        Q.update(right=q1, left=q2)
        P.update(right=q2, left=q3)
        p_under_in, q_under_in = "right", "right"
    # over direction at each new crossing
    p_over_from = "down" if p_dir == "+" else "up"
    q_over_from = "up" if p_dir == "+" else "down"
    new = []
    for labs, uin, ofrom in ((P, p_under_in, p_over_from), (Q, q_under_in, q_over_from)):
        tup = _slot_tuple(labs, uin)
        slot_of_over_in = (_CCW.index(ofrom) - _CCW.index(uin)) % 4
        new.append((tup, slot_of_over_in))
    if crossings:
        pti, pts = d.arc_tail(over_arc)
        phi, phs = d.arc_head(over_arc)
        qti, qts = d.arc_tail(under_arc)
        qhi, qhs = d.arc_head(under_arc)
        crossings[pti][pts] = p1
        crossings[phi][phs] = p3
        crossings[qti][qts] = q1
        crossings[qhi][qhs] = q3
    else:
        # the circle runs counterclockwise; its lower half is the over-arc
        glue = [(p3, q1), (q3, p1)]
    for tup, o in new:
        crossings.append(tup)
        over_in.append(o)
    return _rebuild(crossings, over_in, glue=glue, like=d)


# ---------------------------------------------------------------------------
# mirror / orientation variants


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing."""
    if not d.pd.crossings:
        return d
    crossings, over_in = [], []
    for x, o in zip(d.pd.crossings, d.over_in):
        k = o  # old over-in slot becomes the new slot 0
        crossings.append([x[(k + t) % 4] for t in range(4)])
        # old under-in (slot 0) sits at new slot (-k) % 4
        over_in.append((-k) % 4)
    return _rebuild(crossings, over_in, like=d)


def reverse_components(d: Diagram, which: Iterable[int]) -> Diagram:
    """Reverse the orientation of the listed components (0-based)."""
    which = set(which)
    if not d.pd.crossings:
        return d
    comp_of = {lab: k for k, comp in enumerate(d.components) for lab in comp}
    crossings, over_in = [], []
    for x, o in zip(d.pd.crossings, d.over_in):
        x = list(x)
        under_rev = comp_of[x[0]] in which
        over_rev = comp_of[x[1]] in which
        if under_rev:
            x = x[2:] + x[:2]
            o = 4 - o
        if over_rev:
            o = 4 - o
        crossings.append(x)
        over_in.append(o)
    return _rebuild(crossings, over_in, like=d)


def orientation_variants(d: Diagram) -> list[tuple[str, Diagram]]:
    """The diagram, its mirror, and all component reversals of each.

    Reversing every component at once is included, so each unordered
    orientation class appears (possibly more than once).
    """
    from itertools import combinations

    out = []
    k = d.n_components if d.pd.crossings else 0
    subsets = [()]
    for r in range(1, k + 1):
        subsets.extend(combinations(range(k), r))
    for mname, base in (("", d), ("mirror", mirror(d))):
        for sub in subsets:
            tag = ",".join(filter(None, [mname, ("rev" + "".join(str(i) for i in sub)) if sub else ""]))
            out.append((tag or "as-is", reverse_components(base, sub) if sub else base))
    return out


def random_move(d: Diagram, rng: random.Random) -> tuple[Diagram, str]:
    """One random R1 or R2 move; returns (new diagram, description)."""
    if not d.pd.crossings:
        if rng.random() < 0.5:
            pos, under = rng.random() < 0.5, rng.random() < 0.5
            return add_kink(d, None, pos, under), f"R1 {'+' if pos else '-'}{'u' if under else 'o'}"
        return poke(d), "R2 unknot"
    if rng.random() < 0.5:
        arc = rng.choice(d.pd.labels)
        pos, under = rng.random() < 0.5, rng.random() < 0.5
        return add_kink(d, arc, pos, under), f"R1 arc {arc} {'+' if pos else '-'}{'u' if under else 'o'}"
    regions = [r for r in range(d.n_regions) if len(set(d.region_arcs[r])) >= 2]
    if not regions:
        arc = rng.choice(d.pd.labels)
        return add_kink(d, arc, True, True), f"R1 arc {arc} +u"
    r = rng.choice(regions)
    p, q = rng.sample(sorted(set(d.region_arcs[r])), 2)
    return poke(d, p, q, region=r), f"R2 arcs {p}/{q} region {r}"
