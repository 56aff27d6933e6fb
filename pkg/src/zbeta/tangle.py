"""Planar diagram codes and the two strand-collecting invariants.

A PD code lists crossings ``X[a,b,c,d]``: ``a`` is the incoming under-edge and
``b, c, d`` follow counterclockwise, so the under strand runs ``a -> c`` and
the over strand joins ``b`` and ``d``.  Which way the over strand runs is read
off the component cycles, not from label arithmetic, so any consistent edge
numbering is accepted.

Every passage of a strand through a crossing is named by its incoming edge.
A crossing whose over strand enters on edge ``o`` and whose under strand
enters on edge ``u`` contributes ``r_element(sign, o, u)``; the passages of a
component are then stitched together in traversal order.
"""

from __future__ import annotations

import re
from itertools import product
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from zbeta.beta import BetaElement, beta_union, r_element
from zbeta.errors import OrientationError, ParseError, ValidationError

__all__ = [
    "PDCode",
    "CrossingSite",
    "StitchPlan",
    "LinkingProfile",
    "parse_pd",
    "classify_crossings",
    "stitch_plan",
    "z_beta",
    "z_g",
    "format_pd",
    "pd_from_crossings",
    "crossing_union",
    "mirror",
    "faces",
    "face_edges",
    "is_planar",
    "r2_insert",
    "read_table",
    "crossing_number",
]

UNKNOT_LABEL = 1


@dataclass(frozen=True)
class CrossingSite:
    sign: int
    over_in: int
    under_in: int
    over_out: int = 0
    under_out: int = 0


@dataclass(frozen=True)
class PDCode:
    """A validated PD code with its oriented components.

    ``components`` holds each component's edges in traversal order, starting
    from the component's least edge label.  The empty code is the unknot.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    components: tuple[tuple[int, ...], ...] = field(compare=False)
    successor: dict = field(compare=False, repr=False)
    over_forward: tuple[bool, ...] = field(compare=False, repr=False)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        return sorted(self.successor)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def component_of(self, edge: int) -> int:
        for i, comp in enumerate(self.components):
            if edge in comp:
                return i
        raise KeyError(edge)

    def __str__(self) -> str:
        return format_pd(self.crossings)


def format_pd(crossings: Iterable[Sequence[int]]) -> str:
    return " ".join("X[" + ",".join(str(e) for e in x) + "]" for x in crossings)


_CROSSING = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str) -> PDCode:
    """Parse ``X[a,b,c,d]`` crossings separated by whitespace or ``;``."""
    crossings = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and (text[pos].isspace() or text[pos] == ";"):
            pos += 1
        if pos >= n:
            break
        m = _CROSSING.match(text, pos)
        if not m:
            raise ParseError("expected X[a,b,c,d]", text, pos)
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    return pd_from_crossings(crossings)


def pd_from_crossings(crossings: Iterable[Sequence[int]]) -> PDCode:
    crossings = tuple(tuple(int(e) for e in x) for x in crossings)
    counts: dict[int, int] = {}
    for x in crossings:
        if len(x) != 4:
            raise ValidationError(f"crossing {x} does not have four edges")
        for e in x:
            if e <= 0:
                raise ValidationError(f"edge label {e} is not positive")
            counts[e] = counts.get(e, 0) + 1
    for e, k in sorted(counts.items()):
        if k != 2:
            raise ValidationError(f"edge {e} appears {k} time(s); every edge must appear exactly twice")
    if not crossings:
        return PDCode((), ((),), {}, ())
    forward = _orient(crossings)
    successor = {}
    for (a, b, c, d), fwd in zip(crossings, forward):
        successor[a] = c
        if fwd:
            successor[d] = b
        else:
            successor[b] = d
    if sorted(successor) != sorted(counts) or sorted(successor.values()) != sorted(counts):
        raise OrientationError("edge successions do not form disjoint cycles")
    components = []
    seen: set[int] = set()
    for start in sorted(successor):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        e = successor[start]
        while e != start:
            cycle.append(e)
            seen.add(e)
            e = successor[e]
        components.append(tuple(cycle))
    return PDCode(crossings, tuple(components), successor, tuple(forward))


def _orient(crossings: tuple) -> list[bool]:
    """Decide, per crossing, whether the over strand runs d -> b (True) or b -> d.

    Each edge must be entered at exactly one slot and left at exactly one
    slot.  Under slots are fixed (``a`` in, ``c`` out); over directions are
    propagated from them.  Crossings left open (over-only components) fall
    back to label succession and propagation resumes.
    """
    n = len(crossings)
    slots: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for pos, e in enumerate(x):
            slots.setdefault(e, []).append((i, pos))

    forward: list[bool | None] = [None] * n
    # role of each (crossing, position): +1 entering, -1 leaving, 0 unknown
    role: dict[tuple[int, int], int] = {}
    for i in range(n):
        role[(i, 0)] = 1
        role[(i, 2)] = -1
    for i in range(n):
        role.setdefault((i, 1), 0)
        role.setdefault((i, 3), 0)

    def set_forward(i: int, fwd: bool, queue: list) -> None:
        if forward[i] is not None:
            if forward[i] != fwd:
                raise OrientationError(f"crossing {format_pd([crossings[i]])} gets both over directions")
            return
        forward[i] = fwd
        role[(i, 3)] = 1 if fwd else -1
        role[(i, 1)] = -1 if fwd else 1
        queue.extend([(i, 1), (i, 3)])

    def propagate(queue: list) -> None:
        while queue:
            i, pos = queue.pop()
            e = crossings[i][pos]
            mine = role[(i, pos)]
            (j, q), = [s for s in _other_slots(slots[e], i, pos)]
            want = -mine
            have = role[(j, q)]
            if have == 0:
                if q == 1:
                    set_forward(j, want == -1, queue)
                else:
                    set_forward(j, want == 1, queue)
            elif have != want:
                raise OrientationError(f"edge {e} is entered or left twice")

    queue = [(i, p) for i in range(n) for p in (0, 2)]
    propagate(queue)
    while None in forward:
        i = forward.index(None)
        a, b, c, d = crossings[i]
        set_forward(i, _succession_guess(b, d, crossings), queue)
        propagate(queue)
    return [bool(f) for f in forward]


def _other_slots(slot_list, i, pos):
    found = list(slot_list)
    found.remove((i, pos))
    return found


def _succession_guess(b: int, d: int, crossings) -> bool:
    # over strand with no under-crossing anchor: assume labels increase d -> b
    top = max(max(x) for x in crossings)
    return b == d + 1 or (d == top and b < d)


def classify_crossings(pd: PDCode) -> list[CrossingSite]:
    """Sign and incoming edges of each crossing.

    The under strand runs a -> c.  An over strand running d -> b crosses it
    from right to left, which the right-hand rule makes positive.
    """
    sites = []
    for (a, b, c, d), fwd in zip(pd.crossings, pd.over_forward):
        if fwd:
            sites.append(CrossingSite(+1, d, a, b, c))
        else:
            sites.append(CrossingSite(-1, b, a, d, c))
    return sites


@dataclass(frozen=True)
class StitchPlan:
    """``gm`` instructions ``(x, y, z)`` grouped by component."""

    groups: tuple[tuple[tuple[int, int, int], ...], ...]
    survivors: tuple[int, ...]

    @property
    def instructions(self) -> list[tuple[int, int, int]]:
        return [ins for g in self.groups for ins in g]

    def __len__(self) -> int:
        return sum(len(g) for g in self.groups)


def stitch_plan(pd: PDCode, basepoints: Iterable[int] | None = None) -> StitchPlan:
    """Stitch each component's passages in traversal order from its basepoint.

    ``basepoints`` gives one edge per component (in component order, or any
    order as long as each component gets exactly one); the default is the
    least edge of each component.
    """
    if pd.n_crossings == 0:
        return StitchPlan(((),), (UNKNOT_LABEL,))
    starts = [comp[0] for comp in pd.components]
    if basepoints is not None:
        chosen = list(basepoints)
        by_comp: dict[int, int] = {}
        for e in chosen:
            if e not in pd.successor:
                raise ValidationError(f"basepoint {e} is not an edge of the diagram")
            k = pd.component_of(e)
            if k in by_comp:
                raise ValidationError(f"two basepoints on component {k}")
            by_comp[k] = e
        for k, e in by_comp.items():
            starts[k] = e
    groups = []
    for start in starts:
        order = [start]
        e = pd.successor[start]
        while e != start:
            order.append(e)
            e = pd.successor[e]
        groups.append(tuple((start, e, start) for e in order[1:]))
    return StitchPlan(tuple(groups), tuple(starts))


def crossing_union(pd: PDCode) -> BetaElement:
    """Disjoint union of one crossing array per crossing, before any stitching."""
    if pd.n_crossings == 0:
        return BetaElement(1, (UNKNOT_LABEL,), (UNKNOT_LABEL,))
    result = BetaElement.empty()
    for site in classify_crossings(pd):
        result = beta_union(result, r_element(site.sign, site.over_in, site.under_in))
    return result


def z_beta(pd: PDCode, plan: StitchPlan | None = None, stop_after: int | None = None) -> BetaElement:
    """Glue the crossing arrays along the plan (or its first ``stop_after`` steps)."""
    if plan is None:
        plan = stitch_plan(pd)
    result = crossing_union(pd)
    steps = plan.instructions
    if stop_after is not None:
        if stop_after < 0:
            raise ValueError("stop_after must be non-negative")
        steps = steps[:stop_after]
    for x, y, z in steps:
        result = result.gm(x, y, z)
    return result


@dataclass(frozen=True)
class LinkingProfile:
    """Per component: signed over-passage count and signed under-passage count."""

    labels: tuple[int, ...]
    counts: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return " ".join(f"({a},{b})" for a, b in self.counts)


def z_g(pd: PDCode) -> LinkingProfile:
    if pd.n_crossings == 0:
        return LinkingProfile((UNKNOT_LABEL,), ((0, 0),))
    over = [0] * pd.n_components
    under = [0] * pd.n_components
    comp_of = {e: k for k, comp in enumerate(pd.components) for e in comp}
    for site in classify_crossings(pd):
        over[comp_of[site.over_in]] += site.sign
        under[comp_of[site.under_in]] += site.sign
    return LinkingProfile(tuple(c[0] for c in pd.components), tuple(zip(over, under)))


# -- diagram surgery -----------------------------------------------------------


def mirror(pd: PDCode) -> PDCode:
    """Change every crossing; the over strand becomes the under strand."""
    flipped = []
    for (a, b, c, d), fwd in zip(pd.crossings, pd.over_forward):
        flipped.append((d, a, b, c) if fwd else (b, c, d, a))
    return pd_from_crossings(flipped)


def _partners(crossings) -> dict[tuple[int, int], tuple[int, int]]:
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for pos, e in enumerate(x):
            where.setdefault(e, []).append((i, pos))
    partner = {}
    for first, second in where.values():
        partner[first], partner[second] = second, first
    return partner


def faces(crossings: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Faces of the diagram as cycles of (crossing, slot) corners.

    Leave a crossing along the edge in a slot, arrive at the edge's other
    slot, and turn to the previous slot in counterclockwise order.
    """
    partner = _partners(crossings)
    seen: set = set()
    result = []
    for start in sorted(partner):
        if start in seen:
            continue
        cycle = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            cycle.append(dart)
            j, q = partner[dart]
            dart = (j, (q - 1) % 4)
        result.append(cycle)
    return result


def _connected_pieces(crossings) -> int:
    parent = list(range(len(crossings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    first: dict[int, int] = {}
    for i, x in enumerate(crossings):
        for e in x:
            if e in first:
                parent[find(i)] = find(first[e])
            else:
                first[e] = i
    return len({find(i) for i in range(len(crossings))})


def is_planar(pd: PDCode) -> bool:
    """Euler's formula: k connected pieces with n crossings have n + 1 + k faces."""
    if pd.n_crossings == 0:
        return True
    pieces = _connected_pieces(pd.crossings)
    return len(faces(pd.crossings)) == pd.n_crossings + 1 + pieces


def face_edges(pd: PDCode) -> list[list[int]]:
    return [[pd.crossings[i][p] for i, p in face] for face in faces(pd.crossings)]


def _enters(pd: PDCode, i: int, pos: int) -> bool:
    if pos in (0, 2):
        return pos == 0
    return (pos == 3) == pd.over_forward[i]


def r2_insert(pd: PDCode, over: int, under: int) -> PDCode:
    """Push edge ``over`` across edge ``under`` through a face they share.

    Both edges are cut into three pieces and two crossings of opposite sign
    are added.  Of the possible slot arrangements for the new crossings,
    the one that keeps the diagram planar with a new bigon face is returned.
    """
    if over == under:
        raise ValidationError("an R2 move needs two different edges")
    if not any(over in f and under in f for f in face_edges(pd)):
        raise ValidationError(f"edges {over} and {under} do not share a face")
    top = max(pd.edges)
    o1, o2, u1, u2 = top + 1, top + 2, top + 3, top + 4
    # each edge keeps its label where it leaves a crossing; its far end is renamed
    base = []
    for i, x in enumerate(pd.crossings):
        x = list(x)
        for pos, e in enumerate(x):
            if _enters(pd, i, pos):
                if e == over:
                    x[pos] = o2
                elif e == under:
                    x[pos] = u2
        base.append(tuple(x))

    # along ``under``: under -> u1 -> u2; along ``over``: over -> o1 -> o2
    for same_order in (True, False):
        o_pieces = [(over, o1), (o1, o2)] if same_order else [(o1, o2), (over, o1)]
        for flips in product((False, True), repeat=2):
            new = []
            for (u_in, u_out), (o_in, o_out), flip in zip(((under, u1), (u1, u2)), o_pieces, flips):
                new.append((u_in, o_out, u_out, o_in) if flip else (u_in, o_in, u_out, o_out))
            try:
                cand = pd_from_crossings(base + new)
            except (ValidationError, OrientationError):
                continue
            if not is_planar(cand) or cand.n_components != pd.n_components:
                continue
            signs = [s.sign for s in classify_crossings(cand)[-2:]]
            if signs[0] + signs[1] != 0:
                continue
            if not any(sorted(f) == sorted([o1, u1]) for f in face_edges(cand)):
                continue
            return cand
    raise ValidationError(f"no planar R2 move of edge {over} across edge {under}")


# -- knot table ----------------------------------------------------------------


TABLE_ENV = "ZBETA_TABLE"


def read_table(path=None) -> dict[str, str]:
    """Name to PD string, from ``path``, ``$ZBETA_TABLE`` or the shipped table."""
    import os
    from importlib import resources

    path = path or os.environ.get(TABLE_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = resources.files("zbeta").joinpath("data/knots.tsv").read_text(encoding="utf-8")
    table = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, pd = line.partition("\t")
        if not sep:
            raise ValidationError(f"table line {n}: expected name<TAB>pd")
        table[name.strip()] = pd.strip()
    return table


def crossing_number(name: str) -> int | None:
    m = re.fullmatch(r"(\d+)_\d+", name)
    return int(m.group(1)) if m else None
