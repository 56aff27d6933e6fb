"""Reidemeister moves checked exactly on beta-calculus arrays.

Small tangles are described directly by their crossings, each a triple
``(sign, over_label, under_label)``, plus the stitching instructions that
glue passages of the same strand.  Both sides of a move are evaluated and
compared with :func:`beta_eq`.

R3 is enumerated geometrically.  Three straight strands
``L1: y = 0``, ``L2: y = x`` and ``L3: y = 2 - x`` bound a triangle; the move
slides ``L1`` to ``y = 2`` across the ``L2``/``L3`` crossing.  Any total
height order of the three strands makes this a legal move; with the eight
orientations that is every sign pattern admitting R3.  The two cyclic
over/under patterns are not realizable in space and serve as a control.

R1 is not an exact symmetry of the arrays: a closed kink leaves a nonzero
entry.  Kink values are reported as computed facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable

from zbeta.algebra import RationalFn, render_expr
from zbeta.beta import BetaElement, beta_eq, beta_union, r_element

__all__ = [
    "Crossing",
    "SmallTangle",
    "MoveCheck",
    "r2_variants",
    "r3_variants",
    "r3_cyclic_controls",
    "r3_worked_instance",
    "r3_literal_labels",
    "kink_facts",
    "opposite_kinks",
    "reidemeister_report",
]

Crossing = tuple[int, int, int]  # (sign, over passage, under passage)


@dataclass(frozen=True)
class SmallTangle:
    crossings: tuple[Crossing, ...]
    stitches: tuple[tuple[int, int, int], ...]

    def beta(self) -> BetaElement:
        result = BetaElement.empty()
        for sign, o, u in self.crossings:
            result = beta_union(result, r_element(sign, o, u))
        for x, y, z in self.stitches:
            result = result.gm(x, y, z)
        return result

    def profile(self) -> dict[int, tuple[int, int]]:
        """Signed over and under passage counts per strand (a collapsed Z^G)."""
        owner = {}
        for x, y, z in self.stitches:
            owner.setdefault(x, z)
            owner[y] = owner[x]
        counts: dict[int, list[int]] = {}
        for sign, o, u in self.crossings:
            counts.setdefault(owner.get(o, o), [0, 0])[0] += sign
            counts.setdefault(owner.get(u, u), [0, 0])[1] += sign
        return {k: (a, b) for k, (a, b) in sorted(counts.items())}


@dataclass(frozen=True)
class MoveCheck:
    name: str
    lhs: BetaElement
    rhs: BetaElement
    passed: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{self.name}: {'PASS' if self.passed else 'FAIL'}"
        return f"{text} ({self.detail})" if self.detail else text


def _check(name: str, left: SmallTangle, right: SmallTangle, detail: str = "") -> MoveCheck:
    lhs, rhs = left.beta(), right.beta()
    return MoveCheck(name, lhs, rhs, beta_eq(lhs, rhs), detail)


def _bare_strands(labels: Iterable[int]) -> BetaElement:
    labels = tuple(labels)
    return BetaElement(1, labels, labels)


# -- R2 ------------------------------------------------------------------------


def r2_variants() -> list[MoveCheck]:
    """Strand 2 crosses over strand 1 and back; compare with two bare strands.

    Strand 1 has passages 1 then 3.  Strand 2 has passages 2 then 4 when it
    runs parallel to strand 1 and meets the crossings in the opposite order
    when antiparallel.  The two crossings of a bigon have opposite signs.
    """
    checks = []
    for sign, parallel in product((1, -1), (True, False)):
        first, second = (2, 4) if parallel else (4, 2)
        tangle = SmallTangle(
            ((sign, first, 1), (-sign, second, 3)),
            ((1, 3, 1), (2, 4, 2)),
        )
        lhs = tangle.beta()
        rhs = _bare_strands((1, 2))
        kind = "parallel" if parallel else "antiparallel"
        checks.append(
            MoveCheck(f"R2 {'+-' if sign > 0 else '-+'} {kind}", lhs, rhs, beta_eq(lhs, rhs))
        )
    return checks


# -- R3 ------------------------------------------------------------------------

# line k passes through base point p_k with direction v_k (for orientation +1)
_LINES = {
    1: ((0.0, 0.0), (1.0, 0.0)),
    2: ((0.0, 0.0), (1.0, 1.0)),
    3: ((2.0, 0.0), (-1.0, 1.0)),
}
_MOVED_L1 = ((0.0, 2.0), (1.0, 0.0))


def _intersect(l1, l2) -> tuple[float, float]:
    (px, py), (vx, vy) = l1
    (qx, qy), (wx, wy) = l2
    det = vx * (-wy) - vy * (-wx)
    s = ((qx - px) * (-wy) - (qy - py) * (-wx)) / det
    return (px + s * vx, py + s * vy)


def _r3_side(lines: dict, orient: dict[int, int], above) -> SmallTangle:
    """``above(i, j)`` says whether strand i passes over strand j."""
    points = {}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        points[(i, j)] = _intersect(lines[i], lines[j])
    # order each strand's two crossings along its orientation
    passage = {}
    for k, ((px, py), (vx, vy)) in lines.items():
        mine = [pair for pair in points if k in pair]
        mine.sort(key=lambda pr: orient[k] * ((points[pr][0] - px) * vx + (points[pr][1] - py) * vy))
        passage[(k, mine[0])] = k
        passage[(k, mine[1])] = k + 3
    crossings = []
    for (i, j) in sorted(points):
        over, under = (i, j) if above(i, j) else (j, i)
        o_dir = [orient[over] * c for c in lines[over][1]]
        u_dir = [orient[under] * c for c in lines[under][1]]
        cross = o_dir[0] * u_dir[1] - o_dir[1] * u_dir[0]
        sign = 1 if cross > 0 else -1
        crossings.append((sign, passage[(over, (i, j))], passage[(under, (i, j))]))
    return SmallTangle(tuple(crossings), ((1, 4, 1), (2, 5, 2), (3, 6, 3)))


def _r3_pair(orient: dict[int, int], above) -> tuple[SmallTangle, SmallTangle]:
    moved = dict(_LINES)
    moved[1] = _MOVED_L1
    return _r3_side(_LINES, orient, above), _r3_side(moved, orient, above)


def r3_variants() -> list[MoveCheck]:
    """Every orientation and every height order of the three strands."""
    checks = []
    for signs in product((1, -1), repeat=3):
        orient = dict(zip((1, 2, 3), signs))
        for order in permutations((1, 2, 3)):
            height = {k: h for h, k in enumerate(order)}
            left, right = _r3_pair(orient, lambda i, j: height[i] > height[j])
            pattern = " ".join(f"{'+' if s > 0 else '-'}" for s, _, _ in left.crossings)
            name = "R3 orient " + "".join("+" if s > 0 else "-" for s in signs)
            name += " heights " + ">".join(f"L{k}" for k in reversed(order))
            checks.append(_check(name, left, right, f"signs {pattern}"))
    return checks


def r3_cyclic_controls() -> list[MoveCheck]:
    """Cyclic over/under patterns (each strand over one neighbour, under the other)."""
    checks = []
    for signs in product((1, -1), repeat=3):
        orient = dict(zip((1, 2, 3), signs))
        for cycle in ((1, 2, 3), (1, 3, 2)):
            beats = {(cycle[0], cycle[1]), (cycle[1], cycle[2]), (cycle[2], cycle[0])}
            left, right = _r3_pair(orient, lambda i, j: (i, j) in beats)
            name = "R3 cyclic " + "".join("+" if s > 0 else "-" for s in signs)
            name += " " + ">".join(f"L{k}" for k in cycle) + f">L{cycle[0]}"
            checks.append(_check(name, left, right))
    return checks


_R3_STITCH = ((1, 4, 1), (2, 5, 2), (3, 6, 3))


def r3_worked_instance() -> MoveCheck:
    """The R3 computation with the labels arranged consistently.

    Left: R^-_{5,1} R^-_{6,2} R^+_{3,4}; right: R^+_{6,1} R^-_{2,4} R^-_{3,5};
    both stitched by gm(1,4->1), gm(2,5->2), gm(3,6->3).
    """
    left = SmallTangle(((-1, 5, 1), (-1, 6, 2), (1, 3, 4)), _R3_STITCH)
    right = SmallTangle(((1, 6, 1), (-1, 2, 4), (-1, 3, 5)), _R3_STITCH)
    lhs, rhs = left.beta(), right.beta()
    values = sorted(render_expr(v) for v in rhs.entries.values() if not v.is_zero())
    return MoveCheck("R3 worked instance", lhs, rhs, beta_eq(lhs, rhs), "entries " + ", ".join(values))


def r3_literal_labels() -> MoveCheck:
    """Same, with R^-_{1,5} in place of R^-_{5,1}; this labelling does not match."""
    left = SmallTangle(((-1, 1, 5), (-1, 6, 2), (1, 3, 4)), _R3_STITCH)
    right = SmallTangle(((1, 6, 1), (-1, 2, 4), (-1, 3, 5)), _R3_STITCH)
    return _check("R3 literal labels", left, right)


# -- R1 ------------------------------------------------------------------------


@dataclass(frozen=True)
class KinkFact:
    name: str
    element: BetaElement

    def line(self) -> str:
        (t,), (h,) = self.element.tails, self.element.heads
        entry = self.element[(t, h)]
        return f"{self.name}: omega = {render_expr(self.element.omega)}, entry = {render_expr(entry)}"


def kink_facts() -> list[KinkFact]:
    """Closed one-crossing kinks; over-first and under-first, both signs."""
    facts = []
    for sign in (1, -1):
        s = "+" if sign > 0 else "-"
        facts.append(KinkFact(f"R1 {s} kink, over first", r_element(sign, 1, 2).gm(1, 2, 1)))
        facts.append(
            KinkFact(f"R1 {s} kink, under first", r_element(sign, 2, 1).gm(1, 2, 1))
        )
    return facts


def opposite_kinks() -> BetaElement:
    """A positive kink followed by a negative kink on one strand."""
    e = beta_union(r_element(1, 1, 2), r_element(-1, 3, 4))
    return e.gm(1, 2, 1).gm(3, 4, 3).gm(1, 3, 1)


def _is_unit(f: RationalFn) -> bool:
    return f.is_polynomial() and f.num.is_monomial() and abs(dict(f.num.items()).popitem()[1]) == 1


def reidemeister_report() -> tuple[list[str], bool]:
    """Text lines for every check and whether all strict checks (R2, R3) passed."""
    lines = []
    ok = True
    for check in r2_variants() + r3_variants() + [r3_worked_instance()]:
        lines.append(check.line())
        ok = ok and check.passed
    controls = r3_cyclic_controls()
    differ = sum(not c.passed for c in controls)
    lines.append(f"R3 cyclic controls differ: {differ}/{len(controls)} {'PASS' if differ == len(controls) else 'FAIL'}")
    ok = ok and differ == len(controls)
    literal = r3_literal_labels()
    lines.append(
        f"INFO {literal.name}: {'equal' if literal.passed else 'not equal'} (informational)"
    )
    for fact in kink_facts():
        lines.append("INFO " + fact.line())
    both = opposite_kinks()
    zero_block = both.is_zero_matrix() and _is_unit(both.omega)
    lines.append(
        f"INFO R1 opposite kinks: omega = {render_expr(both.omega)}, "
        f"{'zero block' if both.is_zero_matrix() else 'nonzero block'}"
        f"{'' if zero_block else ' (omega not a unit)'}"
    )
    return lines, ok
