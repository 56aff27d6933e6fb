"""Labelled-register computers and an executable list of their axioms.

An *instance* bundles an element type with the register operations: ``m``
(multiply two registers into one), ``e`` (insert a unit register), ``d``
(delete a register), ``rho`` (rename) and ``union``.  The same axiom
harness runs against every instance:

* :class:`IntMatrixInstance` -- square integer matrices, multiplication adds
  the two rows and the two columns;
* :class:`BetaTailInstance` / :class:`BetaHeadInstance` -- beta-calculus with
  ``tm`` or ``hm`` as the multiplication, the other side held fixed;
* :class:`BetaGmInstance` -- beta-calculus with ``gm`` and registers that are
  simultaneously a tail and a head;
* :class:`BetaCalculus` -- the bicrossed structure itself, which adds the
  ``sw`` relations on top of the tail and head axioms.

Failures are part of the report, never exceptions.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Protocol, Sequence

import numpy as np

from zbeta.algebra import LaurentPoly, RationalFn, strand
from zbeta.beta import BetaElement, beta_eq, beta_union, generic_element
from zbeta.errors import LabelError, SingularSwap, ZBetaError

__all__ = [
    "IntMatrixElement",
    "IntMatrixInstance",
    "mat_m",
    "mat_union",
    "split_by_deletion",
    "deletion_union_fails",
    "BetaCalculus",
    "BetaTailInstance",
    "BetaHeadInstance",
    "BetaGmInstance",
    "BrokenTailBeta",
    "AxiomResult",
    "AxiomReport",
    "axiom_suite",
    "DEFAULT_SEED",
    "beta_symbolic_suite",
    "gm_deletion_report",
    "GM_DELETION_AXIOMS",
    "random_beta",
    "monoid_axioms",
    "swap_axioms",
]

DEFAULT_SEED = 20130222

# Register names used by the axioms; W and W2 are bystanders that make sure
# operations leave unrelated registers alone.
X, Y, Z, U, V, S, W, W2 = 1, 2, 3, 4, 5, 6, 7, 8


class MetaMonoid(Protocol):
    name: str

    def m(self, p, x, y, z): ...

    def e(self, p, x): ...

    def d(self, p, x): ...

    def rho(self, p, x, y): ...

    def union(self, p, q): ...

    def equal(self, p, q) -> bool: ...

    def render(self, p) -> str: ...

    def random(self, labels: Sequence[int], rng: random.Random): ...


# -- integer matrices --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IntMatrixElement:
    """Square integer matrix with rows and columns both labelled by ``labels``."""

    labels: tuple[int, ...]
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise LabelError(f"duplicate labels {self.labels}")
        k = len(self.labels)
        if self.entries.shape != (k, k):
            raise ValueError(f"need a {k}x{k} matrix, got shape {self.entries.shape}")

    @classmethod
    def from_rows(cls, labels: Iterable[int], rows) -> "IntMatrixElement":
        labels = tuple(labels)
        arr = np.array(rows, dtype=object).reshape(len(labels), len(labels))
        return cls(labels, arr)

    @classmethod
    def zero(cls, labels: Iterable[int]) -> "IntMatrixElement":
        labels = tuple(labels)
        return cls(labels, np.zeros((len(labels), len(labels)), dtype=object))

    def as_dict(self) -> dict:
        return {
            (a, b): self.entries[i, j]
            for i, a in enumerate(self.labels)
            for j, b in enumerate(self.labels)
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrixElement):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self.as_dict() == other.as_dict()

    __hash__ = None

    def __str__(self) -> str:
        rows = "; ".join(
            f"{a}: " + " ".join(str(self.entries[i, j]) for j in range(len(self.labels)))
            for i, a in enumerate(self.labels)
        )
        return f"[{' '.join(map(str, self.labels))} | {rows}]"


def mat_m(p: IntMatrixElement, x: int, y: int, z: int) -> IntMatrixElement:
    """Add rows x, y and columns x, y into a single row and column z."""
    if x == y:
        raise LabelError(f"m needs distinct labels, got {x} twice")
    for lab in (x, y):
        if lab not in p.labels:
            raise LabelError(f"no register {lab}")
    if z in p.labels and z not in (x, y):
        raise LabelError(f"register {z} already in use")
    ix, iy = p.labels.index(x), p.labels.index(y)
    a = p.entries.copy()
    a[ix, :] = a[ix, :] + a[iy, :]
    a[:, ix] = a[:, ix] + a[:, iy]
    a = np.delete(np.delete(a, iy, axis=0), iy, axis=1)
    labels = tuple(z if lab == x else lab for lab in p.labels if lab != y)
    return IntMatrixElement(labels, a)


def mat_union(p: IntMatrixElement, q: IntMatrixElement) -> IntMatrixElement:
    """Block-diagonal union; the off-diagonal blocks are zero."""
    common = set(p.labels) & set(q.labels)
    if common:
        raise LabelError(f"union of overlapping labels {sorted(common)}")
    k, l = len(p.labels), len(q.labels)
    a = np.zeros((k + l, k + l), dtype=object)
    a[:k, :k] = p.entries
    a[k:, k:] = q.entries
    return IntMatrixElement(p.labels + q.labels, a)


class IntMatrixInstance:
    name = "int-matrix"

    def __init__(self, low: int = -9, high: int = 9):
        self.low, self.high = low, high

    def m(self, p, x, y, z):
        return mat_m(p, x, y, z)

    def e(self, p, x):
        if x in p.labels:
            raise LabelError(f"register {x} already present")
        return mat_union(p, IntMatrixElement.zero((x,)))

    def d(self, p, x):
        if x not in p.labels:
            raise LabelError(f"no register {x}")
        i = p.labels.index(x)
        a = np.delete(np.delete(p.entries, i, axis=0), i, axis=1)
        return IntMatrixElement(tuple(lab for lab in p.labels if lab != x), a)

    def rho(self, p, x, y):
        if x not in p.labels:
            raise LabelError(f"no register {x}")
        if y in p.labels and y != x:
            raise LabelError(f"register {y} already present")
        return IntMatrixElement(tuple(y if lab == x else lab for lab in p.labels), p.entries.copy())

    def union(self, p, q):
        return mat_union(p, q)

    def equal(self, p, q) -> bool:
        return p == q

    def render(self, p) -> str:
        return str(p)

    def random(self, labels, rng):
        k = len(labels)
        rows = [[rng.randint(self.low, self.high) for _ in range(k)] for _ in range(k)]
        return IntMatrixElement.from_rows(labels, rows)


def split_by_deletion(p: IntMatrixElement, x: int, y: int) -> IntMatrixElement:
    """``d_y P`` union ``d_x P``: keeps the diagonal blocks, loses the coupling."""
    inst = IntMatrixInstance()
    return mat_union(inst.d(p, y), inst.d(p, x))


def deletion_union_fails(p: IntMatrixElement, x: int, y: int) -> bool:
    """True when ``P`` can not be rebuilt from its two one-register deletions."""
    return split_by_deletion(p, x, y) != p


# -- beta calculus ---------------------------------------------------------------


def _random_poly(tails: Sequence[int], rng: random.Random, terms: int = 3) -> RationalFn:
    if not tails or rng.random() < 0.3:
        return RationalFn(LaurentPoly.const(rng.randint(-2, 2)))
    p = LaurentPoly.const(0)
    for _ in range(terms):
        t = rng.choice(tails)
        p = p + LaurentPoly.monomial(((strand(t), rng.randint(-2, 2)),), rng.randint(-3, 3))
    return RationalFn(p)


def random_beta(tails: Sequence[int], heads: Sequence[int], rng: random.Random) -> BetaElement:
    """Random element with small Laurent-polynomial entries in its own strand variables."""
    entries = {(t, h): _random_poly(tails, rng) for t in tails for h in heads}
    omega = _random_poly(tails, rng)
    if omega.is_zero():
        omega = RationalFn(1)
    return BetaElement(omega, tails, heads, entries)


class BetaCalculus:
    """Beta-calculus as a bicrossed structure: tails, heads and the swap."""

    name = "beta"
    symbolic = True

    def tm(self, p, x, y, z):
        return p.tm(x, y, z)

    def hm(self, p, x, y, z):
        return p.hm(x, y, z)

    def sw(self, p, x, y):
        return p.sw(x, y)

    def te(self, p, x):
        return p.te(x)

    def he(self, p, x):
        return p.he(x)

    def td(self, p, x):
        return p.td(x)

    def hd(self, p, x):
        return p.hd(x)

    def trho(self, p, x, y):
        return p.relabel("tail", x, y)

    def hrho(self, p, x, y):
        return p.relabel("head", x, y)

    def union(self, p, q):
        return beta_union(p, q)

    def equal(self, p, q) -> bool:
        return beta_eq(p, q)

    def render(self, p) -> str:
        return json.dumps(p.to_json(), sort_keys=True)

    def generic(self, tails, heads, rng=None):
        return generic_element(tails, heads)

    def random(self, tails, heads, rng):
        return random_beta(tails, heads, rng)


class BrokenTailBeta(BetaCalculus):
    """Deliberately wrong: ``tm`` keeps row x and discards row y.

    Still associative, but incompatible with ``sw``.
    """

    name = "beta-broken-tm"

    def tm(self, p, x, y, z):
        return p.delete("tail", y).relabel("tail", x, z) if x != z else p.delete("tail", y)


class _BetaSide:
    """A meta-monoid view of beta-calculus along one side (tails or heads)."""

    def __init__(self, calc: BetaCalculus | None = None, fixed: Sequence[int] = (W, W2)):
        self.calc = calc or BetaCalculus()
        self.fixed = tuple(fixed)

    def union(self, p, q):
        return self.calc.union(p, q)

    def equal(self, p, q) -> bool:
        return self.calc.equal(p, q)

    def render(self, p) -> str:
        return self.calc.render(p)


class BetaTailInstance(_BetaSide):
    """Registers are tails; the heads stay fixed."""

    name = "beta-tails"

    def m(self, p, x, y, z):
        return self.calc.tm(p, x, y, z)

    def e(self, p, x):
        return self.calc.te(p, x)

    def d(self, p, x):
        return self.calc.td(p, x)

    def rho(self, p, x, y):
        return self.calc.trho(p, x, y)

    def random(self, labels, rng):
        return self.calc.random(labels, self.fixed, rng)

    def generic(self, labels):
        return self.calc.generic(labels, self.fixed)

    def random_second(self, labels, rng):
        return random_beta(labels, (), rng)


class BetaHeadInstance(_BetaSide):
    """Registers are heads; the tails stay fixed."""

    name = "beta-heads"

    def m(self, p, x, y, z):
        return self.calc.hm(p, x, y, z)

    def e(self, p, x):
        return self.calc.he(p, x)

    def d(self, p, x):
        return self.calc.hd(p, x)

    def rho(self, p, x, y):
        return self.calc.hrho(p, x, y)

    def random(self, labels, rng):
        return self.calc.random(self.fixed, labels, rng)

    def generic(self, labels):
        return self.calc.generic(self.fixed, labels)

    def random_second(self, labels, rng):
        return random_beta((), labels, rng)


class BetaGmInstance(_BetaSide):
    """Registers are strands, each a tail and a head; multiplication is ``gm``."""

    name = "beta-gm"

    def m(self, p, x, y, z):
        return p.gm(x, y, z)

    def e(self, p, x):
        return p.te(x).he(x)

    def d(self, p, x):
        return p.td(x).hd(x)

    def rho(self, p, x, y):
        return p.relabel("tail", x, y).relabel("head", x, y)

    def random(self, labels, rng):
        return self.calc.random(labels, labels, rng)

    def generic(self, labels):
        return self.calc.generic(labels, labels)

    def random_second(self, labels, rng):
        return random_beta(labels, labels, rng)


# -- the axioms ------------------------------------------------------------------


@dataclass(frozen=True)
class Axiom:
    name: str
    group: str
    labels: tuple  # register labels of the input (tails, heads) for bicrossed axioms
    lhs: Callable
    rhs: Callable
    second: tuple | None = None  # labels of a second input, for union axioms


def monoid_axioms() -> list[Axiom]:
    """Monoid-theory and set-manipulation axioms, in the operations m, e, d, rho, union."""
    A = Axiom
    return [
        A("left identity", "monoid", (Y, W), lambda I, p: I.m(I.e(p, X), X, Y, Z), lambda I, p: I.rho(p, Y, Z)),
        A("right identity", "monoid", (X, W), lambda I, p: I.m(I.e(p, Y), X, Y, Z), lambda I, p: I.rho(p, X, Z)),
        A(
            "associativity",
            "monoid",
            (X, Y, Z, W),
            lambda I, p: I.m(I.m(p, X, Y, U), U, Z, V),
            lambda I, p: I.m(I.m(p, Y, Z, U), X, U, V),
        ),
        A("rename there and back", "set", (X, W), lambda I, p: I.rho(I.rho(p, X, Y), Y, X), lambda I, p: p),
        A("rename twice", "set", (X, W), lambda I, p: I.rho(I.rho(p, X, Y), Y, Z), lambda I, p: I.rho(p, X, Z)),
        A("rename then delete", "set", (X, W), lambda I, p: I.d(I.rho(p, X, Y), Y), lambda I, p: I.d(p, X)),
        A(
            "multiply then delete",
            "set",
            (X, Y, W),
            lambda I, p: I.d(I.m(p, X, Y, Z), Z),
            lambda I, p: I.d(I.d(p, X), Y),
        ),
        A("unit then delete", "set", (W,), lambda I, p: I.d(I.e(p, X), X), lambda I, p: p),
        A(
            "multiply then rename",
            "set",
            (X, Y, W),
            lambda I, p: I.rho(I.m(p, X, Y, Z), Z, U),
            lambda I, p: I.m(p, X, Y, U),
        ),
        A(
            "rename then multiply",
            "set",
            (X, Y, W),
            lambda I, p: I.m(I.rho(p, X, U), U, Y, Z),
            lambda I, p: I.m(p, X, Y, Z),
        ),
        A("unit then rename", "set", (W,), lambda I, p: I.rho(I.e(p, X), X, Y), lambda I, p: I.e(p, Y)),
        A("disjoint units commute", "set", (W,), lambda I, p: I.e(I.e(p, X), Y), lambda I, p: I.e(I.e(p, Y), X)),
        A(
            "disjoint multiplications commute",
            "set",
            (X, Y, U, V, W),
            lambda I, p: I.m(I.m(p, X, Y, Z), U, V, S),
            lambda I, p: I.m(I.m(p, U, V, S), X, Y, Z),
        ),
        A(
            "disjoint delete and multiply commute",
            "set",
            (X, Y, U, W),
            lambda I, p: I.d(I.m(p, X, Y, Z), U),
            lambda I, p: I.m(I.d(p, U), X, Y, Z),
        ),
        A(
            "union and multiply commute",
            "set",
            (X, Y, W),
            lambda I, p, q: I.m(I.union(p, q), X, Y, Z),
            lambda I, p, q: I.union(I.m(p, X, Y, Z), q),
            second=(U,),
        ),
    ]


# Tails 1, 2 (plus bystander 7), heads 3, 4 (plus bystander 8), per the
# two-tail two-head pictures of the swap relations.
T1, T2, H3, H4 = 1, 2, 3, 4


def swap_axioms() -> list[Axiom]:
    """Relations tying ``sw`` to ``tm``, ``hm``, renaming and units."""
    A = Axiom
    full = ((T1, T2, W), (H3, H4, W2))
    return [
        A(
            "tm then sw (swap tail 2 first)",
            "swap",
            full,
            lambda C, p: C.sw(C.tm(p, T1, T2, T1), T1, H4),
            lambda C, p: C.tm(C.sw(C.sw(p, T2, H4), T1, H4), T1, T2, T1),
        ),
        A(
            "tm then sw (swap tail 1 first)",
            "swap",
            full,
            lambda C, p: C.sw(C.tm(p, T1, T2, T1), T1, H4),
            lambda C, p: C.tm(C.sw(C.sw(p, T1, H4), T2, H4), T1, T2, T1),
        ),
        A(
            "hm then sw",
            "swap",
            full,
            lambda C, p: C.sw(C.hm(p, H3, H4, H3), T1, H3),
            lambda C, p: C.hm(C.sw(C.sw(p, T1, H3), T1, H4), H3, H4, H3),
        ),
        A(
            "sw then rename tail",
            "swap",
            ((T1, W), (H3, W2)),
            lambda C, p: C.trho(C.sw(p, T1, H3), T1, U),
            lambda C, p: C.sw(C.trho(p, T1, U), U, H3),
        ),
        A(
            "sw then rename head",
            "swap",
            ((T1, W), (H3, W2)),
            lambda C, p: C.hrho(C.sw(p, T1, H3), H3, U),
            lambda C, p: C.sw(C.hrho(p, H3, U), T1, U),
        ),
        A(
            "tail unit absorbs sw",
            "swap",
            ((W,), (H3, W2)),
            lambda C, p: C.sw(C.te(p, T1), T1, H3),
            lambda C, p: C.te(p, T1),
        ),
        A(
            "head unit absorbs sw",
            "swap",
            ((T1, W), (W2,)),
            lambda C, p: C.sw(C.he(p, H3), T1, H3),
            lambda C, p: C.he(p, H3),
        ),
    ]


# -- harness -----------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    instance: str
    passed: bool
    trials: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"AXIOM {self.instance}: {self.name} {status}"
        if self.counterexample:
            text += f" [counterexample: {self.counterexample}]"
        return text


@dataclass
class AxiomReport:
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.results.extend(other.results)
        return self

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "axioms": [
                {
                    "instance": r.instance,
                    "name": r.name,
                    "status": "PASS" if r.passed else "FAIL",
                    "trials": r.trials,
                    "counterexample": r.counterexample,
                }
                for r in self.results
            ],
        }

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def by_name(self, name: str, instance: str | None = None) -> AxiomResult:
        for r in self.results:
            if r.name == name and (instance is None or r.instance == instance):
                return r
        raise KeyError(name)


def _check(axiom: Axiom, instance, args) -> tuple[bool, str | None]:
    try:
        lhs = axiom.lhs(instance, *args)
        rhs = axiom.rhs(instance, *args)
    except ZBetaError as exc:
        return False, f"{type(exc).__name__}: {exc}"
    if instance.equal(lhs, rhs):
        return True, None
    shown = " / ".join(instance.render(a) for a in args)
    return False, f"input {shown}; lhs {instance.render(lhs)}; rhs {instance.render(rhs)}"


def axiom_suite(
    instance,
    generator: Callable | None = None,
    trials: int = 1000,
    seed: int = DEFAULT_SEED,
    axioms: Sequence[Axiom] | None = None,
    second: Callable | None = None,
) -> AxiomReport:
    """Evaluate both sides of every axiom on generated inputs.

    ``generator(labels, rng)`` builds an element on the given registers (for
    bicrossed instances ``labels`` is a ``(tails, heads)`` pair).  It
    defaults to ``instance.random``; ``second`` builds the other operand of
    union axioms and defaults to ``instance.random_second`` when present.
    A symbolic generator needs one trial.

    Inputs on which a swap is undefined (``1 + a = 0``) are redrawn, since
    the axioms only speak about defined composites.
    """
    if axioms is None:
        axioms = swap_axioms() if isinstance(instance, BetaCalculus) else monoid_axioms()
    if generator is None:
        generator = instance.random
    if second is None:
        second = getattr(instance, "random_second", generator)
    rng = random.Random(seed)
    report = AxiomReport()
    for axiom in axioms:
        ok, witness, done, attempts = True, None, 0, 0
        while done < trials and attempts < 20 * trials:
            attempts += 1
            args = _inputs(axiom, generator, second, rng)
            try:
                ok, witness = _check(axiom, instance, args)
            except SingularSwap:
                continue
            done += 1
            if not ok:
                break
        if done == 0:
            ok, witness = False, "no input with every swap defined"
        report.results.append(AxiomResult(axiom.name, instance.name, ok, done, witness))
    return report


def _check(axiom: Axiom, instance, args) -> tuple[bool, str | None]:
    try:
        lhs = axiom.lhs(instance, *args)
        rhs = axiom.rhs(instance, *args)
    except SingularSwap:
        raise
    except ZBetaError as exc:
        return False, f"{type(exc).__name__}: {exc}"
    if instance.equal(lhs, rhs):
        return True, None
    shown = " / ".join(instance.render(a) for a in args)
    return False, f"input {shown}; lhs {instance.render(lhs)}; rhs {instance.render(rhs)}"


def _inputs(axiom: Axiom, generator, second, rng) -> tuple:
    if isinstance(axiom.labels[0], tuple):
        first = generator(*axiom.labels, rng)
    else:
        first = generator(axiom.labels, rng)
    if axiom.second is None:
        return (first,)
    return first, second(axiom.second, rng)


def symbolic_generator(instance) -> Callable:
    """Generic elements: every entry (and the corner) a fresh free symbol."""
    if isinstance(instance, BetaCalculus):
        return lambda tails, heads, rng: instance.generic(tails, heads)
    return lambda labels, rng: instance.generic(labels)


# gm is not compatible with strand deletion on arbitrary arrays: a swap
# reads the whole column, so dropping a row first changes the result.
GM_DELETION_AXIOMS = ("multiply then delete", "disjoint delete and multiply commute")


def beta_symbolic_suite() -> AxiomReport:
    """The beta-calculus axioms on generic symbolic elements, one exact check each.

    Covers the swap relations, the tail and head meta-monoids, and the
    ``gm`` meta-monoid minus :data:`GM_DELETION_AXIOMS`
    (see :func:`gm_deletion_report`).
    """
    report = AxiomReport()
    calc = BetaCalculus()
    report.extend(axiom_suite(calc, symbolic_generator(calc), trials=1))
    for side in (BetaTailInstance(calc), BetaHeadInstance(calc), BetaGmInstance(calc)):
        axioms = monoid_axioms()
        if isinstance(side, BetaGmInstance):
            axioms = [a for a in axioms if a.name not in GM_DELETION_AXIOMS]
        report.extend(axiom_suite(side, symbolic_generator(side), trials=1, axioms=axioms))
    return report


def gm_deletion_report() -> AxiomReport:
    """The deletion axioms for ``gm`` on generic elements; informational, these fail."""
    side = BetaGmInstance()
    axioms = [a for a in monoid_axioms() if a.name in GM_DELETION_AXIOMS]
    return axiom_suite(side, symbolic_generator(side), trials=1, axioms=axioms)
