"""Beta-calculus arrays and their operations.

A :class:`BetaElement` is an array whose rows are labelled by tails, whose
columns are labelled by heads, plus a corner scalar ``omega``.  Every entry
and the corner are :class:`~zbeta.algebra.RationalFn` values in the strand
variables ``T_t`` (one per tail ``t``) and, for symbolic checks, free symbols.

Operations return new elements; nothing is mutated.  Composition reads left
to right, as in ``E.tm(1, 2, 1).hm(1, 2, 1)``.
"""

from __future__ import annotations

import os
from typing import Iterable, Mapping

from zbeta.algebra import ONE, ZERO, RationalFn, as_rational, parse_expr, render_expr, strand, symbol
from zbeta.errors import LabelError, SingularSwap

__all__ = [
    "BetaElement",
    "r_element",
    "beta_union",
    "beta_eq",
    "generic_element",
    "CHECK_INVARIANTS",
]

# Verify the tail/variable bijection on every result.  Tests switch this on;
# ZBETA_CHECK=1 does the same from the environment.
CHECK_INVARIANTS = os.environ.get("ZBETA_CHECK", "") not in ("", "0")

Label = int


def _check_label(x) -> Label:
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise LabelError(f"labels are non-negative integers, got {x!r}")
    return x


def _distinct(labels: Iterable, kind: str) -> tuple:
    labels = tuple(_check_label(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise LabelError(f"duplicate {kind} labels in {labels}")
    return labels


class BetaElement:
    """An omega-decorated array with tail-labelled rows and head-labelled columns.

    ``entries`` maps ``(tail, head)`` to a nonzero :class:`RationalFn`; missing
    pairs are zero.
    """

    __slots__ = ("omega", "tails", "heads", "_entries")

    def __init__(
        self,
        omega=1,
        tails: Iterable[Label] = (),
        heads: Iterable[Label] = (),
        entries: Mapping[tuple[Label, Label], object] | None = None,
        *,
        check: bool = True,
    ):
        self.omega = as_rational(omega)
        self.tails = _distinct(tails, "tail")
        self.heads = _distinct(heads, "head")
        clean = {}
        tset, hset = set(self.tails), set(self.heads)
        for (t, h), v in (entries or {}).items():
            if t not in tset or h not in hset:
                raise LabelError(f"entry ({t}, {h}) outside the labels")
            v = as_rational(v)
            if not v.is_zero():
                clean[(t, h)] = v
        self._entries = clean
        if check:
            self.check_variables()

    @classmethod
    def _make(cls, omega, tails, heads, entries) -> "BetaElement":
        obj = cls.__new__(cls)
        obj.omega = omega
        obj.tails = tuple(tails)
        obj.heads = tuple(heads)
        obj._entries = {k: v for k, v in entries.items() if not v.is_zero()}
        if CHECK_INVARIANTS:
            obj.check_variables()
        return obj

    @classmethod
    def empty(cls) -> "BetaElement":
        return cls._make(ONE, (), (), {})

    # -- access -------------------------------------------------------------

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, key: tuple[Label, Label]) -> RationalFn:
        t, h = key
        if t not in self.tails or h not in self.heads:
            raise LabelError(f"no entry ({t}, {h})")
        return self._entries.get(key, ZERO)

    def row(self, t: Label) -> dict:
        return {h: self._entries.get((t, h), ZERO) for h in self.heads}

    def column(self, h: Label) -> dict:
        return {t: self._entries.get((t, h), ZERO) for t in self.tails}

    def is_zero_matrix(self) -> bool:
        return not self._entries

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.tails), len(self.heads)

    def strand_variables(self) -> set:
        found = set(self.omega.variables())
        for v in self._entries.values():
            found |= v.variables()
        return {x for x in found if x.kind == "strand"}

    def check_variables(self) -> None:
        """Raise :class:`LabelError` if a ``T_i`` appears without tail ``i``."""
        allowed = {strand(t) for t in self.tails}
        stray = self.strand_variables() - allowed
        if stray:
            names = ", ".join(sorted(str(v) for v in stray))
            raise LabelError(f"strand variables {names} have no matching tail in {self.tails}")

    # -- the bicrossed-product operations ----------------------------------------

    def tm(self, x: Label, y: Label, z: Label) -> "BetaElement":
        """Tail multiplication: rows x and y summed into row z, then T_x, T_y -> T_z."""
        _need_pair(self.tails, x, y, z, "tail")
        sub = {strand(x): strand(z), strand(y): strand(z)}
        entries = {}
        for (t, h), v in self._entries.items():
            key = (z, h) if t in (x, y) else (t, h)
            entries[key] = entries.get(key, ZERO) + v
        entries = {k: v.substitute(sub) for k, v in entries.items()}
        tails = _merged(self.tails, x, y, z)
        return BetaElement._make(self.omega.substitute(sub), tails, self.heads, entries)

    def hm(self, x: Label, y: Label, z: Label) -> "BetaElement":
        """Head multiplication: columns a, b become a + b + <a> b, <a> the column sum of a."""
        _need_pair(self.heads, x, y, z, "head")
        alpha = self.column(x)
        beta = self.column(y)
        total = ZERO
        for v in alpha.values():
            total = total + v
        entries = {k: v for k, v in self._entries.items() if k[1] not in (x, y)}
        for t in self.tails:
            a, b = alpha[t], beta[t]
            entries[(t, z)] = a + b + total * b
        heads = _merged(self.heads, x, y, z)
        return BetaElement._make(self.omega, self.tails, heads, entries)

    def sw(self, x: Label, y: Label) -> "BetaElement":
        """Swap tail x past head y.

        With a = E[x,y], e = 1 + a, row rest b, column rest c and remaining
        block d: omega -> omega e, a -> a (1 + <c>/e), b -> b (1 + <c>/e),
        c -> c / e and d -> d - c b / e.
        """
        if x not in self.tails:
            raise LabelError(f"sw: no tail {x}")
        if y not in self.heads:
            raise LabelError(f"sw: no head {y}")
        alpha = self._entries.get((x, y), ZERO)
        eps = ONE + alpha
        if eps.is_zero():
            raise SingularSwap(f"sw_{x},{y}: 1 + E[{x},{y}] vanishes")
        gamma = {t: v for (t, h), v in self._entries.items() if h == y and t != x}
        beta = {h: v for (t, h), v in self._entries.items() if t == x and h != y}
        if not gamma and not beta and eps == ONE:
            return self
        csum = ZERO
        for v in gamma.values():
            csum = csum + v
        factor = ONE + csum / eps
        entries = dict(self._entries)
        entries[(x, y)] = alpha * factor
        for h, b in beta.items():
            entries[(x, h)] = b * factor
        for t, c in gamma.items():
            c_eps = c / eps
            entries[(t, y)] = c_eps
            for h, b in beta.items():
                entries[(t, h)] = entries.get((t, h), ZERO) - c_eps * b
        return BetaElement._make(self.omega * eps, self.tails, self.heads, entries)

    def gm(self, x: Label, y: Label, z: Label) -> "BetaElement":
        """Stitch the head of strand x to the tail of strand y, naming the result z."""
        if x == y:
            raise LabelError(f"gm needs two distinct strands, got {x} twice")
        for lab in (x, y):
            if lab not in self.tails or lab not in self.heads:
                raise LabelError(f"gm: strand {lab} needs both a tail and a head")
        return self.sw(x, y).tm(x, y, z).hm(x, y, z)

    # -- register bookkeeping ------------------------------------------------

    def insert_unit(self, kind: str, x: Label) -> "BetaElement":
        """Add a zero row (``kind="tail"``) or zero column (``kind="head"``)."""
        x = _check_label(x)
        if kind == "tail":
            if x in self.tails:
                raise LabelError(f"tail {x} already present")
            return BetaElement._make(self.omega, self.tails + (x,), self.heads, self._entries)
        if kind == "head":
            if x in self.heads:
                raise LabelError(f"head {x} already present")
            return BetaElement._make(self.omega, self.tails, self.heads + (x,), self._entries)
        raise ValueError(f"kind must be 'tail' or 'head', not {kind!r}")

    def te(self, x: Label) -> "BetaElement":
        return self.insert_unit("tail", x)

    def he(self, x: Label) -> "BetaElement":
        return self.insert_unit("head", x)

    def delete(self, kind: str, x: Label) -> "BetaElement":
        """Drop a column, or set T_x = 1 and drop row x."""
        if kind == "head":
            if x not in self.heads:
                raise LabelError(f"no head {x} to delete")
            entries = {k: v for k, v in self._entries.items() if k[1] != x}
            heads = tuple(h for h in self.heads if h != x)
            return BetaElement._make(self.omega, self.tails, heads, entries)
        if kind == "tail":
            if x not in self.tails:
                raise LabelError(f"no tail {x} to delete")
            sub = {strand(x): 1}
            entries = {k: v.substitute(sub) for k, v in self._entries.items() if k[0] != x}
            tails = tuple(t for t in self.tails if t != x)
            return BetaElement._make(self.omega.substitute(sub), tails, self.heads, entries)
        raise ValueError(f"kind must be 'tail' or 'head', not {kind!r}")

    def td(self, x: Label) -> "BetaElement":
        return self.delete("tail", x)

    def hd(self, x: Label) -> "BetaElement":
        return self.delete("head", x)

    def relabel(self, kind: str, x: Label, y: Label) -> "BetaElement":
        """Rename label x to y; renaming a tail also renames T_x to T_y."""
        y = _check_label(y)
        if kind == "head":
            if x not in self.heads:
                raise LabelError(f"no head {x}")
            if y in self.heads and y != x:
                raise LabelError(f"head {y} already present")
            entries = {(t, y if h == x else h): v for (t, h), v in self._entries.items()}
            heads = tuple(y if h == x else h for h in self.heads)
            return BetaElement._make(self.omega, self.tails, heads, entries)
        if kind == "tail":
            if x not in self.tails:
                raise LabelError(f"no tail {x}")
            if y in self.tails and y != x:
                raise LabelError(f"tail {y} already present")
            sub = {strand(x): strand(y)}
            entries = {(y if t == x else t, h): v.substitute(sub) for (t, h), v in self._entries.items()}
            tails = tuple(y if t == x else t for t in self.tails)
            return BetaElement._make(self.omega.substitute(sub), tails, self.heads, entries)
        raise ValueError(f"kind must be 'tail' or 'head', not {kind!r}")

    def union(self, other: "BetaElement") -> "BetaElement":
        return beta_union(self, other)

    __or__ = union

    # -- comparison / io -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BetaElement):
            return NotImplemented
        return beta_eq(self, other)

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "omega": render_expr(self.omega),
            "tails": list(self.tails),
            "heads": list(self.heads),
            "entries": [
                {"t": t, "h": h, "v": render_expr(self._entries[(t, h)])}
                for t in self.tails
                for h in self.heads
                if (t, h) in self._entries
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BetaElement":
        try:
            entries = {(e["t"], e["h"]): parse_expr(e["v"]) for e in data["entries"]}
            return cls(parse_expr(data["omega"]), data["tails"], data["heads"], entries)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed beta element JSON: {exc}") from exc

    def pretty(self) -> str:
        """Plain-text table; the corner sits top left, as in the usual display."""
        header = [render_expr(self.omega)] + [f"h{h}" for h in self.heads]
        rows = [[f"t{t}"] + [render_expr(self._entries.get((t, h), ZERO)) for h in self.heads] for t in self.tails]
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        fmt = lambda r: " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
        lines = [fmt(header), "-+-".join("-" * w for w in widths)]
        lines += [fmt(r) for r in rows]
        return "\n".join(lines)

    def __repr__(self) -> str:
        body = ", ".join(f"({t},{h}): {render_expr(v)}" for (t, h), v in sorted(self._entries.items()))
        return f"BetaElement(omega={render_expr(self.omega)}, tails={self.tails}, heads={self.heads}, {{{body}}})"


def _need_pair(labels: tuple, x, y, z, kind: str) -> None:
    if x == y:
        raise LabelError(f"{kind} multiplication needs distinct labels, got {x} twice")
    for lab in (x, y):
        if lab not in labels:
            raise LabelError(f"no {kind} {lab}")
    _check_label(z)
    if z in labels and z not in (x, y):
        raise LabelError(f"target {kind} {z} already in use")


def _merged(labels: tuple, x, y, z) -> tuple:
    return tuple(z if lab == x else lab for lab in labels if lab != y)


def r_element(sign: int | str, o: Label, u: Label) -> BetaElement:
    """The crossing array: over strand o, under strand u.

    The only nonzero entry is ``(t_o, h_u) = T_o^{+-1} - 1``.
    """
    s = _sign(sign)
    if o == u:
        raise LabelError(f"a crossing needs two distinct strands, got {o} twice")
    value = RationalFn.var(strand(o), s) - ONE
    return BetaElement._make(ONE, (o, u), (o, u), {(o, u): value})


def _sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-", "−"):
        return -1
    raise ValueError(f"sign must be +1/-1 or '+'/'-', got {sign!r}")


def beta_union(a: BetaElement, b: BetaElement) -> BetaElement:
    common_t = set(a.tails) & set(b.tails)
    common_h = set(a.heads) & set(b.heads)
    if common_t or common_h:
        raise LabelError(f"union of overlapping labels: tails {sorted(common_t)}, heads {sorted(common_h)}")
    entries = dict(a._entries)
    entries.update(b._entries)
    return BetaElement._make(a.omega * b.omega, a.tails + b.tails, a.heads + b.heads, entries)


def beta_eq(a: BetaElement, b: BetaElement) -> bool:
    """Label sets, corners and all entries agree (missing entries count as 0)."""
    if set(a.tails) != set(b.tails) or set(a.heads) != set(b.heads):
        return False
    if a.omega != b.omega:
        return False
    for key in a._entries.keys() | b._entries.keys():
        if a._entries.get(key, ZERO) != b._entries.get(key, ZERO):
            return False
    return True


def _symbol_names() -> Iterable[str]:
    letters = "abcdefghijklmnopqrsuvwxyz"  # no 't', keeps names away from labels in printouts
    for a in letters:
        yield a
    for a in letters:
        for b in letters:
            yield a + b


def generic_element(tails: Iterable[Label], heads: Iterable[Label], omega_symbol: bool = True) -> BetaElement:
    """Element whose corner and every entry is a distinct free symbol."""
    names = _symbol_names()
    tails, heads = tuple(tails), tuple(heads)
    omega = RationalFn.var(symbol("w")) if omega_symbol else ONE
    entries = {}
    for t in tails:
        for h in heads:
            name = next(names)
            while name == "w":
                name = next(names)
            entries[(t, h)] = RationalFn.var(symbol(name))
    return BetaElement(omega, tails, heads, entries)


def element(omega: str, tails, heads, entries: Mapping[tuple[Label, Label], str]) -> BetaElement:
    """Build an element from expression strings; convenient in tests."""
    return BetaElement(parse_expr(omega), tails, heads, {k: parse_expr(v) for k, v in entries.items()})

