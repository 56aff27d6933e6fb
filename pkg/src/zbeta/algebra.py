"""Exact sparse arithmetic for Laurent polynomials and rational functions.

A monomial is a sorted tuple of ``(VarId, exponent)`` pairs with nonzero
integer exponents (negative allowed).  A :class:`LaurentPoly` maps monomials to
nonzero Python integers, so coefficients never overflow.  A
:class:`RationalFn` is a quotient of two Laurent polynomials; equality between
rational functions is decided by cross-multiplication; gcd reduction (done with
sympy's sparse polynomial rings) only keeps sizes down.

Text form (see :func:`parse_expr`)::

    T1^-1 - 1
    (T2^-1)*(T3 - 1)
    (a + b*T1)/(1 + a)

``T<n>`` is the strand variable of tail ``n``; any other run of letters is a
free symbol.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring as sympy_ring

from zbeta.errors import DivisionByZero, ParseError

__all__ = [
    "VarId",
    "strand",
    "symbol",
    "LaurentPoly",
    "RationalFn",
    "ZERO",
    "ONE",
    "as_rational",
    "parse_expr",
    "render_expr",
    "rf_eq",
    "substitute",
]


class VarId(NamedTuple):
    """A variable: ``("strand", n)`` is ``T_n``, ``("symbol", name)`` is free.

    Plain tuple ordering sorts strand variables before free symbols and each
    kind by index.
    """

    kind: str
    index: Union[int, str]

    def __str__(self) -> str:
        if self.kind == "strand":
            return f"T{self.index}"
        return str(self.index)


def strand(index: int) -> VarId:
    if not isinstance(index, int) or isinstance(index, bool) or index < 0:
        raise ValueError(f"strand variables need a non-negative int index, got {index!r}")
    return VarId("strand", index)


def symbol(name: str) -> VarId:
    if not re.fullmatch(r"[A-Za-z]+", name) or re.fullmatch(r"T\d+", name):
        raise ValueError(f"bad symbol name {name!r}")
    return VarId("symbol", name)


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted by VarId


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        s = out.get(v, 0) + e
        if s:
            out[v] = s
        else:
            del out[v]
    return tuple(sorted(out.items()))


def _mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


def _mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def _term_key(mono: Monomial):
    # graded, then lexicographic on the sorted factor list
    return (_mono_degree(mono), mono)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for mono, c in items:
            mono = tuple(sorted((v, e) for v, e in mono if e))
            c = clean.get(mono, 0) + int(c)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # terms already canonical: sorted monomials, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, v: VarId, exp: int = 1) -> "LaurentPoly":
        return cls._raw({((v, exp),) if exp else (): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "LaurentPoly":
        return cls({mono: coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), 0)

    def variables(self) -> frozenset:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, self._terms.values(), 0)

    def min_exponents(self) -> dict:
        """Per-variable minimum exponent over all terms (absent counts as 0)."""
        vs = self.variables()
        mins = {v: 0 for v in vs}
        for mono in self._terms:
            present = dict(mono)
            for v in vs:
                e = present.get(v, 0)
                if e < mins[v]:
                    mins[v] = e
        return mins

    def leading(self) -> tuple[Monomial, int]:
        mono = max(self._terms, key=_term_key)
        return mono, self._terms[mono]

    def degree_range(self, v: VarId) -> tuple[int, int]:
        exps = [dict(m).get(v, 0) for m in self._terms]
        return min(exps), max(exps)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly._raw({})
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (mono, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly._raw({_mono_inv(mono): c}) ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, mono: Monomial, coeff: int = 1) -> "LaurentPoly":
        if not coeff:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({_mono_mul(m, mono): c * coeff for m, c in self._terms.items()})

    def exact_div_int(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({m: c // k for m, c in self._terms.items()})

    def substitute(self, mapping: Mapping[VarId, Union[VarId, int]]) -> "LaurentPoly":
        """Rename variables; a target of ``1`` specializes the variable to 1.

        The mapping may be non-injective: exponents of collided variables add.
        """
        if not mapping or not (self.variables() & mapping.keys()):
            return self
        out: dict = {}
        for mono, c in self._terms.items():
            acc: dict = {}
            for v, e in mono:
                w = mapping.get(v, v)
                if w == 1:
                    continue
                acc[w] = acc.get(w, 0) + e
            m = tuple(sorted((w, e) for w, e in acc.items() if e))
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return LaurentPoly._raw(out)

    def evaluate(self, values: Mapping[VarId, object]):
        """Evaluate at numeric values (any ring supporting ``**`` with ints)."""
        total = 0
        for mono, c in self._terms.items():
            term = c
            for v, e in mono:
                x = values[v]
                if e < 0 and isinstance(x, int):
                    x = Fraction(x)
                term = term * x**e
            total = total + term
        return total

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return ``self / other`` if it is a Laurent polynomial, else ``None``."""
        if not other._terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self._terms:
            return self
        if other.is_monomial():
            (mono, c), = other._terms.items()
            if any(x % c for x in self._terms.values()):
                return None
            inv = _mono_inv(mono)
            return LaurentPoly._raw({_mono_mul(m, inv): x // c for m, x in self._terms.items()})
        if not other.variables() <= self.variables():
            return None
        return _divexact_dense(self, other)

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda mc: _term_key(mc[0]))

    def __str__(self) -> str:
        return _render_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({_render_poly(self)!r})"


def _coerce_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly.const(x)
    return NotImplemented


def _divexact_dense(num: LaurentPoly, den: LaurentPoly) -> "LaurentPoly | None":
    # Division by leading terms under lex order on Z^n, which is a group order,
    # so the lowest term of a true quotient is low(num)/low(den).
    vs = sorted(num.variables() | den.variables())
    index = {v: i for i, v in enumerate(vs)}
    n = len(vs)

    def dense(mono):
        vec = [0] * n
        for v, e in mono:
            vec[index[v]] = e
        return tuple(vec)

    r = {dense(m): c for m, c in num.items()}
    d = [(dense(m), c) for m, c in den.items()]
    d_hi, d_hc = max(d)
    # per-variable exponent box that any true quotient must lie in
    box = []
    for i in range(n):
        ne = [m[i] for m in r]
        de = [m[i] for m, _ in d]
        lo, hi = min(ne) - min(de), max(ne) - max(de)
        if lo > hi:
            return None
        box.append((lo, hi))
    q: dict = {}
    while r:
        hi = max(r)
        c = r[hi]
        if c % d_hc:
            return None
        qm = tuple(a - b for a, b in zip(hi, d_hi))
        if any(not lo <= e <= top for e, (lo, top) in zip(qm, box)):
            return None
        qc = c // d_hc
        q[qm] = qc
        for dm, dc in d:
            m = tuple(a + b for a, b in zip(qm, dm))
            s = r.get(m, 0) - qc * dc
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return LaurentPoly(
        (tuple((vs[i], e) for i, e in enumerate(vec) if e), c) for vec, c in q.items()
    )


_ONE_POLY = LaurentPoly.const(1)


class RationalFn:
    """Immutable quotient ``num / den`` of Laurent polynomials.

    On construction the common factor of numerator and denominator is divided
    out, the denominator loses its monomial content (every variable's minimum
    exponent becomes 0) and its leading coefficient is made positive.  ``==``
    still compares by cross-multiplication, so correctness never rests on the
    reduction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int = 0, den: LaurentPoly | int = 1):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFn needs LaurentPoly or int parts")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def var(cls, v: VarId, exp: int = 1) -> "RationalFn":
        return cls._raw(LaurentPoly.var(v, exp), _ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant() and self.den.constant_value() == 1

    def variables(self) -> frozenset:
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.is_polynomial() and other.is_polynomial():
            return RationalFn._raw(self.num * other.num, _ONE_POLY)
        # cancel across before multiplying to keep sizes down
        n1, d2 = _cancel_pair(self.num, other.den)
        n2, d1 = _cancel_pair(other.num, self.den)
        return RationalFn(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZero(f"division of {self} by zero")
        return self * RationalFn._raw(other.den, other.num)

    def __rtruediv__(self, other):
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RationalFn":
        if n < 0:
            return ONE / (self ** (-n))
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, mapping: Mapping[VarId, Union[VarId, int]]) -> "RationalFn":
        if not mapping:
            return self
        num = self.num.substitute(mapping)
        den = self.den.substitute(mapping)
        if den.is_zero():
            raise DivisionByZero(f"substitution {mapping} kills the denominator of {self}")
        return RationalFn(num, den)

    def __eq__(self, other) -> bool:
        other = as_rational(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        # Semantic hash: value at a fixed point modulo a prime.
        num = _eval_mod(self.num)
        den = _eval_mod(self.den)
        if den == 0:
            return 0
        return hash(num * pow(den, -1, _HASH_PRIME) % _HASH_PRIME)

    def __str__(self) -> str:
        return render_expr(self)

    def __repr__(self) -> str:
        return f"RationalFn({render_expr(self)!r})"


_HASH_PRIME = (1 << 61) - 1


def _eval_mod(p: LaurentPoly) -> int:
    total = 0
    for mono, c in p.items():
        term = c % _HASH_PRIME
        for v, e in mono:
            x = (hash(v) % (_HASH_PRIME - 2)) + 2
            term = term * pow(x, e, _HASH_PRIME) % _HASH_PRIME
        total = (total + term) % _HASH_PRIME
    return total


def _cancel_pair(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Divide ``num`` and ``den`` by their gcd (up to sign and monomials)."""
    if den.is_constant() or num.is_zero():
        return num, den
    if num.is_monomial():
        return num, den
    return _gcd_cofactors(num, den)


@lru_cache(maxsize=None)
def _ring(n: int):
    return sympy_ring([f"x{i}" for i in range(n)], ZZ, lex)[0]


def _gcd_cofactors(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    # Shift both into the polynomial ring, take the gcd there, shift back.
    vs = sorted(a.variables() | b.variables())
    index = {v: i for i, v in enumerate(vs)}
    n = len(vs)

    def to_ring(p: LaurentPoly):
        mins = [0] * n
        dense = []
        for mono, c in p.items():
            vec = [0] * n
            for v, e in mono:
                vec[index[v]] = e
            dense.append((vec, c))
            mins = [min(x, y) for x, y in zip(mins, vec)]
        return {tuple(x - m for x, m in zip(vec, mins)): c for vec, c in dense}, mins

    da, sa = to_ring(a)
    db, sb = to_ring(b)
    R = _ring(n)
    g, qa, qb = R(da).cofactors(R(db))
    if g.is_ground:
        return a, b

    def back(q, shift):
        return LaurentPoly._raw(
            {
                tuple((vs[i], e + s) for i, (e, s) in enumerate(zip(exps, shift)) if e + s): int(c)
                for exps, c in q.items()
            }
        )

    return back(qa, sa), back(qb, sb)


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _ONE_POLY
    if den.is_monomial():
        (mono, c), = den.items()
        inv = _mono_inv(mono)
        num = num.mul_monomial(inv)
        if c < 0:
            num, c = -num, -c
        if c == 1:
            return num, _ONE_POLY
        g = math.gcd(num.content(), c)
        if g > 1:
            num, c = num.exact_div_int(g), c // g
        return num, LaurentPoly.const(c)
    mins = den.min_exponents()
    shift = tuple(sorted((v, -e) for v, e in mins.items() if e))
    if shift:
        num = num.mul_monomial(shift)
        den = den.mul_monomial(shift)
    g = math.gcd(num.content(), den.content())
    if g > 1:
        num, den = num.exact_div_int(g), den.exact_div_int(g)
    num, den = _gcd_cofactors(num, den)
    if den.is_monomial():
        return _normalize(num, den)
    mins = den.min_exponents()
    shift = tuple(sorted((v, -e) for v, e in mins.items() if e))
    if shift:
        num = num.mul_monomial(shift)
        den = den.mul_monomial(shift)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def as_rational(x, strict: bool = True):
    """Coerce ints, LaurentPolys and expression strings to :class:`RationalFn`."""
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFn._raw(x, _ONE_POLY)
    if isinstance(x, int) and not isinstance(x, bool):
        return RationalFn._raw(LaurentPoly.const(x), _ONE_POLY)
    if isinstance(x, str) and strict:
        return parse_expr(x)
    if strict:
        raise TypeError(f"can not interpret {x!r} as a rational function")
    return NotImplemented


ZERO = RationalFn._raw(LaurentPoly.const(0), _ONE_POLY)
ONE = RationalFn._raw(_ONE_POLY, _ONE_POLY)


def rf_eq(a, b) -> bool:
    return as_rational(a) == as_rational(b)


def substitute(f, mapping: Mapping[VarId, Union[VarId, int]]) -> RationalFn:
    return as_rational(f).substitute(mapping)


# -- rendering ---------------------------------------------------------------


def _render_mono(mono: Monomial) -> str:
    parts = []
    for v, e in mono:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def _render_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        mag = abs(c)
        body = _render_mono(mono)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


def render_expr(f) -> str:
    """Deterministic text for a rational function; parseable by :func:`parse_expr`."""
    f = as_rational(f)
    if f.is_polynomial():
        return _render_poly(f.num)
    return f"({_render_poly(f.num)})/({_render_poly(f.den)})"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<strand>T\d+)|(?P<sym>[A-Za-z]+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", self.text, pos)

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.peek()[2])

    def parse(self) -> RationalFn:
        value = self.rational()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return value

    def rational(self) -> RationalFn:
        value = self.sum()
        kind, val, _ = self.peek()
        if kind == "op" and val == "/":
            self.take()
            den = self.sum()
            if den.is_zero():
                self.error("division by zero")
            value = value / den
        return value

    def sum(self) -> RationalFn:
        value = self.product()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.product()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def product(self) -> RationalFn:
        value = self.signed_atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.signed_atom()
            else:
                return value

    def signed_atom(self) -> RationalFn:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.atom()
        return self.atom()

    def atom(self) -> RationalFn:
        kind, val, pos = self.take()
        if kind == "int":
            return as_rational(int(val))
        if kind in ("strand", "sym"):
            v = strand(int(val[1:])) if kind == "strand" else symbol(val)
            exp = 1
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "^":
                self.take()
                exp = self.exponent()
            return RationalFn.var(v, exp)
        if kind == "op" and val == "(":
            value = self.rational()
            self.expect_op(")")
            return value
        raise ParseError("expected a number, variable or '('", self.text, pos)

    def exponent(self) -> int:
        kind, val, pos = self.take()
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer exponent", self.text, pos)
        return sign * int(val)


def parse_expr(text: str) -> RationalFn:
    """Parse the expression grammar into a :class:`RationalFn`.

    >>> render_expr(parse_expr("(T2^-1)*(T3-1)"))
    '-T2^-1 + T2^-1*T3'
    """
    return _Parser(text).parse()
