"""Exact multivariate polynomials over Q with integer variable weights.

A :class:`PolyRing` fixes an ordered list of variables, each carrying an
integer weight (the grading coming from a multiplicative-group action), and a
term order.  :class:`Polynomial` values are immutable; their terms are kept
sorted in descending term order so that structural equality is polynomial
equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

TERM_ORDERS = ("lex", "grevlex")


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    """Syntax error in a polynomial string, with 1-based line/column."""

    def __init__(self, message, text="", offset=0):
        self.text = text
        self.offset = offset
        prefix = text[:offset]
        self.line = prefix.count("\n") + 1
        self.column = offset - (prefix.rfind("\n") + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


class NonHomogeneousError(PolynomialError):
    """Raised when a polynomial has terms of different weighted degree."""

    def __init__(self, polynomial, witnesses):
        self.polynomial = polynomial
        self.witnesses = witnesses
        a, b = witnesses
        super().__init__(
            f"{polynomial} is not homogeneous: {a} has weight "
            f"{_weight_of(polynomial.ring, a)} but {b} has weight "
            f"{_weight_of(polynomial.ring, b)}"
        )


def _weight_of(ring, term):
    (exp, _), = term.terms()
    return ring.weight_of(exp)


def _normalize_order(order, nvars):
    if isinstance(order, str):
        if order not in TERM_ORDERS:
            raise PolynomialError(f"unknown term order {order!r}")
        return order
    kind, split = order
    if kind != "block":
        raise PolynomialError(f"unknown term order {order!r}")
    if not 0 <= split <= nvars:
        raise PolynomialError(f"block split {split} out of range for {nvars} variables")
    return ("block", int(split))


@lru_cache(maxsize=None)
def _key_function(order, nvars):
    if order == "lex":
        return lambda e: e
    # keys are flat int tuples so they can be negated for heap use
    if order == "grevlex":
        return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
    _, k = order

    def block(e):
        rest = e[k:]
        return e[:k] + (sum(rest),) + tuple(-x for x in reversed(rest))

    return block


class PolyRing:
    """Polynomial ring Q[x_1..x_n] with variable weights and a term order.

    ``variables`` is a sequence of names or ``(name, weight)`` pairs.
    ``order`` is ``"lex"``, ``"grevlex"`` or ``("block", k)``: lex on the
    first ``k`` variables, ties broken by grevlex on the remaining ones.
    """

    __slots__ = ("names", "weights", "order", "_index", "_key", "_hash")

    def __init__(self, variables: Sequence, order="grevlex"):
        names, weights = [], []
        for v in variables:
            if isinstance(v, str):
                name, weight = v, 0
            else:
                name, weight = v
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise PolynomialError(f"invalid variable name {name!r}")
            names.append(name)
            weights.append(int(weight))
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise PolynomialError(f"duplicate variable name(s): {', '.join(dup)}")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.order = _normalize_order(order, len(names))
        self._index = {n: i for i, n in enumerate(self.names)}
        self._key = _key_function(self.order, len(names))
        self._hash = hash((self.names, self.weights, self.order))

    # -- basic structure -------------------------------------------------
    @property
    def nvars(self):
        return len(self.names)

    def key(self, exp: Exponent):
        return self._key(exp)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def weight_of(self, exp: Exponent) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.order == other.order
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing([{vs}], order={self.order!r})"

    def __str__(self):
        return "Q[" + ", ".join(self.names) + "]"

    # -- derived rings ---------------------------------------------------
    @property
    def variables(self):
        return tuple(zip(self.names, self.weights))

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.variables, order)

    def with_weights(self, weights) -> "PolyRing":
        return PolyRing(list(zip(self.names, weights)), self.order)

    def subring(self, keep: Iterable[str]) -> "PolyRing":
        """Ring on the listed variables, in this ring's variable order."""
        keep = set(keep)
        for n in keep:
            self.index(n)
        order = self.order if isinstance(self.order, str) else "grevlex"
        return PolyRing([v for v in self.variables if v[0] in keep], order)

    # -- element construction --------------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def monomial(self, exp: Exponent, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exp): Fraction(coeff)})

    def gen(self, name: str) -> "Polynomial":
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(n) for n in self.names)

    def parse(self, text: str) -> "Polynomial":
        return parse(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.change_ring(self)
        if isinstance(value, str):
            return parse(value, self)
        return self.constant(value)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "_terms", "_dict", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, Coefficient]):
        self.ring = ring
        n = ring.nvars
        clean = {}
        for exp, c in terms.items():
            c = _as_fraction(c)
            if c:
                if len(exp) != n:
                    raise PolynomialError(
                        f"exponent {exp} has length {len(exp)}, ring has {n} variables"
                    )
                clean[tuple(exp)] = c
        self._dict = clean
        self._terms = tuple(sorted(clean.items(), key=lambda t: ring.key(t[0]), reverse=True))
        self._hash = None

    @classmethod
    def _from_sorted(cls, ring, items):
        # trusted constructor: items already clean and sorted descending
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = tuple(items)
        p._dict = dict(items)
        p._hash = None
        return p

    # -- inspection ------------------------------------------------------
    def terms(self):
        """(exponent, coefficient) pairs in descending term order."""
        return self._terms

    def as_dict(self) -> Dict[Exponent, Fraction]:
        return dict(self._dict)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._dict.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError(f"{self} is not constant")
        return self._terms[0][1] if self._terms else Fraction(0)

    def __len__(self):
        return len(self._terms)

    @property
    def leading_exponent(self) -> Exponent:
        return self._terms[0][0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[0][1]

    def leading_term(self) -> "Polynomial":
        return Polynomial._from_sorted(self.ring, self._terms[:1])

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e, _ in self._terms), default=-1)

    def variables_used(self) -> Tuple[str, ...]:
        used = [False] * self.ring.nvars
        for e, _ in self._terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        lc = self._terms[0][1]
        return Polynomial._from_sorted(self.ring, [(e, c / lc) for e, c in self._terms])

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PolynomialError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.constant(_as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self._dict)
        for e, c in other._terms:
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_sorted(self.ring, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                s = d.get(e, 0) + c1 * c2
                if s:
                    d[e] = s
                else:
                    d.pop(e, None)
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other) if not isinstance(other, Polynomial) else other.constant_value()
        if not c:
            raise ZeroDivisionError("division by zero")
        return Polynomial._from_sorted(self.ring, [(e, x / c) for e, x in self._terms])

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._terms))
        return self._hash

    # -- conversion ------------------------------------------------------
    def change_ring(self, ring: PolyRing, rename: Mapping[str, str] = None) -> "Polynomial":
        """Reinterpret in ``ring`` by variable name (optionally renamed).

        Variables of this ring that do not occur in ``self`` may be absent
        from ``ring``.
        """
        rename = rename or {}
        used = set(self.variables_used())
        idx = [ring.index(rename.get(n, n)) if n in used else -1 for n in self.ring.names]
        n = ring.nvars
        d = {}
        for e, c in self._terms:
            new = [0] * n
            for i, x in enumerate(e):
                if x:
                    new[idx[i]] += x
            d[tuple(new)] = c
        return Polynomial(ring, d)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ring={self.ring})"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# printing


def _format_monomial(names, exp):
    parts = []
    for n, e in zip(names, exp):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def _format_coeff(c: Fraction):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if not p._terms:
        return "0"
    out = []
    for i, (exp, c) in enumerate(p._terms):
        mono = _format_monomial(p.ring.names, exp)
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos, tokens = 0, []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            q = self.unary()
            if op[1] == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise self.error("division by a non-constant", op)
                if not q:
                    raise self.error("division by zero", op)
                p = p / q.constant_value()
        return p

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.constant(int(val))
        if kind == "name":
            if val not in self.ring:
                raise self.error(f"unknown variable {val!r}", tok)
            return self.ring.gen(val)
        if tok[:2] == ("op", "("):
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected token {val!r}", tok)


def parse(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` (integers, p/q, names, + - * ^ and parentheses)."""
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# operations


def weighted_degree(p: Polynomial):
    """Common weighted degree of the terms of ``p``.

    Returns ``None`` for the zero polynomial and raises
    :class:`NonHomogeneousError` (carrying two witness terms) when the terms
    have different weights.
    """
    if not p:
        return None
    ring = p.ring
    first_exp, first_c = p._terms[0]
    d = ring.weight_of(first_exp)
    for exp, c in p._terms[1:]:
        if ring.weight_of(exp) != d:
            w1 = Polynomial._from_sorted(ring, [(first_exp, first_c)])
            w2 = Polynomial._from_sorted(ring, [(exp, c)])
            raise NonHomogeneousError(p, (w1, w2))
    return d


def is_homogeneous(p: Polynomial) -> bool:
    try:
        weighted_degree(p)
    except NonHomogeneousError:
        return False
    return True


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial], target: PolyRing = None) -> Polynomial:
    """Ring-homomorphic image of ``p`` under ``variable -> polynomial``.

    Every variable of ``p.ring`` needs an image (a missing one raises
    :class:`PolynomialError` naming it).  ``target`` defaults to the ring of
    the images; plain numbers are accepted as constants.
    """
    images = []
    for name in p.ring.names:
        if name not in assignment:
            raise PolynomialError(f"no image given for variable {name!r}")
        images.append(assignment[name])
    if target is None:
        rings = {img.ring for img in images if isinstance(img, Polynomial)}
        if len(rings) > 1:
            raise PolynomialError("images live in different rings")
        if not rings:
            raise PolynomialError("cannot infer target ring; pass target=")
        (target,) = rings
    images = [img if isinstance(img, Polynomial) else target.constant(img) for img in images]
    for img in images:
        if img.ring != target:
            raise PolynomialError("images live in different rings")

    cache = [dict() for _ in images]

    def power(i, k):
        c = cache[i]
        if k not in c:
            c[k] = images[i] ** k
        return c[k]

    result: Dict[Exponent, Fraction] = {}
    for exp, coeff in p._terms:
        term = target.constant(coeff)
        for i, k in enumerate(exp):
            if k:
                term = term * power(i, k)
                if not term:
                    break
        for e, c in term._terms:
            s = result.get(e, 0) + c
            if s:
                result[e] = s
            else:
                result.pop(e, None)
    return Polynomial(target, result)


def evaluate(p: Polynomial, point: Mapping[str, Coefficient]) -> Fraction:
    """Exact value of ``p`` at a rational point (all variables assigned)."""
    values = []
    for name in p.ring.names:
        if name not in point:
            raise PolynomialError(f"no value given for variable {name!r}")
        values.append(_as_fraction(point[name]))
    total = Fraction(0)
    for exp, c in p._terms:
        v = c
        for x, k in zip(values, exp):
            if k:
                v *= x ** k
        total += v
    return total


def derivative(p: Polynomial, name: str) -> Polynomial:
    i = p.ring.index(name)
    d = {}
    for exp, c in p._terms:
        k = exp[i]
        if k:
            e = list(exp)
            e[i] = k - 1
            d[tuple(e)] = c * k
    return Polynomial(p.ring, d)


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational such as ``"3"``, ``"-2/5"``; floats are rejected."""
    s = str(text).strip()
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", s):
        raise PolynomialError(f"not an exact rational: {text!r}")
    value = Fraction(s)
    return value


def matrix_rank(rows: Sequence[Sequence[Coefficient]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    m = [[_as_fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
