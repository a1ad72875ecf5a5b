"""Exact sparse multivariate polynomials over the rationals.

Coefficients are ``gmpy2.mpq`` values (always reduced, positive
denominator).  Exponent vectors are dense tuples of length ``arity``.
Polynomials are immutable; every operation returns a new object.
"""
from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq, mpz

from . import kernels

MAX_ARITY = 8

Monomial = tuple  # tuple[int, ...]

_SCALARS = (int, Fraction, type(mpq(0)), type(mpz(0)))


class ArityError(ValueError):
    pass


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    pass


def to_rational(value) -> mpq:
    """Coerce int / Fraction / mpq / 'p/q' string to an exact rational."""
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def grlex_key(mono: Monomial):
    """Sort key: ascending graded-lex, x1 > x2 > ... within a degree."""
    return (sum(mono), mono)


def monomials_below(arity: int, degree: int) -> list[Monomial]:
    """All monomials of total degree < ``degree``, grlex ascending."""
    out: list[Monomial] = []
    for d in range(max(degree, 0)):
        out.extend(monomials_of_degree(arity, d))
    return out


def monomials_of_degree(arity: int, d: int) -> list[Monomial]:
    if arity == 0:
        return [()] if d == 0 else []
    if arity == 1:
        return [(d,)]
    out = []
    # ascending lex inside the degree: the first exponent grows last
    for first in range(d + 1):
        for rest in monomials_of_degree(arity - 1, d - first):
            out.append((first,) + rest)
    out.sort()
    return out


def _check_arity(arity: int) -> None:
    if not 0 <= arity <= MAX_ARITY:
        raise ArityError(f"arity must be between 0 and {MAX_ARITY}, got {arity}")


class Polynomial:
    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping | Iterable = ()):
        _check_arity(arity)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for mono, coef in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != arity or any(e < 0 for e in mono):
                raise ArityError(f"bad exponent vector {mono} for arity {arity}")
            c = clean.get(mono, 0) + to_rational(coef)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.arity = arity
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.arity = arity
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value, arity: int) -> "Polynomial":
        _check_arity(arity)
        c = to_rational(value)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        _check_arity(arity)
        return cls._raw(arity, {})

    @classmethod
    def variable(cls, index: int, arity: int) -> "Polynomial":
        if not 0 <= index < arity:
            raise ArityError(f"variable index {index} out of range for arity {arity}")
        e = [0] * arity
        e[index] = 1
        return cls._raw(arity, {tuple(e): mpq(1)})

    @classmethod
    def monomial(cls, mono: Sequence[int], coef=1) -> "Polynomial":
        return cls(len(mono), {tuple(mono): coef})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def order(self) -> int | None:
        """Smallest total degree of a term (None for zero)."""
        return min((sum(m) for m in self._terms), default=None)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self._terms), default=-1)

    def constant_term(self) -> mpq:
        return self._terms.get((0,) * self.arity, mpq(0))

    def coefficient(self, mono: Sequence[int]) -> mpq:
        return self._terms.get(tuple(mono), mpq(0))

    def leading_monomial(self) -> Monomial:
        return max(self._terms, key=grlex_key)

    def sorted_terms(self, descending: bool = True):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.arity != self.arity:
                raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, _SCALARS):
            return Polynomial.constant(other, self.arity)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.arity, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, _SCALARS):
                return self.scale(other)
            return NotImplemented
        self._coerce(other)
        return Polynomial._raw(self.arity, kernels.mul_terms(self._terms, other._terms, -1))

    __rmul__ = __mul__

    def mul_truncated(self, other: "Polynomial", degree: int) -> "Polynomial":
        """Product with every term of total degree >= ``degree`` dropped."""
        self._coerce(other)
        return Polynomial._raw(self.arity, kernels.mul_terms(self._terms, other._terms, degree))

    def scale(self, value) -> "Polynomial":
        c = to_rational(value)
        if not c:
            return Polynomial.zero(self.arity)
        return Polynomial._raw(self.arity, {m: c * v for m, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self == Polynomial.constant(other, self.arity)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution --------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative in variable ``index`` (0-based)."""
        if not 0 <= index < self.arity:
            raise ArityError(f"variable index {index} out of range for arity {self.arity}")
        out = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                mm = m[:index] + (e - 1,) + m[index + 1:]
                out[mm] = c * e
        return Polynomial._raw(self.arity, out)

    def evaluate(self, point: Sequence) -> mpq:
        if len(point) != self.arity:
            raise ArityError(f"point has {len(point)} coordinates, polynomial arity is {self.arity}")
        vals = [to_rational(v) for v in point]
        powers: list[dict[int, mpq]] = [{} for _ in vals]
        total = mpq(0)
        for m, c in self._terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    pw = cache.get(e)
                    if pw is None:
                        pw = cache[e] = vals[i] ** e
                    t *= pw
            total += t
        return total

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every term of total degree greater than ``degree``."""
        return Polynomial._raw(self.arity, {m: c for m, c in self._terms.items() if sum(m) <= degree})

    def specialize(self, index: int, value) -> "Polynomial":
        """Substitute a rational for variable ``index`` and remove that variable."""
        v = to_rational(value)
        out: dict = {}
        for m, c in self._terms.items():
            mm = m[:index] + m[index + 1:]
            t = out.get(mm, 0) + c * v ** m[index]
            if t:
                out[mm] = t
            else:
                out.pop(mm, None)
        return Polynomial._raw(self.arity - 1, out)

    def embed(self, arity: int, positions: Sequence[int] | None = None) -> "Polynomial":
        """View this polynomial in a larger ring; variable i goes to ``positions[i]``."""
        if positions is None:
            positions = range(self.arity)
        positions = list(positions)
        out = {}
        for m, c in self._terms.items():
            e = [0] * arity
            for i, p in enumerate(positions):
                e[p] = m[i]
            out[tuple(e)] = c
        return Polynomial(arity, out)

    def divide_by_variable(self, index: int, power: int = 1) -> "Polynomial":
        """Exact division by x_index**power; raises if not divisible."""
        out = {}
        for m, c in self._terms.items():
            if m[index] < power:
                raise ArithmeticError("polynomial is not divisible by the requested variable power")
            out[m[:index] + (m[index] - power,) + m[index + 1:]] = c
        return Polynomial._raw(self.arity, out)

    def collect(self, index: int) -> dict[int, "Polynomial"]:
        """Split into coefficients of powers of variable ``index`` (that variable removed)."""
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(m[index], {})[m[:index] + m[index + 1:]] = c
        return {k: Polynomial._raw(self.arity - 1, v) for k, v in parts.items()}

    # text ------------------------------------------------------------------

    def format(self, variables: Sequence[str] | None = None) -> str:
        names = list(variables) if variables is not None else default_names(self.arity)
        if len(names) != self.arity:
            raise ArityError("variable name list does not match arity")
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.arity}, {self.format()!r})"


def default_names(arity: int) -> list[str]:
    if arity <= 3:
        return ["x", "y", "z"][:arity]
    return [f"x{i + 1}" for i in range(arity)]


# module-level operations -----------------------------------------------------

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001 - mirrors the ring operation name
    return p ** k


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    return p.diff(index)


def evaluate(p: Polynomial, point: Sequence) -> mpq:
    return p.evaluate(point)


def truncate(p: Polynomial, degree: int) -> Polynomial:
    return p.truncate(degree)


# parsing -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.arity = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        tok = self.take()
        if tok[0] != "op" or tok[1] != ch:
            raise PolynomialSyntaxError(f"expected {ch!r}", tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", 0)
        p = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expression(self) -> Polynomial:
        p = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.factor()
            return -p if tok[1] == "-" else p
        base = self.primary()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "int":
                raise PolynomialSyntaxError("exponent must be a nonnegative integer", t[2])
            base = base ** int(t[1])
        return base

    def primary(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            num = int(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                t = self.take()
                if t[0] != "int" or int(t[1]) == 0:
                    raise PolynomialSyntaxError("denominator must be a positive integer", t[2])
                return Polynomial.constant(mpq(num, int(t[1])), self.arity)
            return Polynomial.constant(num, self.arity)
        if kind == "name":
            if val not in self.index:
                raise UnknownVariableError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.index[val], self.arity)
        if kind == "op" and val == "(":
            p = self.expression()
            self.expect_op(")")
            return p
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", pos)
        raise PolynomialSyntaxError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` as a polynomial in the ordered ``variables``."""
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(text, variables).parse()


def format_poly(p: Polynomial, variables: Sequence[str] | None = None) -> str:
    return p.format(variables)
