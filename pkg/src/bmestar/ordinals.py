"""Ordinal notations below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` terms with
strictly decreasing exponents and positive integer coefficients, so
``w^w + w*2 + 3`` is ``((w, 1), (1, 2), (0, 3))``.  Exponents are
themselves :class:`Ordinal` values.

Text syntax (whitespace is ignored)::

    ord      := term ("+" term)*
    term     := "w" ("^" exponent)? ("*" nat)? | nat
    exponent := nat | "w" ("^" exponent)? | "(" ord ")"

An exponent is an atom, so ``w^w + 1`` reads as ``(w^w) + 1`` and
``w^w^2`` as ``w^(w^2)``.
"""

from __future__ import annotations

import enum
from functools import total_ordering
from typing import Iterable, Tuple

Term = Tuple["Ordinal", int]


class Kind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


class OrdinalSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Term] = ()):
        terms = tuple((e, int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {e!r}")
            if c <= 0:
                raise ValueError("coefficients must be positive")
            if i and compare(terms[i - 1][0], e) <= 0:
                raise ValueError("exponents must be strictly decreasing")
        self.terms = terms
        self._hash = None

    @classmethod
    def from_int(cls, k: int) -> "Ordinal":
        if k < 0:
            raise ValueError("ordinals are non-negative")
        return ZERO if k == 0 else cls(((ZERO, k),))

    @classmethod
    def omega_power(cls, exponent: "Ordinal", coefficient: int = 1) -> "Ordinal":
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def kind(self) -> Kind:
        return classify(self)

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    def __add__(self, other: "Ordinal | int") -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        terms = list(self.terms)
        for e, c in other.terms:
            _absorb(terms, e, c)
        return Ordinal(terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_finite and int(self) == other
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(int(self)) if self.is_finite else hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_format_term(e, c) for e, c in self.terms)


def _absorb(terms: list, e: Ordinal, c: int) -> None:
    """Add ``w^e * c`` on the right of the CNF term list, in place."""
    while terms and compare(terms[-1][0], e) < 0:
        terms.pop()
    if terms and terms[-1][0] == e:
        terms[-1] = (e, terms[-1][1] + c)
    else:
        terms.append((e, c))


def _format_atom(e: Ordinal) -> str:
    if e.is_finite:
        return str(int(e))
    if len(e.terms) == 1 and e.terms[0][1] == 1:
        inner = e.terms[0][0]
        return "w" if inner == 1 else "w^" + _format_atom(inner)
    return f"({e})"


def _format_term(e: Ordinal, c: int) -> str:
    if e.is_zero:
        return str(c)
    base = "w" if e == 1 else "w^" + _format_atom(e)
    return base if c == 1 else f"{base}*{c}"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def classify(a: Ordinal) -> Kind:
    if not a.terms:
        return Kind.ZERO
    if a.terms[-1][0].is_zero:
        return Kind.SUCCESSOR
    return Kind.LIMIT


def pred(a: Ordinal) -> Ordinal:
    """The ordinal ``b`` with ``b + 1 == a``."""
    if classify(a) is not Kind.SUCCESSOR:
        raise ValueError(f"{a} is not a successor ordinal")
    *head, (e, c) = a.terms
    if c > 1:
        head.append((e, c - 1))
    return Ordinal(head)


def fundamental_sequence(lam: Ordinal, n: int) -> Ordinal:
    """The ``n``-th element of the standard fundamental sequence of ``lam``.

    Writing ``lam = beta + w^e``:

    * ``e = g + 1``: ``lam[n] = beta + w^g * n`` (``beta`` when ``n = 0``)
    * ``e`` a limit: ``lam[n] = beta + w^(e[n])``
    """
    if classify(lam) is not Kind.LIMIT:
        raise ValueError(f"{lam} is not a limit ordinal")
    if n < 0:
        raise ValueError("n must be non-negative")
    *head, (e, c) = lam.terms
    if c > 1:
        head.append((e, c - 1))
    beta = Ordinal(head)
    if classify(e) is Kind.SUCCESSOR:
        if n == 0:
            return beta
        return beta + Ordinal.omega_power(pred(e), n)
    return beta + Ordinal.omega_power(fundamental_sequence(e, n))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise OrdinalSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def ordinal(self) -> Ordinal:
        terms: list = []
        while True:
            e, c = self.term()
            if c:
                _absorb(terms, e, c)
            if not self.eat("+"):
                return Ordinal(terms)

    def term(self) -> Term:
        if self.eat("w"):
            e = self.exponent() if self.eat("^") else ONE
            c = 1
            if self.eat("*"):
                start = self.pos
                c = self.nat()
                if c == 0:
                    self.pos = start
                    self.error("coefficient must be positive")
            return e, c
        if self.peek().isdigit():
            return ZERO, self.nat()
        self.error("expected 'w' or a natural number")

    def exponent(self) -> Ordinal:
        if self.eat("("):
            o = self.ordinal()
            if not self.eat(")"):
                self.error("expected ')'")
            return o
        if self.eat("w"):
            inner = self.exponent() if self.eat("^") else ONE
            return Ordinal.omega_power(inner)
        if self.peek().isdigit():
            return Ordinal.from_int(self.nat())
        self.error("expected an exponent")


def parse_ordinal(text: str) -> Ordinal:
    """Parse an ordinal expression such as ``"w^w + w*2 + 3"``."""
    p = _Parser(text)
    o = p.ordinal()
    if p.peek():
        p.error("unexpected trailing input")
    return o
