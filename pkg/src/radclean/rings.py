"""Exact arithmetic in four families of commutative local rings.

Supported rings:

* ``ZMod(p, k)``       integers modulo p**k
* ``ZLocal(p)``        rationals whose denominator is coprime to p
* ``PAdic(p, prec)``   p-adic integers, exact modulo p**prec
* ``SeriesRing(R, m)`` truncated power series R[[x]] mod x**m over another
  local ring (nest for several variables)

Elements are immutable, carry a reference to their ring, and support the
usual operators.  Every element is either a unit or lies in the unique
maximal ideal (the Jacobson radical); ``is_unit`` and ``in_radical`` decide
which side of that dichotomy an element is on, exactly.

Ring specs have a textual form (``Zmod:4``, ``Zloc:3``, ``Padic:2:32``,
``Series(Zmod:4;8)``) parsed by :func:`parse_ring_spec`, and element
literals (``-7``, ``-1/5``, ``[0,2,1]``) parsed by :func:`parse_elem`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from math import gcd

from ._numtheory import as_prime_power, is_prime
from .errors import (
    DenominatorNotUnit,
    NotAUnit,
    ParseError,
    PrecisionMismatch,
    RingMismatch,
)

__all__ = [
    "Elem",
    "LocalRing",
    "ZMod",
    "ZLocal",
    "PAdic",
    "SeriesRing",
    "parse_ring_spec",
    "parse_elem",
]


class Elem:
    """One element of a local ring, in the canonical representation."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: "LocalRing", rep):
        self.ring = ring
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Elem):
            _check_same_ring(self.ring, other.ring)
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring._add(self.rep, o.rep))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring._sub(self.rep, o.rep))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring._sub(o.rep, self.rep))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring._mul(self.rep, o.rep))

    __rmul__ = __mul__

    def __neg__(self):
        return Elem(self.ring, self.ring._neg(self.rep))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Elem):
            return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __bool__(self):
        return self != self.ring.zero

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def in_radical(self) -> bool:
        return self.ring.in_radical(self)

    def inverse(self) -> "Elem":
        return self.ring.invert(self)

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"<{self} in {self.ring}>"


def _check_same_ring(r1: "LocalRing", r2: "LocalRing"):
    if r1 is r2 or r1 == r2:
        return
    if isinstance(r1, PAdic) and isinstance(r2, PAdic) and r1.p == r2.p:
        raise PrecisionMismatch(
            f"p-adic precisions differ: {r1.prec} vs {r2.prec}"
        )
    raise RingMismatch(f"elements of {r1} and {r2} cannot be mixed")


class LocalRing:
    """Abstract base: a commutative local ring with exact arithmetic."""

    family = "?"

    # subclasses define: _key(), spec(), from_int, elem, _add, _sub, _mul,
    # _neg, is_unit, _in_radical_direct, invert, format, _parse_at

    def _key(self):
        raise NotImplementedError

    def spec(self) -> str:
        """The textual ring spec, round-trips through parse_ring_spec."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, LocalRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return self.spec()

    def __repr__(self):
        return self.spec()

    @cached_property
    def zero(self) -> Elem:
        return self.from_int(0)

    @cached_property
    def one(self) -> Elem:
        return self.from_int(1)

    def in_radical(self, a: Elem) -> bool:
        direct = self._in_radical_direct(a)
        # Local-ring dichotomy: exactly one of unit / radical holds.
        assert direct == (not self.is_unit(a)), f"dichotomy broken for {a!r}"
        return direct

    def parse(self, text: str) -> Elem:
        value, end = self._parse_at(text, 0)
        end = _skip_ws(text, end)
        if end != len(text):
            raise ParseError("trailing characters after element", end)
        return value


_INT_RE = re.compile(r"-?\d+")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_int_at(text: str, i: int) -> tuple[int, int]:
    i = _skip_ws(text, i)
    m = _INT_RE.match(text, i)
    if not m:
        raise ParseError("expected an integer literal", i)
    return int(m.group()), m.end()


class _ResidueRing(LocalRing):
    """Common machinery for rings represented as residues mod p**e."""

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("exponent must be >= 1")
        self.p = p
        self.e = e
        self.modulus = p**e

    def from_int(self, n: int) -> Elem:
        return Elem(self, n % self.modulus)

    def elem(self, value) -> Elem:
        if isinstance(value, Elem):
            _check_same_ring(self, value.ring)
            return value
        return self.from_int(int(value))

    def _add(self, x, y):
        return (x + y) % self.modulus

    def _sub(self, x, y):
        return (x - y) % self.modulus

    def _mul(self, x, y):
        return x * y % self.modulus

    def _neg(self, x):
        return -x % self.modulus

    def is_unit(self, a: Elem) -> bool:
        return a.rep % self.p != 0

    def _in_radical_direct(self, a: Elem) -> bool:
        return a.rep % self.p == 0

    def invert(self, a: Elem) -> Elem:
        if a.rep % self.p == 0:
            raise NotAUnit(f"{a} is not invertible in {self}")
        return Elem(self, pow(a.rep, -1, self.modulus))

    def format(self, a: Elem) -> str:
        return str(a.rep)

    def _parse_at(self, text: str, i: int) -> tuple[Elem, int]:
        n, j = _parse_int_at(text, i)
        return self.from_int(n), j

    def elements(self):
        """All ring elements, ascending residue order."""
        for n in range(self.modulus):
            yield Elem(self, n)

    def units(self):
        return (a for a in self.elements() if a.rep % self.p != 0)

    def radical_elements(self):
        return (a for a in self.elements() if a.rep % self.p == 0)


class ZMod(_ResidueRing):
    """The finite local ring Z/p**k."""

    family = "Zmod"

    def __init__(self, p: int, k: int):
        super().__init__(p, k)
        self.k = k

    @classmethod
    def from_modulus(cls, m: int) -> "ZMod":
        pk = as_prime_power(m)
        if pk is None:
            raise ValueError(f"{m} is not a prime power")
        return cls(*pk)

    def _key(self):
        return ("Zmod", self.p, self.k)

    def spec(self) -> str:
        return f"Zmod:{self.modulus}"


class PAdic(_ResidueRing):
    """p-adic integers truncated to ``prec`` digits.

    Arithmetic is exact modulo p**prec.  Unit and radical tests depend only
    on the residue mod p, so they are exact at any precision.  Elements of
    different precisions never mix (PrecisionMismatch), there is no silent
    truncation.
    """

    family = "Padic"

    def __init__(self, p: int, prec: int):
        super().__init__(p, prec)
        self.prec = prec

    def _key(self):
        return ("Padic", self.p, self.prec)

    def spec(self) -> str:
        return f"Padic:{self.p}:{self.prec}"


class ZLocal(LocalRing):
    """The localization Z_(p): fractions with denominator coprime to p.

    Payloads are ``fractions.Fraction`` values, always in lowest terms with
    a positive denominator, so representations are canonical for free.
    """

    family = "Zloc"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def _key(self):
        return ("Zloc", self.p)

    def spec(self) -> str:
        return f"Zloc:{self.p}"

    def from_int(self, n: int) -> Elem:
        return Elem(self, Fraction(n))

    def elem(self, value) -> Elem:
        if isinstance(value, Elem):
            _check_same_ring(self, value.ring)
            return value
        if isinstance(value, tuple):
            value = Fraction(*value)
        else:
            value = Fraction(value)
        if value.denominator % self.p == 0:
            raise DenominatorNotUnit(
                f"denominator of {value} is divisible by {self.p}"
            )
        return Elem(self, value)

    def _add(self, x, y):
        return x + y

    def _sub(self, x, y):
        return x - y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def is_unit(self, a: Elem) -> bool:
        return a.rep.numerator % self.p != 0

    def _in_radical_direct(self, a: Elem) -> bool:
        return a.rep.numerator % self.p == 0

    def invert(self, a: Elem) -> Elem:
        if a.rep.numerator % self.p == 0:
            raise NotAUnit(f"{a} is not invertible in {self}")
        return Elem(self, 1 / a.rep)

    def format(self, a: Elem) -> str:
        f = a.rep
        if f.denominator == 1:
            return str(f.numerator)
        return f"{f.numerator}/{f.denominator}"

    def _parse_at(self, text: str, i: int) -> tuple[Elem, int]:
        n, j = _parse_int_at(text, i)
        k = _skip_ws(text, j)
        if k < len(text) and text[k] == "/":
            m = _INT_RE.match(text, _skip_ws(text, k + 1))
            if not m or m.group().startswith("-"):
                raise ParseError("expected an unsigned denominator", k + 1)
            d = int(m.group())
            if d == 0:
                raise ParseError("zero denominator", k + 1)
            if gcd(d, self.p) != 1:
                raise DenominatorNotUnit(
                    f"denominator {d} is divisible by {self.p}"
                )
            return self.elem((n, d)), m.end()
        return self.from_int(n), j


class SeriesRing(LocalRing):
    """Truncated power series base[[x]] mod x**order.

    Payloads are tuples of exactly ``order`` base-ring elements; arithmetic
    never looks past the truncation order.  Nesting series rings models
    several variables, innermost ring first.
    """

    family = "Series"

    def __init__(self, base: LocalRing, order: int):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        self.base = base
        self.order = order

    def _key(self):
        return ("Series", self.base._key(), self.order)

    def spec(self) -> str:
        return f"Series({self.base.spec()};{self.order})"

    def from_int(self, n: int) -> Elem:
        coeffs = (self.base.from_int(n),) + (self.base.zero,) * (self.order - 1)
        return Elem(self, coeffs)

    def elem(self, value) -> Elem:
        if isinstance(value, Elem):
            if value.ring == self:
                return value
            if value.ring == self.base:
                value = [value]
            else:
                _check_same_ring(self, value.ring)
        if isinstance(value, int):
            return self.from_int(value)
        coeffs = [self.base.elem(c) for c in value]
        if len(coeffs) > self.order:
            raise ValueError(
                f"{len(coeffs)} coefficients exceed truncation order {self.order}"
            )
        coeffs += [self.base.zero] * (self.order - len(coeffs))
        return Elem(self, tuple(coeffs))

    def _add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-a for a in x)

    def _mul(self, x, y):
        m = self.order
        out = [self.base.zero] * m
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j in range(m - i):
                yj = y[j]
                if yj:
                    out[i + j] = out[i + j] + xi * yj
        return tuple(out)

    def is_unit(self, a: Elem) -> bool:
        return a.rep[0].is_unit()

    def _in_radical_direct(self, a: Elem) -> bool:
        return a.rep[0].in_radical()

    def invert(self, a: Elem) -> Elem:
        if not a.rep[0].is_unit():
            raise NotAUnit(f"constant coefficient of {a} is not a unit")
        # Coefficientwise back-substitution against a.rep * out = 1.
        c0inv = a.rep[0].inverse()
        out = [c0inv]
        for k in range(1, self.order):
            acc = self.base.zero
            for i in range(1, k + 1):
                acc = acc + a.rep[i] * out[k - i]
            out.append(-c0inv * acc)
        return Elem(self, tuple(out))

    def format(self, a: Elem) -> str:
        return "[" + ",".join(self.base.format(c) for c in a.rep) + "]"

    def _parse_at(self, text: str, i: int) -> tuple[Elem, int]:
        i = _skip_ws(text, i)
        if i < len(text) and text[i] != "[":
            # Bare integers embed as constant series.
            n, j = _parse_int_at(text, i)
            return self.from_int(n), j
        if i >= len(text):
            raise ParseError("expected a series literal", i)
        coeffs = []
        j = _skip_ws(text, i + 1)
        if j < len(text) and text[j] == "]":
            raise ParseError("empty series literal", j)
        while True:
            c, j = self.base._parse_at(text, j)
            coeffs.append(c)
            j = _skip_ws(text, j)
            if j >= len(text):
                raise ParseError("unterminated series literal", j)
            if text[j] == "]":
                if len(coeffs) > self.order:
                    raise ParseError(
                        f"series literal has {len(coeffs)} coefficients, "
                        f"ring order is {self.order}",
                        i,
                    )
                return self.elem(coeffs), j + 1
            if text[j] != ",":
                raise ParseError("expected ',' or ']'", j)
            j += 1


def parse_ring_spec(text: str) -> LocalRing:
    """Parse ``Zmod:<p^k>``, ``Zloc:<p>``, ``Padic:<p>:<prec>`` or
    ``Series(<spec>;<order>)`` (nested for several variables)."""
    s = text.strip()
    try:
        if s.startswith("Series(") and s.endswith(")"):
            inner = s[len("Series(") : -1]
            depth = 0
            split = -1
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == ";" and depth == 0:
                    split = i
            if split < 0:
                raise ParseError(f"missing ';' in series spec {text!r}")
            base = parse_ring_spec(inner[:split])
            return SeriesRing(base, _positive_int(inner[split + 1 :], "order"))
        head, _, rest = s.partition(":")
        if head == "Zmod" and rest:
            return ZMod.from_modulus(_positive_int(rest, "modulus"))
        if head == "Zloc" and rest:
            return ZLocal(_positive_int(rest, "prime"))
        if head == "Padic" and rest:
            p_text, _, prec_text = rest.partition(":")
            if not prec_text:
                raise ParseError(f"Padic spec needs a precision: {text!r}")
            return PAdic(
                _positive_int(p_text, "prime"),
                _positive_int(prec_text, "precision"),
            )
    except ValueError as exc:
        raise ParseError(f"bad ring spec {text!r}: {exc}") from exc
    raise ParseError(f"unrecognized ring spec {text!r}")


def _positive_int(text: str, what: str) -> int:
    s = text.strip()
    if not s.isdigit():
        raise ParseError(f"expected a positive integer {what}, got {s!r}")
    return int(s)


def parse_elem(text: str, ring: LocalRing) -> Elem:
    """Parse one element literal in the given ring's grammar."""
    return ring.parse(text)
