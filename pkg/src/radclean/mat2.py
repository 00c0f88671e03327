"""2x2 matrices over a local ring: arithmetic, characteristic data,
membership in GL2 and in the radical of the matrix ring, and the
elementary matrices used by the companion-form normalization.

The radical of the full matrix ring over a commutative ring is entrywise:
a matrix lies in J(M2(R)) exactly when all four entries lie in J(R).
Matrices act by left multiplication on column vectors throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertible, ParseError, RingMismatch
from .rings import Elem, LocalRing

__all__ = [
    "Mat2",
    "MonicQuadratic",
    "char_data",
    "conjugate",
    "b12",
    "b21",
    "diag",
    "identity",
    "zero",
    "parse_matrix",
    "format_matrix",
]


class Mat2:
    """Row-major [[a, b], [c, d]] with all entries in one ring."""

    __slots__ = ("ring", "a", "b", "c", "d")

    def __init__(self, ring: LocalRing, a: Elem, b: Elem, c: Elem, d: Elem):
        for entry in (a, b, c, d):
            if entry.ring is not ring and entry.ring != ring:
                raise RingMismatch(
                    f"entry {entry!r} does not belong to {ring}"
                )
        self.ring = ring
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @classmethod
    def from_rows(cls, ring: LocalRing, rows) -> "Mat2":
        (a, b), (c, d) = rows
        e = ring.elem
        return cls(ring, e(a), e(b), e(c), e(d))

    def entries(self) -> tuple[Elem, Elem, Elem, Elem]:
        return (self.a, self.b, self.c, self.d)

    def _check(self, other: "Mat2"):
        if self.ring != other.ring:
            raise RingMismatch(f"matrices over {self.ring} and {other.ring}")

    def __add__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(
            self.ring,
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.d + other.d,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(
            self.ring,
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(self.ring, -self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(
            self.ring,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __rmul__(self, scalar) -> "Mat2":
        return self.scale(self.ring.elem(scalar))

    def scale(self, s: Elem) -> "Mat2":
        return Mat2(self.ring, s * self.a, s * self.b, s * self.c, s * self.d)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.ring == other.ring and self.entries() == other.entries()

    def __hash__(self):
        return hash((self.ring, self.entries()))

    def trace(self) -> Elem:
        return self.a + self.d

    def det(self) -> Elem:
        return self.a * self.d - self.b * self.c

    def char_poly(self) -> "MonicQuadratic":
        return MonicQuadratic(self.ring, -self.trace(), self.det())

    def is_gl2(self) -> bool:
        return self.det().is_unit()

    def in_radical(self) -> bool:
        return all(entry.in_radical() for entry in self.entries())

    def inverse(self) -> "Mat2":
        det = self.det()
        if not det.is_unit():
            raise NotInvertible(f"det {det} is not a unit")
        inv = det.inverse()
        return Mat2(
            self.ring, inv * self.d, -(inv * self.b), -(inv * self.c), inv * self.a
        )

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"<[{self}] over {self.ring}>"


@dataclass(frozen=True)
class MonicQuadratic:
    """The polynomial t**2 + mu*t + lam.

    The characteristic polynomial of A is stored with mu = -tr(A) and
    lam = det(A).
    """

    ring: LocalRing
    mu: Elem
    lam: Elem

    def eval_at(self, t: Elem) -> Elem:
        return (t + self.mu) * t + self.lam

    def discriminant(self) -> Elem:
        return self.mu * self.mu - 4 * self.lam

    def __str__(self):
        return f"t^2 + ({self.mu})t + ({self.lam})"


def char_data(A: Mat2) -> tuple[Elem, Elem, MonicQuadratic]:
    """(trace, determinant, characteristic polynomial) of A."""
    return A.trace(), A.det(), A.char_poly()


def identity(ring: LocalRing) -> Mat2:
    return diag(ring.one, ring.one)


def zero(ring: LocalRing) -> Mat2:
    z = ring.zero
    return Mat2(ring, z, z, z, z)


def diag(x: Elem, y: Elem) -> Mat2:
    ring = x.ring
    z = ring.zero
    return Mat2(ring, x, z, z, ring.elem(y))


def b12(a: Elem) -> Mat2:
    """Upper elementary matrix [[1, a], [0, 1]]; inverse is b12(-a)."""
    ring = a.ring
    return Mat2(ring, ring.one, a, ring.zero, ring.one)


def b21(a: Elem) -> Mat2:
    """Lower elementary matrix [[1, 0], [a, 1]]; inverse is b21(-a)."""
    ring = a.ring
    return Mat2(ring, ring.one, ring.zero, a, ring.one)


def conjugate(P: Mat2, A: Mat2) -> Mat2:
    """P * A * P**-1; P must be invertible."""
    return P * A * P.inverse()


def parse_matrix(text: str, ring: LocalRing) -> Mat2:
    """Parse "a,b;c,d" with entries in the ring's element grammar.

    Splitting on ',' and ';' ignores separators inside series brackets.
    """
    rows = []
    row: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ']'", i)
        elif depth == 0 and ch in ",;":
            row.append(text[start:i])
            start = i + 1
            if ch == ";":
                rows.append(row)
                row = []
    row.append(text[start:])
    rows.append(row)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ParseError(
            f"matrix literal must be 'a,b;c,d', got {len(rows)} row(s) "
            f"of sizes {[len(r) for r in rows]}"
        )
    entries = [ring.parse(cell.strip()) for r in rows for cell in r]
    return Mat2(ring, *entries)


def format_matrix(A: Mat2) -> str:
    f = A.ring.format
    return f"{f(A.a)},{f(A.b)};{f(A.c)},{f(A.d)}"
