"""Exact half-integer vectors.

Weights and coweights of the classical root systems live in lattices
generated by the standard basis of Z^n together with (1/2, ..., 1/2).
Every vector handled by this package therefore has coordinates with
denominator 1 or 2.  To keep all arithmetic in plain integers, a vector
is stored *doubled*: ``Vec((6, 6, 6, 0))`` is the vector (3, 3, 3, 0) and
``Vec((1, 1, 1, -1))`` is (1/2, 1/2, 1/2, -1/2).

Pairings are returned as :class:`fractions.Fraction`; a pairing of two
half-integer vectors has denominator dividing 4.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = int | Fraction


class Vec(tuple):
    """An exact vector with coordinates in (1/2)Z, stored as doubled integers.

    The tuple entries are the doubled coordinates.  Use :meth:`make` to
    build one from actual (half-)integer values and :attr:`coords` to read
    them back.  ``+``, ``-`` and ``*`` act coordinatewise (scalar ``*``
    only), unlike plain tuples.
    """

    __slots__ = ()

    def __new__(cls, doubled: Iterable[int]) -> "Vec":
        vals = tuple(doubled)
        if not all(isinstance(v, int) for v in vals):
            raise TypeError("doubled coordinates must be integers")
        return super().__new__(cls, vals)

    @classmethod
    def make(cls, values: Sequence[Rational | str]) -> "Vec":
        """Build a vector from exact values (ints, Fractions or strings)."""
        doubled = []
        for v in values:
            q = parse_rational(v) if isinstance(v, str) else Fraction(v)
            d = q * 2
            if d.denominator != 1:
                raise ValueError(f"coordinate {v} is not a half-integer")
            doubled.append(int(d))
        return cls(doubled)

    @classmethod
    def zero(cls, n: int) -> "Vec":
        return cls((0,) * n)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self)

    def __add__(self, other: "Vec") -> "Vec":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Vec(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Vec") -> "Vec":
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Vec(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self)

    def __mul__(self, k: int) -> "Vec":  # type: ignore[override]
        if not isinstance(k, int):
            raise TypeError("only integer scalars keep coordinates half-integral")
        return Vec(k * a for a in self)

    __rmul__ = __mul__

    def dot(self, other: "Vec") -> Fraction:
        """Exact bilinear pairing <e_i, e_j> = delta_ij."""
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Fraction(sum(a * b for a, b in zip(self, other)), 4)

    def is_integral(self) -> bool:
        return all(a % 2 == 0 for a in self)

    def is_half_odd(self) -> bool:
        """True when every coordinate lies in 1/2 + Z."""
        return all(a % 2 == 1 for a in self)

    def max_abs(self) -> Fraction:
        """Largest absolute coordinate value."""
        return Fraction(max((abs(a) for a in self), default=0), 2)

    def __repr__(self) -> str:
        return f"Vec({', '.join(format_rational(c) for c in self.coords)})"

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


def dot2(u: Sequence[int], v: Sequence[int]) -> int:
    """Dot product of doubled coordinate sequences (4x the true pairing)."""
    return sum(a * b for a, b in zip(u, v))


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Rational) -> str:
    """Render an exact rational as "p" or "p/q" (halves in practice)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(text: str | Sequence[Rational | str]) -> Vec:
    """Parse a comma-separated list of rationals, or a sequence, into a Vec."""
    if isinstance(text, str):
        parts = [p for p in text.split(",") if p.strip()]
        return Vec.make(parts)
    return Vec.make(text)


def format_vector(v: Vec) -> list[str]:
    """Serialize a vector as a list of exact rational strings."""
    return [format_rational(c) for c in v.coords]
