"""Exact rational numbers, 2x2 rational matrices and binomial coefficients.

``Rational`` is :class:`fractions.Fraction`: unbounded integers, always
stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "Mat2",
    "as_rational",
    "fmt_rational",
    "parse_rational",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_cmp",
    "mat2_mul",
    "mat2_pow",
    "mat2_scale",
    "binom",
]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: nothing in this package may pass through binary
    floating point.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fmt_rational(x) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q == 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def rat_add(x, y) -> Fraction:
    return as_rational(x) + as_rational(y)


def rat_sub(x, y) -> Fraction:
    return as_rational(x) - as_rational(y)


def rat_mul(x, y) -> Fraction:
    return as_rational(x) * as_rational(y)


def rat_div(x, y) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when ``y == 0``."""
    y = as_rational(y)
    if y == 0:
        raise ZeroDivisionError("rational division by zero")
    return as_rational(x) / y


def rat_cmp(x, y) -> int:
    """Three-way comparison: -1, 0 or 1."""
    x, y = as_rational(x), as_rational(y)
    return (x > y) - (x < y)


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix ``[[a, b], [c, d]]`` with rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat2_mul(self, other)


IDENTITY = Mat2(1, 0, 0, 1)


def mat2_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat2_pow(x: Mat2, i: int) -> Mat2:
    """``x**i`` for ``i >= 1`` by binary powering."""
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"matrix power must be a positive integer, got {i!r}")
    result = None
    base = x
    while i:
        if i & 1:
            result = base if result is None else mat2_mul(result, base)
        i >>= 1
        if i:
            base = mat2_mul(base, base)
    return result


def mat2_scale(x: Mat2, s) -> Mat2:
    s = as_rational(s)
    return Mat2(x.a * s, x.b * s, x.c * s, x.d * s)


def binom(a: int, b: int) -> int:
    """C(a, b) for nonnegative integers; 0 when ``b > a``."""
    if a < 0 or b < 0:
        raise ValueError("binom is defined here for nonnegative arguments only")
    return math.comb(a, b)
