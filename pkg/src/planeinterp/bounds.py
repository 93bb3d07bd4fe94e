"""Degree bounds for plane curves through fat points.

For a non-square ``n = k**2 + alpha`` with ``k = isqrt(n)`` the powers of
``M1 = [[k, n], [1, k]]``, rescaled by ``alpha**-(i // 2)``, give the
matrices ``M_i = [[p_i, q_i], [r_i, p_i]]``.  Their ratios ``q_i / p_i``
approximate ``sqrt(n)`` from below and

* ``c1(n) = q_2 / p_2 = k + 1/(2k/alpha + 1/k)``
* ``c2(n) = q_4 / p_4 = k + 1/(2k/alpha + 1/(2k + 1/(2k/alpha + 1/k)))``

are the slopes below which ``L(d, n, m)`` must be empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import Mat2, as_rational, fmt_rational, mat2_pow, mat2_scale

__all__ = [
    "SquareN",
    "NSplit",
    "BoundMatrix",
    "split_n",
    "bound_matrix",
    "c1",
    "c2",
    "cf_coefficients",
    "cf_expand",
    "lemmaB_check",
]

MAIN_THM_SPECIAL_N = frozenset({8, 10, 12})
REFINEMENT_N = frozenset({10, 11, 12})


class SquareN(ValueError):
    """Raised when a bound is requested for a perfect square ``n``."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"n = {n} is a perfect square ({math.isqrt(n)}^2); the bounds are undefined")


@dataclass(frozen=True)
class NSplit:
    n: int
    k: int
    alpha: int
    thm1_applies: bool
    main_thm_applies: bool
    refinement_applies: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alpha": self.alpha,
            "c1": fmt_rational(c1(self)),
            "c2": fmt_rational(c2(self)),
            "thm1_applies": self.thm1_applies,
            "main_thm_applies": self.main_thm_applies,
            "refinement_applies": self.refinement_applies,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NSplit":
        ns = split_n(int(data["n"]))
        for key in ("k", "alpha", "thm1_applies", "main_thm_applies", "refinement_applies"):
            if key in data and data[key] != getattr(ns, key):
                raise ValueError(f"inconsistent {key} for n = {ns.n}: {data[key]!r}")
        return ns


@dataclass(frozen=True)
class BoundMatrix:
    level: int
    p: Fraction
    q: Fraction
    r: Fraction
    det: Fraction

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.p, self.q, self.r, self.p)


def split_n(n: int) -> NSplit:
    """Write ``n = k**2 + alpha`` and record which theorems cover ``n``.

    Raises :class:`SquareN` if ``n`` is a perfect square.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    k = math.isqrt(n)
    alpha = n - k * k
    if alpha == 0:
        raise SquareN(n)
    even = alpha % 2 == 0
    return NSplit(
        n=n,
        k=k,
        alpha=alpha,
        thm1_applies=even or k >= 3,
        main_thm_applies=n in MAIN_THM_SPECIAL_N or (k >= 3 and even and (2 * n) % alpha == 0),
        refinement_applies=n in REFINEMENT_N,
    )


def _as_split(ns) -> NSplit:
    return ns if isinstance(ns, NSplit) else split_n(ns)


def bound_matrix(ns, level: int) -> BoundMatrix:
    """``M_level = alpha**-(level // 2) * M1**level``."""
    if not isinstance(level, int) or level < 1:
        raise ValueError(f"level must be a positive integer, got {level!r}")
    return _bound_matrix(_as_split(ns), level)


@lru_cache(maxsize=4096)
def _bound_matrix(ns: NSplit, level: int) -> BoundMatrix:
    m1 = Mat2(ns.k, ns.n, 1, ns.k)
    m = mat2_scale(mat2_pow(m1, level), Fraction(1, ns.alpha ** (level // 2)))
    assert m.a == m.d, "M_i must have equal diagonal entries"
    return BoundMatrix(level=level, p=m.a, q=m.b, r=m.c, det=m.det)


def c1(ns) -> Fraction:
    m = bound_matrix(ns, 2)
    return m.q / m.p


def c2(ns) -> Fraction:
    m = bound_matrix(ns, 4)
    return m.q / m.p


def cf_coefficients(ns, level: int) -> list[Fraction]:
    """Palindromic partial quotients: ``[k, 2k/a, k]`` or ``[k, 2k/a, 2k, 2k/a, k]``."""
    ns = _as_split(ns)
    k = Fraction(ns.k)
    t = Fraction(2 * ns.k, ns.alpha)
    if level == 1:
        return [k, t, k]
    if level == 2:
        return [k, t, 2 * k, t, k]
    raise ValueError(f"continued fraction level must be 1 or 2, got {level!r}")


def cf_expand(ns, level: int) -> Fraction:
    """Evaluate the level-1 or level-2 continued fraction, innermost term first."""
    coeffs = cf_coefficients(ns, level)
    value = coeffs[-1]
    for a in reversed(coeffs[:-1]):
        value = a + 1 / value
    return value


def lemmaB_check(ns, d, m, part: str) -> tuple[bool, bool]:
    """Evaluate both sides of the equivalence linking the local and global inequalities.

    part ``"a"``: ``(alpha/2)(d/p1) >= q1*m - p1*d``  vs  ``p2*d - q2*m >= 0``;
    part ``"b"``: ``(1/2)(d/q2) >= p2*m - r2*d``      vs  ``p4*d - q4*m >= 0``.

    ``d`` and ``m`` may be arbitrary rationals.  The two booleans always agree.
    """
    ns = _as_split(ns)
    d, m = as_rational(d), as_rational(m)
    if part == "a":
        m1, m2 = bound_matrix(ns, 1), bound_matrix(ns, 2)
        lhs = Fraction(ns.alpha, 2) * (d / m1.p) >= m1.q * m - m1.p * d
        rhs = m2.p * d - m2.q * m >= 0
    elif part == "b":
        m2, m4 = bound_matrix(ns, 2), bound_matrix(ns, 4)
        lhs = Fraction(1, 2) * (d / m2.q) >= m2.p * m - m2.r * d
        rhs = m4.p * d - m4.q * m >= 0
    else:
        raise ValueError(f"part must be 'a' or 'b', got {part!r}")
    return lhs, rhs
