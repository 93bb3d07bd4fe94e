"""Invariants and emptiness verdicts for linear systems ``L(d, n, m)``.

``L(d, n, m)`` is the system of degree-``d`` plane curves with
multiplicity at least ``m`` at ``n`` general points.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .bounds import NSplit, bound_matrix, c1, c2, split_n
from .exactnum import binom, fmt_rational, parse_rational

__all__ = [
    "LinearSystem",
    "InvariantRow",
    "Verdict",
    "EMPTY_SQUARE",
    "EMPTY_THM1",
    "EMPTY_MAIN_THM",
    "EMPTY_REFINEMENT",
    "UNDECIDED",
    "TABLE_COLUMNS",
    "virtual_dimension",
    "kappa",
    "invariants",
    "chi_additivity",
    "classify",
    "sharp_flat",
]

EMPTY_SQUARE = "EmptySquare"
EMPTY_THM1 = "EmptyThm1"
EMPTY_MAIN_THM = "EmptyMainThm"
EMPTY_REFINEMENT = "EmptyRefinement"
UNDECIDED = "Undecided"
STATUSES = (EMPTY_SQUARE, EMPTY_THM1, EMPTY_MAIN_THM, EMPTY_REFINEMENT, UNDECIDED)

TABLE_COLUMNS = ("d", "n", "m", "chi_p2", "mu", "epsilon", "b", "mhat", "chi_s", "gamma", "kappa")

# kappa_n = a*d - b*m - c, valid for nonempty L(d, n, m) with 3 not dividing d
KAPPA_COEFFS = {10: (721, 2280, 60), 11: (199, 660, 33), 12: (97, 336, 24)}


@dataclass(frozen=True)
class LinearSystem:
    d: int
    n: int
    m: int

    def __post_init__(self):
        for name in ("d", "n", "m"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")

    def __str__(self):
        return f"L({self.d},{self.n},{self.m})"


def virtual_dimension(d: int, n: int, m: int) -> int:
    return d * (d + 3) // 2 - n * (m * (m + 1) // 2)


def kappa(d: int, n: int, m: int) -> Optional[int]:
    if n not in KAPPA_COEFFS:
        return None
    a, b, c = KAPPA_COEFFS[n]
    return a * d - b * m - c


def _genus(k: int) -> int:
    return (k - 1) * (k - 2) // 2


def _chi_s(mu: int, b: int, mhat: int, ns: NSplit) -> Fraction:
    g = _genus(ns.k)
    return (mu + 1) * (Fraction(ns.alpha, 2) * mu - b - g + 1) - ns.n * binom_signed(mhat + 1, 2)


def binom_signed(a: int, b: int) -> int:
    """``a(a-1).../b!`` as a polynomial in ``a``; agrees with ``binom`` for ``a >= 0``.

    The Euler characteristic formula is polynomial, so negative ``mhat``
    (which arises for arbitrary ``mu``) must use the polynomial extension.
    """
    if a >= 0:
        return binom(a, b)
    num = 1
    for i in range(b):
        num *= a - i
    return num // math.factorial(b)


@dataclass(frozen=True)
class InvariantRow:
    d: int
    n: int
    m: int
    v: int
    chi_p2: int
    mu: Optional[int] = None
    epsilon: Optional[int] = None
    b: Optional[int] = None
    mhat: Optional[int] = None
    g: Optional[int] = None
    chi_s: Optional[Fraction] = None
    gamma: Optional[Fraction] = None
    kappa: Optional[int] = None

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("chi_s", "gamma"):
            if out[key] is not None:
                out[key] = fmt_rational(out[key])
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantRow":
        data = dict(data)
        for key in ("chi_s", "gamma"):
            if data.get(key) is not None:
                data[key] = parse_rational(str(data[key]))
        return cls(**data)

    def table_row(self) -> list[str]:
        """Cells in table column order; rationals as ``p/q``, missing as ``""``."""
        cells = []
        for col in TABLE_COLUMNS:
            value = getattr(self, col)
            if value is None:
                cells.append("")
            elif isinstance(value, Fraction):
                cells.append(fmt_rational(value))
            else:
                cells.append(str(value))
        return cells


def invariants(ls: LinearSystem) -> InvariantRow:
    """Full invariant ledger of ``L(d, n, m)``.

    For square ``n`` only ``v`` and ``chi_p2`` are defined; the remaining
    fields stay ``None``.
    """
    d, n, m = ls.d, ls.n, ls.m
    v = virtual_dimension(d, n, m)
    k = math.isqrt(n)
    if k * k == n:
        return InvariantRow(d=d, n=n, m=m, v=v, chi_p2=v + 1)
    ns = split_n(n)
    mu = d // k
    epsilon = d - k * mu
    b = n * m - k * d
    mhat = mu - m
    chi_s = _chi_s(mu, b, mhat, ns)
    assert chi_s.denominator == 1
    m2 = bound_matrix(ns, 2)
    gamma = m2.p * m - m2.r * d
    return InvariantRow(
        d=d, n=n, m=m, v=v, chi_p2=v + 1,
        mu=mu, epsilon=epsilon, b=b, mhat=mhat, g=_genus(k),
        chi_s=chi_s, gamma=gamma, kappa=kappa(d, n, m),
    )


def chi_additivity(ls: LinearSystem, mu: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Euler characteristic splitting for an arbitrary ``mu``.

    lhs is ``chi(L_P2(d, n, m)) = v + 1``; rhs is
    ``chi_S(mu, b, mhat) + chi(O_P2(eps)) - chi(O_C(eps))`` with
    ``eps = d - k*mu``, ``mhat = mu - m``, ``b = n*m - k*d``.
    """
    ns = split_n(ls.n)
    k = ns.k
    epsilon = ls.d - k * mu
    b = ls.n * ls.m - k * ls.d
    mhat = mu - ls.m
    lhs = Fraction(virtual_dimension(ls.d, ls.n, ls.m) + 1)
    chi_plane = Fraction((epsilon + 1) * (epsilon + 2), 2)
    chi_curve = epsilon * k + 1 - _genus(k)
    rhs = _chi_s(mu, b, mhat, ns) + chi_plane - chi_curve
    return lhs, rhs


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: str
    fired: tuple[str, ...] = ()

    @property
    def empty(self) -> bool:
        return self.status != UNDECIDED

    def to_dict(self) -> dict:
        return {"status": self.status, "witness": self.witness}

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        if data["status"] not in STATUSES:
            raise ValueError(f"unknown verdict status {data['status']!r}")
        return cls(status=data["status"], witness=data["witness"])


def classify(ls: LinearSystem) -> Verdict:
    """Decide emptiness of ``L(d, n, m)`` from the proven slope bounds.

    Certificates are tried strongest first (square case, the kappa
    refinement, the level-2 bound, the level-1 bound) and the first that
    fires becomes the status; every certificate that fires is listed in
    the witness.
    """
    d, n, m = ls.d, ls.n, ls.m
    k = math.isqrt(n)
    fired: list[tuple[str, str]] = []

    if k * k == n:
        if d < k * m:
            fired.append((EMPTY_SQUARE, f"d - k*m = {d} - {k}*{m} = {d - k * m} < 0"))
    else:
        ns = split_n(n)
        if ns.refinement_applies and d % 3 != 0:
            kap = kappa(d, n, m)
            if kap < 0:
                a, b, c = KAPPA_COEFFS[n]
                fired.append((EMPTY_REFINEMENT,
                              f"kappa_{n} = {a}*{d} - {b}*{m} - {c} = {kap} < 0 and 3 does not divide {d}"))
        for status, applies, level, const in (
            (EMPTY_MAIN_THM, ns.main_thm_applies, 4, c2),
            (EMPTY_THM1, ns.thm1_applies, 2, c1),
        ):
            if not applies:
                continue
            bm = bound_matrix(ns, level)
            lhs = bm.p * d - bm.q * m
            if lhs < 0:
                fired.append((status, f"{fmt_rational(bm.p)}*{d} - {fmt_rational(bm.q)}*{m} = "
                                      f"{fmt_rational(lhs)} < 0 (d/m < {fmt_rational(const(ns))})"))

    if fired:
        witness = "; ".join(f"{s}: {w}" for s, w in fired)
        return Verdict(status=fired[0][0], witness=witness, fired=tuple(s for s, _ in fired))
    v = virtual_dimension(d, n, m)
    return Verdict(status=UNDECIDED, witness=f"no emptiness certificate applies (v = {v})")


def sharp_flat(d, n: int, m) -> tuple[Fraction, Fraction]:
    """Upper and lower bounds on the multiplicity along the degenerate curve.

    Returns ``(d*alpha/(2*k*n), 2*gamma)``.  The first bounds the
    weighted multiplicity from above via the numerical class, the second
    from below via the conormal-bundle slope, so ``sharp < flat`` is
    exactly the level-2 emptiness condition ``p4*d - q4*m < 0``.
    ``d`` and ``m`` are taken as plain numbers so the zero system is allowed.
    """
    ns = split_n(n)
    if not ns.main_thm_applies:
        raise ValueError(f"the level-2 bound does not cover n = {n}")
    d, m = Fraction(d), Fraction(m)
    m2 = bound_matrix(ns, 2)
    sharp = d * ns.alpha / (2 * ns.k * ns.n)
    flat = 2 * (m2.p * m - m2.r * d)
    return sharp, flat
