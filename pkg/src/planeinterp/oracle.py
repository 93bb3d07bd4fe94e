"""Finite-field rank oracle for ``h0(L(d, n, m))``.

The conditions "multiplicity >= m at P" are the vanishing of the Hasse
derivatives ``D^(i,j) f(P)`` for ``i + j < m``.  For the monomial
``x^a y^b z^(d-a-b)`` at an affine point ``(x0, y0, 1)``::

    D^(i,j) = C(a, i) C(b, j) x0^(a-i) y0^(b-j)

which is correct in every characteristic, so the prime need not exceed
``d``.  ``h0`` at random points over ``F_p`` is never smaller than the
generic value in characteristic zero, which makes the certificates
one-sided: ``h0 == 0`` proves emptiness and ``h0 == max(0, v+1)`` proves
non-speciality.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from numba import njit
from sympy import isprime

from .exactnum import binom
from .linsys import LinearSystem, virtual_dimension

__all__ = [
    "DEFAULT_PRIME",
    "DEFAULT_SECOND_PRIME",
    "DEFAULT_BUDGET",
    "MAX_PRIME",
    "BudgetExceeded",
    "DuplicatePoints",
    "OracleConfig",
    "RankCertificate",
    "CERTIFIED_EMPTY",
    "CERTIFIED_NONSPECIAL",
    "SPECIAL_SUSPECTED",
    "INCONCLUSIVE",
    "monomial_exponents",
    "build_conditions",
    "rank_modp",
    "sample_points",
    "h0_at_points",
    "certify",
]

log = logging.getLogger(__name__)

# Elimination keeps entries below 2**31 so every product fits in int64.
MAX_PRIME = 2**31 - 1
DEFAULT_PRIME = 2**31 - 1  # Mersenne prime M31
DEFAULT_SECOND_PRIME = 2**31 - 19
DEFAULT_BUDGET = 20000

CERTIFIED_EMPTY = "CertifiedEmpty"
CERTIFIED_NONSPECIAL = "CertifiedNonSpecial"
SPECIAL_SUSPECTED = "SpecialSuspected"
INCONCLUSIVE = "Inconclusive"


class BudgetExceeded(RuntimeError):
    def __init__(self, columns: int, budget: int):
        self.columns = columns
        self.budget = budget
        super().__init__(f"conditions matrix needs {columns} columns, budget is {budget}")


class DuplicatePoints(ValueError):
    pass


def _check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise TypeError(f"prime must be an integer, got {p!r}")
    p = int(p)
    if not 2 <= p <= MAX_PRIME or not isprime(p):
        raise ValueError(f"{p} is not a prime in [2, {MAX_PRIME}]")
    return p


@dataclass(frozen=True)
class OracleConfig:
    """Settings for :func:`certify`.

    Every trial runs at ``prime`` and again at ``second_prime`` (set it to
    ``None`` to use one prime only).  Points come from
    ``numpy.random.default_rng([seed, trial, prime])``.
    """

    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    second_prime: int | None = DEFAULT_SECOND_PRIME
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def __post_init__(self):
        _check_prime(self.prime)
        if self.second_prime is not None:
            _check_prime(self.second_prime)
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.budget < 1:
            raise ValueError(f"budget must be positive, got {self.budget}")

    @property
    def primes(self) -> tuple[int, ...]:
        if self.second_prime is None or self.second_prime == self.prime:
            return (self.prime,)
        return (self.prime, self.second_prime)


@dataclass(frozen=True)
class RankCertificate:
    d: int
    n: int
    m: int
    prime: int
    seed: int
    trials: int
    expected: int
    h0_observed: int
    verdict: str
    per_trial_h0: list[int] = field(default_factory=list)
    trials_run: int = 0
    primes: list[int] = field(default_factory=list)

    @property
    def nonspecial(self) -> bool:
        """True when the observed value pins the generic ``h0`` to ``max(0, v+1)``."""
        return self.h0_observed == self.expected

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RankCertificate":
        data = dict(data)
        data["per_trial_h0"] = list(data.get("per_trial_h0", []))
        data["primes"] = list(data.get("primes", []))
        return cls(**data)


def monomial_exponents(d: int) -> np.ndarray:
    """``(a, b)`` for every degree-``d`` monomial ``x^a y^b z^(d-a-b)``; shape ``(C(d+2, 2), 2)``."""
    return np.array([(a, b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)], dtype=np.int64)


def _binomials_mod(d: int, p: int) -> np.ndarray:
    """Pascal triangle ``C(a, i) mod p`` for ``0 <= i, a <= d``, indexed ``[i, a]``."""
    table = np.zeros((d + 1, d + 1), dtype=np.int64)
    table[0, :] = 1
    for a in range(1, d + 1):
        table[1:a + 1, a] = (table[0:a, a - 1] + table[1:a + 1, a - 1]) % p
    return table


def _hasse_factor(coord: int, d: int, m: int, p: int, binoms: np.ndarray) -> np.ndarray:
    """``[i, a] -> C(a, i) * coord^(a-i) mod p`` for ``i < m``, ``a <= d``; zero when ``i > a``."""
    powers = np.empty(d + 1, dtype=np.int64)
    acc = 1
    for e in range(d + 1):
        powers[e] = acc
        acc = acc * coord % p
    out = np.zeros((m, d + 1), dtype=np.int64)
    for i in range(min(m, d + 1)):
        out[i, i:] = binoms[i, i:] * powers[: d + 1 - i] % p
    return out


def build_conditions(ls: LinearSystem, points, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Hasse-derivative conditions matrix over ``F_p``.

    ``points`` is a sequence of ``n`` affine points ``(x, y)`` or projective
    points ``(x, y, 1)``.  Rows are ordered point by point, then by
    ``(i, j)`` with ``i + j < m``; columns follow :func:`monomial_exponents`.
    The result has ``n * C(m+1, 2)`` rows and ``C(d+2, 2)`` columns.
    """
    d, m = ls.d, ls.m
    pts = [_affine(pt, p) for pt in points]
    if len(pts) != ls.n:
        raise ValueError(f"expected {ls.n} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("points must be pairwise distinct")
    exps = monomial_exponents(d)
    ea, eb = exps[:, 0], exps[:, 1]
    orders = [(i, j) for i in range(m) for j in range(m - i)]
    oi = np.array([o[0] for o in orders], dtype=np.int64)
    oj = np.array([o[1] for o in orders], dtype=np.int64)
    binoms = _binomials_mod(d, p)
    blocks = []
    for x0, y0 in pts:
        fx = _hasse_factor(x0, d, m, p, binoms)
        fy = _hasse_factor(y0, d, m, p, binoms)
        blocks.append(fx[oi][:, ea] * fy[oj][:, eb] % p)
    if not blocks:
        return np.zeros((0, len(exps)), dtype=np.int64)
    return np.vstack(blocks)


def _affine(pt, p: int) -> tuple[int, int]:
    pt = tuple(int(c) for c in pt)
    if len(pt) == 3:
        if pt[2] % p != 1:
            raise ValueError(f"point {pt} is not in the affine chart z = 1")
        pt = pt[:2]
    if len(pt) != 2:
        raise ValueError(f"point {pt} must have 2 or 3 coordinates")
    return pt[0] % p, pt[1] % p


@njit(cache=True, nogil=True)
def _rank_kernel(a, p):
    rows, cols = a.shape
    pinv = 1.0 / p
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = 1
        base = a[r, c]
        e = p - 2
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(r + 1, rows):
            f = a[i, c]
            if f != 0:
                g = p - f
                for j in range(c, cols):
                    # x < 2**62 + 2**31; the float quotient is off by at most one
                    x = a[i, j] + g * a[r, j]
                    y = x - np.int64(x * pinv) * p
                    if y < 0:
                        y += p
                    elif y >= p:
                        y -= p
                    a[i, j] = y
        r += 1
    return r


def rank_modp(mat, p: int = DEFAULT_PRIME) -> int:
    """Exact rank over ``F_p`` by Gaussian elimination (``p < 2**31``)."""
    _check_prime(p)
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("rank_modp expects a 2-D matrix")
    if a.size == 0:
        return 0
    a %= p
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = np.ascontiguousarray(a.T)
    return int(_rank_kernel(a, p))


def sample_points(n: int, p: int, seed: int, trial: int = 0) -> list[tuple[int, int]]:
    """``n`` distinct uniform points of ``F_p^2``, reproducible from ``(seed, trial, p)``."""
    if n > p * p:
        raise ValueError(f"F_{p}^2 has fewer than {n} points")
    rng = np.random.default_rng([seed, trial, p])
    seen: dict[tuple[int, int], None] = {}
    while len(seen) < n:
        x, y = rng.integers(0, p, size=2)
        seen.setdefault((int(x), int(y)), None)
    return list(seen)


def h0_at_points(ls: LinearSystem, points, p: int = DEFAULT_PRIME) -> int:
    mat = build_conditions(ls, points, p)
    return mat.shape[1] - rank_modp(mat, p)


def certify(ls: LinearSystem, cfg: OracleConfig | None = None) -> RankCertificate:
    """Bound ``h0(L(d, n, m))`` from above by rank computations at random points.

    Raises :class:`BudgetExceeded` when ``C(d+2, 2)`` exceeds ``cfg.budget``.
    """
    cfg = cfg or OracleConfig()
    columns = binom(ls.d + 2, 2)
    if columns > cfg.budget:
        raise BudgetExceeded(columns, cfg.budget)
    expected = max(0, virtual_dimension(ls.d, ls.n, ls.m) + 1)
    jobs = [(p, t) for p in cfg.primes for t in range(cfg.trials)]

    def run(job):
        p, t = job
        return h0_at_points(ls, sample_points(ls.n, p, cfg.seed, t), p)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            per_trial = list(pool.map(run, jobs))
    else:
        per_trial = [run(job) for job in jobs]
    for h in per_trial:
        # rank <= number of rows, so h0 >= N - rows = v + 1
        assert h >= expected, f"h0 {h} below the linear-algebra bound {expected}"
    h0 = min(per_trial)

    if h0 == 0:
        verdict = CERTIFIED_EMPTY
    elif h0 == expected:
        verdict = CERTIFIED_NONSPECIAL
    elif len(cfg.primes) >= 2:
        verdict = SPECIAL_SUSPECTED
    else:
        verdict = INCONCLUSIVE
    log.debug("%s: per-trial h0 %s, expected %d -> %s", ls, per_trial, expected, verdict)
    return RankCertificate(
        d=ls.d, n=ls.n, m=ls.m, prime=cfg.prime, seed=cfg.seed, trials=cfg.trials,
        expected=expected, h0_observed=h0, verdict=verdict,
        per_trial_h0=per_trial, trials_run=len(jobs), primes=list(cfg.primes),
    )
