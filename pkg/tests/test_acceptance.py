"""Exit criteria.  Each test records one PASS/FAIL line, shown in the terminal summary."""

import contextlib
import io
import math
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_RESULTS
from planeinterp.bounds import bound_matrix, c2, cf_expand, lemmaB_check, split_n
from planeinterp.cli import run
from planeinterp.exactnum import binom
from planeinterp.linsys import (
    EMPTY_REFINEMENT,
    UNDECIDED,
    LinearSystem,
    chi_additivity,
    classify,
)
from planeinterp.oracle import (
    CERTIFIED_EMPTY,
    CERTIFIED_NONSPECIAL,
    BudgetExceeded,
    OracleConfig,
    certify,
)
from planeinterp.sympow import BundleClass, BundleDecomp, h0_anticanonical_pencil, sym_power

NONSQUARE_500 = [n for n in range(2, 501) if math.isqrt(n) ** 2 != n]


@contextlib.contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f}s, limit {limit}s)"
        ACCEPTANCE_RESULTS.append(line)
        print(line)


def test_01_constants_table():
    with criterion(1, "c2 constants for n = 8, 10, 11, 12, 15, 18", 1):
        expected = {8: Fraction(48, 17), 10: Fraction(2280, 721), 11: Fraction(660, 199),
                    12: Fraction(336, 97), 15: Fraction(120, 31), 18: Fraction(2448, 577)}
        assert {n: c2(n) for n in expected} == expected


def test_02_continued_fraction_agreement():
    with criterion(2, "continued fractions equal q2/p2 and q4/p4 for non-square n <= 500", 5):
        for n in NONSQUARE_500:
            m2, m4 = bound_matrix(n, 2), bound_matrix(n, 4)
            assert cf_expand(n, 1) == m2.q / m2.p
            assert cf_expand(n, 2) == m4.q / m4.p


COROLLARY_CSV = """\
d,n,m,chi_p2,mu,epsilon,b,mhat,chi_s,gamma,kappa
1499,10,474,0,499,2,243,25,0,12,-1
778,10,246,0,259,1,126,13,0,6,-2
428,11,129,0,142,2,135,13,0,6,-1
229,11,69,0,76,1,72,7,0,3,-2
215,12,62,0,71,2,99,9,0,4,-1
118,12,34,0,39,1,54,5,0,2,-2
"""


def test_03_corollary_table():
    with criterion(3, "table --preset corollary12 reproduces 6 rows x 11 columns", 1):
        out = io.StringIO()
        assert run(["table", "--preset", "corollary12", "--format", "csv"], out=out) == 0
        assert out.getvalue() == COROLLARY_CSV
        kappas = [int(line.rsplit(",", 1)[1]) for line in COROLLARY_CSV.splitlines()[1:]]
        assert kappas == [-1, -2, -1, -2, -1, -2]


def test_04_classifier_contrapositives():
    with criterion(4, "classifier verdicts on the refinement row and the open cases", 1):
        assert classify(LinearSystem(1499, 10, 474)).status == EMPTY_REFINEMENT
        for dnm in [(57, 10, 18), (2220, 10, 702), (627, 11, 189), (312, 12, 90)]:
            assert classify(LinearSystem(*dnm)).status == UNDECIDED


@pytest.mark.parametrize("dnm, limit", [((3, 3, 2), 1), ((12, 6, 5), 1), ((48, 8, 17), 60)])
def test_05_oracle_sharp_cases(dnm, limit):
    # compile the elimination kernel outside the timed region
    certify(LinearSystem(2, 2, 1), OracleConfig(trials=1, second_prime=None))
    with criterion(5, f"oracle: L{dnm} CertifiedNonSpecial, h0 = 1, 3 trials x 2 primes", limit):
        cert = certify(LinearSystem(*dnm), OracleConfig(trials=3))
        assert len(set(cert.primes)) == 2 and cert.trials_run == 6
        assert cert.verdict == CERTIFIED_NONSPECIAL
        assert cert.h0_observed == 1


def test_06_oracle_classifier_sweep():
    with criterion(6, "every Empty* verdict (d <= 25, n <= 12, m <= 6) is CertifiedEmpty", 600):
        cfg = OracleConfig()
        checked = 0
        for n in range(2, 13):
            if math.isqrt(n) ** 2 == n:
                continue
            for d in range(1, 26):
                for m in range(1, 7):
                    ls = LinearSystem(d, n, m)
                    if classify(ls).empty:
                        cert = certify(ls, cfg)
                        assert cert.verdict == CERTIFIED_EMPTY, (ls, cert)
                        checked += 1
        assert checked > 0


def test_07_chi_additivity():
    with criterion(7, "chi additivity on 10^4 random tuples", 10):
        rng = random.Random(20121127)
        nonsquare = [n for n in range(2, 201) if math.isqrt(n) ** 2 != n]
        for _ in range(10_000):
            ls = LinearSystem(rng.randint(1, 5000), rng.choice(nonsquare), rng.randint(1, 2000))
            lhs, rhs = chi_additivity(ls, rng.randint(-100, 2500))
            assert lhs == rhs


def test_08_lemma_b_equivalence():
    with criterion(8, "slope-inequality equivalence on 10^4 random (d, m) for each of 20 n", 30):
        rng = random.Random(721)
        ns = rng.sample(NONSQUARE_500, 20)
        for n in ns:
            split = split_n(n)
            for _ in range(10_000):
                d = Fraction(rng.randint(-10**7, 10**7), rng.randint(1, 10**4))
                m = Fraction(rng.randint(-10**7, 10**7), rng.randint(1, 10**4))
                for part in ("a", "b"):
                    lhs, rhs = lemmaB_check(split, d, m, part)
                    assert lhs == rhs


def test_09_symmetric_powers():
    with criterion(9, "Sym^2, Sym^3 match; rank/degree/parity laws to m = 60; h0(-2K_S) = 2", 1):
        a = lambda kind, power, mult: (BundleClass(kind, power), mult)
        assert sym_power(2) == BundleDecomp(dict([a("L1", 1, 1), a("L2", 1, 1), a("L3", 1, 1)]))
        assert sym_power(3) == BundleDecomp(dict([a("E", 1, 2)]))
        for m in range(61):
            dec = sym_power(m)
            assert dec.rank == m + 1 and dec.degree == m * (m + 1) // 2
            if m % 2 == 0:
                assert all(c.rank == 1 and c.a_power == m // 2 for c in dec.terms)
            else:
                assert dec == BundleDecomp({BundleClass("E", m // 2): m // 2 + 1})
        assert h0_anticanonical_pencil() == 2


def test_10_budget_guard():
    with criterion(10, "L(1499,10,474) and L(778,10,246) refused by the budget guard", 1):
        for dnm, columns in [((1499, 10, 474), binom(1501, 2)), ((778, 10, 246), binom(780, 2))]:
            with pytest.raises(BudgetExceeded) as info:
                certify(LinearSystem(*dnm))
            assert info.value.columns == columns
