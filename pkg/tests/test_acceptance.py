"""Acceptance gate: one test per shipped guarantee, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
PASS/FAIL lines alongside the pytest verdicts.  Every check here is either
exact (symbolic equality over the rationals) or carries the tolerance it
states in its label.  Seeds are fixed so reruns are bit-for-bit identical.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from ncbinom import (AlgebraContext, CoefPoly, DerivationOp, QRelation,
                     binomial, commutator, embed, format_element, frob_norm,
                     gaussian_binomial, lu_solve, negpow_double_sum,
                     negpow_series, normalize, parse_element, q_pochhammer,
                     scalar_negpow_check, verify_difference_of_powers,
                     verify_exp_conjugation, verify_nc_binomial,
                     verify_power_via_derivation, verify_q_binomial,
                     verify_unitized_binomial, verify_unitized_power,
                     verify_wyss)
from conftest import random_element


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE FAIL: {label}")
        raise
    print(f"ACCEPTANCE PASS: {label}")


def test_derivation_power_closed_form():
    with criterion("derivation power closed form matches iteration "
                   "(n <= 8, 100 seeded cases, < 10 s)"):
        start = time.perf_counter()
        ctx = AlgebraContext(("a", "b", "c"))
        rng = random.Random(12345)
        for _ in range(100):
            left = random_element(rng, ctx)
            right = random_element(rng, ctx)
            x = random_element(rng, ctx)
            op = DerivationOp(left, right)
            cur = x
            for n in range(9):
                assert op.power_closed_form(x, n) == cur
                cur = op.apply(cur)
        assert time.perf_counter() - start < 10.0


def test_power_expansion_and_sum_substitution():
    with criterion("power expansion on generator pairs (n <= 8) and the "
                   "sum-around-c substitution (n <= 6), exact"):
        ctx = AlgebraContext(("a", "b", "c"))
        a, b, c = ctx.gens()
        for base in (a, b, c):
            for around in (a, b, c):
                if base is around:
                    continue
                for n in range(9):
                    assert verify_power_via_derivation(base, around, n).equal
        for around in (a, b, c):
            for n in range(7):
                assert verify_nc_binomial(a, b, around, n).equal


def test_difference_of_powers():
    with criterion("difference of powers double sum (1 <= n <= 6), exact"):
        ctx = AlgebraContext(("a", "b"))
        a, b = ctx.gens()
        for n in range(1, 7):
            assert verify_difference_of_powers(a, b, n).equal


def test_wyss_expansion():
    with criterion("sum-power expansion through the iterated affine "
                   "operator (n <= 6), exact"):
        ctx = AlgebraContext(("a", "b"))
        a, b = ctx.gens()
        for n in range(7):
            assert verify_wyss(a, b, n).equal


def test_commutator_and_product_base_points():
    with criterion("power expansion at commutator and product base "
                   "points (n <= 4), exact"):
        ctx = AlgebraContext(("a", "b", "c"))
        a, b, c = ctx.gens()
        for base in (commutator(a, b), a * b):
            for around in (a, b, c):
                for n in range(5):
                    assert verify_power_via_derivation(base, around, n).equal


def test_q_binomial():
    with criterion("q-binomial expansion (n <= 10) with classical "
                   "limit q = 1, exact"):
        for n in range(11):
            assert verify_q_binomial(n).equal
            for k in range(n + 1):
                limit = gaussian_binomial(n, k).substitute({"q": 1})
                assert limit == binomial(n, k)


def test_qh_binomial():
    with criterion("q,h-binomial expansion (n <= 8) with y^2 coefficient "
                   "1 + h at n = 2, exact"):
        for n in range(9):
            assert verify_q_binomial(n, with_h=True).equal
        ctx = AlgebraContext(("x", "y"), ("q", "h"))
        x, y = ctx.gens()
        rel = QRelation(ctx, h="h")
        nf = normalize((x + y) ** 2, rel)
        coef = nf.element.coefficient(("y", "y"))
        assert coef == CoefPoly.parameter("h") + 1


def test_gaussian_multiplicative_identity():
    with criterion("gaussian binomial times factorial-style products "
                   "(0 <= k <= n <= 12), exact"):
        for n in range(13):
            whole = q_pochhammer(n)
            for k in range(n + 1):
                prod = gaussian_binomial(n, k) * q_pochhammer(k) \
                    * q_pochhammer(n - k)
                assert prod == whole


def test_unitized_identities():
    with criterion("unitized power and binomial identities (n <= 6, "
                   "weights 0, 1, -2, 3/5), exact"):
        ctx = AlgebraContext(("a", "b", "c"))
        a, b, c = ctx.gens()
        weights = (Fraction(0), Fraction(1), Fraction(-2), Fraction(3, 5))
        for w in weights:
            for n in range(7):
                assert verify_unitized_power(a, b, w, n).equal
                assert verify_unitized_binomial(a, b, c, w, n).equal
        for n in range(1, 7):
            assert (embed(a) ** n).scalar == 0


def test_exp_conjugation():
    with criterion("exponential conjugation on 50 seeded 5x5 unit-disk "
                   "instances (relative <= 1e-10, < 30 s)"):
        start = time.perf_counter()
        rng = np.random.default_rng(2718)
        for _ in range(50):
            mats = []
            for _ in range(3):
                re = rng.uniform(-1.0, 1.0, (5, 5))
                im = rng.uniform(-1.0, 1.0, (5, 5))
                mats.append((re + 1j * im) / np.sqrt(2.0))
            b1, b2, a = mats
            rep = verify_exp_conjugation(b1, b2, a, tol=1e-10)
            assert rep.passed
            assert rep.discrepancy <= 1e-10
        assert time.perf_counter() - start < 30.0


def test_scalar_negative_power_layer():
    with criterion("scalar negative power series at lambda = 2, z = 1 "
                   "(n in 1..3, <= 100 terms, within 1e-10)"):
        for n in (1, 2, 3):
            value = scalar_negpow_check(2.0, 1.0, n, 100)
            assert abs(value - 3.0 ** (-n)) <= 1e-10


def test_negative_power_matrix_series():
    with criterion("matrix negative power series vs LU oracle (rel <= 1e-8) "
                   "and double-sum regrouping (<= 1e-9) on gated instances; "
                   "nilpotent demo terminates in n(dim-1)+1 terms"):
        lam = 2.0
        rng = np.random.default_rng(99)
        for dim in range(2, 7):
            r = (rng.uniform(-1, 1, (dim, dim))
                 + 1j * rng.uniform(-1, 1, (dim, dim)))
            r /= max(frob_norm(r), 1.0)
            s = (rng.uniform(-1, 1, (dim, dim))
                 + 1j * rng.uniform(-1, 1, (dim, dim)))
            s /= max(frob_norm(s), 1.0)
            # split so the two summands differ but add up to lam*I + 0.3*r
            a = 0.15 * r + 0.05 * s
            b = lam * np.eye(dim) + 0.15 * r - 0.05 * s
            for n in (1, 2, 3):
                res = negpow_series(a, b, n, lam, tol=1e-12)
                assert res.converged
                oracle = np.eye(dim, dtype=complex)
                for _ in range(n):
                    oracle = lu_solve(a + b, oracle)
                rel = frob_norm(res.value - oracle) / frob_norm(oracle)
                assert rel <= 1e-8
                dbl = negpow_double_sum(a, b, n, lam, tol=1e-12)
                assert dbl.converged
                assert frob_norm(dbl.value - res.value) <= 1e-9
        for dim in (2, 3, 4):
            shift = np.diag(np.ones(dim - 1), 1).astype(complex)
            res = negpow_series(shift, lam * np.eye(dim), 1, lam)
            assert res.converged
            assert res.terms_used == 1 * (dim - 1) + 1
            oracle = lu_solve(shift + lam * np.eye(dim),
                              np.eye(dim, dtype=complex))
            assert frob_norm(res.value - oracle) <= 1e-12


def test_parse_format_round_trip():
    with criterion("parse after format is the identity on 200 seeded "
                   "random elements"):
        ctx = AlgebraContext(("a", "b", "c"), ("q", "h"))
        rng = random.Random(31337)
        for _ in range(200):
            e = random_element(rng, ctx, max_terms=4, max_len=3,
                               with_params=True)
            assert parse_element(format_element(e), ctx) == e


def test_cli_verify_all():
    with criterion("verify --suite all exits 0 in under 2 minutes"):
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "ncbinom", "verify", "--suite", "all",
             "--output", "json"],
            capture_output=True, text=True)
        elapsed = time.perf_counter() - start
        assert proc.returncode == 0, proc.stderr
        report = json.loads(proc.stdout)
        assert report["passed"] is True
        assert report["counts"]["fail"] == 0
        assert elapsed < 120.0
