"""Floating-point matrix backend with certified truncation bounds.

Matrices are square complex numpy arrays and the working norm is Frobenius,
which is submultiplicative, so every operator bound below is rigorous for
the truncation error (floating-point rounding is not modeled).  The module
provides the exponential by scaling and squaring with an explicit Taylor
remainder, conjugation through an LU solve instead of an explicit inverse,
a certified upper bound on the spectral radius from norms of repeated
squares, and two convergent expansions of (a + b)^(-n) around a scalar
shift: the direct geometric-style series and its regrouping through powers
of the generalized derivation attached to the shifted right summand.
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve as _lu_backsolve

from .errors import (ConvergenceDomainError, DimensionError, NumericError,
                     SingularMatrixError)


def as_matrix(data):
    """Coerce to a square, finite, complex 2-D array."""
    a = np.asarray(data, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericError("matrix entries must be finite")
    return a


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")


def mat_add(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a + b


def mat_scale(z, a):
    return complex(z) * as_matrix(a)


def mat_mul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b


def mat_pow(a, n):
    a = as_matrix(a)
    if not isinstance(n, int) or n < 0:
        raise ValueError("matrix powers require a non-negative integer")
    return np.linalg.matrix_power(a, n)


def frob_norm(a):
    return float(np.linalg.norm(as_matrix(a), "fro"))


def matrix_from_json(data):
    """Read the row-major {"dim": d, "entries": [[re, im], ...]} format."""
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    dim = data.get("dim")
    entries = data.get("entries")
    if not isinstance(dim, int) or dim <= 0:
        raise ValueError("'dim' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise ValueError("'entries' must list dim*dim [re, im] pairs")
    flat = []
    for pair in entries:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)):
            raise ValueError("each entry must be a [re, im] pair of numbers")
        flat.append(complex(pair[0], pair[1]))
    a = np.array(flat, dtype=complex).reshape(dim, dim)
    if not np.all(np.isfinite(a)):
        raise NumericError("matrix entries must be finite")
    return a


def matrix_to_json(a):
    a = as_matrix(a)
    entries = [[float(z.real), float(z.imag)] for z in a.reshape(-1)]
    return {"dim": a.shape[0], "entries": entries}


@dataclass
class SeriesResult:
    """A truncated series value with its certified tail bound."""

    value: np.ndarray
    terms_used: int
    tail_bound: float
    converged: bool


def expm(a, tol=1e-12, max_terms=400):
    """Matrix exponential by scaling and squaring a Taylor sum.

    The Taylor remainder after m terms at argument norm t < 1 is bounded by
    t^(m+1) / ((m+1)! (1 - t)), and the truncation error is propagated
    through each squaring as err -> err * (2*norm + err).  ``converged``
    states whether the propagated bound ended at or below ``tol``.
    """
    a = as_matrix(a)
    dim = a.shape[0]
    norm = frob_norm(a)
    s = 0
    while norm / (2 ** s) > 0.5:
        s += 1
    b = a / (2 ** s)
    nb = norm / (2 ** s)

    # Amplification of the Taylor error across s squarings, estimated from
    # norm(exp(b*2^i)) <= exp(nb*2^i); used only to pick the inner target.
    amp = 1.0
    for i in range(s):
        amp *= 2.0 * math.exp(min(nb * (2 ** i), 700.0)) + 1.0
        if amp > 1e300:
            amp = 1e300
            break
    target = tol / amp

    eye = np.eye(dim, dtype=complex)
    total = eye.copy()
    term = eye
    m = 0
    factorial = 1.0
    while True:
        # remainder after terms 0..m
        tail = nb ** (m + 1) / (factorial * (m + 1) * (1.0 - nb)) if nb else 0.0
        if tail <= target or m >= max_terms:
            break
        m += 1
        factorial *= m
        term = term @ b / m
        total = total + term
    err = tail
    for _ in range(s):
        err = err * (2.0 * frob_norm(total) + err)
        total = total @ total
    return SeriesResult(total, m + 1, float(err), bool(err <= tol))


def lu_solve(a, b):
    """Solve a @ x = b with partial-pivot LU; rejects singular systems."""
    a = as_matrix(a)
    b = np.asarray(b, dtype=complex)
    if b.ndim not in (1, 2) or b.shape[0] != a.shape[0]:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    if not np.all(np.isfinite(b)):
        raise NumericError("right-hand side entries must be finite")
    with warnings.catch_warnings():
        # singularity is detected below and raised as a typed error
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(a, check_finite=False)
    diag = np.abs(np.diag(lu))
    if diag.min() <= a.shape[0] * np.finfo(float).eps * max(diag.max(), 1.0):
        raise SingularMatrixError("matrix is singular to working precision")
    return _lu_backsolve((lu, piv), b, check_finite=False)


def alpha_apply(b, c, a):
    """b @ a @ inverse(c), with the inverse applied through an LU solve."""
    b, c, a = as_matrix(b), as_matrix(c), as_matrix(a)
    _check_same_dim(b, a)
    _check_same_dim(c, a)
    # y = (b a) c^-1  solved from  c^T y^T = (b a)^T
    return lu_solve(c.T, (b @ a).T).T


def _power_norm_schedule(a, max_power=32):
    """Norms of a^m for m = 1, 2, 4, ... up to max_power.

    Returns (r, m_star, norms) where r = min norm(a^m)^(1/m) over the
    schedule and m_star attains it.  Since the Frobenius norm dominates the
    spectral radius of every power, r is a certified upper bound for the
    spectral radius of a.
    """
    a = as_matrix(a)
    norms = {}
    m = 1
    p = a
    best = None
    while True:
        nm = frob_norm(p)
        norms[m] = nm
        root = nm ** (1.0 / m)
        if best is None or root < best[0]:
            best = (root, m)
        if nm == 0.0 or 2 * m > max_power:
            break
        p = p @ p
        m *= 2
    return best[0], best[1], norms


def spectral_radius_upper(a, max_power=32):
    """Certified upper bound min_m norm(a^m)^(1/m) over doubling powers."""
    r, _, _ = _power_norm_schedule(a, max_power)
    return r


class GenBinom(NamedTuple):
    """The generalized binomial coefficient C(-n, k), exact."""

    n: int
    k: int
    value: Fraction


def gen_binom(n, k):
    """C(-n, k) = (-1)^k C(n+k-1, k) for n >= 1, k >= 0."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("gen_binom requires n >= 1")
    if not isinstance(k, int) or k < 0:
        raise ValueError("gen_binom requires k >= 0")
    mag = Fraction(math.comb(n + k - 1, k))
    return GenBinom(n, k, -mag if k % 2 else mag)


def scalar_negpow_check(lam, z, n, terms):
    """Partial sum of (lam + z)^(-n) = sum_k C(-n,k) lam^(-n-k) z^k.

    Requires |z| < |lam|; returns the sum of the first ``terms`` terms.
    """
    lam = complex(lam)
    z = complex(z)
    if abs(z) >= abs(lam):
        raise ConvergenceDomainError(abs(z), abs(lam))
    total = 0j
    zp = 1 + 0j
    for k in range(terms):
        total += float(gen_binom(n, k).value) * lam ** (-n - k) * zp
        zp *= z
    return total


def _coef_tail(n, big_k, x, abs_lam, growth):
    """Bound sum_{k > K} C(n+k-1, k) |lam|^(-n-k) growth * r^k with x = r/|lam|.

    The coefficient ratio C(n+k, k+1)/C(n+k-1, k) = (n+k)/(k+1) is
    decreasing, so for k > K it is at most rho = (n+K+1)/(K+2) and
    C(n+k-1, k) <= C(n+K, K+1) rho^(k-K-1).  Summing the geometric series:

        tail <= growth * |lam|^(-n) * C(n+K, K+1) * x^(K+1) / (1 - rho x)

    whenever rho * x < 1; returns inf otherwise (take more terms).
    """
    rho = (n + big_k + 1) / (big_k + 2)
    if rho * x >= 1.0:
        return math.inf
    head = math.comb(n + big_k, big_k + 1)
    return growth * abs_lam ** (-n) * head * x ** (big_k + 1) / (1.0 - rho * x)


def _negpow_tail(n, big_k, r, norm_m, m_star, abs_lam):
    """Certified bound on the series tail after terms 0..K.

    Uses norm(M^k) <= growth * r^k with growth = (norm(M)/r)^(m_star - 1),
    from splitting k into multiples of m_star; when r = 0 the matrix is
    nilpotent with M^m_star = 0, leaving a finite sum bounded by norm(M)^k.
    """
    if r == 0.0:
        total = 0.0
        for k in range(big_k + 1, m_star):
            total += (math.comb(n + k - 1, k) * abs_lam ** (-n - k)
                      * norm_m ** k)
        return total
    growth = (norm_m / r) ** (m_star - 1) if m_star > 1 else 1.0
    return _coef_tail(n, big_k, r / abs_lam, abs_lam, max(growth, 1.0))


def _negpow_gate(a, b, lam, max_power):
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    lam = complex(lam)
    if lam == 0:
        raise ConvergenceDomainError(math.inf, 0.0)
    dim = a.shape[0]
    m = a + b - lam * np.eye(dim, dtype=complex)
    r, m_star, _ = _power_norm_schedule(m, max_power)
    if r >= abs(lam):
        raise ConvergenceDomainError(r, abs(lam))
    return a, b, lam, m, r, m_star


def negpow_series(a, b, n, lam, tol=1e-10, max_terms=500, max_power=32):
    """(a + b)^(-n) from the shifted series sum_k C(-n,k) lam^(-n-k) M^k.

    M = a + b - lam*1 must satisfy the certified gate
    spectral_radius_upper(M) < |lam|, else ConvergenceDomainError.  Stops
    as soon as the rigorous tail bound is at or below ``tol``, or exactly
    when a power of M vanishes.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("negative-power series requires n >= 1")
    a, b, lam, m, r, m_star = _negpow_gate(a, b, lam, max_power)
    dim = a.shape[0]
    norm_m = frob_norm(m)
    abs_lam = abs(lam)

    total = np.zeros((dim, dim), dtype=complex)
    p = np.eye(dim, dtype=complex)
    k = 0
    while True:
        total = total + float(gen_binom(n, k).value) * lam ** (-n - k) * p
        added = k + 1
        tail = _negpow_tail(n, k, r, norm_m, m_star, abs_lam)
        if tail <= tol:
            return SeriesResult(total, added, float(tail), True)
        if added >= max_terms:
            return SeriesResult(total, added, float(tail), False)
        p = p @ m
        if not p.any():
            return SeriesResult(total, added, 0.0, True)
        k += 1


def negpow_double_sum(a, b, n, lam, tol=1e-10, max_terms=500, max_power=32):
    """(a + b)^(-n) regrouped through powers of a generalized derivation.

    Expands the same series as :func:`negpow_series` but with each M^k
    rebuilt as sum_j C(k,j) D^(k-j)(1) B1^j, where B1 = b - lam*1 and
    D(x) = (a + B1) x - x B1.  Same gate and the same certified tail bound.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("negative-power series requires n >= 1")
    a, b, lam, m, r, m_star = _negpow_gate(a, b, lam, max_power)
    dim = a.shape[0]
    norm_m = frob_norm(m)
    abs_lam = abs(lam)
    eye = np.eye(dim, dtype=complex)
    b1 = b - lam * eye
    p = a + b1  # equals m

    b1_pows = [eye]
    dvals = [eye]  # D^m(1), iterated
    total = np.zeros((dim, dim), dtype=complex)
    k = 0
    while True:
        b1_pows.append(b1_pows[-1] @ b1)
        dvals.append(p @ dvals[-1] - dvals[-1] @ b1)
        inner = np.zeros((dim, dim), dtype=complex)
        for j in range(k + 1):
            inner = inner + math.comb(k, j) * (dvals[k - j] @ b1_pows[j])
        total = total + float(gen_binom(n, k).value) * lam ** (-n - k) * inner
        added = k + 1
        tail = _negpow_tail(n, k, r, norm_m, m_star, abs_lam)
        if tail <= tol:
            return SeriesResult(total, added, float(tail), True)
        if added >= max_terms:
            return SeriesResult(total, added, float(tail), False)
        k += 1


def suggest_lambda(a, b):
    """A heuristic shift: the mean eigenvalue trace(a + b) / dim."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return complex(np.trace(a + b) / a.shape[0])


@dataclass
class NumericReport:
    """Outcome of one floating-point identity check."""

    identity: str
    params: dict
    discrepancy: float
    tol: float
    passed: bool

    def to_json(self):
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "discrepancy": self.discrepancy,
            "tol": self.tol,
            "passed": self.passed,
        }


def verify_exp_conjugation(b1, b2, a, tol=1e-10):
    """Check exp of the derivation against conjugation by exponentials.

    Truncates sum_m D^m(a)/m! with D(x) = b1 x - x b2, whose tail after N
    terms is bounded through norm(D) <= norm(b1) + norm(b2), and compares
    against expm(b1) @ a @ inverse(expm(b2)) in relative Frobenius norm.
    """
    b1, b2, a = as_matrix(b1), as_matrix(b2), as_matrix(a)
    _check_same_dim(b1, a)
    _check_same_dim(b2, a)
    e1 = expm(b1, tol=min(1e-13, tol * 1e-3))
    e2 = expm(b2, tol=min(1e-13, tol * 1e-3))
    rhs = alpha_apply(e1.value, e2.value, a)
    scale = max(frob_norm(rhs), 1e-300)

    d = frob_norm(b1) + frob_norm(b2)
    na = frob_norm(a)
    target = tol * scale / 4.0
    lhs = np.zeros_like(a)
    term = a.copy()
    m = 0
    factorial = 1.0
    while True:
        lhs = lhs + term / factorial
        # tail over m' > m: na * d^(m+1) / ((m+1)! (1 - d/(m+2))) once m+2 > d
        if m + 2 > d:
            tail = (na * d ** (m + 1)
                    / (factorial * (m + 1) * (1.0 - d / (m + 2))))
            if tail <= target:
                break
        m += 1
        if m > 2000:
            break
        factorial *= m
        term = b1 @ term - term @ b2
    discrepancy = frob_norm(lhs - rhs) / scale
    return NumericReport(
        identity="exp-conjugation",
        params={"dim": a.shape[0], "termsUsed": m + 1},
        discrepancy=float(discrepancy),
        tol=float(tol),
        passed=bool(discrepancy <= tol),
    )
