"""Binomial-type expansions driven by inner generalized derivations.

The central operator is x -> left*x - x*right for two fixed elements of a
free algebra.  Its powers admit a closed form with alternating binomial
coefficients, and resumming those powers against powers of the right slot
reproduces plain powers, differences of powers, and a non-commutative
binomial expansion.  Everything here is exact; each ``verify_*`` function
returns an :class:`IdentityReport` comparing a left-hand side computed by
direct multiplication against the expanded right-hand side.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import ContextError
from .freealg import FreeElement, binomial


class DerivationOp:
    """The linear map x -> left*x - x*right on one algebra context."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        if not isinstance(left, FreeElement) or not isinstance(right, FreeElement):
            raise TypeError("DerivationOp expects two FreeElements")
        if left.context != right.context:
            raise ContextError("left and right slots use different contexts")
        self.left = left
        self.right = right

    @property
    def context(self):
        return self.left.context

    def apply(self, x):
        return self.left * x - x * self.right

    __call__ = apply

    def power_iterated(self, x, n):
        """Apply the operator n times, by iteration."""
        if not isinstance(n, int) or n < 0:
            raise ValueError("operator powers require a non-negative integer")
        out = x
        for _ in range(n):
            out = self.apply(out)
        return out

    def power_closed_form(self, x, n):
        """The n-th power via the alternating binomial expansion.

        Equals ``power_iterated(x, n)``; computed instead as
        sum_k (-1)^k C(n, k) left^(n-k) x right^k.
        """
        if not isinstance(n, int) or n < 0:
            raise ValueError("operator powers require a non-negative integer")
        one = self.context.one()
        lp = [one]
        rp = [one]
        for _ in range(n):
            lp.append(lp[-1] * self.left)
            rp.append(rp[-1] * self.right)
        acc = self.context.zero()
        for k in range(n + 1):
            coef = binomial(n, k) if k % 2 == 0 else -binomial(n, k)
            acc = acc + (lp[n - k] * x * rp[k]).scale(coef)
        return acc

    def __repr__(self):
        return f"DerivationOp(left={self.left!r}, right={self.right!r})"


def inner_derivation(b):
    """The commutator map x -> b*x - x*b."""
    return DerivationOp(b, b)


def commutator(a, b):
    return a * b - b * a


@dataclass
class IdentityReport:
    """Outcome of one exact identity check.

    ``first_discrepant_word`` is the canonically smallest word whose
    coefficients differ, as a tuple of generator names, or None when the
    sides agree.
    """

    identity: str
    n: int
    params: dict
    lhs: FreeElement
    rhs: FreeElement
    equal: bool
    first_discrepant_word: Optional[tuple]

    def to_json(self):
        fdw = None
        if self.first_discrepant_word is not None:
            fdw = list(self.first_discrepant_word)
        return {
            "identity": self.identity,
            "n": self.n,
            "params": dict(self.params),
            "equal": self.equal,
            "firstDiscrepantWord": fdw,
        }


def compare(identity, n, lhs, rhs, params=None):
    """Build an :class:`IdentityReport` for lhs vs rhs."""
    diff = lhs - rhs
    if diff.is_zero:
        first = None
    else:
        first = next(iter(diff.terms()))[0]
    return IdentityReport(
        identity=identity,
        n=n,
        params=dict(params or {}),
        lhs=lhs,
        rhs=rhs,
        equal=first is None,
        first_discrepant_word=first,
    )


def power_via_derivation_rhs(a, b, n):
    """sum_k C(n, k) D^(n-k)(1) b^k for D = (x -> a*x - x*b)."""
    op = DerivationOp(a, b)
    ctx = a.context
    one = ctx.one()
    dvals = [one]
    bp = [one]
    for _ in range(n):
        dvals.append(op.apply(dvals[-1]))
        bp.append(bp[-1] * b)
    acc = ctx.zero()
    for k in range(n + 1):
        acc = acc + (dvals[n - k] * bp[k]).scale(binomial(n, k))
    return acc


def verify_power_via_derivation(a, b, n, params=None):
    """Check a^n against the derivation-power expansion in b."""
    return compare("power-via-derivation", n, a ** n,
                   power_via_derivation_rhs(a, b, n), params)


def double_sum_rhs(x, c, n):
    """sum_k sum_j C(n,k) C(n-k,j) (-1)^j x^(n-k-j) c^(j+k)."""
    ctx = x.context
    one = ctx.one()
    xp = [one]
    cp = [one]
    for _ in range(n):
        xp.append(xp[-1] * x)
        cp.append(cp[-1] * c)
    acc = ctx.zero()
    for k in range(n + 1):
        ck = binomial(n, k)
        for j in range(n - k + 1):
            coef = ck * binomial(n - k, j)
            if j % 2 == 1:
                coef = -coef
            acc = acc + (xp[n - k - j] * cp[j + k]).scale(coef)
    return acc


def difference_of_powers_rhs(a, b, n):
    """The expansion of a^n - b^n as a double binomial sum; requires n >= 1."""
    if n < 1:
        raise ValueError("difference-of-powers expansion requires n >= 1")
    ctx = a.context
    one = ctx.one()
    ap = [one]
    bp = [one]
    for _ in range(n):
        ap.append(ap[-1] * a)
        bp.append(bp[-1] * b)
    acc = ctx.zero()
    for k in range(n):
        ck = binomial(n, k)
        for j in range(n - k + 1):
            coef = ck * binomial(n - k, j)
            if j % 2 == 1:
                coef = -coef
            acc = acc + (ap[n - k - j] * bp[j + k]).scale(coef)
    return acc


def verify_difference_of_powers(a, b, n, params=None):
    return compare("difference-of-powers", n, a ** n - b ** n,
                   difference_of_powers_rhs(a, b, n), params)


def nc_binomial_rhs(a, b, c, n):
    """Expansion of (a+b)^n around an arbitrary element c."""
    return power_via_derivation_rhs(a + b, c, n)


def verify_nc_binomial(a, b, c, n, params=None):
    return compare("nc-binomial", n, (a + b) ** n,
                   nc_binomial_rhs(a, b, c, n), params)


def verify_nc_binomial_double(a, b, c, n, params=None):
    return compare("nc-binomial-double", n, (a + b) ** n,
                   double_sum_rhs(a + b, c, n), params)


def wyss_rhs(a, b, n):
    """sum_k C(n, k) [T^k(1)] b^(n-k) with T = (x -> a*x + b*x - x*b)."""
    ctx = a.context
    one = ctx.one()
    d = inner_derivation(b)
    tvals = [one]
    bp = [one]
    for _ in range(n):
        tvals.append(a * tvals[-1] + d.apply(tvals[-1]))
        bp.append(bp[-1] * b)
    acc = ctx.zero()
    for k in range(n + 1):
        acc = acc + (tvals[k] * bp[n - k]).scale(binomial(n, k))
    return acc


def verify_wyss(a, b, n, params=None):
    return compare("wyss-binomial", n, (a + b) ** n, wyss_rhs(a, b, n), params)


def application_identities(a, b, c, n):
    """Power expansions of the commutator [a, b] and of the product a*b.

    Returns three reports: the commutator power against the derivation-based
    expansion, the same against the double sum, and the product power against
    the double sum, all around c.
    """
    k = commutator(a, b)
    p = a * b
    return [
        compare("commutator-power", n, k ** n,
                power_via_derivation_rhs(k, c, n)),
        compare("commutator-power-double", n, k ** n, double_sum_rhs(k, c, n)),
        compare("product-power-double", n, p ** n, double_sum_rhs(p, c, n)),
    ]
