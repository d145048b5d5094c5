"""Adjoining a unit to an algebra without one, and power identities there.

The algebra without a unit is modeled as the span of the nonempty words of
a free algebra; a :class:`Unitized` element is a pair (part, scalar) with
the product

    (a, l) * (b, m) = (a*b + l*b + m*a, l*m),

whose unit is (0, 1).  Scalars are coefficient polynomials, so identities
can be checked with symbolic weights attached to the adjoined unit.  The
generalized-derivation machinery lifts verbatim: reports flatten a pair to
part + scalar*1 inside the unital free algebra, which is injective because
parts carry no constant term.
"""

from .derivops import compare
from .errors import ContextError
from .freealg import FreeElement, binomial, format_poly


class Unitized:
    """A pair (part, scalar) in the unit-adjoined algebra.

    ``part`` must have no constant term; ``scalar`` is an int, Fraction, or
    CoefPoly over the same context.
    """

    __slots__ = ("part", "scalar")

    def __init__(self, part, scalar=0):
        if not isinstance(part, FreeElement):
            raise TypeError("part must be a FreeElement")
        if not part.coefficient(()).is_zero:
            raise ValueError("part must have no constant term")
        self.part = part
        self.scalar = part.context._check_coef(scalar)

    @property
    def context(self):
        return self.part.context

    def _check(self, other):
        if not isinstance(other, Unitized):
            raise TypeError("expected a Unitized operand")
        if other.context != self.context:
            raise ContextError("operands use different contexts")

    def __add__(self, other):
        self._check(other)
        return Unitized(self.part + other.part, self.scalar + other.scalar)

    def __sub__(self, other):
        self._check(other)
        return Unitized(self.part - other.part, self.scalar - other.scalar)

    def __neg__(self):
        return Unitized(-self.part, -self.scalar)

    def scale(self, value):
        coef = self.context._check_coef(value)
        return Unitized(self.part.scale(coef), self.scalar * coef)

    def __mul__(self, other):
        self._check(other)
        part = (self.part * other.part
                + other.part.scale(self.scalar)
                + self.part.scale(other.scalar))
        return Unitized(part, self.scalar * other.scalar)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers require a non-negative integer")
        out = unit(self.context)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Unitized):
            return NotImplemented
        self._check(other)
        return self.part == other.part and self.scalar == other.scalar

    def flatten(self):
        """The same element inside the unital free algebra."""
        return self.part + self.scalar

    def __repr__(self):
        return f"Unitized({self.part}, {format_poly(self.scalar, self.context.parameters)})"


def unit(context):
    """The adjoined identity (0, 1)."""
    return Unitized(context.zero(), 1)


def embed(x):
    """The canonical embedding x -> (x, 0)."""
    return Unitized(x, 0)


def u_delta(left, right, x):
    """left*x - x*right among unitized pairs."""
    return left * x - x * right


def u_delta_power(left, right, x, n):
    """Iterated application of the pair-level derivation."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("operator powers require a non-negative integer")
    out = x
    for _ in range(n):
        out = u_delta(left, right, out)
    return out


def u_delta_power_closed(left, right, x, n):
    """Closed form sum_k (-1)^k C(n,k) left^(n-k) x right^k for pairs."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("operator powers require a non-negative integer")
    ctx = left.context
    lp = [unit(ctx)]
    rp = [unit(ctx)]
    for _ in range(n):
        lp.append(lp[-1] * left)
        rp.append(rp[-1] * right)
    acc = embed(ctx.zero())
    for k in range(n + 1):
        coef = binomial(n, k) if k % 2 == 0 else -binomial(n, k)
        acc = acc + (lp[n - k] * x * rp[k]).scale(coef)
    return acc


def _scalar_repr(value, context):
    coef = context._check_coef(value)
    return format_poly(coef, context.parameters)


def verify_unitized_power(a, b, beta, n, alpha=0, params=None):
    """Check (a, alpha)^n against its derivation expansion along (b, beta).

    With alpha = 0 this is the power identity for the embedded element; the
    report carries the flattened sides.
    """
    ctx = a.context
    ua = Unitized(a, alpha)
    ub = Unitized(b, beta)
    lhs = ua ** n
    acc = embed(ctx.zero())
    ubp = [unit(ctx)]
    dvals = [unit(ctx)]
    for _ in range(n):
        ubp.append(ubp[-1] * ub)
        dvals.append(u_delta(ua, ub, dvals[-1]))
    for k in range(n + 1):
        acc = acc + (dvals[n - k] * ubp[k]).scale(binomial(n, k))
    reported = dict(params or {})
    reported.setdefault("alpha", _scalar_repr(alpha, ctx))
    reported.setdefault("beta", _scalar_repr(beta, ctx))
    return compare("unitized-power", n, lhs.flatten(), acc.flatten(), reported)


def verify_unitized_binomial(a, b, c, gamma, n, params=None):
    """Check (a+b, 0)^n against its expansion along (c, gamma)."""
    ctx = a.context
    uab = embed(a + b)
    uc = Unitized(c, gamma)
    lhs = uab ** n
    acc = embed(ctx.zero())
    ucp = [unit(ctx)]
    dvals = [unit(ctx)]
    for _ in range(n):
        ucp.append(ucp[-1] * uc)
        dvals.append(u_delta(uab, uc, dvals[-1]))
    for k in range(n + 1):
        acc = acc + (dvals[n - k] * ucp[k]).scale(binomial(n, k))
    reported = dict(params or {})
    reported.setdefault("gamma", _scalar_repr(gamma, ctx))
    return compare("unitized-binomial", n, lhs.flatten(), acc.flatten(), reported)
