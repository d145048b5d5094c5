"""Ordered rewriting for a q-commutation rule and Gaussian binomials.

A :class:`QRelation` fixes two generators x, y of a context and rewrites
every adjacent occurrence of x*y into q*y*x, optionally plus h*y^2 when a
deformation parameter h is attached.  Normal forms have no x immediately
followed by y; generators outside the rule are left alone and act as
barriers.  Rewriting terminates because each step either removes an x (the
h branch) or moves an x past a y to its right (the q branch).

The coefficient side provides the finite q-Pochhammer product, Gaussian
binomials through the q-Pascal recurrence, q-integer brackets, and the
(q, h)-deformed binomial coefficient, all as exact polynomials.
"""

from .derivops import compare
from .errors import ContextError
from .freealg import CoefPoly, FreeElement, AlgebraContext


class QRelation:
    """The rule x*y -> q*y*x (+ h*y^2) on two generators of a context."""

    __slots__ = ("context", "x", "y", "q_name", "h_name")

    def __init__(self, context, x="x", y="y", q="q", h=None):
        if x not in context.generators or y not in context.generators:
            raise ContextError(f"generators {x!r}, {y!r} must be declared")
        if x == y:
            raise ValueError("the rule needs two distinct generators")
        if q not in context.parameters:
            raise ContextError(f"parameter {q!r} must be declared")
        if h is not None:
            if h not in context.parameters:
                raise ContextError(f"parameter {h!r} must be declared")
            if h == q:
                raise ValueError("q and h must be distinct parameters")
        ids = dict((g.name, g) for g in context.generator_ids())
        self.context = context
        self.x = ids[x]
        self.y = ids[y]
        self.q_name = q
        self.h_name = h

    @property
    def has_h(self):
        return self.h_name is not None

    def __repr__(self):
        rule = f"{self.x.name}*{self.y.name} -> {self.q_name}*{self.y.name}*{self.x.name}"
        if self.h_name:
            rule += f" + {self.h_name}*{self.y.name}^2"
        return f"QRelation({rule})"


class NormalForm:
    """An element certified to contain no x-immediately-before-y word."""

    __slots__ = ("element", "relation")

    def __init__(self, element, relation):
        ix, iy = relation.x.index, relation.y.index
        for word in element._terms:
            if _first_descent(word, ix, iy) is not None:
                raise ValueError("element is not in normal form for the rule")
        self.element = element
        self.relation = relation

    def __eq__(self, other):
        if isinstance(other, NormalForm):
            return self.element == other.element
        return NotImplemented

    def __str__(self):
        return str(self.element)

    def __repr__(self):
        return f"<NormalForm {self.element}>"


def _first_descent(word, ix, iy):
    for i in range(len(word) - 1):
        if word[i] == ix and word[i + 1] == iy:
            return i
    return None


def normalize(element, relation):
    """Rewrite until no word contains x immediately before y."""
    if element.context != relation.context:
        raise ContextError("element and relation use different contexts")
    q = CoefPoly.parameter(relation.q_name)
    h = CoefPoly.parameter(relation.h_name) if relation.h_name else None
    ix, iy = relation.x.index, relation.y.index
    pending = dict(element._terms)
    done = {}
    while pending:
        next_pending = {}

        def put(word, coef):
            c = next_pending.get(word, CoefPoly(0)) + coef
            if c:
                next_pending[word] = c
            elif word in next_pending:
                del next_pending[word]

        for word, coef in pending.items():
            pos = _first_descent(word, ix, iy)
            if pos is None:
                c = done.get(word, CoefPoly(0)) + coef
                if c:
                    done[word] = c
                elif word in done:
                    del done[word]
            else:
                head, tail = word[:pos], word[pos + 2:]
                put(head + (iy, ix) + tail, q * coef)
                if h is not None:
                    put(head + (iy, iy) + tail, h * coef)
        pending = next_pending
    return NormalForm(FreeElement._raw(element.context, done), relation)


def q_pochhammer(k, q="q"):
    """The finite product (1 - q)(1 - q^2)...(1 - q^k)."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("q_pochhammer requires a non-negative integer")
    qp = CoefPoly.parameter(q)
    out = CoefPoly(1)
    power = qp
    for _ in range(k):
        out = out * (CoefPoly(1) - power)
        power = power * qp
    return out


def gaussian_binomial(n, k, q="q"):
    """Gaussian binomial [n, k]_q through the q-Pascal recurrence."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("gaussian_binomial requires n >= 0")
    if k < 0 or k > n:
        return CoefPoly(0)
    qp = CoefPoly.parameter(q)
    row = [CoefPoly(1)]
    for m in range(1, n + 1):
        new = [CoefPoly(1)]
        qpow = qp
        for j in range(1, m):
            new.append(row[j - 1] + qpow * row[j])
            qpow = qpow * qp
        new.append(CoefPoly(1))
        row = new
    return row[k]


def q_bracket(j, q="q"):
    """The q-integer 1 + q + ... + q^(j-1); zero when j = 0."""
    if not isinstance(j, int) or j < 0:
        raise ValueError("q_bracket requires a non-negative integer")
    qp = CoefPoly.parameter(q)
    out = CoefPoly(0)
    power = CoefPoly(1)
    for _ in range(j):
        out = out + power
        power = power * qp
    return out


def benaoum_coefficient(n, k, q="q", h="h"):
    """Gaussian binomial scaled by the product of (1 + [j]_q h), j < k."""
    out = gaussian_binomial(n, k, q)
    for j in range(k):
        out = out * (CoefPoly(1) + q_bracket(j, q) * CoefPoly.parameter(h))
    return out


def verify_q_binomial(n, with_h=False, context=None, x="x", y="y", q="q", h="h"):
    """Check the ordered expansion of (x+y)^n under the rewrite rule.

    Compares the normal form of (x+y)^n against
    sum_k coef(n, k) y^k x^(n-k), with Gaussian binomial coefficients for
    the pure q rule and the deformed coefficients once h is attached.
    """
    if context is None:
        params = (q, h) if with_h else (q,)
        context = AlgebraContext((x, y), params)
    rel = QRelation(context, x, y, q, h if with_h else None)
    gx = context.gen(x)
    gy = context.gen(y)
    lhs = normalize((gx + gy) ** n, rel).element
    acc = context.zero()
    for k in range(n + 1):
        coef = (benaoum_coefficient(n, k, q, h) if with_h
                else gaussian_binomial(n, k, q))
        acc = acc + (gy ** k * gx ** (n - k)).scale(coef)
    label = "qh-binomial" if with_h else "q-binomial"
    return compare(label, n, lhs, acc, {"withH": with_h})
