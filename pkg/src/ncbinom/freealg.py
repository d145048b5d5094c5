"""Exact arithmetic in a free associative algebra over named generators.

The generators do not commute with each other; scalars are multivariate
polynomials over the rationals in a declared set of commuting parameters.
The representation is sparse throughout:

- a parameter monomial is a tuple of ``(name, exponent)`` pairs sorted by
  name, the empty tuple being 1;
- a :class:`CoefPoly` maps monomials to ``fractions.Fraction`` values and
  never stores a zero coefficient;
- a word is a tuple of generator indices, the empty tuple being the unit,
  and words multiply by concatenation;
- a :class:`FreeElement` maps words to coefficient polynomials and never
  stores a zero polynomial.

Because zeros are always dropped, structural equality of the underlying
mappings coincides with equality in the algebra.  The canonical term order
used by formatting, serialization, and discrepancy reporting is
length-then-lexicographic on words.
"""

import math
import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ContextError, ParseError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def binomial(n, k):
    """Binomial coefficient C(n, k) as an exact ``Fraction``.

    Requires n >= 0; returns 0 outside the range 0 <= k <= n.
    """
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def _canon_mono(mono):
    """Normalize a monomial given as a mapping or (name, exponent) pairs."""
    items = mono.items() if isinstance(mono, dict) else mono
    acc = {}
    for name, exp in items:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise ValueError(f"invalid parameter name {name!r}")
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f"invalid exponent {exp!r} for parameter {name!r}")
        if exp:
            acc[name] = acc.get(name, 0) + exp
    return tuple(sorted(acc.items()))


class CoefPoly:
    """Polynomial in commuting parameters with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, value=0):
        if isinstance(value, CoefPoly):
            self._terms = dict(value._terms)
        elif isinstance(value, (int, Fraction)):
            r = _as_fraction(value)
            self._terms = {(): r} if r else {}
        elif isinstance(value, dict):
            terms = {}
            for mono, coef in value.items():
                key = _canon_mono(mono)
                r = terms.get(key, Fraction(0)) + _as_fraction(coef)
                if r:
                    terms[key] = r
                elif key in terms:
                    del terms[key]
            self._terms = terms
        else:
            raise TypeError(f"cannot build a CoefPoly from {type(value).__name__}")

    @classmethod
    def _raw(cls, terms):
        # Trusted constructor: terms must already be canonical and zero-free.
        self = cls.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def parameter(cls, name):
        """The polynomial consisting of the single parameter ``name``."""
        if not _NAME_RE.match(name):
            raise ValueError(f"invalid parameter name {name!r}")
        return cls._raw({((name, 1),): Fraction(1)})

    def parameters(self):
        """Set of parameter names that actually occur."""
        out = set()
        for mono in self._terms:
            for name, _ in mono:
                out.add(name)
        return out

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_constant(self):
        return all(not mono for mono in self._terms)

    def constant(self):
        """The value as a ``Fraction``; raises if any parameter occurs."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms[()]

    def substitute(self, values):
        """Evaluate some parameters at exact rational values.

        ``values`` maps parameter names to ints or Fractions; parameters not
        mentioned are kept symbolic.
        """
        subs = {name: _as_fraction(v) for name, v in values.items()}
        terms = {}
        for mono, coef in self._terms.items():
            rest = []
            for name, exp in mono:
                if name in subs:
                    coef = coef * subs[name] ** exp
                else:
                    rest.append((name, exp))
            key = tuple(rest)
            r = terms.get(key, Fraction(0)) + coef
            if r:
                terms[key] = r
            elif key in terms:
                del terms[key]
        return CoefPoly._raw(terms)

    def _coerce(self, other):
        if isinstance(other, CoefPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return CoefPoly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coef in other._terms.items():
            r = terms.get(mono, Fraction(0)) + coef
            if r:
                terms[mono] = r
            elif mono in terms:
                del terms[mono]
        return CoefPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return CoefPoly._raw({mono: -coef for mono, coef in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return CoefPoly._raw({})
        if len(b) == 1:
            (bm, bc), = b.items()
            if not bm:
                return CoefPoly._raw({m: c * bc for m, c in a.items()})
        terms = {}
        for am, ac in a.items():
            for bm, bc in b.items():
                key = am + bm if not (am and bm) else _merge_mono(am, bm)
                r = terms.get(key, Fraction(0)) + ac * bc
                if r:
                    terms[key] = r
                elif key in terms:
                    del terms[key]
        return CoefPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers require a non-negative integer")
        out = CoefPoly(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"CoefPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _merge_mono(am, bm):
    acc = dict(am)
    for name, exp in bm:
        acc[name] = acc.get(name, 0) + exp
    return tuple(sorted(acc.items()))


class GeneratorId(NamedTuple):
    index: int
    name: str


class AlgebraContext:
    """Declares the generator and parameter names of one free algebra.

    Two contexts compare equal iff they declare the same names in the same
    order, and elements may only be combined when their contexts are equal.
    """

    __slots__ = ("generators", "parameters", "_gen_index")

    def __init__(self, generators, parameters=()):
        gens = tuple(generators)
        params = tuple(parameters)
        for name in gens + params:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid name {name!r}")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        if len(set(params)) != len(params):
            raise ValueError("duplicate parameter names")
        if set(gens) & set(params):
            raise ValueError("generator and parameter names must be disjoint")
        self.generators = gens
        self.parameters = params
        self._gen_index = {name: i for i, name in enumerate(gens)}

    def generator_ids(self):
        return tuple(GeneratorId(i, name) for i, name in enumerate(self.generators))

    def gen(self, name):
        """The generator ``name`` as an element."""
        if name not in self._gen_index:
            raise ContextError(f"unknown generator {name!r}")
        word = (self._gen_index[name],)
        return FreeElement._raw(self, {word: CoefPoly(1)})

    def gens(self):
        """All generators, in declaration order."""
        return tuple(self.gen(name) for name in self.generators)

    def param(self, name):
        """The parameter ``name`` as a coefficient polynomial."""
        if name not in self.parameters:
            raise ContextError(f"unknown parameter {name!r}")
        return CoefPoly.parameter(name)

    def zero(self):
        return FreeElement._raw(self, {})

    def one(self):
        return FreeElement._raw(self, {(): CoefPoly(1)})

    def scalar(self, value):
        """The scalar ``value`` times the empty word."""
        coef = self._check_coef(value)
        if coef.is_zero:
            return self.zero()
        return FreeElement._raw(self, {(): coef})

    def element(self, terms):
        """Build an element from ``{word-as-name-tuple: coefficient}``."""
        acc = {}
        for word, coef in terms.items():
            if isinstance(word, str):
                word = (word,)
            idx = []
            for name in word:
                if name not in self._gen_index:
                    raise ContextError(f"unknown generator {name!r}")
                idx.append(self._gen_index[name])
            key = tuple(idx)
            c = acc.get(key, CoefPoly(0)) + self._check_coef(coef)
            if c:
                acc[key] = c
            elif key in acc:
                del acc[key]
        return FreeElement._raw(self, acc)

    def _check_coef(self, value):
        coef = value if isinstance(value, CoefPoly) else CoefPoly(value)
        extra = coef.parameters() - set(self.parameters)
        if extra:
            raise ContextError(f"undeclared parameters: {sorted(extra)}")
        return coef

    def __eq__(self, other):
        if not isinstance(other, AlgebraContext):
            return NotImplemented
        return (self.generators == other.generators
                and self.parameters == other.parameters)

    def __hash__(self):
        return hash((self.generators, self.parameters))

    def __repr__(self):
        return (f"AlgebraContext(generators={self.generators!r}, "
                f"parameters={self.parameters!r})")


class FreeElement:
    """An element of the free algebra attached to an :class:`AlgebraContext`.

    Supports ``+``, ``-``, ``*``, and ``**`` with non-negative integer
    exponents; ints, Fractions, and CoefPolys act as scalars on either side.
    Instances are immutable.
    """

    __slots__ = ("context", "_terms")

    def __init__(self, context, terms=None):
        if not isinstance(context, AlgebraContext):
            raise TypeError("first argument must be an AlgebraContext")
        built = context.element(terms or {})
        self.context = context
        self._terms = built._terms

    @classmethod
    def _raw(cls, context, terms):
        # Trusted constructor: terms must map index-words to nonzero CoefPolys.
        self = cls.__new__(cls)
        self.context = context
        self._terms = terms
        return self

    @property
    def is_zero(self):
        return not self._terms

    def terms(self):
        """Iterate ``(word-as-name-tuple, CoefPoly)`` in canonical order."""
        gens = self.context.generators
        for word in sorted(self._terms, key=lambda w: (len(w), w)):
            yield tuple(gens[i] for i in word), self._terms[word]

    def coefficient(self, word):
        """Coefficient of ``word`` (a tuple of generator names)."""
        if isinstance(word, str):
            word = (word,)
        idx = []
        for name in word:
            if name not in self.context._gen_index:
                raise ContextError(f"unknown generator {name!r}")
            idx.append(self.context._gen_index[name])
        return self._terms.get(tuple(idx), CoefPoly(0))

    def substitute_params(self, values):
        """Evaluate some parameters at rational values in every coefficient."""
        for name in values:
            if name not in self.context.parameters:
                raise ContextError(f"unknown parameter {name!r}")
        terms = {}
        for word, coef in self._terms.items():
            c = coef.substitute(values)
            if c:
                terms[word] = c
        return FreeElement._raw(self.context, terms)

    def _check_same_context(self, other):
        if self.context != other.context:
            raise ContextError("elements belong to different algebra contexts")

    def _coerce_scalar(self, value):
        if isinstance(value, (int, Fraction, CoefPoly)):
            return self.context._check_coef(value)
        return None

    def __add__(self, other):
        if isinstance(other, FreeElement):
            self._check_same_context(other)
            terms = dict(self._terms)
            for word, coef in other._terms.items():
                c = terms.get(word, CoefPoly(0)) + coef
                if c:
                    terms[word] = c
                elif word in terms:
                    del terms[word]
            return FreeElement._raw(self.context, terms)
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return self + FreeElement._raw(self.context, {(): coef} if coef else {})

    __radd__ = __add__

    def __neg__(self):
        return FreeElement._raw(
            self.context, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, FreeElement):
            self._check_same_context(other)
            return self + (-other)
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return self + (-coef)

    def __rsub__(self, other):
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return (-self) + coef

    def scale(self, value):
        """Multiply by a scalar (int, Fraction, or CoefPoly)."""
        coef = self._coerce_scalar(value)
        if coef is None:
            raise TypeError(f"cannot scale by {type(value).__name__}")
        if coef.is_zero:
            return self.context.zero()
        terms = {}
        for word, c in self._terms.items():
            r = c * coef
            if r:
                terms[word] = r
        return FreeElement._raw(self.context, terms)

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            self._check_same_context(other)
            terms = {}
            for wa, ca in self._terms.items():
                for wb, cb in other._terms.items():
                    word = wa + wb
                    c = terms.get(word, CoefPoly(0)) + ca * cb
                    if c:
                        terms[word] = c
                    elif word in terms:
                        del terms[word]
            return FreeElement._raw(self.context, terms)
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return self.scale(coef)

    def __rmul__(self, other):
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return self.scale(coef)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("element powers require a non-negative integer")
        out = self.context.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            self._check_same_context(other)
            return self._terms == other._terms
        coef = self._coerce_scalar(other)
        if coef is None:
            return NotImplemented
        return self._terms == ({(): coef} if coef else {})

    def __repr__(self):
        return f"<FreeElement {format_element(self)}>"

    def __str__(self):
        return format_element(self)


def _mono_in_order(mono, order):
    """Monomial factors sorted by declaration order, unknown names last."""
    rank = {name: i for i, name in enumerate(order)}
    return sorted(mono, key=lambda item: (rank.get(item[0], len(order)), item[0]))


def _mono_sort_key(mono, order):
    exps = dict(mono)
    vec = tuple(exps.get(name, 0) for name in order)
    extra = tuple(sorted((name, exp) for name, exp in mono if name not in set(order)))
    return (sum(exp for _, exp in mono), vec, extra)


def _join_signed(parts):
    out = []
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append(" - " + body if neg else " + " + body)
    return "".join(out)


def format_poly(poly, parameter_order=()):
    """Render a coefficient polynomial; monomials in descending graded order."""
    if poly.is_zero:
        return "0"
    order = tuple(parameter_order)
    monos = sorted(poly._terms, key=lambda m: _mono_sort_key(m, order), reverse=True)
    parts = []
    for mono in monos:
        r = poly._terms[mono]
        factors = []
        if abs(r) != 1 or not mono:
            factors.append(str(abs(r)))
        for name, exp in _mono_in_order(mono, order):
            factors.append(name if exp == 1 else f"{name}^{exp}")
        parts.append((r < 0, "*".join(factors)))
    return _join_signed(parts)


def format_element(x):
    """Render an element in the grammar accepted by :func:`parse_element`.

    Terms appear in canonical word order; a coefficient with several
    monomials is parenthesized in front of its word.
    """
    if x.is_zero:
        return "0"
    ctx = x.context
    parts = []
    for word in sorted(x._terms, key=lambda w: (len(w), w)):
        poly = x._terms[word]
        word_factors = [ctx.generators[i] for i in word]
        if len(poly) == 1:
            (mono, r), = poly._terms.items()
            factors = []
            if abs(r) != 1 or (not mono and not word):
                factors.append(str(abs(r)))
            for name, exp in _mono_in_order(mono, ctx.parameters):
                factors.append(name if exp == 1 else f"{name}^{exp}")
            factors.extend(word_factors)
            parts.append((r < 0, "*".join(factors)))
        else:
            body = format_poly(poly, ctx.parameters)
            if word:
                parts.append((False, f"({body})*" + "*".join(word_factors)))
            else:
                parts.append((False, body))
    return _join_signed(parts)


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<num>[0-9]+(?:/[0-9]+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the element grammar.

    element := term (('+' | '-') term)*
    term    := ('+' | '-')? factor ('*' factor)*
    factor  := atom ('^' UINT)?
    atom    := IDENT | RATIONAL | '(' element ')'

    Multiplication is always explicit; juxtaposition is a parse error.
    """

    def __init__(self, tokens, context):
        self._toks = tokens
        self._i = 0
        self._ctx = context

    def _peek(self):
        return self._toks[self._i]

    def _next(self):
        tok = self._toks[self._i]
        self._i += 1
        return tok

    def parse(self):
        node = self._element()
        tok = self._peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def _element(self):
        acc = self._term()
        while self._peek().kind == "op" and self._peek().text in "+-":
            op = self._next()
            rhs = self._term()
            acc = acc + rhs if op.text == "+" else acc - rhs
        return acc

    def _term(self):
        negate = False
        tok = self._peek()
        if tok.kind == "op" and tok.text in "+-":
            self._next()
            negate = tok.text == "-"
        acc = self._factor()
        while self._peek().kind == "op" and self._peek().text == "*":
            self._next()
            acc = acc * self._factor()
        return -acc if negate else acc

    def _factor(self):
        atom = self._atom()
        tok = self._peek()
        if tok.kind == "op" and tok.text == "^":
            self._next()
            exp = self._peek()
            if exp.kind != "num" or "/" in exp.text:
                raise ParseError("exponent must be an unsigned integer", exp.pos)
            self._next()
            atom = atom ** int(exp.text)
        return atom

    def _atom(self):
        tok = self._next()
        if tok.kind == "num":
            try:
                value = Fraction(tok.text)
            except ZeroDivisionError:
                raise ParseError("zero denominator in rational literal", tok.pos) from None
            return self._ctx.scalar(value)
        if tok.kind == "ident":
            name = tok.text
            if name in self._ctx._gen_index:
                return self._ctx.gen(name)
            if name in self._ctx.parameters:
                return self._ctx.scalar(CoefPoly.parameter(name))
            raise ContextError(f"unknown identifier {name!r}")
        if tok.kind == "op" and tok.text == "(":
            node = self._element()
            closing = self._next()
            if closing.kind != "op" or closing.text != ")":
                got = closing.text or "end of input"
                raise ParseError(f"expected ')', got {got}", closing.pos)
            return node
        got = tok.text or "end of input"
        raise ParseError(f"expected an identifier, number, or '(', got {got}", tok.pos)


def parse_element(text, context):
    """Parse expression text into an element of ``context``."""
    if not isinstance(text, str):
        raise TypeError("expected expression text")
    return _Parser(_tokenize(text), context).parse()


def element_to_json(x):
    """Serialize an element to a JSON-compatible dict.

    Terms follow the canonical word order; within a coefficient, monomials
    are listed in descending graded order and rationals are carried as
    decimal strings so no precision is lost.
    """
    ctx = x.context
    terms = []
    for word in sorted(x._terms, key=lambda w: (len(w), w)):
        poly = x._terms[word]
        coef = []
        monos = sorted(poly._terms,
                       key=lambda m: _mono_sort_key(m, ctx.parameters),
                       reverse=True)
        for mono in monos:
            r = poly._terms[mono]
            coef.append({
                "mono": {name: exp for name, exp
                         in _mono_in_order(mono, ctx.parameters)},
                "num": str(r.numerator),
                "den": str(r.denominator),
            })
        terms.append({"word": [ctx.generators[i] for i in word], "coef": coef})
    return {"terms": terms}


def element_from_json(data, context):
    """Rebuild an element from :func:`element_to_json` output."""
    if not isinstance(data, dict) or "terms" not in data:
        raise ValueError("expected an object with a 'terms' list")
    terms = data["terms"]
    if not isinstance(terms, list):
        raise ValueError("'terms' must be a list")
    out = context.zero()
    for entry in terms:
        if not isinstance(entry, dict):
            raise ValueError("each term must be an object")
        word = entry.get("word")
        coef = entry.get("coef")
        if not isinstance(word, list) or not all(isinstance(g, str) for g in word):
            raise ValueError("'word' must be a list of generator names")
        if not isinstance(coef, list):
            raise ValueError("'coef' must be a list of monomial entries")
        poly = CoefPoly(0)
        for mono_entry in coef:
            if not isinstance(mono_entry, dict):
                raise ValueError("each coefficient entry must be an object")
            mono = mono_entry.get("mono", {})
            if not isinstance(mono, dict):
                raise ValueError("'mono' must be an object")
            try:
                num = int(mono_entry["num"])
                den = int(mono_entry["den"])
            except (KeyError, TypeError, ValueError):
                raise ValueError("'num' and 'den' must be integer strings") from None
            if den == 0:
                raise ValueError("zero denominator")
            poly = poly + CoefPoly({tuple(mono.items()): Fraction(num, den)})
        out = out + context.element({tuple(word): poly})
    return out
