"""
Exact arithmetic in a free algebra
==================================

Words over named generators, rational coefficients that may carry
polynomial parameters, and a parser that inverts the printer.
"""

from ncbinom import AlgebraContext, format_element, parse_element

ctx = AlgebraContext(("a", "b", "c"), ("q", "h"))
a, b, c = ctx.gens()

p = (a + b) ** 2
print("(a + b)^2          =", format_element(p))
print("(a + b)*(a - b)    =", format_element((a + b) * (a - b)))
print("a*b - b*a          =", format_element(a * b - b * a))

# coefficients are exact rationals, possibly with parameters
q = ctx.param("q")
e = a.scale(q) + b.scale(3) - c
print("q*a + 3*b - c      =", format_element(e))
print("  at q = 1         =", format_element(e.substitute_params({"q": 1})))

# the printer and the parser are inverse to each other
text = format_element(e * e)
back = parse_element(text, ctx)
print("square, reparsed   =", format_element(back))
print("round trip equal?  ", back == e * e)
