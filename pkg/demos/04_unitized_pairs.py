"""Adjoining a unit as (element, scalar) pairs.

The algebra has no unit of its own; pairs multiply so that (0, 1) acts as
one.  The power identities survive the move, with scalar weights riding
along in the second slot.
"""

from fractions import Fraction

from ncbinom import (AlgebraContext, Unitized, embed, unit,
                     verify_unitized_binomial, verify_unitized_power)

ctx = AlgebraContext(("a", "b", "c"))
a, b, c = ctx.gens()

u = embed(a) + unit(ctx).scale(2)  # the pair (a, 2)
print("(a, 2)^2 =", repr(u * u))
print("(a, 0)^3 scalar part:", (embed(a) ** 3).scalar)

for w in (0, 1, -2, Fraction(3, 5)):
    rep = verify_unitized_power(a, b, w, 4)
    print(f"power identity, weight {w}: equal={rep.equal}")

rep = verify_unitized_binomial(a, b, c, Fraction(3, 5), 3)
print("binomial identity, weight 3/5:", rep.equal)

# weights can stay symbolic: beta is a declared parameter, not a number
sctx = AlgebraContext(("a", "b"), ("beta",))
sa, sb = sctx.gens()
rep = verify_unitized_power(sa, sb, sctx.param("beta"), 3)
print("symbolic weight beta:", rep.equal)
