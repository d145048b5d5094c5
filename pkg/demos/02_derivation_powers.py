"""Powers of an element written through iterates of a two-sided derivation."""

from ncbinom import (AlgebraContext, DerivationOp, commutator, format_element,
                     verify_difference_of_powers, verify_power_via_derivation,
                     verify_wyss)

ctx = AlgebraContext(("a", "b", "c"))
a, b, c = ctx.gens()

op = DerivationOp(a, b)  # x -> a*x - x*b
print("D(c)    =", format_element(op(c)))
print("D^2(1)  =", format_element(op.power_iterated(ctx.one(), 2)))
print("closed  =", format_element(op.power_closed_form(ctx.one(), 2)))

# a^n recovered from derivation iterates and powers of b
for n in range(5):
    rep = verify_power_via_derivation(a, b, n)
    print(f"a^{n} expansion around b: equal={rep.equal}")

# same machinery at composite base points
k = commutator(a, b)
rep = verify_power_via_derivation(k, c, 3)
print("commutator cube around c: equal =", rep.equal)

# a^n - b^n as one double sum, and the sum-power form
print("difference n=4: equal =", verify_difference_of_powers(a, b, 4).equal)
print("sum power  n=4: equal =", verify_wyss(a, b, 4).equal)
