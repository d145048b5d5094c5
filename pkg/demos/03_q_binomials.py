from ncbinom import (AlgebraContext, QRelation, benaoum_coefficient,
                     format_element, format_poly, gaussian_binomial, normalize,
                     verify_q_binomial)

ctx = AlgebraContext(("x", "y"), ("q", "h"))
x, y = ctx.gens()

rel = QRelation(ctx)
nf = normalize((x + y) ** 3, rel)
print("(x + y)^3 under x*y -> q*y*x:")
print(" ", format_element(nf.element))

print("gaussian coefficients, n = 4:")
for k in range(5):
    print(f"  [4,{k}] =", format_poly(gaussian_binomial(4, k), ("q",)))

relh = QRelation(ctx, h="h")
nfh = normalize((x + y) ** 2, relh)
print("(x + y)^2 under x*y -> q*y*x + h*y*y:")
print(" ", format_element(nfh.element))
print("  y^2 coefficient:", format_poly(benaoum_coefficient(2, 2), ("q", "h")))

print("expansion checks:",
      verify_q_binomial(6).equal,
      verify_q_binomial(6, with_h=True).equal)
