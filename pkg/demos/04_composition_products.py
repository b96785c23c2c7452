"""
Composition and direct sums: products, almost
=============================================

Two exact stories.  Direct sums double R0 on the nose.  Composition traps
RS(f o g) between RS(f)RS(g) and RS(f)R0(g), and both ends are attained.
"""

from fractions import Fraction

from querylab import (
    MeasureContext,
    best_response,
    compose,
    direct_sum,
    enumerate_functions,
    parse_function,
    solve_expected_game,
)

ctx = MeasureContext()
OR2 = parse_function("tt:2:0111")

# Direct sum: answer f on two disjoint blocks.  Zero-error cost doubles.
pair = direct_sum(OR2, 2)
print("R0(OR2) =", ctx.measure(OR2, "R0"))
print("R0(OR2 # OR2) =", ctx.measure(pair, "R0"))

# The doubling is witnessed by a product hard distribution: take the hard
# distribution for one copy, square it across both blocks, and check that a
# zero-error best response pays double against it.
sol = solve_expected_game(OR2, Fraction(0))
product = {}
for x, wx in sol.hard_distribution.items():
    for y, wy in sol.hard_distribution.items():
        product[x + y] = wx * wy
_, cost = best_response(pair, product)
print("best response against the product distribution:", cost)

# Composition: f o g evaluates f on a block of g-values.
inner = compose(OR2, OR2)
print("OR2 o OR2 =", inner.encoding())

rs_or2 = ctx.measure(OR2, "RS")
rs_comp = ctx.measure(inner, "RS")
print(f"RS(OR2)^2 = {rs_or2 * rs_or2}, RS(OR2 o OR2) = {rs_comp}, "
      f"RS(OR2) R0(OR2) = {rs_or2 * ctx.measure(OR2, 'R0')}")
assert rs_or2 * rs_or2 <= rs_comp <= rs_or2 * ctx.measure(OR2, "R0")

# Sweep the sandwich over every pair of nonconstant total 1- and 2-bit
# functions.  How often does each end bind?
tight_low = tight_high = 0
fams = list(enumerate_functions("nonconstant-total:1")) + list(
    enumerate_functions("nonconstant-total:2")
)
for f in fams:
    for g in fams:
        if compose(f, g).arity > 4:
            continue
        lo = ctx.measure(f, "RS") * ctx.measure(g, "RS")
        hi = ctx.measure(f, "RS") * ctx.measure(g, "R0")
        mid = ctx.measure(compose(f, g), "RS")
        assert lo <= mid <= hi
        tight_low += mid == lo
        tight_high += mid == hi
print(f"lower end tight on {tight_low} pairs, upper end tight on {tight_high}")
