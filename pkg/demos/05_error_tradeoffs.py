"""
Error budgets: expected cost, worst-case cost, and amplification
================================================================

What an algorithm buys by being allowed to err, and what it costs to push
the error back down.
"""

from fractions import Fraction

from querylab import (
    MeasureContext,
    amplification_repetitions,
    expected_to_worstcase_factor,
    majority_error,
    markov_truncation,
    parse_function,
    repeat_cost,
)

ctx = MeasureContext()
XOR2 = parse_function("tt:2:0110")
OR2 = parse_function("tt:2:0111")

# Expected query cost as the error budget grows.  XOR never gets cheaper in
# the worst case, but its expected cost drops linearly with the budget.
for eps in (Fraction(0), Fraction(1, 4), Fraction(1, 3)):
    print(f"Rbar_{eps}(XOR2) = {ctx.measure(XOR2, 'Rbar', eps)}")

# Worst-case depth at error 1/3: OR2 can stop after one query, XOR2 cannot.
print("Rwc(OR2, 1/3) =", ctx.measure(OR2, "Rwc", Fraction(1, 3)))
print("Rwc(XOR2, 1/3) =", ctx.measure(XOR2, "Rwc", Fraction(1, 3)))

# Majority voting over independent runs.  Three runs at error 1/3 give 7/27,
# computed exactly from the binomial tail.
print("majority_error(1/3, 3) =", majority_error(Fraction(1, 3), 3))

# How many runs to reach a target error?  The analytic bound is an advisory
# ceiling; the returned count is the exact minimum.
for target in (Fraction(7, 27), Fraction(1, 10), Fraction(1, 100)):
    advisory, runs = amplification_repetitions(Fraction(1, 3), target)
    print(f"target {target}: {runs} runs (analytic bound {advisory:.2f})")

# Truncation converts an expected-cost algorithm into a worst-case one, at
# the price of delta extra error: stop after floor(expected/delta) queries
# and the run still finishes in time with probability at least 1 - delta.
cap, success = markov_truncation(5, Fraction(1, 3))
print(f"truncating expected cost 5 at delta 1/3: cap {cap}, "
      f"finishes in time with probability >= {success}")

# And the constant-factor menu for turning expected into worst-case at the
# standard error 1/3, plus the expected cost of repeat-until-certain when
# each attempt costs 2 queries and fails a third of the time.
print("expected_to_worstcase_factor(1/3) =",
      expected_to_worstcase_factor(Fraction(1, 3)))
print("repeat_cost(2, 1/3) =", repeat_cost(2, Fraction(1, 3)))
