"""
The sabotage game, played exactly
=================================

Start from a function, hide the answer behind damaged inputs, and ask how
many queries a zero-error randomized strategy needs to notice the damage.
"""

from fractions import Fraction

from querylab import parse_function, sabotage, solve_expected_game, unique_sabotage

OR2 = parse_function("tt:2:0111")

# Sabotage OR2: every string over {0,1,*} consistent with both a 0-input and
# a 1-input becomes a '*' instance, and its '+' twin marks the same damage
# written with daggers.  The new function asks only: which mark was used?
sab = sabotage(OR2)
print("sabotaged domain:", sab.domain)
for x in sab.domain:
    print(f"  {x} -> {sab(x)}")

# Zero-error randomized cost = value of a two-player game.  The solver runs
# column generation over decision trees and certifies the optimum both ways:
# a tree mixture achieving the value and a hard distribution matching it.
sol = solve_expected_game(sab, Fraction(0))
print("RS(OR2) =", sol.value)

print("hard distribution:")
for x, w in sorted(sol.hard_distribution.items()):
    print(f"  {x}: {w}")

print("optimal mixture:")
for tree, weight in sol.support:
    print(f"  weight {weight}: {tree}")

# Every audit flag is checked internally on each solve; they are also kept
# on the solution for inspection.
print("audit:", sol.audit)

# The unique-sabotage variant keeps only the inputs with exactly one hole.
usab = unique_sabotage(OR2)
print("unique-sabotage domain:", usab.domain)
print("RSu(OR2) =", solve_expected_game(usab, Fraction(0)).value)
