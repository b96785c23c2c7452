"""
A landscape scan across every measure
=====================================

One context, ten measures, all sixteen 2-bit functions.  Results are exact
rationals and the whole table is reproducible byte for byte.
"""

from querylab import MeasureContext, enumerate_functions

MENU = ["D", "DS", "C", "bs", "RC", "R0", "RS", "RSu", "Rbar(1/4)", "Rwc(1/3)"]

# A context memoizes per function and per measure, and knows that sabotaging
# f and sabotaging its negation give the same game.  Point cache_dir at a
# directory to persist results across runs (or set QLAB_CACHE_DIR).
ctx = MeasureContext()

header = "function".ljust(12) + "".join(m.rjust(10) for m in MENU)
print(header)
print("-" * len(header))
for f in enumerate_functions("all-total:2"):
    report = ctx.report(f, MENU)
    row = report["function"].ljust(12)
    row += "".join(report["measures"][m].rjust(10) for m in MENU)
    print(row)

# Reports also carry certificates: trees for the deterministic measures,
# hard distributions and tree mixtures for the games.
or2 = ctx.function("tt:2:0111")
report = ctx.report(or2, ["RS"])
cert = report["certificates"]["RS"]
print()
print("RS(OR2) certificate keys:", sorted(cert))
print("hard distribution:", cert["hard_distribution"])
