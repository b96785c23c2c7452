"""
Boolean functions, literals, and optimal decision trees
=======================================================

How functions are written down, how families are enumerated, and what a
deterministic query strategy looks like when it is provably optimal.
"""

from querylab import (
    det_complexity,
    enumerate_functions,
    parse_function,
    tree_depth,
    tree_to_obj,
    walk,
)

# A total function is a truth table: arity 2, outputs for 00, 01, 10, 11.
OR2 = parse_function("tt:2:0111")
print("OR2:", OR2.encoding())
print("OR2(10) =", OR2("10"))

# Partial functions leave holes with '-'.  Only 00 and 11 are in the domain.
gap = parse_function("tt:2:0--1")
print("partial domain:", gap.domain)

# The same object can be written as an explicit domain map.  Round trips are
# exact, and the canonical encoding picks the stable truth-table form.
ext = parse_function("ext:2:{00=0,11=1}")
print("same function:", ext == gap)

# D(f): the depth a deterministic strategy needs in the worst case.  Asking
# for the tree returns the witness alongside the number.
d, tree = det_complexity(OR2, with_tree=True)
print("D(OR2) =", d)

# The certificate is a tree you can walk.  Internal nodes name a position to
# query; leaves carry the answer.
print("optimal tree:", tree_to_obj(tree))
print("depth:", tree_depth(tree))

for x in OR2.domain:
    label, cost = walk(tree, x)
    assert label == OR2(x) and cost <= d
print("tree agrees with OR2 on the whole domain")

# Families enumerate in a frozen order, so experiments are reproducible.
family = list(enumerate_functions("nonconstant-total:2"))
print("nonconstant total functions on 2 bits:", len(family))
print("depth histogram:", sorted(det_complexity(f) for f in family))
