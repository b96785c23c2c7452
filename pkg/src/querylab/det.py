"""Worst-case deterministic measures: tree depth, certificates, block sensitivity.

det_complexity is a memoized minimax over knowledge states, keyed by the set
of still-consistent domain inputs: two states with the same consistent set
have the same continuation value, and querying a position on which the set
agrees is never useful, so positions that fail to split the set are skipped.
"""

from __future__ import annotations

from itertools import combinations

from .lp import LinearProgram, solve_lp
from .rational import to_fraction
from .trees import Leaf, Node


def _branch_masks(f):
    """For each position and symbol, the set of domain indices showing it."""
    dom = f.domain
    masks = []
    for i in range(f.arity):
        per = {}
        for idx, x in enumerate(dom):
            per.setdefault(x[i], set()).add(idx)
        masks.append({a: frozenset(s) for a, s in per.items()})
    return masks


def det_complexity(f, with_tree=False):
    """Minimum worst-case query count of a deterministic tree computing f.

    Empty domain costs 0.  With with_tree=True also returns an optimal tree
    (lowest splitting position first on ties), or None for the empty domain.
    """
    dom = f.domain
    if not dom:
        return (0, None) if with_tree else 0
    labels = [f.table[x] for x in dom]
    masks = _branch_masks(f)
    alphabet = f.alphabet
    memo = {}

    def value(s):
        got = memo.get(s)
        if got is not None:
            return got
        first = labels[next(iter(s))]
        if all(labels[i] == first for i in s):
            memo[s] = (0, None)
            return memo[s]
        best = None
        best_pos = None
        for i in range(f.arity):
            parts = []
            for a in alphabet:
                mask = masks[i].get(a)
                if mask is None:
                    continue
                part = s & mask
                if part:
                    parts.append(part)
            if len(parts) < 2:
                continue
            worst = 1 + max(value(p)[0] for p in parts)
            if best is None or worst < best:
                best, best_pos = worst, i
        memo[s] = (best, best_pos)
        return memo[s]

    full = frozenset(range(len(dom)))
    depth, _ = value(full)

    if not with_tree:
        return depth

    def build(s):
        _, pos = memo[s]
        if pos is None:
            return Leaf(labels[next(iter(s))])
        children = {}
        for a in alphabet:
            mask = masks[pos].get(a)
            if mask is None:
                continue
            part = s & mask
            if part:
                children[a] = build(part)
        return Node(pos, children)

    return depth, build(full)


def _certifies(f, x, positions):
    """Does revealing x at these positions pin the label down?"""
    label = f.table[x]
    for y in f.domain:
        if all(y[i] == x[i] for i in positions) and f.table[y] != label:
            return False
    return True


def certificate_complexity(f):
    """Smallest certificate size per input, and the max over the domain."""
    per_input = {}
    for x in f.domain:
        found = None
        for size in range(f.arity + 1):
            for positions in combinations(range(f.arity), size):
                if _certifies(f, x, positions):
                    found = size
                    break
            if found is not None:
                break
        per_input[x] = found
    overall = max(per_input.values(), default=0)
    return overall, per_input


def _require_boolean(f, what):
    if f.alphabet != "01" or any(len(v) != 1 for v in f.table.values()):
        raise ValueError(f"{what} is defined for Boolean functions only")


def sensitive_blocks(f, x):
    """All nonempty position sets whose flip stays in the domain and changes f."""
    _require_boolean(f, "block sensitivity")
    label = f.table[x]
    blocks = []
    for size in range(1, f.arity + 1):
        for positions in combinations(range(f.arity), size):
            block = frozenset(positions)
            y = "".join(
                ("1" if c == "0" else "0") if i in block else c
                for i, c in enumerate(x)
            )
            if y in f.table and f.table[y] != label:
                blocks.append(block)
    return blocks


def minimal_sensitive_blocks(f, x):
    blocks = sensitive_blocks(f, x)
    block_set = set(blocks)
    out = []
    for b in blocks:
        if not any(other < b for other in block_set):
            out.append(b)
    return out


def max_disjoint(blocks):
    """Largest number of pairwise disjoint blocks, by exhaustive packing."""
    ordered = sorted(blocks, key=lambda b: (len(b), sorted(b)))

    def rec(i, used):
        if i == len(ordered):
            return 0
        best = rec(i + 1, used)
        if not (ordered[i] & used):
            best = max(best, 1 + rec(i + 1, used | ordered[i]))
        return best

    return rec(0, frozenset())


def block_sensitivity(f):
    """Max number of disjoint sensitive blocks, per input and overall."""
    per_input = {}
    for x in f.domain:
        per_input[x] = max_disjoint(minimal_sensitive_blocks(f, x))
    overall = max(per_input.values(), default=0)
    return overall, per_input


def fractional_block_sensitivity(f):
    """LP relaxation of block sensitivity, per input and overall.

    At input x: maximize total weight over sensitive blocks subject to each
    position carrying at most weight 1.
    """
    per_input = {}
    for x in f.domain:
        blocks = sensitive_blocks(f, x)
        if not blocks:
            per_input[x] = to_fraction(0)
            continue
        rows = []
        for i in range(f.arity):
            rows.append(([1 if i in b else 0 for b in blocks], "<=", 1))
        sol = solve_lp(LinearProgram("max", [1] * len(blocks), rows))
        assert sol.status == "optimal"
        per_input[x] = to_fraction(sol.objective)
    overall = max(per_input.values(), default=to_fraction(0))
    return overall, per_input
