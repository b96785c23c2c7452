"""Exact simplex: known optima, duals, degeneracy, and vertex cross-checks."""

from fractions import Fraction

import pytest

from querylab import LinearProgram, check_feasible, solve_lp

from oracles import oracle_lp_vertices


def test_classic_max_with_known_duals():
    lp = LinearProgram(
        sense="max",
        objective=[3, 5],
        rows=[
            ([1, 0], "<=", 4),
            ([0, 2], "<=", 12),
            ([3, 2], "<=", 18),
        ],
    )
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    assert sol.objective == 36
    assert sol.x == [2, 6]
    assert sol.duals == [0, Fraction(3, 2), 1]


def test_min_with_ge_rows():
    lp = LinearProgram(
        sense="min",
        objective=[2, 3],
        rows=[([1, 1], ">=", 4)],
    )
    sol = solve_lp(lp)
    assert sol.objective == 8
    assert sol.x == [4, 0]
    assert sol.duals == [2]


def test_equality_and_free_variable():
    lp = LinearProgram(
        sense="min",
        objective=[1, 0],
        rows=[([1, 1], "=", 3), ([0, 1], "<=", 5)],
        free_vars=frozenset({0}),
    )
    sol = solve_lp(lp)
    # x0 is free, so push x1 to its cap
    assert sol.objective == -2
    assert sol.x == [-2, 5]


def test_infeasible():
    lp = LinearProgram(
        sense="max",
        objective=[1],
        rows=[([1], "<=", -1)],
    )
    assert solve_lp(lp).status == "infeasible"
    ok, _ = check_feasible(lp)
    assert not ok


def test_feasible_witness():
    lp = LinearProgram(
        sense="max",
        objective=[1, 1],
        rows=[([1, 1], "<=", 3), ([1, 0], ">=", 1)],
    )
    ok, witness = check_feasible(lp)
    assert ok
    x, y = witness
    assert x >= 1 and x + y <= 3 and x >= 0 and y >= 0


def test_unbounded():
    lp = LinearProgram(sense="max", objective=[1], rows=[([1], ">=", 0)])
    assert solve_lp(lp).status == "unbounded"


def test_redundant_row_gets_zero_dual():
    lp = LinearProgram(
        sense="max",
        objective=[1, 1],
        rows=[
            ([1, 1], "<=", 4),
            ([2, 2], "<=", 8),  # same constraint scaled
            ([1, 0], "<=", 3),
        ],
    )
    sol = solve_lp(lp)
    assert sol.objective == 4
    # complementary slackness leaves the scaled copy with a consistent dual
    assert sol.duals[0] + 2 * sol.duals[1] == 1


def test_equality_redundancy():
    # second row is the first row doubled; the solver must drop it cleanly
    lp = LinearProgram(
        sense="min",
        objective=[1, 1],
        rows=[([1, 1], "=", 2), ([2, 2], "=", 4)],
    )
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    assert sol.objective == 2


def test_beale_degenerate_cycle_terminates():
    lp = LinearProgram(
        sense="min",
        objective=[Fraction(-3, 4), 150, Fraction(-1, 50), 6],
        rows=[
            ([Fraction(1, 4), -60, Fraction(-1, 25), 9], "<=", 0),
            ([Fraction(1, 2), -90, Fraction(-1, 50), 3], "<=", 0),
            ([0, 0, 1, 0], "<=", 1),
        ],
    )
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    assert sol.objective == Fraction(-1, 20)


def test_rational_coefficients_exact():
    lp = LinearProgram(
        sense="max",
        objective=[Fraction(1, 3), Fraction(1, 7)],
        rows=[([Fraction(1, 2), 1], "<=", Fraction(5, 2))],
    )
    sol = solve_lp(lp)
    assert sol.objective == Fraction(5, 3)
    assert sol.x == [5, 0]


_CROSS_CHECK_LPS = [
    ("max", [1, 2], [([1, 1], "<=", 5), ([2, 1], "<=", 8)]),
    ("min", [3, 1], [([1, 2], ">=", 6), ([1, 0], "<=", 10)]),
    ("max", [2, 3, 1], [([1, 1, 1], "<=", 10), ([1, 0, 2], "<=", 8), ([0, 1, 0], "<=", 4)]),
    ("min", [1, 1, 1], [([1, 1, 0], ">=", 3), ([0, 1, 1], ">=", 4)]),
    ("max", [5, 4], [([6, 4], "<=", 24), ([1, 2], "<=", 6)]),
    ("min", [2, 5, 3], [([1, 2, 1], "=", 7), ([3, 1, 0], ">=", 4)]),
    ("max", [Fraction(1, 2), Fraction(2, 3)], [([1, 1], "<=", 4), ([1, 3], "<=", 9)]),
    ("min", [4, 7, 2, 1], [([1, 1, 1, 1], "=", 6), ([2, 0, 1, 0], ">=", 3), ([0, 1, 0, 2], ">=", 2)]),
]


@pytest.mark.parametrize("sense,obj,rows", _CROSS_CHECK_LPS)
def test_against_vertex_enumeration(sense, obj, rows):
    sol = solve_lp(LinearProgram(sense=sense, objective=obj, rows=rows))
    assert sol.status == "optimal"
    assert sol.objective == oracle_lp_vertices(sense, obj, rows)


def test_duals_price_the_rhs():
    # nudging a binding rhs by t changes the optimum by dual * t
    base_rows = [([1, 1], "<=", 5), ([2, 1], "<=", 8)]
    sol = solve_lp(LinearProgram(sense="max", objective=[1, 2], rows=base_rows))
    bumped = solve_lp(
        LinearProgram(
            sense="max",
            objective=[1, 2],
            rows=[([1, 1], "<=", Fraction(51, 10)), ([2, 1], "<=", 8)],
        )
    )
    assert bumped.objective - sol.objective == sol.duals[0] * Fraction(1, 10)
