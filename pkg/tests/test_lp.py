from fractions import Fraction

import pytest

from halvecut.core.errors import IterationLimitError, LPError
from halvecut.lp import solve_covering_lp


def test_single_row():
    solution = solve_covering_lp(2, [[0, 1]])
    assert solution.value == 1
    assert sum(solution.x) == 1


def test_odd_cycle_has_a_half_integral_optimum():
    rows = [[0, 1], [1, 2], [0, 2]]
    solution = solve_covering_lp(3, rows)
    assert solution.value == Fraction(3, 2)
    assert solution.x == (Fraction(1, 2),) * 3


def test_duals_certify_the_optimum():
    rows = [[0, 1], [1, 2], [0, 2], [3], [2, 3]]
    solution = solve_covering_lp(4, rows)
    assert sum(solution.duals) == solution.value
    assert all(y >= 0 for y in solution.duals)
    for j in range(4):
        assert sum(y for y, row in zip(solution.duals, rows) if j in row) <= 1
    for row in rows:
        assert sum(solution.x[j] for j in row) >= 1


def test_unused_variables_stay_zero():
    solution = solve_covering_lp(5, [[4]])
    assert solution.x == (0, 0, 0, 0, 1)


def test_no_rows():
    solution = solve_covering_lp(3, [])
    assert solution.value == 0
    assert solution.x == (0, 0, 0)


def test_empty_row_is_an_error():
    with pytest.raises(LPError):
        solve_covering_lp(2, [[0], []])


def test_out_of_range_variable():
    with pytest.raises(LPError):
        solve_covering_lp(2, [[2]])


def test_pivot_limit():
    with pytest.raises(IterationLimitError):
        solve_covering_lp(3, [[0, 1], [1, 2]], max_pivots=0)


def test_dominated_columns_are_dropped_without_changing_the_optimum():
    # Column 1 covers every row that 0 or 2 covers.
    rows = [[0, 1], [1, 2], [1, 3], [3]]
    solution = solve_covering_lp(4, rows)
    assert solution.value == 2
    assert solution.x[0] == 0 and solution.x[2] == 0
    assert sum(solution.duals) == solution.value
    for j in range(4):
        assert sum(y for y, row in zip(solution.duals, rows) if j in row) <= 1
    for row in rows:
        assert sum(solution.x[j] for j in row) >= 1


def test_identical_columns_keep_the_lowest_index():
    solution = solve_covering_lp(3, [[2, 1], [1, 2]])
    assert solution.x == (0, 1, 0)
