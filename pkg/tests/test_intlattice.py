"""Integer lattice and sparse solver behavior."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopchar.intlattice import IntRowLattice, SparseIntSolver, xgcd


def test_xgcd_identity():
    for a, b in ((0, 0), (6, 4), (-6, 4), (7, 0), (0, -5), (12, 18)):
        g, x, y = xgcd(a, b)
        assert g == a * x + b * y
        assert g >= 0


def test_row_lattice_membership():
    lat = IntRowLattice(2)
    lat.add((2, 0))
    lat.add((0, 3))
    assert (4, 3) in lat
    assert (2, -3) in lat
    assert (1, 0) not in lat
    assert (0, 0) in lat


def test_row_lattice_residue_reduces():
    lat = IntRowLattice(2)
    lat.add((2, 1))
    lat.add((0, 5))
    for vec in ((7, 3), (-4, 9), (1, 1), (0, 0)):
        r = lat.residue(vec)
        assert tuple(a - b for a, b in zip(vec, r)) in lat
        assert lat.residue(r) == r


def test_dependent_row_changes_nothing():
    lat = IntRowLattice(3)
    lat.add((1, 2, 0))
    lat.add((0, 0, 4))
    before = lat.basis()
    lat.add((2, 4, 4))
    assert lat.basis() == before


@settings(max_examples=60)
@given(
    st.lists(
        st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
        min_size=1,
        max_size=4,
    ),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
)
def test_residue_is_canonical(rows, vec):
    lat = IntRowLattice(3)
    for row in rows:
        lat.add(row)
    r = lat.residue(vec)
    assert tuple(a - b for a, b in zip(vec, r)) in lat
    assert lat.residue(r) == r


def test_solver_single_column_sign():
    # A doubled generator must come back with coefficient +2, not -2.
    solver = SparseIntSolver()
    solver.add_column("c", {0: 2})
    assert solver.solve({0: 4}) == {"c": 2}
    assert solver.solve({0: -6}) == {"c": -3}
    assert solver.solve({0: 3}) is None


def test_solver_two_columns():
    solver = SparseIntSolver()
    solver.add_column("x", {0: 1, 1: 1})
    solver.add_column("y", {1: 1})
    combo = solver.solve({0: 2, 1: 5})
    assert combo == {"x": 2, "y": 3}


def test_solver_empty_target():
    solver = SparseIntSolver()
    solver.add_column("x", {0: 3})
    assert solver.solve({}) == {}


@settings(max_examples=60)
@given(
    st.dictionaries(
        st.integers(0, 3),
        st.dictionaries(st.integers(0, 4), st.integers(-4, 4), max_size=3),
        min_size=1,
        max_size=4,
    ),
    st.dictionaries(st.integers(0, 3), st.integers(-3, 3), max_size=4),
)
def test_solver_reproduces_combinations(columns, weights):
    solver = SparseIntSolver()
    for key, col in columns.items():
        solver.add_column(key, col)
    target = {}
    for key, c in weights.items():
        for row, v in columns.get(key, {}).items():
            target[row] = target.get(row, 0) + c * v
    target = {row: v for row, v in target.items() if v}
    combo = solver.solve(target)
    assert combo is not None
    rebuilt = {}
    for key, c in combo.items():
        for row, v in columns[key].items():
            rebuilt[row] = rebuilt.get(row, 0) + c * v
    assert {r: v for r, v in rebuilt.items() if v} == target
