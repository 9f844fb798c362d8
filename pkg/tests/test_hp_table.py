"""Hamiltonian-path table tests, checked against backtracking enumeration."""

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aocount.counting import build_hp_table, hp_count, hp_feasible
from aocount.errors import CapacityError
from aocount.oracles import count_hamiltonian_paths_brute, iter_part_sizes

small_shapes = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)


@pytest.mark.parametrize(
    "m,expected",
    [
        ((1, 1), True),  # single edge is a Hamiltonian path
        ((3, 1), False),  # 1 < 3 - 1
        ((3, 2), True),
        ((1,), True),
        ((2,), False),  # two isolated vertices
        ((2, 2, 2), True),
        ((5, 2, 2), True),  # boundary: 2*5 == 1 + 9
        ((6, 2, 2), False),
    ],
)
def test_feasibility(m, expected):
    assert hp_feasible(m) is expected


def test_feasibility_rejects_bad_tuples():
    with pytest.raises(ValueError):
        hp_feasible(())
    with pytest.raises(ValueError):
        hp_feasible((2, 0))


@given(small_shapes)
def test_feasibility_matches_per_part_definition(m):
    per_part = all(sum(m) - m_i >= m_i - 1 for m_i in m)
    assert hp_feasible(m) == per_part


def test_two_by_two_table():
    # frozen from count_hamiltonian_paths_brute: the 4-cycle has 8 directed
    # Hamiltonian paths, its sub-shapes have 2 each
    table = build_hp_table((2, 2))
    assert table[(1, 1)] == 2
    assert table[(2, 1)] == 2
    assert table[(1, 2)] == 2
    assert table[(2, 2)] == 8
    assert count_hamiltonian_paths_brute((2, 2)) == 8


@pytest.mark.parametrize(
    "m,expected",
    [
        ((1, 1), 2),
        ((2, 1), 2),
        ((3, 1), 0),
        ((1, 1, 1), 6),  # complete graph on 3 vertices: 3!
        ((2, 2, 1), 48),  # frozen from count_hamiltonian_paths_brute
    ],
)
def test_single_counts(m, expected):
    assert hp_count(m, m) == expected


def test_all_ones_is_factorial():
    for k in range(1, 6):
        ones = (1,) * k
        assert hp_count(ones, ones) == math.factorial(k)


def test_single_part_lattice():
    # one part means no edges: one path on one vertex, none beyond
    table = build_hp_table((4,))
    assert table[(1,)] == 1
    for m in range(2, 5):
        assert table[(m,)] == 0


def test_sweep_matches_backtracking():
    for m in iter_part_sizes(7, 3):
        assert hp_count(m, m) == count_hamiltonian_paths_brute(m), m


def test_zero_exactly_where_infeasible():
    table = build_hp_table((4, 3, 2))
    for m, value in table.cells():
        assert (value > 0) == hp_feasible(m), m


def test_pivot_invariance_small():
    for shape in [(3, 3), (2, 3, 4), (2, 2, 2, 2)]:
        first = build_hp_table(shape, pivot_policy="first")
        last = build_hp_table(shape, pivot_policy="last")
        assert [v for _, v in first.cells()] == [v for _, v in last.cells()]


@settings(max_examples=40)
@given(small_shapes)
def test_pivot_invariance_random(shape):
    first = build_hp_table(shape, pivot_policy="first")
    last = build_hp_table(shape, pivot_policy="last")
    assert [v for _, v in first.cells()] == [v for _, v in last.cells()]


def test_unknown_pivot_policy_rejected():
    with pytest.raises(ValueError):
        build_hp_table((2, 2), pivot_policy="middle")


def test_symmetry_under_part_permutation():
    base = (2, 3, 4)
    table = build_hp_table(base)
    for order in permutations(range(3)):
        permuted = build_hp_table(tuple(base[i] for i in order))
        for m, value in table.cells():
            assert permuted[tuple(m[i] for i in order)] == value


def test_insert_slot_multiplier_nonnegative():
    # for any feasible m and any admissible pivot, the number of insertion
    # slots the recurrence multiplies by is nonnegative
    for m, _ in build_hp_table((4, 4, 3)).cells():
        if not hp_feasible(m) or m == (1, 1, 1):
            continue
        for i in range(3):
            if m[i] < 2:
                continue
            p = list(m)
            p[i] -= 1
            assert 1 - p[i] + (sum(p) - p[i]) >= 0, (m, i)


def test_memory_budget_enforced():
    with pytest.raises(CapacityError):
        build_hp_table((100, 100, 100), memory_budget_cells=10_000)
    # a budget exactly equal to the lattice size is fine
    assert build_hp_table((3, 3), memory_budget_cells=9)[(3, 3)] > 0


def test_out_of_lattice_lookup():
    table = build_hp_table((2, 2))
    with pytest.raises(ValueError):
        table[(3, 1)]
    with pytest.raises(ValueError):
        table[(1, 1, 1)]
    with pytest.raises(ValueError):
        table[(0, 2)]


def test_finished_table_safe_for_concurrent_readers():
    table = build_hp_table((4, 4, 3))
    cells = list(table.cells())

    def read_everything(_):
        return [table[m] for m, _ in cells]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(read_everything, range(16)))
    expected = [value for _, value in cells]
    assert all(r == expected for r in results)


def test_lattice_cells_and_cell_iteration():
    table = build_hp_table((2, 3))
    assert table.lattice_cells == 6
    cells = list(table.cells())
    assert [m for m, _ in cells] == [
        (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3),
    ]
    for m, value in cells:
        assert table[m] == value
