"""Exact counting of acyclic orientations of complete multipartite graphs.

Everything here works on the part-size tuple n = (n_1, ..., n_k) of a
complete k-partite graph: vertices fall into k parts, and two vertices are
adjacent exactly when they lie in different parts.  Orienting all edges
according to a linear order of the vertices, and grouping consecutive
same-part vertices into blocks, turns orientation counting into two
ingredients that can each be tabulated:

* ``s_m`` counts the Hamiltonian paths (as vertex sequences) of the complete
  multipartite graph whose part sizes are the block counts m.  A dense
  k-dimensional table of these over the lattice ``1 <= m_i <= n_i`` is filled
  by an insert-one-vertex recurrence.
* Stirling numbers of the second kind ``S(n_i, m_i)`` count the ways of
  splitting part i into m_i blocks.

The acyclic-orientation count is the convolution
``sum over m of s_m * prod_i S(n_i, m_i)``.  The work is polynomial in the
vertex count for fixed k (the lattice has ``prod n_i`` cells).  All counts
are exact Python integers; nothing is floating point or modular.
"""

from __future__ import annotations

import math
import operator
from itertools import product
from typing import Iterator

from .errors import CapacityError

#: Largest Hamiltonian-path table, in cells, built without raising
#: CapacityError.  The table is the dominant memory consumer.
DEFAULT_MEMORY_BUDGET_CELLS = 2**31

PIVOT_POLICIES = ("first", "last")


def _as_part_sizes(n) -> tuple[int, ...]:
    """Validate and canonicalize a tuple of positive part sizes."""
    parts = tuple(operator.index(x) for x in n)
    if not parts:
        raise ValueError("part sizes must be a non-empty tuple")
    for x in parts:
        if x < 1:
            raise ValueError(f"part sizes must be >= 1, got {x}")
    return parts


def normalize_part_sizes(raw) -> tuple[int, ...]:
    """Drop empty parts from a raw tuple of nonnegative part sizes.

    A part with zero vertices contributes no vertices and no edges, so the
    graph is unchanged by removing it.  Rejects an empty tuple, negative
    entries, and the all-zero tuple (no vertices at all).
    """
    parts = tuple(operator.index(x) for x in raw)
    if not parts:
        raise ValueError("part sizes must be a non-empty tuple")
    for x in parts:
        if x < 0:
            raise ValueError(f"part sizes must be nonnegative, got {x}")
    kept = tuple(x for x in parts if x > 0)
    if not kept:
        raise ValueError("all parts are empty; the graph has no vertices")
    return kept


def hp_feasible(m) -> bool:
    """Whether the complete multipartite graph with part sizes m has a
    Hamiltonian path.

    Every vertex of part i that is not last in the path must be followed by a
    vertex of another part, so a path needs ``sum_{j != i} m_j >= m_i - 1``
    for every i.  The largest part is the binding constraint, which collapses
    the test to ``2 * max(m) <= 1 + sum(m)``.  The condition is also
    sufficient.
    """
    m = _as_part_sizes(m)
    return 2 * max(m) <= 1 + sum(m)


class StirlingTable:
    """Triangular table of Stirling numbers of the second kind.

    ``value(a, b)`` is the number of ways to partition an a-element set into
    b non-empty blocks, for ``0 <= a <= max_a``; entries outside the triangle
    (b < 0 or b > a) are zero.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: list[list[int]]):
        self._rows = rows

    @property
    def max_a(self) -> int:
        return len(self._rows) - 1

    def value(self, a: int, b: int) -> int:
        if not 0 <= a <= self.max_a:
            raise IndexError(f"row {a} outside table (max_a={self.max_a})")
        if b < 0 or b > a:
            return 0
        return self._rows[a][b]

    def row(self, a: int) -> tuple[int, ...]:
        if not 0 <= a <= self.max_a:
            raise IndexError(f"row {a} outside table (max_a={self.max_a})")
        return tuple(self._rows[a])


def build_stirling_table(max_a: int) -> StirlingTable:
    """Tabulate S(a, b) for all 0 <= b <= a <= max_a.

    Fills row by row with ``S(a, b) = b * S(a-1, b) + S(a-1, b-1)``, starting
    from ``S(0, 0) = 1``; entries above the diagonal are treated as zero.
    """
    if max_a < 0:
        raise ValueError("max_a must be >= 0")
    rows = [[1]]
    for a in range(1, max_a + 1):
        prev = rows[-1]
        row = [0] * (a + 1)
        for b in range(1, a + 1):
            above = prev[b] if b < a else 0
            row[b] = b * above + prev[b - 1]
        rows.append(row)
    return StirlingTable(rows)


class HpTable:
    """Dense table of Hamiltonian-path counts s_m over a block-tuple lattice.

    ``table[m]`` is the number of Hamiltonian paths, counted as vertex
    sequences, of the complete multipartite graph with part sizes m, for
    every m with ``1 <= m_i <= shape_i``.  Storage is a flat row-major array
    of ``prod(shape)`` integers.  A finished table is never mutated and is
    safe to share between any number of readers.
    """

    __slots__ = ("shape", "_strides", "_values")

    def __init__(self, shape: tuple[int, ...], strides: tuple[int, ...], values: list[int]):
        self.shape = shape
        self._strides = strides
        self._values = values

    @property
    def lattice_cells(self) -> int:
        return len(self._values)

    def index_of(self, m) -> int:
        """Flat index of block tuple m; raises ValueError outside the lattice."""
        m = tuple(m)
        if len(m) != len(self.shape):
            raise ValueError(f"block tuple {m} has wrong arity for shape {self.shape}")
        index = 0
        for m_i, n_i, stride in zip(m, self.shape, self._strides):
            if not 1 <= m_i <= n_i:
                raise ValueError(f"block tuple {m} outside lattice for shape {self.shape}")
            index += (m_i - 1) * stride
        return index

    def __getitem__(self, m) -> int:
        return self._values[self.index_of(m)]

    def cells(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield (m, s_m) for every lattice point, in lexicographic order."""
        ranges = [range(1, n_i + 1) for n_i in self.shape]
        # product() varies the last axis fastest, matching row-major order.
        for index, m in enumerate(product(*ranges)):
            yield m, self._values[index]


def build_hp_table(
    n,
    pivot_policy: str = "first",
    memory_budget_cells: int = DEFAULT_MEMORY_BUDGET_CELLS,
) -> HpTable:
    """Fill the whole lattice ``{m : 1 <= m_i <= n_i}`` with s_m values.

    Cells are visited in coordinate-sum order (all tuples of sum t before any
    of sum t+1), so everything a cell needs has already been computed: the
    recurrence consumes the tuple with one vertex removed at the pivot part,
    and tuples with one further vertex removed at another part.

    For each m the rules are:

    * if no Hamiltonian path exists (see :func:`hp_feasible`), s_m = 0;
    * the all-ones tuple is a complete graph on k vertices, s = k!;
    * otherwise pick a pivot part i with m_i >= 2 and let p = m with one
      vertex removed at i.  A path of the larger graph either uses the new
      vertex between two parts different from i (insert it into a path of p:
      ``1 - p_i + sum_{j != i} p_j`` allowed slots), or wedges it between two
      vertices of one other part j with p_j >= 2 (``p_j * (p_j - 1)`` ways to
      pick and place that pair around a path counted by ``s_{p minus one at
      j}``).  Infeasible sub-tuples hold 0, so both terms stay valid.

    pivot_policy is "first" (lowest index with m_i >= 2, the default) or
    "last"; any admissible pivot yields the same table, and the option exists
    so that invariance can be asserted in tests.

    Raises CapacityError when the lattice exceeds memory_budget_cells.
    """
    n = _as_part_sizes(n)
    if pivot_policy not in PIVOT_POLICIES:
        raise ValueError(f"unknown pivot policy {pivot_policy!r}; use one of {PIVOT_POLICIES}")
    k = len(n)
    cells = math.prod(n)
    if cells > memory_budget_cells:
        raise CapacityError(
            f"lattice for part sizes {n} needs {cells} cells, "
            f"budget is {memory_budget_cells}"
        )

    strides = [1] * k
    for i in range(k - 2, -1, -1):
        strides[i] = strides[i + 1] * n[i + 1]
    values = [0] * cells
    ones = (1,) * k
    pick_first = pivot_policy == "first"

    def flat(m) -> int:
        return sum((m_i - 1) * stride for m_i, stride in zip(m, strides))

    ranges = [range(1, n_i + 1) for n_i in n]
    order = sorted(product(*ranges), key=lambda t: (sum(t), t))
    for m in order:
        if 2 * max(m) > 1 + sum(m):
            continue  # infeasible: cell stays 0
        if m == ones:
            values[flat(m)] = math.factorial(k)
            continue
        candidates = range(k) if pick_first else range(k - 1, -1, -1)
        i = next(j for j in candidates if m[j] >= 2)
        p = list(m)
        p[i] -= 1
        index_p = flat(p)
        insert_slots = 1 - p[i] + (sum(p) - p[i])
        total = values[index_p] * insert_slots
        for j in range(k):
            p_j = p[j]
            if j != i and p_j >= 2:
                total += p_j * (p_j - 1) * values[index_p - strides[j]]
        values[flat(m)] = total

    return HpTable(tuple(n), tuple(strides), values)


def hp_count(n, m, *, memory_budget_cells: int = DEFAULT_MEMORY_BUDGET_CELLS) -> int:
    """Number of Hamiltonian paths of the complete multipartite graph with
    part sizes m, looked up in the table built for n.

    Paths are counted as vertex sequences: a path and its reversal are two.
    m must lie inside the lattice of n (same arity, ``1 <= m_i <= n_i``).
    """
    table = build_hp_table(n, memory_budget_cells=memory_budget_cells)
    return table[m]


def ao_count(n, *, memory_budget_cells: int = DEFAULT_MEMORY_BUDGET_CELLS) -> int:
    """Number of acyclic orientations of the complete multipartite graph
    with part sizes n.

    Convolves the Hamiltonian-path table with Stirling numbers:
    ``sum over lattice m of s_m * prod_i S(n_i, m_i)``.  For a single part
    (k = 1) the graph has no edges and the count is 1, which the sum yields
    on its own.

    Raises CapacityError when the lattice exceeds memory_budget_cells.
    """
    n = _as_part_sizes(n)
    table = build_hp_table(n, memory_budget_cells=memory_budget_cells)
    stirling = build_stirling_table(max(n))
    total = 0
    for m, s in table.cells():
        if s:
            term = s
            for n_i, m_i in zip(n, m):
                term *= stirling.value(n_i, m_i)
            total += term
    return total


def ao_count_bipartite_closed_form(n1: int, n2: int) -> int:
    """Acyclic orientations of the complete bipartite graph, by the closed
    form ``sum_i ((i-1)!)^2 * S(n1+1, i) * S(n2+1, i)`` over
    ``1 <= i <= min(n1, n2) + 1``.

    Independent of the lattice table; used to cross-check :func:`ao_count`
    on two-part inputs.
    """
    n1 = operator.index(n1)
    n2 = operator.index(n2)
    if n1 < 1 or n2 < 1:
        raise ValueError("both part sizes must be >= 1")
    stirling = build_stirling_table(max(n1, n2) + 1)
    total = 0
    for i in range(1, min(n1 + 1, n2 + 1) + 1):
        total += math.factorial(i - 1) ** 2 * stirling.value(n1 + 1, i) * stirling.value(n2 + 1, i)
    return total


def ao_count_plus_inner_edge(
    n,
    part_index: int,
    *,
    memory_budget_cells: int = DEFAULT_MEMORY_BUDGET_CELLS,
) -> int:
    """Acyclic orientations of the complete multipartite graph with one extra
    edge joining two vertices inside the given part (1-based index).

    Deleting the extra edge restores the original graph; contracting it
    merges two vertices with identical neighbourhoods, leaving the complete
    multipartite graph whose chosen part is one vertex smaller.  The count is
    the sum of the two plain counts.

    The indexed part must have at least two vertices, otherwise there is
    nothing to join.
    """
    n = _as_part_sizes(n)
    if not 1 <= part_index <= len(n):
        raise ValueError(f"part_index {part_index} outside 1..{len(n)}")
    if n[part_index - 1] < 2:
        raise ValueError(f"part {part_index} has a single vertex; no inner edge to add")
    reduced = list(n)
    reduced[part_index - 1] -= 1
    # reduced stays >= 1 everywhere; normalization would drop a part only if
    # the precondition above were violated.
    contracted = normalize_part_sizes(reduced)
    return (
        ao_count(n, memory_budget_cells=memory_budget_cells)
        + ao_count(contracted, memory_budget_cells=memory_budget_cells)
    )
