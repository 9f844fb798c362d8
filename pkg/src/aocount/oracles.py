"""Brute-force ground truth for small graphs.

Everything in this module favours being obviously correct over being fast:
explicit vertex/edge graphs, exhaustive search with at most self-evident
pruning, and textbook recursions.  The counters in :mod:`aocount.counting`
are validated against these on inputs small enough to afford it.

All enumerators are pure functions of their inputs and deterministic.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import product

from .errors import CapacityError

DEFAULT_VERTEX_CAP = 12
DEFAULT_EDGE_CAP = 24
DEFAULT_EXHAUSTIVE_EDGE_CAP = 18
DEFAULT_HP_VERTEX_CAP = 10
DEFAULT_PHI_VERTEX_CAP = 8


@dataclass(frozen=True)
class SmallGraph:
    """Explicit simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as sorted (u, v) pairs with u < v, in sorted order.
    part_label, when present, maps each vertex to the part it belongs to in a
    multipartite construction.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    part_label: tuple[int, ...] | None = None

    def __post_init__(self):
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(canon))
        if self.part_label is not None:
            labels = tuple(self.part_label)
            if len(labels) != self.vertex_count:
                raise ValueError("part_label length must match vertex_count")
            object.__setattr__(self, "part_label", labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def make_complete_multipartite(n, vertex_cap: int = DEFAULT_VERTEX_CAP) -> SmallGraph:
    """Build the complete multipartite graph for part sizes n.

    Parts occupy consecutive vertex indices; an edge is present exactly when
    the endpoints carry different part labels.
    """
    parts = tuple(operator.index(x) for x in n)
    if not parts or any(x < 1 for x in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    total = sum(parts)
    if total > vertex_cap:
        raise CapacityError(f"{total} vertices exceeds cap {vertex_cap}")
    labels = tuple(i for i, n_i in enumerate(parts) for _ in range(n_i))
    edges = tuple(
        (u, v)
        for u in range(total)
        for v in range(u + 1, total)
        if labels[u] != labels[v]
    )
    return SmallGraph(total, edges, labels)


def add_intra_part_edge(g: SmallGraph, part_index: int) -> SmallGraph:
    """Return g plus one edge joining the first two vertices of the given
    part (1-based); requires part labels."""
    if g.part_label is None:
        raise ValueError("graph carries no part labels")
    members = [v for v in range(g.vertex_count) if g.part_label[v] == part_index - 1]
    if len(members) < 2:
        raise ValueError(f"part {part_index} needs at least two vertices")
    extra = (members[0], members[1])
    return SmallGraph(g.vertex_count, g.edges + (extra,), g.part_label)


def count_acyclic_orientations_brute(g: SmallGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> int:
    """Count acyclic orientations by exhaustive search over edge orientations.

    Orients one edge at a time while maintaining, per vertex, the bitmask of
    vertices reachable from it.  A branch is abandoned the moment an
    orientation closes a directed cycle (the head already reaches the tail);
    every completion of such a branch would contain that cycle, so nothing
    acyclic is ever skipped.  Each surviving leaf at full depth is exactly
    one acyclic orientation.
    """
    if g.edge_count > edge_cap:
        raise CapacityError(f"{g.edge_count} edges exceeds cap {edge_cap}")
    edges = g.edges

    def orient(i, reach):
        if i == len(edges):
            return 1
        u, v = edges[i]
        total = 0
        for a, b in ((u, v), (v, u)):
            # a -> b closes a cycle iff a is already reachable from b
            if not (reach[b] >> a) & 1:
                reach_b = reach[b]
                bit = 1 << a
                total += orient(i + 1, [r | reach_b if r & bit else r for r in reach])
        return total

    return orient(0, [1 << v for v in range(g.vertex_count)])


def _digraph_is_acyclic(adjacency: list[list[int]]) -> bool:
    """Three-state iterative depth-first search for a directed cycle."""
    state = [0] * len(adjacency)  # 0 unvisited, 1 on the current path, 2 finished
    for root in range(len(adjacency)):
        if state[root]:
            continue
        state[root] = 1
        stack = [(root, 0)]
        while stack:
            node, ptr = stack[-1]
            if ptr < len(adjacency[node]):
                stack[-1] = (node, ptr + 1)
                nxt = adjacency[node][ptr]
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, 0))
            else:
                state[node] = 2
                stack.pop()
    return True


def count_acyclic_orientations_exhaustive(
    g: SmallGraph, edge_cap: int = DEFAULT_EXHAUSTIVE_EDGE_CAP
) -> int:
    """Count acyclic orientations the fully literal way.

    Materializes every one of the 2^|E| orientation functions and runs a
    three-state depth-first cycle check on each digraph.  Exponentially more
    work than :func:`count_acyclic_orientations_brute`; kept as an
    independent cross-check of the pruned enumerator on tiny graphs.
    """
    if g.edge_count > edge_cap:
        raise CapacityError(f"{g.edge_count} edges exceeds cap {edge_cap}")
    count = 0
    for mask in range(1 << g.edge_count):
        adjacency = [[] for _ in range(g.vertex_count)]
        for index, (u, v) in enumerate(g.edges):
            if (mask >> index) & 1:
                adjacency[u].append(v)
            else:
                adjacency[v].append(u)
        if _digraph_is_acyclic(adjacency):
            count += 1
    return count


def chromatic_polynomial_at(g: SmallGraph, x: int, edge_cap: int = DEFAULT_EDGE_CAP) -> int:
    """Evaluate the chromatic polynomial of g at an integer, exactly.

    Deletion-contraction: ``chi(G) = chi(G - e) - chi(G / e)`` with
    ``chi(edgeless on v vertices) = x**v``.  Contraction merges the two
    endpoints and drops whatever parallel edges appear (the chromatic
    polynomial is insensitive to multiplicity).  Identical labelled
    subproblems are memoized within one evaluation.  The result is signed
    when x is negative.
    """
    if g.edge_count > edge_cap:
        raise CapacityError(f"{g.edge_count} edges exceeds cap {edge_cap}")
    x = operator.index(x)
    memo: dict[tuple[int, tuple[tuple[int, int], ...]], int] = {}

    def chi(vertex_count, edges):
        if not edges:
            return x**vertex_count
        key = (vertex_count, edges)
        cached = memo.get(key)
        if cached is not None:
            return cached
        u, v = edges[0]
        deleted = edges[1:]
        # contract v into u, shift labels above v down by one
        contracted = set()
        for a, b in deleted:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 > v:
                a2 -= 1
            if b2 > v:
                b2 -= 1
            contracted.add((a2, b2) if a2 < b2 else (b2, a2))
        value = chi(vertex_count, deleted) - chi(vertex_count - 1, tuple(sorted(contracted)))
        memo[key] = value
        return value

    return chi(g.vertex_count, g.edges)


def count_acyclic_orientations_chromatic(g: SmallGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> int:
    """Acyclic-orientation count via the chromatic polynomial:
    ``(-1)^|V| * chi(G; -1)``.

    The sign factor makes the value a nonnegative count; a negative result
    would mean the evaluator is broken, and raises.
    """
    value = (-1) ** g.vertex_count * chromatic_polynomial_at(g, -1, edge_cap=edge_cap)
    if value < 0:
        raise ArithmeticError(f"signed chromatic evaluation went negative: {value}")
    return value


def count_hamiltonian_paths_brute(n, vertex_cap: int = DEFAULT_HP_VERTEX_CAP) -> int:
    """Count Hamiltonian paths of the complete multipartite graph with part
    sizes n by backtracking over vertex sequences.

    Sequences are directed: a path and its reversal contribute two.  The only
    adjacency constraint is that consecutive vertices come from different
    parts.
    """
    parts = tuple(operator.index(x) for x in n)
    if not parts or any(x < 1 for x in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    total = sum(parts)
    if total > vertex_cap:
        raise CapacityError(f"{total} vertices exceeds cap {vertex_cap}")
    labels = [i for i, n_i in enumerate(parts) for _ in range(n_i)]
    used = [False] * total

    def extend(last_label, remaining):
        if remaining == 0:
            return 1
        found = 0
        for vertex in range(total):
            if not used[vertex] and labels[vertex] != last_label:
                used[vertex] = True
                found += extend(labels[vertex], remaining - 1)
                used[vertex] = False
        return found

    return extend(-1, total)


def iter_set_partitions(items):
    """Yield every partition of items into non-empty blocks, each once.

    Blocks are lists; an element is attached to each block of every partition
    of the remaining elements, or opens a new block.
    """
    pool = list(items)
    if not pool:
        yield []
        return
    head, rest = pool[0], pool[1:]
    for partition in iter_set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] + [head]] + partition[i + 1 :]
        yield partition + [[head]]


def count_set_partitions_brute(a: int, b: int) -> int:
    """Partitions of an a-element set into exactly b blocks, by enumeration."""
    return sum(1 for partition in iter_set_partitions(range(a)) if len(partition) == b)


def bell_number_brute(a: int) -> int:
    """Total number of set partitions of an a-element set, by enumeration."""
    return sum(1 for _ in iter_set_partitions(range(a)))


def count_phi_brute(n, vertex_cap: int = DEFAULT_PHI_VERTEX_CAP) -> int:
    """Count acyclic orientations of the complete multipartite graph the long
    way round, through block orderings.

    Enumerates every way of splitting each part into blocks, and for each
    such collection every ordering of all blocks in which consecutive blocks
    come from different parts, then adds everything up.  Unfolding such an
    ordering into a vertex order induces an orientation, and distinct
    orderings induce distinct orientations, so the total matches
    :func:`count_acyclic_orientations_brute` on the same part sizes.
    """
    parts = tuple(operator.index(x) for x in n)
    if not parts or any(x < 1 for x in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    if sum(parts) > vertex_cap:
        raise CapacityError(f"{sum(parts)} vertices exceeds cap {vertex_cap}")
    per_part = [list(iter_set_partitions(range(n_i))) for n_i in parts]
    total = 0
    for combo in product(*per_part):
        labels = [i for i, partition in enumerate(combo) for _ in partition]
        total += _count_label_orders(labels)
    return total


def _count_label_orders(labels) -> int:
    """Orderings of distinct labelled blocks with no equal labels adjacent."""
    used = [False] * len(labels)

    def extend(last_label, remaining):
        if remaining == 0:
            return 1
        found = 0
        for block in range(len(labels)):
            if not used[block] and labels[block] != last_label:
                used[block] = True
                found += extend(labels[block], remaining - 1)
                used[block] = False
        return found

    return extend(-1, len(labels))


def iter_part_sizes(max_total: int, max_parts: int):
    """Yield every part-size tuple with at most max_parts parts, every part
    >= 1 and at most max_total vertices in total.

    Deterministic prefix order; used to drive verification sweeps.
    """

    def grow(prefix, budget):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_parts or budget == 0:
            return
        for nxt in range(1, budget + 1):
            prefix.append(nxt)
            yield from grow(prefix, budget - nxt)
            prefix.pop()

    yield from grow([], max_total)
