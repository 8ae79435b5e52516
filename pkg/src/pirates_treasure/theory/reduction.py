"""Hamiltonian-path reduction: the hardness construction, plus oracles.

Given a graph G and a chosen berth L, build the board: every other vertex
of G gets value 1, and a fresh path of |V(G)| - 1 vertices is grafted onto
L (so the path through L has |V(G)| vertices in total).  Right berths on
the path vertex next to L and is forced down the path with |V(G)| - 2
piles to take; Left roams G with up to |V(G)| - 1.  Left can finish one
pile ahead exactly when G has a Hamiltonian path starting at L; otherwise
the game ends level the moment Left runs out of fresh vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..errors import BudgetExceededError, ValidationError
from ..model import Graph, GridSpec, Instance, grid_graph
from ..solver import DEFAULT_NODE_BUDGET, left_wins_moving_first


@dataclass(frozen=True)
class ReductionOutput:
    """The built board plus the parameters that shaped it."""

    instance: Instance
    left_start: int
    path_length: int  # vertices on the grafted path, counting left_start

    __hash__ = None  # type: ignore[assignment]


def reduce_from_hampath(g: Graph, left_start: int) -> ReductionOutput:
    """Build the board whose first-player question encodes a path question."""
    n = g.vertex_count
    if not 0 <= left_start < n:
        raise ValidationError(f"berth {left_start} out of range")
    edges = list(g.edges)
    prev = left_start
    for fresh in range(n, 2 * n - 1):
        edges.append((prev, fresh))
        prev = fresh
    weights = {v: 1 for v in range(n) if v != left_start}
    weights.update({v: 1 for v in range(n + 1, 2 * n - 1)})
    right = (n,) if n >= 2 else ()
    inst = Instance(
        Graph.from_edges(2 * n - 1, edges),
        weights,
        left_starts=(left_start,),
        right_starts=right,
    )
    return ReductionOutput(instance=inst, left_start=left_start, path_length=n)


def hampath_oracle(g: Graph, start: int | None = None, max_vertices: int = 12) -> bool:
    """Is there a path through every vertex (starting at ``start`` if given)?

    A path here must traverse at least one edge, so a one-vertex graph has
    none; that convention is what makes the reduction exact for all sizes.
    Backtracking search, practical to roughly 12 vertices.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise BudgetExceededError(max_vertices, "path search")
    if start is not None and not 0 <= start < n:
        raise ValidationError(f"start {start} out of range")
    if n < 2 or not g.is_connected():
        return False
    adj = g.adjacency_bits
    full = (1 << n) - 1

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return True
        m = adj[v] & ~visited
        while m:
            b = m & -m
            m ^= b
            if extend(b.bit_length() - 1, visited | b):
                return True
        return False

    starts = [start] if start is not None else list(range(n))
    return any(extend(s, 1 << s) for s in starts)


def hampath_by_permutations(g: Graph, start: int | None = None) -> bool:
    """Second, independent route to the same answer: try every vertex order.

    Exists to cross-check :func:`hampath_oracle`; only sensible for n <= 8.
    """
    n = g.vertex_count
    if n > 8:
        raise BudgetExceededError(8, "permutation scan")
    if n < 2:
        return False
    adjacency = g.adjacency
    rest = [v for v in range(n) if start is None or v != start]
    for perm in permutations(rest):
        order = perm if start is None else (start,) + perm
        if all(order[i + 1] in adjacency[order[i]] for i in range(n - 1)):
            return True
    return False


def check_reduction(
    g: Graph, left_start: int, budget: int = DEFAULT_NODE_BUDGET
) -> bool:
    """Does the solver's first-player verdict match the path oracle?"""
    out = reduce_from_hampath(g, left_start)
    solver_says = left_wins_moving_first(out.instance, budget)
    oracle_says = hampath_oracle(g, start=left_start)
    return solver_says == oracle_says


def euler_planar_bound(g: Graph) -> bool:
    """Necessary planarity condition: at most 3n - 6 edges once n >= 3."""
    n = g.vertex_count
    if n <= 2:
        return True
    return g.edge_count() <= 3 * n - 6


def check_grid_reduction(
    cols: int, rows: int, left_cell: tuple[int, int], budget: int = DEFAULT_NODE_BUDGET
) -> bool:
    """Reduction check on a grid graph, plus an edge-count planarity guard.

    Grafting a path onto a planar graph keeps it planar, so the built
    board must stay under the Euler edge bound; that and the solver/oracle
    agreement are both required for a True result.
    """
    grid = grid_graph(cols, rows)
    left_start = GridSpec(cols, rows).vertex_id(*left_cell)
    out = reduce_from_hampath(grid, left_start)
    if not euler_planar_bound(out.instance.graph):
        return False
    return check_reduction(grid, left_start, budget)
