"""Instance families: exhaustive enumeration and seeded random sampling.

The uniform-value families (every pile worth the same x > 0, or the same
-x < 0) are where the structural claims about outcome classes live, so
they get first-class generators here.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from ..errors import ValidationError
from ..model import Graph, Instance, serialize_instance, validate


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """All connected simple graphs on vertices 0..n-1, labels distinct.

    Enumerates every subset of the possible edges in ascending bitmask
    order, so the stream is deterministic.
    """
    if n < 1:
        raise ValidationError("need at least one vertex")
    if n == 1:
        yield Graph(1, frozenset())
        return
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph.from_edges(
                n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1)
            )


def uniform_instance(graph: Graph, left: int, right: int, value: int) -> Instance:
    """One Left ship, one Right ship, every other vertex worth ``value``."""
    weights = {
        v: value for v in range(graph.vertex_count) if v != left and v != right
    }
    return Instance(graph, weights, (left,), (right,))


def enumerate_ptx(n: int, x: int, up_to_iso: bool = False) -> Iterator[Instance]:
    """All connected n-vertex boards with uniform value x, one ship each side.

    Streams labeled boards by default: every connected labeled graph times
    every ordered choice of distinct (Left, Right) berths.  With
    ``up_to_iso`` isomorphic boards collapse to one representative
    (feasible for n <= 6).
    """
    if x <= 0:
        raise ValidationError(
            "uniform value must be positive; with x = 0 every game ties and "
            "the family is trivial"
        )
    yield from _enumerate_uniform(n, x, up_to_iso)


def enumerate_pt_negx(n: int, x: int, up_to_iso: bool = False) -> Iterator[Instance]:
    """Mirror family: every pile worth -x for the given x > 0."""
    if x <= 0:
        raise ValidationError("x must be positive; the piles are negated internally")
    yield from _enumerate_uniform(n, -x, up_to_iso)


def _enumerate_uniform(n: int, value: int, up_to_iso: bool) -> Iterator[Instance]:
    if not 2 <= n <= 7:
        raise ValidationError("exhaustive enumeration supports 2 <= n <= 7")
    if up_to_iso and n > 6:
        raise ValidationError("isomorphism reduction supports n <= 6")
    seen: set[str] = set()
    for graph in connected_labeled_graphs(n):
        for left in range(n):
            for right in range(n):
                if left == right:
                    continue
                inst = uniform_instance(graph, left, right, value)
                if up_to_iso:
                    key = _isomorphism_key(inst)
                    if key in seen:
                        continue
                    seen.add(key)
                yield inst


def _isomorphism_key(inst: Instance) -> str:
    """Smallest serialization over all relabelings; uniform boards only."""
    n = inst.graph.vertex_count
    left = inst.left_starts[0]
    right = inst.right_starts[0]
    value = next(iter(inst.weights.values()), 0)
    best: str | None = None
    for perm in permutations(range(n)):
        edges = frozenset(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in inst.graph.edges
        )
        relabeled = uniform_instance(Graph(n, edges), perm[left], perm[right], value)
        text = serialize_instance(relabeled)
        if best is None or text < best:
            best = text
    assert best is not None
    return best


def random_connected_graph(
    n: int, rng: random.Random, extra_edge_probability: float = 0.25
) -> Graph:
    """Random attachment tree plus independent extra edges: always connected."""
    if n < 1:
        raise ValidationError("need at least one vertex")
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_probability:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_ptx_instance(n: int, x: int, rng: random.Random) -> Instance:
    """Random connected uniform-value board, one ship per side."""
    if n < 2:
        raise ValidationError("need room for two ships")
    graph = random_connected_graph(n, rng)
    left, right = rng.sample(range(n), 2)
    return uniform_instance(graph, left, right, x)


def random_pt_instance(
    n: int,
    rng: random.Random,
    weight_range: tuple[int, int] = (1, 4),
    require_left_move: bool = False,
) -> Instance:
    """Random connected board with positive integer piles, one ship per side.

    With ``require_left_move`` the draw is repeated until the Left ship has
    at least one unplundered neighbor, i.e. Left can actually move first.
    """
    if n < 2:
        raise ValidationError("need room for two ships")
    if require_left_move and n < 3:
        # on two vertices Left's one neighbor is always Right's berth
        raise ValidationError("no 2-vertex board leaves Left a first move")
    lo, hi = weight_range
    if lo < 1:
        raise ValidationError("piles must be positive here; see random_instance")
    while True:
        graph = random_connected_graph(n, rng)
        left, right = rng.sample(range(n), 2)
        weights = {
            v: rng.randint(lo, hi)
            for v in range(n)
            if v != left and v != right
        }
        inst = Instance(graph, weights, (left,), (right,))
        validate(inst)
        if not require_left_move:
            return inst
        if any(v != right for v in graph.adjacency[left]):
            return inst
