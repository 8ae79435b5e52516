from __future__ import annotations

import random

import pytest

from pirates_treasure.algebra import sum_position, sum_solve
from pirates_treasure.engine import Player, initial_position, legal_moves
from pirates_treasure.errors import BudgetExceededError, ValidationError
from pirates_treasure.fixtures import _three_path, fig_add_b, fig_ex, fig_half, mirrored_half
from pirates_treasure.model import Graph, Instance
from pirates_treasure.solver import classify, final_scores, left_wins_moving_first
from pirates_treasure.theory import (
    check_grid_reduction,
    check_reduction,
    connected_labeled_graphs,
    distinguish,
    distinguishing_context,
    enumerate_pt_negx,
    enumerate_ptx,
    euler_planar_bound,
    hampath_by_permutations,
    hampath_oracle,
    random_connected_graph,
    random_pt_instance,
    random_ptx_instance,
    reduce_from_hampath,
    uniform_instance,
)

L = Player.LEFT
R = Player.RIGHT


# ---------------------------------------------------------------------------
# families


def test_connected_graph_counts():
    assert [sum(1 for _ in connected_labeled_graphs(n)) for n in range(1, 6)] == [
        1, 1, 4, 38, 728,
    ]


def test_connected_graphs_are_connected_and_distinct():
    seen = set()
    for g in connected_labeled_graphs(4):
        assert g.is_connected()
        assert g.edges not in seen
        seen.add(g.edges)


def test_enumerate_ptx_counts():
    assert sum(1 for _ in enumerate_ptx(2, 1)) == 2
    assert sum(1 for _ in enumerate_ptx(3, 1)) == 24
    assert sum(1 for _ in enumerate_ptx(4, 1)) == 456


def test_enumerate_ptx_up_to_iso_counts():
    assert sum(1 for _ in enumerate_ptx(2, 1, up_to_iso=True)) == 1
    assert sum(1 for _ in enumerate_ptx(3, 1, up_to_iso=True)) == 4
    assert sum(1 for _ in enumerate_ptx(4, 1, up_to_iso=True)) == 23


def test_enumerate_families_reject_bad_args():
    with pytest.raises(ValidationError):
        list(enumerate_ptx(3, 0))
    with pytest.raises(ValidationError):
        list(enumerate_ptx(3, -2))
    with pytest.raises(ValidationError):
        list(enumerate_ptx(1, 1))
    with pytest.raises(ValidationError):
        list(enumerate_ptx(8, 1))
    with pytest.raises(ValidationError):
        list(enumerate_ptx(7, 1, up_to_iso=True))
    with pytest.raises(ValidationError):
        list(enumerate_pt_negx(3, -1))


def test_enumerate_pt_negx_mirrors_weights():
    boards = list(enumerate_pt_negx(3, 2))
    assert len(boards) == 24
    assert all(w == -2 for b in boards for w in b.weights.values())


def test_uniform_instance_layout():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    inst = uniform_instance(g, left=0, right=3, value=5)
    assert inst.weights == {1: 5, 2: 5}
    assert inst.left_starts == (0,) and inst.right_starts == (3,)


def test_random_connected_graph_is_connected():
    for seed in range(30):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(1, 10), rng)
        assert g.is_connected()


def test_random_ptx_instance_is_uniform():
    rng = random.Random(7)
    for _ in range(20):
        inst = random_ptx_instance(rng.randint(2, 8), 3, rng)
        assert set(inst.weights.values()) <= {3}
        assert len(inst.left_starts) == len(inst.right_starts) == 1


def test_random_pt_instance_left_move_guarantee():
    rng = random.Random(11)
    for _ in range(30):
        inst = random_pt_instance(rng.randint(3, 8), rng, require_left_move=True)
        assert legal_moves(initial_position(inst, L))


def test_random_pt_instance_rejects_impossible_request():
    with pytest.raises(ValidationError):
        random_pt_instance(2, random.Random(0), require_left_move=True)


# ---------------------------------------------------------------------------
# reduction


def test_reduction_shape_for_triangle():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    out = reduce_from_hampath(g, left_start=0)
    inst = out.instance
    assert inst.graph.vertex_count == 5  # 2n - 1
    assert out.path_length == 3
    assert inst.left_starts == (0,)
    assert inst.right_starts == (3,)  # first fresh vertex, next to Left's berth
    assert inst.weights == {1: 1, 2: 1, 4: 1}
    assert {(0, 3), (3, 4)} <= set(inst.graph.edges)


def test_reduction_single_vertex_graph():
    out = reduce_from_hampath(Graph(1, frozenset()), 0)
    assert out.instance.graph.vertex_count == 1
    assert out.instance.right_starts == ()
    assert out.instance.weights == {}
    # no path through one vertex, and Left cannot win a move-less game
    assert not hampath_oracle(Graph(1, frozenset()), 0)
    assert not left_wins_moving_first(out.instance)


def test_reduction_two_vertex_graph():
    g = Graph.from_edges(2, [(0, 1)])
    out = reduce_from_hampath(g, 0)
    assert out.instance.graph.vertex_count == 3
    assert out.instance.right_starts == (2,)
    assert out.instance.weights == {1: 1}
    assert left_wins_moving_first(out.instance)


def test_reduction_verdict_tracks_path_existence():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    for start, has_path in [(0, True), (1, False), (2, False), (3, True)]:
        assert hampath_oracle(p4, start) is has_path
        assert left_wins_moving_first(reduce_from_hampath(p4, start).instance) is has_path
        assert check_reduction(p4, start)


def test_path_oracles_agree_exhaustively():
    for n in range(1, 6):
        for g in connected_labeled_graphs(n):
            assert hampath_oracle(g) == hampath_by_permutations(g)
            for s in range(n):
                assert hampath_oracle(g, s) == hampath_by_permutations(g, s)


def test_path_oracle_on_disconnected_graph():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not hampath_oracle(g)
    assert not hampath_by_permutations(g)


def test_path_oracle_budget():
    with pytest.raises(BudgetExceededError):
        hampath_oracle(Graph(13, frozenset()), max_vertices=12)
    with pytest.raises(BudgetExceededError):
        hampath_by_permutations(Graph(9, frozenset()))


def test_reduction_rejects_bad_berth():
    with pytest.raises(ValidationError):
        reduce_from_hampath(Graph.from_edges(2, [(0, 1)]), 2)


def test_euler_planar_bound():
    k5 = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert not euler_planar_bound(k5)
    assert euler_planar_bound(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert euler_planar_bound(Graph.from_edges(2, [(0, 1)]))


def test_grid_reductions():
    # 2x2 has corner-to-corner tours, 1x4 only works from the ends,
    # 3x3 works from the center but not from an edge midpoint
    assert check_grid_reduction(2, 2, (1, 1))
    assert check_grid_reduction(1, 4, (1, 1))
    assert check_grid_reduction(1, 4, (1, 2))
    assert check_grid_reduction(3, 3, (2, 2))
    assert check_grid_reduction(3, 3, (2, 1))


def test_grid_path_facts():
    from pirates_treasure.model import grid_graph

    assert hampath_oracle(grid_graph(1, 4), 0)
    assert not hampath_oracle(grid_graph(1, 4), 1)
    center = 4
    assert hampath_oracle(grid_graph(3, 3), center)
    edge_mid = 1
    assert not hampath_oracle(grid_graph(3, 3), edge_mid)


# ---------------------------------------------------------------------------
# distinguishing contexts


def test_context_bait_is_one_more_than_the_positives():
    assert distinguishing_context(fig_half()).weight_of(1) == 3
    assert distinguishing_context(fig_ex()).weight_of(1) == 11


def test_context_needs_a_left_ship():
    with pytest.raises(ValidationError):
        distinguishing_context(fig_add_b())


def test_context_flips_left_first_sign():
    half = fig_half()
    assert final_scores(half).left_first == 1
    summed = sum_solve(sum_position([half, distinguishing_context(half)], L))
    assert summed == (-2, -3)


def test_distinguish_finds_a_separating_context():
    pool = [_three_path(), fig_add_b()]
    found = distinguish(fig_half(), mirrored_half(), pool)
    assert found is pool[0]


def test_distinguish_returns_none_when_pool_cannot_separate():
    # the overweight context drags both the board and the empty game into
    # the same class, even though the Left-first scores differ in sign
    empty = Instance(Graph(0, frozenset()), {}, (), ())
    ctx = distinguishing_context(fig_half())
    assert distinguish(fig_half(), empty, [ctx]) is None
    both = sum_solve(sum_position([fig_half(), ctx], L))
    alone = final_scores(ctx)
    assert classify(both) is classify(alone)
    sign = lambda v: (v > 0) - (v < 0)  # noqa: E731
    assert sign(both.left_first) != sign(alone.left_first)
