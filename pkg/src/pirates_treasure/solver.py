"""Exact play: final scores, outcome classes, best first moves, variations.

The searcher runs alpha-beta over packed states (sorted ship tuples per
player, plundered-set bitmask, side to move) with a bound-flagged
transposition table.  Scores are factored out additively: table values are
the optimal score still to come from a state, so transpositions reached at
different running scores share one entry.

``minimax_final_score`` is a deliberately plain exhaustive recursion kept
as a reference implementation; the test suite holds the two routes equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .engine import Player, Position, Move, initial_position, legal_moves, apply_move
from .errors import BudgetExceededError
from .model import Instance

DEFAULT_NODE_BUDGET = 100_000_000

_EXACT, _LOWER, _UPPER = 0, 1, 2


class FinalScores(NamedTuple):
    """Optimal terminal scores: Left moving first, Right moving first."""

    left_first: int
    right_first: int


class OutcomeClass(Enum):
    L = "L"
    R = "R"
    N = "N"
    P = "P"
    TIE = "TIE"

    def __str__(self) -> str:
        return self.value


def classify(scores: FinalScores) -> OutcomeClass:
    """Outcome class from the two final scores.

    Left wins a game that ends positive, Right one that ends negative, so
    the signs of the two first-mover results pin the class: both favorable
    to one side gives L or R, first mover favored gives N, first mover
    hurt gives P, and two zeros tie.  A zero paired with a win counts for
    the winning side (the other direction still cannot lose).
    """
    sl = (scores.left_first > 0) - (scores.left_first < 0)
    sr = (scores.right_first > 0) - (scores.right_first < 0)
    if sl == 0 and sr == 0:
        return OutcomeClass.TIE
    if sl >= 0 and sr >= 0:
        return OutcomeClass.L
    if sl <= 0 and sr <= 0:
        return OutcomeClass.R
    if sl > 0:
        return OutcomeClass.N
    return OutcomeClass.P


@dataclass(frozen=True)
class SolveReport:
    final_scores: FinalScores
    outcome: OutcomeClass
    best_first_moves_left: frozenset[Move]
    best_first_moves_right: frozenset[Move]
    pv_left: tuple[Move, ...]
    pv_right: tuple[Move, ...]
    nodes_expanded: int


class _Search:
    """Alpha-beta with a transposition table over one board."""

    __slots__ = ("adj", "wt", "inf", "memo", "nodes", "budget")

    def __init__(self, inst: Instance, budget: int):
        n = inst.graph.vertex_count
        self.adj = list(inst.graph.adjacency_bits)
        wt = [0] * n
        for v, w in inst.weights.items():
            wt[v] = w
        self.wt = wt
        self.inf = sum(abs(w) for w in wt) + 1
        self.memo: dict = {}
        self.nodes = 0
        self.budget = budget

    def value(self, lships, rships, visited, left_to_move, alpha, beta):
        """Optimal score still to come; exact within (alpha, beta)."""
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.budget, "solve")
        adj = self.adj
        wt = self.wt
        ships = lships if left_to_move else rships
        moves = []
        for si in range(len(ships)):
            m = adj[ships[si]] & ~visited
            while m:
                b = m & -m
                m ^= b
                moves.append((si, b.bit_length() - 1, b))
        if not moves:
            return 0
        key = (lships, rships, visited, left_to_move)
        entry = self.memo.get(key)
        if entry is not None:
            flag, v = entry
            if flag == _EXACT:
                return v
            if flag == _LOWER:
                if v >= beta:
                    return v
                if v > alpha:
                    alpha = v
            else:
                if v <= alpha:
                    return v
                if v < beta:
                    beta = v
        alpha0, beta0 = alpha, beta
        if len(moves) > 1:
            moves.sort(key=lambda t: -wt[t[1]])
        single = len(ships) == 1
        if left_to_move:
            best = -self.inf
            for si, to, bit in moves:
                if single:
                    nl = (to,)
                else:
                    tmp = list(lships)
                    tmp[si] = to
                    tmp.sort()
                    nl = tuple(tmp)
                w = wt[to]
                v = w + self.value(nl, rships, visited | bit, False, alpha - w, beta - w)
                if v > best:
                    best = v
                    if v > alpha:
                        alpha = v
                        if alpha >= beta:
                            break
        else:
            best = self.inf
            for si, to, bit in moves:
                if single:
                    nr = (to,)
                else:
                    tmp = list(rships)
                    tmp[si] = to
                    tmp.sort()
                    nr = tuple(tmp)
                w = wt[to]
                v = -w + self.value(lships, nr, visited | bit, True, alpha + w, beta + w)
                if v < best:
                    best = v
                    if v < beta:
                        beta = v
                        if alpha >= beta:
                            break
        if best <= alpha0:
            flag = _UPPER
        elif best >= beta0:
            flag = _LOWER
        else:
            flag = _EXACT
        self.memo[key] = (flag, best)
        return best


def _pack(pos: Position) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    visited = 0
    for v in pos.visited:
        visited |= 1 << v
    return tuple(sorted(pos.left_ships)), tuple(sorted(pos.right_ships)), visited


def _position_value(search: _Search, pos: Position) -> int:
    l, r, visited = _pack(pos)
    return pos.score + search.value(
        l, r, visited, pos.to_move is Player.LEFT, -search.inf, search.inf
    )


def left_final_score(pos: Position, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Terminal score under best play from ``pos`` with Left to move."""
    if pos.to_move is not Player.LEFT:
        raise ValueError("position must have Left to move")
    return _position_value(_Search(pos.instance, budget), pos)


def right_final_score(pos: Position, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Terminal score under best play from ``pos`` with Right to move."""
    if pos.to_move is not Player.RIGHT:
        raise ValueError("position must have Right to move")
    return _position_value(_Search(pos.instance, budget), pos)


def final_scores(inst: Instance, budget: int = DEFAULT_NODE_BUDGET) -> FinalScores:
    search = _Search(inst, budget)
    return FinalScores(
        _position_value(search, initial_position(inst, Player.LEFT)),
        _position_value(search, initial_position(inst, Player.RIGHT)),
    )


def solve(inst: Instance, budget: int = DEFAULT_NODE_BUDGET) -> SolveReport:
    """Full report: both final scores, best first moves, variations."""
    search = _Search(inst, budget)
    scores = []
    bests = []
    pvs = []
    for first in (Player.LEFT, Player.RIGHT):
        root = initial_position(inst, first)
        score, best = _root_moves(search, root)
        scores.append(score)
        bests.append(best)
        pvs.append(_principal_variation(search, root))
    final = FinalScores(scores[0], scores[1])
    return SolveReport(
        final_scores=final,
        outcome=classify(final),
        best_first_moves_left=bests[0],
        best_first_moves_right=bests[1],
        pv_left=pvs[0],
        pv_right=pvs[1],
        nodes_expanded=search.nodes,
    )


def _root_moves(search: _Search, root: Position) -> tuple[int, frozenset[Move]]:
    """Exact value of every root move; returns (score, optimal move set)."""
    moves = legal_moves(root)
    if not moves:
        return root.score, frozenset()
    values = {m: _position_value(search, apply_move(root, m)) for m in moves}
    if root.to_move is Player.LEFT:
        score = max(values.values())
    else:
        score = min(values.values())
    return score, frozenset(m for m, v in values.items() if v == score)


def _principal_variation(search: _Search, pos: Position) -> tuple[Move, ...]:
    """Optimal line, breaking ties by lowest (ship, target vertex)."""
    line = []
    while True:
        moves = legal_moves(pos)
        if not moves:
            return tuple(line)
        best_move = None
        best_val = 0
        for m in moves:  # generation order = tie-break order
            v = _position_value(search, apply_move(pos, m))
            if best_move is None or (
                v > best_val if pos.to_move is Player.LEFT else v < best_val
            ):
                best_move, best_val = m, v
        line.append(best_move)
        pos = apply_move(pos, best_move)


def left_wins_moving_first(inst: Instance, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Decision form of the solver: does Left force a positive final score?

    Runs the same search with a zero-width window, which is much faster
    than an exact solve when only the sign matters.
    """
    search = _Search(inst, budget)
    pos = initial_position(inst, Player.LEFT)
    l, r, visited = _pack(pos)
    bound = search.value(l, r, visited, True, -pos.score, 1 - pos.score)
    return pos.score + bound > 0


def greedy_score(
    inst: Instance,
    greedy_player: Player,
    first_player: Player,
    budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Terminal score when one player is a treasure-grabbing automaton.

    The greedy player always slides to the highest-value reachable vertex
    (ties: lowest vertex id, then lowest ship index); the opponent plays
    optimally against that fixed policy.
    """
    adj = list(inst.graph.adjacency_bits)
    n = inst.graph.vertex_count
    wt = [0] * n
    for v, w in inst.weights.items():
        wt[v] = w
    greedy_left = greedy_player is Player.LEFT
    budget_box = [0]
    memo: dict = {}

    def rec(lships, rships, visited, left_to_move):
        budget_box[0] += 1
        if budget_box[0] > budget:
            raise BudgetExceededError(budget, "greedy playout")
        ships = lships if left_to_move else rships
        moves = []
        for si in range(len(ships)):
            m = adj[ships[si]] & ~visited
            while m:
                b = m & -m
                m ^= b
                moves.append((si, b.bit_length() - 1, b))
        if not moves:
            return 0
        key = (lships, rships, visited, left_to_move)
        if key in memo:
            return memo[key]

        def child(si, to, bit):
            tmp = list(ships)
            tmp[si] = to
            tmp.sort()
            nt = tuple(tmp)
            if left_to_move:
                sub = rec(nt, rships, visited | bit, False)
                return wt[to] + sub
            sub = rec(lships, nt, visited | bit, True)
            return -wt[to] + sub

        if left_to_move == greedy_left:
            si, to, bit = min(moves, key=lambda t: (-wt[t[1]], t[1], t[0]))
            result = child(si, to, bit)
        elif left_to_move:
            result = max(child(*m) for m in moves)
        else:
            result = min(child(*m) for m in moves)
        memo[key] = result
        return result

    pos = initial_position(inst, first_player)
    l, r, visited = _pack(pos)
    return pos.score + rec(l, r, visited, first_player is Player.LEFT)


def minimax_final_score(pos: Position, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Reference result: plain exhaustive minimax, no table, no pruning."""
    adj = list(pos.instance.graph.adjacency_bits)
    n = pos.instance.graph.vertex_count
    wt = [0] * n
    for v, w in pos.instance.weights.items():
        wt[v] = w
    counter = [0]

    def rec(lships, rships, visited, left_to_move):
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceededError(budget, "reference minimax")
        ships = lships if left_to_move else rships
        results = []
        for si in range(len(ships)):
            m = adj[ships[si]] & ~visited
            while m:
                b = m & -m
                m ^= b
                to = b.bit_length() - 1
                tmp = list(ships)
                tmp[si] = to
                tmp.sort()
                nt = tuple(tmp)
                if left_to_move:
                    results.append(wt[to] + rec(nt, rships, visited | b, False))
                else:
                    results.append(-wt[to] + rec(lships, nt, visited | b, True))
        if not results:
            return 0
        return max(results) if left_to_move else min(results)

    l, r, visited = _pack(pos)
    return pos.score + rec(l, r, visited, pos.to_move is Player.LEFT)
