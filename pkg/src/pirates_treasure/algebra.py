"""Game values as trees, negation, and disjunctive sums.

A :class:`GameTree` is the rules-free view of a position: the running
score plus the set of positions Left could move to and the set Right could
move to, recursively.  Option sets ignore whose turn it actually is, so
one tree answers both "Left starts" and "Right starts" questions.

Sums are implemented twice on purpose: once directly on multi-board
states (:func:`sum_solve`, fast) and once by the textbook recursion on
trees (:func:`sum_trees`), with the test suite holding them equal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .engine import (
    Move,
    Player,
    Position,
    apply_move,
    initial_position,
    moves_for,
)
from .errors import BudgetExceededError
from .model import Instance
from .solver import (
    _EXACT,
    _LOWER,
    _UPPER,
    DEFAULT_NODE_BUDGET,
    FinalScores,
    OutcomeClass,
    classify,
)

DEFAULT_EXPANSION_BUDGET = 1_000_000

#: A move inside a sum: (component index, move on that component).
SumMove = tuple[int, Move]


@dataclass(frozen=True)
class GameTree:
    score: int
    left_options: frozenset[GameTree]
    right_options: frozenset[GameTree]

    @property
    def is_leaf(self) -> bool:
        return not self.left_options and not self.right_options


def leaf(score: int) -> GameTree:
    return GameTree(score, frozenset(), frozenset())


def tree_identical(g: GameTree, h: GameTree) -> bool:
    """Structural identity: same score and identical option sets, recursively.

    This is a far finer relation than game equivalence; two trees that play
    identically in every context can still differ structurally.
    """
    return g == h


def render_tree(t: GameTree) -> str:
    """Bracket form ``{left options|score|right options}``.

    Leaves render as their bare score, empty option sets as ``.``; options
    are comma separated and ordered by (score, text) for stable output.
    """
    memo: dict[GameTree, str] = {}

    def render(node: GameTree) -> str:
        hit = memo.get(node)
        if hit is not None:
            return hit
        if node.is_leaf:
            out = str(node.score)
        else:
            out = "{%s|%d|%s}" % (
                _render_options(node.left_options, render),
                node.score,
                _render_options(node.right_options, render),
            )
        memo[node] = out
        return out

    return render(t)


def _render_options(options: frozenset[GameTree], render) -> str:
    if not options:
        return "."
    return ", ".join(text for _, text in sorted((o.score, render(o)) for o in options))


def extract_tree(pos: Position, budget: int = DEFAULT_EXPANSION_BUDGET) -> GameTree:
    """Expand a position into its full game tree.

    Transpositions (same ships, plundered set and score) collapse into one
    shared node.  Raises BudgetExceededError if more distinct nodes than
    ``budget`` would be built.
    """
    memo: dict = {}
    counter = [0]

    def build(p: Position) -> GameTree:
        key = (
            tuple(sorted(p.left_ships)),
            tuple(sorted(p.right_ships)),
            p.visited,
            p.score,
        )
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceededError(budget, "tree extraction")
        left = frozenset(
            build(apply_move(replace(p, to_move=Player.LEFT), m))
            for m in moves_for(p, Player.LEFT)
        )
        right = frozenset(
            build(apply_move(replace(p, to_move=Player.RIGHT), m))
            for m in moves_for(p, Player.RIGHT)
        )
        node = GameTree(p.score, left, right)
        memo[key] = node
        return node

    return build(pos)


def negate_tree(t: GameTree) -> GameTree:
    """Mirror the game: scores flip sign and the players swap option sets."""
    memo: dict[GameTree, GameTree] = {}

    def neg(node: GameTree) -> GameTree:
        hit = memo.get(node)
        if hit is not None:
            return hit
        out = GameTree(
            -node.score,
            frozenset(neg(o) for o in node.right_options),
            frozenset(neg(o) for o in node.left_options),
        )
        memo[node] = out
        return out

    return neg(t)


def negate_instance(inst: Instance) -> Instance:
    """Board-level mirror: swap fleets, negate the running score.

    Treasure values stay put; handing Right's berths to Left already turns
    every +w Left collects into the -w Right collected before, so the
    extracted tree of the result is exactly the negated tree.
    """
    return Instance(
        graph=inst.graph,
        weights=dict(inst.weights),
        left_starts=inst.right_starts,
        right_starts=inst.left_starts,
        initial_score=-inst.initial_score,
    )


def shift_tree(t: GameTree, delta: int) -> GameTree:
    """Add ``delta`` to every score in the tree (a banked-points transfer)."""
    memo: dict[GameTree, GameTree] = {}

    def shift(node: GameTree) -> GameTree:
        hit = memo.get(node)
        if hit is not None:
            return hit
        out = GameTree(
            node.score + delta,
            frozenset(shift(o) for o in node.left_options),
            frozenset(shift(o) for o in node.right_options),
        )
        memo[node] = out
        return out

    return shift(t)


def sum_trees(g: GameTree, h: GameTree, budget: int = DEFAULT_EXPANSION_BUDGET) -> GameTree:
    """Disjunctive sum by the defining recursion.

    A player moves in exactly one summand, scores add, and the game ends
    for a player only when they are stuck in both.
    """
    memo: dict[tuple[GameTree, GameTree], GameTree] = {}
    counter = [0]

    def add(a: GameTree, b: GameTree) -> GameTree:
        key = (a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceededError(budget, "tree sum")
        left = frozenset(add(al, b) for al in a.left_options) | frozenset(
            add(a, bl) for bl in b.left_options
        )
        right = frozenset(add(ar, b) for ar in a.right_options) | frozenset(
            add(a, br) for br in b.right_options
        )
        node = GameTree(a.score + b.score, left, right)
        memo[key] = node
        return node

    return add(g, h)


def tree_final_scores(t: GameTree) -> FinalScores:
    """Optimal terminal scores read straight off a tree.

    With Left to move, a node with no Left options is final; otherwise
    Left picks the option maximizing the Right-to-move result, and dually.
    """
    memo: dict[GameTree, FinalScores] = {}

    def scores(node: GameTree) -> FinalScores:
        hit = memo.get(node)
        if hit is not None:
            return hit
        if node.left_options:
            s_left = max(scores(o).right_first for o in node.left_options)
        else:
            s_left = node.score
        if node.right_options:
            s_right = min(scores(o).left_first for o in node.right_options)
        else:
            s_right = node.score
        out = FinalScores(s_left, s_right)
        memo[node] = out
        return out

    return scores(t)


# ---------------------------------------------------------------------------
# Sums played directly on multi-board states


@dataclass(frozen=True)
class SumPosition:
    """A compound position: several boards side by side, one side to move.

    The ``to_move`` fields of the component positions are not meaningful
    here; only the sum's own ``to_move`` counts.
    """

    components: tuple[Position, ...]
    to_move: Player

    __hash__ = None  # type: ignore[assignment]

    @property
    def score(self) -> int:
        return sum(c.score for c in self.components)


def sum_position(instances: Iterable[Instance], first_player: Player) -> SumPosition:
    comps = tuple(initial_position(inst, first_player) for inst in instances)
    return SumPosition(comps, first_player)


def sum_legal_moves(sp: SumPosition) -> list[SumMove]:
    out: list[SumMove] = []
    for ci, comp in enumerate(sp.components):
        out.extend((ci, m) for m in moves_for(comp, sp.to_move))
    return out


def sum_apply(sp: SumPosition, sum_move: SumMove) -> SumPosition:
    ci, move = sum_move
    comp = replace(sp.components[ci], to_move=sp.to_move)
    new_comp = apply_move(comp, move)
    comps = sp.components[:ci] + (new_comp,) + sp.components[ci + 1 :]
    return SumPosition(comps, sp.to_move.opponent)


def sum_is_terminal(sp: SumPosition) -> bool:
    return not sum_legal_moves(sp)


@dataclass(frozen=True)
class SumReport:
    final_scores: FinalScores
    outcome: OutcomeClass
    best_first_moves_left: frozenset[SumMove]
    best_first_moves_right: frozenset[SumMove]
    nodes_expanded: int


class _SumSearch:
    """Alpha-beta over tuples of packed component states."""

    __slots__ = ("adj", "wt", "inf", "memo", "nodes", "budget")

    def __init__(self, instances: Sequence[Instance], budget: int):
        self.adj = [list(inst.graph.adjacency_bits) for inst in instances]
        self.wt = []
        total = 0
        for inst in instances:
            wt = [0] * inst.graph.vertex_count
            for v, w in inst.weights.items():
                wt[v] = w
            self.wt.append(wt)
            total += sum(abs(w) for w in wt)
        self.inf = total + 1
        self.memo: dict = {}
        self.nodes = 0
        self.budget = budget

    def value(self, states, left_to_move, alpha, beta):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.budget, "sum solve")
        moves = []
        for ci in range(len(states)):
            lships, rships, visited = states[ci]
            ships = lships if left_to_move else rships
            adj = self.adj[ci]
            wt = self.wt[ci]
            for si in range(len(ships)):
                m = adj[ships[si]] & ~visited
                while m:
                    b = m & -m
                    m ^= b
                    to = b.bit_length() - 1
                    moves.append((wt[to], ci, si, to, b))
        if not moves:
            return 0
        key = (states, left_to_move)
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
            moves.sort(key=lambda t: -t[0])
        if left_to_move:
            best = -self.inf
        else:
            best = self.inf
        for w, ci, si, to, bit in moves:
            lships, rships, visited = states[ci]
            ships = lships if left_to_move else rships
            if len(ships) == 1:
                nt = (to,)
            else:
                tmp = list(ships)
                tmp[si] = to
                tmp.sort()
                nt = tuple(tmp)
            if left_to_move:
                ns = (nt, rships, visited | bit)
            else:
                ns = (lships, nt, visited | bit)
            child = states[:ci] + (ns,) + states[ci + 1 :]
            if left_to_move:
                v = w + self.value(child, False, alpha - w, beta - w)
                if v > best:
                    best = v
                    if v > alpha:
                        alpha = v
                        if alpha >= beta:
                            break
            else:
                v = -w + self.value(child, True, alpha + w, beta + w)
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


def _pack_component(pos: Position) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    visited = 0
    for v in pos.visited:
        visited |= 1 << v
    return tuple(sorted(pos.left_ships)), tuple(sorted(pos.right_ships)), visited


def _sum_value(search: _SumSearch, sp: SumPosition) -> int:
    states = tuple(_pack_component(c) for c in sp.components)
    delta = search.value(states, sp.to_move is Player.LEFT, -search.inf, search.inf)
    return sp.score + delta


def solve_sum(sp: SumPosition, budget: int = DEFAULT_NODE_BUDGET) -> SumReport:
    """Scores, class and best first moves for a compound position."""
    search = _SumSearch([c.instance for c in sp.components], budget)
    scores = []
    bests = []
    for first in (Player.LEFT, Player.RIGHT):
        root = SumPosition(sp.components, first)
        moves = sum_legal_moves(root)
        if not moves:
            scores.append(root.score)
            bests.append(frozenset())
            continue
        values = {sm: _sum_value(search, sum_apply(root, sm)) for sm in moves}
        score = max(values.values()) if first is Player.LEFT else min(values.values())
        scores.append(score)
        bests.append(frozenset(sm for sm, v in values.items() if v == score))
    final = FinalScores(scores[0], scores[1])
    return SumReport(
        final_scores=final,
        outcome=classify(final),
        best_first_moves_left=bests[0],
        best_first_moves_right=bests[1],
        nodes_expanded=search.nodes,
    )


def sum_solve(sp: SumPosition, budget: int = DEFAULT_NODE_BUDGET) -> FinalScores:
    """Final scores of a compound position, both first movers."""
    return solve_sum(sp, budget).final_scores
