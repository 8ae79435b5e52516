"""Play conventions side by side: scoring, normal, and misere verdicts.

Normal play crowns whoever moves last; misere play the opposite; scoring
play counts treasure.  All three run on the same positions here so their
preferred first moves can be compared.  Agreement between conventions on
particular boards is reported as an observation, nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import (
    SumMove,
    SumPosition,
    _pack_component,
    solve_sum,
    sum_apply,
    sum_legal_moves,
    sum_position,
)
from ..engine import Player, Position
from ..model import Instance
from ..solver import DEFAULT_NODE_BUDGET, FinalScores, OutcomeClass


def _as_sum(state: Instance | Position | SumPosition, first: Player | None) -> SumPosition:
    if isinstance(state, SumPosition):
        sp = state
    elif isinstance(state, Position):
        sp = SumPosition((state,), state.to_move)
    elif isinstance(state, Instance):
        sp = sum_position([state], first or Player.LEFT)
    else:
        raise TypeError(f"cannot interpret {type(state).__name__} as a position")
    if first is not None and sp.to_move is not first:
        sp = SumPosition(sp.components, first)
    return sp


def _mover_wins(sp: SumPosition, misere: bool, memo: dict) -> bool:
    key = (tuple(_pack_component(c) for c in sp.components), sp.to_move)
    hit = memo.get(key)
    if hit is not None:
        return hit
    moves = sum_legal_moves(sp)
    if not moves:
        result = misere  # stuck: loses under normal play, wins under misere
    else:
        result = any(not _mover_wins(sum_apply(sp, m), misere, memo) for m in moves)
    memo[key] = result
    return result


def normal_outcome(state: Instance | Position | SumPosition, first: Player | None = None) -> Player:
    """Winner under optimal last-move-wins play, scores ignored."""
    sp = _as_sum(state, first)
    return sp.to_move if _mover_wins(sp, False, {}) else sp.to_move.opponent


def misere_outcome(state: Instance | Position | SumPosition, first: Player | None = None) -> Player:
    """Winner under optimal last-move-loses play, scores ignored."""
    sp = _as_sum(state, first)
    return sp.to_move if _mover_wins(sp, True, {}) else sp.to_move.opponent


def convention_best_moves(
    state: Instance | Position | SumPosition, misere: bool, first: Player | None = None
) -> frozenset[SumMove]:
    """First moves optimal under the given convention.

    When the mover wins these are the winning moves; in a lost game no
    move is better than another, so all of them count as best.
    """
    sp = _as_sum(state, first)
    memo: dict = {}
    moves = sum_legal_moves(sp)
    if not moves:
        return frozenset()
    winning = frozenset(
        m for m in moves if not _mover_wins(sum_apply(sp, m), misere, memo)
    )
    return winning if winning else frozenset(moves)


@dataclass(frozen=True)
class ConventionReport:
    """One board, three rulesets, seen from both possible first movers."""

    scoring_final: FinalScores
    scoring_outcome: OutcomeClass
    scoring_best_moves: dict[Player, frozenset[SumMove]]
    normal_winner: dict[Player, Player]
    misere_winner: dict[Player, Player]
    normal_best_moves: dict[Player, frozenset[SumMove]]
    misere_best_moves: dict[Player, frozenset[SumMove]]

    __hash__ = None  # type: ignore[assignment]

    def agrees(self, player: Player, convention: str) -> bool:
        """Does some scoring-best first move stay best under the convention?

        Vacuously true when the player has no moves at all.
        """
        other = (
            self.normal_best_moves if convention == "normal" else self.misere_best_moves
        )
        scoring = self.scoring_best_moves[player]
        if not scoring and not other[player]:
            return True
        return bool(scoring & other[player])


def convention_comparison(
    state: Instance | Position | SumPosition, budget: int = DEFAULT_NODE_BUDGET
) -> ConventionReport:
    """Solve the same board under all three conventions."""
    sp = _as_sum(state, None)
    scoring = solve_sum(sp, budget)
    scoring_best = {
        Player.LEFT: scoring.best_first_moves_left,
        Player.RIGHT: scoring.best_first_moves_right,
    }
    normal_winner = {}
    misere_winner = {}
    normal_best = {}
    misere_best = {}
    for first in (Player.LEFT, Player.RIGHT):
        rooted = SumPosition(sp.components, first)
        normal_winner[first] = normal_outcome(rooted)
        misere_winner[first] = misere_outcome(rooted)
        normal_best[first] = convention_best_moves(rooted, misere=False)
        misere_best[first] = convention_best_moves(rooted, misere=True)
    return ConventionReport(
        scoring_final=scoring.final_scores,
        scoring_outcome=scoring.outcome,
        scoring_best_moves=scoring_best,
        normal_winner=normal_winner,
        misere_winner=misere_winner,
        normal_best_moves=normal_best,
        misere_best_moves=misere_best,
    )
