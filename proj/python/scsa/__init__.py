"""Size-constrained state abstraction for MCTS on grid strategy games.

The heavy lifting lives in the C++ extension; this package re-exports the
operations most analysis scripts need.
"""

from scsa._core import (
    GameConfig,
    GameState,
    UnitAction,
    apply_action,
    generate_position,
    heuristic,
    initial_state,
    joint_action_count,
    legal_actions,
    legal_actions_for,
    load_game,
    outcome,
    play_match,
    rule_based_policy,
    score_for,
    search,
)

__all__ = [
    "GameConfig",
    "GameState",
    "UnitAction",
    "apply_action",
    "generate_position",
    "heuristic",
    "initial_state",
    "joint_action_count",
    "legal_actions",
    "legal_actions_for",
    "load_game",
    "outcome",
    "play_match",
    "rule_based_policy",
    "score_for",
    "search",
]
