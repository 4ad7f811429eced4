"""Sim on K6: board rules, the three-rule P2 strategy, verification and minimax.

Positions are 15-character strings over ``R``, ``B`` and ``.`` indexed by
edge (01, 02, ..., 45); edges are two-digit strings such as ``"03"``.
"""

import json

from ._core import (
    GameOver,
    IllegalMove,
    NoMiniBoard,
    ParseError,
    SimError,
    allowed_moves,
    apply_move,
    canonical_key,
    engine_move,
    mini_boards,
    permute,
    ramsey_check,
    replay,
    solve,
    status,
    strategy_moves,
    to_move,
)
from . import _core

EMPTY = "." * 15

__all__ = [
    "EMPTY",
    "GameOver",
    "GameService",
    "IllegalMove",
    "NoMiniBoard",
    "ParseError",
    "SimError",
    "allowed_moves",
    "analyze",
    "apply_move",
    "canonical_key",
    "engine_move",
    "mini_boards",
    "permute",
    "ramsey_check",
    "replay",
    "solve",
    "status",
    "strategy_moves",
    "to_move",
    "verify",
]


def analyze(position):
    """Mini-boards, per-board rule tables and the engine move, as a dict."""
    return json.loads(_core._analyze(position))


def verify(mode="exhaustive", tie_break="all", memo=True, audit=False, cross_check=False, policy="three_rules"):
    """Run the strategy verifier and return its report as a dict.

    ``policy`` may be ``"rule1_only"`` or ``"lowest_allowed"`` to check a
    deliberately weakened reply rule instead of the real strategy.
    """
    return json.loads(_core._verify(mode, tie_break, memo, audit, cross_check, policy))


class GameService:
    """In-process version of the HTTP game API; methods return (status, dict)."""

    def __init__(self, session_ttl=3600):
        self._service = _core._GameService(session_ttl)

    def create_game(self):
        code, body = self._service.create_game()
        return code, json.loads(body)

    def get_state(self, game_id):
        code, body = self._service.get_state(game_id)
        return code, json.loads(body)

    def submit_move(self, game_id, move):
        code, body = self._service.submit_move(game_id, json.dumps({"move": move}))
        return code, json.loads(body)
