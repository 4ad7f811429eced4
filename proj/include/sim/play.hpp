#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "sim/board.hpp"
#include "sim/strategy.hpp"

namespace sim {

// P2's reply in play: the strategy's deterministic pick, or, if P2 has no
// allowed move at all, the lowest uncolored edge (which loses).
struct EngineMove {
    EdgeId move;
    std::optional<StrategyDecision> decision;
};

EngineMove choose_engine_move(const Position& p);

struct PlayOutcome {
    GameStatus status = GameStatus::Ongoing;
    std::vector<EdgeId> transcript;
    bool aborted = false;  // input ended mid-game
};

// Line-oriented game: the human is P1 and types one "uv" move per line;
// the engine answers as P2. Illegal input is rejected without using a turn.
PlayOutcome play_loop(std::istream& in, std::ostream& out);

}  // namespace sim
