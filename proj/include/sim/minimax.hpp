#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>

#include "sim/board.hpp"

namespace sim {

enum class GameValue : std::uint8_t { P1Wins, P2Wins };

const char* to_string(GameValue v) noexcept;  // "p1_wins" / "p2_wins"

// Exact game value under optimal play, memoized on canonical keys.
// Completing your own triangle loses; every line ends by move 15.
class MinimaxSolver {
public:
    // Throws InvalidArgument for a terminal position.
    GameValue solve(const Position& p);

    std::size_t memo_size() const noexcept { return memo_.size(); }
    std::uint64_t nodes_expanded() const noexcept { return nodes_; }

private:
    bool mover_wins(const Position& p);

    std::unordered_map<std::uint32_t, bool> memo_;
    std::uint64_t nodes_ = 0;
};

// Uses a per-thread solver whose memo persists across calls.
GameValue solve_minimax(const Position& p);

}  // namespace sim
