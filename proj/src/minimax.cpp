#include "sim/minimax.hpp"

#include "sim/symmetry.hpp"

namespace sim {

const char* to_string(GameValue v) noexcept {
    return v == GameValue::P1Wins ? "p1_wins" : "p2_wins";
}

GameValue MinimaxSolver::solve(const Position& p) {
    if (status(p) != GameStatus::Ongoing)
        throw InvalidArgument("solve_minimax needs a non-terminal position, got " + format_position(p));
    const Player mover = p.to_move();
    const bool wins = mover_wins(p);
    const Player winner = wins ? mover : opponent(mover);
    return winner == Player::P1 ? GameValue::P1Wins : GameValue::P2Wins;
}

// Side to move in an ongoing position.
bool MinimaxSolver::mover_wins(const Position& p) {
    const std::uint32_t key = canonical_key(p).packed();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++nodes_;

    const Player mover = p.to_move();
    bool wins = false;
    // Suicidal moves lose outright, so only allowed moves can win.
    for (EdgeId e : allowed_moves(p, mover)) {
        Position child = p;
        if (mover == Player::P1)
            child.red = child.red.with(e);
        else
            child.blue = child.blue.with(e);
        if (!mover_wins(child)) {
            wins = true;
            break;
        }
    }
    memo_.emplace(key, wins);
    return wins;
}

GameValue solve_minimax(const Position& p) {
    thread_local MinimaxSolver solver;
    return solver.solve(p);
}

}  // namespace sim
