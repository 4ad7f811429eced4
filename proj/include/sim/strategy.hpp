#pragma once

// The second player's three-rule strategy.
//
// A mini-board M of a position is a complete subgraph (given by its vertex
// set) that contains every colored edge and at least one P2-allowed move,
// and is inclusion-minimal with that property. On M, P2:
//   1. keeps only P2-allowed moves on M,
//   2. of those, keeps the moves lying in the most maximum P2-allowed sets on M,
//   3. of those, keeps the moves lying in the most maximum P1-allowed sets on M.
// Any move that survives all three rules may be played.

#include <array>
#include <cstdint>
#include <vector>

#include "sim/board.hpp"
#include "sim/symmetry.hpp"

namespace sim {

class NoMiniBoard : public SimError {
public:
    using SimError::SimError;
};

class InvariantViolation : public SimError {
public:
    using SimError::SimError;
};

struct MiniBoard {
    VertexSet vertices;

    EdgeSet edges() const noexcept { return induced_edges(vertices); }
    EdgeSet uncolored(const Position& p) const noexcept { return edges() & p.uncolored(); }

    constexpr auto operator<=>(const MiniBoard&) const = default;
};

// All inclusion-minimal mini-boards, ascending by vertex mask. Throws
// NoMiniBoard when P2 has no allowed move, and InvariantViolation if the
// boards are not all support(p) or support(p) plus one vertex.
std::vector<MiniBoard> minimal_mini_boards(const Position& p);

// The minimal mini-board with the smallest vertex mask.
MiniBoard canonical_mini_board(const Position& p);

// Every maximum-cardinality `player`-allowed subset of m's uncolored edges,
// in ascending mask order. Never empty: the empty set always qualifies.
std::vector<EdgeSet> max_allowed_sets_on(const Position& p, const MiniBoard& m, Player player);

// Per-edge counters; only entries for rule-1 moves are meaningful.
using EdgeCounts = std::array<std::uint16_t, kEdgeCount>;

struct StrategyDecision {
    MiniBoard mini_board;
    EdgeSet rule1_moves;
    EdgeCounts rule2_counts{};
    EdgeSet rule2_moves;
    EdgeCounts rule3_counts{};
    EdgeSet final_moves;

    // Size and number of the maximum allowed sets the counts are drawn from.
    int p2_max_set_size = 0;
    int p2_max_set_count = 0;
    int p1_max_set_size = 0;
    int p1_max_set_count = 0;
};

// Rules 1-3 on board `m`. Throws InvariantViolation if rule 1 leaves nothing.
StrategyDecision strategy_decision(const Position& p, const MiniBoard& m);

// Union of final moves over every minimal mini-board.
EdgeSet strategy_moves_all(const Position& p);

// Deterministic reply used in play: canonical board, lowest surviving EdgeId.
struct EngineReply {
    EdgeId move;
    StrategyDecision decision;
};

EngineReply engine_reply(const Position& p);

}  // namespace sim
