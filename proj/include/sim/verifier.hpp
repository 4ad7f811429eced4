#pragma once

// Exhaustive machine checks: the three-rule strategy against every P1 line,
// mini-board uniqueness, agreement with optimal play, and the no-tie fact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sim/board.hpp"
#include "sim/minimax.hpp"

namespace sim {

enum class VerifyMode : std::uint8_t { Exhaustive, Canonical };
enum class TieBreak : std::uint8_t { All, First };
enum class VerifyResult : std::uint8_t { Verified, Refuted };

// How P2 replies during verification. Only ThreeRules is the real strategy;
// the other two are deliberately weakened policies for negative tests.
enum class ReplyPolicy : std::uint8_t {
    ThreeRules,
    Rule1Only,      // rules 2 and 3 skipped
    LowestAllowed,  // lowest P2-allowed edge anywhere on the board
};

const char* to_string(VerifyMode m) noexcept;    // "exhaustive" / "canonical"
const char* to_string(TieBreak t) noexcept;      // "all" / "first"
const char* to_string(VerifyResult r) noexcept;  // "verified" / "refuted"
const char* to_string(ReplyPolicy p) noexcept;

struct VerificationReport {
    VerifyResult result = VerifyResult::Verified;
    std::optional<std::vector<EdgeId>> refutation_line;
    std::uint64_t p1_nodes_expanded = 0;
    std::uint64_t p2_nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t distinct_canonical_positions = 0;
    int max_game_length = 0;
    int min_p1_loss_length = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    TieBreak tie_break = TieBreak::All;

    bool operator==(const VerificationReport&) const = default;
};

struct MiniBoardViolation {
    std::string position;
    std::string detail;
    bool operator==(const MiniBoardViolation&) const = default;
};

struct AuditReport {
    std::uint64_t positions_audited = 0;
    std::vector<MiniBoardViolation> violations;
    bool operator==(const AuditReport&) const = default;
};

struct MinimaxMismatch {
    std::string position;
    EdgeId move;
    bool operator==(const MinimaxMismatch&) const = default;
};

struct CrossCheckReport {
    std::uint64_t nodes_checked = 0;
    std::uint64_t moves_checked = 0;
    std::vector<MinimaxMismatch> mismatches;
    bool operator==(const CrossCheckReport&) const = default;
};

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exhaustive;
    TieBreak tie_break = TieBreak::All;
    bool memo = true;
    bool audit = false;
    bool cross_check = false;
    ReplyPolicy policy = ReplyPolicy::ThreeRules;
};

struct VerificationRun {
    VerificationReport report;
    std::optional<AuditReport> audit;
    std::optional<CrossCheckReport> cross_check;
};

// Walks the game tree from the empty position: P1 tries every uncolored
// edge (suicides included), P2 answers with the policy's candidate replies.
VerificationRun run_verification(const VerifyOptions& options);

VerificationReport verify_strategy(VerifyMode mode, TieBreak tie_break, bool memo);

// P2's candidate replies at `p` under the given policy and mode, before the
// tie-break is applied. Empty iff P2 has no allowed move.
EdgeSet candidate_replies(const Position& p, VerifyMode mode, ReplyPolicy policy);

// Pairwise colored isomorphism and equal size of the minimal mini-boards of
// one position. Appends to `out.violations`.
void audit_position(const Position& p, AuditReport& out);

AuditReport audit_mini_boards();
CrossCheckReport cross_check_strategy_vs_minimax(ReplyPolicy policy = ReplyPolicy::ThreeRules);

// Every 2-coloring of the edges induced by `vertices` has a monochromatic
// triangle.
bool ramsey_check_on(VertexSet vertices);
inline bool ramsey_check() { return ramsey_check_on(VertexSet::all()); }

// Replays `line` from the empty position through apply_move.
struct ReplayOutcome {
    Position position;
    GameStatus status = GameStatus::Ongoing;
};
ReplayOutcome replay(const std::vector<EdgeId>& line);

// A refutation line either ends with P2 having lost, or at a P2 turn with no
// P2-allowed move.
bool is_valid_refutation(const std::vector<EdgeId>& line);

}  // namespace sim
