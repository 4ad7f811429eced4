#pragma once

// Text and JSON renderings shared by the CLI, the HTTP service and the
// Python module.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sim/board.hpp"
#include "sim/strategy.hpp"
#include "sim/verifier.hpp"

namespace sim {

// Engine explanation: mini_board_vertices, rule1_moves, rule2_counts,
// rule2_moves, rule3_counts, final_moves and the max-set sizes/counts.
nlohmann::json decision_to_json(const StrategyDecision& d);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::json audit_to_json(const AuditReport& a);
nlohmann::json cross_check_to_json(const CrossCheckReport& c);
nlohmann::json run_to_json(const VerificationRun& run);

std::string format_run_text(const VerificationRun& run);

// Full `analyze` output: status, mini-boards, per-board rule tables, the
// union of strategy moves and the deterministic engine move.
std::string format_analysis_text(const Position& p);
nlohmann::json analysis_to_json(const Position& p);

// One line, e.g. "board {0,1,2}; rule1 02 12; rule2 02:1 12:1; rule3 02:1 12:1; final 02 12"
std::string format_decision_summary(const StrategyDecision& d);

nlohmann::json edges_to_json(EdgeSet s);

}  // namespace sim
