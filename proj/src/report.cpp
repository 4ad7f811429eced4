#include "sim/report.hpp"

#include <sstream>

namespace sim {

using nlohmann::json;

namespace {

json counts_to_json(EdgeSet domain, const EdgeCounts& counts) {
    json out = json::object();
    for (EdgeId e : domain) out[format_edge(e)] = counts[e.index()];
    return out;
}

std::string format_counts(EdgeSet domain, const EdgeCounts& counts) {
    std::string out;
    for (EdgeId e : domain) {
        if (!out.empty()) out += ' ';
        out += format_edge(e) + ":" + std::to_string(counts[e.index()]);
    }
    return out;
}

std::string format_line(const std::vector<EdgeId>& line) {
    std::string out;
    for (EdgeId e : line) {
        if (!out.empty()) out += ' ';
        out += format_edge(e);
    }
    return out;
}

std::vector<EdgeId> parse_line(const std::string& text) {
    std::vector<EdgeId> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_edge(tok));
    return out;
}

template <class Enum>
Enum enum_from(const std::string& text, std::initializer_list<Enum> values) {
    for (Enum v : values)
        if (text == to_string(v)) return v;
    throw InvalidArgument("unknown value \"" + text + "\"");
}

json vertices_to_json(VertexSet v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

}  // namespace

json edges_to_json(EdgeSet s) {
    json out = json::array();
    for (EdgeId e : s) out.push_back(format_edge(e));
    return out;
}

json decision_to_json(const StrategyDecision& d) {
    return {
        {"mini_board_vertices", vertices_to_json(d.mini_board.vertices)},
        {"rule1_moves", edges_to_json(d.rule1_moves)},
        {"rule2_counts", counts_to_json(d.rule1_moves, d.rule2_counts)},
        {"rule2_moves", edges_to_json(d.rule2_moves)},
        {"rule3_counts", counts_to_json(d.rule1_moves, d.rule3_counts)},
        {"final_moves", edges_to_json(d.final_moves)},
        {"p2_max_set_size", d.p2_max_set_size},
        {"p2_max_set_count", d.p2_max_set_count},
        {"p1_max_set_size", d.p1_max_set_size},
        {"p1_max_set_count", d.p1_max_set_count},
    };
}

json report_to_json(const VerificationReport& r) {
    return {
        {"result", to_string(r.result)},
        {"refutation_line", r.refutation_line ? json(format_line(*r.refutation_line)) : json(nullptr)},
        {"p1_nodes_expanded", r.p1_nodes_expanded},
        {"p2_nodes_expanded", r.p2_nodes_expanded},
        {"memo_hits", r.memo_hits},
        {"distinct_canonical_positions", r.distinct_canonical_positions},
        {"max_game_length", r.max_game_length},
        {"min_p1_loss_length", r.min_p1_loss_length},
        {"mode", to_string(r.mode)},
        {"tie_break", to_string(r.tie_break)},
    };
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.result = enum_from(j.at("result").get<std::string>(), {VerifyResult::Verified, VerifyResult::Refuted});
    if (!j.at("refutation_line").is_null()) r.refutation_line = parse_line(j.at("refutation_line").get<std::string>());
    r.p1_nodes_expanded = j.at("p1_nodes_expanded").get<std::uint64_t>();
    r.p2_nodes_expanded = j.at("p2_nodes_expanded").get<std::uint64_t>();
    r.memo_hits = j.at("memo_hits").get<std::uint64_t>();
    r.distinct_canonical_positions = j.at("distinct_canonical_positions").get<std::uint64_t>();
    r.max_game_length = j.at("max_game_length").get<int>();
    r.min_p1_loss_length = j.at("min_p1_loss_length").get<int>();
    r.mode = enum_from(j.at("mode").get<std::string>(), {VerifyMode::Exhaustive, VerifyMode::Canonical});
    r.tie_break = enum_from(j.at("tie_break").get<std::string>(), {TieBreak::All, TieBreak::First});
    return r;
}

json audit_to_json(const AuditReport& a) {
    json violations = json::array();
    for (const auto& v : a.violations) violations.push_back({{"position", v.position}, {"detail", v.detail}});
    return {{"positions_audited", a.positions_audited}, {"violations", violations}};
}

json cross_check_to_json(const CrossCheckReport& c) {
    json mismatches = json::array();
    for (const auto& m : c.mismatches) mismatches.push_back({{"position", m.position}, {"move", format_edge(m.move)}});
    return {{"nodes_checked", c.nodes_checked}, {"moves_checked", c.moves_checked}, {"mismatches", mismatches}};
}

json run_to_json(const VerificationRun& run) {
    json out = report_to_json(run.report);
    if (run.audit) out["audit"] = audit_to_json(*run.audit);
    if (run.cross_check) out["cross_check"] = cross_check_to_json(*run.cross_check);
    return out;
}

std::string format_run_text(const VerificationRun& run) {
    const VerificationReport& r = run.report;
    std::ostringstream out;
    out << "result: " << to_string(r.result) << '\n'
        << "mode: " << to_string(r.mode) << '\n'
        << "tie_break: " << to_string(r.tie_break) << '\n';
    if (r.refutation_line) out << "refutation_line: " << format_line(*r.refutation_line) << '\n';
    out << "p1_nodes_expanded: " << r.p1_nodes_expanded << '\n'
        << "p2_nodes_expanded: " << r.p2_nodes_expanded << '\n'
        << "memo_hits: " << r.memo_hits << '\n'
        << "distinct_canonical_positions: " << r.distinct_canonical_positions << '\n'
        << "max_game_length: " << r.max_game_length << '\n'
        << "min_p1_loss_length: " << r.min_p1_loss_length << '\n';
    if (run.audit) {
        out << "audit: " << run.audit->positions_audited << " positions, " << run.audit->violations.size()
            << " violations\n";
        for (const auto& v : run.audit->violations) out << "  " << v.position << ' ' << v.detail << '\n';
    }
    if (run.cross_check) {
        out << "cross_check: " << run.cross_check->nodes_checked << " nodes, " << run.cross_check->moves_checked
            << " moves, " << run.cross_check->mismatches.size() << " mismatches\n";
        for (const auto& m : run.cross_check->mismatches) out << "  " << m.position << ' ' << format_edge(m.move) << '\n';
    }
    return out.str();
}

std::string format_decision_summary(const StrategyDecision& d) {
    return "board " + format_vertices(d.mini_board.vertices) + "; rule1 " + format_edges(d.rule1_moves) + "; rule2 " +
           format_counts(d.rule1_moves, d.rule2_counts) + "; rule3 " + format_counts(d.rule1_moves, d.rule3_counts) +
           "; final " + format_edges(d.final_moves);
}

std::string format_analysis_text(const Position& p) {
    std::ostringstream out;
    const GameStatus st = status(p);
    out << "position: " << format_position(p) << '\n' << "status: " << to_string(st) << '\n';
    if (st != GameStatus::Ongoing) {
        const EdgeSet tri = find_triangle(st == GameStatus::P1Lost ? p.red : p.blue);
        out << "triangle: " << format_edges(tri) << '\n';
        return out.str();
    }
    const Player mover = p.to_move();
    out << "to_move: " << to_string(mover) << '\n';
    if (mover == Player::P1) {
        out << "p1_allowed_moves: " << format_edges(allowed_moves(p, Player::P1)) << '\n';
        return out.str();
    }
    if (allowed_moves(p, Player::P2).empty()) {
        out << "p2_allowed_moves: none (every reply completes a blue triangle)\n";
        return out.str();
    }

    const std::vector<MiniBoard> boards = minimal_mini_boards(p);
    out << "mini_boards:";
    for (const MiniBoard& m : boards) out << ' ' << format_vertices(m.vertices);
    out << '\n';
    EdgeSet all;
    for (const MiniBoard& m : boards) {
        const StrategyDecision d = strategy_decision(p, m);
        all |= d.final_moves;
        out << '\n'
            << "board " << format_vertices(m.vertices) << '\n'
            << "  rule1 (P2-allowed on M): " << format_edges(d.rule1_moves) << '\n'
            << "  rule2 (" << d.p2_max_set_count << " max P2-allowed sets of size " << d.p2_max_set_size
            << "): " << format_counts(d.rule1_moves, d.rule2_counts) << " -> " << format_edges(d.rule2_moves) << '\n'
            << "  rule3 (" << d.p1_max_set_count << " max P1-allowed sets of size " << d.p1_max_set_size
            << "): " << format_counts(d.rule2_moves, d.rule3_counts) << " -> " << format_edges(d.final_moves) << '\n';
    }
    out << '\n'
        << "strategy_moves: " << format_edges(all) << '\n'
        << "engine_move: " << format_edge(engine_reply(p).move) << '\n';
    return out.str();
}

json analysis_to_json(const Position& p) {
    const GameStatus st = status(p);
    json out = {{"position", format_position(p)}, {"status", to_string(st)}};
    if (st != GameStatus::Ongoing) {
        out["triangle"] = edges_to_json(find_triangle(st == GameStatus::P1Lost ? p.red : p.blue));
        return out;
    }
    const Player mover = p.to_move();
    out["to_move"] = mover == Player::P1 ? "p1" : "p2";
    out["allowed_moves"] = edges_to_json(allowed_moves(p, mover));
    if (mover == Player::P1 || allowed_moves(p, Player::P2).empty()) return out;

    json boards = json::array();
    json decisions = json::array();
    EdgeSet all;
    for (const MiniBoard& m : minimal_mini_boards(p)) {
        const StrategyDecision d = strategy_decision(p, m);
        all |= d.final_moves;
        boards.push_back(vertices_to_json(m.vertices));
        decisions.push_back(decision_to_json(d));
    }
    out["mini_boards"] = boards;
    out["decisions"] = decisions;
    out["strategy_moves"] = edges_to_json(all);
    out["engine_move"] = format_edge(engine_reply(p).move);
    return out;
}

}  // namespace sim
