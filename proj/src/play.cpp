#include "sim/play.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "sim/report.hpp"

namespace sim {

EngineMove choose_engine_move(const Position& p) {
    if (allowed_moves(p, Player::P2).empty()) return {p.uncolored().first(), std::nullopt};
    EngineReply r = engine_reply(p);
    return {r.move, std::move(r.decision)};
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void announce_loss(std::ostream& out, const Position& p, GameStatus st) {
    const bool p1 = st == GameStatus::P1Lost;
    out << (p1 ? "P1" : "P2") << " completes " << (p1 ? "red" : "blue") << " triangle "
        << format_edges(find_triangle(p1 ? p.red : p.blue)) << ". " << (p1 ? "P1" : "P2") << " loses.\n";
}

}  // namespace

PlayOutcome play_loop(std::istream& in, std::ostream& out) {
    PlayOutcome outcome;
    Position pos;
    out << "Sim on K6. You are P1 (red); the engine is P2 (blue).\n"
        << "Enter moves as two vertex digits, e.g. 01. Completing a triangle in your own color loses.\n";

    while (true) {
        out << "board: " << format_position(pos) << '\n' << "your move> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            out << "\ninput ended mid-game\n";
            outcome.aborted = true;
            return outcome;
        }
        line = trim(line);
        if (line.empty()) continue;

        EdgeId human;
        try {
            human = parse_edge(line);
            if (!pos.uncolored().contains(human)) throw IllegalMove("edge " + format_edge(human) + " is already colored");
        } catch (const SimError& e) {
            out << "illegal move: " << e.what() << '\n';
            continue;
        }

        MoveResult r = apply_move(pos, human);
        pos = r.position;
        outcome.transcript.push_back(human);
        if (r.status != GameStatus::Ongoing) {
            announce_loss(out, pos, r.status);
            outcome.status = r.status;
            return outcome;
        }

        const EngineMove reply = choose_engine_move(pos);
        r = apply_move(pos, reply.move);
        pos = r.position;
        outcome.transcript.push_back(reply.move);
        out << "engine plays " << format_edge(reply.move);
        if (reply.decision) out << " (" << format_decision_summary(*reply.decision) << ")";
        out << '\n';
        if (r.status != GameStatus::Ongoing) {
            announce_loss(out, pos, r.status);
            outcome.status = r.status;
            return outcome;
        }
    }
}

}  // namespace sim
