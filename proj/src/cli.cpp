#include "sim/cli.hpp"

#include <csignal>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "sim/minimax.hpp"
#include "sim/play.hpp"
#include "sim/report.hpp"
#include "sim/server.hpp"
#include "sim/verifier.hpp"

namespace sim {

namespace {

HttpServer* g_server = nullptr;

extern "C" void handle_stop_signal(int) {
    if (g_server) g_server->stop();
}

// Prints a parse diagnostic and returns the usage exit code.
int report_parse_error(std::ostream& err, const ParseError& e) {
    err << "parse error";
    if (e.index() != std::string::npos) err << " at index " << e.index();
    err << ": " << e.what() << '\n';
    return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sim on K6: three-rule second-player strategy, verifier and game engine", "sim"};
    app.require_subcommand(1);

    bool json_out = false;

    // verify
    auto* verify = app.add_subcommand("verify", "Check the strategy against every P1 line");
    VerifyOptions vopt;
    bool no_memo = false;
    const std::map<std::string, VerifyMode> modes{{"exhaustive", VerifyMode::Exhaustive}, {"canonical", VerifyMode::Canonical}};
    const std::map<std::string, TieBreak> tie_breaks{{"all", TieBreak::All}, {"first", TieBreak::First}};
    verify->add_option("--mode", vopt.mode, "exhaustive: every mini-board; canonical: smallest-mask board only")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    verify->add_option("--tie-break", vopt.tie_break, "all: explore every surviving move; first: lowest EdgeId only")
        ->transform(CLI::CheckedTransformer(tie_breaks, CLI::ignore_case));
    verify->add_flag("--no-memo", no_memo, "Disable the verified-position memo");
    verify->add_flag("--audit", vopt.audit, "Check mini-board uniqueness up to isomorphism at every P2 node");
    verify->add_flag("--cross-check", vopt.cross_check, "Check every strategy reply against minimax");
    verify->add_flag("--json", json_out, "Structured output");

    // solve
    auto* solve = app.add_subcommand("solve", "Game value under optimal play");
    std::string solve_position(kEdgeCount, '.');
    solve->add_option("position", solve_position, "15-character position over {R,B,.}");
    solve->add_flag("--json", json_out, "Structured output");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Mini-boards and rule tables for a position");
    std::string analyze_position;
    analyze->add_option("position", analyze_position, "15-character position over {R,B,.}")->required();
    analyze->add_flag("--json", json_out, "Structured output");

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "Check every 2-coloring of K6 has a monochromatic triangle");
    ramsey->add_flag("--json", json_out, "Structured output");

    // play
    auto* play = app.add_subcommand("play", "Play P1 against the engine on stdin/stdout");
    std::string human = "p1";
    play->add_option("--human", human, "Side played by the human")->check(CLI::IsMember({"p1"}, CLI::ignore_case));

    // serve
    auto* serve = app.add_subcommand("serve", "HTTP/JSON game server for the browser UI");
    ServerConfig scfg;
    int ttl_seconds = 3600;
    serve->add_option("--port", scfg.port, "TCP port")->check(CLI::Range(0, 65535));
    serve->add_option("--host", scfg.host, "Bind address");
    serve->add_option("--static-dir", scfg.static_dir, "Directory of UI assets served at /");
    serve->add_option("--session-ttl", ttl_seconds, "Idle seconds before a session expires")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            vopt.memo = !no_memo;
            const VerificationRun run = run_verification(vopt);
            if (json_out)
                out << run_to_json(run).dump(2) << '\n';
            else
                out << format_run_text(run);
            const bool clean = run.report.result == VerifyResult::Verified &&
                               (!run.audit || run.audit->violations.empty()) &&
                               (!run.cross_check || run.cross_check->mismatches.empty());
            return clean ? kExitOk : kExitFailed;
        }
        if (*solve) {
            const Position p = parse_position(solve_position);
            const GameValue v = solve_minimax(p);
            if (json_out)
                out << nlohmann::json{{"position", format_position(p)}, {"value", to_string(v)}}.dump(2) << '\n';
            else
                out << format_position(p) << ": " << (v == GameValue::P1Wins ? "P1" : "P2") << " wins under optimal play\n";
            return kExitOk;
        }
        if (*analyze) {
            const Position p = parse_position(analyze_position);
            if (json_out)
                out << analysis_to_json(p).dump(2) << '\n';
            else
                out << format_analysis_text(p);
            return kExitOk;
        }
        if (*ramsey) {
            const bool k6 = ramsey_check();
            const bool k5 = ramsey_check_on(VertexSet{0, 1, 2, 3, 4});
            if (json_out) {
                out << nlohmann::json{{"colorings", 1 << kEdgeCount},
                                      {"all_monochromatic", k6},
                                      {"k5_colorings", 1 << 10},
                                      {"k5_all_monochromatic", k5}}
                           .dump(2)
                    << '\n';
            } else {
                if (k6)
                    out << "all 32768 colorings contain a monochromatic triangle\n";
                else
                    out << "found a coloring of K6 without a monochromatic triangle\n";
                out << "K5 control: " << (k5 ? "every coloring has a monochromatic triangle"
                                             : "a coloring without a monochromatic triangle exists")
                    << '\n';
            }
            return k6 && !k5 ? kExitOk : kExitFailed;
        }
        if (*play) {
            const PlayOutcome o = play_loop(in, out);
            return o.aborted ? kExitAborted : kExitOk;
        }
        if (*serve) {
            scfg.session_ttl = std::chrono::seconds(ttl_seconds);
            HttpServer server(scfg);
            const int port = server.bind();
            out << "listening on " << scfg.host << ":" << port << std::endl;
            g_server = &server;
            std::signal(SIGINT, handle_stop_signal);
            std::signal(SIGTERM, handle_stop_signal);
            server.listen();
            g_server = nullptr;
            return kExitOk;
        }
    } catch (const ParseError& e) {
        return report_parse_error(err, e);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sim
