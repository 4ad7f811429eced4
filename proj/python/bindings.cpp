#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sim/minimax.hpp"
#include "sim/play.hpp"
#include "sim/report.hpp"
#include "sim/server.hpp"
#include "sim/strategy.hpp"
#include "sim/symmetry.hpp"
#include "sim/verifier.hpp"

namespace py = pybind11;
using namespace sim;

// Structured results cross the boundary as JSON text; the Python package
// decodes them.

namespace {

std::vector<std::string> edge_names(EdgeSet s) {
    std::vector<std::string> out;
    for (EdgeId e : s) out.push_back(format_edge(e));
    return out;
}

std::vector<int> vertex_list(VertexSet v) {
    return {v.begin(), v.end()};
}

Player parse_player(const std::string& s) {
    if (s == "p1") return Player::P1;
    if (s == "p2") return Player::P2;
    throw InvalidArgument("player must be \"p1\" or \"p2\", got \"" + s + "\"");
}

template <typename Enum>
Enum pick(const std::string& name, std::initializer_list<std::pair<const char*, Enum>> table, const char* what) {
    for (const auto& [key, value] : table)
        if (name == key) return value;
    throw InvalidArgument(std::string("unknown ") + what + ": " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sim on K6: board, three-rule strategy, verifier and minimax";

    auto sim_error = py::register_exception<SimError>(m, "SimError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", sim_error.ptr());
    py::register_exception<IllegalMove>(m, "IllegalMove", sim_error.ptr());
    py::register_exception<GameOver>(m, "GameOver", sim_error.ptr());
    py::register_exception<NoMiniBoard>(m, "NoMiniBoard", sim_error.ptr());

    m.def("status", [](const std::string& pos) { return std::string(to_string(status(parse_position(pos)))); },
          py::arg("position"));
    m.def("to_move", [](const std::string& pos) { return parse_position(pos).to_move() == Player::P1 ? "p1" : "p2"; },
          py::arg("position"));
    m.def(
        "allowed_moves",
        [](const std::string& pos, const std::string& player) {
            return edge_names(allowed_moves(parse_position(pos), parse_player(player)));
        },
        py::arg("position"), py::arg("player"));
    m.def(
        "apply_move",
        [](const std::string& pos, const std::string& edge) {
            const MoveResult r = apply_move(parse_position(pos), parse_edge(edge));
            return py::make_tuple(format_position(r.position), to_string(r.status));
        },
        py::arg("position"), py::arg("edge"));
    m.def(
        "replay",
        [](const std::vector<std::string>& moves) {
            std::vector<EdgeId> line;
            for (const auto& mv : moves) line.push_back(parse_edge(mv));
            const ReplayOutcome r = replay(line);
            return py::make_tuple(format_position(r.position), to_string(r.status));
        },
        py::arg("moves"));

    m.def(
        "mini_boards",
        [](const std::string& pos) {
            std::vector<std::vector<int>> out;
            for (const MiniBoard& b : minimal_mini_boards(parse_position(pos))) out.push_back(vertex_list(b.vertices));
            return out;
        },
        py::arg("position"));
    m.def("strategy_moves", [](const std::string& pos) { return edge_names(strategy_moves_all(parse_position(pos))); },
          py::arg("position"));
    m.def("engine_move", [](const std::string& pos) { return format_edge(engine_reply(parse_position(pos)).move); },
          py::arg("position"));
    m.def("_analyze", [](const std::string& pos) { return analysis_to_json(parse_position(pos)).dump(); },
          py::arg("position"));

    m.def("canonical_key", [](const std::string& pos) { return canonical_key(parse_position(pos)).to_text(); },
          py::arg("position"));
    m.def(
        "permute",
        [](const std::string& pos, const std::array<int, kVertexCount>& images) {
            return format_position(apply_permutation(parse_position(pos), Permutation(images)));
        },
        py::arg("position"), py::arg("images"));

    m.def(
        "solve",
        [](const std::string& pos) {
            const Position p = parse_position(pos);
            py::gil_scoped_release release;
            return std::string(to_string(solve_minimax(p)));
        },
        py::arg("position") = std::string(kEdgeCount, '.'));
    m.def(
        "ramsey_check",
        [](int n) {
            if (n < 1 || n > kVertexCount) throw InvalidArgument("vertex count must be in 1..6");
            return ramsey_check_on(VertexSet(static_cast<std::uint8_t>((1u << n) - 1)));
        },
        py::arg("n") = kVertexCount);

    m.def(
        "_verify",
        [](const std::string& mode, const std::string& tie_break, bool memo, bool audit, bool cross_check,
           const std::string& policy) {
            VerifyOptions opt;
            opt.mode = pick<VerifyMode>(mode, {{"exhaustive", VerifyMode::Exhaustive}, {"canonical", VerifyMode::Canonical}},
                                        "mode");
            opt.tie_break = pick<TieBreak>(tie_break, {{"all", TieBreak::All}, {"first", TieBreak::First}}, "tie-break");
            opt.policy = pick<ReplyPolicy>(policy,
                                           {{"three_rules", ReplyPolicy::ThreeRules},
                                            {"rule1_only", ReplyPolicy::Rule1Only},
                                            {"lowest_allowed", ReplyPolicy::LowestAllowed}},
                                           "policy");
            opt.memo = memo;
            opt.audit = audit;
            opt.cross_check = cross_check;
            py::gil_scoped_release release;
            return run_to_json(run_verification(opt)).dump();
        },
        py::arg("mode"), py::arg("tie_break"), py::arg("memo"), py::arg("audit"), py::arg("cross_check"),
        py::arg("policy"));

    py::class_<GameService>(m, "_GameService")
        .def(py::init([](int ttl) { return std::make_unique<GameService>(std::chrono::seconds(ttl)); }),
             py::arg("session_ttl") = 3600)
        .def("create_game",
             [](GameService& s) {
                 const ServiceResponse r = s.create_game();
                 return py::make_tuple(r.status, r.body.dump());
             })
        .def("get_state",
             [](GameService& s, const std::string& id) {
                 const ServiceResponse r = s.get_state(id);
                 return py::make_tuple(r.status, r.body.dump());
             })
        .def("submit_move", [](GameService& s, const std::string& id, const std::string& body) {
            const ServiceResponse r = s.submit_move(id, body);
            return py::make_tuple(r.status, r.body.dump());
        });
}
