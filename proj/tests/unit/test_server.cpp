#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "sim/server.hpp"
#include "sim/strategy.hpp"
#include "sim/verifier.hpp"

using namespace sim;
using nlohmann::json;

namespace {

std::string move_body(const std::string& m) { return json{{"move", m}}.dump(); }

std::string new_game(GameService& svc) {
    const ServiceResponse r = svc.create_game();
    REQUIRE(r.status == 201);
    return r.body["id"].get<std::string>();
}

}  // namespace

TEST_CASE("create_game") {
    GameService svc;
    const ServiceResponse r = svc.create_game();
    CHECK(r.status == 201);
    CHECK(r.body["position"] == "...............");
    CHECK(r.body["status"] == "ongoing");
    CHECK(r.body["turn"] == "p1");
    CHECK(r.body["transcript"].empty());

    const ServiceResponse other = svc.create_game();
    CHECK(other.body["id"] != r.body["id"]);

    const ServiceResponse got = svc.get_state(r.body["id"]);
    CHECK(got.status == 200);
    CHECK(got.body == r.body);
}

TEST_CASE("first exchange") {
    GameService svc;
    const std::string id = new_game(svc);
    const ServiceResponse r = svc.submit_move(id, move_body("01"));
    REQUIRE(r.status == 200);
    const std::set<std::string> first_moves{"02", "03", "04", "05", "12", "13", "14", "15"};
    CHECK(first_moves.contains(r.body["engine_move"].get<std::string>()));
    CHECK(r.body["explanation"]["mini_board_vertices"] == json({0, 1, 2}));
    for (const auto& [edge, count] : r.body["explanation"]["rule2_counts"].items()) CHECK(count == 1);
    for (const auto& [edge, count] : r.body["explanation"]["rule3_counts"].items()) CHECK(count == 1);
    CHECK(r.body["transcript"].size() == 2);
    CHECK(svc.get_state(id).body == r.body);
}

TEST_CASE("move errors") {
    GameService svc;
    const std::string id = new_game(svc);
    REQUIRE(svc.submit_move(id, move_body("01")).status == 200);
    CHECK(svc.submit_move(id, move_body("01")).status == 409);
    CHECK(svc.submit_move(id, move_body("00")).status == 400);
    CHECK(svc.submit_move(id, move_body("7")).status == 400);
    CHECK(svc.submit_move(id, "not json").status == 400);
    CHECK(svc.submit_move(id, R"({"mv":"01"})").status == 400);
    CHECK(svc.submit_move(id, R"({"move":1})").status == 400);
    CHECK(svc.submit_move("nope", move_body("23")).status == 404);
    CHECK(svc.get_state("nope").status == 404);
    // Failed requests leave the state alone.
    CHECK(svc.get_state(id).body["transcript"].size() == 2);
}

TEST_CASE("suicidal human line ends the game with the losing triangle") {
    GameService svc;
    const std::string id = new_game(svc);
    json state = svc.get_state(id).body;
    while (state["status"] == "ongoing") {
        const Position p = parse_position(state["position"].get<std::string>());
        // Prefer a move closing a red triangle, otherwise the lowest free edge.
        EdgeId pick = p.uncolored().first();
        for (EdgeId e : p.uncolored())
            if (contains_triangle(p.red.with(e))) {
                pick = e;
                break;
            }
        const ServiceResponse r = svc.submit_move(id, move_body(format_edge(pick)));
        REQUIRE(r.status == 200);
        state = r.body;
    }
    CHECK(state["status"] == "p1_lost");
    CHECK(state["turn"].is_null());
    CHECK(state["engine_move"].is_null());
    REQUIRE(state["losing_triangle"].size() == 3);
    const Position end = parse_position(state["position"].get<std::string>());
    EdgeSet tri;
    for (const auto& e : state["losing_triangle"]) tri = tri.with(parse_edge(e.get<std::string>()));
    CHECK(contains_triangle(tri));
    CHECK(tri.is_subset_of(end.red));
    CHECK(svc.submit_move(id, move_body(format_edge(end.uncolored().first()))).status == 409);
}

TEST_CASE("random games: engine follows the strategy and never loses") {
    GameService svc;
    std::mt19937_64 rng(61);
    for (int game = 0; game < 20; ++game) {
        const std::string id = new_game(svc);
        json state = svc.get_state(id).body;
        while (state["status"] == "ongoing") {
            const Position before = parse_position(state["position"].get<std::string>());
            const EdgeSet free = before.uncolored();
            std::uniform_int_distribution<int> pick(0, free.size() - 1);
            auto it = free.begin();
            std::advance(it, pick(rng));
            const EdgeId human = *it;

            const ServiceResponse r = svc.submit_move(id, move_body(format_edge(human)));
            REQUIRE(r.status == 200);
            state = r.body;
            REQUIRE(state["status"] != "p2_lost");
            if (!state["engine_move"].is_null()) {
                const Position mid = apply_move(before, human).position;
                const EdgeSet expected = strategy_decision(mid, canonical_mini_board(mid)).final_moves;
                REQUIRE(expected.contains(parse_edge(state["engine_move"].get<std::string>())));
            }
            // State is a function of the transcript.
            std::vector<EdgeId> line;
            for (const auto& m : state["transcript"]) line.push_back(parse_edge(m.get<std::string>()));
            const ReplayOutcome replayed = replay(line);
            REQUIRE(format_position(replayed.position) == state["position"]);
            REQUIRE(to_string(replayed.status) == state["status"]);
            REQUIRE(svc.get_state(id).body == state);
        }
        CHECK(state["status"] == "p1_lost");
    }
}

TEST_CASE("idle sessions expire") {
    auto now = GameService::Clock::time_point{};
    GameService svc(std::chrono::seconds(60), [&] { return now; });
    const std::string old_id = new_game(svc);
    now += std::chrono::seconds(30);
    const std::string young_id = new_game(svc);
    now += std::chrono::seconds(40);
    CHECK(svc.get_state(old_id).status == 404);
    CHECK(svc.get_state(young_id).status == 200);
    now += std::chrono::seconds(59);
    CHECK(svc.expire_idle() == 0);
    now += std::chrono::seconds(2);
    CHECK(svc.expire_idle() == 1);
    CHECK(svc.session_count() == 0);
}

TEST_CASE("concurrent moves on one session are serialized") {
    GameService svc;
    const std::string id = new_game(svc);
    std::atomic<int> ok{0}, conflict{0}, other{0};
    std::vector<std::thread> threads;
    for (const char* m : {"01", "23", "45", "02", "13", "24", "35", "04"}) {
        threads.emplace_back([&, m] {
            const int s = svc.submit_move(id, move_body(m)).status;
            (s == 200 ? ok : s == 409 ? conflict : other)++;
        });
    }
    for (auto& t : threads) t.join();
    CHECK(other == 0);
    CHECK(ok >= 1);
    const json state = svc.get_state(id).body;
    std::vector<EdgeId> line;
    for (const auto& m : state["transcript"]) line.push_back(parse_edge(m.get<std::string>()));
    CHECK(format_position(replay(line).position) == state["position"]);
}

TEST_CASE("HTTP transport") {
    const auto dir = std::filesystem::temp_directory_path() / "sim_static_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "index.html") << "<html>sim</html>";

    ServerConfig cfg;
    cfg.host = "127.0.0.1";
    cfg.port = 0;
    cfg.static_dir = dir.string();
    HttpServer server(cfg);
    const int port = server.bind();
    std::thread loop([&] { server.listen(); });

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/games", "", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = json::parse(created->body)["id"];

    auto moved = client.Post("/games/" + id + "/moves", move_body("01"), "application/json");
    REQUIRE(moved);
    CHECK(moved->status == 200);
    CHECK(json::parse(moved->body)["transcript"].size() == 2);

    auto again = client.Post("/games/" + id + "/moves", move_body("01"), "application/json");
    REQUIRE(again);
    CHECK(again->status == 409);

    auto got = client.Get("/games/" + id);
    REQUIRE(got);
    CHECK(got->status == 200);
    CHECK(json::parse(got->body) == json::parse(moved->body));

    auto missing = client.Get("/games/abc123");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto page = client.Get("/index.html");
    REQUIRE(page);
    CHECK(page->body == "<html>sim</html>");

    server.stop();
    loop.join();
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing static dir is rejected") {
    ServerConfig cfg;
    cfg.static_dir = "/nonexistent/sim/static";
    CHECK_THROWS_AS(HttpServer{cfg}, SimError);
}
