#pragma once

// Session-based JSON game service for the browser UI. The human is always
// P1; every accepted P1 move is answered by the engine in the same exchange,
// so a session at rest is either P1 to move or finished.
//
//   POST /games                -> 201 state
//   GET  /games/{id}           -> 200 state | 404
//   POST /games/{id}/moves     {"move":"uv"} -> 200 state | 400 | 404 | 409

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sim/board.hpp"

namespace sim {

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
};

class GameService {
public:
    using Clock = std::chrono::steady_clock;

    explicit GameService(std::chrono::seconds idle_ttl = std::chrono::hours(1),
                         std::function<Clock::time_point()> now = Clock::now);

    ServiceResponse create_game();
    ServiceResponse get_state(const std::string& id);
    ServiceResponse submit_move(const std::string& id, const std::string& request_body);

    // Drops sessions idle longer than the ttl; returns how many.
    std::size_t expire_idle();
    std::size_t session_count() const;

private:
    struct Session {
        std::string id;
        Position position;
        std::vector<EdgeId> transcript;
        GameStatus status = GameStatus::Ongoing;
        std::optional<EdgeId> engine_move;
        nlohmann::json explanation;  // null until the engine has replied
        Clock::time_point last_access;
        std::mutex mutation;
    };

    std::shared_ptr<Session> find(const std::string& id);
    std::string new_id();
    static nlohmann::json state_document(const Session& s);

    std::chrono::seconds ttl_;
    std::function<Clock::time_point()> now_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 rng_;
};

struct ServerConfig {
    std::string host = "0.0.0.0";
    int port = 8080;  // 0 binds an ephemeral port
    std::string static_dir;
    std::chrono::seconds session_ttl = std::chrono::hours(1);
};

// HTTP transport over GameService.
class HttpServer {
public:
    explicit HttpServer(ServerConfig config);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // Binds the socket; returns the bound port. Throws SimError on failure.
    int bind();
    // Blocks until stop().
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace sim
