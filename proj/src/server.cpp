#include "sim/server.hpp"

#include <httplib.h>

#include "sim/play.hpp"
#include "sim/report.hpp"

namespace sim {

using nlohmann::json;

namespace {

ServiceResponse error(int status, const std::string& message) {
    return {status, json{{"error", message}}};
}

}  // namespace

GameService::GameService(std::chrono::seconds idle_ttl, std::function<Clock::time_point()> now)
    : ttl_(idle_ttl), now_(std::move(now)), rng_(std::random_device{}()) {}

std::string GameService::new_id() {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    do {
        id.clear();
        std::uint64_t bits = rng_();
        for (int i = 0; i < 16; ++i, bits >>= 4) id += kHex[bits & 0xF];
    } while (sessions_.contains(id));
    return id;
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    it->second->last_access = now_();
    return it->second;
}

std::size_t GameService::expire_idle() {
    std::lock_guard lock(mutex_);
    const auto cutoff = now_() - ttl_;
    return std::erase_if(sessions_, [&](const auto& kv) { return kv.second->last_access < cutoff; });
}

std::size_t GameService::session_count() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

json GameService::state_document(const Session& s) {
    json transcript = json::array();
    for (EdgeId e : s.transcript) transcript.push_back(format_edge(e));
    json doc = {
        {"id", s.id},
        {"position", format_position(s.position)},
        {"status", to_string(s.status)},
        {"turn", s.status == GameStatus::Ongoing ? json("p1") : json(nullptr)},
        {"transcript", transcript},
        {"engine_move", s.engine_move ? json(format_edge(*s.engine_move)) : json(nullptr)},
        {"explanation", s.explanation},
    };
    if (s.status != GameStatus::Ongoing) {
        const EdgeSet colors = s.status == GameStatus::P1Lost ? s.position.red : s.position.blue;
        doc["losing_triangle"] = edges_to_json(find_triangle(colors));
    }
    return doc;
}

ServiceResponse GameService::create_game() {
    expire_idle();
    auto s = std::make_shared<Session>();
    {
        std::lock_guard lock(mutex_);
        s->id = new_id();
        s->last_access = now_();
        sessions_.emplace(s->id, s);
    }
    return {201, state_document(*s)};
}

ServiceResponse GameService::get_state(const std::string& id) {
    expire_idle();
    auto s = find(id);
    if (!s) return error(404, "unknown game " + id);
    std::lock_guard lock(s->mutation);
    return {200, state_document(*s)};
}

ServiceResponse GameService::submit_move(const std::string& id, const std::string& request_body) {
    expire_idle();
    auto s = find(id);
    if (!s) return error(404, "unknown game " + id);

    EdgeId move;
    try {
        const json body = json::parse(request_body);
        if (!body.is_object() || !body.contains("move") || !body["move"].is_string())
            return error(400, "body must be {\"move\":\"uv\"}");
        move = parse_edge(body["move"].get<std::string>());
    } catch (const json::exception& e) {
        return error(400, std::string("malformed JSON: ") + e.what());
    } catch (const ParseError& e) {
        return error(400, std::string("malformed move: ") + e.what());
    }

    std::unique_lock lock(s->mutation, std::try_to_lock);
    if (!lock.owns_lock()) return error(409, "another move is in progress for this game");
    if (s->status != GameStatus::Ongoing) return error(409, "game is over");
    if (!s->position.uncolored().contains(move))
        return error(409, "edge " + format_edge(move) + " is already colored");

    MoveResult r = apply_move(s->position, move);
    s->position = r.position;
    s->status = r.status;
    s->transcript.push_back(move);
    s->engine_move.reset();
    s->explanation = nullptr;

    if (s->status == GameStatus::Ongoing) {
        const EngineMove reply = choose_engine_move(s->position);
        r = apply_move(s->position, reply.move);
        s->position = r.position;
        s->status = r.status;
        s->transcript.push_back(reply.move);
        s->engine_move = reply.move;
        if (reply.decision) s->explanation = decision_to_json(*reply.decision);
    }
    return {200, state_document(*s)};
}

// ---------------------------------------------------------------------------

struct HttpServer::Impl {
    ServerConfig config;
    GameService service;
    httplib::Server http;

    explicit Impl(ServerConfig c) : config(std::move(c)), service(config.session_ttl) {
        auto reply = [](httplib::Response& res, const ServiceResponse& r) {
            res.status = r.status;
            res.set_content(r.body.dump(), "application/json");
        };
        http.Post("/games", [this, reply](const httplib::Request&, httplib::Response& res) {
            reply(res, service.create_game());
        });
        http.Get(R"(/games/([0-9a-zA-Z]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.get_state(req.matches[1]));
        });
        http.Post(R"(/games/([0-9a-zA-Z]+)/moves)", [this, reply](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.submit_move(req.matches[1], req.body));
        });
        if (!config.static_dir.empty() && !http.set_mount_point("/", config.static_dir))
            throw SimError("static dir does not exist: " + config.static_dir);
    }
};

HttpServer::HttpServer(ServerConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind() {
    const auto& c = impl_->config;
    int port = c.port;
    if (port == 0) {
        port = impl_->http.bind_to_any_port(c.host);
    } else if (!impl_->http.bind_to_port(c.host, port)) {
        port = -1;
    }
    if (port < 0) throw SimError("cannot bind " + c.host + ":" + std::to_string(c.port));
    return port;
}

void HttpServer::listen() {
    impl_->http.listen_after_bind();
}

void HttpServer::stop() {
    impl_->http.stop();
}

}  // namespace sim
