#include "sim/board.hpp"

namespace sim {

const char* to_string(Player p) noexcept {
    return p == Player::P1 ? "P1" : "P2";
}

const char* to_string(GameStatus s) noexcept {
    switch (s) {
        case GameStatus::Ongoing: return "ongoing";
        case GameStatus::P1Lost: return "p1_lost";
        case GameStatus::P2Lost: return "p2_lost";
    }
    return "?";
}

EdgeId EdgeId::from_index(int index) {
    if (index < 0 || index >= kEdgeCount)
        throw InvalidArgument("edge index out of range: " + std::to_string(index));
    return EdgeId(index);
}

EdgeId EdgeId::between(int u, int v) {
    if (u < 0 || u >= kVertexCount || v < 0 || v >= kVertexCount)
        throw InvalidArgument("vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw InvalidArgument("loop edge: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return EdgeId(detail::kEdgeTables.index[u][v]);
}

std::string format_edge(EdgeId e) {
    auto [u, v] = e.endpoints();
    return {static_cast<char>('0' + u), static_cast<char>('0' + v)};
}

EdgeId parse_edge(std::string_view text) {
    if (text.size() != 2)
        throw ParseError("move must be two digits \"uv\"", std::string::npos);
    int ends[2];
    for (std::size_t i = 0; i < 2; ++i) {
        char c = text[i];
        if (c < '0' || c >= '0' + kVertexCount)
            throw ParseError(std::string("invalid vertex '") + c + "' at index " + std::to_string(i), i);
        ends[i] = c - '0';
    }
    if (ends[0] == ends[1])
        throw ParseError("not an edge: " + std::string(text), 1);
    return EdgeId::between(ends[0], ends[1]);
}

std::string format_edges(EdgeSet s) {
    std::string out;
    for (EdgeId e : s) {
        if (!out.empty()) out += ' ';
        out += format_edge(e);
    }
    return out;
}

std::string format_vertices(VertexSet v) {
    std::string out = "{";
    for (int x : v) {
        if (out.size() > 1) out += ',';
        out += static_cast<char>('0' + x);
    }
    out += '}';
    return out;
}

EdgeSet induced_edges(VertexSet v) noexcept {
    EdgeSet out;
    for (int e = 0; e < kEdgeCount; ++e) {
        auto [a, b] = EdgeId(e).endpoints();
        if (v.contains(a) && v.contains(b)) out = out.with(EdgeId(e));
    }
    return out;
}

VertexSet endpoints_of(EdgeSet s) noexcept {
    std::uint8_t m = 0;
    for (EdgeId e : s) {
        auto [a, b] = e.endpoints();
        m |= static_cast<std::uint8_t>((1u << a) | (1u << b));
    }
    return VertexSet(m);
}

EdgeSet find_triangle(EdgeSet s) noexcept {
    for (std::uint16_t t : kTriangleMasks)
        if ((s.mask() & t) == t) return EdgeSet(t);
    return {};
}

// Reachable positions never have both; for arbitrary parsed input red wins the tie.
GameStatus status(const Position& p) noexcept {
    if (contains_triangle(p.red)) return GameStatus::P1Lost;
    if (contains_triangle(p.blue)) return GameStatus::P2Lost;
    return GameStatus::Ongoing;
}

EdgeSet allowed_moves(const Position& p, Player player) noexcept {
    const EdgeSet own = p.colors(player);
    EdgeSet out;
    for (EdgeId e : p.uncolored())
        if (!contains_triangle(own.with(e))) out = out.with(e);
    return out;
}

bool is_allowed_set(const Position& p, EdgeSet x, Player player) noexcept {
    return x.is_subset_of(p.uncolored()) && !contains_triangle(x | p.colors(player));
}

MoveResult apply_move(const Position& p, EdgeId e) {
    if (status(p) != GameStatus::Ongoing)
        throw GameOver("game is already over");
    if (!p.uncolored().contains(e))
        throw IllegalMove("edge " + format_edge(e) + " is already colored");
    const Player mover = p.to_move();
    Position next = p;
    if (mover == Player::P1)
        next.red = next.red.with(e);
    else
        next.blue = next.blue.with(e);
    // Only the mover's color changed.
    GameStatus st = GameStatus::Ongoing;
    if (contains_triangle(next.colors(mover)))
        st = mover == Player::P1 ? GameStatus::P1Lost : GameStatus::P2Lost;
    return {next, st};
}

Position parse_position(std::string_view text) {
    Position p;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i >= static_cast<std::size_t>(kEdgeCount))
            throw ParseError("position longer than 15 characters", i);
        const EdgeId e(static_cast<int>(i));
        switch (text[i]) {
            case 'R': p.red = p.red.with(e); break;
            case 'B': p.blue = p.blue.with(e); break;
            case '.': break;
            default:
                throw ParseError(std::string("invalid character '") + text[i] + "' at index " + std::to_string(i) +
                                     " (expected R, B or .)",
                                 i);
        }
    }
    if (text.size() < static_cast<std::size_t>(kEdgeCount))
        throw ParseError("position must be exactly 15 characters, got " + std::to_string(text.size()), text.size());
    return p;
}

std::string format_position(const Position& p) {
    std::string out(kEdgeCount, '.');
    for (EdgeId e : p.red) out[e.index()] = 'R';
    for (EdgeId e : p.blue) out[e.index()] = 'B';
    return out;
}

VertexSet support(const Position& p) noexcept {
    return endpoints_of(p.colored());
}

}  // namespace sim
