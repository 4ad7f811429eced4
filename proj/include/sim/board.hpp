#pragma once

// Bitboard representation of Sim on K6: edges, vertex sets, positions and
// the move mechanics shared by every other module.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sim {

inline constexpr int kVertexCount = 6;
inline constexpr int kEdgeCount = 15;
inline constexpr int kTriangleCount = 20;

// ---------------------------------------------------------------------------
// Errors

class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public SimError {
public:
    using SimError::SimError;
};

// Malformed position or move text. `index` is the offending character
// position (for a short input, its length), or npos if none applies.
class ParseError : public SimError {
public:
    ParseError(const std::string& what, std::size_t index)
        : SimError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class IllegalMove : public SimError {
public:
    using SimError::SimError;
};

class GameOver : public SimError {
public:
    using SimError::SimError;
};

// ---------------------------------------------------------------------------
// Players and status

enum class Player : std::uint8_t { P1, P2 };
enum class GameStatus : std::uint8_t { Ongoing, P1Lost, P2Lost };

constexpr Player opponent(Player p) noexcept {
    return p == Player::P1 ? Player::P2 : Player::P1;
}

const char* to_string(Player p) noexcept;
const char* to_string(GameStatus s) noexcept;  // "ongoing", "p1_lost", "p2_lost"

// ---------------------------------------------------------------------------
// EdgeId: index 0..14, lexicographic over pairs (u,v) with u < v.

namespace detail {

struct EdgeTables {
    std::array<std::array<std::uint8_t, 2>, kEdgeCount> endpoints{};
    std::array<std::array<std::int8_t, kVertexCount>, kVertexCount> index{};
};

constexpr EdgeTables make_edge_tables() {
    EdgeTables t{};
    for (auto& row : t.index) row.fill(-1);
    int e = 0;
    for (int u = 0; u < kVertexCount; ++u) {
        for (int v = u + 1; v < kVertexCount; ++v) {
            t.endpoints[e] = {static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)};
            t.index[u][v] = t.index[v][u] = static_cast<std::int8_t>(e);
            ++e;
        }
    }
    return t;
}

inline constexpr EdgeTables kEdgeTables = make_edge_tables();

}  // namespace detail

class EdgeId {
public:
    constexpr EdgeId() = default;

    // Unchecked; use from_index() for untrusted input.
    constexpr explicit EdgeId(int index) noexcept : index_(static_cast<std::uint8_t>(index)) {}

    static EdgeId from_index(int index);
    static EdgeId between(int u, int v);  // order-insensitive

    constexpr int index() const noexcept { return index_; }
    constexpr std::pair<int, int> endpoints() const noexcept {
        const auto& ep = detail::kEdgeTables.endpoints[index_];
        return {ep[0], ep[1]};
    }

    constexpr auto operator<=>(const EdgeId&) const = default;

private:
    std::uint8_t index_ = 0;
};

inline EdgeId edge_codec(int u, int v) { return EdgeId::between(u, v); }

// "uv" notation, u < v.
std::string format_edge(EdgeId e);
EdgeId parse_edge(std::string_view text);

// ---------------------------------------------------------------------------
// EdgeSet: 15-bit mask over EdgeId.

class EdgeSet {
public:
    static constexpr std::uint16_t kFullMask = (1u << kEdgeCount) - 1;

    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint16_t mask) noexcept : mask_(mask & kFullMask) {}
    constexpr EdgeSet(std::initializer_list<EdgeId> edges) noexcept {
        for (EdgeId e : edges) mask_ |= bit(e);
    }

    static constexpr EdgeSet all() noexcept { return EdgeSet(kFullMask); }
    static constexpr EdgeSet single(EdgeId e) noexcept { return EdgeSet(bit(e)); }

    constexpr std::uint16_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool contains(EdgeId e) const noexcept { return (mask_ & bit(e)) != 0; }
    constexpr bool is_subset_of(EdgeSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }

    constexpr EdgeSet with(EdgeId e) const noexcept { return EdgeSet(static_cast<std::uint16_t>(mask_ | bit(e))); }
    constexpr EdgeSet without(EdgeId e) const noexcept { return EdgeSet(static_cast<std::uint16_t>(mask_ & ~bit(e))); }
    constexpr EdgeSet complement() const noexcept { return EdgeSet(static_cast<std::uint16_t>(~mask_ & kFullMask)); }

    // Lowest EdgeId; the set must be nonempty.
    constexpr EdgeId first() const noexcept { return EdgeId(std::countr_zero(mask_)); }

    friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(static_cast<std::uint16_t>(a.mask_ | b.mask_)); }
    friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(static_cast<std::uint16_t>(a.mask_ & b.mask_)); }
    friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(static_cast<std::uint16_t>(a.mask_ & ~b.mask_)); }
    constexpr EdgeSet& operator|=(EdgeSet o) noexcept { mask_ |= o.mask_; return *this; }
    constexpr EdgeSet& operator&=(EdgeSet o) noexcept { mask_ &= o.mask_; return *this; }

    constexpr auto operator<=>(const EdgeSet&) const = default;

    // Ascending EdgeId order.
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = EdgeId;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = EdgeId;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint16_t rest) noexcept : rest_(rest) {}
        constexpr EdgeId operator*() const noexcept { return EdgeId(std::countr_zero(rest_)); }
        constexpr iterator& operator++() noexcept { rest_ &= static_cast<std::uint16_t>(rest_ - 1); return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint16_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(mask_); }
    constexpr iterator end() const noexcept { return iterator(0); }

private:
    static constexpr std::uint16_t bit(EdgeId e) noexcept { return static_cast<std::uint16_t>(1u << e.index()); }
    std::uint16_t mask_ = 0;
};

// Space-separated "uv" list, e.g. "02 12".
std::string format_edges(EdgeSet s);

// ---------------------------------------------------------------------------
// VertexSet: 6-bit mask over vertices 0..5.

class VertexSet {
public:
    static constexpr std::uint8_t kFullMask = (1u << kVertexCount) - 1;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint8_t mask) noexcept : mask_(mask & kFullMask) {}
    constexpr VertexSet(std::initializer_list<int> vertices) noexcept {
        for (int v : vertices) mask_ |= static_cast<std::uint8_t>(1u << v);
    }

    static constexpr VertexSet all() noexcept { return VertexSet(kFullMask); }

    constexpr std::uint8_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool contains(int v) const noexcept { return ((mask_ >> v) & 1u) != 0; }
    constexpr bool is_subset_of(VertexSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }
    constexpr bool is_proper_subset_of(VertexSet o) const noexcept { return is_subset_of(o) && mask_ != o.mask_; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(static_cast<std::uint8_t>(a.mask_ | b.mask_)); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(static_cast<std::uint8_t>(a.mask_ & ~b.mask_)); }

    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint8_t rest) noexcept : rest_(rest) {}
        constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= static_cast<std::uint8_t>(rest_ - 1); return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint8_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(mask_); }
    constexpr iterator end() const noexcept { return iterator(0); }

private:
    std::uint8_t mask_ = 0;
};

// "{0,1,2}"
std::string format_vertices(VertexSet v);

// Edges with both endpoints in `v`.
EdgeSet induced_edges(VertexSet v) noexcept;

// Vertices touched by at least one edge of `s`.
VertexSet endpoints_of(EdgeSet s) noexcept;

// ---------------------------------------------------------------------------
// Triangles

namespace detail {

constexpr std::array<std::uint16_t, kTriangleCount> make_triangle_masks() {
    std::array<std::uint16_t, kTriangleCount> out{};
    int t = 0;
    for (int a = 0; a < kVertexCount; ++a)
        for (int b = a + 1; b < kVertexCount; ++b)
            for (int c = b + 1; c < kVertexCount; ++c)
                out[t++] = static_cast<std::uint16_t>((1u << kEdgeTables.index[a][b]) |
                                                      (1u << kEdgeTables.index[a][c]) |
                                                      (1u << kEdgeTables.index[b][c]));
    return out;
}

}  // namespace detail

// The 20 vertex triples of K6 as edge masks.
inline constexpr std::array<std::uint16_t, kTriangleCount> kTriangleMasks = detail::make_triangle_masks();

constexpr bool contains_triangle(EdgeSet s) noexcept {
    const std::uint16_t m = s.mask();
    for (std::uint16_t t : kTriangleMasks)
        if ((m & t) == t) return true;
    return false;
}

// First triangle fully inside `s` (by triple order), or empty.
EdgeSet find_triangle(EdgeSet s) noexcept;

// ---------------------------------------------------------------------------
// Position

struct Position {
    EdgeSet red;
    EdgeSet blue;

    constexpr EdgeSet colored() const noexcept { return red | blue; }
    constexpr EdgeSet uncolored() const noexcept { return colored().complement(); }
    constexpr int move_count() const noexcept { return red.size() + blue.size(); }
    constexpr Player to_move() const noexcept { return move_count() % 2 == 0 ? Player::P1 : Player::P2; }
    constexpr EdgeSet colors(Player p) const noexcept { return p == Player::P1 ? red : blue; }

    constexpr bool operator==(const Position&) const = default;
};

GameStatus status(const Position& p) noexcept;

EdgeSet allowed_moves(const Position& p, Player player) noexcept;
bool is_allowed_set(const Position& p, EdgeSet x, Player player) noexcept;

struct MoveResult {
    Position position;
    GameStatus status;
};

// Colors `e` for the side to move. Throws IllegalMove if `e` is already
// colored and GameOver if `p` is terminal.
MoveResult apply_move(const Position& p, EdgeId e);

// 15 characters over {R, B, .}, character i describing EdgeId i.
Position parse_position(std::string_view text);
std::string format_position(const Position& p);

VertexSet support(const Position& p) noexcept;

}  // namespace sim
