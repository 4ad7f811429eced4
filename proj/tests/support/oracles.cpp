#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

std::vector<Edge> all_pairs() {
    std::vector<Edge> out;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) out.emplace_back(u, v);
    return out;
}

const std::vector<Edge>& pairs() {
    static const std::vector<Edge> p = all_pairs();
    return p;
}

bool in_board(Edge e, unsigned board) {
    return ((board >> e.first) & 1u) && ((board >> e.second) & 1u);
}

bool allowed_for(const Coloring& c, char who, const std::set<Edge>& extra) {
    std::set<Edge> s = c.edges_of(who);
    s.insert(extra.begin(), extra.end());
    return !has_triangle(s);
}

bool condition_one(const Coloring& c, unsigned board) {
    bool has_allowed = false;
    for (const auto& [e, col] : c.color) {
        if (col != '.' && !in_board(e, board)) return false;
        if (col == '.' && in_board(e, board) && allowed_for(c, 'B', {e})) has_allowed = true;
    }
    return has_allowed;
}

std::vector<std::set<Edge>> maximum_allowed_sets(const Coloring& c, unsigned board, char who) {
    std::vector<Edge> free;
    for (const auto& [e, col] : c.color)
        if (col == '.' && in_board(e, board)) free.push_back(e);
    std::vector<std::set<Edge>> best;
    std::size_t best_size = 0;
    for (unsigned m = 0; m < (1u << free.size()); ++m) {
        std::set<Edge> x;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((m >> i) & 1u) x.insert(free[i]);
        if (!allowed_for(c, who, x)) continue;
        if (best.empty() || x.size() > best_size) {
            best.clear();
            best_size = x.size();
        }
        if (x.size() == best_size) best.push_back(x);
    }
    return best;
}

std::set<Edge> keep_max(const std::set<Edge>& from, const std::map<Edge, int>& counts) {
    int top = -1;
    for (Edge e : from) top = std::max(top, counts.at(e));
    std::set<Edge> out;
    for (Edge e : from)
        if (counts.at(e) == top) out.insert(e);
    return out;
}

}  // namespace

Coloring Coloring::from_text(const std::string& text) {
    Coloring c;
    for (std::size_t i = 0; i < pairs().size(); ++i) c.color[pairs()[i]] = text.at(i);
    return c;
}

std::set<Edge> Coloring::edges_of(char col) const {
    std::set<Edge> out;
    for (const auto& [e, x] : color)
        if (x == col) out.insert(e);
    return out;
}

char Coloring::to_move() const {
    return (edges_of('R').size() + edges_of('B').size()) % 2 == 0 ? 'R' : 'B';
}

std::string edge_name(Edge e) {
    return std::to_string(e.first) + std::to_string(e.second);
}

bool has_triangle(const std::set<Edge>& edges) {
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                if (edges.count({a, b}) && edges.count({a, c}) && edges.count({b, c})) return true;
    return false;
}

std::vector<unsigned> mini_boards(const Coloring& c) {
    std::vector<unsigned> out;
    for (unsigned board = 0; board < 64; ++board) {
        if (!condition_one(c, board)) continue;
        bool minimal = true;
        // Every proper subset, checked directly.
        for (unsigned sub = (board - 1) & board;; sub = (sub - 1) & board) {
            if (sub != board && condition_one(c, sub)) {
                minimal = false;
                break;
            }
            if (sub == 0) break;
        }
        if (minimal) out.push_back(board);
    }
    return out;
}

RuleTrace three_rules(const Coloring& c, unsigned board) {
    RuleTrace t;
    for (const auto& [e, col] : c.color)
        if (col == '.' && in_board(e, board) && allowed_for(c, 'B', {e})) t.rule1.insert(e);

    const auto p2_sets = maximum_allowed_sets(c, board, 'B');
    const auto p1_sets = maximum_allowed_sets(c, board, 'R');
    for (Edge e : t.rule1) {
        t.rule2_counts[e] = static_cast<int>(std::count_if(p2_sets.begin(), p2_sets.end(), [&](const auto& s) { return s.count(e) > 0; }));
        t.rule3_counts[e] = static_cast<int>(std::count_if(p1_sets.begin(), p1_sets.end(), [&](const auto& s) { return s.count(e) > 0; }));
    }
    t.rule2 = keep_max(t.rule1, t.rule2_counts);
    t.final_moves = keep_max(t.rule2, t.rule3_counts);
    return t;
}

std::set<std::string> strategy_moves_all(const std::string& text) {
    const Coloring c = Coloring::from_text(text);
    std::set<std::string> out;
    for (unsigned b : mini_boards(c))
        for (Edge e : three_rules(c, b).final_moves) out.insert(edge_name(e));
    return out;
}

std::set<std::string> strategy_moves_canonical(const std::string& text) {
    const Coloring c = Coloring::from_text(text);
    const auto boards = mini_boards(c);
    std::set<std::string> out;
    for (Edge e : three_rules(c, *std::min_element(boards.begin(), boards.end())).final_moves) out.insert(edge_name(e));
    return out;
}

char slow_minimax(const std::string& text) {
    std::function<bool(Coloring&)> mover_wins = [&](Coloring& c) {
        const char me = c.to_move();
        for (auto& [e, col] : c.color) {
            if (col != '.') continue;
            if (!allowed_for(c, me, {e})) continue;
            col = me;
            const bool opp = mover_wins(c);
            col = '.';
            if (!opp) return true;
        }
        return false;
    };
    Coloring c = Coloring::from_text(text);
    const char me = c.to_move();
    const bool wins = mover_wins(c);
    return wins ? me : (me == 'R' ? 'B' : 'R');
}

bool ramsey_all_monochromatic(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    for (unsigned m = 0; m < (1u << es.size()); ++m) {
        std::set<Edge> red, blue;
        for (std::size_t i = 0; i < es.size(); ++i) ((m >> i) & 1u ? red : blue).insert(es[i]);
        if (!has_triangle(red) && !has_triangle(blue)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

sim::Position random_reachable(std::mt19937_64& rng, int min_moves, int max_moves) {
    std::uniform_int_distribution<int> len(min_moves, max_moves);
    const int target = len(rng);
    sim::Position p;
    while (p.move_count() < target) {
        const sim::EdgeSet options = sim::allowed_moves(p, p.to_move());
        if (options.empty()) break;
        std::uniform_int_distribution<int> pick(0, options.size() - 1);
        auto it = options.begin();
        std::advance(it, pick(rng));
        p = sim::apply_move(p, *it).position;
    }
    return p;
}

sim::Position random_p2_turn(std::mt19937_64& rng) {
    while (true) {
        const sim::Position p = random_reachable(rng, 1, 13);
        if (p.to_move() == sim::Player::P2 && sim::status(p) == sim::GameStatus::Ongoing &&
            !sim::allowed_moves(p, sim::Player::P2).empty())
            return p;
    }
}

sim::Position random_colored(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> color(0, 2);
    sim::Position p;
    for (int e = 0; e < sim::kEdgeCount; ++e) {
        const int c = color(rng);
        if (c == 1) p.red = p.red.with(sim::EdgeId(e));
        if (c == 2) p.blue = p.blue.with(sim::EdgeId(e));
    }
    return p;
}

sim::EdgeSet random_edge_set(std::mt19937_64& rng) {
    return sim::EdgeSet(static_cast<std::uint16_t>(rng() & sim::EdgeSet::kFullMask));
}

}  // namespace oracle
