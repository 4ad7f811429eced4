#include "sim/strategy.hpp"

#include <algorithm>

namespace sim {

namespace {

bool satisfies_board_condition(VertexSet v, EdgeSet colored, EdgeSet p2_allowed) {
    const EdgeSet edges = induced_edges(v);
    return colored.is_subset_of(edges) && !(edges & p2_allowed).empty();
}

// Iterates every submask of `universe`, including 0.
template <class F>
void for_each_subset(EdgeSet universe, F&& f) {
    const std::uint16_t u = universe.mask();
    std::uint16_t s = 0;
    do {
        f(EdgeSet(s));
        s = static_cast<std::uint16_t>((s - u) & u);
    } while (s != 0);
}

struct MaxSetSummary {
    int size = 0;
    int count = 0;
    EdgeCounts membership{};
};

MaxSetSummary summarize(const std::vector<EdgeSet>& sets) {
    MaxSetSummary out;
    out.size = sets.front().size();
    out.count = static_cast<int>(sets.size());
    for (EdgeSet s : sets)
        for (EdgeId e : s) ++out.membership[e.index()];
    return out;
}

EdgeSet argmax(EdgeSet candidates, const EdgeCounts& counts) {
    int best = -1;
    EdgeSet out;
    for (EdgeId e : candidates) {
        const int c = counts[e.index()];
        if (c > best) {
            best = c;
            out = EdgeSet::single(e);
        } else if (c == best) {
            out = out.with(e);
        }
    }
    return out;
}

}  // namespace

std::vector<MiniBoard> minimal_mini_boards(const Position& p) {
    const EdgeSet p2_allowed = allowed_moves(p, Player::P2);
    if (p2_allowed.empty())
        throw NoMiniBoard("no P2-allowed move in position " + format_position(p));

    const EdgeSet colored = p.colored();
    std::vector<VertexSet> candidates;
    for (unsigned m = 0; m < 64; ++m) {
        const VertexSet v(static_cast<std::uint8_t>(m));
        if (satisfies_board_condition(v, colored, p2_allowed)) candidates.push_back(v);
    }

    std::vector<MiniBoard> out;
    for (VertexSet v : candidates) {
        const bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                          [&](VertexSet w) { return w.is_proper_subset_of(v); });
        if (minimal) out.push_back(MiniBoard{v});
    }

    // Structure check: support, or support plus exactly one vertex, all of one
    // size. With no colored edge the boards are the single edges instead.
    const VertexSet sup = support(p);
    const int max_extra = sup.empty() ? 2 : 1;
    for (const MiniBoard& b : out) {
        const bool shaped = sup.is_subset_of(b.vertices) && (b.vertices - sup).size() <= max_extra &&
                            b.vertices.size() == out.front().vertices.size();
        if (!shaped)
            throw InvariantViolation("mini-board " + format_vertices(b.vertices) + " of " + format_position(p) +
                                     " is not support(p) plus at most one vertex");
    }
    return out;
}

MiniBoard canonical_mini_board(const Position& p) {
    return minimal_mini_boards(p).front();
}

std::vector<EdgeSet> max_allowed_sets_on(const Position& p, const MiniBoard& m, Player player) {
    const EdgeSet own = p.colors(player);
    std::vector<EdgeSet> best;
    int best_size = -1;
    for_each_subset(m.uncolored(p), [&](EdgeSet x) {
        const int n = x.size();
        if (n < best_size || contains_triangle(x | own)) return;
        if (n > best_size) {
            best_size = n;
            best.clear();
        }
        best.push_back(x);
    });
    std::sort(best.begin(), best.end());
    return best;
}

StrategyDecision strategy_decision(const Position& p, const MiniBoard& m) {
    StrategyDecision d;
    d.mini_board = m;
    d.rule1_moves = allowed_moves(p, Player::P2) & m.uncolored(p);
    if (d.rule1_moves.empty())
        throw InvariantViolation("no P2-allowed move on mini-board " + format_vertices(m.vertices) + " of " +
                                 format_position(p));

    const MaxSetSummary p2 = summarize(max_allowed_sets_on(p, m, Player::P2));
    const MaxSetSummary p1 = summarize(max_allowed_sets_on(p, m, Player::P1));
    d.p2_max_set_size = p2.size;
    d.p2_max_set_count = p2.count;
    d.p1_max_set_size = p1.size;
    d.p1_max_set_count = p1.count;

    for (EdgeId e : d.rule1_moves) {
        d.rule2_counts[e.index()] = p2.membership[e.index()];
        d.rule3_counts[e.index()] = p1.membership[e.index()];
    }
    d.rule2_moves = argmax(d.rule1_moves, d.rule2_counts);
    d.final_moves = argmax(d.rule2_moves, d.rule3_counts);
    return d;
}

EdgeSet strategy_moves_all(const Position& p) {
    EdgeSet out;
    for (const MiniBoard& m : minimal_mini_boards(p)) out |= strategy_decision(p, m).final_moves;
    return out;
}

EngineReply engine_reply(const Position& p) {
    StrategyDecision d = strategy_decision(p, canonical_mini_board(p));
    return {d.final_moves.first(), d};
}

}  // namespace sim
