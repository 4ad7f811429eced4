#include "sim/verifier.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sim/strategy.hpp"
#include "sim/symmetry.hpp"

namespace sim {

const char* to_string(VerifyMode m) noexcept {
    return m == VerifyMode::Exhaustive ? "exhaustive" : "canonical";
}

const char* to_string(TieBreak t) noexcept {
    return t == TieBreak::All ? "all" : "first";
}

const char* to_string(VerifyResult r) noexcept {
    return r == VerifyResult::Verified ? "verified" : "refuted";
}

const char* to_string(ReplyPolicy p) noexcept {
    switch (p) {
        case ReplyPolicy::ThreeRules: return "three_rules";
        case ReplyPolicy::Rule1Only: return "rule1_only";
        case ReplyPolicy::LowestAllowed: return "lowest_allowed";
    }
    return "?";
}

EdgeSet candidate_replies(const Position& p, VerifyMode mode, ReplyPolicy policy) {
    const EdgeSet allowed = allowed_moves(p, Player::P2);
    if (allowed.empty()) return {};
    if (policy == ReplyPolicy::LowestAllowed) return EdgeSet::single(allowed.first());

    auto on_board = [&](const MiniBoard& m) {
        if (policy == ReplyPolicy::Rule1Only) return allowed & m.uncolored(p);
        return strategy_decision(p, m).final_moves;
    };
    if (mode == VerifyMode::Canonical) return on_board(canonical_mini_board(p));
    EdgeSet out;
    for (const MiniBoard& m : minimal_mini_boards(p)) out |= on_board(m);
    return out;
}

void audit_position(const Position& p, AuditReport& out) {
    ++out.positions_audited;
    const std::vector<MiniBoard> boards = minimal_mini_boards(p);
    for (std::size_t i = 0; i < boards.size(); ++i) {
        for (std::size_t j = i + 1; j < boards.size(); ++j) {
            const VertexSet a = boards[i].vertices;
            const VertexSet b = boards[j].vertices;
            if (a.size() != b.size())
                out.violations.push_back({format_position(p), "size mismatch " + format_vertices(a) + " vs " + format_vertices(b)});
            else if (!colored_isomorphic(p, a, b))
                out.violations.push_back({format_position(p), "not isomorphic " + format_vertices(a) + " vs " + format_vertices(b)});
        }
    }
}

namespace {

constexpr std::uint32_t exact_key(const Position& p) noexcept {
    return (static_cast<std::uint32_t>(p.red.mask()) << 16) | p.blue.mask();
}

// Candidate replies are invariant under relabeling only when every board is
// considered and every surviving move is explored.
bool policy_is_equivariant(const VerifyOptions& o) noexcept {
    return o.mode == VerifyMode::Exhaustive && o.tie_break == TieBreak::All &&
           o.policy != ReplyPolicy::LowestAllowed;
}

class Traversal {
public:
    explicit Traversal(const VerifyOptions& options)
        : options_(options), canonical_memo_(policy_is_equivariant(options)) {
        report_.mode = options.mode;
        report_.tie_break = options.tie_break;
        if (options.audit) audit_.emplace();
        if (options.cross_check) cross_.emplace();
    }

    VerificationRun run() {
        const bool ok = p1_node(Position{});
        if (!ok) {
            report_.result = VerifyResult::Refuted;
            report_.refutation_line = line_;
        }
        report_.distinct_canonical_positions = seen_.size();
        return {report_, audit_, cross_};
    }

private:
    std::uint32_t memo_key(const Position& p, CanonicalKey canon) const noexcept {
        return canonical_memo_ ? canon.packed() : exact_key(p);
    }

    EdgeSet replies(const Position& p) {
        const std::uint32_t key = exact_key(p);
        if (auto it = reply_cache_.find(key); it != reply_cache_.end()) return it->second;
        const EdgeSet r = candidate_replies(p, options_.mode, options_.policy);
        reply_cache_.emplace(key, r);
        return r;
    }

    void p1_lost_leaf(int depth) {
        report_.max_game_length = std::max(report_.max_game_length, depth);
        if (report_.min_p1_loss_length == 0 || depth < report_.min_p1_loss_length)
            report_.min_p1_loss_length = depth;
    }

    // P1 to move; true iff P2 wins under the policy against every P1 line.
    bool p1_node(const Position& p) {
        const CanonicalKey canon = canonical_key(p);
        seen_.insert(canon.packed());
        const std::uint32_t key = memo_key(p, canon);
        if (options_.memo && verified_.contains(key)) {
            ++report_.memo_hits;
            return true;
        }
        ++report_.p1_nodes_expanded;

        const EdgeSet moves = p.uncolored();
        if (moves.empty()) throw InvariantViolation("P1 to move on a full board: " + format_position(p));
        for (EdgeId e : moves) {
            line_.push_back(e);
            const Position child{p.red.with(e), p.blue};
            if (contains_triangle(child.red)) {
                p1_lost_leaf(child.move_count());
            } else if (!p2_node(child)) {
                return false;
            }
            line_.pop_back();
        }
        if (options_.memo) verified_.insert(key);
        return true;
    }

    bool p2_node(const Position& p) {
        ++report_.p2_nodes_expanded;
        seen_.insert(canonical_key(p).packed());

        const EdgeSet candidates = replies(p);
        // Every remaining move completes a blue triangle.
        if (candidates.empty()) return false;
        if (audit_) audit_position(p, *audit_);
        if (cross_) cross_check(p, candidates);

        const EdgeSet explored = options_.tie_break == TieBreak::All ? candidates : EdgeSet::single(candidates.first());
        for (EdgeId e : explored) {
            line_.push_back(e);
            const Position child{p.red, p.blue.with(e)};
            if (contains_triangle(child.blue))
                throw InvariantViolation("policy reply " + format_edge(e) + " completes a blue triangle at " + format_position(p));
            if (!p1_node(child)) return false;
            line_.pop_back();
        }
        return true;
    }

    void cross_check(const Position& p, EdgeSet candidates) {
        ++cross_->nodes_checked;
        for (EdgeId e : candidates) {
            ++cross_->moves_checked;
            const Position child{p.red, p.blue.with(e)};
            if (solver_.solve(child) != GameValue::P2Wins)
                cross_->mismatches.push_back({format_position(p), e});
        }
    }

    VerifyOptions options_;
    bool canonical_memo_;
    VerificationReport report_;
    std::optional<AuditReport> audit_;
    std::optional<CrossCheckReport> cross_;
    std::vector<EdgeId> line_;
    std::unordered_set<std::uint32_t> verified_;
    std::unordered_set<std::uint32_t> seen_;
    std::unordered_map<std::uint32_t, EdgeSet> reply_cache_;
    MinimaxSolver solver_;
};

}  // namespace

VerificationRun run_verification(const VerifyOptions& options) {
    return Traversal(options).run();
}

VerificationReport verify_strategy(VerifyMode mode, TieBreak tie_break, bool memo) {
    VerifyOptions o;
    o.mode = mode;
    o.tie_break = tie_break;
    o.memo = memo;
    return run_verification(o).report;
}

AuditReport audit_mini_boards() {
    VerifyOptions o;
    o.audit = true;
    return *run_verification(o).audit;
}

CrossCheckReport cross_check_strategy_vs_minimax(ReplyPolicy policy) {
    VerifyOptions o;
    o.cross_check = true;
    o.policy = policy;
    return *run_verification(o).cross_check;
}

bool ramsey_check_on(VertexSet vertices) {
    const EdgeSet edges = induced_edges(vertices);
    const std::uint16_t universe = edges.mask();
    // Enumerate every red subset of `edges`; the rest is blue.
    std::uint16_t red = 0;
    do {
        const EdgeSet r(red);
        if (!contains_triangle(r) && !contains_triangle(edges - r)) return false;
        red = static_cast<std::uint16_t>((red - universe) & universe);
    } while (red != 0);
    return true;
}

ReplayOutcome replay(const std::vector<EdgeId>& line) {
    ReplayOutcome out;
    for (EdgeId e : line) {
        const MoveResult r = apply_move(out.position, e);
        out.position = r.position;
        out.status = r.status;
    }
    return out;
}

bool is_valid_refutation(const std::vector<EdgeId>& line) {
    ReplayOutcome r;
    try {
        r = replay(line);
    } catch (const SimError&) {
        return false;
    }
    if (r.status == GameStatus::P2Lost) return true;
    return r.status == GameStatus::Ongoing && r.position.to_move() == Player::P2 &&
           allowed_moves(r.position, Player::P2).empty();
}

}  // namespace sim
