#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "sim/minimax.hpp"
#include "sim/strategy.hpp"
#include "sim/symmetry.hpp"
#include "sim/verifier.hpp"

using namespace sim;

namespace {

EdgeId E(int u, int v) { return edge_codec(u, v); }

VerifyOptions options(VerifyMode mode, TieBreak tb, bool memo, ReplyPolicy policy = ReplyPolicy::ThreeRules) {
    VerifyOptions o;
    o.mode = mode;
    o.tie_break = tb;
    o.memo = memo;
    o.policy = policy;
    return o;
}

}  // namespace

TEST_CASE("exhaustive verification with every surviving move") {
    const VerificationReport r = verify_strategy(VerifyMode::Exhaustive, TieBreak::All, true);
    CHECK(r.result == VerifyResult::Verified);
    CHECK_FALSE(r.refutation_line.has_value());
    CHECK(r.mode == VerifyMode::Exhaustive);
    CHECK(r.tie_break == TieBreak::All);
    CHECK(r.max_game_length <= 15);
    // A red triangle needs three red edges, i.e. at least five moves.
    CHECK(r.min_p1_loss_length >= 5);
    CHECK(r.p1_nodes_expanded > 0);
    CHECK(r.p2_nodes_expanded > 0);
    CHECK(r.distinct_canonical_positions > 0);
}

TEST_CASE("canonical board, first move") {
    const VerificationReport r = verify_strategy(VerifyMode::Canonical, TieBreak::First, true);
    CHECK(r.result == VerifyResult::Verified);
    CHECK(r.mode == VerifyMode::Canonical);
    CHECK(r.tie_break == TieBreak::First);
}

TEST_CASE("memo does not change the verdict") {
    for (auto [mode, tb] : {std::pair{VerifyMode::Canonical, TieBreak::First}, std::pair{VerifyMode::Canonical, TieBreak::All},
                            std::pair{VerifyMode::Exhaustive, TieBreak::First}}) {
        const VerificationReport with = verify_strategy(mode, tb, true);
        const VerificationReport without = verify_strategy(mode, tb, false);
        CHECK(with.result == without.result);
        CHECK(with.refutation_line.has_value() == without.refutation_line.has_value());
        CHECK(without.memo_hits == 0);
    }
    // Negative path too.
    const auto a = run_verification(options(VerifyMode::Canonical, TieBreak::First, true, ReplyPolicy::Rule1Only)).report;
    const auto b = run_verification(options(VerifyMode::Canonical, TieBreak::First, false, ReplyPolicy::Rule1Only)).report;
    CHECK(a.result == VerifyResult::Refuted);
    CHECK(b.result == VerifyResult::Refuted);
}

TEST_CASE("verification is deterministic") {
    VerifyOptions o;
    o.audit = true;
    o.cross_check = true;
    const VerificationRun a = run_verification(o);
    const VerificationRun b = run_verification(o);
    CHECK(a.report == b.report);
    CHECK(*a.audit == *b.audit);
    CHECK(*a.cross_check == *b.cross_check);
}

TEST_CASE("sabotaged policies are refuted with replayable lines") {
    for (ReplyPolicy policy : {ReplyPolicy::Rule1Only, ReplyPolicy::LowestAllowed}) {
        for (VerifyMode mode : {VerifyMode::Exhaustive, VerifyMode::Canonical}) {
            const VerificationReport r = run_verification(options(mode, TieBreak::First, true, policy)).report;
            REQUIRE(r.result == VerifyResult::Refuted);
            REQUIRE(r.refutation_line.has_value());
            CHECK(is_valid_refutation(*r.refutation_line));
            const ReplayOutcome end = replay(*r.refutation_line);
            CHECK(end.status == GameStatus::Ongoing);
            CHECK(end.position.to_move() == Player::P2);
            CHECK(allowed_moves(end.position, Player::P2).empty());
        }
    }
}

TEST_CASE("refutation validity check") {
    CHECK_FALSE(is_valid_refutation({}));
    CHECK_FALSE(is_valid_refutation({E(0, 1)}));
    CHECK_FALSE(is_valid_refutation({E(0, 1), E(0, 1)}));
    // P2 completes 3-4-5.
    CHECK(is_valid_refutation({E(0, 1), E(3, 4), E(0, 2), E(3, 5), E(2, 4), E(4, 5)}));
}

TEST_CASE("candidate replies") {
    const Position p{EdgeSet{E(0, 1)}, {}};
    CHECK(candidate_replies(p, VerifyMode::Exhaustive, ReplyPolicy::ThreeRules) == strategy_moves_all(p));
    CHECK(candidate_replies(p, VerifyMode::Canonical, ReplyPolicy::ThreeRules) == EdgeSet{E(0, 2), E(1, 2)});
    CHECK(candidate_replies(p, VerifyMode::Canonical, ReplyPolicy::Rule1Only) == EdgeSet{E(0, 2), E(1, 2)});
    CHECK(candidate_replies(p, VerifyMode::Exhaustive, ReplyPolicy::LowestAllowed) == EdgeSet{E(0, 2)});
}

TEST_CASE("minimax: the second player wins Sim") {
    CHECK(solve_minimax(Position{}) == GameValue::P2Wins);
    CHECK_THROWS_AS(solve_minimax(parse_position("RR...R.........")), InvalidArgument);
}

TEST_CASE("minimax on a constructed eight-edge position") {
    const Position p{EdgeSet{E(0, 1), E(0, 2)}, EdgeSet{E(0, 3), E(0, 4), E(0, 5), E(1, 3), E(1, 4), E(1, 5)}};
    REQUIRE_FALSE(contains_triangle(p.blue));
    REQUIRE(p.to_move() == Player::P1);
    // Frozen from the memo-free oracle.
    REQUIRE(oracle::slow_minimax(format_position(p)) == 'R');
    CHECK(solve_minimax(p) == GameValue::P1Wins);
}

TEST_CASE("minimax agrees with the memo-free oracle on small subtrees") {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 100) {
        const Position p = oracle::random_reachable(rng, 10, 14);
        if (p.move_count() < 10 || status(p) != GameStatus::Ongoing) continue;
        const char expected = oracle::slow_minimax(format_position(p));
        REQUIRE(solve_minimax(p) == (expected == 'R' ? GameValue::P1Wins : GameValue::P2Wins));
        ++checked;
    }
}

TEST_CASE("minimax is invariant under relabeling") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const Position p = oracle::random_reachable(rng, 0, 12);
        if (status(p) != GameStatus::Ongoing) continue;
        std::array<int, 6> img{0, 1, 2, 3, 4, 5};
        std::shuffle(img.begin(), img.end(), rng);
        MinimaxSolver fresh;
        REQUIRE(fresh.solve(apply_permutation(p, Permutation(img))) == solve_minimax(p));
    }
}

TEST_CASE("ramsey check") {
    CHECK(ramsey_check());
    CHECK(oracle::ramsey_all_monochromatic(6));
    // All-red coloring of K6.
    CHECK(contains_triangle(EdgeSet::all()));
    // Pentagon vs pentagram on K5.
    CHECK_FALSE(ramsey_check_on(VertexSet{0, 1, 2, 3, 4}));
    CHECK_FALSE(oracle::ramsey_all_monochromatic(5));
    const EdgeSet pentagon{E(0, 1), E(1, 2), E(2, 3), E(3, 4), E(0, 4)};
    CHECK_FALSE(contains_triangle(pentagon));
    CHECK_FALSE(contains_triangle(induced_edges(VertexSet{0, 1, 2, 3, 4}) - pentagon));
}

TEST_CASE("mini-board audit") {
    const AuditReport full = audit_mini_boards();
    CHECK(full.positions_audited > 0);
    CHECK(full.violations.empty());

    AuditReport one;
    const Position single{EdgeSet{E(0, 1)}, {}};
    audit_position(single, one);
    CHECK(one.positions_audited == 1);
    CHECK(one.violations.empty());
    const auto boards = minimal_mini_boards(single);
    REQUIRE(boards.size() == 4);
    for (const MiniBoard& a : boards)
        for (const MiniBoard& b : boards) CHECK(colored_isomorphic(single, a.vertices, b.vertices));

    AuditReport unique;
    audit_position(Position{EdgeSet{E(0, 1)}, EdgeSet{E(0, 2)}}, unique);
    CHECK(unique.violations.empty());
}

TEST_CASE("strategy replies agree with minimax") {
    const CrossCheckReport full = cross_check_strategy_vs_minimax();
    CHECK(full.nodes_checked > 0);
    CHECK(full.moves_checked >= full.nodes_checked);
    CHECK(full.mismatches.empty());

    const Position first{EdgeSet{E(0, 1)}, {}};
    for (EdgeId e : strategy_moves_all(first)) CHECK(solve_minimax(apply_move(first, e).position) == GameValue::P2Wins);

    const CrossCheckReport sabotaged = cross_check_strategy_vs_minimax(ReplyPolicy::Rule1Only);
    CHECK_FALSE(sabotaged.mismatches.empty());
}
