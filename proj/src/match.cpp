#include "scsa/match.hpp"

#include <chrono>

#include "scsa/engine.hpp"

namespace scsa {

const char* MatchResult::winner_name(Winner w) {
    switch (w) {
        case Winner::A: return "A";
        case Winner::B: return "B";
        case Winner::Draw: return "draw";
        case Winner::Error: return "error";
    }
    return "?";
}

MatchResult run_match(const MatchSpec& spec, bool keep_move_records) {
    MatchResult result;
    auto cfg = load_game(spec.game, spec.config_dir);
    GameState state = spec.position_seed < 0
                          ? make_initial_state(cfg)
                          : generate_position(cfg, static_cast<std::uint64_t>(spec.position_seed));

    Agent a(spec.agent_a, 0, spec.match_seed);
    Agent b(spec.agent_b, 1, mix_seed(spec.match_seed, 0xb));
    a.start_game(state);
    b.start_game(state);

    Outcome out = terminal_outcome(state);
    while (out.ongoing()) {
        Agent& mover = state.to_move == 0 ? a : b;
        SearchStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        UnitAction action;
        try {
            action = mover.act(state, &stats);
            state = apply_action(state, action);
        } catch (const std::exception& e) {
            result.winner = MatchResult::Winner::Error;
            result.error = e.what();
            return result;
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(t1 - t0).count();

        result.total_fm_calls += stats.fm_calls;
        result.max_move_fm_calls = std::max(result.max_move_fm_calls, stats.fm_calls);
        if (keep_move_records) {
            MoveRecord rec;
            rec.player = mover.player();
            rec.fm_calls = stats.fm_calls;
            rec.iterations = stats.iterations;
            rec.tree_nodes = stats.tree_nodes;
            rec.abstract_nodes = stats.abstract_nodes;
            rec.wall_time_ms = stats.wall_time_ms;
            result.moves.push_back(rec);
        }
        if (secs > spec.move_time_cap_s) {
            result.winner = MatchResult::Winner::Error;
            result.error = "move time cap exceeded";
            return result;
        }
        out = terminal_outcome(state);
    }

    result.rounds = state.round;
    if (out.kind == Outcome::Kind::Draw) {
        result.winner = MatchResult::Winner::Draw;
    } else {
        result.winner = out.winner == 0 ? MatchResult::Winner::A : MatchResult::Winner::B;
    }
    return result;
}

}  // namespace scsa
