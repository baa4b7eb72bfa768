#include "scsa/tournament.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <thread>

#include "scsa/engine.hpp"

namespace scsa {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SCSA_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Matches are independent; results land at their spec index regardless of
// completion order.
std::vector<MatchResult> run_specs(const std::vector<MatchSpec>& specs, int threads) {
    std::vector<MatchResult> results(specs.size());
    if (specs.empty()) return results;
    threads = std::min<int>(threads, static_cast<int>(specs.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) results[i] = run_match(specs[i], false);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            results[i] = run_match(specs[i], false);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

double PairingResult::win_rate_a() const { return games() ? static_cast<double>(wins_a) / games() : 0.0; }
double PairingResult::win_rate_b() const { return games() ? static_cast<double>(wins_b) / games() : 0.0; }

double PairingResult::stderr_a() const {
    if (!games()) return 0.0;
    const double p = win_rate_a();
    return std::sqrt(p * (1.0 - p) / games());
}

double PairingResult::stderr_b() const {
    if (!games()) return 0.0;
    const double p = win_rate_b();
    return std::sqrt(p * (1.0 - p) / games());
}

PairingResult run_pairing(GameTag game, const AgentSpec& a, const AgentSpec& b,
                          const std::string& name_a, const std::string& name_b,
                          const TournamentOptions& opts) {
    std::vector<MatchSpec> specs;
    specs.reserve(static_cast<std::size_t>(opts.positions) * 2 * opts.seeds_per_eval);
    std::vector<bool> swapped;
    for (int pos = 0; pos < opts.positions; ++pos) {
        for (int side = 0; side < 2; ++side) {
            for (int seed = 0; seed < opts.seeds_per_eval; ++seed) {
                MatchSpec spec;
                spec.game = game;
                spec.agent_a = side == 0 ? a : b;
                spec.agent_b = side == 0 ? b : a;
                spec.position_seed = pos;
                spec.match_seed = mix_seed(opts.base_seed,
                                           (static_cast<std::uint64_t>(pos) << 20) |
                                               (static_cast<std::uint64_t>(side) << 16) |
                                               static_cast<std::uint64_t>(seed));
                spec.config_dir = opts.config_dir;
                specs.push_back(std::move(spec));
                swapped.push_back(side == 1);
            }
        }
    }

    const auto results = run_specs(specs, resolve_threads(opts.threads));
    PairingResult pr;
    pr.agent_a = name_a;
    pr.agent_b = name_b;
    for (std::size_t i = 0; i < results.size(); ++i) {
        switch (results[i].winner) {
            case MatchResult::Winner::A: swapped[i] ? ++pr.wins_b : ++pr.wins_a; break;
            case MatchResult::Winner::B: swapped[i] ? ++pr.wins_a : ++pr.wins_b; break;
            case MatchResult::Winner::Draw: ++pr.draws; break;
            case MatchResult::Winner::Error: ++pr.errors; break;
        }
    }
    if (opts.verbose) {
        std::cerr << game_name(game) << " " << name_a << " vs " << name_b << ": "
                  << fmt(100.0 * pr.win_rate_a(), 1) << "% / " << fmt(100.0 * pr.win_rate_b(), 1)
                  << "% (draws " << pr.draws << ", errors " << pr.errors << ", games "
                  << pr.games() << ")\n";
    }
    return pr;
}

CsvTable TournamentTable::to_csv() const {
    CsvTable t;
    t.header = {"game",  "agent_a", "agent_b",    "wins_a",   "wins_b",     "draws",
                "errors", "games",   "win_rate_a", "stderr_a", "win_rate_b", "stderr_b"};
    for (const auto& p : pairings) {
        t.rows.push_back({game_name(game), p.agent_a, p.agent_b, std::to_string(p.wins_a),
                          std::to_string(p.wins_b), std::to_string(p.draws),
                          std::to_string(p.errors), std::to_string(p.games()),
                          fmt(p.win_rate_a()), fmt(p.stderr_a()), fmt(p.win_rate_b()),
                          fmt(p.stderr_b())});
    }
    return t;
}

TournamentTable run_tournament(GameTag game, const std::vector<AgentSpec>& agents,
                               const std::vector<std::string>& agent_names,
                               const TournamentOptions& opts) {
    if (agents.size() < 2) throw std::invalid_argument("tournament needs at least two agents");
    TournamentTable table;
    table.game = game;
    for (std::size_t i = 0; i < agents.size(); ++i)
        for (std::size_t j = i + 1; j < agents.size(); ++j)
            table.pairings.push_back(
                run_pairing(game, agents[i], agents[j], agent_names[i], agent_names[j], opts));
    return table;
}

std::vector<SweepRow> sweep_size_limit(GameTag game, const std::vector<int>& values,
                                       int n_games, const TournamentOptions& opts) {
    std::vector<SweepRow> rows;
    for (int v : values) {
        AgentSpec scsa = AgentSpec::make(game, AgentKind::Scsa);
        scsa.params.size_limit = v;
        const AgentSpec rule = AgentSpec::make(game, AgentKind::Rule);
        TournamentOptions local = opts;
        local.positions = std::max(1, n_games / (2 * opts.seeds_per_eval));
        const PairingResult pr = run_pairing(game, scsa, rule, "scsa", "rule", local);
        SweepRow row;
        row.size_limit = v;
        row.wins = pr.wins_a;
        row.games = pr.games();
        row.win_rate = pr.win_rate_a();
        row.stderr_ = pr.stderr_a();
        rows.push_back(row);
    }
    return rows;
}

CsvTable sweep_to_csv(const std::vector<SweepRow>& rows) {
    CsvTable t;
    t.header = {"size_limit", "wins", "games", "win_rate", "stderr"};
    for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.size_limit), std::to_string(r.wins),
                          std::to_string(r.games), fmt(r.win_rate), fmt(r.stderr_)});
    return t;
}

CsvTable CompressionTrace::to_csv() const {
    CsvTable t;
    t.header = {"iteration", "ground_nodes", "abstract_nodes", "compression_rate", "mode", "seed"};
    for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.iteration), std::to_string(r.ground_nodes),
                          std::to_string(r.abstract_nodes), fmt(r.rate), r.mode,
                          std::to_string(r.seed)});
    return t;
}

CsvTable CompressionTrace::summary_csv() const {
    std::map<std::pair<std::string, std::uint64_t>, std::vector<double>> buckets;
    for (const auto& r : rows) buckets[{r.mode, r.iteration}].push_back(r.rate);
    CsvTable t;
    t.header = {"mode", "iteration", "mean_rate", "stderr", "runs"};
    for (const auto& [key, rates] : buckets) {
        double mean = 0.0;
        for (double r : rates) mean += r;
        mean /= rates.size();
        double var = 0.0;
        for (double r : rates) var += (r - mean) * (r - mean);
        const double se = rates.size() > 1
                              ? std::sqrt(var / (rates.size() - 1) / rates.size())
                              : 0.0;
        t.rows.push_back({key.first, std::to_string(key.second), fmt(mean), fmt(se),
                          std::to_string(rates.size())});
    }
    return t;
}

CompressionTrace trace_compression(GameTag game, const std::vector<SearchMode>& modes,
                                   int n_runs, const TournamentOptions& opts) {
    CompressionTrace trace;
    auto cfg = load_game(game, opts.config_dir);
    for (const SearchMode mode : modes) {
        AgentKind kind;
        switch (mode) {
            case SearchMode::Elastic: kind = AgentKind::Elastic; break;
            case SearchMode::Scsa: kind = AgentKind::Scsa; break;
            case SearchMode::Rg: kind = AgentKind::Rg; break;
            default:
                throw std::invalid_argument("compression traces need an abstraction-using mode");
        }
        for (int run = 0; run < n_runs; ++run) {
            const GameState start = generate_position(cfg, static_cast<std::uint64_t>(run));
            SearchParams params = default_params(game, kind);
            params.seed = mix_seed(opts.base_seed, (static_cast<std::uint64_t>(run) << 8) |
                                                       static_cast<std::uint64_t>(mode));
            Rng ord_rng(mix_seed(opts.base_seed, 0xccULL + run));
            const UnitOrdering ordering = make_unit_ordering(start, start.to_move, ord_rng);
            SearchStats stats;
            run_search(start, params, &ordering, &stats);
            for (const auto& row : stats.trace)
                trace.rows.push_back({mode_name(mode), static_cast<std::uint64_t>(run),
                                      row.iteration, row.ground_nodes, row.abstract_nodes,
                                      row.rate});
            if (mode == SearchMode::Elastic) trace.split_iterations.push_back(stats.split_iteration);
        }
    }
    return trace;
}

}  // namespace scsa
