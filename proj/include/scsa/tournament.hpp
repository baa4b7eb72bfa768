#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scsa/csv.hpp"
#include "scsa/match.hpp"

namespace scsa {

struct PairingResult {
    std::string agent_a;
    std::string agent_b;
    int wins_a = 0;
    int wins_b = 0;
    int draws = 0;
    int errors = 0;
    int games() const { return wins_a + wins_b + draws; }
    double win_rate_a() const;
    double win_rate_b() const;
    double stderr_a() const;  // sqrt(p(1-p)/games)
    double stderr_b() const;
};

struct TournamentTable {
    GameTag game = GameTag::KTK;
    std::vector<PairingResult> pairings;
    CsvTable to_csv() const;
};

struct TournamentOptions {
    int positions = 50;
    int seeds_per_eval = 5;
    int threads = 0;  // 0: SCSA_THREADS env or hardware_concurrency
    std::uint64_t base_seed = 1;
    std::string config_dir;
    bool verbose = false;
};

// Every unordered agent pair, positions x 2 sides x seeds games each.
TournamentTable run_tournament(GameTag game, const std::vector<AgentSpec>& agents,
                               const std::vector<std::string>& agent_names,
                               const TournamentOptions& opts);

// One pairing only (the building block the sweep and acceptance tests use).
PairingResult run_pairing(GameTag game, const AgentSpec& a, const AgentSpec& b,
                          const std::string& name_a, const std::string& name_b,
                          const TournamentOptions& opts);

struct SweepRow {
    int size_limit = 0;
    int wins = 0;
    int games = 0;
    double win_rate = 0.0;
    double stderr_ = 0.0;
};

// SCSA vs Rule-based at each size limit; n_games per value.
std::vector<SweepRow> sweep_size_limit(GameTag game, const std::vector<int>& values,
                                       int n_games, const TournamentOptions& opts);
CsvTable sweep_to_csv(const std::vector<SweepRow>& rows);

struct CompressionTraceRow {
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t iteration = 0;
    int ground_nodes = 0;
    int abstract_nodes = 0;
    double rate = 1.0;
};

struct CompressionTrace {
    std::vector<CompressionTraceRow> rows;           // raw per-run samples
    std::vector<std::int64_t> split_iterations;      // one entry per elastic run
    CsvTable to_csv() const;                         // raw rows
    CsvTable summary_csv() const;                    // per-iteration mean +/- stderr per mode
};

// Searches (not matches) from seeded start positions, sampling the
// compression rate at every abstraction pass.
CompressionTrace trace_compression(GameTag game, const std::vector<SearchMode>& modes,
                                   int n_runs, const TournamentOptions& opts);

}  // namespace scsa
