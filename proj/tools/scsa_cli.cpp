#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scsa/engine.hpp"
#include "scsa/tournament.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

scsa::AgentSpec build_agent(scsa::GameTag game, const std::string& name,
                            const std::string& params_file, std::uint64_t budget) {
    scsa::AgentSpec spec = scsa::AgentSpec::make(game, name);
    if (!params_file.empty() && spec.kind != scsa::AgentKind::Rule)
        scsa::apply_param_overrides(read_file(params_file), game, spec.kind, &spec.params);
    if (budget > 0) spec.params.n_fm = budget;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Size-constrained state abstraction for MCTS on grid strategy games"};
    app.require_subcommand(1);

    std::string game_name = "ktk";
    std::string config_dir;
    std::string params_file;
    std::uint64_t budget = 0;  // 0: per-game default
    int threads = 0;

    app.add_option("--config-dir", config_dir, "directory with ktk.cfg / pta.cfg / tk.cfg");
    app.add_option("--params", params_file, "JSON file with agent parameter overrides");
    app.add_option("--budget", budget, "forward-model call budget per move (0 = game default)");
    app.add_option("--threads", threads, "parallel matches (0 = SCSA_THREADS or cores)");

    // play
    auto* play = app.add_subcommand("play", "run one match and print the result");
    std::string agent_a = "scsa", agent_b = "rule";
    std::uint64_t seed = 7;
    std::int64_t position = -1;
    bool show_moves = false;
    play->add_option("--game", game_name, "ktk | pta | tk");
    play->add_option("--a", agent_a, "player 0 agent");
    play->add_option("--b", agent_b, "player 1 agent");
    play->add_option("--seed", seed, "match seed");
    play->add_option("--pos", position, "initial-position seed (-1 = canonical layout)");
    play->add_flag("--moves", show_moves, "print per-move search statistics");

    // tournament
    auto* tour = app.add_subcommand("tournament", "pairwise round-robin with side switching");
    std::string agents_csv = "mcts,mctsu,rg,elastic,scsa,rule";
    int positions = 50, seeds_per_eval = 5;
    std::string out_path;
    tour->add_option("--game", game_name);
    tour->add_option("--agents", agents_csv, "comma-separated agent list");
    tour->add_option("--positions", positions, "seeded initial positions per pairing");
    tour->add_option("--seeds", seeds_per_eval, "match seeds per (position, side)");
    tour->add_option("--out", out_path, "CSV output path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "SIZE_LIMIT sweep of SCSA vs the rule-based agent");
    std::string limits_csv = "2,3,4,5";
    int sweep_games = 100;
    sweep->add_option("--game", game_name);
    sweep->add_option("--limits", limits_csv, "comma-separated size limits");
    sweep->add_option("--games", sweep_games, "games per value");
    sweep->add_option("--out", out_path, "CSV output path");

    // trace
    auto* trace = app.add_subcommand("trace", "compression-rate traces over MCTS iterations");
    std::string modes_csv = "elastic,scsa";
    int runs = 10;
    std::string summary_path;
    trace->add_option("--game", game_name);
    trace->add_option("--modes", modes_csv, "comma-separated modes (elastic, scsa, rg)");
    trace->add_option("--runs", runs, "searches per mode");
    trace->add_option("--out", out_path, "raw trace CSV path");
    trace->add_option("--summary", summary_path, "aggregated mean/stderr CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        const scsa::GameTag game = scsa::game_from_name(game_name);
        scsa::TournamentOptions opts;
        opts.config_dir = config_dir;
        opts.threads = threads;
        opts.verbose = true;

        if (play->parsed()) {
            scsa::MatchSpec spec;
            spec.game = game;
            spec.agent_a = build_agent(game, agent_a, params_file, budget);
            spec.agent_b = build_agent(game, agent_b, params_file, budget);
            spec.position_seed = position;
            spec.match_seed = seed;
            spec.config_dir = config_dir;
            const scsa::MatchResult r = scsa::run_match(spec, show_moves);
            std::cout << "winner: " << scsa::MatchResult::winner_name(r.winner)
                      << "  rounds: " << r.rounds << "  fm_calls: " << r.total_fm_calls << "\n";
            if (!r.error.empty()) std::cout << "error: " << r.error << "\n";
            if (show_moves) {
                std::cout << scsa::SearchStats::csv_header() << ",player\n";
                for (const auto& m : r.moves)
                    std::cout << m.iterations << "," << m.fm_calls << "," << m.tree_nodes << ","
                              << m.abstract_nodes << "," << m.wall_time_ms << "," << m.player
                              << "\n";
            }
        } else if (tour->parsed()) {
            opts.positions = positions;
            opts.seeds_per_eval = seeds_per_eval;
            std::vector<scsa::AgentSpec> specs;
            std::vector<std::string> names = split_list(agents_csv);
            for (const auto& n : names) specs.push_back(build_agent(game, n, params_file, budget));
            const scsa::TournamentTable table = scsa::run_tournament(game, specs, names, opts);
            const scsa::CsvTable csv = table.to_csv();
            if (!out_path.empty()) {
                scsa::emit_csv(csv, out_path);
                std::cout << "wrote " << out_path << "\n";
            } else {
                std::cout << scsa::to_csv(csv);
            }
        } else if (sweep->parsed()) {
            std::vector<int> limits;
            for (const auto& s : split_list(limits_csv)) limits.push_back(std::stoi(s));
            const auto rows = scsa::sweep_size_limit(game, limits, sweep_games, opts);
            const scsa::CsvTable csv = scsa::sweep_to_csv(rows);
            if (!out_path.empty()) {
                scsa::emit_csv(csv, out_path);
                std::cout << "wrote " << out_path << "\n";
            } else {
                std::cout << scsa::to_csv(csv);
            }
        } else if (trace->parsed()) {
            std::vector<scsa::SearchMode> modes;
            for (const auto& m : split_list(modes_csv)) modes.push_back(scsa::mode_from_name(m));
            const scsa::CompressionTrace result = scsa::trace_compression(game, modes, runs, opts);
            if (!result.split_iterations.empty()) {
                std::cout << "elastic split iterations:";
                for (auto s : result.split_iterations) std::cout << " " << s;
                std::cout << "\n";
            }
            if (!out_path.empty()) {
                scsa::emit_csv(result.to_csv(), out_path);
                std::cout << "wrote " << out_path << "\n";
            } else {
                std::cout << scsa::to_csv(result.to_csv());
            }
            if (!summary_path.empty()) {
                scsa::emit_csv(result.summary_csv(), summary_path);
                std::cout << "wrote " << summary_path << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
