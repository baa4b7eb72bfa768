#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "scsa/abstraction.hpp"
#include "scsa/action.hpp"
#include "scsa/engine.hpp"
#include "scsa/rng.hpp"
#include "scsa/state.hpp"

namespace scsa {

enum class SearchMode { Plain, UnitOrdered, Rg, Elastic, Scsa };

const char* mode_name(SearchMode m);
SearchMode mode_from_name(const std::string& name);

struct SearchParams {
    SearchMode mode = SearchMode::Plain;
    std::uint64_t n_fm = 10000;  // forward-model call budget
    int batch = 20;              // B: iterations between abstraction passes
    double c = 0.1;              // UCB exploration factor
    int rollout_len = 10;        // K
    double eta_r = 0.05;
    double eta_t = 1.0;
    int size_limit = 2;          // SCSA only
    std::uint64_t alpha_es = 0;  // early-stop iteration threshold (elastic / rg)
    bool strict_cap = true;
    bool epsilon_t_abstract = true;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument on bad combinations
};

// Fixed random move order of the planning player's units, one per game.
struct UnitOrdering {
    std::vector<int> unit_ids;
};

UnitOrdering make_unit_ordering(const GameState& s, int player, Rng& rng);

struct TraceRow {
    std::uint64_t iteration = 0;
    int ground_nodes = 0;
    int abstract_nodes = 0;  // groups + ungrouped nodes at depths >= 1
    double rate = 1.0;
};

struct SearchStats {
    std::uint64_t iterations = 0;
    std::uint64_t fm_calls = 0;
    int tree_nodes = 0;
    int abstract_nodes = 0;
    double wall_time_ms = 0.0;
    std::int64_t split_iteration = -1;  // elastic/rg: iteration the split ran
    std::vector<TraceRow> trace;        // sampled at every abstraction pass
    std::vector<AdmissionRecord> admissions;
    int max_group_size = 0;             // largest group ever formed

    std::string csv_row() const;        // iterations,fm_calls,tree_nodes,abstract_nodes,wall_time_ms
    static std::string csv_header();
};

struct TreeNode {
    GameState state;
    int id = -1;
    int parent = -1;
    int incoming_edge = -1;
    int depth = 0;
    int acting_unit_index = 0;  // position in the move order of the unit this node commands
    int stratum = 0;
    bool terminal = false;
    double terminal_score = 0.5;  // unit-interval score when terminal
    std::uint64_t state_key = 0;

    struct Edge {
        UnitAction action;
        int child = -1;
    };
    std::vector<Edge> edges;
    int next_untried = 0;

    long long visits = 0;
    double value = 0.0;  // summed unit-interval scores, planner's perspective

    bool fully_expanded() const { return next_untried >= static_cast<int>(edges.size()); }
};

// One search over a fresh tree. Keeps the whole state of Algorithm 1:
// the tree arena, phi, the FM budget and the iteration counter.
class SearchContext {
public:
    SearchContext(const GameState& root, const SearchParams& params,
                  const UnitOrdering* ordering = nullptr);

    // Runs the budgeted loop and returns the recommended root action.
    UnitAction run();

    const SearchStats& stats() const { return stats_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const AbstractionPhi& phi() const { return phi_; }
    const SearchParams& params() const { return params_; }

    // Exposed for tests: one selection/expansion/rollout/backprop pass.
    // Returns (fm calls consumed, current max tree depth).
    std::pair<std::uint64_t, int> iterate();

    // Group-aware UCB pick among a fully expanded node's children.
    int select_child(int node_id) const;

    double rollout(const GameState& from);

    void construct_pass();
    void split();

    int recommend_edge() const;  // argmax ground visit count, ties -> lowest index

private:
    int make_node(GameState state, int parent, int edge_index);
    void record_trace();
    void backpropagate(const std::vector<int>& path, double score);
    std::vector<UnitAction> node_actions(const GameState& s, int* acting_index) const;
    double terminal_unit_score(const Outcome& o) const;

    SearchParams params_;
    const UnitOrdering* ordering_;
    int planner_;
    ForwardModel fm_;
    Rng rng_;
    std::vector<TreeNode> nodes_;
    AbstractionPhi phi_;
    std::uint64_t n_mcts_ = 0;
    int max_depth_ = 0;
    bool split_done_ = false;
    SearchStats stats_;
};

// Convenience wrapper: build a context, run it, surface the stats.
UnitAction run_search(const GameState& root, const SearchParams& params,
                      const UnitOrdering* ordering = nullptr, SearchStats* stats = nullptr);

}  // namespace scsa
