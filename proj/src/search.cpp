#include "scsa/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "scsa/config.hpp"
#include "scsa/games.hpp"

namespace scsa {

const char* mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::Plain: return "mcts";
        case SearchMode::UnitOrdered: return "mctsu";
        case SearchMode::Rg: return "rg";
        case SearchMode::Elastic: return "elastic";
        case SearchMode::Scsa: return "scsa";
    }
    return "?";
}

SearchMode mode_from_name(const std::string& name) {
    if (name == "mcts" || name == "plain") return SearchMode::Plain;
    if (name == "mctsu" || name == "unit-ordered") return SearchMode::UnitOrdered;
    if (name == "rg") return SearchMode::Rg;
    if (name == "elastic") return SearchMode::Elastic;
    if (name == "scsa") return SearchMode::Scsa;
    throw std::invalid_argument("unknown search mode: " + name);
}

void SearchParams::validate() const {
    if (n_fm == 0) throw std::invalid_argument("n_fm must be positive");
    if (batch < 1) throw std::invalid_argument("batch must be >= 1");
    if (rollout_len < 1) throw std::invalid_argument("rollout_len must be >= 1");
    if (mode == SearchMode::Scsa && size_limit < 1)
        throw std::invalid_argument("scsa requires size_limit >= 1");
    const bool wants_alpha = mode == SearchMode::Elastic || mode == SearchMode::Rg;
    if (wants_alpha && alpha_es == 0)
        throw std::invalid_argument("elastic/rg require alpha_es > 0");
    if (!wants_alpha && alpha_es != 0)
        throw std::invalid_argument("alpha_es is only meaningful for elastic/rg");
}

UnitOrdering make_unit_ordering(const GameState& s, int player, Rng& rng) {
    UnitOrdering ord;
    for (const auto& u : s.units)
        if (u.owner == player) ord.unit_ids.push_back(u.id);
    if (ord.unit_ids.empty()) throw std::invalid_argument("player has no units to order");
    rng.shuffle(ord.unit_ids);
    return ord;
}

std::string SearchStats::csv_header() {
    return "iterations,fm_calls,tree_nodes,abstract_nodes,wall_time_ms";
}

std::string SearchStats::csv_row() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%llu,%llu,%d,%d,%.3f",
                  static_cast<unsigned long long>(iterations),
                  static_cast<unsigned long long>(fm_calls), tree_nodes, abstract_nodes,
                  wall_time_ms);
    return buf;
}

namespace {
int pack_stratum(int to_move, int acting_index) { return to_move * 4096 + acting_index; }
}  // namespace

SearchContext::SearchContext(const GameState& root, const SearchParams& params,
                             const UnitOrdering* ordering)
    : params_(params), ordering_(ordering), planner_(root.to_move), rng_(params.seed) {
    params_.validate();
    if (terminal_outcome(root).terminal())
        throw std::invalid_argument("cannot search from a terminal state");
    nodes_.reserve(1024);
    make_node(root, -1, -1);
}

double SearchContext::terminal_unit_score(const Outcome& o) const {
    // Internal unit scale: win 1, draw 0.5, loss 0.
    const int raw = o.score_for(planner_);
    return (raw + 1) * 0.5;
}

std::vector<UnitAction> SearchContext::node_actions(const GameState& s, int* acting_index) const {
    *acting_index = 0;
    if (params_.mode == SearchMode::Plain) return legal_actions(s, kAnyActor);

    // Unit-ordered tree: one unit per node. The planner follows its fixed
    // random ordering; the opponent (and any unit spawned after the ordering
    // was drawn) acts in ascending-id order.
    std::vector<int> sequence;
    if (s.to_move == planner_ && ordering_) {
        sequence = ordering_->unit_ids;
    }
    std::vector<int> rest;
    for (const auto& u : s.units)
        if (u.owner == s.to_move &&
            std::find(sequence.begin(), sequence.end(), u.id) == sequence.end())
            rest.push_back(u.id);
    std::sort(rest.begin(), rest.end());
    sequence.insert(sequence.end(), rest.begin(), rest.end());

    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const Unit* u = s.find_unit(sequence[i]);
        if (u && !u->acted && u->owner == s.to_move) {
            *acting_index = static_cast<int>(i);
            return legal_actions(s, u->id);
        }
    }
    // Unreachable for non-terminal states: the engine auto-ends exhausted turns.
    return {UnitAction::end_turn()};
}

int SearchContext::make_node(GameState state, int parent, int edge_index) {
    const int id = static_cast<int>(nodes_.size());
    TreeNode node;
    node.id = id;
    node.parent = parent;
    node.incoming_edge = edge_index;
    node.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
    node.state_key = state.fingerprint();
    const Outcome out = terminal_outcome(state);
    node.terminal = out.terminal();
    node.terminal_score = terminal_unit_score(out);
    if (!node.terminal) {
        const auto actions = node_actions(state, &node.acting_unit_index);
        node.edges.reserve(actions.size());
        for (const auto& a : actions) node.edges.push_back({a, -1});
    }
    node.stratum = pack_stratum(state.to_move, node.acting_unit_index);
    node.state = std::move(state);
    max_depth_ = std::max(max_depth_, node.depth);
    nodes_.push_back(std::move(node));
    return id;
}

int SearchContext::select_child(int node_id) const {
    const TreeNode& node = nodes_[node_id];
    if (node.edges.empty()) throw std::logic_error("select on a node without children");
    const bool planner_turn = node.state.to_move == planner_;

    const int own_group = phi_.group_of(node_id);
    const long long parent_n =
        own_group >= 0 ? phi_.group(own_group).visits : node.visits;
    const double log_parent = std::log(std::max<long long>(parent_n, 1));

    int best = -1;
    double best_ucb = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
        const int child_id = node.edges[i].child;
        if (child_id < 0) throw std::logic_error("select on a partially expanded node");
        const TreeNode& child = nodes_[child_id];
        const int g = phi_.group_of(child_id);
        const long long n_hat = g >= 0 ? phi_.group(g).visits : child.visits;
        double ucb;
        if (n_hat <= 0) {
            ucb = std::numeric_limits<double>::infinity();
        } else {
            const double w_hat = g >= 0 ? phi_.group(g).value : child.value;
            const double q = w_hat / static_cast<double>(n_hat);
            const double q_eff = planner_turn ? q : 1.0 - q;
            ucb = q_eff + params_.c * std::sqrt(log_parent / static_cast<double>(n_hat));
        }
        if (ucb > best_ucb) {
            best_ucb = ucb;
            best = static_cast<int>(i);
        }
    }
    return best;
}

double SearchContext::rollout(const GameState& from) {
    Outcome out = terminal_outcome(from);
    if (out.terminal()) return terminal_unit_score(out);
    GameState s = from;
    for (int k = 0; k < params_.rollout_len; ++k) {
        const auto actions = legal_actions(s, kAnyActor);
        s = fm_.step(s, actions[rng_.bounded(actions.size())]);
        out = terminal_outcome(s);
        if (out.terminal()) return terminal_unit_score(out);
    }
    return heuristic(s, planner_);
}

void SearchContext::backpropagate(const std::vector<int>& path, double score) {
    for (int id : path) {
        nodes_[id].visits += 1;
        nodes_[id].value += score;
        phi_.add_visit(id, score);
    }
}

std::pair<std::uint64_t, int> SearchContext::iterate() {
    const std::uint64_t fm_before = fm_.calls;
    std::vector<int> path{0};
    int cur = 0;
    while (!nodes_[cur].terminal && nodes_[cur].fully_expanded()) {
        cur = nodes_[cur].edges[select_child(cur)].child;
        path.push_back(cur);
    }

    double score;
    if (nodes_[cur].terminal) {
        score = nodes_[cur].terminal_score;
    } else {
        int edge;
        UnitAction action;
        {
            TreeNode& nd = nodes_[cur];
            edge = nd.next_untried++;
            action = nd.edges[edge].action;
        }
        GameState child_state = fm_.step(nodes_[cur].state, action);
        const int child = make_node(std::move(child_state), cur, edge);
        nodes_[cur].edges[edge].child = child;
        path.push_back(child);

        if (params_.mode == SearchMode::Rg && !split_done_ && !nodes_[child].terminal) {
            // Randomised grouping happens at node creation, not in batches.
            std::vector<int> candidates;
            for (int gid : phi_.groups_at_depth(nodes_[child].depth))
                if (phi_.group(gid).stratum == nodes_[child].stratum) candidates.push_back(gid);
            const int gid = rg_assign(child, nodes_[child].depth, nodes_[child].stratum, 0, 0.0,
                                      candidates, phi_, rng_);
            stats_.max_group_size = std::max(
                stats_.max_group_size, static_cast<int>(phi_.group(gid).members.size()));
        }

        score = nodes_[child].terminal ? nodes_[child].terminal_score
                                       : rollout(nodes_[child].state);
    }
    backpropagate(path, score);
    return {fm_.calls - fm_before, max_depth_};
}

void SearchContext::construct_pass() {
    std::vector<std::vector<GroundNode>> by_depth(max_depth_ + 1);
    std::unordered_map<int, std::pair<long long, double>> stats;
    stats.reserve(nodes_.size());
    for (const TreeNode& node : nodes_) {
        if (node.depth == 0) continue;
        GroundNode g;
        g.id = node.id;
        g.depth = node.depth;
        g.stratum = node.stratum;
        for (const auto& e : node.edges) {
            if (e.child < 0) continue;
            const TreeNode& child = nodes_[e.child];
            if (child.visits < 1) continue;
            EdgeStat es;
            es.action = e.action.key();
            es.r_hat = child.value / static_cast<double>(child.visits);
            es.succ_node = child.id;
            es.succ_state = child.state_key;
            g.edges.push_back(es);
        }
        std::sort(g.edges.begin(), g.edges.end(),
                  [](const EdgeStat& a, const EdgeStat& b) { return a.action < b.action; });
        stats[node.id] = {node.visits, node.value};
        by_depth[node.depth].push_back(std::move(g));
    }

    ConstructParams cp;
    cp.eta_r = params_.eta_r;
    cp.eta_t = params_.eta_t;
    cp.size_limit = params_.mode == SearchMode::Scsa ? params_.size_limit : 0;
    cp.strict_cap = params_.strict_cap;
    cp.abstract_form = params_.epsilon_t_abstract;
    construct_abstraction(by_depth, max_depth_, stats, cp, phi_, &stats_.admissions);

    for (const auto& g : phi_.all_groups())
        stats_.max_group_size =
            std::max(stats_.max_group_size, static_cast<int>(g.members.size()));
}

void SearchContext::record_trace() {
    const int ground = static_cast<int>(nodes_.size()) - 1;
    if (ground <= 0) return;
    long long grouped = 0;
    for (const auto& g : phi_.all_groups()) grouped += static_cast<long long>(g.members.size());
    const int denom = static_cast<int>(phi_.group_count()) + (ground - static_cast<int>(grouped));
    stats_.trace.push_back(
        {n_mcts_, ground, denom, static_cast<double>(ground) / static_cast<double>(denom)});
}

void SearchContext::split() {
    phi_.clear();
    split_done_ = true;
    stats_.split_iteration = static_cast<std::int64_t>(n_mcts_);
}

int SearchContext::recommend_edge() const {
    const TreeNode& root = nodes_[0];
    int best = -1;
    long long best_visits = -1;
    for (std::size_t i = 0; i < root.edges.size(); ++i) {
        const int child = root.edges[i].child;
        if (child < 0) continue;
        const long long v = nodes_[child].visits;  // ground count, not the group aggregate
        if (v > best_visits) {
            best_visits = v;
            best = static_cast<int>(i);
        }
    }
    if (best < 0) throw std::logic_error("recommendation requires at least one expanded child");
    return best;
}

UnitAction SearchContext::run() {
    const auto t0 = std::chrono::steady_clock::now();
    const bool batched = params_.mode == SearchMode::Elastic || params_.mode == SearchMode::Scsa;
    const bool splits = params_.mode == SearchMode::Elastic || params_.mode == SearchMode::Rg;
    const bool abstracted = batched || params_.mode == SearchMode::Rg;
    // Hard iteration cap: once the tree is solved to terminals an iteration
    // costs zero forward-model calls and the budget alone would never bind.
    const std::uint64_t iteration_cap = std::max<std::uint64_t>(params_.n_fm, 1);

    while (fm_.calls < params_.n_fm && n_mcts_ < iteration_cap) {
        iterate();
        if (splits && !split_done_ && n_mcts_ > params_.alpha_es) {
            split();
            stats_.trace.push_back({n_mcts_, static_cast<int>(nodes_.size()) - 1,
                                    static_cast<int>(nodes_.size()) - 1, 1.0});
        } else if (batched && !split_done_ && n_mcts_ % params_.batch == 0) {
            construct_pass();
            record_trace();
        } else if (params_.mode == SearchMode::Rg && !split_done_ &&
                   n_mcts_ % params_.batch == 0) {
            record_trace();
        }
        ++n_mcts_;
    }

    stats_.iterations = n_mcts_;
    stats_.fm_calls = fm_.calls;
    stats_.tree_nodes = static_cast<int>(nodes_.size());
    const int ground = static_cast<int>(nodes_.size()) - 1;
    if (abstracted && ground > 0) {
        long long grouped = 0;
        for (const auto& g : phi_.all_groups()) grouped += g.members.size();
        stats_.abstract_nodes = static_cast<int>(phi_.group_count() + (ground - grouped));
    } else {
        stats_.abstract_nodes = ground;
    }
    const auto t1 = std::chrono::steady_clock::now();
    stats_.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return nodes_[0].edges[recommend_edge()].action;
}

UnitAction run_search(const GameState& root, const SearchParams& params,
                      const UnitOrdering* ordering, SearchStats* stats) {
    SearchContext ctx(root, params, ordering);
    const UnitAction action = ctx.run();
    if (stats) *stats = ctx.stats();
    return action;
}

}  // namespace scsa
