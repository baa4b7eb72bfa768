#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scsa/rng.hpp"

namespace scsa {

using ActionKey = std::pair<std::uint64_t, std::uint64_t>;

// Sampled statistics of one tree edge (s, a).
struct EdgeStat {
    ActionKey action;
    double r_hat = 0.0;            // mean backed-up return through the edge
    int succ_node = -1;            // successor tree node id
    std::uint64_t succ_state = 0;  // successor state fingerprint
};

// What the abstraction needs to know about a ground tree node. `stratum`
// packs (player to move, acting-unit index); nodes only ever group within
// one (depth, stratum) class.
struct GroundNode {
    int id = -1;
    int depth = 0;
    int stratum = 0;
    std::vector<EdgeStat> edges;  // sorted by action key
};

struct AbstractNode {
    int id = -1;
    int depth = 0;
    int stratum = 0;
    std::vector<int> members;
    long long visits = 0;  // aggregate N, always the sum over members
    double value = 0.0;    // aggregate W
};

// Recorded at admission time for the soundness audit: the worst pairwise
// errors between the joining node and the group's members.
struct AdmissionRecord {
    int node = -1;
    int group = -1;
    double eps_r = 0.0;
    double eps_t = 0.0;
};

// The mapping phi from ground nodes to abstract nodes, maintained per depth.
class AbstractionPhi {
public:
    // Creates a singleton group and returns its id.
    int create_group(int node, int depth, int stratum, long long n, double w);
    // Adds a node to an existing group; aggregates grow by the node's stats.
    void join_group(int group, int node, long long n, double w);

    int group_of(int node) const;  // -1 if ungrouped
    bool grouped(int node) const { return group_of(node) >= 0; }
    const AbstractNode& group(int id) const { return groups_[id]; }
    std::size_t group_count() const { return live_groups_; }

    const std::vector<int>& groups_at_depth(int depth) const;

    // Routes one backpropagation increment to the node's group, if any.
    void add_visit(int node, double w);

    // The elastic split: every node becomes ungrouped; ground stats untouched.
    void clear();

    bool identity() const { return live_groups_ == 0; }

    // Iteration support for audits and compression accounting.
    const std::vector<AbstractNode>& all_groups() const { return groups_; }

private:
    std::vector<AbstractNode> groups_;
    std::unordered_map<int, int> node_to_group_;
    std::vector<std::vector<int>> by_depth_;
    std::size_t live_groups_ = 0;
};

// Reward-error epsilon_R between two nodes: max |R(s1,a) - R(s2,a)| over the
// common sampled-action support. Empty intersection -> nullopt (incomparable;
// treated as exceeding any threshold).
std::optional<double> epsilon_r(const GroundNode& a, const GroundNode& b);

// Transition-error epsilon_T: worst-case total variation between the
// successor distributions aggregated over abstract states. Successors are
// point masses here; two successors fall in the same abstract state when
// they share a group, or when both are ungrouped and carry the same state
// fingerprint. `abstract_form` false switches to the ground-successor sum.
std::optional<double> epsilon_t(const GroundNode& a, const GroundNode& b,
                                const AbstractionPhi& phi, bool abstract_form = true);

struct ConstructParams {
    double eta_r = 0.0;
    double eta_t = 0.0;
    int size_limit = 0;      // 0 = unlimited (elastic mode)
    bool strict_cap = true;  // full groups reject members (|g| >= limit skips)
    bool abstract_form = true;
};

// One bottom-up construction pass (depths L..1). Ungrouped nodes join the
// first same-depth group where every member passes both error thresholds;
// otherwise they seed a singleton. `stats` maps node id -> (visits, value)
// so aggregates stay equal to member sums.
void construct_abstraction(
    const std::vector<std::vector<GroundNode>>& nodes_by_depth, int max_depth,
    const std::unordered_map<int, std::pair<long long, double>>& stats,
    const ConstructParams& params, AbstractionPhi& phi,
    std::vector<AdmissionRecord>* admissions = nullptr);

// Randomised-grouping baseline: joins each of the N candidate groups with
// probability 1/(N+1), else creates a new singleton. Returns the group id.
int rg_assign(int node, int depth, int stratum, long long n, double w,
              const std::vector<int>& candidate_groups, AbstractionPhi& phi, Rng& rng);

// Ground nodes at depths >= 1 divided by (groups + ungrouped nodes) there.
double compression_rate(int ground_nodes_past_root, const AbstractionPhi& phi);

}  // namespace scsa
