#include "scsa/abstraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scsa {

int AbstractionPhi::create_group(int node, int depth, int stratum, long long n, double w) {
    const int id = static_cast<int>(groups_.size());
    AbstractNode g;
    g.id = id;
    g.depth = depth;
    g.stratum = stratum;
    g.members.push_back(node);
    g.visits = n;
    g.value = w;
    groups_.push_back(std::move(g));
    node_to_group_[node] = id;
    if (depth >= static_cast<int>(by_depth_.size())) by_depth_.resize(depth + 1);
    by_depth_[depth].push_back(id);
    ++live_groups_;
    return id;
}

void AbstractionPhi::join_group(int group, int node, long long n, double w) {
    AbstractNode& g = groups_.at(group);
    g.members.push_back(node);
    g.visits += n;
    g.value += w;
    node_to_group_[node] = group;
}

int AbstractionPhi::group_of(int node) const {
    auto it = node_to_group_.find(node);
    return it == node_to_group_.end() ? -1 : it->second;
}

const std::vector<int>& AbstractionPhi::groups_at_depth(int depth) const {
    static const std::vector<int> empty;
    if (depth < 0 || depth >= static_cast<int>(by_depth_.size())) return empty;
    return by_depth_[depth];
}

void AbstractionPhi::add_visit(int node, double w) {
    auto it = node_to_group_.find(node);
    if (it == node_to_group_.end()) return;
    AbstractNode& g = groups_[it->second];
    g.visits += 1;
    g.value += w;
}

void AbstractionPhi::clear() {
    groups_.clear();
    node_to_group_.clear();
    by_depth_.clear();
    live_groups_ = 0;
}

std::optional<double> epsilon_r(const GroundNode& a, const GroundNode& b) {
    double worst = -1.0;
    auto ia = a.edges.begin();
    auto ib = b.edges.begin();
    while (ia != a.edges.end() && ib != b.edges.end()) {
        if (ia->action < ib->action) {
            ++ia;
        } else if (ib->action < ia->action) {
            ++ib;
        } else {
            worst = std::max(worst, std::abs(ia->r_hat - ib->r_hat));
            ++ia;
            ++ib;
        }
    }
    if (worst < 0.0) return std::nullopt;
    return worst;
}

namespace {

// Identity of a successor under phi. Grouped successors share their group;
// ungrouped ones are singleton abstract states identified by the successor's
// state fingerprint (Eq. 2 ranges over states, so two ungrouped tree nodes
// holding the same state fall in the same singleton).
std::pair<int, std::uint64_t> successor_class(const EdgeStat& e, const AbstractionPhi& phi) {
    const int g = phi.group_of(e.succ_node);
    if (g >= 0) return {g, 0};
    return {-1, e.succ_state};
}

}  // namespace

std::optional<double> epsilon_t(const GroundNode& a, const GroundNode& b,
                                const AbstractionPhi& phi, bool abstract_form) {
    double worst = -1.0;
    auto ia = a.edges.begin();
    auto ib = b.edges.begin();
    while (ia != a.edges.end() && ib != b.edges.end()) {
        if (ia->action < ib->action) {
            ++ia;
        } else if (ib->action < ia->action) {
            ++ib;
        } else {
            // Deterministic transitions: both sides are point masses, so the
            // total variation over abstract successors is 0 when the classes
            // coincide and 2 otherwise.
            bool same;
            if (abstract_form) {
                same = successor_class(*ia, phi) == successor_class(*ib, phi);
            } else {
                same = ia->succ_state == ib->succ_state;  // ground-successor sum
            }
            worst = std::max(worst, same ? 0.0 : 2.0);
            ++ia;
            ++ib;
        }
    }
    if (worst < 0.0) return std::nullopt;
    return worst;
}

void construct_abstraction(
    const std::vector<std::vector<GroundNode>>& nodes_by_depth, int max_depth,
    const std::unordered_map<int, std::pair<long long, double>>& stats,
    const ConstructParams& params, AbstractionPhi& phi,
    std::vector<AdmissionRecord>* admissions) {
    const int top = std::min<int>(max_depth, static_cast<int>(nodes_by_depth.size()) - 1);
    for (int depth = top; depth >= 1; --depth) {
        std::unordered_map<int, const GroundNode*> by_id;
        by_id.reserve(nodes_by_depth[depth].size());
        for (const GroundNode& n : nodes_by_depth[depth]) by_id[n.id] = &n;

        for (const GroundNode& s1 : nodes_by_depth[depth]) {
            if (phi.grouped(s1.id)) continue;
            auto st = stats.find(s1.id);
            const long long n = st == stats.end() ? 0 : st->second.first;
            const double w = st == stats.end() ? 0.0 : st->second.second;

            bool joined = false;
            for (int gid : phi.groups_at_depth(depth)) {
                const AbstractNode& g = phi.group(gid);
                if (g.stratum != s1.stratum) continue;
                if (params.size_limit > 0) {
                    // Full groups reject candidates; the non-strict reading
                    // (paper's literal |g| > limit) admits one extra member.
                    const int cap = params.strict_cap ? params.size_limit : params.size_limit + 1;
                    if (static_cast<int>(g.members.size()) >= cap) continue;
                }
                bool all_pass = true;
                double worst_r = 0.0, worst_t = 0.0;
                for (int member : g.members) {
                    auto found = by_id.find(member);
                    const GroundNode* s2 = found == by_id.end() ? nullptr : found->second;
                    if (!s2) {
                        all_pass = false;
                        break;
                    }
                    const auto er = epsilon_r(s1, *s2);
                    const auto et = epsilon_t(s1, *s2, phi, params.abstract_form);
                    if (!er || !et || *er > params.eta_r || *et > params.eta_t) {
                        all_pass = false;
                        break;
                    }
                    worst_r = std::max(worst_r, *er);
                    worst_t = std::max(worst_t, *et);
                }
                if (all_pass) {
                    phi.join_group(gid, s1.id, n, w);
                    if (admissions) admissions->push_back({s1.id, gid, worst_r, worst_t});
                    joined = true;
                    break;
                }
            }
            if (!joined) phi.create_group(s1.id, depth, s1.stratum, n, w);
        }
    }
}

int rg_assign(int node, int depth, int stratum, long long n, double w,
              const std::vector<int>& candidate_groups, AbstractionPhi& phi, Rng& rng) {
    const std::uint64_t choices = candidate_groups.size() + 1;
    const std::uint64_t pick = rng.bounded(choices);
    if (pick < candidate_groups.size()) {
        const int gid = candidate_groups[pick];
        phi.join_group(gid, node, n, w);
        return gid;
    }
    return phi.create_group(node, depth, stratum, n, w);
}

double compression_rate(int ground_nodes_past_root, const AbstractionPhi& phi) {
    if (ground_nodes_past_root <= 0)
        throw std::invalid_argument("compression rate of an empty tree");
    long long grouped = 0;
    for (const auto& g : phi.all_groups()) grouped += static_cast<long long>(g.members.size());
    const long long ungrouped = ground_nodes_past_root - grouped;
    const long long denom = static_cast<long long>(phi.group_count()) + ungrouped;
    return static_cast<double>(ground_nodes_past_root) / static_cast<double>(denom);
}

}  // namespace scsa
